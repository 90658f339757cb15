//! The `check`, `extend`, `regions`, and `grid` commands.
//!
//! Each command returns its report and exit code instead of printing, so the
//! binary and the tests share one code path.

use std::fmt::Write as _;
use std::io;

use monoext::contours::{ContourOracle, ElementOf, FiniteSampleOracle, PartialUtility};
use monoext::extension::ExtensionEngine;
use monoext::fixtures::{example_gap, example_nin};
use monoext::monotonicity::{
    check_gap_safe_finite, check_gap_safe_oracle, check_gap_safe_pareto, check_strictly_increasing,
    check_weakly_increasing, Verdict, Witness,
};
use monoext::order::{Augmented, ParetoSpace};
use monoext::utility::{finite_utility, pareto_base_utility, weighted_sum_utility, UtilityFn};
use monoext::verify::grid_points;

use crate::error::{CliError, CliResult, EXIT_GAP_SAFE, EXIT_NOT_EXTENDABLE};
use crate::problem::{BaseUtility, FixtureName, Instance, Problem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub code: u8,
}

pub const GRID_HEADER: [&str; 5] = ["x1", "x2", "f", "alun", "s_labels"];

pub fn format_number(v: f64) -> String {
    format!("{v}")
}

pub fn format_point(p: &[f64]) -> String {
    match p {
        [x] => format_number(*x),
        _ => {
            let parts: Vec<String> = p.iter().map(|&x| format_number(x)).collect();
            format!("({})", parts.join(", "))
        }
    }
}

fn format_augmented<E>(x: &Augmented<E>, el: &dyn Fn(&E) -> String) -> String {
    match x {
        Augmented::Bottom => "Bottom".into(),
        Augmented::Top => "Top".into(),
        Augmented::Interior(e) => el(e),
    }
}

/// Human-readable witness with every number needed to re-check it by hand.
pub fn format_witness<E>(w: &Witness<E>, el: &dyn Fn(&E) -> String) -> String {
    match w {
        Witness::Gap {
            x,
            x_prime,
            a_x,
            b_x_prime,
        } => {
            let (x, xp) = (format_augmented(x, el), format_augmented(x_prime, el));
            if a_x == b_x_prime {
                format!("x={x}, x'={xp}, a({x})=b({xp})={a_x}")
            } else {
                format!("x={x}, x'={xp}, a({x})={a_x}, b({xp})={b_x_prime}")
            }
        }
        Witness::NotIsotone { p, q, f_p, f_q } => {
            let (p, q) = (el(p), el(q));
            format!("{q} >= {p} but f({q})={f_q} < f({p})={f_p}")
        }
        Witness::UnequalOnEquivalent { p, q, f_p, f_q } => {
            let (p, q) = (el(p), el(q));
            format!("{q} ~ {p} but f({q})={f_q} != f({p})={f_p}")
        }
        Witness::NotStrictlyGreater { p, q, f_p, f_q } => {
            let (p, q) = (el(p), el(q));
            format!("{q} > {p} but f({q})={f_q} <= f({p})={f_p}")
        }
        Witness::BoundInversion {
            criterion,
            x,
            x_prime,
            lower,
            upper,
        } => format!(
            "criterion ({}) fails at x={}, x'={}: {upper} < {lower}",
            criterion.label(),
            el(x),
            el(x_prime)
        ),
    }
}

fn verdict_line<E>(out: &mut String, label: &str, v: &Verdict<E>, el: &dyn Fn(&E) -> String) {
    match v.witness() {
        None => writeln!(out, "{label}: yes").unwrap(),
        Some(w) => writeln!(out, "{label}: no\n  witness: {}", format_witness(w, el)).unwrap(),
    }
}

/// Verdict report and whether the instance is gap-safe.
struct Diagnosis {
    report: String,
    gap_safe: bool,
    witness: Option<String>,
}

fn diagnose_sample<R>(
    rel: &R,
    sample: &PartialUtility<R::Element>,
    gap: Verdict<R::Element>,
    el: &dyn Fn(&R::Element) -> String,
) -> Diagnosis
where
    R: monoext::order::Preorder,
{
    let mut report = String::new();
    verdict_line(
        &mut report,
        "weakly increasing",
        &check_weakly_increasing(rel, sample),
        el,
    );
    verdict_line(
        &mut report,
        "strictly increasing",
        &check_strictly_increasing(rel, sample),
        el,
    );
    verdict_line(&mut report, "gap-safe", &gap, el);
    Diagnosis {
        report,
        gap_safe: gap.holds(),
        witness: gap.witness().map(|w| format_witness(w, el)),
    }
}

fn diagnose_fixture<O: ContourOracle>(
    oracle: &O,
    probes: &[monoext::contours::Probe<ElementOf<O>>],
    el: &dyn Fn(&ElementOf<O>) -> String,
) -> CliResult<Diagnosis> {
    let gap = check_gap_safe_oracle(oracle, probes)?;
    let mut report = String::new();
    writeln!(report, "weakly increasing: n/a (infinite sample set)").unwrap();
    writeln!(report, "strictly increasing: n/a (infinite sample set)").unwrap();
    match gap.witness() {
        Some(w) => writeln!(report, "gap-safe: no\n  witness: {}", format_witness(w, el)).unwrap(),
        None => writeln!(
            report,
            "gap-safe: no violation among {} probe pairs (not a proof)",
            probes.len()
        )
        .unwrap(),
    }
    Ok(Diagnosis {
        report,
        gap_safe: gap.holds(),
        witness: gap.witness().map(|w| format_witness(w, el)),
    })
}

fn diagnose(problem: &Problem) -> CliResult<Diagnosis> {
    match &problem.instance {
        Instance::Finite { names, rel, sample } => {
            let el = |i: &usize| names[*i].clone();
            Ok(diagnose_sample(
                rel,
                sample,
                check_gap_safe_finite(rel, sample),
                &el,
            ))
        }
        Instance::Pareto { space, sample } => {
            let el = |p: &Vec<f64>| format_point(p);
            Ok(diagnose_sample(
                space,
                sample,
                check_gap_safe_pareto(space, sample),
                &el,
            ))
        }
        Instance::Fixture(FixtureName::Gap) => {
            let fx = example_gap()?;
            diagnose_fixture(&fx, fx.probes(), &|p: &Vec<f64>| format_point(p))
        }
        Instance::Fixture(FixtureName::Nin) => {
            let fx = example_nin()?;
            diagnose_fixture(&fx, fx.probes(), &|x: &i64| x.to_string())
        }
    }
}

/// `check`: exit 0 iff gap-safe.
pub fn check(problem: &Problem) -> CliResult<Outcome> {
    let d = diagnose(problem)?;
    let mut report = format!("problem: {}\n", problem.describe());
    report.push_str(&d.report);
    report.push_str(if d.gap_safe {
        "result: a strictly increasing extension exists\n"
    } else {
        "result: no strictly increasing extension exists\n"
    });
    Ok(Outcome {
        report,
        code: if d.gap_safe {
            EXIT_GAP_SAFE
        } else {
            EXIT_NOT_EXTENDABLE
        },
    })
}

type QueryParser<'a, E> = Box<dyn Fn(&str) -> Result<E, String> + 'a>;

/// Per-instance element formatting, query parsing, and default queries.
struct Context<'a, E> {
    format: Box<dyn Fn(&E) -> String + 'a>,
    parse: QueryParser<'a, E>,
    defaults: Vec<E>,
}

trait EngineTask {
    type Output;

    fn run<O>(
        self,
        engine: &ExtensionEngine<O>,
        ctx: &Context<'_, ElementOf<O>>,
    ) -> CliResult<Self::Output>
    where
        O: ContourOracle,
        ElementOf<O>: 'static;
}

fn parse_coordinates(text: &str, dim: usize) -> Result<Vec<f64>, String> {
    let coords = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.trim_matches(|c| c == '(' || c == ')')
                .parse::<f64>()
                .map_err(|e| format!("{s:?}: {e}"))
        })
        .collect::<Result<Vec<f64>, String>>()?;
    if coords.len() != dim {
        return Err(format!("expected {dim} coordinates, got {}", coords.len()));
    }
    if let Some(c) = coords.iter().find(|c| !c.is_finite()) {
        return Err(format!("coordinate {c} is not finite"));
    }
    Ok(coords)
}

fn pareto_base(space: &ParetoSpace, base: Option<&BaseUtility>) -> CliResult<UtilityFn<Vec<f64>>> {
    match base {
        Some(BaseUtility::Weighted(w)) => Ok(weighted_sum_utility(space, w.clone())?),
        _ => Ok(pareto_base_utility(space)),
    }
}

/// Strictly increasing on the apex order: the apex above, the antichain level.
fn apex_utility() -> UtilityFn<i64> {
    UtilityFn::base(|&x: &i64| if x == 0 { 1.0 } else { 0.0 })
}

fn dispatch<T: EngineTask>(problem: &Problem, task: T) -> CliResult<T::Output> {
    let (alpha, beta) = (problem.alpha, problem.beta);
    match &problem.instance {
        Instance::Finite { names, rel, sample } => {
            let engine = ExtensionEngine::new(
                FiniteSampleOracle::new(rel, sample.clone()),
                &finite_utility(rel),
                alpha,
                beta,
            )?;
            let ctx = Context {
                format: Box::new(|i: &usize| names[*i].clone()),
                parse: Box::new(|s: &str| {
                    names
                        .iter()
                        .position(|n| n == s)
                        .ok_or_else(|| format!("unknown element {s:?}"))
                }),
                defaults: (0..names.len()).collect(),
            };
            task.run(&engine, &ctx)
        }
        Instance::Pareto { space, sample } => {
            let base = pareto_base(space, problem.base.as_ref())?;
            let engine = ExtensionEngine::new(
                FiniteSampleOracle::new(*space, sample.clone()),
                &base,
                alpha,
                beta,
            )?;
            let dim = space.dim();
            let ctx = Context {
                format: Box::new(|p: &Vec<f64>| format_point(p)),
                parse: Box::new(move |s: &str| parse_coordinates(s, dim)),
                defaults: sample.elements(),
            };
            task.run(&engine, &ctx)
        }
        Instance::Fixture(FixtureName::Gap) => {
            let space = ParetoSpace::new(1)?;
            let engine =
                ExtensionEngine::new(example_gap()?, &pareto_base_utility(&space), alpha, beta)?;
            let ctx = Context {
                format: Box::new(|p: &Vec<f64>| format_point(p)),
                parse: Box::new(|s: &str| parse_coordinates(s, 1)),
                defaults: [-1.0, 0.0, 0.5, 1.0, 2.0]
                    .iter()
                    .map(|&x| vec![x])
                    .collect(),
            };
            task.run(&engine, &ctx)
        }
        Instance::Fixture(FixtureName::Nin) => {
            let engine = ExtensionEngine::new(example_nin()?, &apex_utility(), alpha, beta)?;
            let ctx = Context {
                format: Box::new(|x: &i64| x.to_string()),
                parse: Box::new(|s: &str| match s.parse::<i64>() {
                    Ok(x) if x <= 0 => Ok(x),
                    Ok(x) => Err(format!("{x} is not in the ground set {{0, -1, -2, ...}}")),
                    Err(e) => Err(format!("{s:?}: {e}")),
                }),
                defaults: vec![0, -1, -2, -3],
            };
            task.run(&engine, &ctx)
        }
    }
}

/// Non-empty, non-comment lines of a query list.
pub fn parse_query_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect()
}

fn resolve_queries<E: Clone>(ctx: &Context<'_, E>, queries: &[String]) -> CliResult<Vec<E>> {
    if queries.is_empty() {
        return Ok(ctx.defaults.clone());
    }
    queries
        .iter()
        .enumerate()
        .map(|(k, q)| {
            (ctx.parse)(q).map_err(|m| CliError::invalid("queries", format!("query {}", k + 1), m))
        })
        .collect()
}

/// Left-aligned plain-text table.
pub fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

struct ExtendTask<'q> {
    queries: &'q [String],
}

impl EngineTask for ExtendTask<'_> {
    type Output = Vec<Vec<String>>;

    fn run<O>(
        self,
        engine: &ExtensionEngine<O>,
        ctx: &Context<'_, ElementOf<O>>,
    ) -> CliResult<Self::Output>
    where
        O: ContourOracle,
        ElementOf<O>: 'static,
    {
        resolve_queries(ctx, self.queries)?
            .iter()
            .map(|x| {
                let e = engine.evaluate(x)?;
                Ok(vec![
                    (ctx.format)(x),
                    format_number(e.value()),
                    e.region.label().to_string(),
                    e.s_regions.to_string(),
                ])
            })
            .collect()
    }
}

fn refusal(problem: &Problem, d: &Diagnosis) -> Outcome {
    let mut report = format!("problem: {}\n", problem.describe());
    report.push_str("refusing to extend: the sample function is not gap-safe\n");
    if let Some(w) = &d.witness {
        writeln!(report, "  witness: {w}").unwrap();
    }
    Outcome {
        report,
        code: EXIT_NOT_EXTENDABLE,
    }
}

/// `extend`: the extension at each query, after cross-checking all four
/// formula variants. Refuses non-gap-safe instances.
pub fn extend(problem: &Problem, queries: &[String]) -> CliResult<Outcome> {
    let d = diagnose(problem)?;
    if !d.gap_safe {
        return Ok(refusal(problem, &d));
    }
    let rows = dispatch(problem, ExtendTask { queries })?;
    Ok(Outcome {
        report: render_table(&["x", "f(x)", "alun", "s_labels"], &rows),
        code: EXIT_GAP_SAFE,
    })
}

struct RegionsTask<'q> {
    queries: &'q [String],
}

impl EngineTask for RegionsTask<'_> {
    type Output = Vec<Vec<String>>;

    fn run<O>(
        self,
        engine: &ExtensionEngine<O>,
        ctx: &Context<'_, ElementOf<O>>,
    ) -> CliResult<Self::Output>
    where
        O: ContourOracle,
        ElementOf<O>: 'static,
    {
        resolve_queries(ctx, self.queries)?
            .iter()
            .map(|x| {
                let pt = engine.point_data(x)?;
                Ok(vec![
                    (ctx.format)(x),
                    pt.a.to_string(),
                    pt.b.to_string(),
                    format_number(pt.u_ab),
                    engine.classify_alun(x)?.label().to_string(),
                    engine.classify_s(x)?.to_string(),
                ])
            })
            .collect()
    }
}

/// `regions`: contour bounds and region labels at each query. Works on any
/// instance; the exit code still reports gap-safety.
pub fn regions(problem: &Problem, queries: &[String]) -> CliResult<Outcome> {
    let d = diagnose(problem)?;
    let rows = dispatch(problem, RegionsTask { queries })?;
    let mut report = render_table(&["x", "a(x)", "b(x)", "u_ab(x)", "alun", "s_labels"], &rows);
    if let Some(w) = &d.witness {
        writeln!(report, "note: not gap-safe; witness: {w}").unwrap();
    }
    Ok(Outcome {
        report,
        code: if d.gap_safe {
            EXIT_GAP_SAFE
        } else {
            EXIT_NOT_EXTENDABLE
        },
    })
}

/// Bounding box `x1,y1,x2,y2` with `x1 ≤ x2` and `y1 ≤ y2`.
pub fn parse_bbox(text: &str) -> Result<[f64; 4], String> {
    let v = parse_coordinates(text, 4)?;
    if v[0] > v[2] || v[1] > v[3] {
        return Err(format!("box corners out of order: {text}"));
    }
    Ok([v[0], v[1], v[2], v[3]])
}

/// `grid`: writes the CSV for a `resolution × resolution` grid over `bbox`
/// to `sink`, `x1` outer and `x2` inner, both ascending.
pub fn grid(
    problem: &Problem,
    bbox: [f64; 4],
    resolution: usize,
    sink: &mut dyn io::Write,
) -> CliResult<Outcome> {
    let Instance::Pareto { space, sample } = &problem.instance else {
        return Err(CliError::Usage(
            "grid needs a pareto space with dimension 2".into(),
        ));
    };
    if space.dim() != 2 {
        return Err(CliError::Usage(format!(
            "grid needs a pareto space with dimension 2, got {}",
            space.dim()
        )));
    }
    if resolution == 0 {
        return Err(CliError::Usage("resolution must be positive".into()));
    }
    let d = diagnose(problem)?;
    if !d.gap_safe {
        return Ok(refusal(problem, &d));
    }
    let base = pareto_base(space, problem.base.as_ref())?;
    let engine = ExtensionEngine::new(
        FiniteSampleOracle::new(*space, sample.clone()),
        &base,
        problem.alpha,
        problem.beta,
    )?;
    let points = grid_points(&bbox[..2], &bbox[2..], resolution)?;
    let io_err = |e: csv::Error| CliError::Io {
        path: "grid output".into(),
        message: e.to_string(),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(GRID_HEADER).map_err(io_err)?;
    for p in &points {
        let e = engine.evaluate(p)?;
        w.write_record([
            format_number(p[0]),
            format_number(p[1]),
            format_number(e.value()),
            e.region.label().to_string(),
            e.s_regions.to_string(),
        ])
        .map_err(io_err)?;
    }
    w.flush().map_err(|e| CliError::Io {
        path: "grid output".into(),
        message: e.to_string(),
    })?;
    Ok(Outcome {
        report: format!("wrote {} grid rows\n", points.len()),
        code: EXIT_GAP_SAFE,
    })
}
