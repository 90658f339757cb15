use super::Preorder;
use crate::error::{Error, Result};

const WORD: usize = 64;

/// An explicit preorder on `0..n`, stored as the full closed relation.
///
/// Row `i` holds the set `{ j | i ⪰ j }` as a bitset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePreorder {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl FinitePreorder {
    fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        FinitePreorder {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.rows[i * self.words + j / WORD] |= 1 << (j % WORD);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    /// Smallest reflexive, transitive relation containing every `(i, j)`
    /// pair, read as `i ⪰ j`.
    pub fn closure(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = FinitePreorder::empty(n);
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            rel.set(i, j);
        }
        for i in 0..n {
            rel.set(i, i);
        }
        // Warshall over bit rows: whenever i ⪰ k, row_i |= row_k.
        let w = rel.words;
        for k in 0..n {
            let (kw, kb) = (k / WORD, 1u64 << (k % WORD));
            for i in 0..n {
                if i != k && rel.rows[i * w + kw] & kb != 0 {
                    for t in 0..w {
                        let bits = rel.rows[k * w + t];
                        rel.rows[i * w + t] |= bits;
                    }
                }
            }
        }
        Ok(rel)
    }

    /// Accepts an already-closed relation; rejects anything that is not
    /// reflexive and transitive.
    pub fn from_matrix(matrix: &[Vec<bool>]) -> Result<Self> {
        let n = matrix.len();
        let mut rel = FinitePreorder::empty(n);
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAPreorder(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &b) in row.iter().enumerate() {
                if b {
                    rel.set(i, j);
                }
            }
        }
        let geq = |i: usize, j: usize| rel.get(i, j);
        if let Some(i) = super::audit::reflexivity_violation(n, geq) {
            return Err(Error::NotAPreorder(format!("({i}, {i}) missing")));
        }
        if let Some((i, j, k)) = super::audit::transitivity_violation(n, geq) {
            return Err(Error::NotAPreorder(format!(
                "({i}, {j}) and ({j}, {k}) present but ({i}, {k}) missing"
            )));
        }
        Ok(rel)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `i ⪰ j`; out-of-range indices are never related.
    pub fn get(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.rows[i * self.words + j / WORD] & (1 << (j % WORD)) != 0
    }

    /// All `(i, j)` with `i ⪰ j`, in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// The relation restricted to `subset`, reindexed in the order given.
    pub fn restrict(&self, subset: &[usize]) -> Result<FinitePreorder> {
        for &index in subset {
            if index >= self.n {
                return Err(Error::IndexOutOfRange { index, n: self.n });
            }
        }
        let mut rel = FinitePreorder::empty(subset.len());
        for (a, &i) in subset.iter().enumerate() {
            for (b, &j) in subset.iter().enumerate() {
                if self.get(i, j) {
                    rel.set(a, b);
                }
            }
        }
        Ok(rel)
    }

    /// Number of elements `j` with `i ⪰ j` (including `i`).
    pub fn down_set_size(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl Preorder for FinitePreorder {
    type Element = usize;

    fn contains(&self, x: &usize) -> bool {
        *x < self.n
    }

    fn geq(&self, x: &usize, y: &usize) -> bool {
        self.get(*x, *y)
    }

    fn enumerate(&self) -> Option<Vec<usize>> {
        Some((0..self.n).collect())
    }
}
