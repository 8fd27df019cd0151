//! Exact sparse linear algebra over the rationals: incremental column
//! echelon forms (rank, kernel, pivot columns, solving) and row spans.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::ring::Rat;

/// A sparse vector with exact rational entries, keyed by index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: BTreeMap<usize, Rat>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    pub fn unit(idx: usize) -> Self {
        let mut v = SparseVec::new();
        v.entries.insert(idx, Rat::one());
        v
    }

    pub fn set(&mut self, idx: usize, val: Rat) {
        if val.is_zero() {
            self.entries.remove(&idx);
        } else {
            self.entries.insert(idx, val);
        }
    }

    pub fn get(&self, idx: usize) -> Rat {
        self.entries.get(&idx).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &Rat)> {
        self.entries.iter()
    }

    /// Smallest index with a nonzero entry.
    pub fn leading(&self) -> Option<(usize, &Rat)> {
        self.entries.iter().next().map(|(i, c)| (*i, c))
    }

    /// self += c * other
    pub fn axpy(&mut self, c: &Rat, other: &SparseVec) {
        if c.is_zero() {
            return;
        }
        for (i, v) in &other.entries {
            let add = v * c;
            let cur = self.entries.remove(i).unwrap_or_else(Rat::zero) + add;
            if !cur.is_zero() {
                self.entries.insert(*i, cur);
            }
        }
    }

    pub fn scale(&mut self, c: &Rat) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for v in self.entries.values_mut() {
            *v *= c;
        }
    }
}

impl FromIterator<(usize, Rat)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Rat)>>(iter: T) -> Self {
        let mut v = SparseVec::new();
        for (i, c) in iter {
            let cur = v.get(i) + c;
            v.set(i, cur);
        }
        v
    }
}

struct EchelonRow {
    vec: SparseVec,   // leading coefficient normalized to 1
    combo: SparseVec, // same vector expressed over the pushed column indices
}

/// Incremental column echelon form with combination tracking. Columns are
/// pushed in order; each push either adds a pivot or yields a kernel
/// vector over the column indices seen so far.
#[derive(Default)]
pub struct ColumnEchelon {
    pivots: BTreeMap<usize, EchelonRow>,
    pivot_cols: Vec<usize>,
}

impl ColumnEchelon {
    pub fn new() -> Self {
        ColumnEchelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Push column `col` with value `v`. Returns `Some(kernel)` when the
    /// column is dependent: `kernel` has entry 1 at `col` and expresses a
    /// vanishing combination of the pushed columns.
    pub fn push_column(&mut self, col: usize, v: SparseVec) -> Option<SparseVec> {
        let mut vec = v;
        let mut combo = SparseVec::unit(col);
        while let Some((lead, coeff)) = vec.leading().map(|(i, c)| (i, c.clone())) {
            match self.pivots.get(&lead) {
                Some(row) => {
                    let neg = -coeff;
                    vec.axpy(&neg, &row.vec);
                    combo.axpy(&neg, &row.combo);
                }
                None => {
                    let inv = coeff.recip();
                    vec.scale(&inv);
                    combo.scale(&inv);
                    self.pivots.insert(lead, EchelonRow { vec, combo });
                    self.pivot_cols.push(col);
                    return None;
                }
            }
        }
        Some(combo)
    }

    /// Express `v` over the pushed columns, if it lies in their span.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut vec = v.clone();
        let mut sol = SparseVec::new();
        while let Some((lead, coeff)) = vec.leading().map(|(i, c)| (i, c.clone())) {
            let row = self.pivots.get(&lead)?;
            sol.axpy(&coeff, &row.combo);
            let neg = -coeff;
            vec.axpy(&neg, &row.vec);
        }
        Some(sol)
    }
}

/// An incremental row span: tracks the dimension of the space spanned by
/// inserted vectors, forward-reduced only.
#[derive(Default)]
pub struct RowSpace {
    rows: BTreeMap<usize, SparseVec>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: SparseVec) -> SparseVec {
        let mut vec = v;
        while let Some((lead, coeff)) = vec.leading().map(|(i, c)| (i, c.clone())) {
            match self.rows.get(&lead) {
                Some(row) => {
                    let neg = -coeff;
                    vec.axpy(&neg, row);
                }
                None => break,
            }
        }
        vec
    }

    /// Insert `v`; true when the span grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut vec = self.reduce(v);
        match vec.leading().map(|(i, c)| (i, c.clone())) {
            Some((lead, coeff)) => {
                let inv = coeff.recip();
                vec.scale(&inv);
                self.rows.insert(lead, vec);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }
}

/// Determinant of a dense rational matrix by Gaussian elimination.
pub fn det_dense(mat: &[Vec<Rat>]) -> Rat {
    let n = mat.len();
    if n == 0 {
        return Rat::one();
    }
    let mut m: Vec<Vec<Rat>> = mat.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => return Rat::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        let pinv = p.recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &pinv;
            for c in col..n {
                let sub = &m[col][c] * &factor;
                m[r][c] -= sub;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, c)| (i, rat(c))).collect()
    }

    #[test]
    fn echelon_rank_kernel_pivots() {
        let mut ech = ColumnEchelon::new();
        assert!(ech.push_column(0, sv(&[(0, 1), (1, 2)])).is_none());
        assert!(ech.push_column(1, sv(&[(0, 2), (1, 4)])).is_some()); // 2x col0
        assert!(ech.push_column(2, sv(&[(1, 1)])).is_none());
        let k = ech.push_column(3, sv(&[(0, 1), (1, 3)])).unwrap();
        assert_eq!(ech.rank(), 2);
        assert_eq!(ech.pivot_cols(), &[0, 2]);
        // kernel: col3 = col0 + col2 -> combo has 1 at 3
        assert_eq!(k.get(3), rat(1));
        assert_eq!(k.get(0), rat(-1));
        assert_eq!(k.get(2), rat(-1));
    }

    #[test]
    fn echelon_solve() {
        let mut ech = ColumnEchelon::new();
        ech.push_column(0, sv(&[(0, 1), (1, 1)]));
        ech.push_column(1, sv(&[(1, 1)]));
        let sol = ech.solve(&sv(&[(0, 2), (1, 5)])).unwrap();
        assert_eq!(sol.get(0), rat(2));
        assert_eq!(sol.get(1), rat(3));
        assert!(ech.solve(&sv(&[(2, 1)])).is_none());
    }

    #[test]
    fn row_space() {
        let mut rs = RowSpace::new();
        assert!(rs.insert(sv(&[(0, 1), (2, -1)])));
        assert!(rs.insert(sv(&[(2, 1), (3, 1)])));
        assert!(!rs.insert(sv(&[(0, 2), (3, 2)]))); // sum of the two
        assert_eq!(rs.dim(), 2);
        assert!(rs.contains(&sv(&[(0, 3), (2, -3)])));
        assert!(!rs.contains(&sv(&[(1, 1)])));
    }

    #[test]
    fn dense_det() {
        let m = vec![
            vec![rat(2), rat(1)],
            vec![rat(1), rat(1)],
        ];
        assert_eq!(det_dense(&m), rat(1));
        let sing = vec![
            vec![rat(1), rat(2)],
            vec![rat(2), rat(4)],
        ];
        assert_eq!(det_dense(&sing), rat(0));
    }
}
