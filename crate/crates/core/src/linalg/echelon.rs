use super::field::Field;
use super::matrix::{add_scaled, scale, to_dense, Matrix, SparseVec};

/// Incrementally maintained reduced row echelon form.
///
/// Every stored row has leading coefficient one at its pivot column and zeros at every
/// other pivot column. A new row takes as pivot its first nonzero column after reduction,
/// so the result depends only on the insertion order.
#[derive(Clone, Debug)]
pub struct Echelon<K> {
    width: usize,
    rows: Vec<SparseVec<K>>,
    pivots: Vec<usize>,
    row_of_pivot: Vec<Option<usize>>,
}

impl<K: Field> Echelon<K> {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            row_of_pivot: vec![None; width],
        }
    }

    pub fn from_rows<I: IntoIterator<Item = SparseVec<K>>>(width: usize, rows: I) -> Self {
        let mut e = Self::new(width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of_pivot[col].is_some()
    }

    /// Remainder of `v` modulo the row space; it vanishes on every pivot column.
    pub fn reduce(&self, v: &[(usize, K)]) -> SparseVec<K> {
        let mut out: SparseVec<K> = v.to_vec();
        let hits: Vec<(usize, K)> = v
            .iter()
            .filter_map(|(c, x)| self.row_of_pivot[*c].map(|r| (r, x.clone())))
            .collect();
        for (r, x) in hits {
            out = add_scaled(&out, &(-x), &self.rows[r]);
        }
        out
    }

    /// Adds `v` to the row space. Returns the new pivot column, or `None` if `v` was dependent.
    pub fn insert(&mut self, v: SparseVec<K>) -> Option<usize> {
        debug_assert!(v.iter().all(|(c, _)| *c < self.width));
        let r = self.reduce(&v);
        let (pivot, lead) = r.first().cloned()?;
        let r = scale(&r, &lead.inv().expect("nonzero leading entry"));
        for row in self.rows.iter_mut() {
            if let Ok(k) = row.binary_search_by_key(&pivot, |(c, _)| *c) {
                let x = row[k].1.clone();
                *row = add_scaled(row, &(-x), &r);
            }
        }
        self.row_of_pivot[pivot] = Some(self.rows.len());
        self.pivots.push(pivot);
        self.rows.push(r);
        Some(pivot)
    }

    pub fn contains(&self, v: &[(usize, K)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coefficients of `v` in terms of the stored rows, if `v` lies in the row space.
    pub fn coordinates(&self, v: &[(usize, K)]) -> Option<Vec<K>> {
        if !self.contains(v) {
            return None;
        }
        let mut coords = vec![K::zero(); self.rows.len()];
        for (c, x) in v {
            if let Some(r) = self.row_of_pivot[*c] {
                coords[r] = x.clone();
            }
        }
        Some(coords)
    }

    /// Standard basis columns that are not pivots; they span a complement of the row space.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.width).filter(|c| self.row_of_pivot[*c].is_none()).collect()
    }

    /// Basis of `{x : r·x = 0 for every stored row r}`, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<K>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![K::zero(); self.width];
                v[f] = K::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if let Ok(k) = row.binary_search_by_key(&f, |(c, _)| *c) {
                        v[p] = -row[k].1.clone();
                    }
                }
                v
            })
            .collect()
    }
}

pub fn rank<K: Field>(m: &Matrix<K>) -> usize {
    Echelon::from_rows(m.cols(), (0..m.rows()).map(|r| m.row(r).to_vec())).rank()
}

/// Null space basis of `m`; has exactly `cols - rank` vectors.
pub fn kernel_basis<K: Field>(m: &Matrix<K>) -> Vec<Vec<K>> {
    Echelon::from_rows(m.cols(), (0..m.rows()).map(|r| m.row(r).to_vec())).null_space()
}

/// Some `x` with `m·x = b`, or `None` when the system is inconsistent.
pub fn solve<K: Field>(m: &Matrix<K>, b: &[K]) -> Option<Vec<K>> {
    assert_eq!(b.len(), m.rows());
    let n = m.cols();
    let mut e = Echelon::new(n + 1);
    for r in 0..m.rows() {
        let mut row = m.row(r).to_vec();
        if !b[r].is_zero() {
            row.push((n, b[r].clone()));
        }
        if e.insert(row) == Some(n) {
            return None;
        }
    }
    let mut x = vec![K::zero(); n];
    for (row, &p) in e.rows().iter().zip(e.pivots()) {
        if let Some((c, v)) = row.last() {
            if *c == n {
                x[p] = v.clone();
            }
        }
    }
    debug_assert_eq!(m.mul_vec(&x), b.to_vec());
    Some(x)
}

/// Like [`solve`] but takes and returns sparse vectors.
pub fn solve_sparse<K: Field>(m: &Matrix<K>, b: &[(usize, K)]) -> Option<SparseVec<K>> {
    solve(m, &to_dense(b, m.rows())).map(|x| super::matrix::to_sparse(&x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Fp, Rational};

    type Q = Rational;

    #[test]
    fn identity_rank() {
        assert_eq!(rank(&Matrix::<Q>::identity(3)), 3);
    }

    #[test]
    fn repeated_row_rank() {
        assert_eq!(rank(&Matrix::<Q>::from_i64(&[&[1, 1], &[1, 1]])), 1);
    }

    #[test]
    fn two_vanishes_in_f2() {
        assert_eq!(rank(&Matrix::<Fp<2>>::from_i64(&[&[2]])), 0);
        assert_eq!(rank(&Matrix::<Q>::from_i64(&[&[2]])), 1);
    }

    #[test]
    fn kernels() {
        assert!(kernel_basis(&Matrix::<Q>::identity(2)).is_empty());
        let k = kernel_basis(&Matrix::<Q>::from_i64(&[&[1, 1]]));
        assert_eq!(k, vec![vec![Q::from_i64(-1), Q::from_i64(1)]]);
        assert_eq!(kernel_basis(&Matrix::<Q>::zeros(2, 3)).len(), 3);
    }

    #[test]
    fn solving() {
        let b = vec![Q::from_i64(4), Q::from_i64(-2)];
        assert_eq!(solve(&Matrix::<Q>::identity(2), &b), Some(b.clone()));
        let m = Matrix::<Q>::from_i64(&[&[1, 1]]);
        let x = solve(&m, &[Q::one()]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![Q::one()]);
        assert_eq!(solve(&Matrix::<Q>::from_i64(&[&[0]]), &[Q::one()]), None);
    }

    #[test]
    fn coordinates_in_row_space() {
        let e = Echelon::<Q>::from_rows(
            3,
            vec![vec![(0, Q::one()), (1, Q::one())], vec![(1, Q::one()), (2, Q::one())]],
        );
        let v = vec![(0, Q::one()), (1, Q::from_i64(2)), (2, Q::one())];
        let c = e.coordinates(&v).unwrap();
        let rebuilt = e
            .rows()
            .iter()
            .zip(&c)
            .fold(Vec::new(), |acc, (r, x)| add_scaled(&acc, x, r));
        assert_eq!(rebuilt, v);
        assert!(e.coordinates(&[(2, Q::one())]).is_none());
    }
}
