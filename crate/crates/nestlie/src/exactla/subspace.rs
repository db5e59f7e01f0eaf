//! Subspaces, reduced echelon forms, kernels and linear solving.
//!
//! All elimination uses one fixed pivot convention: scan columns left to
//! right, pick the first row with a nonzero entry in the current column,
//! normalize the pivot to 1 and eliminate above and below immediately.
//! Rationals stay reduced after every step, so identical inputs always give
//! bit-identical outputs.

use serde::{Deserialize, Serialize};

use super::mat::Mat;
use super::scalar::GaussianRational;
use super::ExactlaError;

/// Bring `rows` into reduced row echelon form in place. Zero rows are
/// removed; the returned list holds the pivot column of each remaining row
/// (strictly increasing).
pub fn rref(rows: &mut Vec<Vec<GaussianRational>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, pivot_row);
        // Normalize the pivot to 1.
        let inv = rows[next_row][col].inv().expect("pivot nonzero");
        if !inv.is_one() {
            for v in rows[next_row].iter_mut().skip(col) {
                *v = &*v * &inv;
            }
        }
        // Eliminate everywhere else.
        for r in 0..rows.len() {
            if r == next_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            let (head, tail) = if r < next_row {
                let (a, b) = rows.split_at_mut(next_row);
                (&mut a[r], &b[0])
            } else {
                let (a, b) = rows.split_at_mut(r);
                (&mut b[0], &a[next_row])
            };
            for (dst, src) in head.iter_mut().zip(tail.iter()).skip(col) {
                if !src.is_zero() {
                    *dst = &*dst - &(&factor * src);
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    rows.truncate(next_row);
    pivots
}

/// A subspace of `C^n`, stored as a reduced-echelon basis (pivot columns
/// strictly increasing, pivots normalized to 1). Functionals are kept in
/// the same representation, as coordinate rows over the dual basis.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<GaussianRational>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![GaussianRational::zero(); ambient_dim];
                v[i] = GaussianRational::one();
                v
            })
            .collect();
        Subspace { ambient_dim, basis }
    }

    /// Span of arbitrary vectors; they are echelonized and deduplicated.
    pub fn from_spanning(ambient_dim: usize, vectors: Vec<Vec<GaussianRational>>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient_dim));
        let mut rows = vectors;
        rows.retain(|v| v.iter().any(|x| !x.is_zero()));
        rref(&mut rows);
        Subspace {
            ambient_dim,
            basis: rows,
        }
    }

    /// Wrap rows already known to be in reduced echelon form.
    pub(crate) fn from_rref_rows(ambient_dim: usize, basis: Vec<Vec<GaussianRational>>) -> Self {
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<GaussianRational>] {
        &self.basis
    }

    /// Reduce `v` against the basis; the remainder is zero exactly when the
    /// vector lies in the subspace.
    pub fn reduce(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("echelon rows are nonzero");
            if v[pivot].is_zero() {
                continue;
            }
            let factor = v[pivot].clone();
            for (dst, src) in v.iter_mut().zip(row.iter()).skip(pivot) {
                if !src.is_zero() {
                    *dst = &*dst - &(&factor * src);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Functionals (coordinate rows) vanishing on this subspace.
    /// dim(annihilator) = ambient − dim.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient_dim);
        }
        let m = Mat::from_rows(self.basis.clone()).expect("nonempty echelon basis");
        kernel(&m)
    }

    /// Exact intersection, computed through annihilators.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut functionals = self.annihilator().basis;
        functionals.extend(other.annihilator().basis);
        Subspace::from_spanning(self.ambient_dim, functionals).annihilator()
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut vs = self.basis.clone();
        vs.extend(other.basis.clone());
        Subspace::from_spanning(self.ambient_dim, vs)
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of {})", self.dim(), self.ambient_dim)
    }
}

/// Reduced-echelon basis of `{v : m·v = 0}`. Basis vectors are ordered by
/// their free column, ascending, then echelonized for canonical form.
pub fn kernel(m: &Mat) -> Subspace {
    let n = m.cols();
    let mut rows: Vec<Vec<GaussianRational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    rows.retain(|v| v.iter().any(|x| !x.is_zero()));
    let pivots = rref(&mut rows);
    let is_pivot = |c: usize| pivots.binary_search(&c).is_ok();
    let mut basis = Vec::with_capacity(n - pivots.len());
    for free in 0..n {
        if is_pivot(free) {
            continue;
        }
        let mut v = vec![GaussianRational::zero(); n];
        v[free] = GaussianRational::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = -&row[free];
            }
        }
        basis.push(v);
    }
    Subspace::from_spanning(n, basis)
}

pub fn rank(m: &Mat) -> usize {
    let mut rows: Vec<Vec<GaussianRational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    rows.retain(|v| v.iter().any(|x| !x.is_zero()));
    rref(&mut rows);
    rows.len()
}

/// Exact particular solution of `m·x = b`, or `None` when inconsistent.
/// Free variables are set to 0 under the echelon pivot convention, so the
/// answer is deterministic.
pub fn solve(m: &Mat, b: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
    assert_eq!(m.rows(), b.len(), "right-hand side length mismatch");
    let n = m.cols();
    let mut rows: Vec<Vec<GaussianRational>> = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    rows.retain(|v| v.iter().any(|x| !x.is_zero()));
    let pivots = rref(&mut rows);
    // A pivot in the augmented column certifies inconsistency.
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![GaussianRational::zero(); n];
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn veci(vs: &[i64]) -> Vec<GaussianRational> {
        vs.iter().map(|&v| gr(v)).collect()
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert_eq!(kernel(&Mat::identity(2)).dim(), 0);
        assert_eq!(kernel(&Mat::zeros(2, 2)).dim(), 2);
    }

    #[test]
    fn kernel_of_single_equation() {
        let m = Mat::from_rows(vec![veci(&[1, 1]), veci(&[0, 0])]).unwrap();
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        // x + y = 0, echelon-normalized basis vector (1, -1).
        assert_eq!(k.basis()[0], veci(&[1, -1]));
    }

    #[test]
    fn solve_examples() {
        let id = Mat::identity(2);
        assert_eq!(solve(&id, &veci(&[1, 2])), Some(veci(&[1, 2])));

        let inconsistent = Mat::from_rows(vec![veci(&[1, 0]), veci(&[1, 0])]).unwrap();
        assert_eq!(solve(&inconsistent, &veci(&[1, 2])), None);

        // Pivot convention: free variable set to 0.
        let wide = Mat::from_rows(vec![veci(&[1, 1])]).unwrap();
        assert_eq!(solve(&wide, &veci(&[3])), Some(veci(&[3, 0])));
    }

    #[test]
    fn annihilator_examples() {
        let e1 = Subspace::from_spanning(2, vec![veci(&[1, 0])]);
        let ann = e1.annihilator();
        assert_eq!(ann.dim(), 1);
        assert_eq!(ann.basis()[0], veci(&[0, 1]));

        assert_eq!(Subspace::full(3).annihilator().dim(), 0);

        // Functionals vanishing on e1+e2 inside C^3: contains e1* - e2*.
        let diag = Subspace::from_spanning(3, vec![veci(&[1, 1, 0])]);
        let ann = diag.annihilator();
        assert_eq!(ann.dim(), 2);
        assert!(ann.contains(&veci(&[1, -1, 0])));
    }

    #[test]
    fn intersection_examples() {
        let s = Subspace::from_spanning(3, vec![veci(&[1, 0, 0]), veci(&[0, 1, 0])]);
        assert_eq!(s.intersect(&s), s);

        let e1 = Subspace::from_spanning(2, vec![veci(&[1, 0])]);
        let e2 = Subspace::from_spanning(2, vec![veci(&[0, 1])]);
        assert_eq!(e1.intersect(&e2).dim(), 0);

        let s12 = Subspace::from_spanning(3, vec![veci(&[1, 0, 0]), veci(&[0, 1, 0])]);
        let s23 = Subspace::from_spanning(3, vec![veci(&[0, 1, 0]), veci(&[0, 0, 1])]);
        let both = s12.intersect(&s23);
        assert_eq!(both.dim(), 1);
        assert_eq!(both.basis()[0], veci(&[0, 1, 0]));
    }

    #[test]
    fn echelon_basis_is_canonical() {
        // Same span presented in two different orders gives identical bases.
        let a = Subspace::from_spanning(3, vec![veci(&[1, 2, 3]), veci(&[0, 1, 1])]);
        let b = Subspace::from_spanning(3, vec![veci(&[2, 5, 7]), veci(&[1, 3, 4])]);
        assert_eq!(a, b);
    }
}
