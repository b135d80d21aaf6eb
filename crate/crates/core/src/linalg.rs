//! Dense exact-rational linear algebra: reduced row echelon form, solving,
//! null spaces, incremental span tracking, symmetric congruence signatures and
//! rational eigendecompositions.
//!
//! Everything here is exact; a pivot is "nonzero" in the strict rational
//! sense, never up to a tolerance.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::Scalar;

pub type SparseVec = BTreeMap<usize, Scalar>;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("singular system: expected full rank {expected}, got {actual}")]
    SingularSystem { expected: usize, actual: usize },
    #[error("matrix restricted to the subspace has irrational spectrum")]
    IrrationalSpectrum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    *out.at_mut(r, c) += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for c in 0..self.cols {
                    let a = self.at(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += a * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> Mat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= k;
        }
        out
    }

    pub fn commutator(&self, rhs: &Mat) -> Mat {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// pivot row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = {
                let p = self.at(row, col).clone();
                Scalar::one() / p
            };
            for c in col..self.cols {
                let v = self.at(row, c).clone() * &inv;
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let f = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(row, c).clone() * &f;
                    *self.at_mut(r, c) -= v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Exact inverse; errors if singular.
    pub fn inverse(&self) -> Result<Mat, LinalgError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = Scalar::one();
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(LinalgError::SingularSystem {
                expected: n,
                actual: pivots.len(),
            });
        }
        let mut inv = Mat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                *inv.at_mut(r, c) = aug.at(r, n + c).clone();
            }
        }
        Ok(inv)
    }

    /// Basis of the right null space, as rows.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut vec = vec![Scalar::zero(); self.cols];
            vec[free] = Scalar::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                vec[pcol] = -m.at(prow, free).clone();
            }
            basis.push(vec);
        }
        basis
    }

    /// Solves `self * x = b` exactly; `None` if inconsistent. When the system
    /// is underdetermined, free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = b[r].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the constant column
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug.at(prow, self.cols).clone();
        }
        Some(x)
    }

    /// Signature (n_plus, n_minus, n_zero) of a symmetric matrix, by exact
    /// symmetric congruence reduction.
    pub fn signature(&self) -> (usize, usize, usize) {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        debug_assert!(m == m.transpose(), "signature of a non-symmetric matrix");
        let (mut np, mut nm, mut nz) = (0usize, 0usize, 0usize);
        let mut k = 0;
        while k < n {
            if m.at(k, k).is_zero() {
                // Look for a nonzero diagonal entry to bring forward, else an
                // off-diagonal one to polarize.
                if let Some(j) = (k + 1..n).find(|&j| !m.at(j, j).is_zero()) {
                    m.swap_sym(k, j);
                } else if let Some((r, c)) = (k..n)
                    .flat_map(|r| (r + 1..n).map(move |c| (r, c)))
                    .find(|&(r, c)| !m.at(r, c).is_zero())
                {
                    // row/col r += row/col c turns the 2x2 hyperbolic block
                    // into one with a nonzero diagonal entry.
                    m.add_sym(r, c, &Scalar::one());
                    m.swap_sym(k, r);
                } else {
                    nz += n - k;
                    break;
                }
            }
            let d = m.at(k, k).clone();
            if d.is_positive() {
                np += 1;
            } else {
                nm += 1;
            }
            for r in k + 1..n {
                if m.at(r, k).is_zero() {
                    continue;
                }
                let f = -(m.at(r, k) / &d);
                m.add_sym(r, k, &f);
            }
            k += 1;
        }
        (np, nm, nz)
    }

    /// Symmetric congruence: row r += f * row k and col r += f * col k.
    fn add_sym(&mut self, r: usize, k: usize, f: &Scalar) {
        let n = self.cols;
        for c in 0..n {
            let v = self.at(k, c).clone() * f;
            *self.at_mut(r, c) += v;
        }
        for row in 0..n {
            let v = self.at(row, k).clone() * f;
            *self.at_mut(row, r) += v;
        }
    }

    fn swap_sym(&mut self, a: usize, b: usize) {
        self.swap_rows(a, b);
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }
}

/// Incrementally maintained row-echelon span of vectors in a fixed ambient
/// dimension. Used for subalgebra closure and invariant-subspace checks.
#[derive(Clone, Debug)]
pub struct Span {
    dim: usize,
    /// Echelon rows, each normalized to a unit leading coefficient.
    rows: Vec<Vec<Scalar>>,
    /// Leading column of each row.
    leads: Vec<usize>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span {
            dim,
            rows: Vec::new(),
            leads: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Reduces `v` against the span; the remainder is returned.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim);
        for (row, &lead) in self.rows.iter().zip(&self.leads) {
            if v[lead].is_zero() {
                continue;
            }
            let f = v[lead].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Inserts `v` if independent of the current span; returns true if the
    /// rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut rem = self.reduce(v);
        let Some(lead) = rem.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Scalar::one() / rem[lead].clone();
        for x in rem.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // Back-substitute into existing rows to keep the basis reduced.
        for row in self.rows.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let f = row[lead].clone();
            for (x, r) in row.iter_mut().zip(&rem) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        let pos = self.leads.partition_point(|&l| l < lead);
        self.rows.insert(pos, rem);
        self.leads.insert(pos, lead);
        true
    }
}

/// Precomputed exact solver for expressing targets in the span of a fixed
/// set of sparse columns. Fails (returns `None`) when the target is outside
/// the span — the caller decides whether that is a closure violation.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    cols: Vec<SparseVec>,
    /// Coordinate ids of the rows whose restriction of the column matrix is
    /// invertible.
    pivot_coords: Vec<usize>,
    inv: Mat,
}

impl SpanSolver {
    pub fn new(cols: Vec<SparseVec>) -> Result<Self, LinalgError> {
        let n = cols.len();
        let mut support: Vec<usize> = cols
            .iter()
            .flat_map(|c| c.keys().copied())
            .collect();
        support.sort_unstable();
        support.dedup();
        // Row-reduce the transpose to find a coordinate subset on which the
        // columns are invertible.
        let mut t = Mat::zeros(n, support.len());
        for (ci, col) in cols.iter().enumerate() {
            for (coord, v) in col {
                let ri = support.binary_search(coord).unwrap();
                *t.at_mut(ci, ri) = v.clone();
            }
        }
        let pivots = t.rref();
        if pivots.len() != n {
            return Err(LinalgError::SingularSystem {
                expected: n,
                actual: pivots.len(),
            });
        }
        let pivot_coords: Vec<usize> = pivots.iter().map(|&p| support[p]).collect();
        let mut sub = Mat::zeros(n, n);
        for (ci, col) in cols.iter().enumerate() {
            for (ri, coord) in pivot_coords.iter().enumerate() {
                if let Some(v) = col.get(coord) {
                    *sub.at_mut(ri, ci) = v.clone();
                }
            }
        }
        let inv = sub.inverse()?;
        Ok(SpanSolver {
            cols,
            pivot_coords,
            inv,
        })
    }

    /// Expresses `target` in the column span, verifying the expansion exactly
    /// over the full support.
    pub fn express(&self, target: &SparseVec) -> Option<Vec<Scalar>> {
        let n = self.cols.len();
        let mut tp = vec![Scalar::zero(); n];
        for (ri, coord) in self.pivot_coords.iter().enumerate() {
            if let Some(v) = target.get(coord) {
                tp[ri] = v.clone();
            }
        }
        let x = self.inv.mul_vec(&tp);
        // Verify: sum of x_c * col_c must reproduce the target exactly.
        let mut acc: SparseVec = SparseVec::new();
        for (ci, xc) in x.iter().enumerate() {
            if xc.is_zero() {
                continue;
            }
            for (coord, v) in &self.cols[ci] {
                let e = acc.entry(*coord).or_insert_with(Scalar::zero);
                *e += xc * v;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        let mut t = target.clone();
        t.retain(|_, v| !v.is_zero());
        if acc == t {
            Some(x)
        } else {
            None
        }
    }
}

/// Minimal polynomial of a square matrix, as coefficients low-to-high with
/// unit leading coefficient, found as the first linear dependency among the
/// flattened powers I, M, M^2, ...
pub fn minimal_polynomial(m: &Mat) -> Vec<Scalar> {
    assert_eq!(m.rows, m.cols);
    let n2 = m.rows * m.cols;
    let mut powers: Vec<Mat> = vec![Mat::identity(m.rows)];
    loop {
        let k = powers.len();
        // Solve sum_{d<k} c_d M^d = M^k.
        let mut a = Mat::zeros(n2, k);
        for (d, p) in powers.iter().enumerate() {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    *a.at_mut(r * m.cols + c, d) = p.at(r, c).clone();
                }
            }
        }
        let next = powers.last().unwrap().mul(m);
        let b: Vec<Scalar> = (0..m.rows)
            .flat_map(|r| (0..m.cols).map(|c| next.at(r, c).clone()).collect::<Vec<_>>())
            .collect();
        // Dependency requires an exact solution; check it.
        if let Some(x) = a.solve(&b) {
            let recomposed = {
                let mut acc = Mat::zeros(m.rows, m.cols);
                for (d, p) in powers.iter().enumerate() {
                    if !x[d].is_zero() {
                        acc = acc.add(&p.scale(&x[d]));
                    }
                }
                acc
            };
            if recomposed == next {
                // M^k - sum c_d M^d = 0.
                let mut poly: Vec<Scalar> = x.into_iter().map(|c| -c).collect();
                poly.push(Scalar::one());
                return poly;
            }
        }
        powers.push(next);
        assert!(powers.len() <= m.rows + 1, "minimal polynomial search overran");
    }
}

/// All rational roots of a polynomial (low-to-high coefficients), with the
/// leftover degree after dividing the found linear factors out.
pub fn rational_roots(poly: &[Scalar]) -> (Vec<Scalar>, usize) {
    // Clear denominators to an integer polynomial.
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for c in poly {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = poly.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut roots = Vec::new();
    let mut current: Vec<BigInt> = ints;
    // Strip trailing zero coefficients (should not happen for monic input).
    while current.last().is_some_and(Zero::is_zero) {
        current.pop();
    }
    loop {
        while current.first().is_some_and(Zero::is_zero) && current.len() > 1 {
            roots.push(Scalar::zero());
            current.remove(0);
        }
        if current.len() <= 1 {
            return (roots, 0);
        }
        let a0 = current[0].clone();
        let an = current.last().unwrap().clone();
        let mut found = None;
        'search: for p in divisors(&a0) {
            for q in divisors(&an) {
                for sign in [1i32, -1] {
                    let cand = Scalar::new(&p * sign, q.clone());
                    if eval_int_poly(&current, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(r) => {
                current = deflate(&current, &r);
                roots.push(r);
            }
            None => return (roots, current.len() - 1),
        }
    }
}

fn divisors(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    // Trial division is fine here: the constants involved are tiny.
    let mut divs = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            divs.push(d.clone());
            divs.push(&n / &d);
        }
        d += 1;
    }
    divs.sort();
    divs.dedup();
    divs
}

fn eval_int_poly(coeffs: &[num_bigint::BigInt], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + Scalar::from_integer(c.clone());
    }
    acc
}

fn deflate(coeffs: &[num_bigint::BigInt], root: &Scalar) -> Vec<num_bigint::BigInt> {
    // Synthetic division by (x - root) over the rationals, then re-clearing
    // denominators.
    use num_bigint::BigInt;
    use num_integer::Integer;
    let n = coeffs.len();
    let mut quot = vec![Scalar::zero(); n - 1];
    let mut carry = Scalar::zero();
    for d in (1..n).rev() {
        let c = Scalar::from_integer(coeffs[d].clone()) + &carry;
        quot[d - 1] = c.clone();
        carry = c * root;
    }
    let mut lcm = BigInt::one();
    for c in &quot {
        lcm = lcm.lcm(c.denom());
    }
    quot.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
}

/// Exact eigendecomposition of a matrix whose spectrum is rational. Returns
/// (eigenvalue, eigenvector basis rows) sorted by eigenvalue; errors if any
/// characteristic root is irrational or the matrix is not diagonalizable
/// over the rationals.
pub fn rational_eigenspaces(m: &Mat) -> Result<Vec<(Scalar, Vec<Vec<Scalar>>)>, LinalgError> {
    let minpoly = minimal_polynomial(m);
    let (roots, leftover) = rational_roots(&minpoly);
    if leftover != 0 {
        return Err(LinalgError::IrrationalSpectrum);
    }
    let mut uniq = roots;
    uniq.sort();
    uniq.dedup();
    let mut out = Vec::new();
    let mut total = 0usize;
    for lam in uniq {
        let shifted = m.sub(&Mat::identity(m.rows).scale(&lam));
        let ns = shifted.null_space();
        total += ns.len();
        out.push((lam, ns));
    }
    if total != m.rows {
        return Err(LinalgError::IrrationalSpectrum);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{s, sr};

    #[test]
    fn rref_and_rank() {
        let m = Mat::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(1), s(0), s(1)],
        ]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Mat::from_rows(vec![
            vec![s(2), s(1)],
            vec![s(5), s(3)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
    }

    #[test]
    fn signature_of_indefinite_diagonal() {
        let mut m = Mat::zeros(4, 4);
        *m.at_mut(0, 0) = s(2);
        *m.at_mut(1, 1) = s(-3);
        *m.at_mut(2, 2) = s(-1);
        // hyperbolic block in the last slot pairs with nothing: zero row
        assert_eq!(m.signature(), (1, 2, 1));
    }

    #[test]
    fn signature_hyperbolic_block() {
        let mut m = Mat::zeros(2, 2);
        *m.at_mut(0, 1) = s(1);
        *m.at_mut(1, 0) = s(1);
        assert_eq!(m.signature(), (1, 1, 0));
    }

    #[test]
    fn span_insert_and_contains() {
        let mut sp = Span::new(3);
        assert!(sp.insert(vec![s(1), s(1), s(0)]));
        assert!(sp.insert(vec![s(0), s(2), s(2)]));
        assert!(!sp.insert(vec![s(2), s(4), s(2)]));
        assert!(sp.contains(&[s(1), s(3), s(2)]));
        assert!(!sp.contains(&[s(0), s(0), s(1)]));
        assert_eq!(sp.rank(), 2);
    }

    #[test]
    fn span_solver_expresses_and_rejects() {
        let mut c0 = SparseVec::new();
        c0.insert(0, s(1));
        c0.insert(2, s(2));
        let mut c1 = SparseVec::new();
        c1.insert(1, s(3));
        let solver = SpanSolver::new(vec![c0, c1]).unwrap();
        let mut t = SparseVec::new();
        t.insert(0, s(2));
        t.insert(1, s(3));
        t.insert(2, s(4));
        assert_eq!(solver.express(&t), Some(vec![s(2), s(1)]));
        t.insert(3, s(1)); // outside the span support
        assert_eq!(solver.express(&t), None);
    }

    #[test]
    fn minpoly_and_eigenspaces() {
        // diag(1, 1, -2) plus a nilpotent-free similarity keeps things simple.
        let m = Mat::from_rows(vec![
            vec![s(1), s(0), s(0)],
            vec![s(0), s(1), s(0)],
            vec![s(0), s(0), s(-2)],
        ]);
        let poly = minimal_polynomial(&m);
        assert_eq!(poly.len(), 3); // (x-1)(x+2)
        let eig = rational_eigenspaces(&m).unwrap();
        assert_eq!(eig.len(), 2);
        assert_eq!(eig[0].0, s(-2));
        assert_eq!(eig[0].1.len(), 1);
        assert_eq!(eig[1].1.len(), 2);
    }

    #[test]
    fn rational_roots_with_fraction() {
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let (roots, leftover) = rational_roots(&[s(-3), s(5), s(2)]);
        assert_eq!(leftover, 0);
        assert!(roots.contains(&sr(1, 2)));
        assert!(roots.contains(&s(-3)));
    }

    #[test]
    fn irrational_roots_detected() {
        // x^2 - 2
        let (roots, leftover) = rational_roots(&[s(-2), s(0), s(1)]);
        assert!(roots.is_empty());
        assert_eq!(leftover, 2);
    }
}
