//! The Albert algebra H3(K) of 3x3 Hermitian matrices over a factor algebra,
//! the action of so(8)/f4 generators on it, and the canonical diagonal basis
//! {A_p, G_p, S_p, D_p} together with its type I/II/III realizations.
//!
//! The 27-dimensional action is the ground truth here: single-index diagonal
//! generators act by honest matrix commutators, double-index (nested) ones by
//! commutators of the resulting 27x27 operators. The generalized-matrix
//! realizations used by the e8 engine are *derived* from that action by exact
//! linear solves, and checked against it.

use std::array;
use std::sync::OnceLock;

use crate::algebra::{unit_product, AlgebraKind, Element, DIM};
use crate::linalg::{Mat, SparseVec, SpanSolver};
use crate::operator::{FactorOp, OperatorError};
use crate::scalar::{s, Scalar};

/// Dimension of the Albert algebra representation.
pub const ADIM: usize = 27;

/// The three block structures of generalized matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixType {
    I,
    II,
    III,
}

impl MatrixType {
    pub const ALL: [MatrixType; 3] = [MatrixType::I, MatrixType::II, MatrixType::III];

    pub fn index(self) -> usize {
        match self {
            MatrixType::I => 0,
            MatrixType::II => 1,
            MatrixType::III => 2,
        }
    }

    /// The off-diagonal slot (row, col) carried by this type's X/Y/Z values.
    pub fn slot(self) -> (usize, usize) {
        match self {
            MatrixType::I => (0, 1),
            MatrixType::II => (1, 2),
            MatrixType::III => (2, 0),
        }
    }
}

/// The four families of the canonical diagonal basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagClass {
    A,
    G,
    S,
    D,
}

impl DiagClass {
    pub const ALL: [DiagClass; 4] = [DiagClass::A, DiagClass::G, DiagClass::S, DiagClass::D];

    pub fn index(self) -> usize {
        match self {
            DiagClass::A => 0,
            DiagClass::G => 1,
            DiagClass::S => 2,
            DiagClass::D => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DiagClass::A => "A",
            DiagClass::G => "G",
            DiagClass::S => "S",
            DiagClass::D => "D",
        }
    }
}

/// A 3x3 matrix with entries in one factor algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3 {
    pub kind: AlgebraKind,
    pub e: [[Element; 3]; 3],
}

impl Mat3 {
    pub fn zero(kind: AlgebraKind) -> Self {
        Mat3 {
            kind,
            e: array::from_fn(|_| array::from_fn(|_| Element::zero(kind))),
        }
    }

    pub fn add(&self, rhs: &Mat3) -> Mat3 {
        let mut out = self.clone();
        for r in 0..3 {
            for c in 0..3 {
                out.e[r][c] = out.e[r][c].add(&rhs.e[r][c]);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Mat3) -> Mat3 {
        let mut out = self.clone();
        for r in 0..3 {
            for c in 0..3 {
                out.e[r][c] = out.e[r][c].sub(&rhs.e[r][c]);
            }
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> Mat3 {
        let mut out = self.clone();
        for r in 0..3 {
            for c in 0..3 {
                out.e[r][c] = out.e[r][c].scale(k);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Mat3) -> Mat3 {
        let mut out = Mat3::zero(self.kind);
        for r in 0..3 {
            for c in 0..3 {
                for k in 0..3 {
                    out.e[r][c] = out.e[r][c].add(&self.e[r][k].mul(&rhs.e[k][c]));
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Mat3) -> Mat3 {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn anticommutator(&self, rhs: &Mat3) -> Mat3 {
        self.mul(rhs).add(&rhs.mul(self))
    }

    pub fn dagger(&self) -> Mat3 {
        let mut out = Mat3::zero(self.kind);
        for r in 0..3 {
            for c in 0..3 {
                out.e[r][c] = self.e[c][r].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Element {
        self.e[0][0].add(&self.e[1][1]).add(&self.e[2][2])
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(Element::is_zero)
    }

    pub fn is_hermitian(&self) -> bool {
        (0..3).all(|r| (0..3).all(|c| self.e[r][c] == self.e[c][r].conj()))
    }
}

fn unit(kind: AlgebraKind, u: usize) -> Element {
    Element::unit(kind, u)
}

/// Off-diagonal anti-Hermitian value matrix of the given type:
/// `p` in the type's slot, `-conj(p)` mirrored.
pub fn offdiag_mat(kind: AlgebraKind, t: MatrixType, p: &Element) -> Mat3 {
    let (r, c) = t.slot();
    let mut m = Mat3::zero(kind);
    m.e[r][c] = p.clone();
    m.e[c][r] = p.conj().scale(&s(-1));
    m
}

/// Single-index diagonal matrix of the given type: D_q = diag(q,-q,0),
/// E_q = diag(0,q,-q), F_q = diag(-q,0,q).
pub fn diag_mat(kind: AlgebraKind, t: MatrixType, q: &Element) -> Mat3 {
    let (r, c) = t.slot();
    let mut m = Mat3::zero(kind);
    m.e[r][r] = q.clone();
    m.e[c][c] = q.scale(&s(-1));
    m
}

/// `S_q = diag(q, q, -2q)`.
pub fn s_mat(kind: AlgebraKind, q: &Element) -> Mat3 {
    let mut m = Mat3::zero(kind);
    m.e[0][0] = q.clone();
    m.e[1][1] = q.clone();
    m.e[2][2] = q.scale(&s(-2));
    m
}

/// The 27 Albert basis elements: three diagonal units, then one 8-unit block
/// per slot (1,2), (2,3), (3,1).
pub fn albert_basis(kind: AlgebraKind) -> Vec<Mat3> {
    let mut basis = Vec::with_capacity(ADIM);
    for d in 0..3 {
        let mut m = Mat3::zero(kind);
        m.e[d][d] = unit(kind, 0);
        basis.push(m);
    }
    for t in MatrixType::ALL {
        let (r, c) = t.slot();
        for u in 0..DIM {
            let mut m = Mat3::zero(kind);
            m.e[r][c] = unit(kind, u);
            m.e[c][r] = unit(kind, u).conj();
            basis.push(m);
        }
    }
    basis
}

/// Coordinates of a Hermitian matrix in the Albert basis.
pub fn mat3_to_albert(m: &Mat3) -> Vec<Scalar> {
    assert!(m.is_hermitian(), "not Hermitian");
    let mut coords = Vec::with_capacity(ADIM);
    for d in 0..3 {
        coords.push(m.e[d][d].real());
    }
    for t in MatrixType::ALL {
        let (r, c) = t.slot();
        coords.extend(m.e[r][c].c.iter().cloned());
    }
    coords
}

pub fn albert_to_mat3(kind: AlgebraKind, coords: &[Scalar]) -> Mat3 {
    assert_eq!(coords.len(), ADIM);
    let mut m = Mat3::zero(kind);
    for d in 0..3 {
        m.e[d][d] = unit(kind, 0).scale(&coords[d]);
    }
    for (ti, t) in MatrixType::ALL.iter().enumerate() {
        let (r, c) = t.slot();
        let x = Element::from_coeffs(kind, coords[3 + 8 * ti..3 + 8 * (ti + 1)].to_vec());
        m.e[c][r] = x.conj();
        m.e[r][c] = x;
    }
    m
}

/// 27x27 matrix of the commutator action `P -> [A, P]` of an anti-Hermitian
/// matrix on the Albert algebra.
pub fn com_action(a: &Mat3) -> Mat {
    assert!(a.dagger() == a.scale(&s(-1)), "not anti-Hermitian");
    action_by(|p| a.commutator(p), a.kind)
}

/// 27x27 matrix of the anticommutator action `P -> {B, P}` of a Hermitian
/// matrix (the boost action).
pub fn anticom_action(b: &Mat3) -> Mat {
    assert!(b.is_hermitian(), "not Hermitian");
    action_by(|p| b.anticommutator(p), b.kind)
}

fn action_by(f: impl Fn(&Mat3) -> Mat3, kind: AlgebraKind) -> Mat {
    let mut m = Mat::zeros(ADIM, ADIM);
    for (j, b) in albert_basis(kind).iter().enumerate() {
        let img = mat3_to_albert(&f(b));
        for (i, v) in img.into_iter().enumerate() {
            *m.at_mut(i, j) = v;
        }
    }
    m
}

/// Quaternionic pair table: `table4(kind)[p-1] = [a(p), b(p), c(p)]`, each an
/// ordered pair (x, y) of imaginary units with `e_x e_y = -e_p` exactly.
///
/// The orientation is what pins down the signs of the nested basis: with
/// pairs oriented to -p, the A/G/S combinations below satisfy
/// `S_p = E_p - F_p = diag(p, p, -2p)` and the D_c/E_c/F_c expansion
/// identities, in both factor algebras. (The opposite orientation flips
/// S_p relative to its non-nested form.)
pub fn table4(kind: AlgebraKind) -> [[(usize, usize); 3]; 7] {
    const BASE: [[(usize, usize); 3]; 7] = [
        [(2, 3), (4, 5), (7, 6)], // i
        [(3, 1), (6, 4), (7, 5)], // j
        [(1, 2), (5, 6), (7, 4)], // k
        [(5, 1), (2, 6), (3, 7)], // kl
        [(6, 3), (1, 4), (2, 7)], // jl
        [(4, 2), (3, 5), (1, 7)], // il
        [(6, 1), (5, 2), (4, 3)], // l
    ];
    let mut out = BASE;
    for (pi, row) in out.iter_mut().enumerate() {
        for pair in row.iter_mut() {
            let (sign, idx) = unit_product(kind, pair.0, pair.1);
            assert_eq!(idx, pi + 1);
            if sign > 0 {
                *pair = (pair.1, pair.0);
            }
            assert_eq!(unit_product(kind, pair.0, pair.1), (-1, pi + 1));
        }
    }
    out
}

/// The 28 so(8) generator actions of one type: 7 single-index ops (honest
/// matrix commutators) and 21 nested double-index ops (operator commutators),
/// `double[(u,v)] = 1/2 [op_u, op_v]` stored for u < v.
pub struct TypeOps {
    pub single: Vec<Mat>,
    doubles: Vec<Mat>, // (u,v) with 1 <= u < v <= 7, lexicographic
}

fn double_slot(u: usize, v: usize) -> usize {
    debug_assert!(1 <= u && u < v && v <= 7);
    // Position of (u,v) among {(1,2),(1,3),...,(6,7)}.
    (u - 1) * 7 - u * (u - 1) / 2 + (v - u - 1)
}

impl TypeOps {
    pub fn build(kind: AlgebraKind, t: MatrixType) -> Self {
        let single: Vec<Mat> = (1..DIM)
            .map(|u| com_action(&diag_mat(kind, t, &unit(kind, u))))
            .collect();
        let mut doubles = Vec::with_capacity(21);
        for u in 1..DIM {
            for v in u + 1..DIM {
                doubles.push(
                    single[u - 1]
                        .commutator(&single[v - 1])
                        .scale(&Scalar::new(1.into(), 2.into())),
                );
            }
        }
        TypeOps { single, doubles }
    }

    /// Nested op for the ordered pair (u, v); antisymmetric in its indices.
    pub fn double(&self, u: usize, v: usize) -> Mat {
        if u < v {
            self.doubles[double_slot(u, v)].clone()
        } else {
            self.doubles[double_slot(v, u)].scale(&s(-1))
        }
    }
}

/// Realization of the single-index generator of a type as three diagonal-slot
/// operators (left multiplications by the unit, signed by slot).
pub fn single_realization(kind: AlgebraKind, t: MatrixType, u: usize) -> [FactorOp; 3] {
    let lu = FactorOp::left_mult_unit(kind, u);
    let (r, c) = t.slot();
    let mut out = array::from_fn(|_| FactorOp::zero(kind));
    out[r] = lu.clone();
    out[c] = lu.scale(&s(-1));
    out
}

/// Realization of the nested generator `(u, v)` of a type: the composition
/// `L_u L_v` placed in the two slots that the type's values avoid.
pub fn double_realization(kind: AlgebraKind, t: MatrixType, u: usize, v: usize) -> [FactorOp; 3] {
    let comp = FactorOp::left_mult_unit(kind, u).compose(&FactorOp::left_mult_unit(kind, v));
    let (r, c) = t.slot();
    let mut out = array::from_fn(|_| FactorOp::zero(kind));
    out[r] = comp.clone();
    out[c] = comp;
    out
}

fn triple_add(a: &[FactorOp; 3], b: &[FactorOp; 3]) -> [FactorOp; 3] {
    array::from_fn(|i| a[i].add(&b[i]))
}

fn triple_scale(a: &[FactorOp; 3], k: &Scalar) -> [FactorOp; 3] {
    array::from_fn(|i| a[i].scale(k))
}

pub fn flatten_op(m: &Mat) -> SparseVec {
    let mut v = SparseVec::new();
    for r in 0..m.rows {
        for c in 0..m.cols {
            let x = m.at(r, c);
            if !num_traits::Zero::is_zero(x) {
                v.insert(r * m.cols + c, x.clone());
            }
        }
    }
    v
}

/// Canonical diagonal basis data for one factor algebra: the 28 operator
/// actions `ops[class][p-1]` and their generalized-matrix realizations in
/// each of the three types, `real[type][class][p-1]`.
pub struct DiagTables {
    pub kind: AlgebraKind,
    pub ops: Vec<Vec<Mat>>,
    pub real: Vec<Vec<Vec<[FactorOp; 3]>>>,
}

impl DiagTables {
    pub fn op(&self, class: DiagClass, p: usize) -> &Mat {
        &self.ops[class.index()][p - 1]
    }

    pub fn realization(&self, t: MatrixType, class: DiagClass, p: usize) -> &[FactorOp; 3] {
        &self.real[t.index()][class.index()][p - 1]
    }
}

/// Combination of D-basis elements defining each canonical generator:
/// terms are (coefficient, None) for the single D_p, or
/// (coefficient, Some((x, y))) for the nested D_{x,y}.
fn canonical_combo(
    t4: &[[(usize, usize); 3]; 7],
    class: DiagClass,
    p: usize,
) -> Vec<(Scalar, Option<(usize, usize)>)> {
    let [a, b, c] = t4[p - 1];
    match class {
        DiagClass::A => vec![(s(1), Some(b)), (s(-1), Some(a))],
        DiagClass::G => vec![(s(2), Some(c)), (s(-1), Some(a)), (s(-1), Some(b))],
        DiagClass::S => vec![(s(-1), Some(a)), (s(-1), Some(b)), (s(-1), Some(c))],
        DiagClass::D => vec![(s(1), None)],
    }
}

fn build_diag_tables(kind: AlgebraKind) -> DiagTables {
    let t4 = table4(kind);
    let type_ops: Vec<TypeOps> = MatrixType::ALL
        .iter()
        .map(|&t| TypeOps::build(kind, t))
        .collect();
    // Canonical ops, defined through the type-I (D) basis.
    let ops: Vec<Vec<Mat>> = DiagClass::ALL
        .iter()
        .map(|&class| {
            (1..DIM)
                .map(|p| {
                    let mut acc = Mat::zeros(ADIM, ADIM);
                    for (coef, which) in canonical_combo(&t4, class, p) {
                        let term = match which {
                            None => type_ops[0].single[p - 1].clone(),
                            Some((x, y)) => type_ops[0].double(x, y),
                        };
                        acc = acc.add(&term.scale(&coef));
                    }
                    acc
                })
                .collect()
        })
        .collect();
    // Express each canonical op in every type's 28-element basis, and carry
    // the coefficients over to that type's realization matrices.
    let mut real = Vec::with_capacity(3);
    for (ti, t) in MatrixType::ALL.iter().enumerate() {
        let mut basis_cols = Vec::with_capacity(28);
        let mut basis_real = Vec::with_capacity(28);
        for u in 1..DIM {
            basis_cols.push(flatten_op(&type_ops[ti].single[u - 1]));
            basis_real.push(single_realization(kind, *t, u));
        }
        for u in 1..DIM {
            for v in u + 1..DIM {
                basis_cols.push(flatten_op(&type_ops[ti].double(u, v)));
                basis_real.push(double_realization(kind, *t, u, v));
            }
        }
        let solver = SpanSolver::new(basis_cols)
            .expect("type basis of so(8) actions is linearly independent");
        let mut per_class = Vec::with_capacity(4);
        for class_ops in &ops {
            let mut per_p = Vec::with_capacity(7);
            for op in class_ops {
                let coeffs = solver
                    .express(&flatten_op(op))
                    .expect("canonical diagonal op lies in the span of each type basis");
                let mut acc: [FactorOp; 3] = array::from_fn(|_| FactorOp::zero(kind));
                for (coef, item) in coeffs.iter().zip(&basis_real) {
                    if !num_traits::Zero::is_zero(coef) {
                        acc = triple_add(&acc, &triple_scale(item, coef));
                    }
                }
                per_p.push(acc);
            }
            per_class.push(per_p);
        }
        real.push(per_class);
    }
    DiagTables { kind, ops, real }
}

/// Cached canonical tables per factor kind.
pub fn diag_tables(kind: AlgebraKind) -> &'static DiagTables {
    static DIV: OnceLock<DiagTables> = OnceLock::new();
    static SPLIT: OnceLock<DiagTables> = OnceLock::new();
    match kind {
        AlgebraKind::Division => DIV.get_or_init(|| build_diag_tables(kind)),
        AlgebraKind::Split => SPLIT.get_or_init(|| build_diag_tables(kind)),
    }
}

/// Action of a generalized diagonal matrix (three slot operators) on its own
/// type's off-diagonal slot (r, c): the value `x` there maps to the value of
/// the operator `d_r L_x - L_x d_c`, which must be a left multiplication.
/// A type-T realization only determines this one 8x8 block; the other slots
/// require the other types' realizations (that is what triality conversion
/// is for). The mirror slot is computed independently and checked for
/// Hermiticity.
pub fn gen_slot_action(
    kind: AlgebraKind,
    t: MatrixType,
    d: &[FactorOp; 3],
) -> Result<Mat, OperatorError> {
    let (r, c) = t.slot();
    let mut m = Mat::zeros(DIM, DIM);
    for u in 0..DIM {
        let lx = FactorOp::left_mult_unit(kind, u);
        let op = d[r].compose(&lx).sub(&lx.compose(&d[c]));
        let y = op.as_left_mult()?;
        let lxc = FactorOp::left_mult(&unit(kind, u).conj());
        let mirror = d[c].compose(&lxc).sub(&lxc.compose(&d[r]));
        let y2 = mirror.as_left_mult()?;
        assert_eq!(y2, y.conj(), "generalized diagonal action is not Hermitian");
        for (i, v) in y.c.iter().enumerate() {
            *m.at_mut(i, u) = v.clone();
        }
    }
    Ok(m)
}

/// The 8x8 block of a 27x27 diagonal-generator action on the given type's
/// off-diagonal slot. Also asserts the action vanishes on the three Albert
/// diagonal coordinates and does not mix slots, which holds for every
/// diagonal (so(8)) generator.
pub fn slot_block(op: &Mat, t: MatrixType) -> Mat {
    assert_eq!((op.rows, op.cols), (ADIM, ADIM));
    let base = 3 + 8 * t.index();
    let mut m = Mat::zeros(DIM, DIM);
    for c in 0..ADIM {
        for r in 0..ADIM {
            let v = op.at(r, c);
            if num_traits::Zero::is_zero(v) {
                continue;
            }
            assert!(r >= 3 && c >= 3 && (r - 3) / 8 == (c - 3) / 8,
                "diagonal generator mixes slots or moves diagonal coordinates");
            if (base..base + 8).contains(&r) {
                *m.at_mut(r - base, c - base) = v.clone();
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Span;

    const KINDS: [AlgebraKind; 2] = [AlgebraKind::Division, AlgebraKind::Split];

    #[test]
    fn table4_pairs_multiply_to_minus_p() {
        for kind in KINDS {
            let t4 = table4(kind);
            for p in 1..DIM {
                for (x, y) in t4[p - 1] {
                    assert_eq!(unit_product(kind, x, y), (-1, p));
                }
            }
        }
    }

    #[test]
    fn albert_roundtrip() {
        for kind in KINDS {
            for (j, b) in albert_basis(kind).iter().enumerate() {
                let coords = mat3_to_albert(b);
                assert!(coords.iter().enumerate().all(|(i, v)| {
                    if i == j {
                        *v == s(1)
                    } else {
                        num_traits::Zero::is_zero(v)
                    }
                }));
                assert_eq!(&albert_to_mat3(kind, &coords), b);
            }
        }
    }

    #[test]
    fn nested_ops_agree_between_diag_and_offdiag_definitions() {
        // D_{p,q} = 1/2 [D_p, D_q] = 1/2 [X_p, X_q], and likewise per type.
        for kind in KINDS {
            for t in MatrixType::ALL {
                let ops = TypeOps::build(kind, t);
                let x: Vec<Mat> = (1..DIM)
                    .map(|u| com_action(&offdiag_mat(kind, t, &unit(kind, u))))
                    .collect();
                for u in 1..DIM {
                    for v in u + 1..DIM {
                        let from_x = x[u - 1]
                            .commutator(&x[v - 1])
                            .scale(&Scalar::new(1.into(), 2.into()));
                        assert_eq!(ops.double(u, v), from_x, "{:?} {:?} ({},{})", kind, t, u, v);
                    }
                }
            }
        }
    }

    #[test]
    fn s_without_nesting() {
        // S_p = E_p - F_p = action of diag(p, p, -2p).
        for kind in KINDS {
            let tables = diag_tables(kind);
            for p in 1..DIM {
                let direct = com_action(&s_mat(kind, &unit(kind, p)));
                assert_eq!(tables.op(DiagClass::S, p), &direct, "{:?} S_{}", kind, p);
                let e = TypeOps::build(kind, MatrixType::II).single[p - 1].clone();
                let f = TypeOps::build(kind, MatrixType::III).single[p - 1].clone();
                assert_eq!(tables.op(DiagClass::S, p), &e.sub(&f), "{:?} E-F {}", kind, p);
            }
        }
    }

    #[test]
    fn def_singles_sum_to_zero() {
        for kind in KINDS {
            let d = TypeOps::build(kind, MatrixType::I);
            let e = TypeOps::build(kind, MatrixType::II);
            let f = TypeOps::build(kind, MatrixType::III);
            for p in 1..DIM {
                let sum = d.single[p - 1].add(&e.single[p - 1]).add(&f.single[p - 1]);
                assert!(sum.is_zero(), "{:?} D+E+F at {}", kind, p);
            }
        }
    }

    #[test]
    fn strong_triality_and_def_doubles() {
        // A_p and G_p are type-independent combinations, and
        // D_{c(p)} + E_{c(p)} + F_{c(p)} = G_p.
        for kind in KINDS {
            let t4 = table4(kind);
            let tables = diag_tables(kind);
            let d = TypeOps::build(kind, MatrixType::I);
            let e = TypeOps::build(kind, MatrixType::II);
            let f = TypeOps::build(kind, MatrixType::III);
            for ops in [&d, &e, &f] {
                for p in 1..DIM {
                    let [a, b, c] = t4[p - 1];
                    let ap = ops.double(b.0, b.1).sub(&ops.double(a.0, a.1));
                    let gp = ops
                        .double(c.0, c.1)
                        .scale(&s(2))
                        .sub(&ops.double(a.0, a.1))
                        .sub(&ops.double(b.0, b.1));
                    assert_eq!(&ap, tables.op(DiagClass::A, p), "{:?} A_{}", kind, p);
                    assert_eq!(&gp, tables.op(DiagClass::G, p), "{:?} G_{}", kind, p);
                }
            }
            for p in 1..DIM {
                let c = t4[p - 1][2];
                let sum = d
                    .double(c.0, c.1)
                    .add(&e.double(c.0, c.1))
                    .add(&f.double(c.0, c.1));
                assert_eq!(&sum, tables.op(DiagClass::G, p), "{:?} DEF at {}", kind, p);
            }
        }
    }

    fn op_span(ops: &[&Mat]) -> Span {
        let mut span = Span::new(ADIM * ADIM);
        for op in ops {
            let flat: Vec<Scalar> = (0..ADIM)
                .flat_map(|r| (0..ADIM).map(|c| op.at(r, c).clone()).collect::<Vec<_>>())
                .collect();
            span.insert(flat);
        }
        span
    }

    #[test]
    fn g2_so7_so8_filtration() {
        for kind in KINDS {
            let tables = diag_tables(kind);
            let mut ops: Vec<&Mat> = Vec::new();
            for p in 1..DIM {
                ops.push(tables.op(DiagClass::A, p));
                ops.push(tables.op(DiagClass::G, p));
            }
            assert_eq!(op_span(&ops).rank(), 14, "{:?} g2", kind);
            // g2 closes under commutator.
            let g2 = op_span(&ops);
            for a in &ops {
                for b in &ops {
                    let com = a.commutator(b);
                    let flat: Vec<Scalar> = (0..ADIM)
                        .flat_map(|r| {
                            (0..ADIM).map(|c| com.at(r, c).clone()).collect::<Vec<_>>()
                        })
                        .collect();
                    assert!(g2.contains(&flat), "{:?} g2 closure", kind);
                }
            }
            for p in 1..DIM {
                ops.push(tables.op(DiagClass::S, p));
            }
            assert_eq!(op_span(&ops).rank(), 21, "{:?} so(7)", kind);
            for p in 1..DIM {
                ops.push(tables.op(DiagClass::D, p));
            }
            assert_eq!(op_span(&ops).rank(), 28, "{:?} so(8)", kind);
        }
    }

    #[test]
    fn f4_span_and_closure() {
        // 28 diagonal ops plus 24 off-diagonal ops span a 52-dimensional
        // commutator-closed algebra acting on the 27.
        let kind = AlgebraKind::Division;
        let tables = diag_tables(kind);
        let mut ops: Vec<Mat> = Vec::new();
        for class in DiagClass::ALL {
            for p in 1..DIM {
                ops.push(tables.op(class, p).clone());
            }
        }
        for t in MatrixType::ALL {
            for u in 0..DIM {
                ops.push(com_action(&offdiag_mat(kind, t, &unit(kind, u))));
            }
        }
        assert_eq!(ops.len(), 52);
        let refs: Vec<&Mat> = ops.iter().collect();
        let span = op_span(&refs);
        assert_eq!(span.rank(), 52);
        for a in &ops {
            for b in &ops {
                let com = a.commutator(b);
                let flat: Vec<Scalar> = (0..ADIM)
                    .flat_map(|r| (0..ADIM).map(|c| com.at(r, c).clone()).collect::<Vec<_>>())
                    .collect();
                assert!(span.contains(&flat), "f4 closure");
            }
        }
    }

    #[test]
    fn realizations_reproduce_canonical_actions() {
        // A type-T realization must reproduce the slot-T block of the
        // canonical 27x27 action.
        for kind in KINDS {
            let tables = diag_tables(kind);
            for t in MatrixType::ALL {
                for class in DiagClass::ALL {
                    for p in 1..DIM {
                        let triple = tables.realization(t, class, p);
                        let action = gen_slot_action(kind, t, triple).unwrap_or_else(|_| {
                            panic!("{:?} {:?} {}_{} realization", kind, t, class.name(), p)
                        });
                        assert_eq!(
                            action,
                            slot_block(tables.op(class, p), t),
                            "{:?} {:?} {}_{}",
                            kind,
                            t,
                            class.name(),
                            p
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn g_is_multiple_of_identity() {
        // A multiple of the identity matrix, (x o y) I, is the cross-type sum
        // (D_{x,y} + E_{x,y} + F_{x,y}) / 2. The trace elements are such
        // multiples: G_p = -2 l^2 (pl o l) I for p != l, and G_l = -2 (kl o k) I.
        // (Under the -p pair orientation recorded in `table4` these carry the
        // opposite overall sign from the +p orientation.)
        for kind in KINDS {
            let tables = diag_tables(kind);
            let d = TypeOps::build(kind, MatrixType::I);
            let e = TypeOps::build(kind, MatrixType::II);
            let f = TypeOps::build(kind, MatrixType::III);
            let lsq = crate::algebra::unit_square(kind, 7) as i64;
            for p in 1..DIM {
                let (coef, x, y) = if p == 7 {
                    (-1i64, 4, 3) // -2 (kl o k) I
                } else {
                    let (sg, pl) = unit_product(kind, p, 7);
                    (-lsq * sg as i64, pl, 7) // -2 l^2 (pl o l) I
                };
                let sum = d.double(x, y).add(&e.double(x, y)).add(&f.double(x, y));
                assert_eq!(
                    sum.scale(&s(coef)),
                    tables.op(DiagClass::G, p).clone(),
                    "{:?} G_{}",
                    kind,
                    p
                );
            }
        }
    }

    #[test]
    fn expansion_identities() {
        // E_p = -(D_p - S_p)/2, F_p = -(D_p + S_p)/2,
        // D_c = (G - S)/3, E_c = (S + 2G + 3D)/6, F_c = (S + 2G - 3D)/6.
        for kind in KINDS {
            let t4 = table4(kind);
            let tables = diag_tables(kind);
            let d = TypeOps::build(kind, MatrixType::I);
            let e = TypeOps::build(kind, MatrixType::II);
            let f = TypeOps::build(kind, MatrixType::III);
            let half = Scalar::new(1.into(), 2.into());
            for p in 1..DIM {
                let dp = tables.op(DiagClass::D, p);
                let sp = tables.op(DiagClass::S, p);
                let gp = tables.op(DiagClass::G, p);
                assert_eq!(
                    e.single[p - 1],
                    dp.sub(sp).scale(&-half.clone()),
                    "{:?} E_{}",
                    kind,
                    p
                );
                assert_eq!(
                    f.single[p - 1],
                    dp.add(sp).scale(&-half.clone()),
                    "{:?} F_{}",
                    kind,
                    p
                );
                let c = t4[p - 1][2];
                let third = Scalar::new(1.into(), 3.into());
                let sixth = Scalar::new(1.into(), 6.into());
                assert_eq!(d.double(c.0, c.1), gp.sub(sp).scale(&third), "{:?} Dc {}", kind, p);
                assert_eq!(
                    e.double(c.0, c.1),
                    sp.add(&gp.scale(&s(2))).add(&dp.scale(&s(3))).scale(&sixth),
                    "{:?} Ec {}",
                    kind,
                    p
                );
                assert_eq!(
                    f.double(c.0, c.1),
                    sp.add(&gp.scale(&s(2))).sub(&dp.scale(&s(3))).scale(&sixth),
                    "{:?} Fc {}",
                    kind,
                    p
                );
            }
        }
    }
}
