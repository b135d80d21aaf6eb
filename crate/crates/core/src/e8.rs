//! The 248-dimensional generalized-matrix realization: basis enumeration,
//! the bracket algorithm (value entries, composition entries, triality type
//! conversion), structure constants, Jacobi verification, the Killing form,
//! and generic subalgebra machinery.
//!
//! Basis layout: 192 off-diagonal elements `X/Y/Z[s*p]` labeled by a pure
//! tensor unit, then 56 diagonal elements `A/G/S/D` per factor in the
//! canonical basis. Off-diagonal brackets that land on the diagonal are
//! resolved as operator matrices and expressed in the canonical span by
//! exact linear solve; a failure there is a closure violation, which must
//! never happen.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::albert::{diag_tables, double_realization, single_realization, DiagClass, MatrixType};
use crate::algebra::{unit_product, AlgebraKind, Element, DIM};
use crate::linalg::{rational_eigenspaces, LinalgError, Mat, Span, SpanSolver, SparseVec};
use crate::operator::FactorOp;
use crate::scalar::{s, Scalar};

pub const E8_DIM: usize = 248;
pub const OFF_COUNT: usize = 192;
pub const DIAG_COUNT: usize = 56;

/// Convention tag serialized with exported tables: unit ordering and the
/// orientation of the quaternionic pair table feeding the nested basis.
pub const CONVENTION_VERSION: &str = "units:1,i,j,k,kl,jl,il,l;pairs:minus-p;v1";

#[derive(Debug, Error)]
pub enum E8Error {
    #[error("closure violation bracketing basis {i} and {j}: {detail}")]
    ClosureViolation {
        i: usize,
        j: usize,
        detail: &'static str,
    },
    #[error("elements do not commute")]
    NonCommuting,
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Which pair of composition algebras the construction runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraPair {
    pub left: AlgebraKind,
    pub right: AlgebraKind,
}

impl AlgebraPair {
    /// The headline half-split form (split left factor, division right).
    pub const HALF_SPLIT: AlgebraPair = AlgebraPair {
        left: AlgebraKind::Split,
        right: AlgebraKind::Division,
    };

    pub const COMPACT: AlgebraPair = AlgebraPair {
        left: AlgebraKind::Division,
        right: AlgebraKind::Division,
    };

    pub const DOUBLY_SPLIT: AlgebraPair = AlgebraPair {
        left: AlgebraKind::Split,
        right: AlgebraKind::Split,
    };

    pub fn kind(self, f: Factor) -> AlgebraKind {
        match f {
            Factor::Left => self.left,
            Factor::Right => self.right,
        }
    }

    pub fn name(self) -> String {
        format!("{}x{}", self.left.name(), self.right.name())
    }
}

/// The two tensor factors: left is the primed algebra of the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Left,
    Right,
}

impl Factor {
    pub const ALL: [Factor; 2] = [Factor::Left, Factor::Right];

    pub fn index(self) -> usize {
        match self {
            Factor::Left => 0,
            Factor::Right => 1,
        }
    }
}

/// The three off-diagonal families, one per matrix type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OffType {
    X,
    Y,
    Z,
}

impl OffType {
    pub const ALL: [OffType; 3] = [OffType::X, OffType::Y, OffType::Z];

    pub fn index(self) -> usize {
        match self {
            OffType::X => 0,
            OffType::Y => 1,
            OffType::Z => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OffType::X => "X",
            OffType::Y => "Y",
            OffType::Z => "Z",
        }
    }

    pub fn matrix_type(self) -> MatrixType {
        match self {
            OffType::X => MatrixType::I,
            OffType::Y => MatrixType::II,
            OffType::Z => MatrixType::III,
        }
    }

    /// Cyclic successor: X -> Y -> Z -> X.
    pub fn next(self) -> OffType {
        match self {
            OffType::X => OffType::Y,
            OffType::Y => OffType::Z,
            OffType::Z => OffType::X,
        }
    }
}

/// A named basis generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    /// Off-diagonal value generator with pure tensor label `s (x) p`.
    Off { t: OffType, s: usize, p: usize },
    /// Canonical diagonal generator of one factor, unit index 1..=7.
    Diag {
        f: Factor,
        class: DiagClass,
        u: usize,
    },
}

pub fn off_index(t: OffType, su: usize, pu: usize) -> usize {
    debug_assert!(su < DIM && pu < DIM);
    t.index() * 64 + su * DIM + pu
}

pub fn diag_index(f: Factor, class: DiagClass, u: usize) -> usize {
    debug_assert!((1..DIM).contains(&u));
    OFF_COUNT + f.index() * 28 + class.index() * 7 + (u - 1)
}

pub fn basis_label(i: usize) -> BasisLabel {
    assert!(i < E8_DIM);
    if i < OFF_COUNT {
        let t = OffType::ALL[i / 64];
        BasisLabel::Off {
            t,
            s: (i % 64) / DIM,
            p: i % DIM,
        }
    } else {
        let q = i - OFF_COUNT;
        BasisLabel::Diag {
            f: Factor::ALL[q / 28],
            class: DiagClass::ALL[(q % 28) / 7],
            u: (q % 7) + 1,
        }
    }
}

impl BasisLabel {
    pub fn index(self) -> usize {
        match self {
            BasisLabel::Off { t, s, p } => off_index(t, s, p),
            BasisLabel::Diag { f, class, u } => diag_index(f, class, u),
        }
    }

    /// Printed generator name; the left (primed) factor's diagonal families
    /// carry a prime, and unit names come from each factor's algebra.
    pub fn name(self, pair: AlgebraPair) -> String {
        match self {
            BasisLabel::Off { t, s, p } => format!(
                "{}[{}*{}]",
                t.name(),
                pair.left.unit_names()[s],
                pair.right.unit_names()[p]
            ),
            BasisLabel::Diag { f, class, u } => {
                let prime = if f == Factor::Left { "'" } else { "" };
                format!("{}{}[{}]", class.name(), prime, pair.kind(f).unit_names()[u])
            }
        }
    }
}

pub fn basis_names(pair: AlgebraPair) -> Vec<String> {
    (0..E8_DIM).map(|i| basis_label(i).name(pair)).collect()
}

/// A general element, as 248 exact coordinates over the basis.
pub type E8Element = Vec<Scalar>;

pub fn basis_vector(i: usize) -> E8Element {
    let mut v = vec![Scalar::zero(); E8_DIM];
    v[i] = s(1);
    v
}

pub fn from_terms(terms: &[(usize, Scalar)]) -> E8Element {
    let mut v = vec![Scalar::zero(); E8_DIM];
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}

// ---------------------------------------------------------------------------
// Canonical-span solvers for diagonal operator triples.

fn flatten_triple(tri: &[FactorOp; 3]) -> SparseVec {
    let mut v = SparseVec::new();
    for (slot, op) in tri.iter().enumerate() {
        for r in 0..DIM {
            for c in 0..DIM {
                let x = op.m.at(r, c);
                if !x.is_zero() {
                    v.insert(slot * 64 + r * DIM + c, x.clone());
                }
            }
        }
    }
    v
}

struct TypeSolvers {
    /// One solver per matrix type, columns in class-major, unit-minor order
    /// matching the diagonal block of the basis index.
    per_type: Vec<SpanSolver>,
}

fn type_solvers(kind: AlgebraKind) -> &'static TypeSolvers {
    static DIV: OnceLock<TypeSolvers> = OnceLock::new();
    static SPLIT: OnceLock<TypeSolvers> = OnceLock::new();
    let build = move || {
        let tables = diag_tables(kind);
        let per_type = MatrixType::ALL
            .iter()
            .map(|&t| {
                let mut cols = Vec::with_capacity(28);
                for class in DiagClass::ALL {
                    for u in 1..DIM {
                        cols.push(flatten_triple(tables.realization(t, class, u)));
                    }
                }
                SpanSolver::new(cols).expect("canonical realizations are independent")
            })
            .collect();
        TypeSolvers { per_type }
    };
    match kind {
        AlgebraKind::Division => DIV.get_or_init(build),
        AlgebraKind::Split => SPLIT.get_or_init(build),
    }
}

/// Expresses a diagonal operator triple in the 28 canonical realizations of
/// the given type; `None` if it lies outside that span.
fn express_in_canonical(kind: AlgebraKind, t: MatrixType, tri: &[FactorOp; 3]) -> Option<Vec<Scalar>> {
    type_solvers(kind).per_type[t.index()].express(&flatten_triple(tri))
}

fn canonical_coords_to_terms(f: Factor, coeffs: &[Scalar]) -> Vec<(usize, Scalar)> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (OFF_COUNT + f.index() * 28 + k, c.clone()))
        .collect()
}

/// Canonical coordinates of the single-index generator of a type family
/// (D for type I, E for II, F for III) on one factor.
pub fn single_element(pair: AlgebraPair, f: Factor, t: MatrixType, u: usize) -> E8Element {
    let kind = pair.kind(f);
    let tri = single_realization(kind, t, u);
    let coeffs = express_in_canonical(kind, t, &tri).expect("single generator is canonical");
    from_terms(&canonical_coords_to_terms(f, &coeffs))
}

/// Canonical coordinates of the nested (double-index) generator of a type on
/// one factor, via inversion of the defining quaternionic-pair combinations.
pub fn double_element(pair: AlgebraPair, f: Factor, t: MatrixType, u: usize, v: usize) -> E8Element {
    let kind = pair.kind(f);
    let tri = double_realization(kind, t, u, v);
    let coeffs = express_in_canonical(kind, t, &tri).expect("nested generator is canonical");
    from_terms(&canonical_coords_to_terms(f, &coeffs))
}

// ---------------------------------------------------------------------------
// The bracket algorithm.

fn conj_sign(u: usize) -> i64 {
    if u == 0 {
        1
    } else {
        -1
    }
}

/// Case (a): cross-type off-diagonal bracket for cyclically ordered types,
/// `[T_a, T'_b] = T''` with label `-conj(a b)` over the tensor algebra.
fn cross_bracket(
    pair: AlgebraPair,
    s1: usize,
    p1: usize,
    t2: OffType,
    s2: usize,
    p2: usize,
) -> Vec<(usize, Scalar)> {
    let t3 = t2.next();
    let (gl, s3) = unit_product(pair.left, s1, s2);
    let (gr, p3) = unit_product(pair.right, p1, p2);
    let sign = -(gl as i64) * (gr as i64) * conj_sign(s3) * conj_sign(p3);
    vec![(off_index(t3, s3, p3), s(sign))]
}

/// Splits `m1 (x) n1 + m2 (x) n2` into `a (x) Id + Id (x) b`, verifying the
/// claim entrywise; `None` when the sum is not of that form.
fn kron_sum_decompose(m1: &Mat, n1: &Mat, m2: &Mat, n2: &Mat) -> Option<(Mat, Mat)> {
    let mut a = Mat::zeros(DIM, DIM);
    for si in 0..DIM {
        for ti in 0..DIM {
            *a.at_mut(si, ti) = m1.at(si, ti) * n1.at(0, 0) + m2.at(si, ti) * n2.at(0, 0);
        }
    }
    let a00 = a.at(0, 0).clone();
    let mut b = Mat::zeros(DIM, DIM);
    for p in 0..DIM {
        for q in 0..DIM {
            let mut v = m1.at(0, 0) * n1.at(p, q) + m2.at(0, 0) * n2.at(p, q);
            if p == q {
                v -= &a00;
            }
            *b.at_mut(p, q) = v;
        }
    }
    for si in 0..DIM {
        for ti in 0..DIM {
            let c1 = m1.at(si, ti);
            let c2 = m2.at(si, ti);
            if c1.is_zero() && c2.is_zero() && si != ti {
                // Both kron terms and the Id (x) b term vanish on this block;
                // a[si][ti] is zero by construction.
                continue;
            }
            for p in 0..DIM {
                for q in 0..DIM {
                    let mut v = c1 * n1.at(p, q) + c2 * n2.at(p, q);
                    if p == q {
                        v -= a.at(si, ti);
                    }
                    if si == ti {
                        v -= b.at(p, q);
                    }
                    if !v.is_zero() {
                        return None;
                    }
                }
            }
        }
    }
    Some((a, b))
}

/// Case (b): same-type off-diagonal bracket. The 3x3 matrix commutator lands
/// on the diagonal with composition entries
/// `diag(b o conj(a) - a o conj(b), conj(b) o a - conj(a) o b, 0)` in the
/// type's slots; factorized over the tensor product and expressed in the
/// canonical diagonal span.
fn same_type_bracket(
    pair: AlgebraPair,
    t: OffType,
    s1: usize,
    p1: usize,
    s2: usize,
    p2: usize,
    i: usize,
    j: usize,
) -> Result<Vec<(usize, Scalar)>, E8Error> {
    let mt = t.matrix_type();
    let (r, c) = mt.slot();
    let lm = FactorOp::left_mult_unit;
    let lmc = |kind: AlgebraKind, u: usize| FactorOp::left_mult(&Element::unit(kind, u).conj());
    let (lk, rk) = (pair.left, pair.right);

    // entry at (r, r):  (L_s2 L_conj(s1)) (x) (L_p2 L_conj(p1))
    //                 - (L_s1 L_conj(s2)) (x) (L_p1 L_conj(p2))
    let e0 = [
        lm(lk, s2).compose(&lmc(lk, s1)),
        lm(rk, p2).compose(&lmc(rk, p1)),
        lm(lk, s1).compose(&lmc(lk, s2)).scale(&s(-1)),
        lm(rk, p1).compose(&lmc(rk, p2)),
    ];
    // entry at (c, c):  (L_conj(s2) L_s1) (x) (L_conj(p2) L_p1)
    //                 - (L_conj(s1) L_s2) (x) (L_conj(p1) L_p2)
    let e1 = [
        lmc(lk, s2).compose(&lm(lk, s1)),
        lmc(rk, p2).compose(&lm(rk, p1)),
        lmc(lk, s1).compose(&lm(lk, s2)).scale(&s(-1)),
        lmc(rk, p1).compose(&lm(rk, p2)),
    ];
    let closure = |detail| E8Error::ClosureViolation { i, j, detail };
    let (a0, b0) = kron_sum_decompose(&e0[0].m, &e0[1].m, &e0[2].m, &e0[3].m)
        .ok_or_else(|| closure("diagonal entry does not split over the factors"))?;
    let (a1, b1) = kron_sum_decompose(&e1[0].m, &e1[1].m, &e1[2].m, &e1[3].m)
        .ok_or_else(|| closure("diagonal entry does not split over the factors"))?;

    let mut terms = Vec::new();
    for (f, kind, first, second) in [
        (Factor::Left, lk, a0, a1),
        (Factor::Right, rk, b0, b1),
    ] {
        let mut tri = [
            FactorOp::zero(kind),
            FactorOp::zero(kind),
            FactorOp::zero(kind),
        ];
        tri[r] = FactorOp { kind, m: first };
        tri[c] = FactorOp { kind, m: second };
        if tri.iter().all(FactorOp::is_zero) {
            continue;
        }
        let coeffs = express_in_canonical(kind, mt, &tri)
            .ok_or_else(|| closure("diagonal result outside the canonical span"))?;
        terms.extend(canonical_coords_to_terms(f, &coeffs));
    }
    terms.sort_by_key(|(k, _)| *k);
    Ok(terms)
}

/// Case (c): diagonal times off-diagonal. The diagonal element is converted
/// to the off-diagonal element's type, the 3x3 commutator produces one
/// off-diagonal entry `d_r o L_v - L_v o d_c`, and that composition must
/// reduce to a left multiplication (value label).
fn diag_off_bracket(
    pair: AlgebraPair,
    f: Factor,
    class: DiagClass,
    u: usize,
    t: OffType,
    su: usize,
    pu: usize,
    i: usize,
    j: usize,
) -> Result<Vec<(usize, Scalar)>, E8Error> {
    let kind = pair.kind(f);
    let mt = t.matrix_type();
    let (r, c) = mt.slot();
    let tri = diag_tables(kind).realization(mt, class, u);
    // The operator acts on the factor carrying the diagonal element; the
    // other tensor factor of the entry is untouched left multiplication.
    let own_unit = if f == Factor::Left { su } else { pu };
    let lv = FactorOp::left_mult_unit(kind, own_unit);
    let g = tri[r].compose(&lv).sub(&lv.compose(&tri[c]));
    let y = g.as_left_mult().map_err(|_| E8Error::ClosureViolation {
        i,
        j,
        detail: "off-diagonal entry is not a left multiplication",
    })?;
    let mut terms = Vec::new();
    for (k, coeff) in y.c.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let idx = match f {
            Factor::Left => off_index(t, k, pu),
            Factor::Right => off_index(t, su, k),
        };
        terms.push((idx, coeff.clone()));
    }
    terms.sort_by_key(|(k, _)| *k);
    Ok(terms)
}

/// Case (d): diagonal bracket within one factor, computed slotwise on the
/// type-I realizations and re-expressed canonically.
fn diag_diag_same(
    pair: AlgebraPair,
    f: Factor,
    c1: DiagClass,
    u1: usize,
    c2: DiagClass,
    u2: usize,
    i: usize,
    j: usize,
) -> Result<Vec<(usize, Scalar)>, E8Error> {
    let kind = pair.kind(f);
    let tables = diag_tables(kind);
    let t1 = tables.realization(MatrixType::I, c1, u1);
    let t2 = tables.realization(MatrixType::I, c2, u2);
    let com = [
        t1[0].commutator(&t2[0]),
        t1[1].commutator(&t2[1]),
        t1[2].commutator(&t2[2]),
    ];
    if com.iter().all(FactorOp::is_zero) {
        return Ok(Vec::new());
    }
    let coeffs = express_in_canonical(kind, MatrixType::I, &com).ok_or(E8Error::ClosureViolation {
        i,
        j,
        detail: "diagonal bracket outside the canonical span",
    })?;
    Ok(canonical_coords_to_terms(f, &coeffs))
}

/// Case (e): diagonal elements on different factors. The slotwise tensor
/// commutator is computed entrywise and checked to vanish, not assumed to.
fn diag_diag_cross(
    pair: AlgebraPair,
    left: (DiagClass, usize),
    right: (DiagClass, usize),
    i: usize,
    j: usize,
) -> Result<Vec<(usize, Scalar)>, E8Error> {
    let tl = diag_tables(pair.left).realization(MatrixType::I, left.0, left.1);
    let tr = diag_tables(pair.right).realization(MatrixType::I, right.0, right.1);
    for slot in 0..3 {
        let a = &tl[slot].m;
        let b = &tr[slot].m;
        for si in 0..DIM {
            for ti in 0..DIM {
                let av = a.at(si, ti);
                if av.is_zero() {
                    continue;
                }
                for p in 0..DIM {
                    for q in 0..DIM {
                        let bv = b.at(p, q);
                        if bv.is_zero() {
                            continue;
                        }
                        // ((a (x) Id)(Id (x) b) - (Id (x) b)(a (x) Id)) at
                        // ((si,p),(ti,q)).
                        if !(av * bv - bv * av).is_zero() {
                            return Err(E8Error::ClosureViolation {
                                i,
                                j,
                                detail: "cross-factor diagonal bracket nonzero",
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(Vec::new())
}

/// Bracket of two basis elements, as sparse terms over the basis.
pub fn bracket_basis(
    pair: AlgebraPair,
    i: usize,
    j: usize,
) -> Result<Vec<(usize, Scalar)>, E8Error> {
    if i == j {
        return Ok(Vec::new());
    }
    let negate = |terms: Vec<(usize, Scalar)>| {
        terms
            .into_iter()
            .map(|(k, c)| (k, -c))
            .collect::<Vec<_>>()
    };
    match (basis_label(i), basis_label(j)) {
        (BasisLabel::Off { t: t1, s: s1, p: p1 }, BasisLabel::Off { t: t2, s: s2, p: p2 }) => {
            if t1 == t2 {
                same_type_bracket(pair, t1, s1, p1, s2, p2, i, j)
            } else if t2 == t1.next() {
                Ok(cross_bracket(pair, s1, p1, t2, s2, p2))
            } else {
                Ok(negate(cross_bracket(pair, s2, p2, t1, s1, p1)))
            }
        }
        (BasisLabel::Diag { f, class, u }, BasisLabel::Off { t, s, p }) => {
            diag_off_bracket(pair, f, class, u, t, s, p, i, j)
        }
        (BasisLabel::Off { t, s, p }, BasisLabel::Diag { f, class, u }) => {
            Ok(negate(diag_off_bracket(pair, f, class, u, t, s, p, j, i)?))
        }
        (
            BasisLabel::Diag { f: f1, class: c1, u: u1 },
            BasisLabel::Diag { f: f2, class: c2, u: u2 },
        ) => {
            if f1 == f2 {
                diag_diag_same(pair, f1, c1, u1, c2, u2, i, j)
            } else if f1 == Factor::Left {
                diag_diag_cross(pair, (c1, u1), (c2, u2), i, j)
            } else {
                diag_diag_cross(pair, (c2, u2), (c1, u1), j, i)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Structure constants.

/// Complete sparse bracket table over the 248 basis elements, with an
/// integer fast path (all constants times 6) for the exhaustive sweeps.
pub struct StructureConstants {
    pub pair: AlgebraPair,
    rows: Vec<Vec<(usize, Scalar)>>,
    fast: Vec<Vec<(u32, i64)>>,
}

fn x6(v: &Scalar) -> i64 {
    let six = v * s(6);
    assert!(six.is_integer(), "structure constant denominator exceeds 6");
    six.numer().to_i64().expect("structure constant overflow")
}

pub fn build_structure_constants(pair: AlgebraPair) -> Result<StructureConstants, E8Error> {
    let n = E8_DIM;
    let mut rows = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in i + 1..n {
            let terms = bracket_basis(pair, i, j)?;
            rows[j * n + i] = terms.iter().map(|(k, c)| (*k, -c)).collect();
            rows[i * n + j] = terms;
        }
    }
    let fast = rows
        .iter()
        .map(|row| row.iter().map(|(k, c)| (*k as u32, x6(c))).collect())
        .collect();
    Ok(StructureConstants { pair, rows, fast })
}

/// Cached tables, one per algebra pair.
pub fn structure_constants(pair: AlgebraPair) -> &'static StructureConstants {
    static TABLES: [OnceLock<StructureConstants>; 4] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let slot = (pair.left == AlgebraKind::Split) as usize * 2
        + (pair.right == AlgebraKind::Split) as usize;
    TABLES[slot].get_or_init(|| build_structure_constants(pair).expect("bracket closes on the basis"))
}

impl StructureConstants {
    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.rows[i * E8_DIM + j]
    }

    pub fn basis_name(&self, i: usize) -> String {
        basis_label(i).name(self.pair)
    }

    pub fn bracket_elements(&self, x: &[Scalar], y: &[Scalar]) -> E8Element {
        let mut out = vec![Scalar::zero(); E8_DIM];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (k, c) in self.bracket(i, j) {
                    out[*k] += xi * yj * c;
                }
            }
        }
        out
    }

    /// Total number of nonzero (ordered) bracket entries.
    pub fn nonzero_entries(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}

// ---------------------------------------------------------------------------
// Sweeps: Jacobi, Killing form and its invariance.

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub suite: &'static str,
    pub attempted: u64,
    pub defects: u64,
    pub first_failure: Option<(usize, usize, usize)>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.defects == 0
    }
}

/// Exhaustive Jacobi sweep over all unordered basis triples, on the scaled
/// integer table.
pub fn verify_jacobi(sc: &StructureConstants) -> SweepReport {
    let start = Instant::now();
    let n = E8_DIM;
    let mut acc = vec![0i64; n];
    let mut touched: Vec<usize> = Vec::with_capacity(128);
    let mut attempted = 0u64;
    let mut defects = 0u64;
    let mut first_failure = None;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                attempted += 1;
                for (p, q, r) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for &(m, c1) in &sc.fast[p * n + q] {
                        for &(t, c2) in &sc.fast[m as usize * n + r] {
                            let e = &mut acc[t as usize];
                            if *e == 0 {
                                touched.push(t as usize);
                            }
                            *e += c1 * c2;
                        }
                    }
                }
                let mut ok = true;
                for &t in &touched {
                    if acc[t] != 0 {
                        ok = false;
                    }
                    acc[t] = 0;
                }
                touched.clear();
                if !ok {
                    defects += 1;
                    first_failure.get_or_insert((i, j, k));
                }
            }
        }
    }
    SweepReport {
        suite: "jacobi",
        attempted,
        defects,
        first_failure,
        elapsed: start.elapsed(),
    }
}

/// The Killing matrix with exact entries, kept alongside its scaled integer
/// image for the invariance sweep.
pub struct KillingMatrix {
    pub m: Mat,
    k36: Vec<i64>,
}

impl KillingMatrix {
    /// Exact signature `(n_plus, n_minus, n_zero)` by symmetric congruence.
    pub fn signature(&self) -> (usize, usize, usize) {
        self.m.signature()
    }

    pub fn index(&self) -> i64 {
        let (np, nm, _) = self.signature();
        np as i64 - nm as i64
    }
}

pub fn killing_form(sc: &StructureConstants) -> KillingMatrix {
    let n = E8_DIM;
    let mut k36 = vec![0i64; n * n];
    for i in 0..n {
        for j in i..n {
            let mut acc = 0i64;
            for k in 0..n {
                // K_ij = sum_{k,l} c_ik^l c_jl^k.
                for &(l, c1) in &sc.fast[i * n + k] {
                    for &(t, c2) in &sc.fast[j * n + l as usize] {
                        if t as usize == k {
                            acc += c1 * c2;
                        }
                    }
                }
            }
            k36[i * n + j] = acc;
            k36[j * n + i] = acc;
        }
    }
    let mut m = Mat::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            if k36[r * n + c] != 0 {
                *m.at_mut(r, c) = Scalar::new(k36[r * n + c].into(), 36.into());
            }
        }
    }
    KillingMatrix { m, k36 }
}

/// Ad-invariance `K([x_i,x_j],x_k) + K(x_j,[x_i,x_k]) = 0` over all ordered
/// basis triples, on the scaled integer data.
pub fn verify_killing_invariance(sc: &StructureConstants, k: &KillingMatrix) -> SweepReport {
    let start = Instant::now();
    let n = E8_DIM;
    let mut attempted = 0u64;
    let mut defects = 0u64;
    let mut first_failure = None;
    for i in 0..n {
        for j in 0..n {
            let row_ij = &sc.fast[i * n + j];
            for l in 0..n {
                attempted += 1;
                let mut acc = 0i64;
                for &(m, c) in row_ij {
                    acc += c * k.k36[m as usize * n + l];
                }
                for &(m, c) in &sc.fast[i * n + l] {
                    acc += c * k.k36[j * n + m as usize];
                }
                if acc != 0 {
                    defects += 1;
                    first_failure.get_or_insert((i, j, l));
                }
            }
        }
    }
    SweepReport {
        suite: "killing-invariance",
        attempted,
        defects,
        first_failure,
        elapsed: start.elapsed(),
    }
}

// ---------------------------------------------------------------------------
// Subalgebra machinery.

/// Adjoint matrix of a general element.
pub fn ad_matrix(sc: &StructureConstants, x: &[Scalar]) -> Mat {
    let n = E8_DIM;
    let mut m = Mat::zeros(n, n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for j in 0..n {
            for (k, c) in sc.bracket(i, j) {
                *m.at_mut(*k, j) += xi * c;
            }
        }
    }
    m
}

/// Closes a generating set under the bracket; returns an echelonized basis.
pub fn subalgebra_closure(sc: &StructureConstants, generators: &[E8Element]) -> Vec<E8Element> {
    let mut span = Span::new(E8_DIM);
    let mut members: Vec<E8Element> = Vec::new();
    let mut work: Vec<E8Element> = generators.to_vec();
    while let Some(v) = work.pop() {
        if !span.insert(v.clone()) {
            continue;
        }
        for b in &members {
            let w = sc.bracket_elements(&v, b);
            if !span.contains(&w) {
                work.push(w);
            }
        }
        members.push(v);
    }
    span.basis().to_vec()
}

/// Elements commuting with every member of `sub`, by iterated null-space
/// intersection of the ad-maps.
pub fn centralizer(sc: &StructureConstants, sub: &[E8Element]) -> Vec<E8Element> {
    let mut cur: Vec<E8Element> = (0..E8_DIM).map(basis_vector).collect();
    for g in sub {
        if cur.is_empty() {
            break;
        }
        let mut m = Mat::zeros(E8_DIM, cur.len());
        for (j, c) in cur.iter().enumerate() {
            let img = sc.bracket_elements(g, c);
            for (r, v) in img.into_iter().enumerate() {
                *m.at_mut(r, j) = v;
            }
        }
        let ns = m.null_space();
        cur = ns
            .iter()
            .map(|coef| {
                let mut v = vec![Scalar::zero(); E8_DIM];
                for (ci, co) in coef.iter().enumerate() {
                    if co.is_zero() {
                        continue;
                    }
                    for (r, x) in cur[ci].iter().enumerate() {
                        if !x.is_zero() {
                            v[r] += co * x;
                        }
                    }
                }
                v
            })
            .collect();
    }
    let mut span = Span::new(E8_DIM);
    for v in cur {
        span.insert(v);
    }
    span.basis().to_vec()
}

fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

fn combine(coef: &[Scalar], basis: &[E8Element]) -> E8Element {
    let mut v = vec![Scalar::zero(); E8_DIM];
    for (ci, co) in coef.iter().enumerate() {
        if co.is_zero() {
            continue;
        }
        for (r, x) in basis[ci].iter().enumerate() {
            if !x.is_zero() {
                v[r] += co * x;
            }
        }
    }
    v
}

/// Matrix of `ad(x)` restricted to an invariant subspace, in the given basis.
pub fn restrict_ad(
    sc: &StructureConstants,
    x: &[Scalar],
    basis: &[E8Element],
) -> Result<Mat, E8Error> {
    let solver = SpanSolver::new(basis.iter().map(|b| to_sparse(b)).collect())?;
    let d = basis.len();
    let mut m = Mat::zeros(d, d);
    for (j, b) in basis.iter().enumerate() {
        let img = sc.bracket_elements(x, b);
        let coeffs = solver
            .express(&to_sparse(&img))
            .ok_or(E8Error::NotInvariant)?;
        for (i, c) in coeffs.into_iter().enumerate() {
            *m.at_mut(i, j) = c;
        }
    }
    Ok(m)
}

/// Simultaneous rational eigenspace decomposition of the ad-actions of
/// pairwise-commuting elements on an invariant subspace. Blocks are labeled
/// by their eigenvalue tuples, sorted.
pub fn simultaneous_eigenspaces(
    sc: &StructureConstants,
    elements: &[E8Element],
    space: &[E8Element],
) -> Result<Vec<(Vec<Scalar>, Vec<E8Element>)>, E8Error> {
    for (a, x) in elements.iter().enumerate() {
        for y in &elements[a + 1..] {
            if sc.bracket_elements(x, y).iter().any(|c| !c.is_zero()) {
                return Err(E8Error::NonCommuting);
            }
        }
    }
    let mut blocks: Vec<(Vec<Scalar>, Vec<E8Element>)> = vec![(Vec::new(), space.to_vec())];
    for x in elements {
        let mut next = Vec::new();
        for (vals, basis) in blocks {
            if basis.is_empty() {
                continue;
            }
            let restricted = restrict_ad(sc, x, &basis)?;
            for (lam, vecs) in rational_eigenspaces(&restricted)? {
                let ambient: Vec<E8Element> = vecs.iter().map(|v| combine(v, &basis)).collect();
                let mut key = vals.clone();
                key.push(lam);
                next.push((key, ambient));
            }
        }
        blocks = next;
    }
    blocks.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    Ok(blocks)
}

/// Restriction of a symmetric form to a subspace basis: `B^T K B`.
pub fn restrict_form(k: &Mat, basis: &[E8Element]) -> Mat {
    let d = basis.len();
    let mut out = Mat::zeros(d, d);
    // Precompute K b_j once per column.
    let images: Vec<Vec<Scalar>> = basis.iter().map(|b| k.mul_vec(b)).collect();
    for i in 0..d {
        for j in i..d {
            let mut acc = Scalar::zero();
            for (r, x) in basis[i].iter().enumerate() {
                if !x.is_zero() && !images[j][r].is_zero() {
                    acc += x * &images[j][r];
                }
            }
            *out.at_mut(i, j) = acc.clone();
            *out.at_mut(j, i) = acc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::albert::{com_action, offdiag_mat, ADIM};

    const PAIR: AlgebraPair = AlgebraPair::HALF_SPLIT;

    fn sc() -> &'static StructureConstants {
        structure_constants(PAIR)
    }

    fn term(i: usize, c: i64) -> Vec<(usize, Scalar)> {
        vec![(i, s(c))]
    }

    #[test]
    fn basis_index_roundtrip_and_names() {
        let names = basis_names(PAIR);
        assert_eq!(names.len(), E8_DIM);
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), E8_DIM, "duplicate basis names");
        for i in 0..E8_DIM {
            assert_eq!(basis_label(i).index(), i);
        }
        assert_eq!(names[off_index(OffType::X, 0, 0)], "X[1*1]");
        assert_eq!(names[off_index(OffType::Z, 7, 1)], "Z[L*i]");
        assert_eq!(names[diag_index(Factor::Left, DiagClass::A, 7)], "A'[L]");
        assert_eq!(names[diag_index(Factor::Right, DiagClass::D, 1)], "D[i]");
    }

    #[test]
    fn paper_example_brackets() {
        let sc = sc();
        // [X_{1(x)1}, X_{1(x)i}] = 2 D_i.
        assert_eq!(
            sc.bracket(off_index(OffType::X, 0, 0), off_index(OffType::X, 0, 1)),
            &term(diag_index(Factor::Right, DiagClass::D, 1), 2)[..]
        );
        // [X_{1(x)i}, Y_{1(x)j}] = Z_{1(x)k}.
        assert_eq!(
            sc.bracket(off_index(OffType::X, 0, 1), off_index(OffType::Y, 0, 2)),
            &term(off_index(OffType::Z, 0, 3), 1)[..]
        );
        // [D_i, D'_L] = 0 (different factors commute).
        assert!(sc
            .bracket(
                diag_index(Factor::Right, DiagClass::D, 1),
                diag_index(Factor::Left, DiagClass::D, 7)
            )
            .is_empty());
        // [X_{L(x)1}, D'_L] = -2 X_{1(x)1}: the split sign flip.
        assert_eq!(
            sc.bracket(
                off_index(OffType::X, 7, 0),
                diag_index(Factor::Left, DiagClass::D, 7)
            ),
            &term(off_index(OffType::X, 0, 0), -2)[..]
        );
        // [D_i, D_j] = 2 D_{i,j} in canonical coordinates.
        let expect = double_element(PAIR, Factor::Right, MatrixType::I, 1, 2);
        let got = from_terms(sc.bracket(
            diag_index(Factor::Right, DiagClass::D, 1),
            diag_index(Factor::Right, DiagClass::D, 2),
        ));
        let half = Scalar::new(1.into(), 2.into());
        assert_eq!(got.iter().map(|c| c * &half).collect::<Vec<_>>(), expect);
    }

    #[test]
    fn single_elements_match_basis() {
        for f in Factor::ALL {
            for u in 1..DIM {
                assert_eq!(
                    single_element(PAIR, f, MatrixType::I, u),
                    basis_vector(diag_index(f, DiagClass::D, u))
                );
            }
        }
    }

    /// The so(9) generator family over one factor: X_1, the seven X_p, the
    /// seven D_p, and the 21 nested D_{p,q}, with the expected bracket of
    /// every unordered pair. `sq(p)` is the square of unit p in the factor.
    fn so9_exhaustive(f: Factor) {
        let sc = sc();
        let kind = PAIR.kind(f);
        let off = |u: usize| -> E8Element {
            match f {
                Factor::Left => basis_vector(off_index(OffType::X, u, 0)),
                Factor::Right => basis_vector(off_index(OffType::X, 0, u)),
            }
        };
        let diag = |u: usize| basis_vector(diag_index(f, DiagClass::D, u));
        let dd = |u: usize, v: usize| double_element(PAIR, f, MatrixType::I, u, v);
        let sq = |u: usize| s(crate::algebra::unit_square(kind, u) as i64);

        #[derive(Clone)]
        enum G {
            X1,
            Xp(usize),
            Dp(usize),
            Dpq(usize, usize),
        }
        let mut gens: Vec<(G, E8Element)> = vec![(G::X1, off(0))];
        for p in 1..DIM {
            gens.push((G::Xp(p), off(p)));
        }
        for p in 1..DIM {
            gens.push((G::Dp(p), diag(p)));
        }
        for p in 1..DIM {
            for q in p + 1..DIM {
                gens.push((G::Dpq(p, q), dd(p, q)));
            }
        }
        assert_eq!(gens.len(), 36);
        let scale = |v: &E8Element, k: &Scalar| -> E8Element { v.iter().map(|x| x * k).collect() };
        let bracket = |x: &E8Element, y: &E8Element| sc.bracket_elements(x, y);
        let zero = vec![Scalar::zero(); E8_DIM];
        for (ai, (ga, va)) in gens.iter().enumerate() {
            for (gb, vb) in gens.iter().skip(ai + 1) {
                let got = bracket(va, vb);
                let want: E8Element = match (ga, gb) {
                    (G::X1, G::Xp(p)) => scale(&diag(*p), &s(2)),
                    (G::X1, G::Dp(p)) => scale(&off(*p), &s(-2)),
                    (G::X1, G::Dpq(_, _)) => zero.clone(),
                    (G::Xp(p), G::Xp(q)) => scale(&dd(*p, *q), &s(2)),
                    (G::Xp(p), G::Dp(q)) => {
                        if p == q {
                            // [X_p, D_p] = -2 p^2 X_1.
                            scale(&off(0), &(s(-2) * sq(*p)))
                        } else {
                            zero.clone()
                        }
                    }
                    (G::Xp(p), G::Dpq(u, v)) => {
                        // [X_p, D_{p,q}] = 2 p^2 X_q.
                        if p == u {
                            scale(&off(*v), &(s(2) * sq(*p)))
                        } else if p == v {
                            // D_{u,p} = -D_{p,u}.
                            scale(&off(*u), &(s(-2) * sq(*p)))
                        } else {
                            zero.clone()
                        }
                    }
                    (G::Dp(p), G::Dp(q)) => scale(&dd(*p, *q), &s(2)),
                    (G::Dp(p), G::Dpq(u, v)) => {
                        // [D_p, D_{p,q}] = 2 p^2 D_q.
                        if p == u {
                            scale(&diag(*v), &(s(2) * sq(*p)))
                        } else if p == v {
                            scale(&diag(*u), &(s(-2) * sq(*p)))
                        } else {
                            zero.clone()
                        }
                    }
                    (G::Dpq(u1, v1), G::Dpq(u2, v2)) => {
                        // [D_{q,p}, D_{p,r}] = 2 p^2 D_{q,r} with the shared
                        // index contracted; disjoint pairs commute.
                        let shared: Vec<usize> = [*u1, *v1]
                            .iter()
                            .filter(|x| [*u2, *v2].contains(x))
                            .copied()
                            .collect();
                        match shared.len() {
                            0 | 2 => zero.clone(),
                            _ => {
                                let p = shared[0];
                                let q = if *u1 == p { *v1 } else { *u1 };
                                let r = if *u2 == p { *v2 } else { *u2 };
                                // Orient: stored pairs are (u,v); signs from
                                // antisymmetry D_{a,b} = -D_{b,a}.
                                let sign_a = if *v1 == p { s(1) } else { s(-1) }; // D_{q,p} vs D_{p,q}
                                let sign_b = if *u2 == p { s(1) } else { s(-1) };
                                scale(&dd(q, r), &(s(-2) * sq(p) * sign_a * sign_b * s(-1)))
                            }
                        }
                    }
                    _ => unreachable!(),
                };
                assert_eq!(got, want, "{:?} so(9) bracket failed", kind);
            }
        }
    }

    #[test]
    fn so9_commutator_list_division_factor() {
        so9_exhaustive(Factor::Right);
    }

    #[test]
    fn so9_commutator_list_split_factor_signs() {
        so9_exhaustive(Factor::Left);
    }

    #[test]
    fn xyz_rule_all_label_pairs() {
        let sc = sc();
        for (t1, t2) in [
            (OffType::X, OffType::Y),
            (OffType::Y, OffType::Z),
            (OffType::Z, OffType::X),
        ] {
            let t3 = t2.next();
            for su1 in 0..DIM {
                for pu1 in 0..DIM {
                    for su2 in 0..DIM {
                        for pu2 in 0..DIM {
                            let got =
                                sc.bracket(off_index(t1, su1, pu1), off_index(t2, su2, pu2));
                            // -conj(a b) over the tensor algebra.
                            let (gl, s3) = unit_product(PAIR.left, su1, su2);
                            let (gr, p3) = unit_product(PAIR.right, pu1, pu2);
                            let sign =
                                -(gl as i64) * (gr as i64) * conj_sign(s3) * conj_sign(p3);
                            assert_eq!(got, &term(off_index(t3, s3, p3), sign)[..]);
                        }
                    }
                }
            }
        }
    }

    /// The f4 generators over the division factor act on the 27-dimensional
    /// representation; the bracket table must agree with operator
    /// commutators there, exhaustively.
    #[test]
    fn f4_brackets_match_albert_ground_truth() {
        let sc = sc();
        let kind = PAIR.right;
        let tables = diag_tables(kind);
        // Index -> operator image for the 52 f4 basis elements.
        let mut ops: Vec<Option<Mat>> = vec![None; E8_DIM];
        let mut f4: Vec<usize> = Vec::new();
        for class in DiagClass::ALL {
            for u in 1..DIM {
                let i = diag_index(Factor::Right, class, u);
                ops[i] = Some(tables.op(class, u).clone());
                f4.push(i);
            }
        }
        for t in OffType::ALL {
            for p in 0..DIM {
                let i = off_index(t, 0, p);
                ops[i] = Some(com_action(&offdiag_mat(
                    kind,
                    t.matrix_type(),
                    &Element::unit(kind, p),
                )));
                f4.push(i);
            }
        }
        assert_eq!(f4.len(), 52);
        let image = |terms: &[(usize, Scalar)]| -> Mat {
            let mut acc = Mat::zeros(ADIM, ADIM);
            for (k, c) in terms {
                let op = ops[*k].as_ref().unwrap_or_else(|| {
                    panic!("bracket left f4: hit {}", sc.basis_name(*k))
                });
                acc = acc.add(&op.scale(c));
            }
            acc
        };
        for (ai, &i) in f4.iter().enumerate() {
            for &j in f4.iter().skip(ai + 1) {
                let got = image(sc.bracket(i, j));
                let want = ops[i].as_ref().unwrap().commutator(ops[j].as_ref().unwrap());
                assert_eq!(
                    got,
                    want,
                    "[{}, {}] disagrees with the 27-dim action",
                    sc.basis_name(i),
                    sc.basis_name(j)
                );
            }
        }
    }

    #[test]
    fn jacobi_spot_check() {
        let sc = sc();
        // Deterministic pseudo-random triples.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % E8_DIM as u64) as usize
        };
        let n = E8_DIM;
        for _ in 0..20_000 {
            let (i, j, k) = (next(), next(), next());
            let mut acc = vec![0i64; n];
            for (p, q, r) in [(i, j, k), (j, k, i), (k, i, j)] {
                for &(m, c1) in &sc.fast[p * n + q] {
                    for &(t, c2) in &sc.fast[m as usize * n + r] {
                        acc[t as usize] += c1 * c2;
                    }
                }
            }
            assert!(acc.iter().all(|&v| v == 0), "jacobi fails at ({i},{j},{k})");
        }
    }

    #[test]
    fn killing_signature_and_compactness() {
        let sc = sc();
        let k = killing_form(sc);
        assert_eq!(k.m, k.m.transpose());
        let (np, nm, nz) = k.signature();
        assert_eq!((np + nm + nz), E8_DIM);
        assert_eq!(nz, 0);
        assert_eq!(np as i64 - nm as i64, -24);
        // K(b,b) < 0 exactly for generators without an L-bearing split unit.
        for i in 0..E8_DIM {
            let compact = match basis_label(i) {
                BasisLabel::Off { s, .. } => s < 4,
                BasisLabel::Diag { f, u, .. } => f == Factor::Right || u < 4,
            };
            let diag = k.m.at(i, i);
            assert!(
                if compact {
                    diag < &Scalar::zero()
                } else {
                    diag > &Scalar::zero()
                },
                "K({0},{0}) = {1} for {2}",
                i,
                diag,
                sc.basis_name(i)
            );
        }
    }

    #[test]
    fn ad_matrices_are_traceless() {
        let sc = sc();
        for i in 0..E8_DIM {
            let mut tr = Scalar::zero();
            for j in 0..E8_DIM {
                for (k, c) in sc.bracket(i, j) {
                    if *k == j {
                        tr += c;
                    }
                }
            }
            assert!(tr.is_zero(), "trace ad({}) != 0", sc.basis_name(i));
        }
        let ad = ad_matrix(sc, &basis_vector(0));
        assert_eq!(ad.rows, E8_DIM);
    }

    #[test]
    fn closure_and_centralizer_basics() {
        let sc = sc();
        // A single diagonal element is an abelian subalgebra.
        let one = subalgebra_closure(sc, &[basis_vector(diag_index(Factor::Right, DiagClass::D, 1))]);
        assert_eq!(one.len(), 1);
        // The trivial subspace centralizes everything.
        assert_eq!(centralizer(sc, &[]).len(), E8_DIM);
        // Nothing centralizes the whole algebra (trivial center).
        let whole: Vec<E8Element> = (0..E8_DIM).map(basis_vector).collect();
        assert_eq!(centralizer(sc, &whole).len(), 0);
    }

    #[test]
    fn eigenspace_of_element_on_own_span() {
        let sc = sc();
        let x = basis_vector(diag_index(Factor::Left, DiagClass::G, 7));
        let blocks = simultaneous_eigenspaces(sc, &[x.clone()], &[x.clone()]).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].0, vec![Scalar::zero()]);
    }
}
