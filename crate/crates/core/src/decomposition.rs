//! Extraction of e6(-26) and its sl(3,R) centralizer from the half-split
//! form, the split of the 162-dimensional complement into six labeled
//! 27-dimensional Albert copies, the equivalence of the bracket action with
//! the classical Jordan-algebra action, and the magic-square survey.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::albert::{
    anticom_action, com_action, diag_mat, diag_tables, offdiag_mat, s_mat, slot_block, DiagClass,
    Mat3, MatrixType, ADIM,
};
use crate::algebra::{subalgebra_mask, AlgebraKind, Element, DIM};
use crate::e8::{
    basis_label, basis_vector, diag_index, off_index, AlgebraPair, BasisLabel, E8Element, E8Error,
    Factor, KillingMatrix, OffType, StructureConstants, E8_DIM,
};
use crate::linalg::{LinalgError, Mat, Span, SpanSolver, SparseVec};
use crate::scalar::{s, sr, Scalar};

#[derive(Debug, Error)]
pub enum DecompError {
    #[error("decomposition requires the split x division form")]
    UnsupportedForm,
    #[error("action equivalence fails for generator {g} on albert basis element {p}")]
    EquivalenceFailure { g: usize, p: usize },
    #[error("no generator sign assignment matches the explicit sl(3,R) matrices")]
    IsomorphismFailure,
    #[error("covariance violation: [{g}, block {block}] leaves its dual class")]
    CovarianceViolation { g: usize, block: usize },
    #[error("complement does not split into six labeled 27-dimensional blocks")]
    BadComplement,
    #[error(transparent)]
    E8(#[from] E8Error),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn require_half_split(sc: &StructureConstants) -> Result<(), DecompError> {
    if sc.pair == AlgebraPair::HALF_SPLIT {
        Ok(())
    } else {
        Err(DecompError::UnsupportedForm)
    }
}

/// Basis indices of the 78 e6(-26) generators: the 28 division-factor
/// diagonals, 24 rotations X/Y/Z with unit split label, 24 boosts with split
/// label L, and the split-factor D_L and S_L.
pub fn e6_generator_indices() -> Vec<usize> {
    let mut out = Vec::with_capacity(78);
    for class in DiagClass::ALL {
        for u in 1..DIM {
            out.push(diag_index(Factor::Right, class, u));
        }
    }
    for t in OffType::ALL {
        for p in 0..DIM {
            out.push(off_index(t, 0, p));
        }
    }
    for t in OffType::ALL {
        for p in 0..DIM {
            out.push(off_index(t, 7, p));
        }
    }
    out.push(diag_index(Factor::Left, DiagClass::D, 7));
    out.push(diag_index(Factor::Left, DiagClass::S, 7));
    out
}

pub fn e6_generators(sc: &StructureConstants) -> Result<Vec<E8Element>, DecompError> {
    require_half_split(sc)?;
    Ok(e6_generator_indices().into_iter().map(basis_vector).collect())
}

/// Basis indices of the sl(3,R) centralizer generators: the seven split
/// A-family elements plus G_L.
pub fn sl3r_generator_indices() -> Vec<usize> {
    let mut out: Vec<usize> = (1..DIM)
        .map(|u| diag_index(Factor::Left, DiagClass::A, u))
        .collect();
    out.push(diag_index(Factor::Left, DiagClass::G, 7));
    out
}

pub fn sl3r_generators(sc: &StructureConstants) -> Result<Vec<E8Element>, DecompError> {
    require_half_split(sc)?;
    Ok(sl3r_generator_indices().into_iter().map(basis_vector).collect())
}

// ---------------------------------------------------------------------------
// Appendix-style explicit sl(3,R) matrices over the split complexes.

fn c_elem(re: i64, l: i64) -> Element {
    let mut e = Element::zero(AlgebraKind::Split);
    e.c[0] = s(re);
    e.c[7] = s(l);
    e
}

fn mat3_from(entries: [[Element; 3]; 3]) -> Mat3 {
    Mat3 {
        kind: AlgebraKind::Split,
        e: entries,
    }
}

/// The eight explicit 3x3 matrices over the split complexes representing
/// half the sl(3,R) generators, in the order of `sl3r_generator_indices`
/// (A_I, A_J, A_K, A_KL, A_JL, A_IL, A_L, G_L).
pub fn sl3r_matrices() -> Vec<Mat3> {
    let z = || c_elem(0, 0);
    let r = |v: i64| c_elem(v, 0);
    let l = |v: i64| c_elem(0, v);
    vec![
        // 1/2 A_I
        mat3_from([
            [z(), z(), z()],
            [z(), z(), r(-1)],
            [z(), r(1), z()],
        ]),
        // 1/2 A_J
        mat3_from([
            [z(), z(), r(1)],
            [z(), z(), z()],
            [r(-1), z(), z()],
        ]),
        // 1/2 A_K
        mat3_from([
            [z(), r(-1), z()],
            [r(1), z(), z()],
            [z(), z(), z()],
        ]),
        // 1/2 A_KL
        mat3_from([
            [z(), l(1), z()],
            [l(1), z(), z()],
            [z(), z(), z()],
        ]),
        // 1/2 A_JL
        mat3_from([
            [z(), z(), l(1)],
            [z(), z(), z()],
            [l(1), z(), z()],
        ]),
        // 1/2 A_IL
        mat3_from([
            [z(), z(), z()],
            [z(), z(), l(1)],
            [z(), l(1), z()],
        ]),
        // 1/2 A_L
        mat3_from([
            [l(1), z(), z()],
            [z(), l(-1), z()],
            [z(), z(), z()],
        ]),
        // 1/2 G_L
        mat3_from([
            [l(1), z(), z()],
            [z(), l(1), z()],
            [z(), z(), l(-2)],
        ]),
    ]
}

#[derive(Clone, Debug)]
pub struct AppendixBReport {
    /// Per-generator sign epsilon_k such that g_k <-> 2 epsilon_k M_k is a
    /// Lie algebra isomorphism onto the matrix algebra.
    pub signs: Vec<i64>,
    pub pairs_checked: usize,
}

fn mat3_scale_add(acc: &mut Mat3, m: &Mat3, k: &Scalar) {
    *acc = acc.add(&m.scale(k));
}

/// Verifies the explicit matrices realize the extracted sl(3,R) structure
/// constants: finds signs epsilon with
/// `sum_k c_ab^k eps_k M_k = 2 eps_a eps_b [M_a, M_b]` for all pairs.
pub fn appendix_b_check(sc: &StructureConstants) -> Result<AppendixBReport, DecompError> {
    require_half_split(sc)?;
    let idx = sl3r_generator_indices();
    let mats = sl3r_matrices();
    let cols: Vec<SparseVec> = idx
        .iter()
        .map(|&i| {
            let mut v = SparseVec::new();
            v.insert(i, Scalar::one());
            v
        })
        .collect();
    let solver = SpanSolver::new(cols)?;
    // Structure constants of the 8 generators in their own span.
    let mut c = vec![vec![Vec::new(); 8]; 8];
    for a in 0..8 {
        for b in a + 1..8 {
            let img = sc.bracket_elements(&basis_vector(idx[a]), &basis_vector(idx[b]));
            let mut t = SparseVec::new();
            for (i, v) in img.into_iter().enumerate() {
                if !v.is_zero() {
                    t.insert(i, v);
                }
            }
            c[a][b] = solver.express(&t).ok_or(DecompError::IsomorphismFailure)?;
        }
    }
    'signs: for mask in 0u32..256 {
        let eps: Vec<i64> = (0..8).map(|k| if mask & (1 << k) != 0 { -1 } else { 1 }).collect();
        let mut checked = 0;
        for a in 0..8 {
            for b in a + 1..8 {
                let mut lhs = Mat3::zero(AlgebraKind::Split);
                for (k, ck) in c[a][b].iter().enumerate() {
                    if !ck.is_zero() {
                        mat3_scale_add(&mut lhs, &mats[k], &(ck * s(eps[k])));
                    }
                }
                let rhs = mats[a].commutator(&mats[b]).scale(&s(2 * eps[a] * eps[b]));
                if lhs != rhs {
                    continue 'signs;
                }
                checked += 1;
            }
        }
        return Ok(AppendixBReport {
            signs: eps,
            pairs_checked: checked,
        });
    }
    Err(DecompError::IsomorphismFailure)
}

// ---------------------------------------------------------------------------
// The six Albert blocks.

#[derive(Clone, Debug)]
pub struct AlbertBlock {
    /// The null split-octonion label, one of (u +- uL)/2 for u in {I, J, K}.
    pub q: Element,
    /// Joint (ad A_L, ad G_L) eigenvalues of the block.
    pub eig: [Scalar; 2],
    pub basis: Vec<E8Element>,
    /// +1 when L Q = Q (the "27" class), -1 when L Q = -Q.
    pub sigma: i64,
}

#[derive(Debug)]
pub struct E6Decomposition {
    pub e6: Vec<usize>,
    pub sl3: Vec<usize>,
    pub blocks: Vec<AlbertBlock>,
}

/// The derivation (slot-I) action of a split diagonal generator on the
/// 8-dimensional factor; for the A and G families this is type-independent.
pub fn derivation_action(kind: AlgebraKind, class: DiagClass, u: usize) -> Mat {
    slot_block(diag_tables(kind).op(class, u), MatrixType::I)
}

/// The six candidate labels (u +- uL)/2 with uL the product unit, paired
/// with their joint eigenvalues under the A_L and G_L derivations.
fn candidate_labels() -> Vec<(Element, [Scalar; 2])> {
    let kind = AlgebraKind::Split;
    let ma = derivation_action(kind, DiagClass::A, 7);
    let mg = derivation_action(kind, DiagClass::G, 7);
    let mut out = Vec::with_capacity(6);
    for u in 1..=3usize {
        for sign in [1i64, -1] {
            let mut q = Element::zero(kind);
            q.c[u] = sr(1, 2);
            q.c[7 - u] = sr(sign, 2);
            let eig = [&ma, &mg]
                .iter()
                .map(|m| {
                    let img = m.mul_vec(&q.c);
                    let lam = &img[u] / &q.c[u];
                    assert_eq!(
                        img,
                        q.c.iter().map(|x| x * &lam).collect::<Vec<_>>(),
                        "label is not a joint eigenvector"
                    );
                    lam
                })
                .collect::<Vec<_>>();
            out.push((q, [eig[0].clone(), eig[1].clone()]));
        }
    }
    out
}

/// The embedding m_Q of the 27 Albert basis elements (over the division
/// octonions) into the half-split algebra: off-diagonal P at slot t with
/// unit p lifts to the type-t element with label Q (x) p; tracefree diagonal
/// parts lift over D_Q and S_Q, and the identity component over -1/2 G_Q.
pub fn albert_embedding(q: &Element) -> Vec<E8Element> {
    assert_eq!(q.kind, AlgebraKind::Split);
    assert!(q.c[0].is_zero(), "label must be imaginary");
    let diag_lift = |class: DiagClass| -> E8Element {
        let mut v = vec![Scalar::zero(); E8_DIM];
        for k in 1..DIM {
            if !q.c[k].is_zero() {
                v[diag_index(Factor::Left, class, k)] = q.c[k].clone();
            }
        }
        v
    };
    let d_q = diag_lift(DiagClass::D);
    let s_q = diag_lift(DiagClass::S);
    let g_q = diag_lift(DiagClass::G);
    let mut out = Vec::with_capacity(ADIM);
    let third = sr(1, 3);
    for d in 0..3 {
        // Tracefree part of E_dd is diag(z) - I/3; the coefficients on the
        // D = diag(1,-1,0) and S = diag(1,1,-2) patterns are
        // alpha = (z1-z2)/2 and beta = -z3/2.
        let z: Vec<Scalar> = (0..3)
            .map(|r| if r == d { s(1) - &third } else { -third.clone() })
            .collect();
        let alpha = (&z[0] - &z[1]) * sr(1, 2);
        let beta = -&z[2] * sr(1, 2);
        let mut v = vec![Scalar::zero(); E8_DIM];
        for (r, src) in v.iter_mut().enumerate() {
            *src += &alpha * &d_q[r] + &beta * &s_q[r] - &third * sr(1, 2) * &g_q[r];
        }
        out.push(v);
    }
    for t in OffType::ALL {
        for p in 0..DIM {
            let mut v = vec![Scalar::zero(); E8_DIM];
            for k in 1..DIM {
                if !q.c[k].is_zero() {
                    v[off_index(t, k, p)] = q.c[k].clone();
                }
            }
            out.push(v);
        }
    }
    out
}

/// Classical 27-dimensional action of an e6 basis generator on the Albert
/// algebra over the division octonions: `(is_boost, operator)`.
fn classical_action(g: usize) -> Option<(bool, Mat)> {
    let kind = AlgebraKind::Division;
    match basis_label(g) {
        BasisLabel::Diag { f: Factor::Right, class, u } => {
            Some((false, diag_tables(kind).op(class, u).clone()))
        }
        BasisLabel::Off { t, s: 0, p } => Some((
            false,
            com_action(&offdiag_mat(kind, t.matrix_type(), &Element::unit(kind, p))),
        )),
        BasisLabel::Off { t, s: 7, p } => {
            // Hermitian counterpart of the off-diagonal value matrix.
            let (r, c) = t.matrix_type().slot();
            let mut m = Mat3::zero(kind);
            m.e[r][c] = Element::unit(kind, p);
            m.e[c][r] = Element::unit(kind, p).conj();
            Some((true, anticom_action(&m)))
        }
        BasisLabel::Diag { f: Factor::Left, class: DiagClass::D, u: 7 } => Some((
            true,
            anticom_action(&diag_mat(kind, MatrixType::I, &Element::unit(kind, 0))),
        )),
        BasisLabel::Diag { f: Factor::Left, class: DiagClass::S, u: 7 } => {
            Some((true, anticom_action(&s_mat(kind, &Element::unit(kind, 0)))))
        }
        _ => None,
    }
}

/// Checks, for every e6 generator and every Albert basis element, that the
/// bracket with the embedded element equals the embedded classical action:
/// the commutator for rotations, and a single sigma-signed anticommutator
/// for boosts. Returns sigma.
pub fn verify_action_equivalence(
    sc: &StructureConstants,
    q: &Element,
) -> Result<i64, DecompError> {
    require_half_split(sc)?;
    let m = albert_embedding(q);
    let mut sigma: Option<i64> = None;
    for g in e6_generator_indices() {
        let (is_boost, op) = classical_action(g).expect("e6 generator has a classical action");
        let gv = basis_vector(g);
        for p in 0..ADIM {
            let lhs = sc.bracket_elements(&gv, &m[p]);
            let mut rhs = vec![Scalar::zero(); E8_DIM];
            for k in 0..ADIM {
                let c = op.at(k, p);
                if c.is_zero() {
                    continue;
                }
                for (r, x) in m[k].iter().enumerate() {
                    if !x.is_zero() {
                        rhs[r] += c * x;
                    }
                }
            }
            if !is_boost {
                if lhs != rhs {
                    return Err(DecompError::EquivalenceFailure { g, p });
                }
                continue;
            }
            if rhs.iter().all(Zero::is_zero) {
                if lhs.iter().all(Zero::is_zero) {
                    continue;
                }
                return Err(DecompError::EquivalenceFailure { g, p });
            }
            let matches = |sgn: i64| -> bool {
                lhs.iter().zip(&rhs).all(|(a, b)| *a == b * s(sgn))
            };
            match sigma {
                Some(sg) => {
                    if !matches(sg) {
                        return Err(DecompError::EquivalenceFailure { g, p });
                    }
                }
                None => {
                    if matches(1) {
                        sigma = Some(1);
                    } else if matches(-1) {
                        sigma = Some(-1);
                    } else {
                        return Err(DecompError::EquivalenceFailure { g, p });
                    }
                }
            }
        }
    }
    sigma.ok_or(DecompError::BadComplement)
}

/// Runs the full decomposition: joint (ad A_L, ad G_L) eigenspaces of the
/// whole algebra, extraction and labeling of the six 27-dimensional blocks,
/// verification that each is spanned by the H_Q lift, and the sigma signs.
pub fn decompose(sc: &StructureConstants) -> Result<E6Decomposition, DecompError> {
    require_half_split(sc)?;
    let a_l = basis_vector(diag_index(Factor::Left, DiagClass::A, 7));
    let g_l = basis_vector(diag_index(Factor::Left, DiagClass::G, 7));
    let full: Vec<E8Element> = (0..E8_DIM).map(basis_vector).collect();
    let joint = crate::e8::simultaneous_eigenspaces(sc, &[a_l, g_l], &full)?;
    let mut labels = candidate_labels();
    let mut blocks = Vec::new();
    let mut small = 0usize;
    let mut kernel = 0usize;
    for (eig, basis) in joint {
        match basis.len() {
            27 => {
                let pos = labels
                    .iter()
                    .position(|(_, le)| le[..] == eig[..])
                    .ok_or(DecompError::BadComplement)?;
                let (q, le) = labels.swap_remove(pos);
                // The block must be spanned by the H_Q lift
                // {X_pQ, Y_pQ, Z_pQ, D_Q, S_Q, G_Q}.
                let mut span = Span::new(E8_DIM);
                for b in &basis {
                    span.insert(b.clone());
                }
                let m = albert_embedding(&q);
                let diag_lift = |class: DiagClass| -> E8Element {
                    let mut v = vec![Scalar::zero(); E8_DIM];
                    for k in 1..DIM {
                        if !q.c[k].is_zero() {
                            v[diag_index(Factor::Left, class, k)] = q.c[k].clone();
                        }
                    }
                    v
                };
                let mut lift: Vec<E8Element> = m[3..].to_vec();
                lift.push(diag_lift(DiagClass::D));
                lift.push(diag_lift(DiagClass::S));
                lift.push(diag_lift(DiagClass::G));
                let mut lift_span = Span::new(E8_DIM);
                for v in &lift {
                    if !lift_span.insert(v.clone()) {
                        return Err(DecompError::BadComplement);
                    }
                    if !span.contains(v) {
                        return Err(DecompError::BadComplement);
                    }
                }
                let sigma = verify_action_equivalence(sc, &q)?;
                // sigma = +1 exactly when L Q = Q.
                let lq = Element::unit(AlgebraKind::Split, 7).mul(&q);
                let expect = if lq == q {
                    1
                } else if lq == q.scale(&s(-1)) {
                    -1
                } else {
                    return Err(DecompError::BadComplement);
                };
                if sigma != expect {
                    return Err(DecompError::BadComplement);
                }
                blocks.push(AlbertBlock {
                    q,
                    eig: le,
                    basis,
                    sigma,
                });
            }
            1 => small += 1,
            _ => kernel += basis.len(),
        }
    }
    if blocks.len() != 6 || small != 6 || kernel != 80 {
        return Err(DecompError::BadComplement);
    }
    blocks.sort_by(|a, b| b.sigma.cmp(&a.sigma).then(a.eig.partial_cmp(&b.eig).unwrap()));
    Ok(E6Decomposition {
        e6: e6_generator_indices(),
        sl3: sl3r_generator_indices(),
        blocks,
    })
}

/// ad(sl3) must preserve each sigma class (the 3 x 27 and 3bar x 27bar
/// halves), and the Cartan pair acts on each block by its label eigenvalues.
pub fn verify_su3_covariance(
    sc: &StructureConstants,
    d: &E6Decomposition,
) -> Result<(), DecompError> {
    require_half_split(sc)?;
    let mut class_span = [Span::new(E8_DIM), Span::new(E8_DIM)];
    for b in &d.blocks {
        let side = if b.sigma > 0 { 0 } else { 1 };
        for v in &b.basis {
            class_span[side].insert(v.clone());
        }
    }
    assert_eq!(class_span[0].rank(), 81);
    assert_eq!(class_span[1].rank(), 81);
    for &g in &d.sl3 {
        let gv = basis_vector(g);
        for (bi, b) in d.blocks.iter().enumerate() {
            let side = if b.sigma > 0 { 0 } else { 1 };
            for v in &b.basis {
                let w = sc.bracket_elements(&gv, v);
                if !class_span[side].contains(&w) {
                    return Err(DecompError::CovarianceViolation { g, block: bi });
                }
            }
        }
    }
    // The Cartan pair acts by the label eigenvalue on each block.
    for (which, g) in [
        (0usize, diag_index(Factor::Left, DiagClass::A, 7)),
        (1usize, diag_index(Factor::Left, DiagClass::G, 7)),
    ] {
        let gv = basis_vector(g);
        for (bi, b) in d.blocks.iter().enumerate() {
            for v in &b.basis {
                let w = sc.bracket_elements(&gv, v);
                let scaled: E8Element = v.iter().map(|x| x * &b.eig[which]).collect();
                if w != scaled {
                    return Err(DecompError::CovarianceViolation { g, block: bi });
                }
            }
        }
    }
    Ok(())
}

/// Cyclicity surrogate for irreducibility: true iff the orbit of every basis
/// vector of the subspace under the generators spans the whole subspace.
pub fn irreducibility_check(
    sc: &StructureConstants,
    generators: &[usize],
    subspace: &[E8Element],
) -> bool {
    if subspace.is_empty() {
        return false;
    }
    let mut target = Span::new(E8_DIM);
    for v in subspace {
        target.insert(v.clone());
    }
    let dim = target.rank();
    for seed in subspace {
        let mut orbit = Span::new(E8_DIM);
        orbit.insert(seed.clone());
        let mut work = vec![seed.clone()];
        while let Some(x) = work.pop() {
            if orbit.rank() == dim {
                break;
            }
            for &g in generators {
                let w = sc.bracket_elements(&basis_vector(g), &x);
                if orbit.insert(w.clone()) {
                    work.push(w);
                }
            }
        }
        if orbit.rank() < dim {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Magic-square survey.

#[derive(Clone, Debug)]
pub struct MagicEntry {
    pub left: &'static str,
    pub right: &'static str,
    pub dim: usize,
    pub expected_dim: usize,
    pub signature: (usize, usize, usize),
}

impl MagicEntry {
    pub fn index(&self) -> i64 {
        self.signature.0 as i64 - self.signature.1 as i64
    }
}

fn derivation_dim(d: usize) -> usize {
    match d {
        1 | 2 => 0,
        4 => 3,
        8 => 14,
        _ => unreachable!(),
    }
}

/// Independent dimension oracle for the magic square over subalgebras of
/// dimensions d1 and d2.
pub fn vinberg_dim(d1: usize, d2: usize) -> usize {
    3 * d1 * d2 + 2 * (d1 - 1) + 2 * (d2 - 1) + derivation_dim(d1) + derivation_dim(d2)
}

pub const MASK_NAMES: [&str; 4] = ["R", "C", "H", "O"];

/// Closure-based survey of all 16 subalgebra pairs: generators are the
/// off-diagonal elements whose labels lie in both masks; the diagonal part
/// arises from closure.
pub fn magic_square_survey(sc: &StructureConstants, k: &KillingMatrix) -> Vec<MagicEntry> {
    let mut out = Vec::with_capacity(16);
    for left in MASK_NAMES {
        let lm = subalgebra_mask(sc.pair.left, left).unwrap();
        for right in MASK_NAMES {
            let rm = subalgebra_mask(sc.pair.right, right).unwrap();
            let mut gens = Vec::new();
            for t in OffType::ALL {
                for &su in lm {
                    for &pu in rm {
                        gens.push(basis_vector(off_index(t, su, pu)));
                    }
                }
            }
            let basis = crate::e8::subalgebra_closure(sc, &gens);
            let restricted = crate::e8::restrict_form(&k.m, &basis);
            out.push(MagicEntry {
                left,
                right,
                dim: basis.len(),
                expected_dim: vinberg_dim(lm.len(), rm.len()),
                signature: restricted.signature(),
            });
        }
    }
    out
}
