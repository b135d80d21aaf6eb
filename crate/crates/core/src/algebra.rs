//! The octonions and the split octonions, with exact rational coefficients.
//!
//! Basis order is `(1, i, j, k, kl, jl, il, l)`, indices 0..=7. In the split
//! algebra the four `l`-bearing units (indices 4..=7) square to +1; the
//! multiplication table differs from the division table exactly by a sign
//! flip on products where *both* factors are `l`-bearing.

use num_traits::{One, Zero};

use crate::linalg::Mat;
use crate::scalar::{s, Scalar};

pub const DIM: usize = 8;

/// Imaginary-unit multiplication table of the division octonions.
/// `IMAG_DIV[a-1][b-1] = (sign, index)` meaning `e_a e_b = sign * e_index`
/// for a, b in 1..=7; diagonal entries encode `e_a^2 = -1` as `(-1, 0)`.
#[rustfmt::skip]
const IMAG_DIV: [[(i8, usize); 7]; 7] = [
    // i row
    [(-1,0), ( 1,3), (-1,2), ( 1,5), (-1,4), (-1,7), ( 1,6)],
    // j row
    [(-1,3), (-1,0), ( 1,1), (-1,6), (-1,7), ( 1,4), ( 1,5)],
    // k row
    [( 1,2), (-1,1), (-1,0), (-1,7), ( 1,6), (-1,5), ( 1,4)],
    // kl row
    [(-1,5), ( 1,6), ( 1,7), (-1,0), ( 1,1), (-1,2), (-1,3)],
    // jl row
    [( 1,4), ( 1,7), (-1,6), (-1,1), (-1,0), ( 1,3), (-1,2)],
    // il row
    [( 1,7), (-1,4), ( 1,5), ( 1,2), (-1,3), (-1,0), (-1,1)],
    // l row
    [(-1,6), (-1,5), (-1,4), ( 1,3), ( 1,2), ( 1,1), (-1,0)],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    Division,
    Split,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Division => "division",
            AlgebraKind::Split => "split",
        }
    }

    /// Unit names in basis order. Split units are uppercased to keep the two
    /// factors distinguishable in printed generator names.
    pub fn unit_names(self) -> [&'static str; DIM] {
        match self {
            AlgebraKind::Division => ["1", "i", "j", "k", "kl", "jl", "il", "l"],
            AlgebraKind::Split => ["1", "I", "J", "K", "KL", "JL", "IL", "L"],
        }
    }
}

/// `e_a e_b = sign * e_index` in the algebra of the given kind.
pub fn unit_product(kind: AlgebraKind, a: usize, b: usize) -> (i8, usize) {
    assert!(a < DIM && b < DIM);
    if a == 0 {
        return (1, b);
    }
    if b == 0 {
        return (1, a);
    }
    let (mut sign, idx) = IMAG_DIV[a - 1][b - 1];
    if kind == AlgebraKind::Split && a >= 4 && b >= 4 {
        sign = -sign;
    }
    (sign, idx)
}

/// The square of unit `a` as +1 or -1 (unit 0 squares to +1).
pub fn unit_square(kind: AlgebraKind, a: usize) -> i8 {
    let (sign, idx) = unit_product(kind, a, a);
    assert_eq!(idx, 0);
    sign
}

/// An element of the (split) octonions, as exact coefficients on the units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub kind: AlgebraKind,
    pub c: Vec<Scalar>,
}

impl Element {
    pub fn zero(kind: AlgebraKind) -> Self {
        Element {
            kind,
            c: vec![Scalar::zero(); DIM],
        }
    }

    pub fn unit(kind: AlgebraKind, idx: usize) -> Self {
        let mut e = Element::zero(kind);
        e.c[idx] = Scalar::one();
        e
    }

    pub fn from_coeffs(kind: AlgebraKind, c: Vec<Scalar>) -> Self {
        assert_eq!(c.len(), DIM);
        Element { kind, c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &Element) -> Element {
        assert_eq!(self.kind, rhs.kind);
        Element {
            kind: self.kind,
            c: self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Element) -> Element {
        assert_eq!(self.kind, rhs.kind);
        Element {
            kind: self.kind,
            c: self.c.iter().zip(&rhs.c).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> Element {
        Element {
            kind: self.kind,
            c: self.c.iter().map(|a| a * k).collect(),
        }
    }

    pub fn neg(&self) -> Element {
        self.scale(&s(-1))
    }

    pub fn mul(&self, rhs: &Element) -> Element {
        assert_eq!(self.kind, rhs.kind);
        let mut out = Element::zero(self.kind);
        for a in 0..DIM {
            if self.c[a].is_zero() {
                continue;
            }
            for b in 0..DIM {
                if rhs.c[b].is_zero() {
                    continue;
                }
                let (sign, idx) = unit_product(self.kind, a, b);
                let term = &self.c[a] * &rhs.c[b];
                if sign > 0 {
                    out.c[idx] += term;
                } else {
                    out.c[idx] -= term;
                }
            }
        }
        out
    }

    pub fn conj(&self) -> Element {
        let mut out = self.clone();
        for x in out.c[1..].iter_mut() {
            *x = -x.clone();
        }
        out
    }

    pub fn real(&self) -> Scalar {
        self.c[0].clone()
    }

    pub fn imag(&self) -> Element {
        let mut out = self.clone();
        out.c[0] = Scalar::zero();
        out
    }

    /// Quadratic norm `x * conj(x)` (real-valued; indefinite in the split case).
    pub fn norm(&self) -> Scalar {
        let n = self.mul(&self.conj());
        debug_assert!(n.imag().is_zero());
        n.real()
    }

    /// Polarized inner product `<x, y> = Re(x * conj(y))`.
    pub fn inner(&self, rhs: &Element) -> Scalar {
        self.mul(&rhs.conj()).real()
    }

    pub fn commutator(&self, rhs: &Element) -> Element {
        self.mul(rhs).sub(&rhs.mul(self))
    }
}

/// 8x8 matrix of left multiplication by `x`: column `b` is `x * e_b`.
pub fn left_mult_matrix(x: &Element) -> Mat {
    let mut m = Mat::zeros(DIM, DIM);
    for b in 0..DIM {
        let col = x.mul(&Element::unit(x.kind, b));
        for r in 0..DIM {
            *m.at_mut(r, b) = col.c[r].clone();
        }
    }
    m
}

/// 8x8 matrix of right multiplication by `x`: column `b` is `e_b * x`.
pub fn right_mult_matrix(x: &Element) -> Mat {
    let mut m = Mat::zeros(DIM, DIM);
    for b in 0..DIM {
        let col = Element::unit(x.kind, b).mul(x);
        for r in 0..DIM {
            *m.at_mut(r, b) = col.c[r].clone();
        }
    }
    m
}

/// Named 8-unit subalgebra masks, per factor kind.
pub fn subalgebra_mask(kind: AlgebraKind, name: &str) -> Option<&'static [usize]> {
    match (kind, name) {
        (_, "R") => Some(&[0]),
        (AlgebraKind::Division, "C") => Some(&[0, 1]),
        (AlgebraKind::Division, "H") => Some(&[0, 1, 2, 3]),
        (AlgebraKind::Split, "C") => Some(&[0, 7]),
        (AlgebraKind::Split, "H") => Some(&[0, 1, 6, 7]),
        (_, "O") => Some(&[0, 1, 2, 3, 4, 5, 6, 7]),
        _ => None,
    }
}

/// Checks that a unit mask is closed under multiplication.
pub fn mask_is_closed(kind: AlgebraKind, mask: &[usize]) -> bool {
    mask.iter().all(|&a| {
        mask.iter().all(|&b| {
            let (_, idx) = unit_product(kind, a, b);
            mask.contains(&idx)
        })
    })
}

/// An element of the 64-dimensional tensor product `K' (x) K`, coefficients
/// indexed by `s * 8 + p` for split unit `s` and division-side unit `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    /// Kind of the *right* factor; the left factor kind.
    pub left: AlgebraKind,
    pub right: AlgebraKind,
    pub c: Vec<Scalar>,
}

impl TensorElement {
    pub fn zero(left: AlgebraKind, right: AlgebraKind) -> Self {
        TensorElement {
            left,
            right,
            c: vec![Scalar::zero(); DIM * DIM],
        }
    }

    pub fn unit(left: AlgebraKind, right: AlgebraKind, su: usize, pu: usize) -> Self {
        let mut t = TensorElement::zero(left, right);
        t.c[su * DIM + pu] = Scalar::one();
        t
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (a, b) in out.c.iter_mut().zip(&rhs.c) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> TensorElement {
        let mut out = self.clone();
        for a in out.c.iter_mut() {
            *a *= k;
        }
        out
    }

    pub fn neg(&self) -> TensorElement {
        self.scale(&s(-1))
    }

    /// Componentwise product: `(s (x) p)(t (x) q) = (st) (x) (pq)`.
    pub fn mul(&self, rhs: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(self.left, self.right);
        for si in 0..DIM {
            for pi in 0..DIM {
                if self.c[si * DIM + pi].is_zero() {
                    continue;
                }
                for sj in 0..DIM {
                    for pj in 0..DIM {
                        let b = &rhs.c[sj * DIM + pj];
                        if b.is_zero() {
                            continue;
                        }
                        let (sg1, sk) = unit_product(self.left, si, sj);
                        let (sg2, pk) = unit_product(self.right, pi, pj);
                        let term = &self.c[si * DIM + pi] * b;
                        if sg1 * sg2 > 0 {
                            out.c[sk * DIM + pk] += term;
                        } else {
                            out.c[sk * DIM + pk] -= term;
                        }
                    }
                }
            }
        }
        out
    }

    /// Conjugation in both factors.
    pub fn conj(&self) -> TensorElement {
        let mut out = self.clone();
        for su in 0..DIM {
            for pu in 0..DIM {
                if su != 0 && pu != 0 {
                    continue; // double flip cancels
                }
                if su == 0 && pu == 0 {
                    continue;
                }
                out.c[su * DIM + pu] = -out.c[su * DIM + pu].clone();
            }
        }
        out
    }
}

/// Cayley-Dickson doubling oracle over the quaternions:
/// `(a + b l)(c + d l) = (a c + lambda conj(d) b) + (d a + b conj(c)) l`,
/// lambda = -1 (division) or +1 (split). Quaternion unit m in the `b`
/// part sits at basis index 7 - m. Independent of the hard-coded tables;
/// used to certify them.
pub fn cayley_dickson_unit_product(kind: AlgebraKind, x: usize, y: usize) -> Vec<i64> {
    const QUAT: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let qmul = |a: &[i64; 4], b: &[i64; 4]| {
        let mut out = [0i64; 4];
        for p in 0..4 {
            for q in 0..4 {
                let (sg, idx) = QUAT[p][q];
                out[idx] += sg * a[p] * b[q];
            }
        }
        out
    };
    let qconj = |a: &[i64; 4]| [a[0], -a[1], -a[2], -a[3]];
    let split = |u: usize| {
        let mut a = [0i64; 4];
        let mut b = [0i64; 4];
        if u < 4 {
            a[u] = 1;
        } else {
            b[7 - u] = 1;
        }
        (a, b)
    };
    let lambda = if kind == AlgebraKind::Split { 1 } else { -1 };
    let (a, b) = split(x);
    let (c, d) = split(y);
    // first = ac + lambda * conj(d) b ; second = d a + b conj(c)
    let t1 = qmul(&a, &c);
    let t2 = qmul(&qconj(&d), &b);
    let u1 = qmul(&d, &a);
    let u2 = qmul(&b, &qconj(&c));
    let mut out = vec![0i64; DIM];
    for m in 0..4 {
        out[m] = t1[m] + lambda * t2[m];
        out[7 - m] = u1[m] + u2[m];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn tables_match_cayley_dickson_doubling() {
        for kind in [AlgebraKind::Division, AlgebraKind::Split] {
            for a in 0..DIM {
                for b in 0..DIM {
                    let (sign, idx) = unit_product(kind, a, b);
                    let mut expect = vec![0i64; DIM];
                    expect[idx] = sign as i64;
                    assert_eq!(
                        cayley_dickson_unit_product(kind, a, b),
                        expect,
                        "{:?}: e{} * e{}",
                        kind,
                        a,
                        b
                    );
                }
            }
        }
    }

    #[test]
    fn split_table_is_division_with_ll_sign_flip() {
        for a in 1..DIM {
            for b in 1..DIM {
                let (sd, id) = unit_product(AlgebraKind::Division, a, b);
                let (ss, is) = unit_product(AlgebraKind::Split, a, b);
                assert_eq!(id, is);
                if a >= 4 && b >= 4 {
                    assert_eq!(ss, -sd, "e{} e{}", a, b);
                } else {
                    assert_eq!(ss, sd, "e{} e{}", a, b);
                }
            }
        }
    }

    #[test]
    fn unit_squares() {
        for a in 1..DIM {
            assert_eq!(unit_square(AlgebraKind::Division, a), -1);
            assert_eq!(unit_square(AlgebraKind::Split, a), if a >= 4 { 1 } else { -1 });
        }
    }

    #[test]
    fn masks_are_closed() {
        for kind in [AlgebraKind::Division, AlgebraKind::Split] {
            for name in ["R", "C", "H", "O"] {
                let mask = subalgebra_mask(kind, name).unwrap();
                assert!(mask_is_closed(kind, mask), "{:?} {}", kind, name);
            }
        }
    }

    fn small_element(kind: AlgebraKind) -> impl Strategy<Value = Element> {
        proptest::collection::vec(-4i64..=4, DIM)
            .prop_map(move |v| Element::from_coeffs(kind, v.into_iter().map(s).collect()))
    }

    fn either_kind() -> impl Strategy<Value = AlgebraKind> {
        prop_oneof![Just(AlgebraKind::Division), Just(AlgebraKind::Split)]
    }

    fn pair_same_kind() -> impl Strategy<Value = (Element, Element)> {
        either_kind().prop_flat_map(|kind| (small_element(kind), small_element(kind)))
    }

    proptest! {
        #[test]
        fn alternativity((a, b) in pair_same_kind()) {
            prop_assert_eq!(a.mul(&a.mul(&b)), a.mul(&a).mul(&b));
            prop_assert_eq!(b.mul(&a).mul(&a), b.mul(&a.mul(&a)));
        }

        #[test]
        fn conjugation_is_anti_automorphism((a, b) in pair_same_kind()) {
            prop_assert_eq!(a.mul(&b).conj(), b.conj().mul(&a.conj()));
        }

        #[test]
        fn norm_is_multiplicative(kind in either_kind(), v in proptest::collection::vec(-3i64..=3, 2 * DIM)) {
            let a = Element::from_coeffs(kind, v[..DIM].iter().map(|&x| s(x)).collect());
            let b = Element::from_coeffs(kind, v[DIM..].iter().map(|&x| s(x)).collect());
            prop_assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
        }

        #[test]
        fn moufang_identity(kind in either_kind(), v in proptest::collection::vec(-2i64..=2, 3 * DIM)) {
            let a = Element::from_coeffs(kind, v[..DIM].iter().map(|&x| s(x)).collect());
            let b = Element::from_coeffs(kind, v[DIM..2 * DIM].iter().map(|&x| s(x)).collect());
            let c = Element::from_coeffs(kind, v[2 * DIM..].iter().map(|&x| s(x)).collect());
            // (ab)(ca) = a((bc)a)
            prop_assert_eq!(a.mul(&b).mul(&c.mul(&a)), a.mul(&b.mul(&c).mul(&a)));
        }
    }

    #[test]
    fn left_mult_matrix_matches_mul() {
        let kind = AlgebraKind::Split;
        let x = Element::from_coeffs(kind, (0..8).map(|v| s(v - 3)).collect());
        let y = Element::from_coeffs(kind, (0..8).map(|v| s(2 * v + 1)).collect());
        let m = left_mult_matrix(&x);
        assert_eq!(m.mul_vec(&y.c), x.mul(&y).c);
    }

    #[test]
    fn tensor_pure_products() {
        let t1 = TensorElement::unit(AlgebraKind::Split, AlgebraKind::Division, 7, 0); // L (x) 1
        let t2 = TensorElement::unit(AlgebraKind::Split, AlgebraKind::Division, 7, 1); // L (x) i
        let p = t1.mul(&t2);
        // (L)(L) = +1 in split, (1)(i) = i: expect 1 (x) i
        let mut expect = TensorElement::zero(AlgebraKind::Split, AlgebraKind::Division);
        expect.c[1] = s(1);
        assert_eq!(p, expect);
    }
}
