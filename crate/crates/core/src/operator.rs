//! Multiplication operators on a single (split) octonion factor and on the
//! 64-dimensional tensor product of the two factors.
//!
//! Nesting `p o q` means the composition `L_p L_q` of left-multiplication
//! maps. Compositions generally are not themselves left multiplications;
//! `as_left_mult` recovers the element when they are and reports failure
//! otherwise.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{left_mult_matrix, AlgebraKind, Element, TensorElement, DIM};
use crate::linalg::Mat;
use crate::scalar::Scalar;

pub const TDIM: usize = DIM * DIM;

#[derive(Debug, Error)]
pub enum OperatorError {
    #[error("operator is not a left multiplication")]
    NotALeftMultiplication,
}

/// A linear operator on one 8-dimensional factor algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorOp {
    pub kind: AlgebraKind,
    pub m: Mat,
}

impl FactorOp {
    pub fn zero(kind: AlgebraKind) -> Self {
        FactorOp {
            kind,
            m: Mat::zeros(DIM, DIM),
        }
    }

    pub fn identity(kind: AlgebraKind) -> Self {
        FactorOp {
            kind,
            m: Mat::identity(DIM),
        }
    }

    pub fn left_mult(x: &Element) -> Self {
        FactorOp {
            kind: x.kind,
            m: left_mult_matrix(x),
        }
    }

    pub fn left_mult_unit(kind: AlgebraKind, u: usize) -> Self {
        FactorOp::left_mult(&Element::unit(kind, u))
    }

    /// `self` composed after `rhs` (matrix product).
    pub fn compose(&self, rhs: &FactorOp) -> FactorOp {
        assert_eq!(self.kind, rhs.kind);
        FactorOp {
            kind: self.kind,
            m: self.m.mul(&rhs.m),
        }
    }

    pub fn commutator(&self, rhs: &FactorOp) -> FactorOp {
        assert_eq!(self.kind, rhs.kind);
        FactorOp {
            kind: self.kind,
            m: self.m.commutator(&rhs.m),
        }
    }

    pub fn add(&self, rhs: &FactorOp) -> FactorOp {
        FactorOp {
            kind: self.kind,
            m: self.m.add(&rhs.m),
        }
    }

    pub fn sub(&self, rhs: &FactorOp) -> FactorOp {
        FactorOp {
            kind: self.kind,
            m: self.m.sub(&rhs.m),
        }
    }

    pub fn scale(&self, k: &Scalar) -> FactorOp {
        FactorOp {
            kind: self.kind,
            m: self.m.scale(k),
        }
    }

    pub fn apply(&self, x: &Element) -> Element {
        assert_eq!(self.kind, x.kind);
        Element::from_coeffs(self.kind, self.m.mul_vec(&x.c))
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// Recovers `x` such that `self = L_x`, exactly. Since `L_x(1) = x`, the
    /// candidate is the first column; the claim is then verified in full.
    pub fn as_left_mult(&self) -> Result<Element, OperatorError> {
        let x = Element::from_coeffs(
            self.kind,
            (0..DIM).map(|r| self.m.at(r, 0).clone()).collect(),
        );
        if left_mult_matrix(&x) == self.m {
            Ok(x)
        } else {
            Err(OperatorError::NotALeftMultiplication)
        }
    }
}

/// Nesting `p o q = L_p L_q`.
pub fn nest(p: &Element, q: &Element) -> FactorOp {
    FactorOp::left_mult(p).compose(&FactorOp::left_mult(q))
}

/// A linear operator on the tensor product `K' (x) K`, dense 64x64 with
/// coordinates indexed `s * 8 + p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOp {
    pub left: AlgebraKind,
    pub right: AlgebraKind,
    pub m: Mat,
}

impl TensorOp {
    pub fn zero(left: AlgebraKind, right: AlgebraKind) -> Self {
        TensorOp {
            left,
            right,
            m: Mat::zeros(TDIM, TDIM),
        }
    }

    /// Kronecker product: `a` acts on the split (left) factor, `b` on the
    /// division-side (right) factor.
    pub fn kron(a: &FactorOp, b: &FactorOp) -> Self {
        let mut m = Mat::zeros(TDIM, TDIM);
        for sr in 0..DIM {
            for sc in 0..DIM {
                let av = a.m.at(sr, sc);
                if av.is_zero() {
                    continue;
                }
                for pr in 0..DIM {
                    for pc in 0..DIM {
                        let bv = b.m.at(pr, pc);
                        if bv.is_zero() {
                            continue;
                        }
                        *m.at_mut(sr * DIM + pr, sc * DIM + pc) = av * bv;
                    }
                }
            }
        }
        TensorOp {
            left: a.kind,
            right: b.kind,
            m,
        }
    }

    /// Left multiplication by a general tensor element:
    /// `L_v = sum v_{sp} L_s (x) L_p`.
    pub fn left_mult(v: &TensorElement) -> Self {
        let mut out = TensorOp::zero(v.left, v.right);
        for su in 0..DIM {
            for pu in 0..DIM {
                let c = &v.c[su * DIM + pu];
                if c.is_zero() {
                    continue;
                }
                let term = TensorOp::kron(
                    &FactorOp::left_mult_unit(v.left, su),
                    &FactorOp::left_mult_unit(v.right, pu),
                );
                out = out.add(&term.scale(c));
            }
        }
        out
    }

    pub fn compose(&self, rhs: &TensorOp) -> TensorOp {
        TensorOp {
            left: self.left,
            right: self.right,
            m: self.m.mul(&rhs.m),
        }
    }

    pub fn commutator(&self, rhs: &TensorOp) -> TensorOp {
        TensorOp {
            left: self.left,
            right: self.right,
            m: self.m.commutator(&rhs.m),
        }
    }

    pub fn add(&self, rhs: &TensorOp) -> TensorOp {
        TensorOp {
            left: self.left,
            right: self.right,
            m: self.m.add(&rhs.m),
        }
    }

    pub fn sub(&self, rhs: &TensorOp) -> TensorOp {
        TensorOp {
            left: self.left,
            right: self.right,
            m: self.m.sub(&rhs.m),
        }
    }

    pub fn scale(&self, k: &Scalar) -> TensorOp {
        TensorOp {
            left: self.left,
            right: self.right,
            m: self.m.scale(k),
        }
    }

    pub fn apply(&self, v: &TensorElement) -> TensorElement {
        TensorElement {
            left: self.left,
            right: self.right,
            c: self.m.mul_vec(&v.c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// Recovers `v` such that `self = L_v` over the tensor algebra, exactly.
    pub fn as_left_mult(&self) -> Result<TensorElement, OperatorError> {
        let v = TensorElement {
            left: self.left,
            right: self.right,
            c: (0..TDIM).map(|r| self.m.at(r, 0).clone()).collect(),
        };
        if TensorOp::left_mult(&v) == *self {
            Ok(v)
        } else {
            Err(OperatorError::NotALeftMultiplication)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Span;
    use crate::scalar::s;

    #[test]
    fn as_left_mult_roundtrip_and_rejection() {
        for kind in [AlgebraKind::Division, AlgebraKind::Split] {
            let x = Element::from_coeffs(kind, (0..8).map(|v| s(v - 2)).collect());
            let op = FactorOp::left_mult(&x);
            assert_eq!(op.as_left_mult().unwrap(), x);
            // L_i L_j is not a left multiplication (octonions are not
            // associative).
            let comp = FactorOp::left_mult_unit(kind, 1).compose(&FactorOp::left_mult_unit(kind, 2));
            assert!(comp.as_left_mult().is_err());
        }
    }

    #[test]
    fn pure_imaginary_left_mults_anticommute() {
        for kind in [AlgebraKind::Division, AlgebraKind::Split] {
            for p in 1..DIM {
                for q in 1..DIM {
                    if p == q {
                        continue;
                    }
                    let lp = FactorOp::left_mult_unit(kind, p);
                    let lq = FactorOp::left_mult_unit(kind, q);
                    let anti = lp.compose(&lq).add(&lq.compose(&lp));
                    assert!(anti.is_zero(), "{:?}: L{} L{} + L{} L{}", kind, p, q, q, p);
                }
            }
        }
    }

    #[test]
    fn nested_span_has_dimension_28() {
        // { L_p } + { L_p L_q : p < q } over the imaginary units spans the
        // 28-dimensional so(8) (both signatures), and is commutator-closed.
        for kind in [AlgebraKind::Division, AlgebraKind::Split] {
            let mut ops: Vec<FactorOp> = Vec::new();
            for p in 1..DIM {
                ops.push(FactorOp::left_mult_unit(kind, p));
            }
            for p in 1..DIM {
                for q in p + 1..DIM {
                    ops.push(
                        FactorOp::left_mult_unit(kind, p)
                            .compose(&FactorOp::left_mult_unit(kind, q)),
                    );
                }
            }
            let flat = |op: &FactorOp| -> Vec<_> {
                (0..DIM)
                    .flat_map(|r| (0..DIM).map(|c| op.m.at(r, c).clone()).collect::<Vec<_>>())
                    .collect()
            };
            let mut span = Span::new(DIM * DIM);
            for op in &ops {
                span.insert(flat(op));
            }
            assert_eq!(span.rank(), 28, "{:?}", kind);
            for a in &ops {
                for b in &ops {
                    assert!(span.contains(&flat(&a.commutator(b))), "{:?}", kind);
                }
            }
        }
    }

    #[test]
    fn tensor_left_mult_matches_algebra_product() {
        let (lk, rk) = (AlgebraKind::Split, AlgebraKind::Division);
        let mut v = TensorElement::zero(lk, rk);
        v.c[7 * DIM + 2] = s(3); // 3 L (x) j
        v.c[1 * DIM] = s(-1); // -I (x) 1
        let mut w = TensorElement::zero(lk, rk);
        w.c[4 * DIM + 5] = s(2); // 2 KL (x) jl
        w.c[0] = s(1);
        assert_eq!(TensorOp::left_mult(&v).apply(&w), v.mul(&w));
    }

    #[test]
    fn kron_respects_index_convention() {
        let a = FactorOp::left_mult_unit(AlgebraKind::Split, 7); // L_L
        let b = FactorOp::identity(AlgebraKind::Division);
        let op = TensorOp::kron(&a, &b);
        let v = TensorElement::unit(AlgebraKind::Split, AlgebraKind::Division, 0, 3); // 1 (x) k
        let out = op.apply(&v);
        // L * 1 = L on the split factor: expect L (x) k
        let expect = TensorElement::unit(AlgebraKind::Split, AlgebraKind::Division, 7, 3);
        assert_eq!(out, expect);
    }
}
