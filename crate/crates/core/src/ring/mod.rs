//! Exact arithmetic: Laurent polynomials in `v`, polynomials in `q = v^2`,
//! bar-symmetric Laurent polynomials, and real algebraic numbers for root systems.

mod algebraic;
mod laurent;
mod qpoly;
mod store;
mod sym;
mod text;

pub use algebraic::{AlgebraicReal, NumberField};
pub use laurent::LaurentPoly;
pub use qpoly::QPoly;
pub use store::PolyStore;
pub use sym::SymLaurentPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("integer overflow in polynomial arithmetic")]
    Overflow,
    #[error("polynomial is not invariant under v -> v^-1")]
    NotSymmetric,
    #[error("polynomial mixes even and odd exponents")]
    MixedParity,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// `v -> v^-1`, termwise.
pub fn bar(p: &LaurentPoly) -> LaurentPoly {
    p.bar()
}

pub fn sym_from_laurent(p: &LaurentPoly) -> Result<SymLaurentPoly, RingError> {
    SymLaurentPoly::from_laurent(p)
}

pub fn qpoly_from_sym(h: &SymLaurentPoly) -> QPoly {
    h.to_qpoly()
}

pub fn is_unimodal(p: &QPoly) -> bool {
    p.is_unimodal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-8i32..8, -50i64..50), 0..8)
            .prop_map(|t| LaurentPoly::from_terms(t).unwrap())
    }

    fn sym() -> impl Strategy<Value = SymLaurentPoly> {
        (0u8..2, prop::collection::vec(-50i64..50, 0..6))
            .prop_map(|(p, c)| SymLaurentPoly::from_half(p, c))
    }

    proptest! {
        #[test]
        fn bar_is_involutive(p in laurent()) {
            prop_assert_eq!(bar(&bar(&p)), p);
        }

        #[test]
        fn bar_is_multiplicative(p in laurent(), q in laurent()) {
            let lhs = bar(&p.checked_mul(&q).unwrap());
            let rhs = bar(&p).checked_mul(&bar(&q)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn sym_round_trip(h in sym()) {
            let l = h.to_laurent();
            prop_assert!(l.is_bar_invariant());
            prop_assert_eq!(sym_from_laurent(&l).unwrap(), h);
        }

        #[test]
        fn q_form_is_palindromic(h in sym()) {
            let q = qpoly_from_sym(&h);
            prop_assert!(q.is_palindromic());
            prop_assert_eq!(q.degree().map(|d| d as u32), h.degree());
        }

        #[test]
        fn text_round_trip(p in laurent()) {
            let s = p.to_string();
            prop_assert_eq!(s.parse::<LaurentPoly>().unwrap(), p);
        }
    }

    #[test]
    fn overflow_never_wraps() {
        let mut h = SymLaurentPoly::constant(i64::MAX / 2 + 1);
        let same = h.clone();
        assert_eq!(h.add_scaled(&same, 1), Err(RingError::Overflow));
        let q = QPoly::from_coeffs(vec![i64::MAX]);
        assert_eq!(q.checked_add(&QPoly::one()), Err(RingError::Overflow));
    }
}
