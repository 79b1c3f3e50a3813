use std::fmt;

use super::{LaurentPoly, QPoly, RingError};

/// A bar-invariant Laurent polynomial whose exponents all share one parity,
/// stored by its non-negative half.
///
/// `coeffs[j]` is the coefficient of `v^(parity + 2j)` (and, by symmetry, of
/// `v^-(parity + 2j)`). The zero polynomial has no coefficients and parity 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymLaurentPoly {
    parity: u8,
    coeffs: Vec<i64>,
}

impl SymLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut p = SymLaurentPoly {
            parity: 0,
            coeffs: vec![c],
        };
        p.normalize();
        p
    }

    /// `v + v^-1`.
    pub fn v_plus_v_inv() -> Self {
        SymLaurentPoly {
            parity: 1,
            coeffs: vec![1],
        }
    }

    /// `v^d + v^-d` for `d > 0`, or 1 for `d == 0`.
    pub fn balanced_monomial(d: u32) -> Self {
        let mut coeffs = vec![0; d as usize / 2 + 1];
        *coeffs.last_mut().unwrap() = 1;
        SymLaurentPoly {
            parity: (d % 2) as u8,
            coeffs,
        }
    }

    /// Builds from the half `coeffs` ascending from exponent `parity`.
    pub fn from_half(parity: u8, coeffs: Vec<i64>) -> Self {
        let mut p = SymLaurentPoly {
            parity: parity & 1,
            coeffs,
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.parity = 0;
        }
    }

    /// Compresses a bar-invariant, single-parity Laurent polynomial.
    pub fn from_laurent(p: &LaurentPoly) -> Result<Self, RingError> {
        if !p.is_bar_invariant() {
            return Err(RingError::NotSymmetric);
        }
        let mut parity = None;
        for (e, _) in p.terms() {
            let e_par = e.rem_euclid(2) as u8;
            match parity {
                None => parity = Some(e_par),
                Some(q) if q != e_par => return Err(RingError::MixedParity),
                _ => {}
            }
        }
        let Some(parity) = parity else {
            return Ok(Self::zero());
        };
        let d = p.max_exp().unwrap();
        let coeffs = (parity as i32..=d)
            .step_by(2)
            .map(|e| p.coeff(e))
            .collect();
        Ok(Self::from_half(parity, coeffs))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        let mut terms = Vec::with_capacity(2 * self.coeffs.len());
        for (e, c) in self.nonneg_terms() {
            terms.push((e, c));
            if e != 0 {
                terms.push((-e, c));
            }
        }
        LaurentPoly::from_terms(terms).expect("no repeated exponents")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Maximal exponent `d`, or `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        (!self.is_zero()).then(|| self.parity as u32 + 2 * (self.coeffs.len() as u32 - 1))
    }

    /// Exponent parity, or `None` for zero.
    pub fn parity(&self) -> Option<u8> {
        (!self.is_zero()).then_some(self.parity)
    }

    /// Half coefficients ascending from exponent `parity`.
    pub fn half_coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Nonzero terms with non-negative exponent, ascending.
    pub fn nonneg_terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(j, &c)| (self.parity as i32 + 2 * j as i32, c))
    }

    /// Nonzero terms for exponents `d, d-2, ...` down to 0 or 1.
    pub fn half_terms(&self) -> Vec<(i32, i64)> {
        let mut t: Vec<_> = self.nonneg_terms().collect();
        t.reverse();
        t
    }

    /// Coefficient of `v^exp`.
    pub fn coeff(&self, exp: i32) -> i64 {
        let e = exp.unsigned_abs() as i64 - self.parity as i64;
        if e < 0 || e % 2 != 0 {
            return 0;
        }
        self.coeffs.get(e as usize / 2).copied().unwrap_or(0)
    }

    pub fn max_coeff(&self) -> i64 {
        self.coeffs.iter().copied().max().unwrap_or(0)
    }

    pub fn min_coeff(&self) -> i64 {
        self.coeffs.iter().copied().min().unwrap_or(0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    fn check_parity(&self, parity: u8) -> Result<(), RingError> {
        if !self.is_zero() && self.parity != parity {
            return Err(RingError::MixedParity);
        }
        Ok(())
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &SymLaurentPoly, factor: i64) -> Result<(), RingError> {
        if other.is_zero() || factor == 0 {
            return Ok(());
        }
        self.check_parity(other.parity)?;
        self.parity = other.parity;
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (slot, &c) in self.coeffs.iter_mut().zip(&other.coeffs) {
            let t = c.checked_mul(factor).ok_or(RingError::Overflow)?;
            *slot = slot.checked_add(t).ok_or(RingError::Overflow)?;
        }
        self.normalize();
        Ok(())
    }

    /// `self += factor * (v + v^-1) * other`.
    pub fn add_scaled_times_b(
        &mut self,
        other: &SymLaurentPoly,
        factor: i64,
    ) -> Result<(), RingError> {
        if other.is_zero() || factor == 0 {
            return Ok(());
        }
        let out_parity = 1 - other.parity;
        self.check_parity(out_parity)?;
        self.parity = out_parity;
        let c = &other.coeffs;
        let out_len = if other.parity == 0 { c.len() } else { c.len() + 1 };
        if self.coeffs.len() < out_len {
            self.coeffs.resize(out_len, 0);
        }
        let at = |j: usize| c.get(j).copied().unwrap_or(0);
        for j in 0..out_len {
            // (v + v^-1) * sum a_e v^e has coefficient a_{e-1} + a_{e+1} at e.
            let sum = if other.parity == 0 {
                at(j).checked_add(at(j + 1))
            } else if j == 0 {
                at(0).checked_mul(2)
            } else {
                at(j - 1).checked_add(at(j))
            }
            .ok_or(RingError::Overflow)?;
            let t = sum.checked_mul(factor).ok_or(RingError::Overflow)?;
            self.coeffs[j] = self.coeffs[j].checked_add(t).ok_or(RingError::Overflow)?;
        }
        self.normalize();
        Ok(())
    }

    pub fn times_b(&self) -> Result<SymLaurentPoly, RingError> {
        let mut r = SymLaurentPoly::zero();
        r.add_scaled_times_b(self, 1)?;
        Ok(r)
    }

    pub fn checked_add(&self, other: &SymLaurentPoly) -> Result<SymLaurentPoly, RingError> {
        let mut r = self.clone();
        r.add_scaled(other, 1)?;
        Ok(r)
    }

    pub fn checked_sub(&self, other: &SymLaurentPoly) -> Result<SymLaurentPoly, RingError> {
        let mut r = self.clone();
        r.add_scaled(other, -1)?;
        Ok(r)
    }

    /// `v^d * self` as a polynomial in `q = v^2`, where `d` is the degree.
    pub fn to_qpoly(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut q: Vec<i64> = self.coeffs.iter().rev().copied().collect();
        let skip = if self.parity == 0 { 1 } else { 0 };
        q.extend(self.coeffs.iter().skip(skip));
        QPoly::from_coeffs(q)
    }
}

impl fmt::Display for SymLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_laurent().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn compression_examples() {
        let b = SymLaurentPoly::from_laurent(&lp("v+v^-1")).unwrap();
        assert_eq!(b.degree(), Some(1));
        assert_eq!(b.half_terms(), vec![(1, 1)]);

        let h = SymLaurentPoly::from_laurent(&lp("v^3+2v+2v^-1+v^-3")).unwrap();
        assert_eq!(h.degree(), Some(3));
        assert_eq!(h.half_terms(), vec![(3, 1), (1, 2)]);

        let c = SymLaurentPoly::from_laurent(&lp("2")).unwrap();
        assert_eq!(c.degree(), Some(0));
        assert_eq!(c.half_terms(), vec![(0, 2)]);
    }

    #[test]
    fn compression_errors() {
        assert_eq!(
            SymLaurentPoly::from_laurent(&lp("v")),
            Err(RingError::NotSymmetric)
        );
        assert_eq!(
            SymLaurentPoly::from_laurent(&lp("v^-2+v^-1+v+v^2")),
            Err(RingError::MixedParity)
        );
    }

    #[test]
    fn q_form() {
        assert_eq!(SymLaurentPoly::v_plus_v_inv().to_qpoly().coeffs(), &[1, 1]);
        let h = SymLaurentPoly::from_laurent(&lp("v^3+2v+2v^-1+v^-3")).unwrap();
        assert_eq!(h.to_qpoly().coeffs(), &[1, 2, 2, 1]);
        assert!(SymLaurentPoly::zero().to_qpoly().is_zero());
        let e = SymLaurentPoly::from_laurent(&lp("v^-2+2+v^2")).unwrap();
        assert_eq!(e.to_qpoly().coeffs(), &[1, 2, 1]);
    }

    #[test]
    fn times_b_matches_laurent_product() {
        for s in ["1", "v+v^-1", "v^-2+3+v^2", "2v^-3-v^-1-v+2v^3"] {
            let p = SymLaurentPoly::from_laurent(&lp(s)).unwrap();
            let expect = lp(s).checked_mul(&LaurentPoly::v_plus_v_inv()).unwrap();
            assert_eq!(p.times_b().unwrap().to_laurent(), expect, "{s}");
        }
    }

    #[test]
    fn mixed_parity_addition_rejected() {
        let mut a = SymLaurentPoly::one();
        assert_eq!(
            a.add_scaled(&SymLaurentPoly::v_plus_v_inv(), 1),
            Err(RingError::MixedParity)
        );
        let mut z = SymLaurentPoly::v_plus_v_inv();
        z.add_scaled(&SymLaurentPoly::v_plus_v_inv(), -1).unwrap();
        assert!(z.is_zero());
        z.add_scaled(&SymLaurentPoly::one(), 1).unwrap();
        assert_eq!(z, SymLaurentPoly::one());
    }

    #[test]
    fn balanced_monomials() {
        assert_eq!(
            SymLaurentPoly::balanced_monomial(3).to_laurent(),
            lp("v^-3+v^3")
        );
        assert_eq!(SymLaurentPoly::balanced_monomial(0), SymLaurentPoly::one());
    }
}
