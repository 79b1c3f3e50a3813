use std::fmt;
use std::str::FromStr;

use super::text::{parse_terms, write_terms};
use super::RingError;

/// Integer Laurent polynomial in `v`, stored densely from its lowest exponent.
///
/// Both ends of `coeffs` are nonzero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^exp`.
    pub fn monomial(c: i64, exp: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly {
            low: exp,
            coeffs: vec![c],
        }
    }

    /// `v + v^-1`.
    pub fn v_plus_v_inv() -> Self {
        LaurentPoly {
            low: -1,
            coeffs: vec![1, 0, 1],
        }
    }

    /// `v - v^-1`.
    pub fn v_minus_v_inv() -> Self {
        LaurentPoly {
            low: -1,
            coeffs: vec![-1, 0, 1],
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(terms: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (i32, i64)>,
    {
        let terms: Vec<(i32, i64)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Ok(Self::zero());
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0i64; (hi - lo) as usize + 1];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = slot.checked_add(c).ok_or(RingError::Overflow)?;
        }
        Ok(Self::from_dense(lo, coeffs))
    }

    /// `coeffs[i]` is the coefficient of `v^(low + i)`.
    pub fn from_dense(low: i32, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        let i = exp as i64 - self.low as i64;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending in exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i32, c))
    }

    /// The ring involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly { low: -hi, coeffs }
            }
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        self.combine(other, 1)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.combine(other, -1)
    }

    pub fn checked_neg(&self) -> Result<Self, RingError> {
        self.checked_scale(-1)
    }

    /// `self + factor * other`.
    pub fn combine(&self, other: &Self, factor: i64) -> Result<Self, RingError> {
        if other.is_zero() || factor == 0 {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return other.checked_scale(factor);
        }
        let lo = self.low.min(other.low);
        let hi = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut coeffs = vec![0i64; (hi - lo) as usize + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + i] = c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.low - lo) as usize + i];
            let scaled = c.checked_mul(factor).ok_or(RingError::Overflow)?;
            *slot = slot.checked_add(scaled).ok_or(RingError::Overflow)?;
        }
        Ok(Self::from_dense(lo, coeffs))
    }

    pub fn checked_scale(&self, factor: i64) -> Result<Self, RingError> {
        if factor == 0 {
            return Ok(Self::zero());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c.checked_mul(factor).ok_or(RingError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly {
            low: self.low,
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(RingError::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(t).ok_or(RingError::Overflow)?;
            }
        }
        Ok(Self::from_dense(self.low + other.low, coeffs))
    }

    /// True if `self == self.bar()`.
    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Terms with negative exponent only.
    pub fn negative_part(&self) -> Self {
        LaurentPoly::from_terms(self.terms().filter(|t| t.0 < 0)).unwrap()
    }

    /// Terms with positive exponent only.
    pub fn positive_part(&self) -> Self {
        LaurentPoly::from_terms(self.terms().filter(|t| t.0 > 0)).unwrap()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, 'v', self.terms().map(|(e, c)| (e as i64, c)))
    }
}

impl FromStr for LaurentPoly {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms = parse_terms(s, 'v')?;
        let terms = terms
            .into_iter()
            .map(|(e, c)| {
                i32::try_from(e)
                    .map(|e| (e, c))
                    .map_err(|_| RingError::Parse(format!("exponent out of range in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_terms(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p("v").bar(), p("v^-1"));
        assert_eq!(p("v^-1+v").bar(), p("v^-1+v"));
        assert_eq!(p("2v^3-v^-1").bar(), p("2v^-3-v"));
    }

    #[test]
    fn display_is_ascending_with_unit_coefficients_elided() {
        assert_eq!(p("v^3+2v+2v^-1+v^-3").to_string(), "v^-3+2v^-1+2v+v^3");
        assert_eq!(p("1-v^2").to_string(), "1-v^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("-v^-1").to_string(), "-v^-1");
    }

    #[test]
    fn multiplication() {
        let b = LaurentPoly::v_plus_v_inv();
        assert_eq!(b.checked_mul(&b).unwrap(), p("v^-2+2+v^2"));
        let d = LaurentPoly::v_minus_v_inv();
        assert_eq!(b.checked_mul(&d).unwrap(), p("v^2-v^-2"));
    }

    #[test]
    fn overflow_is_reported() {
        let big = LaurentPoly::constant(i64::MAX);
        assert_eq!(big.checked_add(&LaurentPoly::one()), Err(RingError::Overflow));
        assert_eq!(big.checked_scale(2), Err(RingError::Overflow));
        assert_eq!(
            LaurentPoly::constant(i64::MIN).checked_neg(),
            Err(RingError::Overflow)
        );
    }

    #[test]
    fn cancellation_trims() {
        let a = p("v+v^3");
        let z = a.checked_sub(&a).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.min_exp(), None);
        let c = p("v+v^3").checked_sub(&p("v^3")).unwrap();
        assert_eq!(c, LaurentPoly::monomial(1, 1));
    }
}
