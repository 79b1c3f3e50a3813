use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::text::{parse_terms, write_terms};
use super::{LaurentPoly, RingError};

/// Integer polynomial in `q = v^2`, dense from degree 0 with a nonzero leading coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// `self + factor * q^shift * other`.
    pub fn add_scaled_shifted(
        &mut self,
        other: &QPoly,
        factor: i64,
        shift: usize,
    ) -> Result<(), RingError> {
        if other.is_zero() || factor == 0 {
            return Ok(());
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            let t = c.checked_mul(factor).ok_or(RingError::Overflow)?;
            let slot = &mut self.coeffs[i + shift];
            *slot = slot.checked_add(t).ok_or(RingError::Overflow)?;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &QPoly) -> Result<QPoly, RingError> {
        let mut r = self.clone();
        r.add_scaled_shifted(other, 1, 0)?;
        Ok(r)
    }

    pub fn checked_sub(&self, other: &QPoly) -> Result<QPoly, RingError> {
        let mut r = self.clone();
        r.add_scaled_shifted(other, -1, 0)?;
        Ok(r)
    }

    pub fn checked_mul(&self, other: &QPoly) -> Result<QPoly, RingError> {
        let mut r = QPoly::zero();
        for (k, &c) in self.coeffs.iter().enumerate() {
            r.add_scaled_shifted(other, c, k)?;
        }
        Ok(r)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn max_coeff(&self) -> i64 {
        self.coeffs.iter().copied().max().unwrap_or(0)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Weakly increasing, then weakly decreasing.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut i = 1;
        while i < c.len() && c[i] >= c[i - 1] {
            i += 1;
        }
        while i < c.len() && c[i] <= c[i - 1] {
            i += 1;
        }
        i >= c.len()
    }

    /// Substitutes `q = v^2`.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (2 * k as i32, c)),
        )
        .expect("substitution cannot overflow")
    }

    /// Ordering used for listings: by degree, then coefficients lexicographically
    /// from the constant term up.
    pub fn cmp_degree_lex(&self, other: &QPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            'q',
            self.coeffs.iter().enumerate().map(|(k, &c)| (k as i64, c)),
        )
    }
}

impl FromStr for QPoly {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut r = QPoly::zero();
        for (e, c) in parse_terms(s, 'q')? {
            if !(0..=1 << 20).contains(&e) {
                return Err(RingError::Parse(format!("bad q exponent {e} in {s:?}")));
            }
            r.add_scaled_shifted(&QPoly::one(), c, e as usize)?;
        }
        Ok(r)
    }
}
