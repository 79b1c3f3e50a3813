use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use crate::coxeter::ElementId;
use crate::ring::{LaurentPoly, RingError};

/// Marker for coordinates in the standard basis `t_y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TBasis {}

/// Marker for coordinates in the Kazhdan–Lusztig basis `c_y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CBasis {}

pub trait Basis {
    const SYMBOL: &'static str;
}

impl Basis for TBasis {
    const SYMBOL: &'static str = "t";
}

impl Basis for CBasis {
    const SYMBOL: &'static str = "c";
}

/// Sparse linear combination of basis elements; zero coefficients are never stored.
pub struct Combo<B> {
    terms: BTreeMap<ElementId, LaurentPoly>,
    basis: PhantomData<B>,
}

pub type TCombo = Combo<TBasis>;
pub type CCombo = Combo<CBasis>;

impl<B> Clone for Combo<B> {
    fn clone(&self) -> Self {
        Combo {
            terms: self.terms.clone(),
            basis: PhantomData,
        }
    }
}

impl<B> PartialEq for Combo<B> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<B> Eq for Combo<B> {}

impl<B> fmt::Debug for Combo<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<B> Default for Combo<B> {
    fn default() -> Self {
        Combo {
            terms: BTreeMap::new(),
            basis: PhantomData,
        }
    }
}

impl<B> Combo<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single basis element indexed by `x`.
    pub fn basis(x: ElementId) -> Self {
        let mut c = Self::zero();
        c.terms.insert(x, LaurentPoly::one());
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (ElementId, LaurentPoly)>>(
        terms: I,
    ) -> Result<Self, RingError> {
        let mut c = Self::zero();
        for (x, p) in terms {
            c.add_term(x, &p, 1)?;
        }
        Ok(c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x`, zero if absent.
    pub fn get(&self, x: ElementId) -> LaurentPoly {
        self.terms.get(&x).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ElementId, &LaurentPoly)> {
        self.terms.iter().map(|(&x, p)| (x, p))
    }

    /// `self[x] += factor * p`.
    pub fn add_term(&mut self, x: ElementId, p: &LaurentPoly, factor: i64) -> Result<(), RingError> {
        let cur = self.terms.remove(&x).unwrap_or_default();
        let next = cur.combine(p, factor)?;
        if !next.is_zero() {
            self.terms.insert(x, next);
        }
        Ok(())
    }

    /// `self += p * other`.
    pub fn add_multiple(&mut self, other: &Self, p: &LaurentPoly) -> Result<(), RingError> {
        for (x, c) in other.iter() {
            self.add_term(x, &c.checked_mul(p)?, 1)?;
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        let mut r = self.clone();
        r.add_multiple(other, &LaurentPoly::one())?;
        Ok(r)
    }

    pub fn scaled(&self, p: &LaurentPoly) -> Result<Self, RingError> {
        let mut r = Self::zero();
        r.add_multiple(self, p)?;
        Ok(r)
    }
}

impl<B: Basis> fmt::Display for Combo<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(x, p)| {
                if *p == LaurentPoly::one() {
                    format!("{}_{x}", B::SYMBOL)
                } else {
                    format!("({p}) {}_{x}", B::SYMBOL)
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
