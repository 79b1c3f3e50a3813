use crate::coxeter::{ElementId, GroupTable};
use crate::klbase::KlStore;
use crate::ring::{LaurentPoly, RingError};

use super::{CCombo, HeckeError, TCombo};

/// Left multiplication by `t_s`:
/// `t_s t_y = t_{sy}` if `sy > y`, else `(v - v^-1) t_y + t_{sy}`.
pub fn t_mult_gen(g: &GroupTable, s: usize, u: &TCombo) -> Result<TCombo, RingError> {
    let q = LaurentPoly::v_minus_v_inv();
    let mut out = TCombo::zero();
    for (y, p) in u.iter() {
        let sy = g.lmul(s, y);
        out.add_term(sy, p, 1)?;
        if g.is_left_descent(s, y) {
            out.add_term(y, &p.checked_mul(&q)?, 1)?;
        }
    }
    Ok(out)
}

/// `t_x * u`, reading a reduced word of `x` from the right.
pub fn t_mult_element(g: &GroupTable, x: ElementId, u: &TCombo) -> Result<TCombo, RingError> {
    let mut r = u.clone();
    for &s in g.word(x).iter().rev() {
        r = t_mult_gen(g, s, &r)?;
    }
    Ok(r)
}

/// Product of two t-basis combinations.
pub fn t_product(g: &GroupTable, a: &TCombo, b: &TCombo) -> Result<TCombo, RingError> {
    let mut out = TCombo::zero();
    for (x, p) in a.iter() {
        out.add_multiple(&t_mult_element(g, x, b)?, p)?;
    }
    Ok(out)
}

/// `bar(t_y) = t_{y^-1}^-1` for every `y`, built by
/// `bar(t_{su}) = (t_s - (v - v^-1)) bar(t_u)` for `su > u`.
pub struct BarTable {
    images: Vec<TCombo>,
}

impl BarTable {
    pub fn new(g: &GroupTable) -> Result<Self, RingError> {
        let q = LaurentPoly::v_minus_v_inv();
        let mut images: Vec<TCombo> = Vec::with_capacity(g.size());
        images.push(TCombo::basis(g.identity()));
        for y in g.elements().skip(1) {
            let s = g.left_descents(y).trailing_zeros() as usize;
            let u = g.lmul(s, y);
            let prev = &images[u.index()];
            let mut img = t_mult_gen(g, s, prev)?;
            img.add_multiple(prev, &q.checked_neg()?)?;
            images.push(img);
        }
        Ok(BarTable { images })
    }

    /// `bar(t_y)` in the t-basis.
    pub fn image(&self, y: ElementId) -> &TCombo {
        &self.images[y.index()]
    }
}

/// The bar involution on the Hecke algebra.
pub fn bar_h(table: &BarTable, u: &TCombo) -> Result<TCombo, RingError> {
    let mut out = TCombo::zero();
    for (y, p) in u.iter() {
        out.add_multiple(table.image(y), &p.bar())?;
    }
    Ok(out)
}

/// `p_{x,y} = v^{l(x) - l(y)} P_{x,y}(v^2)`.
pub fn p_laurent(store: &KlStore<'_>, x: ElementId, y: ElementId) -> LaurentPoly {
    let g = store.group();
    let shift = g.length(x) as i32 - g.length(y) as i32;
    store.kl_polynomial(x, y).to_laurent().shift(shift)
}

/// `c_y = sum_{x <= y} p_{x,y} t_x` from stored KL polynomials.
pub fn c_in_t_basis(store: &KlStore<'_>, y: ElementId) -> TCombo {
    let mut out = TCombo::zero();
    for x in store.intervals().lower(y) {
        out.add_term(x, &p_laurent(store, x, y), 1).unwrap();
    }
    out
}

/// `c_y` from its defining properties alone: bar-invariant, `t_y` plus
/// coefficients in `v^-1 Z[v^-1]`. Coefficients are solved for in order of
/// decreasing id, which is compatible with decreasing length.
pub fn c_in_t_basis_oracle(
    g: &GroupTable,
    bar: &BarTable,
    y: ElementId,
) -> Result<TCombo, HeckeError> {
    // acc[w] = sum over solved x != w of bar(p_x) r_{w,x}.
    let mut acc = vec![LaurentPoly::zero(); g.size()];
    let mut result = TCombo::zero();
    let mut solve = |w: ElementId, p: LaurentPoly, acc: &mut Vec<LaurentPoly>| -> Result<(), HeckeError> {
        if p.is_zero() {
            return Ok(());
        }
        let pb = p.bar();
        for (u, r) in bar.image(w).iter() {
            if u != w {
                acc[u.index()] = acc[u.index()].combine(&r.checked_mul(&pb)?, 1)?;
            }
        }
        result.add_term(w, &p, 1)?;
        Ok(())
    };
    solve(y, LaurentPoly::one(), &mut acc)?;
    for w in (0..y.0).rev().map(ElementId) {
        let f = std::mem::take(&mut acc[w.index()]);
        // p_w - bar(p_w) = f with p_w in v^-1 Z[v^-1].
        let p = f.negative_part();
        if f.coeff(0) != 0 || f.positive_part() != p.bar().checked_neg()? {
            return Err(HeckeError::NoSolution { y, w });
        }
        solve(w, p, &mut acc)?;
    }
    Ok(result)
}

/// Expands a KL-basis combination in the t-basis.
pub fn c_to_t(store: &KlStore<'_>, u: &CCombo) -> Result<TCombo, RingError> {
    let mut out = TCombo::zero();
    for (z, p) in u.iter() {
        out.add_multiple(&c_in_t_basis(store, z), p)?;
    }
    Ok(out)
}
