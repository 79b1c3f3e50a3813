//! Closed forms for `c_x c_y` in dihedral groups, written in the basis
//! `C_j = c_{<j,1,2]}`, where `<j,1,2]` is the alternating word of length `j`
//! ending in `s_2`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::checks::CheckReport;
use crate::coxeter::{build_group, CoxeterError, CoxeterMatrix, ElementId, GroupTable};
use crate::hecke::{column, HeckeError, Strategy};
use crate::klbase::{build_wgraph, KlError, KlStore};
use crate::ring::{RingError, SymLaurentPoly};

#[derive(Debug, Error)]
pub enum DihedralError {
    #[error("index out of range: {0}")]
    InvalidIndex(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Kl(#[from] KlError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
}

/// `[first, other, first, ...]` with `len` letters; generators are 1 and 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralWord {
    pub first: u8,
    pub len: u32,
}

impl DihedralWord {
    /// `[s, t, len>`, read from the left.
    pub fn left(first: u8, len: u32) -> Self {
        debug_assert!(first == 1 || first == 2);
        if len == 0 {
            return DihedralWord { first: 1, len: 0 };
        }
        DihedralWord { first, len }
    }

    /// `<len, s, t]`: the word of length `len` ending in `t`.
    pub fn right(s: u8, len: u32) -> Self {
        let t = other(s);
        // Reading leftwards from the last letter t, position len-1 from the
        // end is t when len is odd and s when it is even.
        let first = if len % 2 == 1 { t } else { s };
        Self::left(first, len)
    }

    /// `<j, 1, 2]`, the index element of the basis `C_j`.
    pub fn basis(j: u32) -> Self {
        Self::right(1, j)
    }

    pub fn letters(&self) -> Vec<u8> {
        (0..self.len)
            .map(|p| if p % 2 == 0 { self.first } else { other(self.first) })
            .collect()
    }

    /// The element of `g` (generators 1, 2 are indices 0, 1).
    pub fn element(&self, g: &GroupTable) -> Result<ElementId, CoxeterError> {
        let word: Vec<usize> = self.letters().iter().map(|&l| l as usize - 1).collect();
        g.element_from_word(&word)
    }
}

impl fmt::Display for DihedralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}>", self.first, other(self.first), self.len)
    }
}

fn other(s: u8) -> u8 {
    3 - s
}

/// `s`: the first letter of `<k,1,2]`, 1 when `k` is even and 2 when odd.
pub fn leading_generator(k: u32) -> u8 {
    if k % 2 == 0 {
        1
    } else {
        2
    }
}

/// Which left factor multiplies `C_k`: `<i,s,t]` (same) or `<i,t,s]` (opposite),
/// where `s` is the first letter of `<k,1,2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Same,
    Opposite,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Same, Side::Opposite];

    /// The left factor `<i,s,t]` or `<i,t,s]`.
    pub fn left_factor(self, i: u32, k: u32) -> DihedralWord {
        let s = leading_generator(k);
        match self {
            Side::Same => DihedralWord::right(s, i),
            Side::Opposite => DihedralWord::right(other(s), i),
        }
    }
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "same" => Ok(Side::Same),
            "opposite" => Ok(Side::Opposite),
            _ => Err(format!("unknown side {s:?} (expected same or opposite)")),
        }
    }
}

/// `sum_j coeff_j C_j`, keyed by `j > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DihedralProduct {
    terms: BTreeMap<u32, SymLaurentPoly>,
}

impl DihedralProduct {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, j: u32, c: &SymLaurentPoly) -> Result<(), RingError> {
        let mut cur = self.terms.remove(&j).unwrap_or_default();
        cur.add_scaled(c, 1)?;
        if !cur.is_zero() {
            self.terms.insert(j, cur);
        }
        Ok(())
    }

    pub fn get(&self, j: u32) -> SymLaurentPoly {
        self.terms.get(&j).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &SymLaurentPoly)> {
        self.terms.iter().map(|(&j, c)| (j, c))
    }

    pub fn terms(&self) -> impl Iterator<Item = (DihedralWord, &SymLaurentPoly)> {
        self.iter().map(|(j, c)| (DihedralWord::basis(j), c))
    }

    /// Sum of coefficients of `v^d C_j` grouped by `j + d`.
    pub fn degree_sums(&self) -> BTreeMap<i64, i64> {
        let mut out = BTreeMap::new();
        for (j, c) in self.iter() {
            for (e, a) in c.to_laurent().terms() {
                *out.entry(j as i64 + e as i64).or_insert(0) += a;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

impl fmt::Display for DihedralProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(j, c)| {
                if *c == SymLaurentPoly::one() {
                    format!("C_{j}")
                } else if c.degree() == Some(0) {
                    format!("{c}C_{j}")
                } else {
                    format!("({c})C_{j}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn check_positive(name: &str, v: u32) -> Result<(), DihedralError> {
    if v == 0 {
        return Err(DihedralError::InvalidIndex(format!("{name} must be positive")));
    }
    Ok(())
}

/// The infinite dihedral closed form for `<i,s,t] C_k` (same side) or
/// `<i,t,s] C_k` (opposite side).
pub fn infinite_product(side: Side, i: u32, k: u32) -> Result<DihedralProduct, DihedralError> {
    check_positive("i", i)?;
    check_positive("k", k)?;
    let mut p = DihedralProduct::new();
    match side {
        Side::Same => {
            let (lo, hi) = if i == k { (2, 2 * k) } else { (k.abs_diff(i), k + i) };
            // Ends get 1 and interior terms 2, except that when i = k the
            // lower end is interior (the term at 0 is dropped).
            let mut j = lo;
            while j <= hi {
                let c = if j == hi || (j == lo && i != k) { 1 } else { 2 };
                p.add(j, &SymLaurentPoly::constant(c))?;
                j += 2;
            }
        }
        Side::Opposite => {
            let lo = k.abs_diff(i) + 1;
            let hi = k + i - 1;
            let mut j = lo;
            while j <= hi {
                p.add(j, &SymLaurentPoly::v_plus_v_inv())?;
                j += 2;
            }
        }
    }
    Ok(p)
}

/// One step of the row recursion: `out[j] = r[j-1] + r[j+1]` for `0 < j < width`.
fn shift_sum(r: &[i64], width: usize) -> Vec<i64> {
    let at = |j: usize| r.get(j).copied().unwrap_or(0);
    (0..width)
        .map(|j| if j == 0 { 0 } else { at(j - 1) + at(j + 1) })
        .collect()
}

/// Integer rows `1..=rows` of the strip recursion; `m = None` for the
/// infinite group. Row `i` is indexed by the column `j` (entry 0 is always 0).
/// For the opposite side every entry is the coefficient of `(v + v^-1)`.
pub fn triangle_table(m: Option<u32>, k: u32, side: Side, rows: u32) -> Result<Vec<Vec<i64>>, DihedralError> {
    check_positive("k", k)?;
    check_positive("rows", rows)?;
    if let Some(m) = m {
        if m < 2 || k > m {
            return Err(DihedralError::InvalidIndex(format!("need 2 <= m and k <= m, got m={m}, k={k}")));
        }
    }
    let width = match m {
        Some(m) => m as usize,
        None => (k + rows + 1) as usize,
    };
    Ok(strip_rows(width, k, side, rows as usize))
}

/// Rows `1..=rows` of the recursion in the strip `0 < j < width`.
fn strip_rows(width: usize, k: u32, side: Side, rows: usize) -> Vec<Vec<i64>> {
    let mut delta = vec![0i64; width];
    if (k as usize) < width {
        delta[k as usize] = 1;
    }
    let mut out: Vec<Vec<i64>> = Vec::with_capacity(rows);
    // prev2, prev1 are rows i-2 and i-1.
    let (mut prev2, mut prev1) = match side {
        Side::Same => (vec![0; width], delta),
        Side::Opposite => (vec![0; width], vec![0; width]),
    };
    for i in 1..=rows {
        let row = match (side, i) {
            (Side::Opposite, 1) => {
                let mut d = vec![0i64; width];
                if (k as usize) < width {
                    d[k as usize] = 1;
                }
                d
            }
            (Side::Same, 1 | 2) | (Side::Opposite, 2) => shift_sum(&prev1, width),
            _ => {
                let s = shift_sum(&prev1, width);
                s.iter().zip(&prev2).map(|(a, b)| a - b).collect()
            }
        };
        out.push(row.clone());
        prev2 = std::mem::replace(&mut prev1, row);
    }
    out
}

/// The finite dihedral product in `I2(m)`: the strip recursion below `m`
/// plus a coefficient stream `a_i` on `C_m`.
pub fn finite_product(m: u32, side: Side, i: u32, k: u32) -> Result<DihedralProduct, DihedralError> {
    if m < 2 || i == 0 || k == 0 || i > m || k > m {
        return Err(DihedralError::InvalidIndex(format!(
            "need 2 <= m, 0 < i <= m, 0 < k <= m; got m={m}, i={i}, k={k}"
        )));
    }
    let width = m as usize;
    let rows = strip_rows(width, k, side, i as usize);
    let b = SymLaurentPoly::v_plus_v_inv();
    // sigma is the common factor of the strip entries.
    let sigma = match side {
        Side::Same => SymLaurentPoly::one(),
        Side::Opposite => b.clone(),
    };
    // a[t] is the coefficient of C_m after t letters of the left factor.
    let mut a: Vec<SymLaurentPoly> = vec![SymLaurentPoly::zero(); i as usize + 1];
    if side == Side::Same && k == m {
        a[0] = SymLaurentPoly::one();
    }
    for t in 1..=i as usize {
        if side == Side::Opposite && t == 1 {
            if k == m {
                a[1] = b.clone();
            }
            continue;
        }
        let mut next = a[t - 1].times_b()?;
        if t >= 3 {
            next.add_scaled(&a[t - 2], -1)?;
        }
        // Column m-1 of the previous row spills into C_m.
        let spill = if t == 1 { i64::from(k == m - 1) } else { rows[t - 2][width - 1] };
        next.add_scaled(&sigma, spill)?;
        a[t] = next;
    }
    let mut p = DihedralProduct::new();
    let last = &rows[i as usize - 1];
    for (j, &c) in last.iter().enumerate().skip(1) {
        if c != 0 {
            let mut coeff = SymLaurentPoly::zero();
            coeff.add_scaled(&sigma, c)?;
            p.add(j as u32, &coeff)?;
        }
    }
    p.add(m, &a[i as usize])?;
    Ok(p)
}

/// Compares [`finite_product`] with the generic column computation on
/// `I2(m)` for every side, `i` and `k`, with `C_k` and its mirror image.
pub fn crosscheck_dihedral(m: u32) -> Result<CheckReport, DihedralError> {
    if !(2..=30).contains(&m) {
        return Err(DihedralError::InvalidIndex(format!("m={m} outside 2..=30")));
    }
    let g = build_group(&CoxeterMatrix::preset(&format!("I2({m})"))?)?;
    let store = KlStore::build(&g)?;
    let wg = build_wgraph(&store);
    let mut r = CheckReport::new("dihedral-crosscheck", g.name());
    for swap in [false, true] {
        // With swap, generators 1 and 2 trade places throughout.
        let elt = |w: DihedralWord| -> Result<ElementId, CoxeterError> {
            let w = if swap && w.len > 0 {
                DihedralWord::left(other(w.first), w.len)
            } else {
                w
            };
            w.element(&g)
        };
        for k in 1..=m {
            let y = elt(DihedralWord::basis(k))?;
            let col = column(&wg, y, Strategy::First)?;
            for side in Side::BOTH {
                for i in 1..=m {
                    let x = elt(side.left_factor(i, k))?;
                    let closed = finite_product(m, side, i, k)?;
                    let mut expect: Vec<(ElementId, SymLaurentPoly)> = closed
                        .terms()
                        .map(|(w, c)| Ok((elt(w)?, c.clone())))
                        .collect::<Result<_, CoxeterError>>()?;
                    expect.sort_by_key(|t| t.0);
                    let got: Vec<(ElementId, SymLaurentPoly)> =
                        col.row(x).map(|(z, h)| (z, h.clone())).collect();
                    r.examined += 1;
                    for (_, c) in &expect {
                        r.see_coeff(c.max_coeff());
                    }
                    if got != expect {
                        r.fail(
                            vec![x.0, y.0],
                            &closed,
                            format!("side {side:?}, i={i}, k={k}, swap={swap}: generic gives {}", col.product(x)),
                        );
                    }
                }
            }
        }
    }
    Ok(r)
}
