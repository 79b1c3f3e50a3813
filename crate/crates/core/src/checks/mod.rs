//! Positivity and identity checks over KL polynomials and structure constants.

mod report;

pub use report::{CheckReport, Counterexample, MAX_COUNTEREXAMPLES};

use std::collections::HashSet;

use rayon::prelude::*;

use crate::coxeter::{iter_bits, ElementId, GroupTable};
use crate::hecke::{column, p_laurent, HColumn, HeckeError, Strategy};
use crate::klbase::{ExtremalIndex, KlStore, WGraph};
use crate::ring::{LaurentPoly, SymLaurentPoly};

/// P1 over every stored (extremal, inverse-canonical) pair.
pub fn check_p1(store: &KlStore<'_>) -> CheckReport {
    let g = store.group();
    let mut r = CheckReport::new("P1", g.name());
    // Diagonal pairs are not stored; P_{y,y} = 1.
    r.see_coeff(1);
    for (x, y, h) in store.stored_pairs() {
        let p = store.get(h);
        r.examined += 1;
        r.see_coeff(p.max_coeff());
        if !p.has_nonnegative_coeffs() {
            r.fail(vec![x.0, y.0], p, "negative coefficient");
        }
    }
    for a in store.anomalies() {
        r.fail(vec![a.x.0, a.y.0], &a.poly, format!("{:?}", a.kind));
    }
    r.distinct = store.distinct_polynomials().len() as u64;
    r
}

/// P2: `P_{x,y} - P_{z,y}` has nonnegative coefficients for `x <= z <= y`.
///
/// Moving `x` and `z` up to their extremal representatives keeps `x <= z`,
/// so only extremal `x <= z` below `y` with `y <= y^-1` are compared.
pub fn check_p2(store: &KlStore<'_>) -> CheckReport {
    let g = store.group();
    let iv = store.intervals();
    let index = ExtremalIndex::new(g, iv);
    let words = g.size().div_ceil(64);
    let mut r = CheckReport::new("P2", g.name());
    let mut seen: HashSet<(u32, u32)> = HashSet::new();
    for y in g.elements() {
        if y > g.inverse(y) {
            continue;
        }
        let below: Vec<ElementId> = index.extremal_below(y).collect();
        let mut mask = vec![0u64; words];
        for &x in &below {
            mask[x.index() / 64] |= 1 << (x.index() % 64);
        }
        for &z in &below {
            let hz = store.handle(z, y);
            let lower = iv.lower_bits(z);
            let bits: Vec<u64> = lower.iter().zip(&mask).map(|(a, b)| a & b).collect();
            for x in iter_bits(&bits) {
                if x == z {
                    continue;
                }
                r.examined += 1;
                let hx = store.handle(x, y);
                if hx == hz || !seen.insert((hx, hz)) {
                    continue;
                }
                let d = store.get(hx).checked_sub(store.get(hz));
                match d {
                    Ok(d) if d.has_nonnegative_coeffs() => {}
                    Ok(d) => r.fail(vec![x.0, z.0, y.0], d, "P_{x,y} - P_{z,y} has a negative coefficient"),
                    Err(e) => r.fail(vec![x.0, z.0, y.0], "?", e.to_string()),
                }
            }
        }
    }
    r.distinct = seen.len() as u64;
    r
}

/// Summary of one column: everything the positivity runner logs.
#[derive(Clone, Debug)]
pub struct ColumnSummary {
    pub y: ElementId,
    pub max_coeff: i64,
    pub entries: u64,
    pub distinct: u64,
    /// P3 failures: `(x, z, h)` with a negative coefficient.
    pub negative: Vec<(ElementId, ElementId, SymLaurentPoly)>,
    /// `(x, z, h)` whose `q`-form is not unimodal.
    pub non_unimodal: Vec<(ElementId, ElementId, SymLaurentPoly)>,
    /// The distinct values of the column, when requested.
    pub polys: Vec<SymLaurentPoly>,
}

impl ColumnSummary {
    pub fn ok(&self) -> bool {
        self.negative.is_empty() && self.non_unimodal.is_empty()
    }
}

/// Scans the distinct polynomials of a column once, then locates the
/// offending entries.
pub fn summarize_column(col: &HColumn) -> ColumnSummary {
    let store = col.store();
    let mut bad_neg = HashSet::new();
    let mut bad_uni = HashSet::new();
    let mut max_coeff = 0;
    for (h, p) in store.iter().enumerate() {
        max_coeff = max_coeff.max(p.max_coeff());
        if !p.has_nonnegative_coeffs() {
            bad_neg.insert(h as u32);
        }
        if !p.to_qpoly().is_unimodal() {
            bad_uni.insert(h as u32);
        }
    }
    let mut negative = Vec::new();
    let mut non_unimodal = Vec::new();
    if !bad_neg.is_empty() || !bad_uni.is_empty() {
        for x in 0..col.num_rows() {
            let x = ElementId(x as u32);
            for &(z, h) in col.row_handles(x) {
                let p = || store.get(h).clone();
                if bad_neg.contains(&h) {
                    negative.push((x, ElementId(z), p()));
                }
                if bad_uni.contains(&h) {
                    non_unimodal.push((x, ElementId(z), p()));
                }
            }
        }
    }
    ColumnSummary {
        y: col.y(),
        max_coeff,
        entries: col.num_entries() as u64,
        distinct: store.len() as u64,
        negative,
        non_unimodal,
        polys: Vec::new(),
    }
}

/// Builds and summarizes the columns of `ys` on the current rayon pool,
/// handing summaries to `emit` in the order of `ys`.
pub fn sweep_columns<F, E>(
    wg: &WGraph<'_>,
    ys: &[ElementId],
    strategy: Strategy,
    batch: usize,
    keep_polys: bool,
    mut emit: F,
) -> Result<(), E>
where
    F: FnMut(ColumnSummary) -> Result<(), E>,
    E: From<HeckeError>,
{
    for chunk in ys.chunks(batch.max(1)) {
        let done: Vec<Result<ColumnSummary, HeckeError>> = chunk
            .par_iter()
            .map(|&y| {
                column(wg, y, strategy).map(|c| {
                    let mut s = summarize_column(&c);
                    if keep_polys {
                        s.polys = c.store().iter().cloned().collect();
                    }
                    s
                })
            })
            .collect();
        for s in done {
            emit(s?)?;
        }
    }
    Ok(())
}

/// P3 over the columns `ys`: every `h_{x,y,z}` has nonnegative coefficients.
pub fn check_p3(wg: &WGraph<'_>, ys: &[ElementId], strategy: Strategy) -> Result<CheckReport, HeckeError> {
    let g = wg.group();
    let mut r = CheckReport::new("P3", g.name());
    sweep_columns(wg, ys, strategy, rayon::current_num_threads() * 2, false, |s| -> Result<(), HeckeError> {
        r.examined += s.entries;
        r.see_coeff(s.max_coeff);
        r.distinct = r.distinct.max(s.distinct);
        for (x, z, h) in &s.negative {
            r.fail(vec![x.0, s.y.0, z.0], h, "negative coefficient");
        }
        Ok(())
    })?;
    Ok(r)
}

/// Unimodality of `v^d h_{x,y,z}` as a polynomial in `q` over one column.
pub fn check_unimodal(g: &GroupTable, col: &HColumn) -> CheckReport {
    let s = summarize_column(col);
    let mut r = CheckReport::new("unimodal", g.name());
    r.examined = s.entries;
    r.max_coeff = s.max_coeff;
    r.distinct = s.distinct;
    for (x, z, h) in &s.non_unimodal {
        r.fail(vec![x.0, s.y.0, z.0], h.to_qpoly(), "not unimodal");
    }
    r
}

/// All labels in {2, 3, 4, 6}.
pub fn is_crystallographic(g: &GroupTable) -> bool {
    g.matrix().labels().iter().all(|m| matches!(m, 2 | 3 | 4 | 6))
}

/// `c_x c_{w0} = h_x c_{w0}` with `h_x = sum_{z <= x} p_{z,x} v^{l(z)}`.
///
/// `v^{l(x)} h_x` must also be a palindromic polynomial in `q`. It should be
/// unimodal too; that fails the check on crystallographic groups and is only
/// noted elsewhere.
pub fn check_w0_identity(store: &KlStore<'_>, wg: &WGraph<'_>) -> Result<CheckReport, HeckeError> {
    let g = store.group();
    let w0 = g.longest();
    let col = column(wg, w0, Strategy::First)?;
    let weyl = is_crystallographic(g);
    let mut r = CheckReport::new("w0-identity", g.name());
    let mut non_unimodal = 0u64;
    for x in g.elements() {
        r.examined += 1;
        let mut expect = LaurentPoly::zero();
        for z in store.intervals().lower(x) {
            let term = p_laurent(store, z, x).shift(g.length(z) as i32);
            expect = expect.checked_add(&term)?;
        }
        let row: Vec<(ElementId, &SymLaurentPoly)> = col.row(x).collect();
        let got = match row.as_slice() {
            [(z, h)] if *z == w0 => h.to_laurent(),
            _ => {
                r.fail(vec![x.0, w0.0], col.product(x), "not a multiple of c_w0");
                continue;
            }
        };
        if got != expect {
            r.fail(vec![x.0, w0.0], &got, format!("expected {expect}"));
            continue;
        }
        let q = expect.shift(g.length(x) as i32);
        r.see_coeff(q.terms().map(|t| t.1).max().unwrap_or(0));
        let coeffs: Vec<i64> = (0..=2 * g.length(x) as i32).map(|e| q.coeff(e)).collect();
        let qpoly = crate::ring::QPoly::from_coeffs(coeffs.iter().step_by(2).copied().collect());
        if coeffs.iter().skip(1).step_by(2).any(|&c| c != 0) || !qpoly.is_palindromic() {
            r.fail(vec![x.0, w0.0], &qpoly, "v^l(x) h_x is not a palindromic polynomial in q");
        } else if !qpoly.is_unimodal() {
            non_unimodal += 1;
            if weyl {
                r.fail(vec![x.0, w0.0], &qpoly, "v^l(x) h_x is not unimodal");
            }
        }
    }
    if non_unimodal > 0 && !weyl {
        r.notes.push(format!("{non_unimodal} values of v^l(x) h_x are not unimodal"));
    }
    Ok(r)
}

/// First- and last-descent strategies give identical columns.
pub fn check_strategy_invariance(wg: &WGraph<'_>, ys: &[ElementId]) -> Result<CheckReport, HeckeError> {
    let g = wg.group();
    let mut r = CheckReport::new("strategy-invariance", g.name());
    let results: Vec<Result<Vec<(u32, u32)>, HeckeError>> = ys
        .par_iter()
        .map(|&y| {
            let a = column(wg, y, Strategy::First)?;
            let b = column(wg, y, Strategy::Last)?;
            let mut bad = Vec::new();
            for x in g.elements() {
                if !a.row(x).eq(b.row(x)) {
                    bad.push((x.0, y.0));
                }
            }
            Ok(bad)
        })
        .collect();
    for res in results {
        r.examined += 1;
        for (x, y) in res? {
            r.fail(vec![x, y], "-", "rows differ between strategies");
        }
    }
    Ok(r)
}

/// `h_{x,y,z} = h_{y^-1,x^-1,z^-1}` over all triples; keeps every column in memory.
pub fn check_h_symmetry(wg: &WGraph<'_>) -> Result<CheckReport, HeckeError> {
    let g = wg.group();
    let cols: Vec<HColumn> = g
        .elements()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&y| column(wg, y, Strategy::First))
        .collect::<Result<_, _>>()?;
    let mut r = CheckReport::new("h-symmetry", g.name());
    for y in g.elements() {
        for x in g.elements() {
            let mirror = &cols[g.inverse(x).index()];
            let yi = g.inverse(y);
            let here: Vec<(ElementId, &SymLaurentPoly)> = cols[y.index()].row(x).collect();
            let mut there: Vec<(ElementId, SymLaurentPoly)> = mirror
                .row(yi)
                .map(|(z, h)| (g.inverse(z), h.clone()))
                .collect();
            there.sort_by_key(|t| t.0);
            r.examined += 1;
            let same = here.len() == there.len()
                && here.iter().zip(&there).all(|(a, b)| a.0 == b.0 && *a.1 == b.1);
            if !same {
                r.fail(vec![x.0, y.0], "-", "h_{x,y,z} != h_{y^-1,x^-1,z^-1}");
            }
        }
    }
    Ok(r)
}
