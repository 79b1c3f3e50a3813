use std::fmt::Write as _;

use crate::coxeter::{ElementId, GroupTable};
use crate::klbase::WGraph;
use crate::ring::{LaurentPoly, PolyStore, RingError, SymLaurentPoly};

use super::{CCombo, HeckeError};

/// Which left descent `s` of `x` drives `c_x = c_s c_{sx} - ...`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Lowest generator index in `L(x)`.
    #[default]
    First,
    /// Highest generator index in `L(x)`.
    Last,
}

impl Strategy {
    pub fn pick(self, descents: u8) -> usize {
        debug_assert!(descents != 0);
        match self {
            Strategy::First => descents.trailing_zeros() as usize,
            Strategy::Last => 7 - descents.leading_zeros() as usize,
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first" => Ok(Strategy::First),
            "last" => Ok(Strategy::Last),
            _ => Err(format!("unknown strategy {s:?} (expected first or last)")),
        }
    }
}

/// `c_s * u` in the KL basis, by the W-graph rule.
pub fn c_mult_gen(wg: &WGraph<'_>, s: usize, u: &CCombo) -> Result<CCombo, RingError> {
    let g = wg.group();
    let b = LaurentPoly::v_plus_v_inv();
    let mut out = CCombo::zero();
    for (w, p) in u.iter() {
        if g.is_left_descent(s, w) {
            out.add_term(w, &p.checked_mul(&b)?, 1)?;
        } else {
            out.add_term(g.lmul(s, w), p, 1)?;
            for &(z, mu) in wg.lower_edges(w) {
                if g.is_left_descent(s, z) {
                    out.add_term(z, p, mu)?;
                }
            }
        }
    }
    Ok(out)
}

/// `c_x c_y` for every `x` and a fixed `y`: `h_{x,y,z}` stored as handles
/// into a per-column table of distinct polynomials.
#[derive(Clone, Debug)]
pub struct HColumn {
    y: ElementId,
    rows: Vec<Vec<(u32, u32)>>,
    store: PolyStore<SymLaurentPoly>,
}

impl HColumn {
    pub fn y(&self) -> ElementId {
        self.y
    }

    /// Nonzero `(z, h_{x,y,z})`, sorted by `z`.
    pub fn row(&self, x: ElementId) -> impl Iterator<Item = (ElementId, &SymLaurentPoly)> + '_ {
        self.rows[x.index()]
            .iter()
            .map(|&(z, h)| (ElementId(z), self.store.get(h)))
    }

    /// Raw `(z, handle)` pairs of a row.
    pub fn row_handles(&self, x: ElementId) -> &[(u32, u32)] {
        &self.rows[x.index()]
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn store(&self) -> &PolyStore<SymLaurentPoly> {
        &self.store
    }

    /// Number of distinct nonzero `h_{x,y,z}` in the column.
    pub fn num_distinct(&self) -> usize {
        self.store.len()
    }

    pub fn num_entries(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Largest coefficient over the column, 0 for an empty column.
    pub fn max_coeff(&self) -> i64 {
        self.store.iter().map(SymLaurentPoly::max_coeff).max().unwrap_or(0).max(0)
    }

    pub fn h(&self, x: ElementId, z: ElementId) -> SymLaurentPoly {
        let row = &self.rows[x.index()];
        match row.binary_search_by_key(&z.0, |&(z, _)| z) {
            Ok(i) => self.store.get(row[i].1).clone(),
            Err(_) => SymLaurentPoly::zero(),
        }
    }

    /// `c_x c_y` as a KL-basis combination.
    pub fn product(&self, x: ElementId) -> CCombo {
        CCombo::from_terms(self.row(x).map(|(z, h)| (z, h.to_laurent()))).unwrap()
    }
}

/// `h_{x,y,z}` from a built column.
pub fn h_value(col: &HColumn, x: ElementId, z: ElementId) -> SymLaurentPoly {
    col.h(x, z)
}

/// Builds `c_x c_y` for all `x` by induction on `x` (ids are sorted by length):
/// `c_x c_y = c_s (c_{sx} c_y) - sum_{z < sx, sz < z} mu(z, sx) c_z c_y`.
pub fn column(wg: &WGraph<'_>, y: ElementId, strategy: Strategy) -> Result<HColumn, HeckeError> {
    let g = wg.group();
    let n = g.size();
    let mut scratch = Scratch::new(n);
    let mut rows: Vec<Vec<(u32, u32)>> = Vec::with_capacity(n);
    let mut store = PolyStore::new();
    let ly = g.length(y);
    rows.push(vec![(y.0, store.intern(SymLaurentPoly::one()))]);
    for x in g.elements().skip(1) {
        let s = strategy.pick(g.left_descents(x));
        let sx = g.lmul(s, x);
        for &(w, h) in &rows[sx.index()] {
            let w = ElementId(w);
            let h = store.get(h);
            if g.is_left_descent(s, w) {
                scratch.at(w).add_scaled_times_b(h, 1)?;
            } else {
                scratch.at(g.lmul(s, w)).add_scaled(h, 1)?;
                for &(z, mu) in wg.lower_edges(w) {
                    if g.is_left_descent(s, z) {
                        scratch.at(z).add_scaled(h, mu)?;
                    }
                }
            }
        }
        for &(z, mu) in wg.lower_edges(sx) {
            if !g.is_left_descent(s, z) {
                continue;
            }
            for &(w, h) in &rows[z.index()] {
                scratch.at(ElementId(w)).add_scaled(store.get(h), -mu)?;
            }
        }
        let lx = g.length(x);
        let mut row = Vec::new();
        for (z, h) in scratch.drain() {
            let parity = ((lx + ly + g.length(z)) % 2) as u8;
            if h.parity() != Some(parity) {
                return Err(HeckeError::Parity { x, y, z });
            }
            row.push((z.0, store.intern(h)));
        }
        rows.push(row);
    }
    Ok(HColumn { y, rows, store })
}

/// Dense accumulator indexed by element, with a list of touched slots.
struct Scratch {
    slots: Vec<SymLaurentPoly>,
    touched: Vec<u32>,
    mark: Vec<bool>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            slots: vec![SymLaurentPoly::zero(); n],
            touched: Vec::new(),
            mark: vec![false; n],
        }
    }

    fn at(&mut self, z: ElementId) -> &mut SymLaurentPoly {
        if !self.mark[z.index()] {
            self.mark[z.index()] = true;
            self.touched.push(z.0);
        }
        &mut self.slots[z.index()]
    }

    /// Nonzero entries in increasing `z`, leaving the accumulator empty.
    fn drain(&mut self) -> Vec<(ElementId, SymLaurentPoly)> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &z in &self.touched {
            self.mark[z as usize] = false;
            let h = std::mem::take(&mut self.slots[z as usize]);
            if !h.is_zero() {
                out.push((ElementId(z), h));
            }
        }
        self.touched.clear();
        out
    }
}

/// `id(word)`, e.g. `5(121)`; the identity prints as `0(e)`.
pub fn element_label(g: &GroupTable, x: ElementId) -> String {
    format!("{x}({})", g.word_string(x))
}

/// One line of a column table: `x: z -> h; z -> h; ...`.
pub fn format_row(g: &GroupTable, col: &HColumn, x: ElementId) -> String {
    let mut line = format!("{}:", element_label(g, x));
    let mut first = true;
    for (z, h) in col.row(x) {
        let sep = if first { " " } else { "; " };
        first = false;
        write!(line, "{sep}{} -> {h}", element_label(g, z)).unwrap();
    }
    line
}
