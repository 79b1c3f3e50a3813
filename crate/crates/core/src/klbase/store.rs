use crate::coxeter::{BruhatIntervals, ElementId, GroupTable};
use crate::ring::{PolyStore, QPoly};

use super::extremal::ExtremalIndex;
use super::KlError;

/// Handle of the zero polynomial in every [`KlStore`].
pub const ZERO: u32 = 0;
/// Handle of the constant polynomial 1 in every [`KlStore`].
pub const ONE: u32 = 1;

/// A computed `P_{x,y}` that violates nonnegativity or the degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlAnomaly {
    pub x: ElementId,
    pub y: ElementId,
    pub poly: QPoly,
    pub kind: AnomalyKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnomalyKind {
    NegativeCoefficient,
    DegreeBound,
    ConstantTerm,
}

/// Every Kazhdan–Lusztig polynomial of a finite Coxeter group.
///
/// Only extremal pairs with `y <= y^-1` (and `x <= x^-1` when `y` is an
/// involution) are stored; other pairs are reduced on lookup.
pub struct KlStore<'g> {
    g: &'g GroupTable,
    iv: BruhatIntervals,
    /// For canonical `y`: sorted `(x, handle)`.
    columns: Vec<Vec<(u32, u32)>>,
    /// For every `y`: `(z, mu(z, y))` over `z < y` with nonzero mu, sorted by `z`.
    mu_lower: Vec<Vec<(u32, i64)>>,
    polys: PolyStore<QPoly>,
    anomalies: Vec<KlAnomaly>,
}

impl<'g> KlStore<'g> {
    /// Runs the recursion over the whole group, `y` in increasing id order.
    pub fn build(g: &'g GroupTable) -> Result<Self, KlError> {
        let iv = BruhatIntervals::new(g);
        let mut polys = PolyStore::new();
        assert_eq!(polys.intern(QPoly::zero()), ZERO);
        assert_eq!(polys.intern(QPoly::one()), ONE);
        let mut store = KlStore {
            g,
            iv,
            columns: vec![Vec::new(); g.size()],
            mu_lower: vec![Vec::new(); g.size()],
            polys,
            anomalies: Vec::new(),
        };
        let starts = level_starts(g);
        let extremal: Vec<Vec<ElementId>> = {
            let index = ExtremalIndex::new(g, &store.iv);
            g.elements()
                .map(|y| {
                    if y <= g.inverse(y) {
                        index.extremal_below(y).collect()
                    } else {
                        Vec::new()
                    }
                })
                .collect()
        };
        for y in g.elements() {
            let yi = g.inverse(y);
            if y <= yi {
                let below = &extremal[y.index()];
                if y == yi {
                    let canon: Vec<ElementId> =
                        below.iter().copied().filter(|&x| x <= g.inverse(x)).collect();
                    store.fill_column(y, &canon)?;
                } else {
                    store.fill_column(y, below)?;
                }
                store.fill_mu(y, below, &starts);
            } else {
                store.mirror_mu(y);
            }
        }
        Ok(store)
    }

    pub fn group(&self) -> &'g GroupTable {
        self.g
    }

    pub fn intervals(&self) -> &BruhatIntervals {
        &self.iv
    }

    fn fill_column(&mut self, y: ElementId, xs: &[ElementId]) -> Result<(), KlError> {
        let g = self.g;
        if y == g.identity() {
            return Ok(());
        }
        let s = g.left_descents(y).trailing_zeros() as usize;
        let v = g.lmul(s, y);
        let ly = g.length(y);
        let mut column = Vec::with_capacity(xs.len());
        for &x in xs {
            if x == y {
                continue;
            }
            // x is extremal, so s is a left descent of x as well.
            debug_assert!(g.is_left_descent(s, x));
            let sx = g.lmul(s, x);
            let mut p = self.get(self.handle(sx, v)).clone();
            p.add_scaled_shifted(self.get(self.handle(x, v)), 1, 1)?;
            for &(z, mu) in &self.mu_lower[v.index()] {
                let z = ElementId(z);
                if !g.is_left_descent(s, z) || !self.iv.leq(x, z) {
                    continue;
                }
                let shift = ((ly - g.length(z)) / 2) as usize;
                p.add_scaled_shifted(self.get(self.handle(x, z)), -mu, shift)?;
            }
            self.audit(x, y, &p);
            column.push((x.0, self.polys.intern(p)));
        }
        column.sort_unstable();
        self.columns[y.index()] = column;
        Ok(())
    }

    fn audit(&mut self, x: ElementId, y: ElementId, p: &QPoly) {
        let diff = (self.g.length(y) - self.g.length(x)) as usize;
        if !p.has_nonnegative_coeffs() {
            self.anomalies.push(KlAnomaly {
                x,
                y,
                poly: p.clone(),
                kind: AnomalyKind::NegativeCoefficient,
            });
        }
        if p.degree().is_some_and(|d| 2 * d + 1 > diff) {
            self.anomalies.push(KlAnomaly {
                x,
                y,
                poly: p.clone(),
                kind: AnomalyKind::DegreeBound,
            });
        }
        if p.coeff(0) != 1 {
            self.anomalies.push(KlAnomaly {
                x,
                y,
                poly: p.clone(),
                kind: AnomalyKind::ConstantTerm,
            });
        }
    }

    /// mu-edges below a canonical `y`: coatoms have mu = 1, and beyond that
    /// only extremal `z` can carry a nonzero mu.
    fn fill_mu(&mut self, y: ElementId, extremal: &[ElementId], starts: &[usize]) {
        let g = self.g;
        let ly = g.length(y);
        let mut edges: Vec<(u32, i64)> = Vec::new();
        if ly > 0 {
            let (lo, hi) = (starts[ly as usize - 1], starts[ly as usize]);
            let bits = self.iv.lower_bits(y);
            for z in lo..hi {
                if bits[z / 64] >> (z % 64) & 1 == 1 {
                    edges.push((z as u32, 1));
                }
            }
        }
        for &z in extremal {
            let diff = ly - g.length(z);
            if diff < 3 || diff % 2 == 0 {
                continue;
            }
            let mu = self.get(self.handle(z, y)).coeff(((diff - 1) / 2) as usize);
            if mu != 0 {
                edges.push((z.0, mu));
            }
        }
        edges.sort_unstable();
        self.mu_lower[y.index()] = edges;
    }

    fn mirror_mu(&mut self, y: ElementId) {
        let g = self.g;
        let mut edges: Vec<(u32, i64)> = self.mu_lower[g.inverse(y).index()]
            .iter()
            .map(|&(z, mu)| (g.inverse(ElementId(z)).0, mu))
            .collect();
        edges.sort_unstable();
        self.mu_lower[y.index()] = edges;
    }

    /// Moves `x` up until `(x, y)` is extremal, using `P_{x,y} = P_{sx,y}`
    /// for `s` in `L(y) \ L(x)` and its right-hand analogue.
    pub fn extremalize(&self, mut x: ElementId, y: ElementId) -> ElementId {
        let g = self.g;
        loop {
            let l = g.left_descents(y) & !g.left_descents(x);
            if l != 0 {
                x = g.lmul(l.trailing_zeros() as usize, x);
                continue;
            }
            let r = g.right_descents(y) & !g.right_descents(x);
            if r != 0 {
                x = g.rmul(x, r.trailing_zeros() as usize);
                continue;
            }
            return x;
        }
    }

    /// Handle of `P_{x,y}` in [`Self::polys`].
    pub fn handle(&self, x: ElementId, y: ElementId) -> u32 {
        if !self.iv.leq(x, y) {
            return ZERO;
        }
        let x = self.extremalize(x, y);
        if x == y {
            return ONE;
        }
        let g = self.g;
        let (mut x, y) = if g.inverse(y) < y {
            (g.inverse(x), g.inverse(y))
        } else {
            (x, y)
        };
        if y == g.inverse(y) && g.inverse(x) < x {
            x = g.inverse(x);
        }
        let col = &self.columns[y.index()];
        match col.binary_search_by_key(&x.0, |&(x, _)| x) {
            Ok(i) => col[i].1,
            Err(_) => panic!("missing extremal pair ({x}, {y})"),
        }
    }

    #[inline]
    pub fn get(&self, handle: u32) -> &QPoly {
        self.polys.get(handle)
    }

    /// `P_{x,y}`.
    pub fn kl_polynomial(&self, x: ElementId, y: ElementId) -> &QPoly {
        self.get(self.handle(x, y))
    }

    /// Coefficient of `q^((l(y)-l(x)-1)/2)` in `P_{x,y}`; 0 unless `x < y`
    /// with odd length difference.
    pub fn mu(&self, x: ElementId, y: ElementId) -> i64 {
        let edges = &self.mu_lower[y.index()];
        match edges.binary_search_by_key(&x.0, |&(z, _)| z) {
            Ok(i) => edges[i].1,
            Err(_) => 0,
        }
    }

    /// `(z, mu(z, y))` for all `z < y` with nonzero mu, sorted by `z`.
    pub fn mu_lower(&self, y: ElementId) -> impl Iterator<Item = (ElementId, i64)> + '_ {
        self.mu_lower[y.index()].iter().map(|&(z, mu)| (ElementId(z), mu))
    }

    /// Stored pairs `(x, y, handle)` with `x != y`, in increasing `y` then `x`.
    pub fn stored_pairs(&self) -> impl Iterator<Item = (ElementId, ElementId, u32)> + '_ {
        self.columns.iter().enumerate().flat_map(|(y, col)| {
            col.iter()
                .map(move |&(x, h)| (ElementId(x), ElementId(y as u32), h))
        })
    }

    /// All distinct `P_{x,y}` with `x <= y`, the constant 1 included.
    pub fn distinct_polynomials(&self) -> Vec<QPoly> {
        let mut v: Vec<QPoly> = self.polys.iter().filter(|p| !p.is_zero()).cloned().collect();
        v.sort_by(QPoly::cmp_degree_lex);
        v
    }

    pub fn num_stored(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Negative coefficients and degree-bound violations met during the build.
    pub fn anomalies(&self) -> &[KlAnomaly] {
        &self.anomalies
    }
}

/// `starts[k]` is the first id of length `k`; ids are sorted by length.
pub fn level_starts(g: &GroupTable) -> Vec<usize> {
    let mut starts = vec![0];
    for n in g.length_distribution() {
        starts.push(starts.last().unwrap() + n);
    }
    starts
}
