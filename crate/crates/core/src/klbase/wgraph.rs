use crate::coxeter::{ElementId, GroupTable};

use super::KlStore;

/// Descent sets and mu-labelled edges: all the hecke recursion needs.
#[derive(Clone, Debug)]
pub struct WGraph<'g> {
    g: &'g GroupTable,
    /// For each `u`: `(z, mu(z, u))` over `z < u`, sorted by `z`.
    lower: Vec<Vec<(ElementId, i64)>>,
}

/// Copies the mu-edges out of a store.
pub fn build_wgraph<'g>(store: &KlStore<'g>) -> WGraph<'g> {
    let g = store.group();
    let lower = g.elements().map(|u| store.mu_lower(u).collect()).collect();
    WGraph { g, lower }
}

impl<'g> WGraph<'g> {
    pub fn group(&self) -> &'g GroupTable {
        self.g
    }

    /// `(z, mu(z, u))` for `z < u` with nonzero mu.
    pub fn lower_edges(&self, u: ElementId) -> &[(ElementId, i64)] {
        &self.lower[u.index()]
    }

    /// Edges `{x, y}` with `x < y` in id order, sorted by `(x, y)`.
    pub fn edges(&self) -> Vec<(ElementId, ElementId, i64)> {
        let mut e: Vec<_> = self
            .g
            .elements()
            .flat_map(|y| self.lower[y.index()].iter().map(move |&(x, mu)| (x, y, mu)))
            .collect();
        e.sort_unstable();
        e
    }

    pub fn num_edges(&self) -> usize {
        self.lower.iter().map(Vec::len).sum()
    }

    /// Edges whose label is not positive (a P1 failure at the edge level).
    pub fn nonpositive_edges(&self) -> Vec<(ElementId, ElementId, i64)> {
        self.edges().into_iter().filter(|e| e.2 <= 0).collect()
    }
}
