//! Kazhdan–Lusztig polynomials, mu-coefficients, extremal pairs and the W-graph.

mod extremal;
mod store;
mod wgraph;

pub use extremal::*;
pub use store::{level_starts, AnomalyKind, KlAnomaly, KlStore, ONE, ZERO};
pub use wgraph::{build_wgraph, WGraph};

use thiserror::Error;

use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KlError {
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// `P_{x,y}` from a built store.
pub fn kl_polynomial<'a>(
    store: &'a KlStore<'_>,
    x: crate::coxeter::ElementId,
    y: crate::coxeter::ElementId,
) -> &'a crate::ring::QPoly {
    store.kl_polynomial(x, y)
}

/// `mu(x, y)` from a built store.
pub fn mu(store: &KlStore<'_>, x: crate::coxeter::ElementId, y: crate::coxeter::ElementId) -> i64 {
    store.mu(x, y)
}
