//! The Hecke algebra: t-basis arithmetic, the bar involution, the KL basis,
//! and columns of structure constants `h_{x,y,z}` for fixed `y`.

mod column;
mod combo;
mod tbasis;

pub use column::{c_mult_gen, column, element_label, format_row, h_value, HColumn, Strategy};
pub use combo::{Basis, CBasis, CCombo, Combo, TBasis, TCombo};
pub use tbasis::{
    bar_h, c_in_t_basis, c_in_t_basis_oracle, c_to_t, p_laurent, t_mult_element, t_mult_gen,
    t_product, BarTable,
};

use thiserror::Error;

use crate::coxeter::ElementId;
use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("no bar-invariant solution for c_{y} at t_{w}")]
    NoSolution { y: ElementId, w: ElementId },
    #[error("h({x}, {y}, {z}) has the wrong exponent parity")]
    Parity {
        x: ElementId,
        y: ElementId,
        z: ElementId,
    },
}
