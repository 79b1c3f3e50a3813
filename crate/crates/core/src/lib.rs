//! Kazhdan–Lusztig polynomials, W-graphs and structure constants of the
//! Kazhdan–Lusztig basis for finite Coxeter groups, with positivity checks.
//!
//! ```
//! use coxkl::coxeter::{build_group, CoxeterMatrix};
//! use coxkl::hecke::{column, Strategy};
//! use coxkl::klbase::{build_wgraph, KlStore};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let g = build_group(&CoxeterMatrix::preset("H3")?)?;
//! let store = KlStore::build(&g)?;
//! let p = store.kl_polynomial(g.identity(), g.longest());
//! assert_eq!(p.to_string(), "1");
//! let wg = build_wgraph(&store);
//! let col = column(&wg, g.longest(), Strategy::First)?;
//! assert_eq!(col.product(g.identity()).len(), 1);
//! # Ok(())
//! # }
//! ```

pub mod coxeter;
pub mod ring;
pub mod klbase;
pub mod hecke;
pub mod checks;
pub mod dihedral;
