//! Exact Hilbert coefficients of good `I`-filtrations of monomial quotient
//! modules `R/J`, closed-form coefficient and regularity bounds, and a seeded
//! corpus runner that checks each bound against computed invariants.

pub mod bounds;
pub mod corpus;
pub mod error;
pub mod filtration;
pub mod fixtures;
pub mod hilbert;
pub mod input;
pub mod monomial;
pub mod rng;
pub mod serde_big;
pub mod staircase;
pub mod text;

pub use error::{Error, Result};
pub use filtration::{GoodFiltration, ModulePresentation, ValidationReport, Violation};
pub use hilbert::{Analysis, HilbertConfig, HilbertData, XiVector};
pub use monomial::{minimalize, Monomial, MonomialIdeal};
