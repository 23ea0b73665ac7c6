//! Ulam-Warburton cellular automaton on the square and hexagonal grids.
//!
//! The automaton starts from a single live cell (the patriarch). At every
//! generation each dead cell with exactly one live neighbor is born, and live
//! cells never die. This crate grows the automaton, tracks the family
//! structure that the birth rule induces, relates it to the Sierpinski gasket
//! (Pascal's triangle mod 2) and checks the known structural properties
//! mechanically, producing reports and deterministic renderings.

pub mod analysis;
pub mod engine;
pub mod error;
pub mod gasket;
pub mod genealogy;
pub mod lattice;
pub mod render;

pub use analysis::VerificationReport;
pub use engine::{
    run, run_with_budget, AutomatonState, BirthRecord, PopulationRow, DEFAULT_CELL_BUDGET,
};
pub use error::{Error, Result};
pub use gasket::{GasketCoord, TwoAdicOrder};
pub use genealogy::FertilityClass;
pub use lattice::{Cell, LatticeKind, SliceCoord, Symmetry};
pub use render::{RenderMode, RenderStyle};
