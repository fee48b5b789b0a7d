//! Explicit avoiding colorings.
//!
//! Every generator returns the coloring together with the demand list it is
//! claimed to avoid, so callers can re-check the claim with
//! [`crate::containment::avoids`] instead of trusting it.

mod cycles;
mod matching;
mod paths;
mod stars;

pub use cycles::monotone_cycle_construction;
pub use matching::{
    matching_construction, matching_lb_params, pentagon, MatchingConstruction, MatchingLbParams,
    MatchingParams,
};
pub use paths::{alternating_parity, monotone_path_grid};
pub use stars::{star_blowup, star_coloring};

use crate::coloring::EdgeColoring;
use crate::containment::{avoids, Avoidance, Demand};
use crate::error::Result;

/// A coloring with the demands it avoids and where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedColoring {
    pub coloring: EdgeColoring,
    pub avoided: Vec<Demand>,
    /// Construction name and parameters, e.g. `monotone-cycle(4,4)`.
    pub provenance: String,
}

impl CertifiedColoring {
    /// Re-checks the certificate with the containment engine.
    pub fn verify(&self) -> Result<Avoidance> {
        avoids(&self.coloring, &self.avoided)
    }
}
