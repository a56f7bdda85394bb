//! Diameter and circumference estimates from degree data: 2-cycle
//! contraction, Eulerian extension with nominal vertices, degree boosting and
//! the Knyazev / Dankelmann bounds.

mod circumference;
mod contraction;
mod eulerian;
mod knyazev;

pub use circumference::{circumference_bounds, CircumferenceInterval};
pub use contraction::{contract_two_cycles, has_two_cycle, Contraction, ContractionSummary};
pub use eulerian::{boost_min_outdegree, eulerianize, Checksum, EulerianExtension, OMEGA_PREFIX};
pub use knyazev::{dankelmann_bound, diameter_bound, knyazev_bound, BoundReport};
