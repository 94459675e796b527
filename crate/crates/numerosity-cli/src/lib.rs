//! Command-line companion to `numerosity-core`: the point-set expression
//! DSL, the axiom-catalog harness, and text/CSV/JSON rendering.

pub mod dsl;
pub mod harness;
pub mod output;

use numerosity_core::numerosity::{EventualSignOracle, UltrafilterOracle};

/// Looks an oracle up by name. `eventual-sign` is built in; the registry is
/// the extension point for user oracles.
pub fn oracle_by_name(
    name: &str,
    stabilization_window: usize,
) -> Option<Box<dyn UltrafilterOracle>> {
    match name {
        "eventual-sign" => Some(Box::new(EventualSignOracle::new(stabilization_window))),
        _ => None,
    }
}
