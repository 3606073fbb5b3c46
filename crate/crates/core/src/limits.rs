//! Desk-scale guards. Exceeding one is refused unless
//! `MSTFAN_SCALE_OVERRIDE=1` is set in the environment.

use crate::error::{Error, Result};

pub const OVERRIDE_VAR: &str = "MSTFAN_SCALE_OVERRIDE";

/// Points accepted by triangulation enumeration.
pub const MAX_ENUMERATION_POINTS: usize = 12;
/// Ambient dimension accepted by triangulation enumeration.
pub const MAX_ENUMERATION_DIM: usize = 3;
/// Ordered trees examined for one configuration before refusing.
pub const MAX_ORDERED_TREES: usize = 10_000;
/// Dual graph nodes accepted by per-triangulation tree enumeration.
pub const MAX_DUAL_NODES: usize = 12;
/// Generator parameter bound.
pub const MAX_GENERATOR_SIZE: usize = 12;

pub fn scale_override() -> bool {
    std::env::var(OVERRIDE_VAR).is_ok_and(|v| v == "1")
}

pub fn guard(what: &str, size: usize, limit: usize) -> Result<()> {
    if size > limit && !scale_override() {
        return Err(Error::ScaleGuard { what: what.to_string(), size, limit });
    }
    Ok(())
}
