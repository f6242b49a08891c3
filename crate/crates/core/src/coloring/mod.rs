//! Partial edge colorings and the bichromatic-path machinery built on them.

mod color;
pub mod json;
mod partial;
mod paths;

pub use color::{Color, ColorMultiset, ColorSet, MAX_PALETTE};
pub use partial::PartialEdgeColoring;
pub use paths::{
    exists_critical_path, find_bichromatic_cycle, forbidden_from, maximal_bichromatic_path,
    seen_colors, validate_acyclic, AcyclicReport, BichromaticPath, Verdict,
};

pub(crate) use paths::{
    critical_path_unchecked, first_bichromatic_cycle,
    forbidden_unchecked, safe_to_color,
};
