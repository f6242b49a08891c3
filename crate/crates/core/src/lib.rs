//! Acyclic edge coloring of planar graphs with at most `Δ + 10` colors,
//! together with the structural machinery behind the bound: unavoidable
//! configurations, discharging bookkeeping and an exact small-graph oracle.

pub mod colorer;
pub mod coloring;
pub mod discharging;
pub mod embedding;
pub mod error;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod scalar;
pub mod scanner;

/// Version tag embedded at the root of every JSON document.
pub const SCHEMA: &str = "acyclic-planar/1";

/// Exact charges of unbounded precision.
pub type Rational = num_rational::BigRational;
/// Exact charges in checked 64-bit arithmetic; fine for small graphs.
pub type SmallRational = num_rational::Ratio<i64>;
/// Charge ledger over exact rationals, the reference instantiation.
pub type ExactLedger = discharging::ChargeLedger<Rational>;
pub type SmallLedger = discharging::ChargeLedger<SmallRational>;
pub type F64Ledger = discharging::ChargeLedger<f64>;
pub type F32Ledger = discharging::ChargeLedger<f32>;
