pub mod arith;
pub mod classify;
pub mod cli;
pub mod curve;
pub mod group;
pub mod modcurve;
pub mod shape;

pub use shape::{shape_contains, TorsionShape};
