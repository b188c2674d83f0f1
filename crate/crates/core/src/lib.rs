//! Degree and Hirzebruch-defect invariants of framings, stable framings and
//! 2-framings of closed oriented 3-manifolds.
//!
//! A stable framing within a fixed spin structure is located by its total
//! defect `(d, h)` in the dh-plane. The modules here compute that point for
//! the framings that arise naturally from surgery presentations, quotients of
//! S³ by finite subgroups, and circle bundles over surfaces, and locate the
//! canonical framing(s) that minimize `2|d| + |h|`.

pub mod bundles;
pub mod dhplane;
pub mod error;
pub mod exactmath;
pub mod linkcalc;
pub mod quotients;

pub use error::{Error, Result};
