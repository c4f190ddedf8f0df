//! Exact computations with finite-dimensional Leibniz algebras relative to Lie algebras.
pub mod algebra;
pub mod centers;
pub mod exactla;
pub mod extensions;
pub mod format;
pub mod freeleib;
pub mod homology;
pub mod invariants;
pub mod nilcheck;
pub mod report;
pub mod verify;
