//! Numeric tolerances used by assertions and verification gates.
//!
//! All character evaluations are ratios of small (at most 8x8) determinants
//! of unit complex numbers built from exact rational angles, so double
//! precision leaves residuals near 1e-13; the thresholds below are
//! comfortably above that noise floor and well below any true signal
//! (the smallest nonzero quantities on the supported grid are O(0.1)).

/// Absolute tolerance for assertions on real quantities: imaginary parts of
/// character values, boundary vanishing, eigenvector residuals.
pub const ASSERT_TOL: f64 = 1e-9;

/// Maximum distance from the nearest integer accepted when rounding solved
/// fusion multiplicities to integers.
pub const ROUND_TOL: f64 = 1e-6;

/// Smallest acceptable magnitude for the determinant of the evaluation
/// matrix; below this the evaluation set cannot serve as a basis.
pub const DET_MIN: f64 = 1e-9;

/// Largest acceptable infinity-norm condition number for the evaluation
/// matrix.
pub const COND_MAX: f64 = 1e8;

/// Guard on character-formula denominators; the evaluation points keep all
/// eigenvalues well separated, so anything below this signals a bug.
pub const DENOM_MIN: f64 = 1e-12;

/// Tolerance for floating-point consistency identities (squared constant
/// against the paired character sum).
pub const CONSISTENCY_TOL: f64 = 1e-6;
