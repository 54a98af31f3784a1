//! Integer zeros of the borderline coefficient polynomial.

pub mod solve;
pub mod symmetric;
pub mod tau;

pub use solve::{
    build_f, c_of, check_pattern, direct_coefficient, divisor_candidates, pattern_constant, solve_integer_cases,
    Candidate, Class, Divided, FPoly, Method, PatternCheck, RegimeReport, ScanReport, Triple, DEFAULT_A_MAX,
};
pub use symmetric::{from_sym, to_sym};
pub use tau::{tau, tau_degree, A1Regime, TauPoly};
