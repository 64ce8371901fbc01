//! Exact and high-precision machinery for continued fractions whose values
//! are rational combinations of zeta values, L-values, log 2, and powers
//! of pi.
//!
//! The crate provides:
//!
//! - exact rational scalars, polynomials, and rational functions;
//! - a generalized continued fraction model with polynomial tails, a text
//!   notation, exact convergents, fixed-precision evaluation, and
//!   convergence-rate estimation;
//! - the series and equivalence transforms relating sums to fractions;
//! - the polynomial multiplier method: divisibility tests, the catalog of
//!   known multiplier polynomials, partial-fraction decomposition into the
//!   period basis, and the eight derived families;
//! - Bauer-Muir acceleration with an accelerator solver and the
//!   closed-form accelerated families;
//! - polygamma-derivative fractions with shifts and their closed-form
//!   table;
//! - an independent numerical oracle (Hurwitz zeta by Euler-Maclaurin,
//!   Machin pi, binary-series log 2) and the verification suites built on
//!   top of it.
//!
//! ```
//! use ratperiod::{parse_cf, Rat};
//!
//! let cf = parse_cf("[[0,2n-1],[2,n^4]]").unwrap();
//! let conv = cf.convergents(2);
//! assert_eq!(conv[2].value(), Some(Rat::new(3, 2)));
//! let (value, _err) = cf.eval_numeric(1000, 20).unwrap();
//! assert!(value.to_decimal(8).starts_with("1.644934"));
//! ```

pub mod bauer_muir;
pub mod bernoulli;
pub mod decompose;
pub mod error;
pub mod family;
pub mod fixed;
pub mod gcf;
pub mod hurwitz;
pub mod multiplier;
pub mod parse;
pub mod period;
pub mod poly;
pub mod psi;
pub mod rat;
pub mod ratfunc;
pub mod transform;
pub mod verify;

pub use bauer_muir::{
    accelerated_family, bm_check_relation, bm_iterate, bm_solve_r, bm_step, AcceleratedFamily,
    BmStep,
};
pub use decompose::{decompose_core, CoreDecomposition};
pub use error::{Error, Result};
pub use family::{family, family_lhs, family_spec, FamilyCf};
pub use fixed::FixedFloat;
pub use gcf::{print_cf, ConvergentPair, Gcf, RateEstimate, DEFAULT_EXACT_BUDGET};
pub use hurwitz::{constant, hurwitz_zeta, period_value};
pub use multiplier::{
    catalog, decompose_period, divisibility_check, multiplier_cf, multiplier_result,
    search_multipliers, MultiplierResult, Sign,
};
pub use parse::{parse_cf, parse_poly, parse_rat, parse_ratfunc};
pub use period::{BasisConstant, RationalPeriod};
pub use poly::PolyQ;
pub use psi::{psi_cf, psi_identities, psi_identity_suite, psi_table, PsiOrder, PsiSpec};
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use transform::{equivalence_transform, euler_transform, partial_sums};
pub use verify::{run_suite, Suite, VerifyEntry, VerifyReport};
