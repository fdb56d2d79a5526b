//! Betti numbers, the inequality chain, and the freeness deciders.

mod analyze;
mod betti;
mod flag;
mod heavy;
mod saito;
mod supersolvable;
mod verdict;

pub use analyze::{analyze, analyze_with, Analysis, Decider};
pub use betti::{away_b2, b2, b2_with, inequality_chain, reduced_b2, BettiReport, ChainReport, FlatContribution};
pub use flag::{
    decide_freeness_flag, find_heavy_flag, flag_inequality, flag_rhs, flag_values, FlagInequality,
};
pub use heavy::decide_freeness_heavy;
pub use saito::{is_good_summand, saito_verify, SaitoOutcome};
pub use supersolvable::{check_cor_nonfree, filtration_from_flag, supersolvable_multi_free};
pub use verdict::{chi0, chi_free, pairwise_sum, Certificate, FlagData, FreenessVerdict, Witness};
