//! Hyperplanes, multiarrangements and the defining-polynomial grammar.

mod arrangement;
mod form;
mod parse;

pub use arrangement::{default_var_names, Multiarrangement, MultiplicityDelta};
pub use form::LinearForm;
pub use parse::{format_defining_polynomial, parse_defining_polynomial, parse_linear_form, parse_polynomial};
