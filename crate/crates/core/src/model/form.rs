use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::{primitive_integer_vector, Poly, Rational};

/// Defining linear form of a hyperplane, stored as the primitive integer
/// vector whose first nonzero entry is positive. Two forms are equal exactly
/// when they define the same hyperplane.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(Vec<Rational>);

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        primitive_integer_vector(&coeffs)
            .map(LinearForm)
            .ok_or_else(|| Error::InvalidForm("zero linear form".into()))
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        LinearForm::new(coeffs.iter().map(|&c| crate::kernel::rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Value of the form at a point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(point)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn to_poly(&self) -> Poly {
        Poly::linear(&self.0)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (c, name) in self.0.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(name);
        }
        out
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.0.len()).map(|i| format!("x{i}")).collect();
        f.write_str(&self.display_with(&names))
    }
}
