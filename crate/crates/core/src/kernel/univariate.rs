use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial in `t` with integer coefficients, stored lowest
/// degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn one() -> Self {
        UniPoly::from_coeffs(vec![BigInt::one()])
    }

    /// `t - root`
    pub fn linear(root: &BigInt) -> Self {
        UniPoly::from_coeffs(vec![-root.clone(), BigInt::one()])
    }

    /// `prod (t - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a BigInt>) -> Self {
        roots
            .into_iter()
            .fold(UniPoly::one(), |acc, r| acc.mul(&UniPoly::linear(r)))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return UniPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Exact quotient by `t - root`; fails if `root` is not a root.
    pub fn div_linear(&self, root: &BigInt) -> Result<UniPoly> {
        if !self.eval(root).is_zero() {
            return Err(Error::InvariantViolation(format!(
                "(t - {root}) does not divide {self}"
            )));
        }
        let n = self.coeffs.len();
        if n == 0 {
            return Ok(UniPoly::default());
        }
        // synthetic division from the top
        let mut q = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for k in (1..n).rev() {
            carry = &self.coeffs[k] + carry * root;
            q[k - 1] = carry.clone();
        }
        Ok(UniPoly::from_coeffs(q))
    }

    /// The unsigned coefficient `b_i` in
    /// `t^l - b_1 t^(l-1) + b_2 t^(l-2) - ...`, where `l` is the degree.
    pub fn betti(&self, i: usize) -> BigInt {
        let Some(l) = self.degree() else {
            return BigInt::zero();
        };
        if i > l {
            return BigInt::zero();
        }
        let c = self.coeff(l - i);
        if i % 2 == 0 {
            c
        } else {
            -c
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
