use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::kernel::UniPoly;
use crate::lattice::FiltrationViolation;
use crate::model::Multiarrangement;

/// Flag data shared by witnesses and certificates: the containing sets of
/// `X_1, ..., X_s`, the restriction values `m^{X_i}(X_{i+1})`, `b2` and
/// the pairwise sum of the values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagData {
    pub flag: Vec<Vec<usize>>,
    pub values: Vec<u64>,
    pub b2: u64,
    pub rhs: u64,
    /// Whether `X_1` is heavy in `(A, m)` itself.
    pub literal_step0_heavy: bool,
}

/// Why an arrangement was found free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Rank at most two.
    LowRank,
    /// Free restriction onto a heavy (or locally heavy) hyperplane with
    /// matching reduced `b2`.
    Restriction {
        h0: usize,
        label: String,
        heavy: bool,
        reduced_b2: u64,
        restriction_b2: u64,
    },
    HeavyFlag(FlagData),
    Supersolvable { levels: Vec<Vec<usize>> },
}

/// Why an arrangement was found not free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Heavy `h0` whose restriction is free but `b2^H != b2(A^H, m^H)`.
    HeavyB2 {
        h0: usize,
        label: String,
        reduced_b2: u64,
        restriction_b2: u64,
    },
    /// Heavy `h0` whose restriction is not free.
    RestrictionNotFree {
        h0: usize,
        label: String,
        inner: Box<Certificate>,
    },
    /// Heavy flag with `b2` differing from the pairwise sum.
    HeavyFlag(FlagData),
    /// Heavy flag on an arrangement whose underlying simple arrangement is
    /// not supersolvable.
    NotSupersolvable {
        flag: Vec<Vec<usize>>,
        candidate_violation: Option<FiltrationViolation>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreenessVerdict {
    /// Exponents as a sorted multiset.
    Free { exponents: Vec<u64>, witness: Witness },
    NonFree(Certificate),
    Unknown { reason: String },
}

impl FreenessVerdict {
    pub fn free(mut exponents: Vec<u64>, witness: Witness) -> Self {
        exponents.sort_unstable();
        FreenessVerdict::Free { exponents, witness }
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        FreenessVerdict::Unknown {
            reason: reason.into(),
        }
    }

    pub fn is_free(&self) -> bool {
        matches!(self, FreenessVerdict::Free { .. })
    }

    pub fn is_non_free(&self) -> bool {
        matches!(self, FreenessVerdict::NonFree(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, FreenessVerdict::Unknown { .. })
    }

    pub fn exponents(&self) -> Option<&[u64]> {
        match self {
            FreenessVerdict::Free { exponents, .. } => Some(exponents),
            _ => None,
        }
    }

    /// Process exit code: 0 free, 1 not free, 2 undecided.
    pub fn exit_code(&self) -> i32 {
        match self {
            FreenessVerdict::Free { .. } => 0,
            FreenessVerdict::NonFree(_) => 1,
            FreenessVerdict::Unknown { .. } => 2,
        }
    }

    /// Checks `Σ d_i = |m|` and `Σ_{i<j} d_i d_j = b2` for a free verdict.
    pub fn check_consistency(&self, a: &Multiarrangement, b2: u64) -> Result<()> {
        if let FreenessVerdict::Free { exponents, .. } = self {
            let sum: u64 = exponents.iter().sum();
            if sum != a.total() || pairwise_sum(exponents) != b2 {
                return Err(Error::InvariantViolation(format!(
                    "exponents {exponents:?} inconsistent with |m| = {} and b2 = {b2}",
                    a.total()
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for FreenessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreenessVerdict::Free { exponents, .. } => {
                let e: Vec<String> = exponents.iter().map(u64::to_string).collect();
                write!(f, "free with exponents ({})", e.join(", "))
            }
            FreenessVerdict::NonFree(c) => write!(f, "not free: {c}"),
            FreenessVerdict::Unknown { reason } => write!(f, "undecided: {reason}"),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::HeavyB2 {
                label,
                reduced_b2,
                restriction_b2,
                ..
            } => write!(
                f,
                "heavy hyperplane {label}: b2^H = {reduced_b2} but the restriction has b2 = {restriction_b2}"
            ),
            Certificate::RestrictionNotFree { label, inner, .. } => {
                write!(f, "restriction onto heavy hyperplane {label} is not free ({inner})")
            }
            Certificate::HeavyFlag(d) => {
                write!(f, "heavy flag with values {:?}: b2 = {} but the flag sum is {}", d.values, d.b2, d.rhs)
            }
            Certificate::NotSupersolvable { .. } => {
                write!(f, "has a heavy flag but the underlying arrangement is not supersolvable")
            }
        }
    }
}

/// `Σ_{i<j} d_i d_j`.
pub fn pairwise_sum(values: &[u64]) -> u64 {
    let mut sum = 0;
    let mut prefix = 0;
    for &v in values {
        sum += prefix * v;
        prefix += v;
    }
    sum
}

/// `χ(A, m; t) = Π (t - d_i)` for a free multiarrangement.
pub fn chi_free(exponents: &[u64]) -> UniPoly {
    let roots: Vec<BigInt> = exponents.iter().map(|&d| BigInt::from(d)).collect();
    UniPoly::from_roots(&roots)
}

/// `χ / (t - m(H0))`, the reduced characteristic polynomial.
pub fn chi0(a: &Multiarrangement, h0: usize, chi: &UniPoly) -> Result<UniPoly> {
    a.check_index(h0)?;
    chi.div_linear(&BigInt::from(a.multiplicity(h0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_sums() {
        assert_eq!(pairwise_sum(&[1, 8, 4, 4]), 96);
        assert_eq!(pairwise_sum(&[1, 5, 3, 2]), 41);
        assert_eq!(pairwise_sum(&[7, 9, 16]), 319);
        assert_eq!(pairwise_sum(&[]), 0);
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(chi_free(&[7, 9, 16]).to_string(), "t^3 - 32t^2 + 319t - 1008");
        assert_eq!(chi_free(&[1, 5, 3, 2]).betti(2), 41.into());
        let b = Multiarrangement::simple_from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let chi = chi_free(&[1, 1, 1]);
        assert_eq!(chi0(&b, 0, &chi).unwrap(), chi_free(&[1, 1]));
        let a = b.with_mult(vec![2, 1, 1]).unwrap();
        assert!(matches!(chi0(&a, 0, &chi), Err(Error::InvariantViolation(_))));
    }
}
