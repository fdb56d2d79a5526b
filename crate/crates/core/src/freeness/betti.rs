use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::lattice::build_flats_with;
use crate::model::Multiarrangement;
use crate::rank2::{local_exponents, Rank2Exponents};
use crate::restriction::{euler_restriction, multi_ziegler_restriction};

/// One row of the `b2` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatContribution {
    /// `A_X` as sorted hyperplane indices.
    pub hyperplanes: Vec<usize>,
    /// `|m_X|`.
    pub mass: u64,
    pub exponents: Rank2Exponents,
}

impl FlatContribution {
    pub fn contribution(&self) -> u64 {
        self.exponents.product()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiReport {
    pub b1: u64,
    pub b2: u64,
    pub flats: Vec<FlatContribution>,
}

impl BettiReport {
    /// `b2` summed over the codim-2 flats not contained in `h`.
    pub fn away(&self, h: usize) -> u64 {
        self.flats
            .iter()
            .filter(|f| f.hyperplanes.binary_search(&h).is_err())
            .map(FlatContribution::contribution)
            .sum()
    }
}

/// `b2 = Σ_{X ∈ L_2} e1(X) e2(X)`.
pub fn b2(a: &Multiarrangement) -> Result<BettiReport> {
    b2_with(a, Execution::default())
}

pub fn b2_with(a: &Multiarrangement, exec: Execution) -> Result<BettiReport> {
    let b1 = a.total();
    if a.nvars() < 2 {
        return Ok(BettiReport {
            b1,
            b2: 0,
            flats: Vec::new(),
        });
    }
    let lattice = build_flats_with(a, 2, exec)?;
    let rows = exec.map(lattice.codim(2), |x| {
        local_exponents(a, x).map(|exponents| FlatContribution {
            hyperplanes: x.hyperplanes().to_vec(),
            mass: x.mass(a),
            exponents,
        })
    });
    let flats = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let b2 = flats.iter().map(FlatContribution::contribution).sum();
    Ok(BettiReport { b1, b2, flats })
}

/// `b2^H = b2 - m(H)(|m| - m(H))`.
pub fn reduced_b2(a: &Multiarrangement, h: usize) -> Result<u64> {
    a.check_index(h)?;
    reduced_from(a, h, b2(a)?.b2)
}

pub(crate) fn reduced_from(a: &Multiarrangement, h: usize, b2: u64) -> Result<u64> {
    let m0 = a.multiplicity(h);
    b2.checked_sub(m0 * (a.total() - m0)).ok_or_else(|| {
        Error::InvariantViolation(format!("b2 = {b2} is below m0(|m| - m0)"))
    })
}

/// `B2^H`, the part of `b2` from codim-2 flats not inside `H`.
pub fn away_b2(a: &Multiarrangement, h: usize) -> Result<u64> {
    a.check_index(h)?;
    Ok(b2(a)?.away(h))
}

/// The four quantities `b2^H >= B2^H >= b2(A^H, m^H) >= b2(A^H, m*)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub reduced: u64,
    pub away: u64,
    pub ziegler: u64,
    pub euler: u64,
}

impl ChainReport {
    pub fn as_array(&self) -> [u64; 4] {
        [self.reduced, self.away, self.ziegler, self.euler]
    }
}

pub fn inequality_chain(a: &Multiarrangement, h: usize) -> Result<ChainReport> {
    a.check_index(h)?;
    if a.nvars() < 3 {
        return Err(Error::Domain("the inequality chain needs at least 3 variables".into()));
    }
    let report = b2(a)?;
    let chain = ChainReport {
        reduced: reduced_from(a, h, report.b2)?,
        away: report.away(h),
        ziegler: b2(&multi_ziegler_restriction(a, h)?.arrangement)?.b2,
        euler: b2(&euler_restriction(a, h)?.arrangement)?.b2,
    };
    let v = chain.as_array();
    if v.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvariantViolation(format!("inequality chain violated: {v:?}")));
    }
    Ok(chain)
}
