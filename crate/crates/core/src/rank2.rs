//! Exponents and homogeneous bases of rank-2 multiarrangements.
//!
//! The general method is a degree sweep: the derivations `P ∂x + Q ∂y` of
//! degree `d` form the kernel of an exact linear system asking that `α^m`
//! divide `aP + bQ` for every line `α = ax + by`. The least `d <= |m|/2`
//! with a nonzero kernel is `e1`, and `e2 = |m| - e1`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::{poly_det, remainder_coeffs, Homogeneity, Matrix, Poly, Rational};
use crate::lattice::Flat;
use crate::model::{LinearForm, Multiarrangement};

/// Sorted exponent pair of a rank-2 multiarrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank2Exponents {
    pub e1: u64,
    pub e2: u64,
}

impl Rank2Exponents {
    pub fn new(a: u64, b: u64) -> Self {
        Rank2Exponents {
            e1: a.min(b),
            e2: a.max(b),
        }
    }

    /// `e1 * e2`, the contribution of a codim-2 flat to `b2`.
    pub fn product(&self) -> u64 {
        self.e1 * self.e2
    }

    pub fn as_pair(&self) -> (u64, u64) {
        (self.e1, self.e2)
    }
}

/// A homogeneous polynomial derivation `Σ coords[i] ∂_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub coords: Vec<Poly>,
    pub degree: u32,
}

impl Derivation {
    /// Checks that every nonzero coordinate has the same degree and the
    /// arities agree.
    pub fn new(coords: Vec<Poly>) -> Result<Derivation> {
        let n = coords.len();
        let mut degree = None;
        for (i, c) in coords.iter().enumerate() {
            if c.nvars() != n {
                return Err(Error::Shape(format!(
                    "coordinate {i} has {} variables, expected {n}",
                    c.nvars()
                )));
            }
            match c.homogeneity() {
                Homogeneity::Zero => {}
                Homogeneity::Degree(d) => match degree {
                    None => degree = Some(d),
                    Some(e) if e == d => {}
                    Some(e) => {
                        return Err(Error::Domain(format!(
                            "coordinates of degrees {e} and {d}; derivations must be homogeneous"
                        )))
                    }
                },
                Homogeneity::NotHomogeneous => {
                    return Err(Error::Domain(format!("coordinate {i} is not homogeneous")))
                }
            }
        }
        Ok(Derivation {
            coords,
            degree: degree.unwrap_or(0),
        })
    }

    /// The Euler derivation `Σ x_i ∂_i`.
    pub fn euler(nvars: usize) -> Derivation {
        Derivation {
            coords: (0..nvars).map(|i| Poly::var(nvars, i)).collect(),
            degree: 1,
        }
    }

    pub fn nvars(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Poly::is_zero)
    }

    /// `θ(α)` for a linear form `α`.
    pub fn apply(&self, form: &LinearForm) -> Poly {
        let n = self.nvars();
        self.coords
            .iter()
            .zip(form.coeffs())
            .filter(|(_, c)| !c.is_zero())
            .fold(Poly::zero(n), |acc, (p, c)| &acc + &p.scale(c))
    }

    pub fn scale_by(&self, f: &Poly) -> Derivation {
        let degree = self.degree + f.total_degree().unwrap_or(0);
        Derivation {
            coords: self.coords.iter().map(|c| c * f).collect(),
            degree,
        }
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .coords
            .iter()
            .zip(names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, v)| {
                let s = c.display_with(names);
                if c.terms().count() > 1 {
                    format!("({s}) d{v}")
                } else {
                    format!("{s} d{v}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn check_essential_pair(a: &Multiarrangement) -> Result<()> {
    if a.nvars() != 2 {
        return Err(Error::Domain(format!(
            "rank-2 solver needs 2 variables, got {}",
            a.nvars()
        )));
    }
    if a.essential_rank() != 2 {
        return Err(Error::Domain("rank-2 solver needs an essential arrangement".into()));
    }
    Ok(())
}

/// Closed forms that apply without solving: two lines, a heavy line, and
/// three balanced lines.
pub fn rank2_closed_form(a: &Multiarrangement) -> Option<Rank2Exponents> {
    let total = a.total();
    let m = a.mult();
    if m.len() == 2 {
        return Some(Rank2Exponents::new(m[0], m[1]));
    }
    if let Some(&m0) = m.iter().find(|&&mi| 2 * mi >= total) {
        return Some(Rank2Exponents::new(total - m0, m0));
    }
    if m.len() == 3 {
        return Some(Rank2Exponents::new(total / 2, total - total / 2));
    }
    None
}

/// Exponents of an essential 2-variable multiarrangement.
pub fn rank2_exponents(a: &Multiarrangement) -> Result<Rank2Exponents> {
    check_essential_pair(a)?;
    match rank2_closed_form(a) {
        Some(e) => Ok(e),
        None => rank2_exponents_by_dimension(a),
    }
}

/// Reads `e1` off `dim D_h = Σ max(0, h - e_i + 1)` at `h = ⌊|m|/2⌋`. Only
/// when `|m|` is even and `dim D_h = 2` is a second degree needed, to tell
/// `(h - 1, h + 1)` from `(h, h)`.
fn rank2_exponents_by_dimension(a: &Multiarrangement) -> Result<Rank2Exponents> {
    let total = a.total();
    let h = total / 2;
    let dim = degree_dim(a, h as u32);
    let e1 = match dim {
        0 => {
            return Err(Error::InvariantViolation(format!(
                "no derivation of degree at most {h}"
            )))
        }
        2 if total % 2 == 0 => {
            if degree_dim(a, h as u32 - 1) == 0 {
                h
            } else {
                h - 1
            }
        }
        n if n <= h + 1 => h + 1 - n,
        n => {
            return Err(Error::InvariantViolation(format!(
                "degree {h} part has dimension {n}"
            )))
        }
    };
    Ok(Rank2Exponents::new(e1, total - e1))
}

/// Exponents by the degree sweep alone, without closed forms.
pub fn rank2_exponents_sweep(a: &Multiarrangement) -> Result<Rank2Exponents> {
    check_essential_pair(a)?;
    let total = a.total();
    let (mut lo, mut hi) = (0, total / 2);
    if degree_dim(a, hi as u32) == 0 {
        return Err(Error::InvariantViolation(format!(
            "no derivation of degree at most {hi}"
        )));
    }
    // D_d != 0 implies D_{d+1} != 0, so the first nonzero degree can be
    // bisected
    while lo < hi {
        let mid = (lo + hi) / 2;
        if degree_dim(a, mid as u32) == 0 {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    Ok(Rank2Exponents::new(lo, total - lo))
}

fn degree_dim(a: &Multiarrangement, d: u32) -> u64 {
    let m = degree_system(a, d);
    (m.cols() - m.rank()) as u64
}

/// Basis of the degree-`d` part of `D(A, m)` as coefficient vectors of
/// `(P, Q)` over the monomials `x^(d-i) y^i`.
fn degree_kernel(a: &Multiarrangement, d: u32) -> Vec<Vec<Rational>> {
    degree_system(a, d).nullspace()
}

fn degree_system(a: &Multiarrangement, d: u32) -> Matrix {
    let unknowns = 2 * (d as usize + 1);
    let monomials: Vec<Poly> = (0..=d)
        .map(|i| Poly::monomial(2, vec![d - i, i], Rational::from_integer(1.into())))
        .collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (h, &m) in a.hyperplanes().iter().zip(a.mult()) {
        let alpha = h.coeffs();
        let k = (m as usize).min(d as usize + 1);
        let mut block = vec![vec![Rational::zero(); unknowns]; k];
        for (j, mono) in monomials.iter().enumerate() {
            let r = remainder_coeffs(mono, alpha, k).expect("bivariate homogeneous input");
            for (row, rj) in block.iter_mut().zip(&r) {
                row[j] = &alpha[0] * rj;
                row[j + d as usize + 1] = &alpha[1] * rj;
            }
        }
        rows.extend(block);
    }
    Matrix::from_rows(unknowns, rows)
}

fn kernel_derivation(v: &[Rational], d: u32) -> Derivation {
    let n = d as usize + 1;
    let build = |coeffs: &[Rational]| {
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Poly::zero(2), |acc, (i, c)| {
                &acc + &Poly::monomial(2, vec![d - i as u32, i as u32], c.clone())
            })
    };
    Derivation {
        coords: vec![build(&v[..n]), build(&v[n..])],
        degree: d,
    }
}

/// A homogeneous basis `(θ1, θ2)` of degrees `(e1, e2)`.
pub fn rank2_basis(a: &Multiarrangement) -> Result<(Derivation, Derivation)> {
    let exps = rank2_exponents(a)?;
    let (e1, e2) = (exps.e1 as u32, exps.e2 as u32);
    let k1 = degree_kernel(a, e1);
    let theta1 = kernel_derivation(
        k1.first()
            .ok_or_else(|| Error::InvariantViolation(format!("empty kernel in degree {e1}")))?,
        e1,
    );
    for v in degree_kernel(a, e2) {
        let theta2 = kernel_derivation(&v, e2);
        let det = poly_det(&[theta1.coords.clone(), theta2.coords.clone()])?;
        if !det.is_zero() {
            return Ok((theta1, theta2));
        }
    }
    Err(Error::InvariantViolation(format!(
        "no derivation of degree {e2} independent of the first basis element"
    )))
}

/// Exponents of a multiarrangement of rank at most 2 in any number of
/// variables; the trailing zeros are dropped. Rank 1 gives `(0, |m|)`.
pub fn low_rank_exponents(a: &Multiarrangement) -> Result<Rank2Exponents> {
    match a.essential_rank() {
        0 => Ok(Rank2Exponents::new(0, 0)),
        1 => Ok(Rank2Exponents::new(0, a.total())),
        2 => rank2_exponents(&a.essentialize().0),
        r => Err(Error::Domain(format!("arrangement has rank {r}, expected at most 2"))),
    }
}

/// Exponents of the localization at a codim-2 flat.
pub fn local_exponents(a: &Multiarrangement, x: &Flat) -> Result<Rank2Exponents> {
    if x.codim() != 2 {
        return Err(Error::Domain(format!("flat has codimension {}", x.codim())));
    }
    low_rank_exponents(&a.localization(x)?)
}

/// Euler multiplicity `m*` of a rank-2 multiarrangement with respect to
/// `h0`: the exponent that survives deleting one copy of `h0`.
pub fn euler_multiplicity(a: &Multiarrangement, h0: usize) -> Result<u64> {
    a.check_index(h0)?;
    if a.essential_rank() != 2 {
        return Err(Error::Domain(format!(
            "Euler multiplicity needs rank 2, got {}",
            a.essential_rank()
        )));
    }
    let d = low_rank_exponents(a)?;
    let e = low_rank_exponents(&a.deletion(h0)?)?;
    let preserved = if d.e1 == e.e1 + 1 && d.e2 == e.e2 {
        d.e2
    } else if d.e2 == e.e2 + 1 && d.e1 == e.e1 {
        d.e1
    } else {
        return Err(Error::InvariantViolation(format!(
            "deletion changed exponents {:?} to {:?}",
            d.as_pair(),
            e.as_pair()
        )));
    };
    let m0 = a.multiplicity(h0);
    if 2 * m0 >= a.total() && preserved != a.total() - m0 {
        return Err(Error::InvariantViolation(format!(
            "Euler multiplicity {preserved} differs from |m| - m0 = {} at a heavy line",
            a.total() - m0
        )));
    }
    Ok(preserved)
}
