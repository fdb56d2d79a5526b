use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Sparse polynomial in a fixed number of variables with rational
/// coefficients. Zero coefficients are never stored.
///
/// Arithmetic between polynomials of different arity panics: the ambient
/// dimension is fixed per arrangement and there is no implicit embedding.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// Result of a homogeneity query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    NotHomogeneous,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Poly::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exponents: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exponents.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Poly { nvars, terms }
    }

    /// The linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Poly::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value of a constant polynomial (zero included); `None` otherwise.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&d| d == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) if degrees.all(|e| e == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::NotHomogeneous,
        }
    }

    /// Coefficients of a homogeneous linear form, or `None` if the
    /// polynomial is not one (the zero polynomial included).
    pub fn linear_coeffs(&self) -> Option<Vec<Rational>> {
        if self.homogeneity() != Homogeneity::Degree(1) {
            return None;
        }
        let mut out = vec![Rational::zero(); self.nvars];
        for (e, c) in &self.terms {
            let i = e.iter().position(|&d| d == 1).unwrap();
            out[i] = c.clone();
        }
        Some(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluates the polynomial after substituting `x_i -> images[i]`.
    /// The images may live in a different number of variables.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (img, &d) in images.iter().zip(e) {
                if d > 0 {
                    term = &term * &img.pow(d);
                }
            }
            out = &out + &term;
        }
        out
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact division. Returns `Ok(None)` when `divisor` does not divide
    /// `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Option<Poly>> {
        assert_eq!(self.nvars, divisor.nvars, "polynomial arity mismatch");
        let Some((lead_e, lead_c)) = divisor.leading() else {
            return Err(Error::Domain("division by the zero polynomial".into()));
        };
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((re, rc)) = rem.leading() {
            if re.iter().zip(lead_e).any(|(a, b)| a < b) {
                return Ok(None);
            }
            let e: Vec<u32> = re.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let c = rc / lead_c;
            let step = Poly::monomial(self.nvars, e, c);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(Some(quot))
    }

    /// Renders the polynomial using the given variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(d, _)| **d > 0)
                .map(|(d, n)| if *d == 1 { n.clone() } else { format!("{n}^{d}") })
                .collect();
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    fn default_names(&self) -> Vec<String> {
        (0..self.nvars).map(|i| format!("x{}", i + 1)).collect()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&self.default_names()))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&self.default_names()))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Poly {
            nvars: self.nvars,
            terms,
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly {
            nvars: self.nvars,
            terms,
        }
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Writes the homogeneous bivariate `f` in coordinates `(u, alpha)`, where
/// `u` is a coordinate independent of `alpha`, and returns the coefficients
/// of `alpha^0 .. alpha^(k-1)`. All of them vanish exactly when `alpha^k`
/// divides `f`; entries past the degree of `f` are zero.
pub fn remainder_coeffs(f: &Poly, alpha: &[Rational], k: usize) -> Result<Vec<Rational>> {
    if alpha.len() != 2 || f.nvars != 2 {
        return Err(Error::Shape("remainder_coeffs expects bivariate input".into()));
    }
    if alpha.iter().all(|c| c.is_zero()) {
        return Err(Error::InvalidForm("zero linear form".into()));
    }
    if f.homogeneity() == Homogeneity::NotHomogeneous {
        return Err(Error::Domain("remainder_coeffs needs a homogeneous polynomial".into()));
    }
    let (a, b) = (&alpha[0], &alpha[1]);
    let mut out = vec![Rational::zero(); k];
    for (e, c) in &f.terms {
        let (p, q) = (e[0], e[1]);
        if b.is_zero() {
            // u = y, x = alpha / a
            let j = p as usize;
            if j < k {
                out[j] += c / a.pow(p as i32);
            }
        } else {
            // u = x, y = (alpha - a u) / b
            let scale = c / b.pow(q as i32);
            let neg_a = -a;
            for j in (0..=q).take_while(|&j| (j as usize) < k) {
                let term = &scale
                    * Rational::from_integer(binomial(q, j))
                    * neg_a.pow((q - j) as i32);
                out[j as usize] += term;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn x() -> Poly {
        Poly::var(2, 0)
    }
    fn y() -> Poly {
        Poly::var(2, 1)
    }

    #[test]
    fn zero_has_no_terms() {
        let p = &x() - &x();
        assert!(p.is_zero());
        assert_eq!(p.homogeneity(), Homogeneity::Zero);
    }

    #[test]
    fn homogeneity_query() {
        assert_eq!((&x() * &y()).homogeneity(), Homogeneity::Degree(2));
        assert_eq!((&x() + &Poly::one(2)).homogeneity(), Homogeneity::NotHomogeneous);
    }

    #[test]
    fn remainder_examples() {
        let r = remainder_coeffs(&x().pow(2), &[rat(1), rat(0)], 2).unwrap();
        assert!(r.iter().all(|c| c.is_zero()));
        let r = remainder_coeffs(&(&x() * &y()), &[rat(1), rat(0)], 2).unwrap();
        assert!(r[0].is_zero() && !r[1].is_zero());
        let s = &x() + &y();
        let r = remainder_coeffs(&s.pow(3), &[rat(1), rat(1)], 2).unwrap();
        assert!(r.iter().all(|c| c.is_zero()));
        assert!(remainder_coeffs(&s, &[rat(0), rat(0)], 1).is_err());
    }

    #[test]
    fn remainder_pads_past_degree() {
        let r = remainder_coeffs(&x(), &[rat(0), rat(1)], 4).unwrap();
        assert_eq!(r.len(), 4);
        assert!(!r[0].is_zero());
        assert!(r[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn exact_division() {
        let s = &x() - &y();
        let f = &s.pow(3) * &x();
        assert_eq!(f.div_exact(&s.pow(2)).unwrap().unwrap(), &s * &x());
        assert!(f.div_exact(&y()).unwrap().is_none());
    }

    #[test]
    fn display() {
        let names = vec!["x".to_string(), "y".to_string()];
        let p = &(&x().pow(2) * &y()) - &(&x() * &y().pow(2)).scale(&rat(3));
        assert_eq!(p.display_with(&names), "x^2*y - 3*x*y^2");
    }
}
