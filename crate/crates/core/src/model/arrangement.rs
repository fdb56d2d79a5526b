use std::collections::HashMap;

use num_traits::Zero;

use super::form::LinearForm;
use crate::error::{Error, Result};
use crate::kernel::{Matrix, Poly, Rational};
use crate::lattice::Flat;

/// A central multiarrangement: projectively distinct hyperplanes in an
/// ambient space of dimension `nvars`, each with a positive multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiarrangement {
    vars: Vec<String>,
    hyperplanes: Vec<LinearForm>,
    mult: Vec<u64>,
}

/// Shift of a single multiplicity, `m + shift * delta_H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiplicityDelta {
    pub index: usize,
    pub shift: i64,
}

pub fn default_var_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        4 => vec!["x".into(), "y".into(), "z".into(), "w".into()],
        _ => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

impl Multiarrangement {
    /// Builds a multiarrangement. Forms are normalized; projectively equal
    /// forms are merged and their multiplicities added, keeping the position
    /// of the first occurrence.
    pub fn new(vars: Vec<String>, forms: Vec<Vec<Rational>>, mult: Vec<u64>) -> Result<Self> {
        if forms.len() != mult.len() {
            return Err(Error::Shape(format!(
                "{} forms but {} multiplicities",
                forms.len(),
                mult.len()
            )));
        }
        let mut out = Multiarrangement {
            vars,
            hyperplanes: Vec::new(),
            mult: Vec::new(),
        };
        let mut seen: HashMap<LinearForm, usize> = HashMap::new();
        for (coeffs, m) in forms.into_iter().zip(mult) {
            if coeffs.len() != out.vars.len() {
                return Err(Error::Shape(format!(
                    "form of arity {} in {} variables",
                    coeffs.len(),
                    out.vars.len()
                )));
            }
            if m == 0 {
                return Err(Error::Range("multiplicities must be positive".into()));
            }
            let form = LinearForm::new(coeffs)?;
            match seen.get(&form) {
                Some(&i) => out.mult[i] += m,
                None => {
                    seen.insert(form.clone(), out.hyperplanes.len());
                    out.hyperplanes.push(form);
                    out.mult.push(m);
                }
            }
        }
        Ok(out)
    }

    /// Convenience constructor from integer normals with default variable
    /// names.
    pub fn from_ints(nvars: usize, forms: &[&[i64]], mult: &[u64]) -> Result<Self> {
        Multiarrangement::new(
            default_var_names(nvars),
            forms
                .iter()
                .map(|f| f.iter().map(|&c| crate::kernel::rat(c)).collect())
                .collect(),
            mult.to_vec(),
        )
    }

    /// Simple arrangement (all multiplicities one).
    pub fn simple_from_ints(nvars: usize, forms: &[&[i64]]) -> Result<Self> {
        Multiarrangement::from_ints(nvars, forms, &vec![1; forms.len()])
    }

    pub(crate) fn from_parts(vars: Vec<String>, hyperplanes: Vec<LinearForm>, mult: Vec<u64>) -> Self {
        debug_assert_eq!(hyperplanes.len(), mult.len());
        Multiarrangement {
            vars,
            hyperplanes,
            mult,
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[LinearForm] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, i: usize) -> &LinearForm {
        &self.hyperplanes[i]
    }

    pub fn mult(&self) -> &[u64] {
        &self.mult
    }

    pub fn multiplicity(&self, i: usize) -> u64 {
        self.mult[i]
    }

    /// `|m|`, the total multiplicity (which is also `b_1`).
    pub fn total(&self) -> u64 {
        self.mult.iter().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m == 1)
    }

    /// The underlying simple arrangement.
    pub fn simple(&self) -> Multiarrangement {
        Multiarrangement {
            vars: self.vars.clone(),
            hyperplanes: self.hyperplanes.clone(),
            mult: vec![1; self.len()],
        }
    }

    pub fn with_mult(&self, mult: Vec<u64>) -> Result<Multiarrangement> {
        if mult.len() != self.len() {
            return Err(Error::Shape("multiplicity vector of wrong length".into()));
        }
        if mult.contains(&0) {
            return Err(Error::Range("multiplicities must be positive".into()));
        }
        Ok(Multiarrangement {
            vars: self.vars.clone(),
            hyperplanes: self.hyperplanes.clone(),
            mult,
        })
    }

    pub fn index_of(&self, form: &LinearForm) -> Option<usize> {
        self.hyperplanes.iter().position(|h| h == form)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "hyperplane index {i} out of range ({} hyperplanes)",
                self.len()
            )))
        }
    }

    /// Matrix whose rows are the normal vectors.
    pub fn normals(&self) -> Matrix {
        Matrix::from_rows(
            self.nvars(),
            self.hyperplanes.iter().map(|h| h.coeffs().to_vec()).collect(),
        )
    }

    pub fn normals_of(&self, indices: &[usize]) -> Matrix {
        Matrix::from_rows(
            self.nvars(),
            indices.iter().map(|&i| self.hyperplanes[i].coeffs().to_vec()).collect(),
        )
    }

    /// Defining polynomial `Q(A, m) = prod alpha_H^m(H)`.
    pub fn defining_polynomial(&self) -> Poly {
        self.hyperplanes
            .iter()
            .zip(&self.mult)
            .fold(Poly::one(self.nvars()), |acc, (h, &m)| {
                &acc * &h.to_poly().pow(m as u32)
            })
    }

    /// Sub-multiarrangement on the given hyperplane indices (in that order).
    pub fn subarrangement(&self, indices: &[usize]) -> Multiarrangement {
        Multiarrangement {
            vars: self.vars.clone(),
            hyperplanes: indices.iter().map(|&i| self.hyperplanes[i].clone()).collect(),
            mult: indices.iter().map(|&i| self.mult[i]).collect(),
        }
    }

    /// Localization `(A_X, m_X)` at a flat; hyperplanes appear in the order
    /// of the flat's containing set.
    pub fn localization(&self, x: &Flat) -> Result<Multiarrangement> {
        let recomputed = Flat::closure(self, x.hyperplanes())?;
        if recomputed.hyperplanes() != x.hyperplanes() || recomputed.codim() != x.codim() {
            return Err(Error::Domain(format!(
                "{:?} is not a flat of this arrangement",
                x.hyperplanes()
            )));
        }
        Ok(self.subarrangement(x.hyperplanes()))
    }

    pub fn apply_delta(&self, d: MultiplicityDelta) -> Result<Multiarrangement> {
        self.check_index(d.index)?;
        let new = self.mult[d.index] as i64 + d.shift;
        if new < 1 {
            return Err(Error::Range(format!(
                "multiplicity of hyperplane {} would become {new}",
                d.index
            )));
        }
        let mut mult = self.mult.clone();
        mult[d.index] = new as u64;
        self.with_mult(mult)
    }

    /// Deletion with respect to `h0`: drops the hyperplane if its multiplicity
    /// is one, otherwise decrements it.
    pub fn deletion(&self, h0: usize) -> Result<Multiarrangement> {
        self.check_index(h0)?;
        if self.mult[h0] == 1 {
            let keep: Vec<usize> = (0..self.len()).filter(|&i| i != h0).collect();
            Ok(self.subarrangement(&keep))
        } else {
            self.apply_delta(MultiplicityDelta {
                index: h0,
                shift: -1,
            })
        }
    }

    /// `r(A)`, the codimension of the center.
    pub fn essential_rank(&self) -> usize {
        self.normals().rank()
    }

    pub fn is_essential(&self) -> bool {
        self.essential_rank() == self.nvars()
    }

    /// Image of the arrangement in `V / center`. The returned `r x l` matrix
    /// has the new coordinates as rows (each a linear form on `V`); it is the
    /// identity when the arrangement is already essential. Hyperplane order
    /// and multiplicities are preserved.
    pub fn essentialize(&self) -> (Multiarrangement, Matrix) {
        let n = self.nvars();
        let normals = self.normals();
        let (rref, pivots) = normals.rref();
        if pivots.len() == n {
            return (self.clone(), Matrix::identity(n));
        }
        let r = pivots.len();
        let change = Matrix::from_rows(n, (0..r).map(|i| rref.row(i).to_vec()).collect());
        let vars = pivots.iter().map(|&p| self.vars[p].clone()).collect();
        let hyperplanes = self
            .hyperplanes
            .iter()
            .map(|h| {
                let coeffs: Vec<Rational> = pivots.iter().map(|&p| h.coeffs()[p].clone()).collect();
                LinearForm::new(coeffs).expect("nonzero form has a nonzero pivot coordinate")
            })
            .collect();
        (
            Multiarrangement {
                vars,
                hyperplanes,
                mult: self.mult.clone(),
            },
            change,
        )
    }

    /// Applies the linear change of coordinates `x = T x'`, i.e. every form
    /// `alpha` becomes `alpha . T`.
    pub fn change_coordinates(&self, t: &Matrix) -> Result<Multiarrangement> {
        let n = self.nvars();
        if t.rows() != n || t.cols() != n || t.det()?.is_zero() {
            return Err(Error::Domain("change of coordinates must be invertible".into()));
        }
        let tt = t.transpose();
        let forms = self
            .hyperplanes
            .iter()
            .map(|h| tt.mul_vec(h.coeffs()))
            .collect();
        Multiarrangement::new(self.vars.clone(), forms, self.mult.clone())
    }

    pub fn describe_hyperplane(&self, i: usize) -> String {
        self.hyperplanes[i].display_with(&self.vars)
    }
}
