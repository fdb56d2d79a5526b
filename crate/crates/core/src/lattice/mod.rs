//! Intersection lattice: flats, flags, the Möbius characteristic polynomial
//! of simple arrangements and supersolvability.

mod chi;
mod flags;
mod supersolvable;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::kernel::{Matrix, Rational};
use crate::model::Multiarrangement;

pub use chi::{characteristic_polynomial_simple, mobius_values};
pub use flags::{flag_enumerate, flag_enumerate_pruned, Flag, FlagIter};
pub use supersolvable::{check_filtration, is_supersolvable, Filtration, FiltrationViolation};

/// An element `X` of `L(A)`: its codimension, a basis of the subspace and
/// the sorted indices of the hyperplanes containing it. For a fixed
/// arrangement two flats are equal iff their containing sets are.
#[derive(Clone, Debug)]
pub struct Flat {
    codim: usize,
    basis: Vec<Vec<Rational>>,
    hyperplanes: Vec<usize>,
}

impl PartialEq for Flat {
    fn eq(&self, other: &Self) -> bool {
        self.hyperplanes == other.hyperplanes
    }
}

impl Eq for Flat {}

impl Flat {
    /// The whole space `V`, the bottom of the lattice.
    pub fn whole_space(a: &Multiarrangement) -> Flat {
        let n = a.nvars();
        Flat {
            codim: 0,
            basis: Matrix::identity(n).row_vecs(),
            hyperplanes: Vec::new(),
        }
    }

    /// The intersection of the given hyperplanes, with its full containing
    /// set.
    pub fn closure(a: &Multiarrangement, indices: &[usize]) -> Result<Flat> {
        for &i in indices {
            a.check_index(i)?;
        }
        let basis = a.normals_of(indices).nullspace();
        Ok(Flat::from_basis(a, basis))
    }

    fn from_basis(a: &Multiarrangement, basis: Vec<Vec<Rational>>) -> Flat {
        let hyperplanes = (0..a.len())
            .filter(|&i| basis.iter().all(|b| a.hyperplane(i).eval(b).is_zero()))
            .collect();
        Flat {
            codim: a.nvars() - basis.len(),
            basis,
            hyperplanes,
        }
    }

    /// `self ∩ H` for a hyperplane not containing `self`.
    fn meet_hyperplane(&self, a: &Multiarrangement, h: usize) -> Flat {
        let form = a.hyperplane(h);
        let values: Vec<Rational> = self.basis.iter().map(|b| form.eval(b)).collect();
        let kernel = Matrix::from_rows(values.len(), vec![values]).nullspace();
        let n = a.nvars();
        let basis = kernel
            .iter()
            .map(|c| {
                let mut v = vec![Rational::zero(); n];
                for (coef, b) in c.iter().zip(&self.basis) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi += coef * bi;
                    }
                }
                v
            })
            .collect();
        Flat::from_basis(a, basis)
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Sorted indices of `A_X`.
    pub fn hyperplanes(&self) -> &[usize] {
        &self.hyperplanes
    }

    pub fn contains_hyperplane(&self, i: usize) -> bool {
        self.hyperplanes.binary_search(&i).is_ok()
    }

    /// Whether `self ⊆ other` as subspaces.
    pub fn is_subspace_of(&self, other: &Flat) -> bool {
        other
            .hyperplanes
            .iter()
            .all(|i| self.hyperplanes.binary_search(i).is_ok())
    }

    /// `|m_X|`.
    pub fn mass(&self, a: &Multiarrangement) -> u64 {
        self.hyperplanes.iter().map(|&i| a.multiplicity(i)).sum()
    }
}

/// Flats of an arrangement grouped by codimension: `by_codim[r]` is `L_r`,
/// sorted by containing set.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    by_codim: Vec<Vec<Flat>>,
}

impl IntersectionLattice {
    pub fn codim(&self, r: usize) -> &[Flat] {
        self.by_codim.get(r).map_or(&[], |v| v.as_slice())
    }

    pub fn max_codim(&self) -> usize {
        self.by_codim.len() - 1
    }

    pub fn iter(&self) -> impl Iterator<Item = &Flat> {
        self.by_codim.iter().flatten()
    }

    pub fn find(&self, hyperplanes: &[usize]) -> Option<&Flat> {
        self.by_codim
            .iter()
            .flatten()
            .find(|f| f.hyperplanes() == hyperplanes)
    }
}

/// All flats of codimension at most `max_codim`.
pub fn build_flats(a: &Multiarrangement, max_codim: usize) -> Result<IntersectionLattice> {
    build_flats_with(a, max_codim, Execution::default())
}

pub fn build_flats_with(
    a: &Multiarrangement,
    max_codim: usize,
    exec: Execution,
) -> Result<IntersectionLattice> {
    if max_codim > a.nvars() {
        return Err(Error::Domain(format!(
            "codimension {max_codim} exceeds the dimension {}",
            a.nvars()
        )));
    }
    let mut by_codim = vec![vec![Flat::whole_space(a)]];
    for _ in 1..=max_codim {
        let prev = by_codim.last().unwrap();
        let children: Vec<Vec<Flat>> = exec.map(prev, |x| {
            let mut out: Vec<Flat> = Vec::new();
            for h in 0..a.len() {
                if x.contains_hyperplane(h) {
                    continue;
                }
                // a child is reached once from each new hyperplane in it;
                // only the smallest such index builds it
                let new_min = out.iter().any(|f: &Flat| f.contains_hyperplane(h));
                if new_min {
                    continue;
                }
                out.push(x.meet_hyperplane(a, h));
            }
            out
        });
        let mut merged: BTreeMap<Vec<usize>, Flat> = BTreeMap::new();
        for flat in children.into_iter().flatten() {
            merged.entry(flat.hyperplanes.clone()).or_insert(flat);
        }
        if merged.is_empty() {
            break;
        }
        by_codim.push(merged.into_values().collect());
    }
    Ok(IntersectionLattice { by_codim })
}

/// The full lattice, up to the rank of the arrangement.
pub fn build_lattice(a: &Multiarrangement) -> Result<IntersectionLattice> {
    build_flats(a, a.essential_rank())
}
