//! Polarization of monomial ideals.
//!
//! The polarized ring has one block of variables per original variable `x_i`,
//! of width `deg_{x_i}(I)`. Blocks are laid out in variable order and
//! `x_{i,j}` (1 ≤ j ≤ width) has index `offset(i) + j - 1`.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// A squarefree ideal `I^℘` together with the data to undo the polarization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizedIdeal {
    ideal: MonomialIdeal,
    variable_map: Vec<usize>,
    ring_shape: Vec<u32>,
}

impl PolarizedIdeal {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// Polarized variable index to original variable index (`x_{i,j} ↦ x_i`).
    pub fn variable_map(&self) -> &[usize] {
        &self.variable_map
    }

    /// Block widths `(deg_{x_1}(I), ..., deg_{x_n}(I))`.
    pub fn ring_shape(&self) -> &[u32] {
        &self.ring_shape
    }

    pub fn polarize(&self, u: &Monomial) -> Result<Monomial> {
        polarize_monomial(u, &self.ring_shape)
    }

    pub fn depolarize(&self, w: &Monomial) -> Result<Monomial> {
        depolarize_monomial(w, &self.variable_map, self.ring_shape.len())
    }
}

/// `x_{i,j} ↦ i` for the block layout of `ring_shape`.
pub fn variable_map(ring_shape: &[u32]) -> Vec<usize> {
    ring_shape
        .iter()
        .enumerate()
        .flat_map(|(i, &w)| std::iter::repeat_n(i, w as usize))
        .collect()
}

/// `u^℘ = ∏_i x_{i,1} ⋯ x_{i,a_i}`.
pub fn polarize_monomial(u: &Monomial, ring_shape: &[u32]) -> Result<Monomial> {
    if u.arity() != ring_shape.len() {
        return Err(crate::error::arity_mismatch(ring_shape.len(), u.arity()));
    }
    let mut exponents = Vec::with_capacity(ring_shape.iter().map(|&w| w as usize).sum());
    for (i, &width) in ring_shape.iter().enumerate() {
        let a = u.degree_in(i);
        if a > width {
            return Err(Error::Input(format!(
                "exponent {a} of variable {} exceeds the block width {width}",
                i + 1
            )));
        }
        exponents.extend((0..width).map(|j| u32::from(j < a)));
    }
    Ok(Monomial::from_exponents(exponents))
}

/// Substitutes `x_{i,j} ↦ x_i`.
pub fn depolarize_monomial(w: &Monomial, variable_map: &[usize], arity: usize) -> Result<Monomial> {
    if w.arity() != variable_map.len() {
        return Err(crate::error::arity_mismatch(variable_map.len(), w.arity()));
    }
    let mut exponents = vec![0u32; arity];
    for (k, &e) in w.exponents().iter().enumerate() {
        exponents[variable_map[k]] += e;
    }
    Ok(Monomial::from_exponents(exponents))
}

/// `I^℘` in the minimal polarized ring, with `ring_shape = deg(I)`.
pub fn polarize_ideal(ideal: &MonomialIdeal) -> Result<PolarizedIdeal> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::Domain(
            "polarization needs a proper nonzero ideal".into(),
        ));
    }
    let ring_shape = ideal.bounding_multidegree()?;
    let map = variable_map(&ring_shape);
    let gens = ideal
        .generators()
        .iter()
        .map(|u| polarize_monomial(u, &ring_shape))
        .collect::<Result<Vec<_>>>()?;
    let polarized = MonomialIdeal::new(map.len(), gens)?;
    if polarized.len() != ideal.len() || !polarized.is_squarefree() {
        return Err(Error::Invariant(format!(
            "polarization of {ideal} produced {polarized}"
        )));
    }
    Ok(PolarizedIdeal {
        ideal: polarized,
        variable_map: map,
        ring_shape,
    })
}
