//! Monomials as exponent vectors and monomial ideals as canonical minimal
//! generating sets.
//!
//! Variables are indexed from 0. Every ideal remembers the arity of its ring,
//! and binary operations between values of different arity are rejected.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{arity_mismatch, Error, Result};

/// Largest exponent accepted by [`Monomial::from_multidegree`].
pub const MAX_EXPONENT: u32 = (1 << 31) - 1;

/// A monomial `x^a` of a polynomial ring in a fixed number of variables.
///
/// The ordering is the canonical generator order: total degree first, then
/// lexicographic with `x_0 > x_1 > ... > x_{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// The unit monomial `1` in `arity` variables.
    pub fn one(arity: usize) -> Self {
        Monomial {
            exponents: vec![0; arity],
        }
    }

    /// The variable `x_index`.
    pub fn variable(arity: usize, index: usize) -> Self {
        let mut m = Monomial::one(arity);
        m.exponents[index] = 1;
        m
    }

    /// The squarefree monomial `x_W = prod_{i in W} x_i`.
    pub fn squarefree(arity: usize, indices: &[usize]) -> Self {
        let mut m = Monomial::one(arity);
        for &i in indices {
            m.exponents[i] = 1;
        }
        m
    }

    /// Builds a monomial from raw exponents; the arity is the vector length.
    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The monomial with multidegree `a`, with the default exponent limit.
    pub fn from_multidegree(arity: usize, a: &[i64]) -> Result<Self> {
        Self::from_multidegree_with_limit(arity, a, MAX_EXPONENT)
    }

    pub fn from_multidegree_with_limit(arity: usize, a: &[i64], limit: u32) -> Result<Self> {
        if a.len() != arity {
            return Err(Error::Input(format!(
                "multidegree has length {} but the ring has {arity} variables",
                a.len()
            )));
        }
        let exponents = a
            .iter()
            .map(|&e| {
                if e < 0 {
                    Err(Error::Input(format!("negative exponent {e}")))
                } else if e > limit as i64 {
                    Err(Error::Input(format!(
                        "exponent {e} exceeds the limit {limit}"
                    )))
                } else {
                    Ok(e as u32)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exponents })
    }

    pub fn multidegree(&self) -> Vec<u32> {
        self.exponents.clone()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables dividing this monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_arity(&self, other: &Monomial) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(arity_mismatch(self.arity(), other.arity()));
        }
        Ok(())
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_arity(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        Ok(self.lcm_unchecked(other))
    }

    /// `self / gcd(self, other)`: the generator of the colon ideal `(self) : (other)`.
    pub fn colon_quotient(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        Ok(self.colon_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub(crate) fn colon_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if self.arity() != other.arity() || !other.divides_unchecked(self) {
            return None;
        }
        Some(self.colon_unchecked(other))
    }

    /// `x_var * self`. Panics if the exponent would overflow `u32`.
    pub fn mul_variable(&self, var: usize) -> Monomial {
        let mut m = self.clone();
        m.exponents[var] = m.exponents[var].checked_add(1).expect("exponent overflow");
        m
    }

    /// `self / x_var`, if `x_var` divides `self`.
    pub fn div_variable(&self, var: usize) -> Option<Monomial> {
        if self.exponents[var] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exponents[var] -= 1;
        Some(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
            .then_with(|| self.arity().cmp(&other.arity()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Formats with variable names `x1, x2, ...` (1-based, as in the usual notation).
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal, stored as its minimal monomial generating set `G(I)` in
/// canonical order.
///
/// The zero ideal has no generators; the unit ideal has the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    arity: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `monomials`, reduced to its
    /// minimal generating set.
    pub fn new(arity: usize, monomials: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = monomials.iter().find(|m| m.arity() != arity) {
            return Err(arity_mismatch(arity, bad.arity()));
        }
        Ok(Self::from_unchecked(arity, monomials))
    }

    pub(crate) fn from_unchecked(arity: usize, mut monomials: Vec<Monomial>) -> Self {
        monomials.sort_unstable();
        monomials.dedup();
        // A divisor never has larger degree, so scanning in canonical order
        // sees every potential divisor before the monomials it divides.
        let mut generators: Vec<Monomial> = Vec::with_capacity(monomials.len());
        for m in monomials {
            if !generators.iter().any(|g| g.divides_unchecked(&m)) {
                generators.push(m);
            }
        }
        MonomialIdeal { arity, generators }
    }

    pub fn zero(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            generators: Vec::new(),
        }
    }

    pub fn unit(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            generators: vec![Monomial::one(arity)],
        }
    }

    /// The graded maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(arity: usize) -> Self {
        Self::from_unchecked(
            arity,
            (0..arity).map(|i| Monomial::variable(arity, i)).collect(),
        )
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `G(I)` in canonical order.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    /// Whether the given monomial lies in the ideal.
    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        if u.arity() != self.arity {
            return Err(arity_mismatch(self.arity, u.arity()));
        }
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides_unchecked(u))
    }

    /// Equality of ideals, rejecting comparisons across rings.
    pub fn equals_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        if self.arity != other.arity {
            return Err(arity_mismatch(self.arity, other.arity));
        }
        Ok(self.generators == other.generators)
    }

    /// `supp(I)` as sorted variable indices.
    pub fn support(&self) -> Vec<usize> {
        (0..self.arity)
            .filter(|&i| self.generators.iter().any(|g| g.degree_in(i) > 0))
            .collect()
    }

    pub fn is_fully_supported(&self) -> bool {
        self.support().len() == self.arity
    }

    /// `deg(I)`: the componentwise maximum of the generator exponents.
    pub fn bounding_multidegree(&self) -> Result<Vec<u32>> {
        if self.is_zero() {
            return Err(Error::Domain(
                "the zero ideal has no bounding multidegree".into(),
            ));
        }
        let mut bound = vec![0; self.arity];
        for g in &self.generators {
            for (b, &e) in bound.iter_mut().zip(g.exponents()) {
                *b = (*b).max(e);
            }
        }
        Ok(bound)
    }

    /// Initial degree: the smallest degree of a generator.
    pub fn indeg(&self) -> Result<u64> {
        self.generators
            .first()
            .map(Monomial::degree)
            .ok_or_else(|| Error::Domain("the zero ideal has no initial degree".into()))
    }

    pub fn is_equigenerated(&self) -> bool {
        self.generators
            .windows(2)
            .all(|w| w[0].degree() == w[1].degree())
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// The colon ideal `I : (w)`.
    pub fn colon_by_monomial(&self, w: &Monomial) -> Result<MonomialIdeal> {
        if w.arity() != self.arity {
            return Err(arity_mismatch(self.arity, w.arity()));
        }
        Ok(Self::from_unchecked(
            self.arity,
            self.generators
                .iter()
                .map(|u| u.colon_unchecked(w))
                .collect(),
        ))
    }

    /// Whether `other` contains every generator of `self`.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> bool {
        self.arity == other.arity && self.generators.iter().all(|g| other.contains_unchecked(g))
    }

    pub(crate) fn generator_set(&self) -> HashSet<&Monomial> {
        self.generators.iter().collect()
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
