//! Homological shift ideals `HS_i(I)` and the socle of a monomial ideal.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::resolution::{betti_table, BettiTable, FieldChoice};

/// `HS_i(I) = (x^a : β_{i,a}(I) ≠ 0)`, over the rationals. Zero for `i < 0`
/// and `i > pd(I)`.
pub fn homological_shift_ideal(ideal: &MonomialIdeal, i: isize) -> MonomialIdeal {
    shift_ideal_from_table(&betti_table(ideal, FieldChoice::Rationals), i)
}

/// `HS_i` read off an already computed Betti table.
pub fn shift_ideal_from_table(table: &BettiTable, i: isize) -> MonomialIdeal {
    MonomialIdeal::from_unchecked(table.arity(), table.shifts(i))
}

fn require_proper_nonzero(ideal: &MonomialIdeal, what: &str) -> Result<()> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::Domain(format!(
            "{what} needs a proper nonzero ideal"
        )));
    }
    Ok(())
}

/// `soc(I)`: the monomials `v ∉ I` with `x_j v ∈ I` for every `j`, obtained
/// from the top multigraded shifts: `β_{n-1,a}(I) ≠ 0` iff `x^a / x_{[n]} ∈ soc(I)`.
pub fn socle(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    require_proper_nonzero(ideal, "socle")?;
    socle_from_table(&betti_table(ideal, FieldChoice::Rationals))
}

pub fn socle_from_table(table: &BettiTable) -> Result<Vec<Monomial>> {
    let n = table.arity();
    if n == 0 {
        return Ok(Vec::new());
    }
    let all = Monomial::squarefree(n, &(0..n).collect::<Vec<_>>());
    let mut out = table
        .shifts(n as isize - 1)
        .into_iter()
        .map(|w| {
            w.checked_div(&all).ok_or_else(|| {
                Error::Invariant(format!("top shift {w} is not divisible by x_1⋯x_n"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}

/// Test oracle: `soc(I)` by enumerating every monomial in the box
/// `0 ≤ a ≤ deg(I)`.
pub fn socle_brute_force(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    require_proper_nonzero(ideal, "socle")?;
    let bound = ideal.bounding_multidegree()?;
    Ok(socle_brute_force_in_box(ideal, &bound))
}

/// Socle elements whose exponents are componentwise at most `bound`.
pub fn socle_brute_force_in_box(ideal: &MonomialIdeal, bound: &[u32]) -> Vec<Monomial> {
    let n = ideal.arity();
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        let v = Monomial::from_exponents(e.clone());
        if !ideal.contains_unchecked(&v)
            && (0..n).all(|j| ideal.contains_unchecked(&v.mul_variable(j)))
        {
            out.push(v);
        }
        // odometer increment
        let mut j = 0;
        while j < n && e[j] == bound[j] {
            e[j] = 0;
            j += 1;
        }
        if j == n {
            break;
        }
        e[j] += 1;
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    fn ideal(arity: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(arity, gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    #[test]
    fn hs_zero_is_the_ideal() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 1, 3]]);
        assert_eq!(homological_shift_ideal(&i, 0), i);
        assert!(homological_shift_ideal(&i, -1).is_zero());
        assert!(homological_shift_ideal(&i, 3).is_zero());
    }

    #[test]
    fn socle_examples() {
        assert!(socle(&ideal(2, &[&[1, 0]])).unwrap().is_empty());
        assert_eq!(
            socle(&MonomialIdeal::maximal(2)).unwrap(),
            vec![Monomial::one(2)]
        );
        let powers = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(socle(&powers).unwrap(), vec![m(&[1, 0]), m(&[0, 1])]);
        assert_eq!(
            socle_brute_force(&powers).unwrap(),
            vec![m(&[1, 0]), m(&[0, 1])]
        );
        assert_eq!(
            socle_brute_force(&MonomialIdeal::maximal(2)).unwrap(),
            vec![Monomial::one(2)]
        );
        assert!(socle(&MonomialIdeal::unit(2)).is_err());
        assert!(socle_brute_force(&MonomialIdeal::zero(2)).is_err());
    }
}
