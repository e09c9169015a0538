//! Multigraded Betti numbers of monomial ideals.
//!
//! `β_{i,a}(I)` is read off the reduced homology of the upper Koszul simplicial
//! complex `K^a(I) = { W ⊆ supp(a) : x^a / x_W ∈ I }`:
//! `β_{i,a}(I) = dim H̃_{i-1}(K^a(I))`. Nonzero values occur only at
//! multidegrees in the lcm lattice of `G(I)`, so only those are visited.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::simplicial::SimplicialComplex;

/// Coefficient field for homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldChoice {
    #[default]
    Rationals,
    PrimeField(u64),
}

impl FieldChoice {
    /// `GF(p)`, rejecting composite `p`.
    pub fn prime(p: u64) -> Result<Self> {
        if linalg::is_prime(p) {
            Ok(FieldChoice::PrimeField(p))
        } else {
            Err(Error::Input(format!("{p} is not prime")))
        }
    }

    fn rank(self, rows: &[Vec<i64>]) -> usize {
        match self {
            FieldChoice::Rationals => linalg::rank_rational(rows),
            FieldChoice::PrimeField(p) => linalg::rank_mod_p(rows, p),
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rationals => write!(f, "q"),
            FieldChoice::PrimeField(p) => write!(f, "p:{p}"),
        }
    }
}

/// The upper Koszul simplicial complex `K^a(I)` on the vertex set of the ring.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, a: &Monomial) -> Result<SimplicialComplex> {
    if a.arity() != ideal.arity() {
        return Err(crate::error::arity_mismatch(ideal.arity(), a.arity()));
    }
    let support = a.support();
    let k = support.len();
    let mut faces = Vec::new();
    for mask in 0u64..(1u64 << k) {
        let w: Vec<usize> = (0..k)
            .filter(|&b| mask >> b & 1 == 1)
            .map(|b| support[b])
            .collect();
        let rest = a.colon_unchecked(&Monomial::squarefree(a.arity(), &w));
        if ideal.contains_unchecked(&rest) {
            faces.push(w);
        }
    }
    SimplicialComplex::from_facets(ideal.arity(), faces)
}

fn boundary_rows(lower: &[Vec<usize>], upper: &[Vec<usize>]) -> Vec<Vec<i64>> {
    let index: std::collections::HashMap<&[usize], usize> = lower
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mut rows = vec![vec![0i64; upper.len()]; lower.len()];
    for (col, face) in upper.iter().enumerate() {
        for pos in 0..face.len() {
            let mut sub = face.clone();
            sub.remove(pos);
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            rows[index[sub.as_slice()]][col] = sign;
        }
    }
    rows
}

/// Dimensions of the reduced homology groups `H̃_d(Δ; K)` for
/// `d = -1, 0, ..., dim Δ` (entry `d + 1` holds degree `d`).
/// The void complex has no chains at all and yields an empty vector.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: FieldChoice) -> Vec<usize> {
    let faces = complex.faces_by_size();
    let top = faces.len();
    // ranks[k] = rank of the boundary map from faces of size k to size k - 1
    let mut ranks = vec![0usize; top + 1];
    for k in 1..top {
        ranks[k] = field.rank(&boundary_rows(&faces[k - 1], &faces[k]));
    }
    (0..top)
        .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// All least common multiples of nonempty subsets of `G(I)`, in canonical order.
pub fn lcm_multidegrees(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let gens = ideal.generators();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut worklist: Vec<Monomial> = gens.to_vec();
    while let Some(m) = worklist.pop() {
        for g in gens {
            let l = m.lcm_unchecked(g);
            if !seen.contains(&l) {
                seen.insert(l.clone());
                worklist.push(l);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// The nonzero multigraded Betti numbers `β_{i,a}(I)` of a monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    arity: usize,
    entries: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, i: usize, a: &Monomial) -> u64 {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// `(i, x^a, β_{i,a})` sorted by `i`, then canonical monomial order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Monomial, u64)> + '_ {
        self.entries.iter().map(|((i, a), &b)| (*i, a, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti number `β_i = Σ_a β_{i,a}`.
    pub fn total(&self, i: usize) -> u64 {
        self.iter()
            .filter(|(j, _, _)| *j == i)
            .map(|(_, _, b)| b)
            .sum()
    }

    /// The `i`-th multigraded shifts: all `x^a` with `β_{i,a} ≠ 0`.
    pub fn shifts(&self, i: isize) -> Vec<Monomial> {
        if i < 0 {
            return Vec::new();
        }
        let i = i as usize;
        self.entries
            .keys()
            .filter(|(j, _)| *j == i)
            .map(|(_, a)| a.clone())
            .collect()
    }

    /// `pd(I)`; `None` for the zero ideal.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// `reg(I) = max { deg(x^a) - i : β_{i,a} ≠ 0 }`; `None` for the zero ideal.
    pub fn regularity(&self) -> Option<i64> {
        self.entries
            .keys()
            .map(|(i, a)| a.degree() as i64 - *i as i64)
            .max()
    }
}

/// Computes every nonzero `β_{i,a}(I)`. Multidegrees are processed in
/// parallel; the result does not depend on scheduling.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldChoice) -> BettiTable {
    let candidates = lcm_multidegrees(ideal);
    let per_degree: Vec<(Monomial, Vec<usize>)> = candidates
        .into_par_iter()
        .map(|a| {
            let complex = upper_koszul_complex(ideal, &a).expect("arity checked by construction");
            let ranks = reduced_homology_ranks(&complex, field);
            (a, ranks)
        })
        .collect();
    let mut entries = BTreeMap::new();
    for (a, ranks) in per_degree {
        // ranks[k] is H̃_{k-1}, which is β_k
        for (i, &r) in ranks.iter().enumerate() {
            if r > 0 {
                entries.insert((i, a.clone()), r as u64);
            }
        }
    }
    BettiTable {
        arity: ideal.arity(),
        entries,
    }
}

/// `multigradedShifts(I, i)` over the rationals.
pub fn multigraded_shifts(ideal: &MonomialIdeal, i: isize) -> Vec<Monomial> {
    betti_table(ideal, FieldChoice::Rationals).shifts(i)
}

/// `pd(I)` over the rationals.
pub fn projective_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::Domain("pd of the zero ideal".into()));
    }
    Ok(betti_table(ideal, FieldChoice::Rationals)
        .projective_dimension()
        .expect("nonzero ideal has β_0 ≠ 0"))
}

/// `reg(I)` over the rationals.
pub fn regularity(ideal: &MonomialIdeal) -> Result<i64> {
    if ideal.is_zero() {
        return Err(Error::Domain("reg of the zero ideal".into()));
    }
    Ok(betti_table(ideal, FieldChoice::Rationals)
        .regularity()
        .expect("nonzero ideal has β_0 ≠ 0"))
}

#[allow(clippy::needless_range_loop)]
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = BigRational::one() / a[rank][col].clone();
        for c in col..ncols {
            a[rank][c] = &a[rank][c] * &inv;
        }
        for r in 0..a.len() {
            if r == rank || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..ncols {
                let t = &f * &a[rank][c];
                a[r][c] -= t;
            }
        }
        rank += 1;
    }
    rank
}

/// Test oracle: `β_{i,a}(I)` as the homology in position `i + 1` of the
/// degree-`a` strand of the Koszul complex `K(x_1, ..., x_n) ⊗ S/I`, with a
/// monomial basis `e_W ⊗ x^{a-W}` (`x^{a-W} ∉ I`) and Gauss–Jordan elimination
/// over `Q`. Shares no code path with [`betti_table`] apart from the mod-p rank.
pub fn koszul_strand_betti(
    ideal: &MonomialIdeal,
    i: usize,
    a: &Monomial,
    field: FieldChoice,
) -> u64 {
    if ideal.is_zero() {
        return 0;
    }
    if ideal.is_unit() {
        // S/I = 0; I = S is free of rank one
        return u64::from(i == 0 && a.is_one());
    }
    let n = ideal.arity();
    let k = i + 1;
    if k > n {
        return 0;
    }
    // basis of the strand in homological position j
    let basis = |j: usize| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut w: Vec<usize> = Vec::with_capacity(j);
        fn rec(
            start: usize,
            j: usize,
            n: usize,
            w: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
            ok: &dyn Fn(&[usize]) -> bool,
        ) {
            if w.len() == j {
                if ok(w) {
                    out.push(w.clone());
                }
                return;
            }
            for v in start..n {
                w.push(v);
                rec(v + 1, j, n, w, out, ok);
                w.pop();
            }
        }
        let ok = |w: &[usize]| {
            if w.iter().any(|&v| a.degree_in(v) == 0) {
                return false;
            }
            let mut e = a.exponents().to_vec();
            for &v in w {
                e[v] -= 1;
            }
            !ideal.contains_unchecked(&Monomial::from_exponents(e))
        };
        rec(0, j, n, &mut w, &mut out, &ok);
        out
    };
    // d_j : C_j -> C_{j-1}, e_W ↦ Σ_t (-1)^t e_{W \ w_t}; terms landing in I vanish
    let differential_rank = |j: usize| -> usize {
        if j == 0 || j > n {
            return 0;
        }
        let src = basis(j);
        let dst = basis(j - 1);
        if src.is_empty() || dst.is_empty() {
            return 0;
        }
        let mut rows = vec![vec![0i64; src.len()]; dst.len()];
        for (c, w) in src.iter().enumerate() {
            for t in 0..w.len() {
                let mut sub = w.clone();
                sub.remove(t);
                if let Some(r) = dst.iter().position(|d| *d == sub) {
                    rows[r][c] = if t % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        match field {
            FieldChoice::Rationals => rational_rank(&rows),
            FieldChoice::PrimeField(p) => linalg::rank_mod_p(&rows, p),
        }
    };
    let dim = basis(k).len();
    (dim - differential_rank(k) - differential_rank(k + 1)) as u64
}
