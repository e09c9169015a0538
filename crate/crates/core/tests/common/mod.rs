#![allow(dead_code)]

use hsi_core::text::parse_ideal_file;
use hsi_core::{Monomial, MonomialIdeal};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn parse(text: &str) -> MonomialIdeal {
    parse_ideal_file(text).unwrap().ideal
}

pub fn names(text: &str) -> Vec<String> {
    parse_ideal_file(text).unwrap().variables
}

pub const SESSION1: &str = "ring: a b c d e f\n\
    gens: a*b*d, a*b*f, a*c*e, a*d*c, a*e*f, b*d*e, b*c*f, b*c*e, c*d*f, d*e*f\n";
pub const SESSION2: &str = "ring: a b c d e f\ngens: a*b, a*c, a*d, d*e, d*f\n";
pub const SESSION3: &str = "ring: x_1 x_2 x_3\n\
    gens: x_1^3, x_1^2*x_2, x_1^2*x_3, x_1*x_2^2, x_1*x_2*x_3, x_2^3, x_2^2*x_3\n";

pub fn session_ideals() -> Vec<MonomialIdeal> {
    vec![parse(SESSION1), parse(SESSION2), parse(SESSION3)]
}

/// Monomial from a `name*name^k` string in the given ring.
pub fn mono(text: &str, ring: &str) -> Monomial {
    hsi_core::text::parse_monomial(text, &names(&format!("ring: {ring}\ngens:\n"))).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random proper nonzero ideal with `1..=max_gens` listed generators in at
/// most `max_arity` variables, exponents at most `max_exp`.
pub fn random_ideal(
    rng: &mut StdRng,
    max_arity: usize,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_arity);
    let m = rng.gen_range(1..=max_gens);
    let mut gens = Vec::with_capacity(m);
    while gens.len() < m {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        if e.iter().any(|&x| x > 0) {
            gens.push(Monomial::from_exponents(e));
        }
    }
    MonomialIdeal::new(n, gens).unwrap()
}

pub fn random_corpus(
    seed: u64,
    count: usize,
    max_arity: usize,
    max_gens: usize,
    max_exp: u32,
) -> Vec<MonomialIdeal> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| random_ideal(&mut r, max_arity, max_gens, max_exp))
        .collect()
}

/// All monomials of degree `d` in `n` variables with exponents at most `max_exp`.
pub fn monomials_of_degree(n: usize, d: u32, max_exp: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, max_exp: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            if d <= max_exp {
                let mut e = prefix.clone();
                e.push(d);
                out.push(Monomial::from_exponents(e));
            }
            return;
        }
        for k in 0..=d.min(max_exp) {
            prefix.push(k);
            rec(n, d - k, max_exp, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, max_exp, &mut Vec::new(), &mut out);
    out
}

/// A random equigenerated ideal: a random subset of the degree-`d` monomials.
pub fn random_equigenerated(rng: &mut StdRng, max_arity: usize, max_gens: usize) -> MonomialIdeal {
    let n = rng.gen_range(2..=max_arity);
    let d = rng.gen_range(2..=3);
    let pool = monomials_of_degree(n, d, 2);
    let m = rng.gen_range(1..=max_gens.min(pool.len()));
    let mut gens = Vec::new();
    while gens.len() < m {
        let g = pool[rng.gen_range(0..pool.len())].clone();
        if !gens.contains(&g) {
            gens.push(g);
        }
    }
    MonomialIdeal::new(n, gens).unwrap()
}

/// The product of ideals of variables `P_{A_1} ⋯ P_{A_k}` (a transversal
/// polymatroidal ideal).
pub fn transversal(n: usize, blocks: &[Vec<usize>]) -> MonomialIdeal {
    let mut current = vec![Monomial::one(n)];
    for block in blocks {
        let mut next = Vec::new();
        for u in &current {
            for &v in block {
                next.push(u.mul_variable(v));
            }
        }
        current = MonomialIdeal::new(n, next).unwrap().generators().to_vec();
    }
    MonomialIdeal::new(n, current).unwrap()
}

pub fn random_transversal(rng: &mut StdRng, max_arity: usize) -> MonomialIdeal {
    let n = rng.gen_range(2..=max_arity);
    let k = rng.gen_range(1..=3);
    let blocks: Vec<Vec<usize>> = (0..k)
        .map(|_| {
            let mut b: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            if b.is_empty() {
                b.push(rng.gen_range(0..n));
            }
            b
        })
        .collect();
    transversal(n, &blocks)
}

/// The squarefree Veronese ideal `I_{n,d}`.
pub fn squarefree_veronese(n: usize, d: usize) -> MonomialIdeal {
    let gens = (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == d)
        .map(|mask| {
            let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            Monomial::squarefree(n, &idx)
        })
        .collect();
    MonomialIdeal::new(n, gens).unwrap()
}

/// Prints one aligned pass/fail line for an acceptance criterion.
pub fn report(id: &str, passed: bool, detail: &str) {
    println!(
        "[{}] criterion {id}: {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
}
