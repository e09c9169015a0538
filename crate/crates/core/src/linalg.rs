//! Exact matrix rank over the rationals and over prime fields.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_traits::{CheckedMul, CheckedSub, One, Zero};

/// Fraction-free (Bareiss) elimination. Returns `None` if an intermediate
/// value does not fit in `T`.
fn bareiss_rank<T>(rows: &[Vec<i64>]) -> Option<usize>
where
    T: Clone + Zero + One + CheckedMul + CheckedSub + std::ops::Div<Output = T> + From<i64>,
{
    let ncols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<T>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| T::from(x)).collect())
        .collect();
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in rank + 1..a.len() {
            let factor = a[r][col].clone();
            for c in col..ncols {
                let lhs = pivot.checked_mul(&a[r][c])?;
                let rhs = factor.checked_mul(&a[rank][c])?;
                // exact by Sylvester's identity
                a[r][c] = lhs.checked_sub(&rhs)? / prev.clone();
            }
        }
        prev = pivot;
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    Some(rank)
}

/// Rank over `Q` of an integer matrix given as rows.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    bareiss_rank::<i128>(rows).unwrap_or_else(|| {
        bareiss_rank::<BigInt>(rows).expect("arbitrary precision cannot overflow")
    })
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Rank over `GF(p)` of an integer matrix given as rows. `p` must be prime.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][col], p - 2, p);
        for c in col..ncols {
            a[rank][c] = (a[rank][c] as u128 * inv as u128 % p as u128) as u64;
        }
        for r in rank + 1..a.len() {
            let f = a[r][col];
            if f == 0 {
                continue;
            }
            for c in col..ncols {
                let sub = (f as u128 * a[rank][c] as u128 % p as u128) as u64;
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank_rational(&[]), 0);
        assert_eq!(rank_rational(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_rational(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(
            rank_rational(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]),
            3
        );
        // over GF(2) the same matrix is singular
        assert_eq!(
            rank_mod_p(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]], 2),
            2
        );
        assert_eq!(rank_mod_p(&[vec![-1, 1], vec![1, -1]], 7), 1);
    }

    #[test]
    fn skipped_columns_stay_exact() {
        let m = vec![
            vec![0, 2, 0, 3],
            vec![0, 4, 1, 6],
            vec![0, 6, 1, 9],
            vec![0, 0, 5, 0],
        ];
        assert_eq!(rank_rational(&m), 2);
    }

    #[test]
    fn overflowing_entries_fall_back_to_bigint() {
        // Hilbert-like integer matrix with huge minors
        let big = 3_000_000_000i64;
        let m: Vec<Vec<i64>> = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| big / (i + j + 1) as i64 + (i * j) as i64)
                    .collect()
            })
            .collect();
        assert!(bareiss_rank::<i128>(&m).is_none());
        assert_eq!(rank_rational(&m), bareiss_rank::<BigInt>(&m).unwrap());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(32003));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
    }
}
