//! Depth-first search for an ordering of `m` items in which every item is an
//! admissible extension of the items placed before it.
//!
//! Both shelling orders and admissible generator orders have the property that
//! whether an item may be appended depends only on the *set* of items already
//! placed. The search therefore memoizes placed-sets from which no completion
//! exists, so it visits at most `2^m` distinct states.

use std::collections::HashSet;

/// Default number of extension attempts before a search gives up.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Cap on extension attempts for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget(pub u64);

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget(DEFAULT_BUDGET)
    }
}

/// Three-valued result of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    NotFound,
    BudgetExceeded,
}

impl<T> SearchOutcome<T> {
    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::NotFound => SearchOutcome::NotFound,
            SearchOutcome::BudgetExceeded => SearchOutcome::BudgetExceeded,
        }
    }

    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

struct Bitset(Vec<u64>);

impl Bitset {
    fn new(len: usize) -> Self {
        Bitset(vec![0; len.div_ceil(64).max(1)])
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }
}

struct Searcher<F> {
    len: usize,
    can_extend: F,
    remaining: u64,
    placed: Bitset,
    order: Vec<usize>,
    dead: HashSet<Vec<u64>>,
}

enum Step {
    Complete,
    Dead,
    OutOfBudget,
}

impl<F: FnMut(&[usize], usize) -> bool> Searcher<F> {
    fn descend(&mut self) -> Step {
        if self.order.len() == self.len {
            return Step::Complete;
        }
        if self.dead.contains(&self.placed.0) {
            return Step::Dead;
        }
        for candidate in 0..self.len {
            if self.placed.get(candidate) {
                continue;
            }
            if self.remaining == 0 {
                return Step::OutOfBudget;
            }
            self.remaining -= 1;
            if !(self.can_extend)(&self.order, candidate) {
                continue;
            }
            self.placed.flip(candidate);
            self.order.push(candidate);
            match self.descend() {
                Step::Dead => {
                    self.order.pop();
                    self.placed.flip(candidate);
                }
                other => return other,
            }
        }
        self.dead.insert(self.placed.0.clone());
        Step::Dead
    }
}

/// Searches for a permutation of `0..len` such that
/// `can_extend(prefix, next)` holds at every step. Candidates are tried in
/// increasing index order, so the result is deterministic.
pub fn find_ordering<F>(
    len: usize,
    budget: SearchBudget,
    can_extend: F,
) -> SearchOutcome<Vec<usize>>
where
    F: FnMut(&[usize], usize) -> bool,
{
    let mut searcher = Searcher {
        len,
        can_extend,
        remaining: budget.0,
        placed: Bitset::new(len),
        order: Vec::with_capacity(len),
        dead: HashSet::new(),
    };
    match searcher.descend() {
        Step::Complete => SearchOutcome::Found(searcher.order),
        Step::Dead => SearchOutcome::NotFound,
        Step::OutOfBudget => SearchOutcome::BudgetExceeded,
    }
}
