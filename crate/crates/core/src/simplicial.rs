//! Simplicial complexes given by their facets, Alexander duals of squarefree
//! ideals, and shelling orders.
//!
//! Vertices are `0..vertex_count`. A face is a strictly increasing `Vec<usize>`.

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::search::{find_ordering, SearchBudget, SearchOutcome};

pub type Face = Vec<usize>;

/// A simplicial complex `<F_1, ..., F_m>` on `vertex_count` vertices.
///
/// Facets are pairwise incomparable and sorted by size, then lexicographically.
/// The void complex (no faces at all) has no facets; the irrelevant complex
/// `{∅}` has the single facet `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Face>,
}

/// A permutation of the facets of a complex.
pub type ShellingOrder = Vec<Face>;

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    // both sorted
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

fn intersect(a: &[usize], b: &[usize]) -> Face {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn canonical_facets(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut facets: Vec<Face> = Vec::with_capacity(faces.len());
    // larger faces first so every face is tested against its potential supersets
    for (k, f) in faces.iter().enumerate().rev() {
        if !faces[k + 1..]
            .iter()
            .any(|g| g.len() > f.len() && is_subset(f, g))
        {
            facets.push(f.clone());
        }
    }
    facets.reverse();
    facets
}

impl SimplicialComplex {
    /// The complex generated by `subsets` of `0..vertex_count`.
    pub fn from_facets(vertex_count: usize, subsets: Vec<Vec<usize>>) -> Result<Self> {
        let mut faces = Vec::with_capacity(subsets.len());
        for mut s in subsets {
            if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::Input(format!(
                    "vertex {v} outside the vertex set of size {vertex_count}"
                )));
            }
            s.sort_unstable();
            s.dedup();
            faces.push(s);
        }
        Ok(SimplicialComplex {
            vertex_count,
            facets: canonical_facets(faces),
        })
    }

    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            facets: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// `max |F| - 1` over the facets; `-1` for the irrelevant complex `{∅}`.
    pub fn dimension(&self) -> Result<isize> {
        self.facets
            .last()
            .map(|f| f.len() as isize - 1)
            .ok_or_else(|| Error::Domain("the void complex has no dimension".into()))
    }

    /// Whether `face` lies in the complex.
    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    /// Every face of the complex grouped by size: entry `k` holds the faces
    /// with `k` vertices, each list sorted lexicographically.
    pub fn faces_by_size(&self) -> Vec<Vec<Face>> {
        let Some(dim) = self.dimension().ok() else {
            return Vec::new();
        };
        let mut by_size: Vec<std::collections::BTreeSet<Face>> =
            vec![Default::default(); (dim + 2) as usize];
        for facet in &self.facets {
            let k = facet.len();
            for mask in 0u64..(1u64 << k) {
                let face: Face = (0..k)
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| facet[b])
                    .collect();
                by_size[face.len()].insert(face);
            }
        }
        by_size
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect()
    }

    /// Whether `order` (a permutation of the facets) is a
    /// shelling order, i.e. for every `k >= 1` the complex generated by
    /// `F_j ∩ F_k` (`j < k`) is pure of dimension `dim F_k - 1`.
    pub fn is_shelling_order(&self, order: &[Face]) -> Result<bool> {
        let indices = self.facet_indices(order)?;
        Ok((1..indices.len()).all(|k| self.extends_shelling(&indices[..k], indices[k])))
    }

    fn facet_indices(&self, order: &[Face]) -> Result<Vec<usize>> {
        if order.len() != self.facets.len() {
            return Err(Error::Input(format!(
                "order lists {} facets but the complex has {}",
                order.len(),
                self.facets.len()
            )));
        }
        let mut seen = vec![false; self.facets.len()];
        let mut out = Vec::with_capacity(order.len());
        for face in order {
            let mut f = face.clone();
            f.sort_unstable();
            let idx = self
                .facets
                .iter()
                .position(|g| *g == f)
                .ok_or_else(|| Error::Input(format!("{face:?} is not a facet")))?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::Input(format!("facet {face:?} listed twice")));
            }
            out.push(idx);
        }
        Ok(out)
    }

    /// Whether appending facet `next` to the already placed facets `prefix`
    /// keeps the shelling condition.
    fn extends_shelling(&self, prefix: &[usize], next: usize) -> bool {
        if prefix.is_empty() {
            return true;
        }
        let f = &self.facets[next];
        if f.is_empty() {
            return false;
        }
        let meets: Vec<Face> = prefix
            .iter()
            .map(|&j| intersect(&self.facets[j], f))
            .collect();
        let ridges: Vec<&Face> = meets.iter().filter(|g| g.len() + 1 == f.len()).collect();
        meets
            .iter()
            .all(|g| g.len() + 1 == f.len() || ridges.iter().any(|r| is_subset(g, r)))
    }

    /// Backtracking search for a shelling order, trying
    /// facets in canonical order.
    pub fn find_shelling_order(
        &self,
        budget: SearchBudget,
    ) -> Result<SearchOutcome<ShellingOrder>> {
        if self.is_void() {
            return Err(Error::Domain(
                "the void complex has no facets to shell".into(),
            ));
        }
        let outcome = find_ordering(self.facets.len(), budget, |prefix, next| {
            self.extends_shelling(prefix, next)
        });
        Ok(outcome.map(|idx| idx.into_iter().map(|i| self.facets[i].clone()).collect()))
    }
}

/// For a squarefree ideal `I = I_Δ`, the facets of the
/// Alexander dual `Δ^∨` are the complements of the generator supports.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::Domain(
            "Alexander duality needs a proper nonzero ideal".into(),
        ));
    }
    if !ideal.is_squarefree() {
        return Err(Error::Domain(
            "Alexander duality needs a squarefree ideal".into(),
        ));
    }
    let n = ideal.arity();
    let facets = ideal
        .generators()
        .iter()
        .map(|u| (0..n).filter(|&i| u.degree_in(i) == 0).collect())
        .collect();
    SimplicialComplex::from_facets(n, facets)
}
