//! Finite simplicial complexes on `{1, ..., n}` (n <= 64), stored by facets.

mod graph;
pub mod named;
mod vertex_set;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::transversal::maximalize;

pub use graph::{Diameter, Graph};
pub use vertex_set::{Subsets, VertexSet, Vertices};

pub const MAX_VERTICES: usize = 64;

/// A simplicial complex given by its facets.
///
/// Facets form an antichain sorted lexicographically. An empty facet list is
/// the void complex (no faces at all); the single facet `∅` is the complex
/// `{∅}` of dimension -1, which is what the link of a facet looks like.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

/// A complex whose vertices were renumbered `1..=k` in ascending order of
/// their old labels. `labels[i]` is the old name of new vertex `i + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Reindexed {
    pub complex: SimplicialComplex,
    pub labels: Vec<usize>,
}

impl Reindexed {
    pub fn old_to_new(&self, old: usize) -> Option<usize> {
        self.labels.binary_search(&old).ok().map(|i| i + 1)
    }

    pub fn new_to_old(&self, new: usize) -> Option<usize> {
        self.labels.get(new.checked_sub(1)?).copied()
    }
}

/// Face counts `f_0, ..., f_{d-1}` and the reduced Euler characteristic.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<usize>,
    pub reduced_euler: i64,
}

impl FVector {
    fn from_counts(counts: Vec<usize>, has_empty_face: bool) -> Self {
        let alternating: i64 = counts
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        let empty = if has_empty_face { -1 } else { 0 };
        FVector {
            counts,
            reduced_euler: empty + alternating,
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

fn check_in_range(n: usize, set: VertexSet) -> Result<()> {
    match set.max() {
        Some(v) if v > n => Err(Error::VertexOutOfRange { vertex: v, n }),
        _ => Ok(()),
    }
}

impl SimplicialComplex {
    /// The complex generated by `faces` on `{1, ..., n}`. Every vertex must
    /// occur in some face.
    pub fn new<F: AsRef<[usize]>>(n: usize, faces: &[F]) -> Result<Self> {
        let mut sets = Vec::with_capacity(faces.len());
        for face in faces {
            for &v in face.as_ref() {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            sets.push(VertexSet::from_vertices(face.as_ref().iter().copied()));
        }
        Self::from_sets(n, sets)
    }

    /// Like [`SimplicialComplex::new`] for faces already given as bit sets.
    pub fn from_sets(n: usize, faces: Vec<VertexSet>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let complex = Self::with_ghosts(n, faces)?;
        let used = complex.vertex_set();
        if let Some(v) = VertexSet::full(n).difference(used).iter().next() {
            return Err(Error::UnusedVertex(v));
        }
        Ok(complex)
    }

    /// Builds a complex that may leave some of `{1, ..., n}` unused. Needed for
    /// subcomplexes such as restrictions, stars and `Δ_a` complexes.
    pub fn with_ghosts(n: usize, faces: Vec<VertexSet>) -> Result<Self> {
        check_n(n)?;
        for &f in &faces {
            check_in_range(n, f)?;
        }
        Ok(SimplicialComplex {
            n,
            facets: maximalize(faces),
        })
    }

    /// The complex `{∅}` on zero vertices.
    pub fn empty_face() -> Self {
        SimplicialComplex {
            n: 0,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The void complex on `n` vertices: no faces, not even `∅`.
    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
        }
    }

    /// The full simplex on `{1, ..., n}`.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::from_sets(n, vec![VertexSet::full(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, with `dim {∅} = -1`. The void complex also reports -1.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    /// `dim S/I_Δ`, the size of the largest facet.
    pub fn krull_dim(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn is_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Every face, sorted by size and then lexicographically. Includes `∅`
    /// unless the complex is void.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut all: Vec<VertexSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        all.sort_unstable_by_key(|s| s.bits());
        all.dedup();
        all.sort_by_key(|s| (s.len(), *s));
        all
    }

    /// Faces of dimension `i`, sorted.
    pub fn faces_of_dim(&self, i: isize) -> Vec<VertexSet> {
        self.faces().into_iter().filter(|f| f.dim() == i).collect()
    }

    /// Faces grouped by dimension: entry `k` holds the faces of dimension `k - 1`.
    pub fn faces_by_dim(&self) -> Vec<Vec<VertexSet>> {
        if self.is_void() {
            return Vec::new();
        }
        let top = self.krull_dim();
        let mut buckets = vec![Vec::new(); top + 1];
        for f in self.faces() {
            buckets[f.len()].push(f);
        }
        buckets
    }

    fn require_face(&self, face: VertexSet) -> Result<()> {
        check_in_range(self.n, face)?;
        if !self.is_face(face) {
            return Err(Error::NotAFace(face.to_vec()));
        }
        Ok(())
    }

    /// Drops unused vertices and renumbers the rest in ascending order.
    pub fn compact(&self) -> Reindexed {
        let used = self.vertex_set();
        let labels = used.to_vec();
        let mut lookup = [0usize; MAX_VERTICES + 1];
        for (i, &old) in labels.iter().enumerate() {
            lookup[old] = i + 1;
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|v| lookup[v]).collect::<VertexSet>())
            .collect();
        let complex = SimplicialComplex {
            n: labels.len(),
            facets: maximalize(facets),
        };
        Reindexed { complex, labels }
    }

    /// `star F = {H : H ∪ F ∈ Δ}`, on the original vertex labels.
    pub fn star(&self, face: VertexSet) -> Result<SimplicialComplex> {
        self.require_face(face)?;
        let facets = self
            .facets
            .iter()
            .copied()
            .filter(|f| face.is_subset(*f))
            .collect();
        Ok(SimplicialComplex {
            n: self.n,
            facets,
        })
    }

    /// `link F = {H ∈ star F : H ∩ F = ∅}`, renumbered over its own vertices.
    pub fn link(&self, face: VertexSet) -> Result<Reindexed> {
        Ok(self.link_on_ghosts(face)?.compact())
    }

    /// The link on the original labels of `Δ`.
    pub fn link_on_ghosts(&self, face: VertexSet) -> Result<SimplicialComplex> {
        self.require_face(face)?;
        let facets = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| f.difference(face))
            .collect();
        Ok(SimplicialComplex {
            n: self.n,
            facets: maximalize(facets),
        })
    }

    /// `Δ^(k)`: faces of dimension at most `k`.
    pub fn skeleton(&self, k: isize) -> Result<SimplicialComplex> {
        let dim = self.dim();
        if k < 0 || k > dim {
            return Err(Error::SkeletonOutOfRange { k, dim });
        }
        let size = (k + 1) as usize;
        let mut faces = Vec::new();
        for &f in &self.facets {
            if f.len() <= size {
                faces.push(f);
            } else {
                faces.extend(f.subsets().filter(|s| s.len() == size));
            }
        }
        Ok(SimplicialComplex {
            n: self.n,
            facets: maximalize(faces),
        })
    }

    /// `Δ_W = {F ∈ Δ : F ⊆ W}`, keeping the labels of `Δ`.
    pub fn restrict(&self, w: VertexSet) -> Result<SimplicialComplex> {
        check_in_range(self.n, w)?;
        let faces = self.facets.iter().map(|f| f.intersection(w)).collect();
        Ok(SimplicialComplex {
            n: self.n,
            facets: maximalize(faces),
        })
    }

    /// Vertices lying in every facet (cone points).
    pub fn cone_points(&self) -> VertexSet {
        match self.facets.split_first() {
            None => VertexSet::EMPTY,
            Some((first, rest)) => rest.iter().fold(*first, |acc, f| acc.intersection(*f)),
        }
    }

    /// `core V = {x : star{x} ≠ Δ}`; `core Δ = Δ_{core V}`, renumbered.
    pub fn core(&self) -> Reindexed {
        let core_v = self.vertex_set().difference(self.cone_points());
        let faces = self.facets.iter().map(|f| f.intersection(core_v)).collect();
        SimplicialComplex {
            n: self.n,
            facets: maximalize(faces),
        }
        .compact()
    }

    /// Simplicial join; the vertices of `other` are shifted up by `self.n()`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let n = self.n + other.n;
        check_n(n)?;
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &f in &self.facets {
            for &g in &other.facets {
                facets.push(f.union(g.shifted(self.n)));
            }
        }
        Ok(SimplicialComplex {
            n,
            facets: maximalize(facets),
        })
    }

    /// Cone with apex `n + 1`.
    pub fn cone(&self) -> Result<SimplicialComplex> {
        let apex = SimplicialComplex {
            n: 1,
            facets: vec![VertexSet::singleton(1)],
        };
        self.join(&apex)
    }

    /// Stellar subdivision on `face`; the new vertex is `n + 1`.
    ///
    /// Facets avoiding `face` survive, and each facet `G ⊇ face` is replaced by
    /// `(G \ {w}) ∪ {v}` for every `w ∈ face`.
    pub fn stellar_subdivision(&self, face: VertexSet) -> Result<SimplicialComplex> {
        self.require_face(face)?;
        if face.len() < 2 {
            return Err(Error::FaceTooSmall(face.to_vec()));
        }
        let n = self.n + 1;
        check_n(n)?;
        let v = n;
        let mut facets = Vec::new();
        for &g in &self.facets {
            if face.is_subset(g) {
                facets.extend(face.iter().map(|w| g.without(w).with(v)));
            } else {
                facets.push(g);
            }
        }
        Ok(SimplicialComplex {
            n,
            facets: maximalize(facets),
        })
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimplicialComplex> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let image: VertexSet = perm.iter().copied().collect();
        if perm.iter().any(|&p| p == 0 || p > self.n) || image.len() != self.n {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|v| perm[v - 1]).collect())
            .collect();
        Ok(SimplicialComplex {
            n: self.n,
            facets: maximalize(facets),
        })
    }

    pub fn one_skeleton(&self) -> Graph {
        let mut edges = Vec::new();
        for &f in &self.facets {
            let vs = f.to_vec();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(self.n, &edges).expect("facet vertices lie in range")
    }

    pub fn f_vector(&self) -> FVector {
        let by_dim = self.faces_by_dim();
        let counts = by_dim.iter().skip(1).map(Vec::len).collect();
        FVector::from_counts(counts, !self.is_void())
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector().reduced_euler
    }
}

/// JSON form `{"n": int, "facets": [[int, ...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexJson {
            n: c.n,
            facets: c.facet_lists(),
        }
    }
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(json: ComplexJson) -> Result<Self> {
        if json.n == 0 && json.facets.iter().all(|f| f.is_empty()) && !json.facets.is_empty() {
            return Ok(SimplicialComplex::empty_face());
        }
        SimplicialComplex::new(json.n, &json.facets)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = ComplexJson::deserialize(d)?;
        SimplicialComplex::try_from(json).map_err(serde::de::Error::custom)
    }
}
