//! Monomial ideals: arithmetic, symbolic powers, and the special-triangle
//! test for `I^(2) = I^2`.

mod monomial;
mod symbolic;
mod triangles;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{Graph, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::transversal::minimal_transversals;

pub use monomial::Monomial;
pub use symbolic::{in_symbolic_power, symbolic_power, symbolic_power_of_ideal};
pub use triangles::{
    special_triangles, symbolic2_equals_square, Sym2Certificate, Sym2Verdict, SpecialTriangle,
};

/// A monomial ideal in `K[x_1, ..., x_n]`, stored by its minimal generators
/// in sorted order. No generators means the zero ideal; the generator `1`
/// means the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Drops every generator divisible by another one, then sorts.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // Sorted by degree, so a divisor of `g` is always already in `kept`.
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::LengthMismatch(n, bad.n()));
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(gens),
        })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The squarefree ideal generated by `x_σ` for each `σ` in `sets`.
    pub fn from_sets(n: usize, sets: &[VertexSet]) -> Self {
        let gens = sets.iter().map(|&s| Monomial::from_set(n, s)).collect();
        MonomialIdeal {
            n,
            gens: minimalize(gens),
        }
    }

    /// Squarefree ideal from 1-based vertex lists, e.g. `[[1, 2], [2, 3]]`.
    pub fn from_supports<F: AsRef<[usize]>>(n: usize, supports: &[F]) -> Result<Self> {
        let mut sets = Vec::with_capacity(supports.len());
        for s in supports {
            for &v in s.as_ref() {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            sets.push(VertexSet::from_vertices(s.as_ref().iter().copied()));
        }
        Ok(Self::from_sets(n, &sets))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// `ρ_i = max{b_i : x^b ∈ G(I)}` for each variable.
    pub fn rho(&self) -> Vec<u32> {
        let mut rho = vec![0; self.n];
        for g in &self.gens {
            for (r, &e) in rho.iter_mut().zip(g.exponents()) {
                *r = (*r).max(e);
            }
        }
        rho
    }

    /// Supports of the minimal generators: the edges of the associated
    /// hypergraph when `I` is squarefree.
    pub fn supports(&self) -> Vec<VertexSet> {
        self.gens.iter().map(Monomial::support).collect()
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::from_sets(self.n, &self.supports())
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.n() != self.n {
            return Err(Error::LengthMismatch(self.n, m.n()));
        }
        Ok(self.gens.iter().any(|g| g.divides_unchecked(m)))
    }

    /// `I ⊆ J`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.multiply(h)?);
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        })
    }

    /// `I^k`; by convention `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `I ∩ J`, generated by the pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h)?);
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        })
    }

    /// `(x_i : i ∈ set)^k`, all degree-`k` monomials in the given variables.
    pub fn prime_power(n: usize, set: VertexSet, k: u32) -> MonomialIdeal {
        fn rec(vars: &[usize], k: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            match vars.split_first() {
                None => {
                    if k == 0 {
                        out.push(Monomial::new(cur.clone()));
                    }
                }
                Some((&v, rest)) => {
                    for e in (0..=k).rev() {
                        cur[v - 1] = e;
                        rec(rest, k - e, cur, out);
                    }
                    cur[v - 1] = 0;
                }
            }
        }
        let vars = set.to_vec();
        let mut out = Vec::new();
        rec(&vars, k, &mut vec![0; n], &mut out);
        MonomialIdeal {
            n,
            gens: minimalize(out),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// JSON form `{"n": int, "gens": [[e_1, ..., e_n], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        IdealJson {
            n: i.n,
            gens: i.gens.iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(json: IdealJson) -> Result<Self> {
        MonomialIdeal::new(json.n, json.gens.into_iter().map(Monomial::new).collect())
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = IdealJson::deserialize(d)?;
        MonomialIdeal::try_from(json).map_err(serde::de::Error::custom)
    }
}

/// `I_Δ`, generated by the minimal non-faces of `Δ`.
pub fn stanley_reisner(complex: &SimplicialComplex) -> MonomialIdeal {
    let n = complex.n();
    let full = VertexSet::full(n);
    let complements: Vec<VertexSet> = complex
        .facets()
        .iter()
        .map(|f| full.difference(*f))
        .collect();
    MonomialIdeal::from_sets(n, &minimal_transversals(&complements))
}

/// `Δ(I)` with `I_{Δ(I)} = √I`: its facets are the complements of the
/// minimal vertex covers of the generator supports. Variables lying in `√I`
/// stay as unused vertices.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let full = VertexSet::full(ideal.n());
    let facets = minimal_transversals(&ideal.supports())
        .into_iter()
        .map(|c| full.difference(c))
        .collect();
    SimplicialComplex::with_ghosts(ideal.n(), facets)
}

/// `I(G) = (x_i x_j : {i, j} ∈ E(G))`.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    MonomialIdeal::from_sets(g.n(), &g.edge_sets())
}
