use rayon::prelude::*;
use serde::Serialize;

use crate::complex::VertexSet;
use crate::error::{Error, Result};

use super::{Monomial, MonomialIdeal};

/// Three vertices `i < j < k` with generator supports `H_i, H_j, H_k` such
/// that `H_i ∩ {i,j,k} = {j,k}`, `H_j ∩ {i,j,k} = {i,k}` and
/// `H_k ∩ {i,j,k} = {i,j}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SpecialTriangle {
    pub vertices: [usize; 3],
    pub witnesses: [VertexSet; 3],
}

impl SpecialTriangle {
    /// `x^{H_i ∩ H_j ∩ H_k} · x^{H_i ∪ H_j ∪ H_k}`.
    pub fn test_monomial(&self, n: usize) -> Monomial {
        let [a, b, c] = self.witnesses;
        let meet = a.intersection(b).intersection(c);
        let join = a.union(b).union(c);
        Monomial::from_set(n, meet)
            .multiply(&Monomial::from_set(n, join))
            .expect("same ring")
    }
}

/// Outcome of the special-triangle test for `I^(2) = I^2`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Sym2Verdict {
    pub equal: bool,
    pub certificate: Sym2Certificate,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Sym2Certificate {
    /// The first special triangle whose test monomial is not in `I^2`.
    Failure {
        triangle: SpecialTriangle,
        monomial: Monomial,
    },
    /// Every special triangle passed; this many were checked.
    Checked { triangles: usize },
}

fn supports_checked(ideal: &MonomialIdeal) -> Result<Vec<VertexSet>> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    Ok(ideal.supports())
}

/// Special triangles on the vertex triple `t`, in generator order.
fn triangles_on(supports: &[VertexSet], t: [usize; 3]) -> Vec<SpecialTriangle> {
    let tri = VertexSet::from_vertices(t);
    let mut buckets: [Vec<VertexSet>; 3] = Default::default();
    for &h in supports {
        let cut = h.intersection(tri);
        for (slot, &v) in t.iter().enumerate() {
            if cut == tri.without(v) {
                buckets[slot].push(h);
            }
        }
    }
    let mut out = Vec::new();
    for &a in &buckets[0] {
        for &b in &buckets[1] {
            for &c in &buckets[2] {
                out.push(SpecialTriangle {
                    vertices: t,
                    witnesses: [a, b, c],
                });
            }
        }
    }
    out
}

fn vertex_triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// All special triangles of the generator hypergraph of a squarefree ideal,
/// ordered by vertex triple and then by generator order.
pub fn special_triangles(ideal: &MonomialIdeal) -> Result<Vec<SpecialTriangle>> {
    let supports = supports_checked(ideal)?;
    Ok(vertex_triples(ideal.n())
        .par_iter()
        .flat_map_iter(|&t| triangles_on(&supports, t))
        .collect())
}

/// Whether `x^{N} · x^{U}` lies in `I^2` for `N ⊆ U`: some generators `g, h`
/// (possibly equal) have `g ∪ h ⊆ U` and `g ∩ h ⊆ N`.
fn square_contains(supports: &[VertexSet], meet: VertexSet, join: VertexSet) -> bool {
    let inside: Vec<VertexSet> = supports
        .iter()
        .copied()
        .filter(|g| g.is_subset(join))
        .collect();
    inside.iter().enumerate().any(|(a, &g)| {
        inside[a..]
            .iter()
            .any(|&h| g.intersection(h).is_subset(meet))
    })
}

/// Decides `I^(2) = I^2` for a squarefree ideal by checking every special
/// triangle. Stops at the first failure in the enumeration order of
/// [`special_triangles`].
pub fn symbolic2_equals_square(ideal: &MonomialIdeal) -> Result<Sym2Verdict> {
    let supports = supports_checked(ideal)?;
    let n = ideal.n();
    let per_triple: Vec<std::result::Result<usize, SpecialTriangle>> = vertex_triples(n)
        .par_iter()
        .map(|&t| {
            let found = triangles_on(&supports, t);
            for tri in &found {
                let [a, b, c] = tri.witnesses;
                let meet = a.intersection(b).intersection(c);
                let join = a.union(b).union(c);
                if !square_contains(&supports, meet, join) {
                    return Err(*tri);
                }
            }
            Ok(found.len())
        })
        .collect();
    let mut checked = 0;
    for r in per_triple {
        match r {
            Ok(k) => checked += k,
            Err(triangle) => {
                return Ok(Sym2Verdict {
                    equal: false,
                    certificate: Sym2Certificate::Failure {
                        monomial: triangle.test_monomial(n),
                        triangle,
                    },
                })
            }
        }
    }
    Ok(Sym2Verdict {
        equal: true,
        certificate: Sym2Certificate::Checked { triangles: checked },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{named, Graph};
    use crate::ideal::{edge_ideal, stanley_reisner, symbolic_power_of_ideal};
    use proptest::prelude::*;

    fn direct(i: &MonomialIdeal) -> bool {
        symbolic_power_of_ideal(i, 2).unwrap() == i.power(2)
    }

    fn graph_from_bits(n: usize, bits: u64) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 1..=n {
            for b in a + 1..=n {
                if bits >> k & 1 == 1 {
                    edges.push((a, b));
                }
                k += 1;
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn k3_has_one_special_triangle() {
        let k3 = edge_ideal(&Graph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap());
        let tris = special_triangles(&k3).unwrap();
        assert_eq!(tris.len(), 1);
        assert_eq!(tris[0].vertices, [1, 2, 3]);
        let v = symbolic2_equals_square(&k3).unwrap();
        assert!(!v.equal);
        match v.certificate {
            Sym2Certificate::Failure { triangle, monomial } => {
                assert_eq!(triangle.vertices, [1, 2, 3]);
                assert_eq!(monomial, Monomial::from_set(3, VertexSet::full(3)));
            }
            other => panic!("unexpected certificate {other:?}"),
        }
    }

    #[test]
    fn pentagon_is_vacuous() {
        let i = stanley_reisner(&named::cycle(5).unwrap());
        assert!(special_triangles(&i).unwrap().is_empty());
        let v = symbolic2_equals_square(&i).unwrap();
        assert!(v.equal);
        assert_eq!(v.certificate, Sym2Certificate::Checked { triangles: 0 });
    }

    #[test]
    fn rp2_fails_on_first_triple() {
        let i = stanley_reisner(&named::rp2());
        let tris = special_triangles(&i).unwrap();
        let s = |v: &[usize]| VertexSet::from_vertices(v.iter().copied());
        assert!(tris.contains(&SpecialTriangle {
            vertices: [1, 2, 3],
            witnesses: [s(&[2, 3, 4]), s(&[1, 3, 6]), s(&[1, 2, 5])],
        }));
        let v = symbolic2_equals_square(&i).unwrap();
        assert!(!v.equal);
        assert!(!direct(&i));
    }

    #[test]
    fn rejects_non_squarefree() {
        let i = MonomialIdeal::new(2, vec![Monomial::from_powers(2, &[(1, 2)])]).unwrap();
        assert_eq!(special_triangles(&i), Err(Error::NotSquarefree));
    }

    #[test]
    fn triangle_free_graphs_exhaustive() {
        for n in 3..=5 {
            let pairs = n * (n - 1) / 2;
            for bits in 0..(1u64 << pairs) {
                let g = graph_from_bits(n, bits);
                let i = edge_ideal(&g);
                let v = symbolic2_equals_square(&i).unwrap();
                assert_eq!(v.equal, !g.has_triangle(), "graph {:?}", g.edges());
                assert_eq!(v.equal, direct(&i), "graph {:?}", g.edges());
            }
        }
    }

    fn arb_squarefree(max_n: usize) -> impl Strategy<Value = MonomialIdeal> {
        (3..=max_n).prop_flat_map(|n| {
            prop::collection::vec(1u64..(1u64 << n), 1..8).prop_map(move |raw| {
                let sets: Vec<VertexSet> = raw.into_iter().map(VertexSet::from_bits).collect();
                MonomialIdeal::from_sets(n, &sets)
            })
        })
    }

    proptest! {
        #[test]
        fn agrees_with_direct_computation(i in arb_squarefree(7)) {
            prop_assert_eq!(symbolic2_equals_square(&i).unwrap().equal, direct(&i));
        }

        #[test]
        fn triangle_free_graphs_random(n in 6usize..=7, bits in any::<u64>()) {
            let g = graph_from_bits(n, bits);
            prop_assert_eq!(symbolic2_equals_square(&edge_ideal(&g)).unwrap().equal, !g.has_triangle());
        }

        #[test]
        fn join_needs_both_factors(a in arb_squarefree(4), b in arb_squarefree(4)) {
            // I_{Γ*Λ} is generated by both ideals in disjoint variable sets.
            let n = a.n() + b.n();
            let mut sets: Vec<VertexSet> = a.supports();
            sets.extend(b.supports().into_iter().map(|s| s.shifted(a.n())));
            let joined = MonomialIdeal::from_sets(n, &sets);
            let both = symbolic2_equals_square(&a).unwrap().equal
                && symbolic2_equals_square(&b).unwrap().equal;
            prop_assert_eq!(symbolic2_equals_square(&joined).unwrap().equal, both);
        }

        #[test]
        fn witnesses_satisfy_definition(i in arb_squarefree(6)) {
            for t in special_triangles(&i).unwrap() {
                let tri = VertexSet::from_vertices(t.vertices);
                for (h, v) in t.witnesses.iter().zip(t.vertices) {
                    prop_assert_eq!(h.intersection(tri), tri.without(v));
                    prop_assert!(i.supports().contains(h));
                }
            }
        }
    }
}
