//! Degreewise local cohomology of monomial quotients through Takayama's
//! formula, and the depth scan built on it.
//!
//! For a monomial ideal `I` with `Δ = Δ(I)` and `a ∈ ℤⁿ`, write
//! `G_a = {i : a_i < 0}`. Then `dim_K H^i_m(S/I)_a = dim_K H̃_{i-|G_a|-1}(Δ_a(I); K)`
//! when `G_a ∈ Δ` and `a_j ≤ ρ_j - 1` for every `j`, and the piece is zero
//! otherwise. `Δ_a(I)` does not change when negative entries move, so the
//! scan fixes them at `-1`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, FieldSpec};
use crate::ideal::{complex_of_ideal, stanley_reisner, symbolic_power, MonomialIdeal};
use crate::transversal::{maximalize, minimal_transversals};

/// Default cap on the number of degree vectors one depth scan may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// `G_a`, the set of variables with negative degree.
pub fn negative_support(a: &[i32]) -> VertexSet {
    a.iter()
        .enumerate()
        .filter(|(_, &x)| x < 0)
        .map(|(i, _)| i + 1)
        .collect()
}

fn check_len(n: usize, a: &[i32]) -> Result<()> {
    if a.len() != n {
        return Err(Error::LengthMismatch(n, a.len()));
    }
    Ok(())
}

/// Facets of `Δ_a(I)` given `Δ(I)`; `None` when `Δ_a(I)` is void.
///
/// A set `F ⊆ [n] \ G_a` qualifies iff it contains none of the sets
/// `S_b = {i ∉ G_a : b_i > a_i}`, that is iff `F` misses some minimal
/// transversal of the `S_b`.
fn delta_a_facets(
    base: &SimplicialComplex,
    gens: &[Vec<u32>],
    a: &[i32],
    g: VertexSet,
) -> Option<Vec<VertexSet>> {
    let n = a.len();
    let allowed = VertexSet::full(n).difference(g);
    let mut blockers = Vec::with_capacity(gens.len());
    for b in gens {
        let s: VertexSet = allowed
            .iter()
            .filter(|&i| i64::from(b[i - 1]) > i64::from(a[i - 1]))
            .collect();
        if s.is_empty() {
            return None;
        }
        blockers.push(s);
    }
    let covers = minimal_transversals(&blockers);
    if covers.is_empty() {
        return None;
    }
    let mut faces = Vec::with_capacity(base.facets().len() * covers.len());
    for &f in base.facets() {
        let f = f.intersection(allowed);
        for &t in &covers {
            faces.push(f.difference(t));
        }
    }
    Some(maximalize(faces))
}

/// `Δ_a(I)` on the vertex labels of `Δ(I)`.
pub fn delta_a(ideal: &MonomialIdeal, a: &[i32]) -> Result<SimplicialComplex> {
    check_len(ideal.n(), a)?;
    let base = complex_of_ideal(ideal)?;
    let gens: Vec<Vec<u32>> = ideal.gens().iter().map(|g| g.exponents().to_vec()).collect();
    match delta_a_facets(&base, &gens, a, negative_support(a)) {
        Some(facets) => SimplicialComplex::with_ghosts(ideal.n(), facets),
        None => Ok(SimplicialComplex::void(ideal.n())),
    }
}

/// `Δ_a(I_Δ^(ℓ)) = ⟨F facet of Δ : Σ_{i ∉ F} a_i ≤ ℓ - 1⟩` for `a ∈ ℕⁿ`.
pub fn delta_a_symbolic(
    complex: &SimplicialComplex,
    a: &[i32],
    l: u32,
) -> Result<SimplicialComplex> {
    check_len(complex.n(), a)?;
    if let Some(i) = a.iter().position(|&x| x < 0) {
        return Err(Error::NegativeDegree(i + 1));
    }
    if l == 0 {
        return Err(Error::ZeroPower);
    }
    let facets = complex
        .facets()
        .iter()
        .copied()
        .filter(|f| {
            let outside: i64 = a
                .iter()
                .enumerate()
                .filter(|(i, _)| !f.contains(i + 1))
                .map(|(_, &x)| i64::from(x))
                .sum();
            outside < i64::from(l)
        })
        .collect();
    SimplicialComplex::with_ghosts(complex.n(), facets)
}

/// `dim_K H^i_m(S/I)_a`.
pub fn local_cohomology_dim(
    ideal: &MonomialIdeal,
    i: usize,
    a: &[i32],
    field: FieldSpec,
) -> Result<usize> {
    check_len(ideal.n(), a)?;
    let base = complex_of_ideal(ideal)?;
    let g = negative_support(a);
    let rho = ideal.rho();
    if !base.is_face(g) || a.iter().zip(&rho).any(|(&x, &r)| i64::from(x) > i64::from(r) - 1) {
        return Ok(0);
    }
    let degree = i as isize - g.len() as isize - 1;
    let delta = delta_a(ideal, a)?;
    Ok(reduced_homology(&delta, field).get(degree))
}

/// A degree where local cohomology first appears.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DepthWitness {
    /// Cohomological degree `i` with `H^i_m(S/I)_a ≠ 0`.
    pub degree: usize,
    pub a: Vec<i32>,
    /// Degree of the nonvanishing reduced homology of `Δ_a`.
    pub homology_degree: isize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DepthReport {
    pub field: FieldSpec,
    pub depth: usize,
    pub dim: usize,
    pub is_cm: bool,
    /// The least `(i, a)` with `H^i_m(S/I)_a ≠ 0`.
    pub witness: DepthWitness,
    /// Degree vectors visited.
    pub scanned: u64,
}

/// Number of degree vectors in the scan: for each face `G`, the box
/// `∏_{j ∉ G} {0, ..., ρ_j - 1}`.
pub fn search_space_size(ideal: &MonomialIdeal) -> Result<u128> {
    let base = complex_of_ideal(ideal)?;
    let rho = ideal.rho();
    Ok(base
        .faces()
        .iter()
        .map(|g| {
            (1..=ideal.n())
                .filter(|j| !g.contains(*j))
                .map(|j| u128::from(rho[j - 1]))
                .product::<u128>()
        })
        .sum())
}

/// Every `a` with `a_j = -1` on `g` and `0 ≤ a_j < ρ_j` elsewhere, in
/// lexicographic order.
fn degree_box(n: usize, g: VertexSet, rho: &[u32]) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::with_capacity(n)];
    for j in 1..=n {
        let range: Vec<i32> = if g.contains(j) {
            vec![-1]
        } else {
            (0..rho[j - 1] as i32).collect()
        };
        out = out
            .into_iter()
            .flat_map(|prefix| {
                range.iter().map(move |&x| {
                    let mut next = prefix.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out
}

/// Least `(i, a)` with nonzero local cohomology among degrees whose negative
/// part is exactly `g`, plus the number of vectors visited.
fn scan_face(
    base: &SimplicialComplex,
    gens: &[Vec<u32>],
    rho: &[u32],
    g: VertexSet,
    field: FieldSpec,
) -> (Option<DepthWitness>, u64) {
    let n = rho.len();
    let mut cache: HashMap<Vec<VertexSet>, Option<isize>> = HashMap::new();
    let mut best: Option<DepthWitness> = None;
    let vectors = degree_box(n, g, rho);
    let scanned = vectors.len() as u64;
    for a in vectors {
        let Some(facets) = delta_a_facets(base, gens, &a, g) else {
            continue;
        };
        let lowest = *cache.entry(facets).or_insert_with_key(|facets| {
            let delta = SimplicialComplex::with_ghosts(n, facets.clone()).expect("subcomplex");
            reduced_homology(&delta, field).first_nonzero()
        });
        if let Some(h) = lowest {
            let degree = (h + g.len() as isize + 1) as usize;
            let better = best
                .as_ref()
                .is_none_or(|w| (degree, &a) < (w.degree, &w.a));
            if better {
                best = Some(DepthWitness {
                    degree,
                    a,
                    homology_degree: h,
                });
            }
        }
    }
    (best, scanned)
}

/// `depth S/I` by scanning Takayama's formula over all degree vectors whose
/// negative part is a face `G` of `Δ(I)` (entries `-1`) and whose other
/// entries lie in `0..ρ_j`. Fails up front when that set exceeds `budget`.
pub fn depth_via_takayama(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    budget: u64,
) -> Result<DepthReport> {
    let base = complex_of_ideal(ideal)?;
    let needed = search_space_size(ideal)?;
    if needed > u128::from(budget) {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let gens: Vec<Vec<u32>> = ideal.gens().iter().map(|g| g.exponents().to_vec()).collect();
    let rho = ideal.rho();
    let dim = base.krull_dim();
    let mut best: Option<DepthWitness> = None;
    let mut scanned = 0;
    // A face G only reaches degrees i ≥ |G|, so larger faces stop mattering
    // once a witness of lower degree is known.
    for (size, faces) in base.faces_by_dim().iter().enumerate() {
        if best.as_ref().is_some_and(|w| w.degree < size) {
            break;
        }
        let results: Vec<(Option<DepthWitness>, u64)> = faces
            .par_iter()
            .map(|&g| scan_face(&base, &gens, &rho, g, field))
            .collect();
        for (w, count) in results {
            scanned += count;
            if let Some(w) = w {
                if best
                    .as_ref()
                    .is_none_or(|b| (w.degree, &w.a) < (b.degree, &b.a))
                {
                    best = Some(w);
                }
            }
        }
    }
    let witness = best.expect("top local cohomology never vanishes");
    Ok(DepthReport {
        field,
        depth: witness.degree,
        dim,
        is_cm: witness.degree == dim,
        witness,
        scanned,
    })
}

/// Depth report for `S/I_Δ^2`.
pub fn is_cm_square(complex: &SimplicialComplex, field: FieldSpec, budget: u64) -> Result<DepthReport> {
    depth_via_takayama(&stanley_reisner(complex).power(2), field, budget)
}

/// Depth report for `S/I_Δ^(2)`.
pub fn is_cm_symbolic_square(
    complex: &SimplicialComplex,
    field: FieldSpec,
    budget: u64,
) -> Result<DepthReport> {
    depth_via_takayama(&symbolic_power(complex, 2)?, field, budget)
}

/// Splits `I_Δ` into pieces on pairwise disjoint variable sets, so that
/// `Δ` is the join of the returned complexes with a simplex on the unused
/// variables. Each piece comes with its original vertex labels.
pub fn join_factors(complex: &SimplicialComplex) -> Vec<(Vec<usize>, SimplicialComplex)> {
    let ideal = stanley_reisner(complex);
    let mut blocks: Vec<VertexSet> = Vec::new();
    for s in ideal.supports() {
        let (touching, rest): (Vec<VertexSet>, Vec<VertexSet>) =
            blocks.into_iter().partition(|b| !b.is_disjoint(s));
        let merged = touching.into_iter().fold(s, VertexSet::union);
        blocks = rest;
        blocks.push(merged);
    }
    blocks.sort();
    blocks
        .into_iter()
        .map(|block| {
            let labels = block.to_vec();
            let gens: Vec<VertexSet> = ideal
                .supports()
                .into_iter()
                .filter(|s| s.is_subset(block))
                .map(|s| {
                    s.iter()
                        .map(|v| labels.binary_search(&v).expect("inside block") + 1)
                        .collect()
                })
                .collect();
            let piece = MonomialIdeal::from_sets(labels.len(), &gens);
            let factor = complex_of_ideal(&piece).expect("proper ideal");
            (labels, factor)
        })
        .collect()
}

/// How a Cohen–Macaulay verdict for `S/I_Δ^2` was reached.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum SquareVerdict {
    Direct { report: DepthReport },
    /// Verdict assembled from the join factors of `Δ`.
    Factors { factors: Vec<FactorVerdict> },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FactorVerdict {
    pub vertices: Vec<usize>,
    pub report: DepthReport,
}

impl SquareVerdict {
    pub fn is_cm(&self) -> bool {
        match self {
            SquareVerdict::Direct { report } => report.is_cm,
            SquareVerdict::Factors { factors } => factors.iter().all(|f| f.report.is_cm),
        }
    }
}

/// CM-ness of `S/I_Δ^2`, by direct scan when the budget allows and
/// otherwise factor by factor over the join decomposition of `Δ`: the
/// square of a join is Cohen–Macaulay iff the square of every factor is.
pub fn cm_square_with_fallback(
    complex: &SimplicialComplex,
    field: FieldSpec,
    budget: u64,
) -> Result<SquareVerdict> {
    match is_cm_square(complex, field, budget) {
        Ok(report) => Ok(SquareVerdict::Direct { report }),
        Err(Error::BudgetExceeded { .. }) => cm_square_by_factors(complex, field, budget),
        Err(e) => Err(e),
    }
}

/// The factor-wise half of [`cm_square_with_fallback`]. Fails when `Δ` has
/// a single factor, since that is no smaller than the direct scan.
pub fn cm_square_by_factors(
    complex: &SimplicialComplex,
    field: FieldSpec,
    budget: u64,
) -> Result<SquareVerdict> {
    let factors = join_factors(complex);
    if factors.len() < 2 {
        return Err(Error::BudgetExceeded {
            needed: search_space_size(&stanley_reisner(complex).power(2))?,
            budget,
        });
    }
    let factors = factors
        .into_iter()
        .map(|(vertices, factor)| {
            Ok(FactorVerdict {
                vertices,
                report: is_cm_square(&factor, field, budget)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SquareVerdict::Factors { factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::named;
    use crate::homology::is_cohen_macaulay;
    use crate::ideal::Monomial;
    use proptest::prelude::*;

    /// `Δ_a(I)` straight from the definition, face by face.
    fn brute_delta_a(ideal: &MonomialIdeal, a: &[i32]) -> SimplicialComplex {
        let base = complex_of_ideal(ideal).unwrap();
        let g = negative_support(a);
        let faces: Vec<VertexSet> = base
            .faces()
            .into_iter()
            .filter(|f| f.is_disjoint(g))
            .filter(|f| {
                ideal.gens().iter().all(|b| {
                    (1..=ideal.n()).any(|i| {
                        !f.contains(i) && !g.contains(i) && i64::from(b.exponent(i)) > i64::from(a[i - 1])
                    })
                })
            })
            .collect();
        if faces.is_empty() {
            SimplicialComplex::void(ideal.n())
        } else {
            SimplicialComplex::with_ghosts(ideal.n(), faces).unwrap()
        }
    }

    fn pentagon() -> SimplicialComplex {
        named::cycle(5).unwrap()
    }

    #[test]
    fn zero_degree_recovers_complex() {
        let c = pentagon();
        let i = stanley_reisner(&c);
        assert_eq!(delta_a(&i, &[0; 5]).unwrap(), c);
        let sq = i.power(2);
        assert_eq!(delta_a(&sq, &[0; 5]).unwrap(), c);
        assert_eq!(delta_a(&sq, &[1, 0, 0, 0, 0]).unwrap(), c);
    }

    #[test]
    fn symbolic_examples() {
        let c = pentagon();
        let d = delta_a_symbolic(&c, &[1, 1, 0, 0, 0], 2).unwrap();
        assert_eq!(d.facet_lists(), vec![vec![1, 2], vec![1, 5], vec![2, 3]]);
        assert_eq!(delta_a_symbolic(&c, &[0; 5], 1).unwrap(), c);
        assert_eq!(delta_a_symbolic(&c, &[0, -1, 0, 0, 0], 1), Err(Error::NegativeDegree(2)));
        // a = e_r + e_s keeps the facets through r or s.
        let rp2 = named::rp2();
        let d = delta_a_symbolic(&rp2, &[1, 0, 0, 1, 0, 0], 2).unwrap();
        assert!(d.facets().iter().all(|f| f.contains(1) || f.contains(4)));
        assert_eq!(d.facets().len(), 8);
    }

    #[test]
    fn depth_examples() {
        let tri = MonomialIdeal::from_supports(3, &[[1, 2], [2, 3], [1, 3]]).unwrap();
        let r = depth_via_takayama(&tri, FieldSpec::Rationals, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.depth, r.dim, r.is_cm), (1, 1, true));

        let sq = is_cm_square(&pentagon(), FieldSpec::Rationals, DEFAULT_BUDGET).unwrap();
        assert_eq!((sq.depth, sq.dim, sq.is_cm), (2, 2, true));

        let two_edges = SimplicialComplex::new(4, &[[1, 2], [3, 4]]).unwrap();
        let r = depth_via_takayama(&stanley_reisner(&two_edges), FieldSpec::F2, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.depth, r.dim), (1, 2));
        assert_eq!(r.witness.homology_degree, 0);

        let zero = MonomialIdeal::zero(3);
        assert_eq!(depth_via_takayama(&zero, FieldSpec::Rationals, 10).unwrap().depth, 3);
        assert_eq!(
            depth_via_takayama(&MonomialIdeal::unit(2), FieldSpec::Rationals, 10),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn local_cohomology_pieces() {
        let rp2 = named::rp2();
        let i = stanley_reisner(&rp2);
        assert_eq!(local_cohomology_dim(&i, 2, &[0; 6], FieldSpec::F2).unwrap(), 1);
        assert_eq!(local_cohomology_dim(&i, 2, &[0; 6], FieldSpec::Rationals).unwrap(), 0);
        assert_eq!(local_cohomology_dim(&i, 3, &[0; 6], FieldSpec::F2).unwrap(), 1);
        assert_eq!(local_cohomology_dim(&i, 3, &[0; 6], FieldSpec::Rationals).unwrap(), 0);
        // Outside the box a_j ≤ ρ_j - 1 every piece vanishes.
        assert_eq!(local_cohomology_dim(&i, 3, &[1, 0, 0, 0, 0, 0], FieldSpec::Rationals).unwrap(), 0);
    }

    #[test]
    fn budget_is_checked_up_front() {
        let i = stanley_reisner(&named::rp2()).power(2);
        let needed = search_space_size(&i).unwrap();
        match depth_via_takayama(&i, FieldSpec::Rationals, 10) {
            Err(Error::BudgetExceeded { needed: got, budget: 10 }) => assert_eq!(got, needed),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn join_factors_of_two_pentagons() {
        let c = named::NamedComplex::DisjointPentagons(2).build().unwrap();
        let factors = join_factors(&c);
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].0, vec![1, 2, 3, 4, 5]);
        assert_eq!(factors[1].0, vec![6, 7, 8, 9, 10]);
        for (_, f) in &factors {
            assert_eq!(f.facets().len(), 5);
            assert_eq!(stanley_reisner(f).gens().len(), 5);
        }
        assert_eq!(join_factors(&pentagon()).len(), 1);
    }

    #[test]
    fn fallback_on_small_budget() {
        let c = SimplicialComplex::new(4, &[[1, 3], [1, 4], [2, 3], [2, 4]]).unwrap();
        let whole = search_space_size(&stanley_reisner(&c).power(2)).unwrap();
        let budget = join_factors(&c)
            .iter()
            .map(|(_, f)| search_space_size(&stanley_reisner(f).power(2)).unwrap())
            .max()
            .unwrap();
        assert!(whole > budget);
        let v = cm_square_with_fallback(&c, FieldSpec::Rationals, budget as u64).unwrap();
        assert!(matches!(v, SquareVerdict::Factors { .. }));
        let direct = cm_square_with_fallback(&c, FieldSpec::Rationals, DEFAULT_BUDGET).unwrap();
        assert!(matches!(direct, SquareVerdict::Direct { .. }));
        assert_eq!(v.is_cm(), direct.is_cm());
        assert!(matches!(
            cm_square_with_fallback(&pentagon(), FieldSpec::Rationals, 1),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (2usize..=4).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0u32..=2, n), 1..4).prop_map(move |gens| {
                let gens: Vec<Monomial> = gens.into_iter().map(Monomial::new).collect();
                MonomialIdeal::new(n, gens).unwrap()
            })
        })
        .prop_filter("proper", |i| !i.is_unit())
    }

    fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
        (2usize..=max_n).prop_flat_map(|n| {
            prop::collection::vec(1u64..(1u64 << n), 1..6).prop_map(move |raw| {
                let faces = raw.into_iter().map(VertexSet::from_bits).collect();
                SimplicialComplex::with_ghosts(n, faces).unwrap().compact().complex
            })
        })
    }

    proptest! {
        #[test]
        fn delta_a_matches_definition(
            i in arb_ideal(),
            raw in prop::collection::vec(-2i32..=2, 4),
        ) {
            let a = &raw[..i.n()];
            prop_assert_eq!(delta_a(&i, a).unwrap(), brute_delta_a(&i, a));
        }

        #[test]
        fn symbolic_shortcut_agrees(
            c in arb_complex(6),
            l in 1u32..=3,
            raw in prop::collection::vec(0i32..=4, 6),
        ) {
            let a = &raw[..c.n()];
            let sym = symbolic_power(&c, l).unwrap();
            let general = delta_a(&sym, a).unwrap();
            let short = delta_a_symbolic(&c, a, l).unwrap();
            prop_assert_eq!(&general, &short);
            let capped: Vec<i32> = a.iter().map(|&x| x.min(l as i32)).collect();
            prop_assert_eq!(delta_a_symbolic(&c, &capped, l).unwrap(), short);
        }

        #[test]
        fn squarefree_depth_matches_reisner(c in arb_complex(6)) {
            let i = stanley_reisner(&c);
            for field in [FieldSpec::Rationals, FieldSpec::F2] {
                let r = depth_via_takayama(&i, field, DEFAULT_BUDGET).unwrap();
                prop_assert_eq!(r.is_cm, is_cohen_macaulay(&c, field).holds);
                prop_assert_eq!(r.dim, c.krull_dim());
            }
        }

        #[test]
        fn witness_piece_is_nonzero(i in arb_ideal()) {
            let r = depth_via_takayama(&i, FieldSpec::Rationals, DEFAULT_BUDGET).unwrap();
            let w = &r.witness;
            prop_assert!(local_cohomology_dim(&i, w.degree, &w.a, FieldSpec::Rationals).unwrap() > 0);
            prop_assert!(r.depth <= r.dim);
        }
    }
}
