//! Reduced simplicial homology over `ℚ` and `𝔽_p`, and the homological
//! tests for Cohen–Macaulay and Gorenstein complexes.

mod field;
mod linalg;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

pub use field::FieldSpec;
pub use linalg::SparseMatrix;

/// `dim_K H̃_i(Δ; K)` for `i = -1, ..., dim Δ`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HomologyProfile {
    pub field: FieldSpec,
    pub betti: BTreeMap<isize, usize>,
}

impl HomologyProfile {
    pub fn get(&self, i: isize) -> usize {
        self.betti.get(&i).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.values().all(|&b| b == 0)
    }

    /// Lowest degree with nonzero homology.
    pub fn first_nonzero(&self) -> Option<isize> {
        self.betti.iter().find(|(_, &b)| b != 0).map(|(&i, _)| i)
    }

    /// `Σ (-1)^i dim H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .map(|(&i, &b)| if i.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// The matrix of `∂_i : C_i → C_{i-1}`; rows are `(i-1)`-faces and columns
/// `i`-faces, both sorted. `∂_0` is the augmentation onto `C_{-1} = K·∅`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundaryMatrix {
    pub row_faces: Vec<VertexSet>,
    pub col_faces: Vec<VertexSet>,
    pub entries: Vec<Vec<i64>>,
}

/// Rows are the faces in `upper`, columns the faces in `lower`, one nonzero
/// `(-1)^j` per deleted vertex `v_j`. This is the transpose of `∂`.
fn coboundary(upper: &[VertexSet], lower: &[VertexSet]) -> SparseMatrix {
    let index: HashMap<VertexSet, usize> =
        lower.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let rows = upper
        .iter()
        .map(|f| {
            f.iter()
                .enumerate()
                .map(|(j, v)| {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    (index[&f.without(v)], sign)
                })
                .collect()
        })
        .collect();
    SparseMatrix {
        rows,
        ncols: lower.len(),
    }
}

pub fn boundary_matrix(complex: &SimplicialComplex, i: isize) -> Result<BoundaryMatrix> {
    let dim = complex.dim();
    if complex.is_void() || i < -1 || i > dim {
        return Err(Error::InvalidParameter(format!(
            "boundary degree {i} outside -1..={dim}"
        )));
    }
    let by_dim = complex.faces_by_dim();
    let col_faces = by_dim[(i + 1) as usize].clone();
    let row_faces = if i == -1 {
        Vec::new()
    } else {
        by_dim[i as usize].clone()
    };
    let transposed = coboundary(&col_faces, &row_faces).to_dense();
    let entries = (0..row_faces.len())
        .map(|r| transposed.iter().map(|col| col[r]).collect())
        .collect();
    Ok(BoundaryMatrix {
        row_faces,
        col_faces,
        entries,
    })
}

/// Reduced homology of `Δ` with coefficients in `field`. The void complex has
/// no chains at all, so every group vanishes; `{∅}` has `H̃_{-1} = K`.
pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    let mut betti = BTreeMap::new();
    if complex.is_void() {
        betti.insert(-1, 0);
        return HomologyProfile { field, betti };
    }
    let by_dim = complex.faces_by_dim();
    // ranks[k] = rank of ∂ from size-k faces to size-(k-1) faces.
    let mut ranks = vec![0usize; by_dim.len() + 1];
    for k in 1..by_dim.len() {
        ranks[k] = coboundary(&by_dim[k], &by_dim[k - 1]).rank(field);
    }
    for (k, faces) in by_dim.iter().enumerate() {
        let b = faces.len() - ranks[k] - ranks[k + 1];
        betti.insert(k as isize - 1, b);
    }
    HomologyProfile { field, betti }
}

/// A face whose link has the wrong homology.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LinkFailure {
    pub face: VertexSet,
    pub link_dim: isize,
    /// Homological degree where the link misbehaves.
    pub degree: isize,
    pub found: usize,
    pub expected: usize,
}

/// Verdict of the Cohen–Macaulay test with the first failing face.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CmReport {
    pub field: FieldSpec,
    pub holds: bool,
    pub failure: Option<LinkFailure>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GorensteinReport {
    pub field: FieldSpec,
    pub holds: bool,
    /// Vertices of `core Δ`, in the labels of `Δ`.
    pub core_vertices: Vec<usize>,
    pub core_dim: isize,
    /// `χ̃(core Δ)`, which equals `(-1)^{dim core Δ}` whenever `Δ` is Gorenstein.
    pub core_euler: i64,
    pub euler_sign_ok: bool,
    pub failure: Option<LinkFailure>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LocalGorensteinReport {
    pub field: FieldSpec,
    pub holds: bool,
    /// First vertex whose link is not Gorenstein.
    pub failing_vertex: Option<usize>,
}

/// Runs `check` on the link of every face in order and returns the first
/// failure.
fn first_link_failure<F>(complex: &SimplicialComplex, check: F) -> Option<LinkFailure>
where
    F: Fn(VertexSet, &SimplicialComplex) -> Option<LinkFailure> + Sync,
{
    complex.faces().par_iter().find_map_first(|&face| {
        let link = complex.link(face).expect("face of the complex");
        check(face, &link.complex)
    })
}

/// Reisner's criterion: `H̃_i(lk F; K) = 0` for all faces `F` (including `∅`)
/// and all `i < dim lk F`.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec) -> CmReport {
    let failure = first_link_failure(complex, |face, link| {
        let h = reduced_homology(link, field);
        let d = link.dim();
        h.betti
            .iter()
            .find(|(&i, &b)| i < d && b != 0)
            .map(|(&i, &b)| LinkFailure {
                face,
                link_dim: d,
                degree: i,
                found: b,
                expected: 0,
            })
    });
    CmReport {
        field,
        holds: failure.is_none(),
        failure,
    }
}

/// Stanley's criterion on `Γ = core Δ`: every link `lk_Γ F` (including
/// `F = ∅`) has `H̃_i = 0` below its dimension and `H̃_top ≅ K`.
pub fn is_gorenstein(complex: &SimplicialComplex, field: FieldSpec) -> GorensteinReport {
    let core = complex.core();
    let gamma = &core.complex;
    let failure = first_link_failure(gamma, |face, link| {
        let h = reduced_homology(link, field);
        let d = link.dim();
        (-1..=d).find_map(|i| {
            let expected = usize::from(i == d);
            let found = h.get(i);
            (found != expected).then(|| LinkFailure {
                face: face.iter().map(|v| core.labels[v - 1]).collect(),
                link_dim: d,
                degree: i,
                found,
                expected,
            })
        })
    });
    let core_dim = gamma.dim();
    let core_euler = gamma.reduced_euler_characteristic();
    let sign = if core_dim.rem_euclid(2) == 0 { 1 } else { -1 };
    GorensteinReport {
        field,
        holds: failure.is_none() && !gamma.is_void(),
        core_vertices: core.labels.clone(),
        core_dim,
        core_euler,
        euler_sign_ok: core_euler == sign,
        failure,
    }
}

/// Every vertex link is Gorenstein.
pub fn is_locally_gorenstein(complex: &SimplicialComplex, field: FieldSpec) -> LocalGorensteinReport {
    let vertices = complex.vertex_set().to_vec();
    let failing_vertex = vertices.par_iter().copied().find_first(|&x| {
        let link = complex.link(VertexSet::singleton(x)).expect("vertex");
        !is_gorenstein(&link.complex, field).holds
    });
    LocalGorensteinReport {
        field,
        holds: failing_vertex.is_none(),
        failing_vertex,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::named;
    use proptest::prelude::*;

    const FIELDS: [FieldSpec; 3] = [FieldSpec::Rationals, FieldSpec::F2, FieldSpec::Prime(3)];

    fn betti(c: &SimplicialComplex, field: FieldSpec) -> Vec<(isize, usize)> {
        reduced_homology(c, field)
            .betti
            .into_iter()
            .filter(|&(_, b)| b != 0)
            .collect()
    }

    #[test]
    fn spheres_and_circles() {
        for field in FIELDS {
            assert_eq!(betti(&named::cycle(5).unwrap(), field), vec![(1, 1)]);
            for d in 1..=4 {
                let c = named::cross_polytope(d).unwrap();
                assert_eq!(betti(&c, field), vec![(d as isize - 1, 1)], "d = {d}");
            }
            assert!(betti(&SimplicialComplex::simplex(4).unwrap(), field).is_empty());
            assert_eq!(betti(&SimplicialComplex::empty_face(), field), vec![(-1, 1)]);
            assert!(betti(&SimplicialComplex::void(3), field).is_empty());
        }
    }

    #[test]
    fn rp2_depends_on_characteristic() {
        let rp2 = named::rp2();
        assert!(betti(&rp2, FieldSpec::Rationals).is_empty());
        assert!(betti(&rp2, FieldSpec::Prime(3)).is_empty());
        assert_eq!(betti(&rp2, FieldSpec::F2), vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn boundary_examples() {
        let c5 = named::cycle(5).unwrap();
        let d1 = boundary_matrix(&c5, 1).unwrap();
        assert_eq!((d1.entries.len(), d1.entries[0].len()), (5, 5));
        let sparse = SparseMatrix {
            ncols: 5,
            rows: d1
                .entries
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect())
                .collect(),
        };
        assert_eq!(sparse.rank(FieldSpec::Rationals), 4);
        let edge = SimplicialComplex::new(2, &[[1, 2]]).unwrap();
        let d = boundary_matrix(&edge, 1).unwrap();
        assert_eq!(d.entries, vec![vec![-1], vec![1]]);
        assert_eq!(boundary_matrix(&edge, 0).unwrap().entries, vec![vec![1, 1]]);
        assert_eq!(boundary_matrix(&edge, -1).unwrap().col_faces, vec![VertexSet::EMPTY]);
        assert!(boundary_matrix(&edge, 2).is_err());
    }

    #[test]
    fn cohen_macaulay_examples() {
        let rp2 = named::rp2();
        assert!(is_cohen_macaulay(&rp2, FieldSpec::Rationals).holds);
        let f2 = is_cohen_macaulay(&rp2, FieldSpec::F2);
        assert!(!f2.holds);
        let fail = f2.failure.unwrap();
        assert_eq!((fail.face, fail.degree), (VertexSet::EMPTY, 1));
        for field in FIELDS {
            assert!(is_cohen_macaulay(&named::four_path(), field).holds);
            assert!(is_cohen_macaulay(&named::cycle(5).unwrap().cone().unwrap(), field).holds);
            let two_edges = SimplicialComplex::new(4, &[[1, 2], [3, 4]]).unwrap();
            let r = is_cohen_macaulay(&two_edges, field);
            assert!(!r.holds);
            assert_eq!(r.failure.unwrap().degree, 0);
        }
    }

    #[test]
    fn gorenstein_examples() {
        for field in [FieldSpec::Rationals, FieldSpec::F2] {
            let pentagon = is_gorenstein(&named::cycle(5).unwrap(), field);
            assert!(pentagon.holds && pentagon.euler_sign_ok);
            assert!(!is_gorenstein(&named::four_path(), field).holds);
            assert!(!is_gorenstein(&named::rp2(), field).holds);
            assert!(is_gorenstein(&SimplicialComplex::simplex(3).unwrap(), field).holds);
            assert!(is_gorenstein(&named::cycle(5).unwrap().cone().unwrap(), field).holds);
            for d in 2..=3 {
                assert!(is_gorenstein(&named::cross_polytope_stellar(d).unwrap(), field).holds);
            }
            assert!(is_locally_gorenstein(&named::rp2(), field).holds);
            assert!(is_locally_gorenstein(&named::four_path(), field).holds);
            assert!(is_locally_gorenstein(&named::cycle(5).unwrap(), field).holds);
        }
        let core = is_gorenstein(&named::cycle(5).unwrap().cone().unwrap(), FieldSpec::Rationals);
        assert_eq!(core.core_vertices, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn profile_json() {
        let h = reduced_homology(&named::cycle(4).unwrap(), FieldSpec::F2);
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            r#"{"field":"F2","betti":{"-1":0,"0":0,"1":1}}"#
        );
    }

    fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
        (1usize..=7).prop_flat_map(|n| {
            prop::collection::vec(1u64..(1u64 << n), 1..7).prop_map(move |raw| {
                let faces = raw.into_iter().map(VertexSet::from_bits).collect();
                SimplicialComplex::with_ghosts(n, faces).unwrap().compact().complex
            })
        })
    }

    fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        a.iter()
            .map(|row| {
                (0..b.first().map_or(0, Vec::len))
                    .map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum())
                    .collect()
            })
            .collect()
    }

    proptest! {
        #[test]
        fn euler_identity(c in arb_complex()) {
            for field in FIELDS {
                prop_assert_eq!(
                    reduced_homology(&c, field).euler_characteristic(),
                    c.reduced_euler_characteristic()
                );
            }
        }

        #[test]
        fn boundary_squares_to_zero(c in arb_complex()) {
            for i in 0..=c.dim() {
                let lower = boundary_matrix(&c, i - 1).unwrap();
                let upper = boundary_matrix(&c, i).unwrap();
                let prod = mat_mul(&lower.entries, &upper.entries);
                prop_assert!(prod.iter().flatten().all(|&x| x == 0));
            }
        }

        #[test]
        fn rational_bounded_by_finite_fields(c in arb_complex()) {
            let q = reduced_homology(&c, FieldSpec::Rationals);
            for field in [FieldSpec::F2, FieldSpec::Prime(3)] {
                let p = reduced_homology(&c, field);
                for (&i, &b) in &q.betti {
                    prop_assert!(b <= p.get(i));
                }
            }
        }

        #[test]
        fn cm_is_cone_invariant(c in arb_complex()) {
            let cone = c.cone().unwrap();
            for field in [FieldSpec::Rationals, FieldSpec::F2] {
                prop_assert_eq!(is_cohen_macaulay(&c, field).holds, is_cohen_macaulay(&cone, field).holds);
                prop_assert_eq!(is_gorenstein(&c, field).holds, is_gorenstein(&cone, field).holds);
            }
        }

        #[test]
        fn gorenstein_implies_cm_core(c in arb_complex()) {
            for field in [FieldSpec::Rationals, FieldSpec::F2] {
                let g = is_gorenstein(&c, field);
                if g.holds {
                    prop_assert!(is_cohen_macaulay(&c.core().complex, field).holds);
                    prop_assert!(g.euler_sign_ok);
                }
            }
        }
    }
}
