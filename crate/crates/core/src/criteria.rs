//! Combinatorial criteria for depth, (S₂) and Cohen–Macaulay squares, and
//! the audit that cross-checks them against the homological computations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Diameter, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::{
    is_cohen_macaulay, is_gorenstein, is_locally_gorenstein, CmReport, FieldSpec,
    GorensteinReport, LocalGorensteinReport,
};
use crate::ideal::{stanley_reisner, symbolic2_equals_square, symbolic_power, Sym2Verdict};
use crate::takayama::{depth_via_takayama, DepthReport};
use crate::transversal::minimalize;

/// Default vertex bound for the exhaustive non-face triple check.
pub const CONDITION3_BOUND: usize = 9;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Depth2Report {
    pub holds: bool,
    pub diameter: Diameter,
}

/// `diam Δ^(1) ≤ 2`, which for `dim Δ ≥ 1` is equivalent to
/// `depth S/I_Δ^(2) ≥ 2`.
pub fn depth2_criterion(complex: &SimplicialComplex) -> Result<Depth2Report> {
    let dim = complex.dim();
    if dim < 1 {
        return Err(Error::DimensionTooSmall(dim));
    }
    let diameter = complex.compact().complex.one_skeleton().diameter();
    Ok(Depth2Report {
        holds: diameter.at_most(2),
        diameter,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LinkDiameterReport {
    pub holds: bool,
    /// First face (in face order) whose link of dimension at least 1 has a
    /// 1-skeleton of diameter above 2.
    pub witness: Option<VertexSet>,
    pub witness_diameter: Option<Diameter>,
}

/// `diam (lk F)^(1) ≤ 2` for every face `F` (including `∅`) whose link has
/// dimension at least 1. No purity requirement.
pub fn link_diameter_condition(complex: &SimplicialComplex) -> LinkDiameterReport {
    let found = complex.faces().par_iter().find_map_first(|&face| {
        let link = complex.link(face).expect("face").complex;
        if link.dim() < 1 {
            return None;
        }
        let d = link.one_skeleton().diameter();
        (!d.at_most(2)).then_some((face, d))
    });
    LinkDiameterReport {
        holds: found.is_none(),
        witness: found.map(|(f, _)| f),
        witness_diameter: found.map(|(_, d)| d),
    }
}

/// The link-diameter test for a pure complex, which is equivalent to Serre's
/// condition (S₂) for `S/I_Δ^(2)`.
pub fn s2_criterion(complex: &SimplicialComplex) -> Result<LinkDiameterReport> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(link_diameter_condition(complex))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Condition3Report {
    pub holds: bool,
    /// Non-faces `F_1 ≤ F_2 ≤ F_3` admitting no suitable `G_1, G_2`.
    pub witness: Option<[VertexSet; 3]>,
    pub triples_checked: u64,
}

/// For all non-faces `F_1, F_2, F_3` of `Δ`, there are non-faces `G_1, G_2`
/// with `G_1 ∪ G_2 ⊆ F_1 ∪ F_2 ∪ F_3` and `G_1 ∩ G_2 ⊆ F_1 ∩ F_2 ∩ F_3`.
///
/// Every triple of non-faces is enumerated. For the `G`'s it is enough to
/// look at minimal non-faces: shrinking `G_1, G_2` keeps both inclusions.
pub fn condition3_check(complex: &SimplicialComplex, bound: usize) -> Result<Condition3Report> {
    let n = complex.n();
    if n > bound {
        return Err(Error::BruteForceBound { n, bound });
    }
    let minimal: Vec<VertexSet> = stanley_reisner(complex).supports();
    let size = 1usize << n;
    let non_faces: Vec<VertexSet> = (0..size as u64)
        .map(VertexSet::from_bits)
        .filter(|&s| !complex.is_face(s))
        .collect();
    // meets[U] = minimal sets G_1 ∩ G_2 over minimal non-faces inside U.
    let meets: Vec<Vec<VertexSet>> = (0..size as u64)
        .into_par_iter()
        .map(|bits| {
            let u = VertexSet::from_bits(bits);
            let inside: Vec<VertexSet> =
                minimal.iter().copied().filter(|g| g.is_subset(u)).collect();
            let mut all = Vec::with_capacity(inside.len() * (inside.len() + 1) / 2);
            for (a, &g) in inside.iter().enumerate() {
                for &h in &inside[a..] {
                    all.push(g.intersection(h));
                }
            }
            minimalize(all)
        })
        .collect();
    let m = non_faces.len();
    let failure = (0..m).into_par_iter().find_map_first(|a| {
        let f1 = non_faces[a];
        for b in a..m {
            let f2 = non_faces[b];
            for &f3 in &non_faces[b..] {
                let u = f1.union(f2).union(f3);
                let meet = f1.intersection(f2).intersection(f3);
                if !meets[u.bits() as usize].iter().any(|x| x.is_subset(meet)) {
                    return Some([f1, f2, f3]);
                }
            }
        }
        None
    });
    let m = m as u64;
    Ok(Condition3Report {
        holds: failure.is_none(),
        witness: failure,
        triples_checked: m * (m + 1) * (m + 2) / 6,
    })
}

/// One implication between computed verdicts.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ImplicationCheck {
    pub name: String,
    pub violated: bool,
}

/// Every criterion for one complex, plus the implications that must hold
/// between them. Field-dependent verdicts are relative to `fields`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AuditReport {
    pub complex: SimplicialComplex,
    pub fields: Vec<FieldSpec>,
    pub cohen_macaulay: Vec<CmReport>,
    pub gorenstein: Vec<GorensteinReport>,
    pub locally_gorenstein: Vec<LocalGorensteinReport>,
    pub link_diameter: LinkDiameterReport,
    pub is_pure: bool,
    pub depth2: Option<Depth2Report>,
    /// Skipped (`None`) above the brute-force vertex bound.
    pub condition3: Option<Condition3Report>,
    pub special_triangles: Sym2Verdict,
    pub square_equals_symbolic: bool,
    pub depth: Vec<DepthReport>,
    pub depth_square: Vec<DepthReport>,
    pub depth_symbolic_square: Vec<DepthReport>,
    pub implications: Vec<ImplicationCheck>,
}

impl AuditReport {
    pub fn violations(&self) -> Vec<&ImplicationCheck> {
        self.implications.iter().filter(|c| c.violated).collect()
    }

    /// Conditions (1), (2) and (3) of the necessary conditions for a
    /// Cohen–Macaulay square, over the whole battery.
    pub fn conditions(&self) -> [bool; 3] {
        [
            self.gorenstein.iter().all(|g| g.holds),
            self.link_diameter.holds,
            self.square_equals_symbolic,
        ]
    }

    pub fn cm_square(&self) -> bool {
        self.depth_square.iter().all(|r| r.is_cm)
    }
}

pub fn paper_audit(
    complex: &SimplicialComplex,
    fields: &[FieldSpec],
    budget: u64,
    condition3_bound: usize,
) -> Result<AuditReport> {
    let ideal = stanley_reisner(complex);
    let square = ideal.power(2);
    let symbolic = symbolic_power(complex, 2)?;
    let per_field = |f: &dyn Fn(FieldSpec) -> Result<DepthReport>| -> Result<Vec<DepthReport>> {
        fields.iter().map(|&k| f(k)).collect()
    };
    let depth = per_field(&|k| depth_via_takayama(&ideal, k, budget))?;
    let depth_square = per_field(&|k| depth_via_takayama(&square, k, budget))?;
    let depth_symbolic_square = per_field(&|k| depth_via_takayama(&symbolic, k, budget))?;
    let cohen_macaulay: Vec<CmReport> = fields.iter().map(|&k| is_cohen_macaulay(complex, k)).collect();
    let gorenstein: Vec<GorensteinReport> = fields.iter().map(|&k| is_gorenstein(complex, k)).collect();
    let locally_gorenstein: Vec<LocalGorensteinReport> =
        fields.iter().map(|&k| is_locally_gorenstein(complex, k)).collect();
    let link_diameter = link_diameter_condition(complex);
    let depth2 = depth2_criterion(complex).ok();
    let condition3 = match condition3_check(complex, condition3_bound) {
        Ok(r) => Some(r),
        Err(Error::BruteForceBound { .. }) => None,
        Err(e) => return Err(e),
    };
    let special_triangles = symbolic2_equals_square(&ideal)?;
    let square_equals_symbolic = square == symbolic;

    let mut report = AuditReport {
        complex: complex.clone(),
        fields: fields.to_vec(),
        cohen_macaulay,
        gorenstein,
        locally_gorenstein,
        link_diameter,
        is_pure: complex.is_pure(),
        depth2,
        condition3,
        special_triangles,
        square_equals_symbolic,
        depth,
        depth_square,
        depth_symbolic_square,
        implications: Vec::new(),
    };
    report.implications = implications(&report);
    Ok(report)
}

fn implications(r: &AuditReport) -> Vec<ImplicationCheck> {
    let mut out = Vec::new();
    let mut check = |name: String, ok: bool| out.push(ImplicationCheck { name, violated: !ok });
    let cm_square = r.cm_square();
    let [gor, diam, equal] = r.conditions();
    check("cm_square_implies_gorenstein".into(), !cm_square || gor);
    check("cm_square_implies_link_diameter".into(), !cm_square || diam);
    check("cm_square_implies_square_equals_symbolic".into(), !cm_square || equal);
    check(
        "cm_square_implies_locally_gorenstein".into(),
        !cm_square || r.locally_gorenstein.iter().all(|g| g.holds),
    );
    for (i, &field) in r.fields.iter().enumerate() {
        let sq = r.depth_square[i].is_cm;
        let sym = r.depth_symbolic_square[i].is_cm;
        check(
            format!("cm_square_iff_cm_symbolic_and_equal[{field}]"),
            sq == (sym && equal),
        );
        check(
            format!("reisner_iff_takayama[{field}]"),
            r.cohen_macaulay[i].holds == r.depth[i].is_cm,
        );
        if let Some(d2) = &r.depth2 {
            check(
                format!("diameter_iff_symbolic_depth2[{field}]"),
                d2.holds == (r.depth_symbolic_square[i].depth >= 2),
            );
        }
        if r.gorenstein[i].holds {
            check(format!("gorenstein_euler_sign[{field}]"), r.gorenstein[i].euler_sign_ok);
        }
    }
    check(
        "special_triangles_iff_square_equals_symbolic".into(),
        r.special_triangles.equal == equal,
    );
    if let Some(c3) = &r.condition3 {
        check("condition3_iff_square_equals_symbolic".into(), c3.holds == equal);
    }
    out
}

/// A random pure complex: vertex count in `3..=n_max`, dimension at least 1,
/// relabelled onto the vertices it uses.
pub fn random_pure_complex(rng: &mut impl Rng, n_max: usize) -> SimplicialComplex {
    let n = rng.gen_range(3..=n_max.max(3));
    let d = rng.gen_range(1..=(n - 1).min(3));
    let mut all: Vec<VertexSet> = VertexSet::full(n)
        .subsets()
        .filter(|s| s.len() == d + 1)
        .collect();
    all.shuffle(rng);
    let count = rng.gen_range(1..=all.len().min(2 * n));
    all.truncate(count);
    SimplicialComplex::with_ghosts(n, all)
        .expect("in range")
        .compact()
        .complex
}

/// A random pure complex using every vertex of `{1, ..., n}`, with
/// dimension between 1 and `min(n - 1, 3)`.
pub fn random_pure_complex_on(rng: &mut impl Rng, n: usize) -> SimplicialComplex {
    let full = VertexSet::full(n);
    loop {
        let d = rng.gen_range(1..=(n - 1).min(3));
        let mut all: Vec<VertexSet> = full.subsets().filter(|s| s.len() == d + 1).collect();
        all.shuffle(rng);
        let count = rng.gen_range(1..=all.len().min(2 * n));
        all.truncate(count);
        if all.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f)) == full {
            return SimplicialComplex::from_sets(n, all).expect("uses every vertex");
        }
    }
}

/// Every pure complex on `{1, ..., n}` that uses all `n` vertices: for each
/// facet size, every nonempty family of subsets of that size covering `[n]`.
pub fn all_pure_complexes(n: usize) -> Vec<SimplicialComplex> {
    let full = VertexSet::full(n);
    let mut out = Vec::new();
    for k in 1..=n {
        let sets: Vec<VertexSet> = full.subsets().filter(|s| s.len() == k).collect();
        for mask in 1u64..(1u64 << sets.len()) {
            let family: Vec<VertexSet> = (0..sets.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| sets[i])
                .collect();
            if family.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f)) == full {
                out.push(SimplicialComplex::from_sets(n, family).expect("covers [n]"));
            }
        }
    }
    out
}

/// Audits `count` random pure complexes drawn from a seeded generator.
/// Instances whose audit fails with a budget error are skipped.
pub fn explore_random(
    seed: u64,
    count: usize,
    n_max: usize,
    fields: &[FieldSpec],
    budget: u64,
) -> Result<Vec<AuditReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let complexes: Vec<SimplicialComplex> =
        (0..count).map(|_| random_pure_complex(&mut rng, n_max)).collect();
    let reports: Vec<Result<AuditReport>> = complexes
        .par_iter()
        .map(|c| paper_audit(c, fields, budget, CONDITION3_BOUND))
        .collect();
    let mut out = Vec::with_capacity(count);
    for r in reports {
        match r {
            Ok(report) => out.push(report),
            Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
