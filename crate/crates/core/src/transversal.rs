//! Minimal transversals (minimal vertex covers) of a family of vertex sets.
//!
//! Both directions of the Stanley-Reisner correspondence reduce to this:
//! minimal non-faces are the minimal transversals of the facet complements,
//! and facets are the complements of the minimal transversals of the
//! generator supports.

use crate::complex::VertexSet;

/// Keeps only the inclusion-minimal sets, sorted and deduplicated.
pub fn minimalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Keeps only the inclusion-maximal sets, sorted and deduplicated.
pub fn maximalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (std::cmp::Reverse(s.len()), *s));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// All inclusion-minimal sets meeting every member of `edges` (Berge's
/// incremental algorithm). An empty edge admits no transversal; an empty
/// family is covered by the empty set.
pub fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    if edges.iter().any(|e| e.is_empty()) {
        return Vec::new();
    }
    // Minimal transversals only depend on the minimal edges.
    let edges = minimalize(edges.to_vec());
    let mut covers = vec![VertexSet::EMPTY];
    for edge in edges {
        let mut next = Vec::with_capacity(covers.len());
        for &c in &covers {
            if !c.is_disjoint(edge) {
                next.push(c);
            } else {
                next.extend(edge.iter().map(|v| c.with(v)));
            }
        }
        covers = minimalize(next);
    }
    covers
}
