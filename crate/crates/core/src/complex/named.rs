//! Generators for the complexes and graphs used throughout the examples.

use std::fmt;
use std::str::FromStr;

use super::{Graph, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::transversal::minimal_transversals;

fn param(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

/// The `n`-cycle as a graph.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    param(n >= 3, format!("cycle needs n >= 3, got {n}"))?;
    let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
    Graph::new(n, &edges)
}

/// The `n`-cycle as a one-dimensional complex.
pub fn cycle(n: usize) -> Result<SimplicialComplex> {
    let g = cycle_graph(n)?;
    SimplicialComplex::from_sets(n, g.edge_sets())
}

/// The path `1 - 2 - ... - n` as a one-dimensional complex.
pub fn path(n: usize) -> Result<SimplicialComplex> {
    param(n >= 2, format!("path needs n >= 2, got {n}"))?;
    let faces: Vec<_> = (1..n).map(|i| [i, i + 1]).collect();
    SimplicialComplex::new(n, &faces)
}

/// Boundary of the cross `d`-polytope on `x_i = i`, `y_i = d + i`. Facets pick
/// one of `x_i`, `y_i` for every `i`; the Stanley-Reisner ideal is
/// `(x_1 y_1, ..., x_d y_d)`.
pub fn cross_polytope(d: usize) -> Result<SimplicialComplex> {
    param(d >= 1 && 2 * d <= 64, format!("cross polytope needs 1 <= d <= 32, got {d}"))?;
    let facets = (0u64..1 << d)
        .map(|choice| {
            (1..=d)
                .map(|i| if choice >> (i - 1) & 1 == 1 { i } else { d + i })
                .collect::<VertexSet>()
        })
        .collect();
    SimplicialComplex::from_sets(2 * d, facets)
}

/// Stellar subdivision of [`cross_polytope`] on the facet `{x_1, ..., x_d}`;
/// the new vertex is `v = 2d + 1`. For `d = 2` this is a pentagon, and
/// relabelling by [`STELLAR_SQUARE_TO_PENTAGON`] turns it into [`cycle`]`(5)`.
pub fn cross_polytope_stellar(d: usize) -> Result<SimplicialComplex> {
    param(d >= 2, format!("subdivided cross polytope needs d >= 2, got {d}"))?;
    cross_polytope(d)?.stellar_subdivision(VertexSet::full(d))
}

/// Relabelling `x1 -> 2, x2 -> 5, y1 -> 4, y2 -> 3, v -> 1` taking
/// `cross_polytope_stellar(2)` to the 5-cycle `1 - 2 - 3 - 4 - 5`.
pub const STELLAR_SQUARE_TO_PENTAGON: [usize; 5] = [2, 5, 4, 3, 1];

/// Six-vertex triangulation of the real projective plane. Its minimal
/// non-faces are the ten triples 123, 125, 136, 145, 146, 234, 246, 256,
/// 345, 356; the facets are the other ten triples.
pub fn rp2() -> SimplicialComplex {
    SimplicialComplex::new(
        6,
        &[
            [1, 2, 4],
            [1, 2, 6],
            [1, 3, 4],
            [1, 3, 5],
            [1, 5, 6],
            [2, 3, 5],
            [2, 3, 6],
            [2, 4, 5],
            [3, 4, 6],
            [4, 5, 6],
        ],
    )
    .expect("static facet list")
}

/// The one-dimensional complex with vertices `v_1..v_k = 1..k`, then
/// `w, x, y, z = k+1..k+4`: every `v_i` is joined to `w` and `z`, plus the
/// path `w - x - y - z`. For `k = 1` this is the pentagon.
pub fn phantom_pentagon(k: usize) -> Result<SimplicialComplex> {
    param(k >= 1, "phantom pentagon needs k >= 1")?;
    let (w, x, y, z) = (k + 1, k + 2, k + 3, k + 4);
    let mut faces: Vec<[usize; 2]> = vec![[w, x], [x, y], [y, z]];
    for v in 1..=k {
        faces.push([v, w]);
        faces.push([v, z]);
    }
    SimplicialComplex::new(k + 4, &faces)
}

/// The path on four vertices, with Stanley-Reisner ideal `(x1x3, x1x4, x2x4)`.
pub fn four_path() -> SimplicialComplex {
    path(4).expect("static path")
}

/// The graph on `x_1, ..., x_{3m+2}` with edges `x1x2`, then for each
/// `k = 1..m` the edges `x_{3k-1}x_{3k}, x_{3k}x_{3k+1}, x_{3k+1}x_{3k+2},
/// x_{3k+2}x_{3k-2}`, and `x_{3l-3}x_{3l}` for `l = 2..m`.
pub fn conjecture_graph(m: usize) -> Result<Graph> {
    param(m >= 1 && 3 * m + 2 <= 64, format!("conjecture graph needs 1 <= m <= 20, got {m}"))?;
    let mut edges = vec![(1, 2)];
    for k in 1..=m {
        edges.push((3 * k - 1, 3 * k));
        edges.push((3 * k, 3 * k + 1));
        edges.push((3 * k + 1, 3 * k + 2));
        edges.push((3 * k + 2, 3 * k - 2));
    }
    for l in 2..=m {
        edges.push((3 * l - 3, 3 * l));
    }
    Graph::new(3 * m + 2, &edges)
}

/// `r` disjoint copies of the 5-cycle.
pub fn disjoint_pentagons_graph(r: usize) -> Result<Graph> {
    param(r >= 1 && 5 * r <= 64, format!("disjoint pentagons need 1 <= r <= 12, got {r}"))?;
    let c5 = cycle_graph(5)?;
    let mut g = c5.clone();
    for _ in 1..r {
        g = g.disjoint_union(&c5)?;
    }
    Ok(g)
}

/// The complex `Δ(G)` with `I_{Δ(G)} = I(G)`: its faces are the independent
/// sets of `G`, so its facets are complements of minimal vertex covers.
pub fn complementary(g: &Graph) -> Result<SimplicialComplex> {
    param(g.n() >= 1, "graph needs at least one vertex")?;
    let full = VertexSet::full(g.n());
    let facets = minimal_transversals(&g.edge_sets())
        .into_iter()
        .map(|cover| full.difference(cover))
        .collect();
    SimplicialComplex::from_sets(g.n(), facets)
}

/// A named complex with its parameters, parseable from `name` or
/// `name:param` (e.g. `cycle:5`, `cross-stellar:3`, `rp2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedComplex {
    Cycle(usize),
    Path(usize),
    CrossPolytope(usize),
    CrossPolytopeStellar(usize),
    Rp2,
    PhantomPentagon(usize),
    FourPath,
    ConjectureGraph(usize),
    DisjointPentagons(usize),
}

impl NamedComplex {
    pub fn build(&self) -> Result<SimplicialComplex> {
        match *self {
            NamedComplex::Cycle(n) => cycle(n),
            NamedComplex::Path(n) => path(n),
            NamedComplex::CrossPolytope(d) => cross_polytope(d),
            NamedComplex::CrossPolytopeStellar(d) => cross_polytope_stellar(d),
            NamedComplex::Rp2 => Ok(rp2()),
            NamedComplex::PhantomPentagon(k) => phantom_pentagon(k),
            NamedComplex::FourPath => Ok(four_path()),
            NamedComplex::ConjectureGraph(m) => complementary(&conjecture_graph(m)?),
            NamedComplex::DisjointPentagons(r) => complementary(&disjoint_pentagons_graph(r)?),
        }
    }

    /// Every generator with small parameters, for test batteries.
    pub fn battery() -> Vec<NamedComplex> {
        use NamedComplex::*;
        vec![
            Cycle(4),
            Cycle(5),
            Cycle(6),
            Path(4),
            Path(6),
            CrossPolytope(2),
            CrossPolytope(3),
            CrossPolytopeStellar(2),
            CrossPolytopeStellar(3),
            Rp2,
            PhantomPentagon(1),
            PhantomPentagon(2),
            FourPath,
            ConjectureGraph(1),
            ConjectureGraph(2),
            DisjointPentagons(1),
            DisjointPentagons(2),
        ]
    }
}

impl fmt::Display for NamedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedComplex::Cycle(n) => write!(f, "cycle:{n}"),
            NamedComplex::Path(n) => write!(f, "path:{n}"),
            NamedComplex::CrossPolytope(d) => write!(f, "cross:{d}"),
            NamedComplex::CrossPolytopeStellar(d) => write!(f, "cross-stellar:{d}"),
            NamedComplex::Rp2 => write!(f, "rp2"),
            NamedComplex::PhantomPentagon(k) => write!(f, "phantom-pentagon:{k}"),
            NamedComplex::FourPath => write!(f, "four-path"),
            NamedComplex::ConjectureGraph(m) => write!(f, "conjecture-graph:{m}"),
            NamedComplex::DisjointPentagons(r) => write!(f, "disjoint-pentagons:{r}"),
        }
    }
}

impl FromStr for NamedComplex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let num = |default: Option<usize>| -> Result<usize> {
            match arg {
                Some(a) => a
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad parameter {a:?} for {name}"))),
                None => default.ok_or_else(|| Error::InvalidParameter(format!("{name} needs a parameter"))),
            }
        };
        let norm = name.to_ascii_lowercase().replace('_', "-");
        Ok(match norm.as_str() {
            "cycle" => NamedComplex::Cycle(num(None)?),
            "pentagon" => NamedComplex::Cycle(5),
            "path" => NamedComplex::Path(num(None)?),
            "cross" | "cross-polytope" => NamedComplex::CrossPolytope(num(None)?),
            "cross-stellar" | "cross-polytope-stellar" => NamedComplex::CrossPolytopeStellar(num(None)?),
            "rp2" => NamedComplex::Rp2,
            "phantom-pentagon" => NamedComplex::PhantomPentagon(num(Some(2))?),
            "four-path" => NamedComplex::FourPath,
            "conjecture-graph" => NamedComplex::ConjectureGraph(num(None)?),
            "disjoint-pentagons" => NamedComplex::DisjointPentagons(num(None)?),
            _ => return Err(Error::InvalidParameter(format!("unknown complex {s:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stellar_square_is_pentagon() {
        let c = cross_polytope_stellar(2).unwrap();
        assert_eq!(c.relabel(&STELLAR_SQUARE_TO_PENTAGON).unwrap(), cycle(5).unwrap());
    }

    #[test]
    fn invalid_params() {
        assert!(cycle(2).is_err());
        assert!(cross_polytope_stellar(1).is_err());
        assert!(conjecture_graph(0).is_err());
    }

    #[test]
    fn cross_polytope_two_is_square() {
        let c = cross_polytope(2).unwrap();
        // x1=1, x2=2, y1=3, y2=4: x1-x2-y1-y2-x1.
        let square = SimplicialComplex::new(4, &[[1, 2], [2, 3], [3, 4], [1, 4]]).unwrap();
        assert_eq!(c, square);
    }

    #[test]
    fn conjecture_graph_one_is_pentagon() {
        let g = conjecture_graph(1).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]);
        assert!(g.edges().iter().all(|&(a, b)| g.neighbours(a).len() == 2 && g.neighbours(b).len() == 2));
        assert_eq!(g.diameter(), super::super::Diameter::Finite(2));
    }

    #[test]
    fn conjecture_graph_two_edges() {
        let g = conjecture_graph(2).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(
            g.edges(),
            vec![(1, 2), (1, 5), (2, 3), (3, 4), (3, 6), (4, 5), (4, 8), (5, 6), (6, 7), (7, 8)]
        );
    }

    #[test]
    fn phantom_pentagon_shape() {
        let p1 = phantom_pentagon(1).unwrap();
        // v1 = 1, w = 2, x = 3, y = 4, z = 5 closes up to the 5-cycle.
        assert_eq!(p1, cycle(5).unwrap());
        let p2 = phantom_pentagon(2).unwrap();
        assert_eq!(p2.n(), 6);
        assert_eq!(p2.facets().len(), 7);
        assert_eq!(p2.one_skeleton().diameter(), super::super::Diameter::Finite(2));
    }

    #[test]
    fn names_parse() {
        assert_eq!("cross-stellar:3".parse::<NamedComplex>().unwrap(), NamedComplex::CrossPolytopeStellar(3));
        assert_eq!("rp2".parse::<NamedComplex>().unwrap(), NamedComplex::Rp2);
        assert!("cycle".parse::<NamedComplex>().is_err());
        for c in NamedComplex::battery() {
            assert_eq!(c.to_string().parse::<NamedComplex>().unwrap(), c);
            c.build().unwrap();
        }
    }
}
