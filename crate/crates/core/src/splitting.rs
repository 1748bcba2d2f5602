//! Spanning-tree collapse and wedge decompositions.
//!
//! A connected one-vertex complex `X` is homotopy equivalent to a wedge of
//! circles and link-connected complexes. With `I` the components of the
//! link of the vertex and `J` the components of `X` minus the vertex, the
//! wedge has one link-connected piece per element of `J` and `|I| - |J|`
//! circles. The piece for `j` has a vertex for every link component
//! mapping to `j`, the edges of `j` attached at the link components
//! through which their ends approach the vertex, and the faces on those
//! edges.
//!
//! For polygon quotients `J` is read off the faces: two edges lie in the
//! same component of `X` minus the vertex iff a chain of faces joins them.
//!
//! A face with an empty attaching path (produced when a spanning-tree
//! collapse swallows a whole face boundary) is a sphere wedged on at the
//! vertex. It counts as one link component and one component of `J`, and
//! contributes the piece `[aA]`.

use serde::Serialize;

use crate::complex::{
    describe, description_complex, standard_complex, CombinatorialDescription, Presentation, Step, TwoComplex,
};
use crate::error::{Error, Result};
use crate::links::{is_link_connected, vertex_link, End};
use crate::snf::invariant_factors;
use crate::unionfind::DisjointSet;
use crate::words::{parse_word, Word};

/// Collapses a breadth-first spanning tree (from vertex 0, edges in index
/// order) to a point. Returns the presentation read off the result and its
/// standard complex.
pub fn collapse_spanning_tree(x: &TwoComplex) -> Result<(Presentation, TwoComplex)> {
    let (_, components) = x.vertex_components();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    let mut in_tree = vec![false; x.edges().len()];
    let mut seen = vec![false; x.vertex_count()];
    let mut queue = std::collections::VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for (i, e) in x.edges().iter().enumerate() {
            let other = if e.tail == v {
                e.head
            } else if e.head == v {
                e.tail
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                in_tree[i] = true;
                queue.push_back(other);
            }
        }
    }
    let generators: Vec<char> =
        x.edges().iter().zip(&in_tree).filter(|(_, &t)| !t).map(|(e, _)| e.label).collect();
    let relators = (0..x.faces().len())
        .map(|f| {
            x.face_word(f)
                .letters()
                .iter()
                .copied()
                .filter(|l| generators.contains(&l.generator()))
                .collect::<Word>()
        })
        .collect();
    let p = Presentation::new(generators, relators)?;
    let standard = standard_complex(&p);
    Ok((p, standard))
}

/// Where the cells of a piece come from in the split one-vertex complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    /// Link component of the split complex behind each piece vertex.
    pub vertices: Vec<Option<usize>>,
    pub edges: Vec<Option<usize>>,
    pub faces: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub complex: TwoComplex,
    /// Present when the piece is a polygon quotient (always, for pieces
    /// produced here).
    pub description: Option<CombinatorialDescription>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeDecomposition {
    /// `|I|`.
    pub link_components: usize,
    /// `|J|`.
    pub minus_vertex_components: usize,
    pub circles: usize,
    pub pieces: Vec<Piece>,
    /// The one-vertex complex that was actually split (the input itself,
    /// or its spanning-tree collapse).
    pub source: TwoComplex,
}

impl WedgeDecomposition {
    /// Euler characteristic of the wedge: pieces and circles glued at
    /// single points.
    pub fn wedge_euler_characteristic(&self) -> i64 {
        if self.pieces.is_empty() {
            return 1 - self.circles as i64;
        }
        let sum: i64 = self.pieces.iter().map(|p| p.complex.euler_characteristic()).sum();
        sum - (self.pieces.len() as i64 + self.circles as i64 - 1)
    }
}

fn trivial_piece(x: &TwoComplex) -> Result<Piece> {
    Ok(Piece {
        complex: x.clone(),
        description: Some(describe(x)?),
        provenance: Provenance {
            vertices: (0..x.vertex_count()).map(Some).collect(),
            edges: (0..x.edges().len()).map(Some).collect(),
            faces: (0..x.faces().len()).collect(),
        },
    })
}

fn sphere_piece(face: usize) -> Piece {
    let d = CombinatorialDescription::new(vec![parse_word("aA").expect("literal")]).expect("literal");
    let complex = description_complex(&d);
    Piece {
        provenance: Provenance { vertices: vec![None; complex.vertex_count()], edges: vec![None], faces: vec![face] },
        complex,
        description: Some(d),
    }
}

/// Splits a connected complex into a wedge of circles and link-connected
/// pieces.
///
/// Link-connected inputs come back unchanged as a single piece. Other
/// multi-vertex inputs are first collapsed along a spanning tree.
pub fn wedge_split(x: &TwoComplex) -> Result<WedgeDecomposition> {
    let (_, components) = x.vertex_components();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    if x.is_polygon_quotient() && is_link_connected(x)? {
        return Ok(WedgeDecomposition {
            link_components: 1,
            minus_vertex_components: 1,
            circles: 0,
            pieces: vec![trivial_piece(x)?],
            source: x.clone(),
        });
    }
    let source = if x.vertex_count() > 1 { collapse_spanning_tree(x)?.1 } else { x.clone() };
    split_one_vertex(source)
}

fn split_one_vertex(source: TwoComplex) -> Result<WedgeDecomposition> {
    let face_ids: Vec<usize> = (0..source.faces().len()).filter(|&f| !source.faces()[f].is_empty()).collect();
    let spheres: Vec<usize> = (0..source.faces().len()).filter(|&f| source.faces()[f].is_empty()).collect();
    let mut on_face = vec![false; source.edges().len()];
    for &f in &face_ids {
        for s in &source.faces()[f] {
            on_face[s.edge] = true;
        }
    }
    if let Some(e) = on_face.iter().position(|&u| !u) {
        return Err(Error::NotPolygonQuotient(format!(
            "edge `{}` lies on no face, so it has no place in the wedge decomposition",
            source.edges()[e].label
        )));
    }

    let mut pieces = Vec::new();
    let (mut link_components, mut minus_vertex) = (0, 0);
    if !source.edges().is_empty() {
        let polygons = TwoComplex::new(
            1,
            source.edges().to_vec(),
            face_ids.iter().map(|&f| source.faces()[f].clone()).collect(),
        )?;
        let link = vertex_link(&polygons, 0)?;
        let mut edge_sets = DisjointSet::new(source.edges().len());
        for path in polygons.faces() {
            for pair in path.windows(2) {
                edge_sets.union(pair[0].edge, pair[1].edge);
            }
        }
        let (j_of_edge, j_count) = edge_sets.classes();
        let mut j_of_link = vec![usize::MAX; link.component_count];
        for (ee, &c) in link.vertices.iter().zip(&link.component_of) {
            j_of_link[c] = j_of_edge[ee.edge];
        }
        let end_component = |edge: usize, end: End| {
            let i = link.vertices.iter().position(|v| v.edge == edge && v.end == end).expect("every end is at the vertex");
            link.component_of[i]
        };
        for j in 0..j_count {
            let vertices: Vec<usize> = (0..link.component_count).filter(|&i| j_of_link[i] == j).collect();
            let local = |i: usize| vertices.binary_search(&i).expect("component belongs to j");
            let edge_ids: Vec<usize> = (0..source.edges().len()).filter(|&e| j_of_edge[e] == j).collect();
            let edges = edge_ids
                .iter()
                .map(|&e| crate::complex::Edge {
                    label: source.edges()[e].label,
                    tail: local(end_component(e, End::Tail)),
                    head: local(end_component(e, End::Head)),
                })
                .collect();
            let piece_faces: Vec<usize> =
                (0..polygons.faces().len()).filter(|&f| j_of_edge[polygons.faces()[f][0].edge] == j).collect();
            let faces = piece_faces
                .iter()
                .map(|&f| {
                    polygons.faces()[f]
                        .iter()
                        .map(|s| Step { edge: edge_ids.binary_search(&s.edge).expect("edge in j"), forward: s.forward })
                        .collect()
                })
                .collect();
            let complex = TwoComplex::new(vertices.len(), edges, faces)?;
            pieces.push(Piece {
                description: Some(describe(&complex)?),
                provenance: Provenance {
                    vertices: vertices.iter().map(|&i| Some(i)).collect(),
                    edges: edge_ids.iter().map(|&e| Some(e)).collect(),
                    faces: piece_faces.iter().map(|&f| face_ids[f]).collect(),
                },
                complex,
            });
        }
        link_components = link.component_count;
        minus_vertex = j_count;
    }
    for &f in &spheres {
        pieces.push(sphere_piece(f));
    }
    link_components += spheres.len();
    minus_vertex += spheres.len();
    Ok(WedgeDecomposition {
        link_components,
        minus_vertex_components: minus_vertex,
        circles: link_components - minus_vertex,
        pieces,
        source,
    })
}

/// Free rank and torsion coefficients of an abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub rank: usize,
    /// Invariant factors greater than one, ascending, each dividing the next.
    pub torsion: Vec<u64>,
}

impl Abelianization {
    /// `A ⊕ B ⊕ …`, renormalized to invariant factors.
    pub fn direct_sum(parts: &[Abelianization]) -> Abelianization {
        let rank = parts.iter().map(|p| p.rank).sum();
        let all: Vec<u64> = parts.iter().flat_map(|p| p.torsion.iter().copied()).collect();
        let rows: Vec<Vec<i64>> = (0..all.len())
            .map(|i| (0..all.len()).map(|j| if i == j { all[i] as i64 } else { 0 }).collect())
            .collect();
        let torsion = invariant_factors(&rows).into_iter().filter(|&d| d > 1).collect();
        Abelianization { rank, torsion }
    }
}

/// Abelian invariants of the relator exponent-sum matrix.
pub fn abelianization(p: &Presentation) -> Abelianization {
    let rows: Vec<Vec<i64>> =
        p.relators().iter().map(|r| p.generators().iter().map(|&g| r.exponent_sum(g)).collect()).collect();
    let factors = invariant_factors(&rows);
    Abelianization {
        rank: p.generators().len() - factors.len(),
        torsion: factors.into_iter().filter(|&d| d > 1).collect(),
    }
}

/// Abelianization of the fundamental group of a connected complex, via its
/// spanning-tree collapse.
pub fn complex_abelianization(x: &TwoComplex) -> Result<Abelianization> {
    Ok(abelianization(&collapse_spanning_tree(x)?.0))
}
