//! Combinatorial 2-complexes and their two constructions.
//!
//! A [`Presentation`] yields a *standard* complex: one vertex, one loop per
//! generator and one face per relator. A [`CombinatorialDescription`] yields
//! a multi-vertex complex: a disjoint union of polygons whose boundary
//! edges are glued by label and orientation, with only the vertex
//! identifications those gluings force.
//!
//! Faces are closed attaching paths. A step traversed forward departs the
//! edge's tail and arrives at its head; a backward step does the reverse.
//! A relator is read along its face boundary, so a lowercase letter is a
//! forward step and an uppercase letter a backward one.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::unionfind::DisjointSet;
use crate::words::{Letter, Word};

/// `⟨S | R⟩`: an ordered generator set and a multiset of relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<char>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Every relator letter must be one of `generators`. Duplicate relators
    /// are kept; the empty relator is allowed (it attaches a sphere).
    pub fn new(generators: Vec<char>, relators: Vec<Word>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if !g.is_ascii_lowercase() {
                return Err(Error::InvalidParameter(format!("generator `{g}` is not a lowercase ASCII letter")));
            }
            if generators[..i].contains(g) {
                return Err(Error::InvalidParameter(format!("generator `{g}` listed twice")));
            }
        }
        for r in &relators {
            if let Some(l) = r.letters().iter().find(|l| !generators.contains(&l.generator())) {
                return Err(Error::UnknownLetter {
                    letter: l.as_char(),
                    context: format!("the presentation on {{{}}}", generators.iter().collect::<String>()),
                });
            }
        }
        Ok(Self { generators, relators })
    }

    pub fn generators(&self) -> &[char] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }
}

/// `[R]`: a nonempty multiset of nonempty relators. The generators are the
/// letters that occur.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialDescription {
    relators: Vec<Word>,
}

impl CombinatorialDescription {
    pub fn new(relators: Vec<Word>) -> Result<Self> {
        if relators.is_empty() {
            return Err(Error::InvalidParameter("a combinatorial description needs at least one relator".into()));
        }
        if let Some(i) = relators.iter().position(Word::is_empty) {
            return Err(Error::InvalidParameter(format!("relator {i} is empty")));
        }
        Ok(Self { relators })
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Letters occurring in the relators, in order of first occurrence.
    pub fn generators(&self) -> Vec<char> {
        let mut seen = Vec::new();
        for r in &self.relators {
            for g in r.generators() {
                if !seen.contains(&g) {
                    seen.push(g);
                }
            }
        }
        seen
    }

    /// Equality up to rotating and inverting individual relators, as
    /// multisets.
    pub fn equivalent(&self, other: &CombinatorialDescription) -> bool {
        let keys = |d: &CombinatorialDescription| {
            let mut k: Vec<Word> = d.relators.iter().map(cyclic_key).collect();
            k.sort();
            k
        };
        keys(self) == keys(other)
    }
}

impl fmt::Display for Presentation {
    /// `<a, b | aaBBB>`; ASCII so it survives any terminal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(char::to_string).collect();
        let rels: Vec<String> = self.relators.iter().map(Word::to_string).collect();
        write!(f, "<{} | {}>", gens.join(", "), rels.join(", "))
    }
}

impl fmt::Display for CombinatorialDescription {
    /// `[abcABC]`, relators separated by `, `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(Word::to_string).collect();
        write!(f, "[{}]", rels.join(", "))
    }
}

/// Lexicographically least rotation of `w` or of its inverse.
pub fn cyclic_key(w: &Word) -> Word {
    let inverse = w.inverse();
    (0..w.len().max(1))
        .flat_map(|i| [w.rotate(i), inverse.rotate(i)])
        .min()
        .unwrap_or_default()
}

/// One boundary position of a polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryEdge {
    pub label: char,
    pub positive: bool,
}

/// An `n`-gon whose boundary spells a relator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub boundary: Vec<BoundaryEdge>,
    offset: usize,
}

impl Polygon {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }
}

/// The disjoint union of polygons indexed by the relators of a
/// description.
///
/// Boundary vertex `j` of a polygon is the start of boundary edge `j`;
/// boundary edge `j` runs from vertex `j` to vertex `j + 1` (cyclically).
/// Boundary vertices are also numbered globally, polygon by polygon, so
/// that global order agrees with `(polygon, position)` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonSet {
    polygons: Vec<Polygon>,
    total: usize,
}

impl PolygonSet {
    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    /// Total number of boundary positions (equivalently, boundary vertices).
    pub fn total_positions(&self) -> usize {
        self.total
    }

    pub fn boundary_vertex(&self, polygon: usize, position: usize) -> usize {
        let p = &self.polygons[polygon];
        p.offset + position % p.len()
    }

    /// Global boundary vertex at the tail of boundary edge `position`.
    pub fn edge_tail(&self, polygon: usize, position: usize) -> usize {
        let e = self.polygons[polygon].boundary[position];
        if e.positive {
            self.boundary_vertex(polygon, position)
        } else {
            self.boundary_vertex(polygon, position + 1)
        }
    }

    pub fn edge_head(&self, polygon: usize, position: usize) -> usize {
        let e = self.polygons[polygon].boundary[position];
        if e.positive {
            self.boundary_vertex(polygon, position + 1)
        } else {
            self.boundary_vertex(polygon, position)
        }
    }
}

pub fn polygon_set(d: &CombinatorialDescription) -> PolygonSet {
    let mut polygons = Vec::with_capacity(d.relators.len());
    let mut offset = 0;
    for r in &d.relators {
        let boundary = r
            .letters()
            .iter()
            .map(|l| BoundaryEdge { label: l.generator(), positive: l.is_positive() })
            .collect::<Vec<_>>();
        let len = boundary.len();
        polygons.push(Polygon { boundary, offset });
        offset += len;
    }
    PolygonSet { polygons, total: offset }
}

/// A directed, labeled 1-cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub label: char,
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// One step of an attaching path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub edge: usize,
    pub forward: bool,
}

impl Step {
    pub fn sign(self) -> i32 {
        if self.forward {
            1
        } else {
            -1
        }
    }
}

/// Vertices, directed labeled edges and faces given as closed attaching
/// paths.
///
/// Edge labels are unique, so a face path is equivalently a word in the
/// labels. A face with an empty path is a sphere attached at a point; it
/// only occurs in one-vertex complexes, where the point is unambiguous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoComplex {
    vertex_count: usize,
    edges: Vec<Edge>,
    faces: Vec<Vec<Step>>,
    polygon_quotient: bool,
}

impl TwoComplex {
    pub fn new(vertex_count: usize, edges: Vec<Edge>, faces: Vec<Vec<Step>>) -> Result<Self> {
        let bad = |m: String| Err(Error::MalformedComplex(m));
        if vertex_count == 0 {
            return bad("a complex has at least one vertex".into());
        }
        let mut incident = vec![false; vertex_count];
        for (i, e) in edges.iter().enumerate() {
            if !e.label.is_ascii_lowercase() {
                return bad(format!("edge {i} has label `{}`, expected a lowercase letter", e.label));
            }
            if edges[..i].iter().any(|f| f.label == e.label) {
                return bad(format!("label `{}` is used by more than one edge", e.label));
            }
            if e.tail >= vertex_count || e.head >= vertex_count {
                return bad(format!("edge {i} ({}) has an endpoint outside 0..{vertex_count}", e.label));
            }
            incident[e.tail] = true;
            incident[e.head] = true;
        }
        if vertex_count > 1 {
            if let Some(v) = incident.iter().position(|&b| !b) {
                return bad(format!("vertex {v} is isolated"));
            }
        }
        let mut used = vec![false; edges.len()];
        for (f, path) in faces.iter().enumerate() {
            if path.is_empty() {
                if vertex_count > 1 {
                    return bad(format!("face {f} has an empty attaching path in a multi-vertex complex"));
                }
                continue;
            }
            for s in path {
                if s.edge >= edges.len() {
                    return bad(format!("face {f} uses edge {} but there are {} edges", s.edge, edges.len()));
                }
                used[s.edge] = true;
            }
            let ends = |s: &Step| {
                let e = edges[s.edge];
                if s.forward {
                    (e.tail, e.head)
                } else {
                    (e.head, e.tail)
                }
            };
            for i in 0..path.len() {
                let arrive = ends(&path[i]).1;
                let depart = ends(&path[(i + 1) % path.len()]).0;
                if arrive != depart {
                    return bad(format!(
                        "face {f} is discontinuous after step {i}: arrives at {arrive}, next step departs {depart}"
                    ));
                }
            }
        }
        let polygon_quotient = faces.iter().all(|p| !p.is_empty())
            && used.iter().all(|&u| u)
            && (!edges.is_empty() || vertex_count > 1);
        Ok(Self { vertex_count, edges, faces, polygon_quotient })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Vec<Step>] {
        &self.faces
    }

    /// Every edge lies on some face, no vertex is isolated and every face
    /// is a genuine polygon.
    pub fn is_polygon_quotient(&self) -> bool {
        self.polygon_quotient
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn edge_index(&self, label: char) -> Option<usize> {
        self.edges.iter().position(|e| e.label == label)
    }

    /// The word spelled by a face's attaching path.
    pub fn face_word(&self, face: usize) -> Word {
        self.faces[face]
            .iter()
            .map(|s| {
                Letter::new(self.edges[s.edge].label, s.forward).expect("labels are validated lowercase")
            })
            .collect()
    }

    pub fn departure(&self, s: Step) -> usize {
        let e = self.edges[s.edge];
        if s.forward {
            e.tail
        } else {
            e.head
        }
    }

    pub fn arrival(&self, s: Step) -> usize {
        let e = self.edges[s.edge];
        if s.forward {
            e.head
        } else {
            e.tail
        }
    }

    /// Number of edge ends at `u`; loops count twice.
    pub fn degree(&self, u: usize) -> usize {
        self.edges.iter().map(|e| usize::from(e.tail == u) + usize::from(e.head == u)).sum()
    }

    /// Connected component of every vertex in the 1-skeleton, components
    /// numbered by smallest vertex.
    pub fn vertex_components(&self) -> (Vec<usize>, usize) {
        let mut set = DisjointSet::new(self.vertex_count);
        for e in &self.edges {
            set.union(e.tail, e.head);
        }
        set.classes()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_components().1 == 1
    }

    /// Splits a complex into its connected components, each renumbered in
    /// the original vertex/edge/face order.
    pub fn connected_components(&self) -> Vec<TwoComplex> {
        let (component, count) = self.vertex_components();
        (0..count)
            .map(|c| {
                let vertices: Vec<usize> = (0..self.vertex_count).filter(|&v| component[v] == c).collect();
                let local = |v: usize| vertices.binary_search(&v).expect("vertex in component");
                let edge_ids: Vec<usize> =
                    (0..self.edges.len()).filter(|&e| component[self.edges[e].tail] == c).collect();
                let edges = edge_ids
                    .iter()
                    .map(|&e| Edge { label: self.edges[e].label, tail: local(self.edges[e].tail), head: local(self.edges[e].head) })
                    .collect();
                let faces = self
                    .faces
                    .iter()
                    .filter(|p| p.first().map_or(c == 0, |s| component[self.edges[s.edge].tail] == c))
                    .map(|p| {
                        p.iter()
                            .map(|s| Step { edge: edge_ids.binary_search(&s.edge).expect("edge in component"), forward: s.forward })
                            .collect()
                    })
                    .collect();
                TwoComplex::new(vertices.len(), edges, faces).expect("components of a valid complex are valid")
            })
            .collect()
    }

    /// Isomorphism of labeled complexes: a vertex bijection carrying each
    /// edge to the edge with the same label (respecting direction), and a
    /// bijection of faces whose attaching words agree up to rotation and
    /// inversion.
    pub fn is_isomorphic(&self, other: &TwoComplex) -> bool {
        if self.vertex_count != other.vertex_count
            || self.edges.len() != other.edges.len()
            || self.faces.len() != other.faces.len()
        {
            return false;
        }
        let mut map = vec![usize::MAX; self.vertex_count];
        let mut used = vec![false; other.vertex_count];
        for e in &self.edges {
            let Some(j) = other.edge_index(e.label) else { return false };
            let f = other.edges[j];
            for (from, to) in [(e.tail, f.tail), (e.head, f.head)] {
                if map[from] == usize::MAX {
                    if used[to] {
                        return false;
                    }
                    map[from] = to;
                    used[to] = true;
                } else if map[from] != to {
                    return false;
                }
            }
        }
        // Only a single edgeless vertex can remain unmapped.
        if map.contains(&usize::MAX) && self.vertex_count > 1 {
            return false;
        }
        let keys = |x: &TwoComplex| {
            let mut k: Vec<Word> = (0..x.faces.len()).map(|f| cyclic_key(&x.face_word(f))).collect();
            k.sort();
            k
        };
        keys(self) == keys(other)
    }
}

pub fn euler_characteristic(x: &TwoComplex) -> i64 {
    x.euler_characteristic()
}

/// One vertex, one loop per generator, one face per relator.
pub fn standard_complex(p: &Presentation) -> TwoComplex {
    let edges = p.generators.iter().map(|&label| Edge { label, tail: 0, head: 0 }).collect();
    let faces = p
        .relators
        .iter()
        .map(|r| {
            r.letters()
                .iter()
                .map(|l| Step {
                    edge: p.generators.iter().position(|&g| g == l.generator()).expect("validated"),
                    forward: l.is_positive(),
                })
                .collect()
        })
        .collect();
    TwoComplex::new(1, edges, faces).expect("standard complexes are valid")
}

/// The complex constructed from a description by edge identifications.
///
/// Boundary edges with equal labels are glued tail-to-tail and
/// head-to-head; the resulting vertex classes are exactly the forced
/// identifications. Vertices are numbered by their smallest
/// `(polygon, position)` boundary vertex and edges by first occurrence.
pub fn description_complex(d: &CombinatorialDescription) -> TwoComplex {
    let polys = polygon_set(d);
    let mut set = DisjointSet::new(polys.total_positions());
    let mut first: BTreeMap<char, (usize, usize)> = BTreeMap::new();
    let mut labels: Vec<char> = Vec::new();
    for (pi, poly) in polys.polygons().iter().enumerate() {
        for (pos, b) in poly.boundary.iter().enumerate() {
            match first.get(&b.label) {
                Some(&(qi, qpos)) => {
                    set.union(polys.edge_tail(qi, qpos), polys.edge_tail(pi, pos));
                    set.union(polys.edge_head(qi, qpos), polys.edge_head(pi, pos));
                }
                None => {
                    first.insert(b.label, (pi, pos));
                    labels.push(b.label);
                }
            }
        }
    }
    let (class_of, vertex_count) = set.classes();
    let edges = labels
        .iter()
        .map(|label| {
            let (pi, pos) = first[label];
            Edge { label: *label, tail: class_of[polys.edge_tail(pi, pos)], head: class_of[polys.edge_head(pi, pos)] }
        })
        .collect();
    let faces = polys
        .polygons()
        .iter()
        .map(|poly| {
            poly.boundary
                .iter()
                .map(|b| Step {
                    edge: labels.iter().position(|l| *l == b.label).expect("label recorded"),
                    forward: b.positive,
                })
                .collect()
        })
        .collect();
    TwoComplex::new(vertex_count, edges, faces).expect("edge identification yields a valid complex")
}

/// Every occurring letter occurs exactly twice, counting both signs.
pub fn is_closed_surface(d: &CombinatorialDescription) -> bool {
    let mut counts: BTreeMap<char, usize> = BTreeMap::new();
    for r in d.relators() {
        for l in r.letters() {
            *counts.entry(l.generator()).or_default() += 1;
        }
    }
    counts.values().all(|&c| c == 2)
}

/// Collapses a non-loop edge: its endpoints are identified and the edge is
/// deleted from the 1-skeleton and from every attaching path.
pub fn contract_edge(x: &TwoComplex, e: usize) -> Result<TwoComplex> {
    let edge = *x
        .edges
        .get(e)
        .ok_or_else(|| Error::InvalidParameter(format!("edge {e} does not exist")))?;
    if edge.is_loop() {
        return Err(Error::LoopContraction(e));
    }
    let keep = edge.tail.min(edge.head);
    let drop = edge.tail.max(edge.head);
    let vertex = |v: usize| match v.cmp(&drop) {
        std::cmp::Ordering::Less => v,
        std::cmp::Ordering::Equal => keep,
        std::cmp::Ordering::Greater => v - 1,
    };
    let edges = x
        .edges
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != e)
        .map(|(_, f)| Edge { label: f.label, tail: vertex(f.tail), head: vertex(f.head) })
        .collect();
    let faces = x
        .faces
        .iter()
        .map(|path| {
            path.iter()
                .filter(|s| s.edge != e)
                .map(|s| Step { edge: if s.edge > e { s.edge - 1 } else { s.edge }, forward: s.forward })
                .collect()
        })
        .collect();
    TwoComplex::new(x.vertex_count - 1, edges, faces)
}

/// Reads each face as a word in the edge labels.
pub fn describe(x: &TwoComplex) -> Result<CombinatorialDescription> {
    if !x.is_polygon_quotient() {
        return Err(Error::NotPolygonQuotient("describe needs every edge on a face and every face a polygon".into()));
    }
    CombinatorialDescription::new((0..x.faces.len()).map(|f| x.face_word(f)).collect())
}

/// The 1-skeleton as a directed DOT multigraph, one arc per edge from
/// tail to head, labeled by generator.
pub fn skeleton_to_dot(x: &TwoComplex) -> String {
    let mut out = String::from("digraph skeleton {\n");
    for v in 0..x.vertex_count {
        out.push_str(&format!("  v{v};\n"));
    }
    for e in &x.edges {
        out.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", e.tail, e.head, e.label));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct RawEdge {
    id: usize,
    label: String,
    tail: usize,
    head: usize,
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    vertices: usize,
    edges: Vec<RawEdge>,
    faces: Vec<Vec<(String, i8)>>,
}

impl Serialize for TwoComplex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawComplex {
            vertices: self.vertex_count,
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(id, e)| RawEdge { id, label: e.label.to_string(), tail: e.tail, head: e.head })
                .collect(),
            faces: self
                .faces
                .iter()
                .map(|p| p.iter().map(|s| (self.edges[s.edge].label.to_string(), s.sign() as i8)).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TwoComplex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawComplex::deserialize(deserializer)?;
        let mut edges = Vec::with_capacity(raw.edges.len());
        for (i, e) in raw.edges.iter().enumerate() {
            if e.id != i {
                return Err(D::Error::custom(format!("edge ids must be 0..n in order, found {} at {i}", e.id)));
            }
            let mut chars = e.label.chars();
            let (Some(label), None) = (chars.next(), chars.next()) else {
                return Err(D::Error::custom(format!("edge label `{}` is not a single letter", e.label)));
            };
            edges.push(Edge { label, tail: e.tail, head: e.head });
        }
        let mut faces = Vec::with_capacity(raw.faces.len());
        for path in &raw.faces {
            let mut steps = Vec::with_capacity(path.len());
            for (label, dir) in path {
                let edge = edges
                    .iter()
                    .position(|e| e.label.to_string() == *label)
                    .ok_or_else(|| D::Error::custom(format!("face refers to unknown edge `{label}`")))?;
                let forward = match dir {
                    1 => true,
                    -1 => false,
                    d => return Err(D::Error::custom(format!("direction {d} is not 1 or -1"))),
                };
                steps.push(Step { edge, forward });
            }
            faces.push(steps);
        }
        TwoComplex::new(raw.vertices, edges, faces).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_relation, parse_word};

    fn desc(relators: &[&str]) -> CombinatorialDescription {
        CombinatorialDescription::new(relators.iter().map(|r| parse_relation(r).unwrap()).collect()).unwrap()
    }

    fn pres(gens: &str, relators: &[&str]) -> Presentation {
        Presentation::new(gens.chars().collect(), relators.iter().map(|r| parse_relation(r).unwrap()).collect())
            .unwrap()
    }

    fn counts(x: &TwoComplex) -> (usize, usize, usize) {
        (x.vertex_count(), x.edges().len(), x.faces().len())
    }

    #[test]
    fn polygon_set_transcribes_relators() {
        let p = polygon_set(&desc(&["abAB"]));
        assert_eq!(p.polygons().len(), 1);
        let signs: Vec<_> = p.polygons()[0].boundary.iter().map(|b| (b.label, b.positive)).collect();
        assert_eq!(signs, vec![('a', true), ('b', true), ('a', false), ('b', false)]);
        let bigon = polygon_set(&desc(&["aa"]));
        assert!(bigon.polygons()[0].boundary.iter().all(|b| b.label == 'a' && b.positive));
        assert_eq!(polygon_set(&desc(&["abcABC"])).polygons()[0].len(), 6);
    }

    #[test]
    fn standard_complex_counts() {
        let torus = standard_complex(&pres("ab", &["abAB"]));
        assert_eq!(counts(&torus), (1, 2, 1));
        assert_eq!(torus.euler_characteristic(), 0);
        let x = standard_complex(&pres("abc", &["abc=cba"]));
        assert_eq!(counts(&x), (1, 3, 1));
        assert_eq!(euler_characteristic(&x), -1);
        let free = standard_complex(&pres("a", &[]));
        assert_eq!(counts(&free), (1, 1, 0));
        assert!(!free.is_polygon_quotient());
    }

    #[test]
    fn presentation_rejects_foreign_letters() {
        let err = Presentation::new(vec!['a'], vec![parse_word("ab").unwrap()]).unwrap_err();
        assert!(matches!(err, Error::UnknownLetter { letter: 'b', .. }));
    }

    #[test]
    fn description_complex_examples() {
        let torus2 = description_complex(&desc(&["abcABC"]));
        assert_eq!(counts(&torus2), (2, 3, 1));
        assert_eq!(torus2.euler_characteristic(), 0);
        assert_eq!(counts(&description_complex(&desc(&["abAB"]))), (1, 2, 1));
        let tor45 = description_complex(&desc(&["a^4 t = t b^5"]));
        assert_eq!(counts(&tor45), (2, 3, 1));
        let projective = description_complex(&desc(&["aa"]));
        assert_eq!(counts(&projective), (1, 1, 1));
        assert_eq!(projective.euler_characteristic(), 1);
        assert_eq!(counts(&description_complex(&desc(&["aA"]))), (2, 1, 1));
    }

    #[test]
    fn same_relation_spelled_two_ways_gives_the_same_complex() {
        let a = description_complex(&desc(&["abcABC"]));
        let b = description_complex(&desc(&["abc=cba"]));
        assert_eq!(a, b);
    }

    #[test]
    fn closed_surfaces() {
        assert!(is_closed_surface(&desc(&["abcABC"])));
        assert!(!is_closed_surface(&desc(&["a^4 t = t b^5"])));
        assert!(is_closed_surface(&desc(&["aabb"])));
    }

    #[test]
    fn contraction() {
        let y = description_complex(&desc(&["a^4 t = t b^5"]));
        let t = y.edge_index('t').unwrap();
        let x = contract_edge(&y, t).unwrap();
        assert_eq!(counts(&x), (1, 2, 1));
        assert_eq!(cyclic_key(&x.face_word(0)), cyclic_key(&parse_word("a^4B^5").unwrap()));

        let torus2 = description_complex(&desc(&["abcABC"]));
        let c = contract_edge(&torus2, torus2.edge_index('c').unwrap()).unwrap();
        assert_eq!(counts(&c), (1, 2, 1));
        assert_eq!(c.euler_characteristic(), 0);

        let torus = standard_complex(&pres("ab", &["abAB"]));
        assert_eq!(contract_edge(&torus, 0), Err(Error::LoopContraction(0)));
    }

    #[test]
    fn contracting_a_bigon_edge_into_a_point_face() {
        // [aA] is a sphere with two vertices; contracting `a` leaves a
        // one-vertex complex with an empty face.
        let sphere = description_complex(&desc(&["aA"]));
        let point = contract_edge(&sphere, 0).unwrap();
        assert_eq!(counts(&point), (1, 0, 1));
        assert_eq!(point.euler_characteristic(), 2);
        assert!(!point.is_polygon_quotient());
    }

    #[test]
    fn describe_round_trips() {
        let d = desc(&["abcABC"]);
        assert!(describe(&description_complex(&d)).unwrap().equivalent(&d));
        let torus = standard_complex(&pres("ab", &["abAB"]));
        assert!(describe(&torus).unwrap().equivalent(&desc(&["baBA"])));
        let free_edge = standard_complex(&pres("ab", &["aa"]));
        assert!(matches!(describe(&free_edge), Err(Error::NotPolygonQuotient(_))));
    }

    #[test]
    fn validation_catches_discontinuous_faces() {
        let edges = vec![Edge { label: 'a', tail: 0, head: 1 }, Edge { label: 'b', tail: 0, head: 1 }];
        let faces = vec![vec![Step { edge: 0, forward: true }, Step { edge: 1, forward: true }]];
        assert!(matches!(TwoComplex::new(2, edges, faces), Err(Error::MalformedComplex(_))));
    }

    #[test]
    fn json_shape() {
        let x = description_complex(&desc(&["abcABC"]));
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            r#"{"vertices":2,"edges":[{"id":0,"label":"a","tail":0,"head":1},{"id":1,"label":"b","tail":1,"head":0},{"id":2,"label":"c","tail":0,"head":1}],"faces":[[["a",1],["b",1],["c",1],["a",-1],["b",-1],["c",-1]]]}"#
        );
        let back: TwoComplex = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn components_split_disjoint_spheres() {
        let x = description_complex(&desc(&["aA", "bB"]));
        assert!(!x.is_connected());
        let parts = x.connected_components();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.euler_characteristic() == 2));
    }

    #[test]
    fn skeleton_dot_lists_every_edge() {
        let x = description_complex(&CombinatorialDescription::new(vec![parse_word("abcABC").unwrap()]).unwrap());
        let dot = skeleton_to_dot(&x);
        assert!(dot.starts_with("digraph skeleton {"));
        assert_eq!(dot.matches("->").count(), 3);
        assert!(dot.contains("[label=\"c\"]"));
    }

    #[test]
    fn display_forms() {
        let d = CombinatorialDescription::new(vec![parse_word("abcABC").unwrap(), parse_word("aB").unwrap()]).unwrap();
        assert_eq!(d.to_string(), "[abcABC, aB]");
        let p = Presentation::new(vec!['a', 'b'], vec![parse_word("aaBBB").unwrap()]).unwrap();
        assert_eq!(p.to_string(), "<a, b | aaBBB>");
    }
}
