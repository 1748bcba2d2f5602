//! Vertex links.
//!
//! The link of a vertex `u` is a graph with one vertex per edge end at `u`
//! (a loop at `u` contributes both of its ends) and one edge per polygon
//! corner at `u`. The corner between consecutive steps `i` and `i + 1` of a
//! face joins the end through which step `i` arrives to the end through
//! which step `i + 1` departs. Links are undirected.

use std::fmt::Write as _;

use serde::Serialize;

use crate::complex::{describe, description_complex, Step, TwoComplex};
use crate::error::{Error, Result};
use crate::unionfind::DisjointSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    Tail,
    Head,
}

/// One end of an edge, by edge index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeEnd {
    pub edge: usize,
    pub end: End,
}

impl EdgeEnd {
    fn slot(self) -> usize {
        2 * self.edge + usize::from(self.end == End::Head)
    }

    /// The DOT node name `e<edge>.<t|h>`.
    pub fn name(self) -> String {
        format!("e{}.{}", self.edge, if self.end == End::Tail { 't' } else { 'h' })
    }
}

/// A polygon corner: the vertex between step `position` and the next step
/// of face `face`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Corner {
    pub face: usize,
    pub position: usize,
    /// Indices into [`LinkGraph::vertices`].
    pub ends: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkGraph {
    pub vertex: usize,
    /// Edge ends at the vertex, sorted by `(edge, end)`.
    pub vertices: Vec<EdgeEnd>,
    /// Corners sorted by `(face, position)`.
    pub corners: Vec<Corner>,
    /// Component index of each link vertex; components are numbered by
    /// their smallest edge end.
    pub component_of: Vec<usize>,
    pub component_count: usize,
}

fn arrival_end(s: Step) -> EdgeEnd {
    EdgeEnd { edge: s.edge, end: if s.forward { End::Head } else { End::Tail } }
}

fn departure_end(s: Step) -> EdgeEnd {
    EdgeEnd { edge: s.edge, end: if s.forward { End::Tail } else { End::Head } }
}

fn require_polygon_quotient(x: &TwoComplex) -> Result<()> {
    if x.is_polygon_quotient() {
        Ok(())
    } else {
        Err(Error::NotPolygonQuotient("vertex links are defined for polygon quotients only".into()))
    }
}

impl LinkGraph {
    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }

    /// Link vertices of one component, in order.
    pub fn component(&self, c: usize) -> Vec<EdgeEnd> {
        self.vertices.iter().zip(&self.component_of).filter(|(_, &k)| k == c).map(|(v, _)| *v).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph link_v{} {{", self.vertex).unwrap();
        self.write_dot_body(&mut out, "  ");
        out.push_str("}\n");
        out
    }

    pub(crate) fn write_dot_body(&self, out: &mut String, indent: &str) {
        for v in &self.vertices {
            writeln!(out, "{indent}\"{}\";", v.name()).unwrap();
        }
        for c in &self.corners {
            writeln!(
                out,
                "{indent}\"{}\" -- \"{}\" [label=\"f{}@{}\"];",
                self.vertices[c.ends[0]].name(),
                self.vertices[c.ends[1]].name(),
                c.face,
                c.position
            )
            .unwrap();
        }
    }
}

/// The link of vertex `u`.
pub fn vertex_link(x: &TwoComplex, u: usize) -> Result<LinkGraph> {
    require_polygon_quotient(x)?;
    if u >= x.vertex_count() {
        return Err(Error::InvalidParameter(format!("vertex {u} does not exist ({} vertices)", x.vertex_count())));
    }
    let mut index = vec![usize::MAX; 2 * x.edges().len()];
    let mut vertices = Vec::new();
    for (i, e) in x.edges().iter().enumerate() {
        for (at, end) in [(e.tail, End::Tail), (e.head, End::Head)] {
            if at == u {
                let ee = EdgeEnd { edge: i, end };
                index[ee.slot()] = vertices.len();
                vertices.push(ee);
            }
        }
    }
    let mut corners = Vec::new();
    let mut set = DisjointSet::new(vertices.len());
    for (f, path) in x.faces().iter().enumerate() {
        for (i, &step) in path.iter().enumerate() {
            if x.arrival(step) != u {
                continue;
            }
            let next = path[(i + 1) % path.len()];
            let ends = [index[arrival_end(step).slot()], index[departure_end(next).slot()]];
            set.union(ends[0], ends[1]);
            corners.push(Corner { face: f, position: i, ends });
        }
    }
    let (component_of, component_count) = set.classes();
    Ok(LinkGraph { vertex: u, vertices, corners, component_of, component_count })
}

/// Links of every vertex, in vertex order.
pub fn all_links(x: &TwoComplex) -> Result<Vec<LinkGraph>> {
    (0..x.vertex_count()).map(|u| vertex_link(x, u)).collect()
}

/// Every vertex link is connected.
pub fn is_link_connected(x: &TwoComplex) -> Result<bool> {
    Ok(all_links(x)?.iter().all(LinkGraph::is_connected))
}

/// All link graphs of a complex as one DOT graph, one cluster per vertex.
pub fn links_to_dot(links: &[LinkGraph]) -> String {
    let mut out = String::from("graph links {\n");
    for link in links {
        writeln!(out, "  subgraph cluster_v{} {{", link.vertex).unwrap();
        writeln!(out, "    label=\"v{}\";", link.vertex).unwrap();
        link.write_dot_body(&mut out, "    ");
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

/// The factorization `P ↠ Y ↠ X` through the complex `Y` built from `X` by
/// edge identifications.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkQuotient {
    /// `Y`, with the same edge labels as `X`.
    pub complex: TwoComplex,
    /// Image in `X` of every vertex of `Y`.
    pub vertex_map: Vec<usize>,
    /// For every vertex `u` of `X`, the vertex of `Y` over each component
    /// of `link(u, X)`, indexed by component.
    pub fibers: Vec<Vec<usize>>,
}

impl LinkQuotient {
    /// `Y ↠ X` is a bijection on vertices.
    pub fn is_vertex_bijective(&self) -> bool {
        self.fibers.iter().all(|f| f.len() == 1)
    }
}

pub fn link_quotient_factorization(x: &TwoComplex) -> Result<LinkQuotient> {
    let y = description_complex(&describe(x)?);
    let links = all_links(x)?;
    let mut vertex_map = vec![usize::MAX; y.vertex_count()];
    let mut fibers = Vec::with_capacity(links.len());
    for link in &links {
        let mut fiber = vec![usize::MAX; link.component_count];
        for (ee, &c) in link.vertices.iter().zip(&link.component_of) {
            let label = x.edges()[ee.edge].label;
            let ye = y.edges()[y.edge_index(label).expect("Y carries the labels of X")];
            let yv = if ee.end == End::Tail { ye.tail } else { ye.head };
            if fiber[c] == usize::MAX {
                fiber[c] = yv;
            } else if fiber[c] != yv {
                return Err(Error::MalformedComplex(format!(
                    "link component {c} at vertex {} lifts to two vertices of Y",
                    link.vertex
                )));
            }
            vertex_map[yv] = link.vertex;
        }
        fibers.push(fiber);
    }
    Ok(LinkQuotient { complex: y, vertex_map, fibers })
}
