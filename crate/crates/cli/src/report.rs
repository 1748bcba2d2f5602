//! Serializable reports. Field order is the key order in the JSON output.

use linkcx::complex::{
    describe, description_complex, is_closed_surface, standard_complex, CombinatorialDescription, TwoComplex,
};
use linkcx::links::{all_links, LinkGraph};
use linkcx::splitting::{complex_abelianization, wedge_split, Abelianization, Provenance, WedgeDecomposition};
use linkcx::Result;
use serde::Serialize;

use crate::input::{Input, Loaded, Source};

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

pub fn build_complex(input: &Input) -> TwoComplex {
    match input {
        Input::Description(d) => description_complex(d),
        Input::Presentation(p) => standard_complex(p),
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Cells {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
}

impl Cells {
    pub fn of(x: &TwoComplex) -> Self {
        Cells {
            vertices: x.vertex_count(),
            edges: x.edges().len(),
            faces: x.faces().len(),
            euler_characteristic: x.euler_characteristic(),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BuildReport {
    pub schema_version: u32,
    pub source: Source,
    #[serde(flatten)]
    pub cells: Cells,
    pub complex: TwoComplex,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub source: Source,
    #[serde(flatten)]
    pub cells: Cells,
    pub polygon_quotient: bool,
    /// Components of each vertex link, by vertex; empty when links are
    /// undefined (not a polygon quotient).
    pub link_components: Vec<usize>,
    pub link_connected: bool,
    /// The complex is a closed surface: every edge lies on exactly two
    /// polygon sides.
    pub closed_surface: bool,
    pub connected: bool,
    /// First homology, for connected complexes.
    pub abelianization: Option<Abelianization>,
    /// Present when the complex is connected and splittable.
    pub wedge: Option<SplitSummary>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SplitSummary {
    pub link_components: usize,
    pub minus_vertex_components: usize,
    pub circles: usize,
    pub pieces: usize,
}

/// A standard complex is a surface only when its link is a single circle,
/// so it must be link-connected before its description is consulted.
fn closed_surface(x: &TwoComplex, input: &Input, link_connected: bool) -> bool {
    let d: Option<CombinatorialDescription> = match input {
        Input::Description(d) => Some(d.clone()),
        Input::Presentation(_) if link_connected => describe(x).ok(),
        Input::Presentation(_) => None,
    };
    d.is_some_and(|d| is_closed_surface(&d))
}

pub fn analyze(loaded: &Loaded) -> Result<AnalysisReport> {
    let x = build_complex(&loaded.input);
    let links = if x.is_polygon_quotient() { all_links(&x)? } else { Vec::new() };
    let connected = x.is_connected();
    let wedge = if connected && x.is_polygon_quotient() {
        wedge_split(&x).ok().map(|w| SplitSummary {
            link_components: w.link_components,
            minus_vertex_components: w.minus_vertex_components,
            circles: w.circles,
            pieces: w.pieces.len(),
        })
    } else {
        None
    };
    let link_connected = !links.is_empty() && links.iter().all(LinkGraph::is_connected);
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        source: loaded.source.clone(),
        cells: Cells::of(&x),
        polygon_quotient: x.is_polygon_quotient(),
        link_connected,
        link_components: links.iter().map(|l| l.component_count).collect(),
        closed_surface: closed_surface(&x, &loaded.input, link_connected),
        connected,
        abelianization: if connected { Some(complex_abelianization(&x)?) } else { None },
        wedge,
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CornerReport {
    pub face: usize,
    pub position: usize,
    pub ends: [String; 2],
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LinkReport {
    pub vertex: usize,
    pub vertices: Vec<String>,
    pub corners: Vec<CornerReport>,
    pub components: Vec<Vec<String>>,
    pub connected: bool,
}

impl LinkReport {
    pub fn of(l: &LinkGraph) -> Self {
        let name = |i: usize| l.vertices[i].name();
        LinkReport {
            vertex: l.vertex,
            vertices: l.vertices.iter().map(|v| v.name()).collect(),
            corners: l
                .corners
                .iter()
                .map(|c| CornerReport { face: c.face, position: c.position, ends: [name(c.ends[0]), name(c.ends[1])] })
                .collect(),
            components: (0..l.component_count).map(|c| l.component(c).iter().map(|e| e.name()).collect()).collect(),
            connected: l.is_connected(),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LinksReport {
    pub schema_version: u32,
    pub source: Source,
    pub link_connected: bool,
    pub links: Vec<LinkReport>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PieceReport {
    #[serde(flatten)]
    pub cells: Cells,
    /// The piece as a description, when it has one.
    pub description: Option<String>,
    pub link_connected: bool,
    pub provenance: Provenance,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SplitReport {
    pub schema_version: u32,
    pub source: Source,
    pub euler_characteristic: i64,
    /// The input had several vertices and was collapsed along a spanning
    /// tree before splitting.
    pub collapsed: bool,
    pub link_components: usize,
    pub minus_vertex_components: usize,
    pub circles: usize,
    pub pieces: Vec<PieceReport>,
    pub wedge_euler_characteristic: i64,
}

pub fn split(loaded: &Loaded) -> Result<(SplitReport, WedgeDecomposition)> {
    let x = build_complex(&loaded.input);
    let w = wedge_split(&x)?;
    let pieces = w
        .pieces
        .iter()
        .map(|p| {
            Ok(PieceReport {
                cells: Cells::of(&p.complex),
                description: p.description.as_ref().map(ToString::to_string),
                link_connected: linkcx::links::is_link_connected(&p.complex)?,
                provenance: p.provenance.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let report = SplitReport {
        schema_version: SCHEMA_VERSION,
        source: loaded.source.clone(),
        euler_characteristic: x.euler_characteristic(),
        collapsed: x.vertex_count() > 1 && w.source.vertex_count() == 1,
        link_components: w.link_components,
        minus_vertex_components: w.minus_vertex_components,
        circles: w.circles,
        pieces,
        wedge_euler_characteristic: w.wedge_euler_characteristic(),
    };
    Ok((report, w))
}
