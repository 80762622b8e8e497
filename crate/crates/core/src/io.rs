//! Document formats.
//!
//! JSON:
//! - graph: `{"vertices": [...], "edges": [["u","v"], ...]}`
//! - digraph: `{"vertices": [...], "arcs": [["u","v"], ...]}`
//! - slice object: `{"carrier": <graph>, "base": <graph>, "map": {"u": "x", ...}}`
//!
//! Serialized output is canonical: vertices sorted, each edge written with its
//! lexicographically smaller endpoint first, edges sorted.
//!
//! The edge-list text format has one edge (or arc) per line as two
//! whitespace-separated ids; a line with a single id declares a vertex. Blank
//! lines and `#` comments are ignored.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::morphism::{SliceObject, VertexMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DigraphDoc {
    pub vertices: Vec<String>,
    pub arcs: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SliceDoc {
    pub carrier: GraphDoc,
    pub base: GraphDoc,
    pub map: VertexMap,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc {
            vertices: g.names().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|&(u, v)| [g.name(u).to_string(), g.name(v).to_string()])
                .collect(),
        }
    }
}

impl TryFrom<GraphDoc> for Graph {
    type Error = Error;

    fn try_from(doc: GraphDoc) -> Result<Self> {
        Graph::new(doc.vertices, doc.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<&Digraph> for DigraphDoc {
    fn from(d: &Digraph) -> Self {
        DigraphDoc {
            vertices: d.names().to_vec(),
            arcs: d
                .arcs()
                .iter()
                .map(|&(u, v)| [d.name(u).to_string(), d.name(v).to_string()])
                .collect(),
        }
    }
}

impl TryFrom<DigraphDoc> for Digraph {
    type Error = Error;

    fn try_from(doc: DigraphDoc) -> Result<Self> {
        Digraph::new(doc.vertices, doc.arcs.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<&SliceObject> for SliceDoc {
    fn from(x: &SliceObject) -> Self {
        SliceDoc {
            carrier: x.carrier().into(),
            base: x.base().into(),
            map: x.structure_map().to_map(),
        }
    }
}

impl TryFrom<SliceDoc> for SliceObject {
    type Error = Error;

    fn try_from(doc: SliceDoc) -> Result<Self> {
        let carrier = Graph::try_from(doc.carrier)?;
        let base = Graph::try_from(doc.base)?;
        SliceObject::from_map(carrier, base, &doc.map)
    }
}

macro_rules! serde_via_doc {
    ($ty:ty, $doc:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                <$doc>::from(self).serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let doc = <$doc>::deserialize(d)?;
                <$ty>::try_from(doc).map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_doc!(Graph, GraphDoc);
serde_via_doc!(Digraph, DigraphDoc);
serde_via_doc!(SliceObject, SliceDoc);

type EdgeList = (Vec<String>, Vec<(String, String)>);

fn parse_pairs(text: &str) -> Result<EdgeList> {
    let mut vertices = Vec::new();
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [v] => vertices.push(v.to_string()),
            [u, v] => {
                vertices.push(u.to_string());
                vertices.push(v.to_string());
                pairs.push((u.to_string(), v.to_string()));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected one or two ids, found {}",
                    lineno + 1,
                    tokens.len()
                )))
            }
        }
    }
    Ok((vertices, pairs))
}

/// Renders edges one per line, followed by isolated vertices.
fn render_pairs<'a>(
    names: &'a [String],
    pairs: impl Iterator<Item = (&'a str, &'a str)>,
    isolated: impl Iterator<Item = usize>,
) -> String {
    let mut out = String::new();
    for (u, v) in pairs {
        out.push_str(u);
        out.push(' ');
        out.push_str(v);
        out.push('\n');
    }
    for v in isolated {
        out.push_str(&names[v]);
        out.push('\n');
    }
    out
}

impl Graph {
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let (vertices, pairs) = parse_pairs(text)?;
        Graph::new(vertices, pairs)
    }

    pub fn to_edge_list(&self) -> String {
        render_pairs(
            self.names(),
            self.edges().iter().map(|&(u, v)| (self.name(u), self.name(v))),
            self.vertices().filter(|&v| self.degree(v) == 0),
        )
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in self.names() {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for &(u, v) in self.edges() {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", self.name(u), self.name(v)));
        }
        out.push_str("}\n");
        out
    }

    /// Accepts JSON when the text starts with `{`, otherwise an edge list.
    pub fn parse(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            Ok(serde_json::from_str(text)?)
        } else {
            Graph::from_edge_list(text)
        }
    }
}

impl Digraph {
    pub fn from_edge_list(text: &str) -> Result<Digraph> {
        let (vertices, pairs) = parse_pairs(text)?;
        Digraph::new(vertices, pairs)
    }

    pub fn to_edge_list(&self) -> String {
        render_pairs(
            self.names(),
            self.arcs().iter().map(|&(u, v)| (self.name(u), self.name(v))),
            self.isolated_points().into_iter(),
        )
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for v in self.names() {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for &(u, v) in self.arcs() {
            out.push_str(&format!("  \"{}\" -> \"{}\";\n", self.name(u), self.name(v)));
        }
        out.push_str("}\n");
        out
    }

    pub fn parse(text: &str) -> Result<Digraph> {
        if text.trim_start().starts_with('{') {
            Ok(serde_json::from_str(text)?)
        } else {
            Digraph::from_edge_list(text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_path};

    #[test]
    fn graph_json_is_canonical() {
        let g: Graph = serde_json::from_str(r#"{"vertices":["c","a","b"],"edges":[["c","b"],["b","a"]]}"#).unwrap();
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#
        );
    }

    #[test]
    fn rejects_unknown_fields_and_bad_edges() {
        assert!(serde_json::from_str::<Graph>(r#"{"vertices":[],"edges":[],"x":1}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"vertices":["a"],"edges":[["a","a"]]}"#).is_err());
        assert!(Graph::parse("{ not json").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "# a comment\nx y\ny z\n\nw\n";
        let g = Graph::from_edge_list(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.to_edge_list(), "x y\ny z\nw\n");
        assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(Graph::from_edge_list("a b c").is_err());
    }

    #[test]
    fn digraph_json_keeps_direction_and_loops() {
        let d: Digraph = serde_json::from_str(r#"{"vertices":["u","v"],"arcs":[["v","u"],["u","u"]]}"#).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert!(d.has_arc(1, 0));
        assert!(!d.has_arc(0, 1));
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"vertices":["u","v"],"arcs":[["u","u"],["v","u"]]}"#
        );
    }

    #[test]
    fn slice_json_validates_structure_map() {
        let c3 = build_cycle(3).unwrap();
        let p3 = build_path(3);
        let doc = SliceDoc {
            carrier: (&p3).into(),
            base: (&c3).into(),
            map: [("v0", "v0"), ("v1", "v1"), ("v2", "v2"), ("v3", "v0")]
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        };
        let text = serde_json::to_string(&doc).unwrap();
        let x: SliceObject = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&x).unwrap(), text);

        let mut bad = doc.clone();
        bad.map.insert("v3".into(), "v2".into());
        let text = serde_json::to_string(&bad).unwrap();
        assert!(serde_json::from_str::<SliceObject>(&text).is_err());
    }
}
