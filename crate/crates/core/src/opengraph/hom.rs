use std::collections::HashMap;
use std::fmt::Write;

use crate::fincat::text::strip_comment;
use crate::ParseError;

use super::{GraphError, OpenGraph};

/// An interface-preserving graph homomorphism between open graphs with the
/// same boundary, listed in the same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphHom {
    source: OpenGraph,
    target: OpenGraph,
    map: Vec<usize>,
}

impl GraphHom {
    pub fn new(source: OpenGraph, target: OpenGraph, map: Vec<usize>) -> Result<GraphHom, GraphError> {
        if source.inputs != target.inputs || source.outputs != target.outputs {
            return Err(GraphError::BoundaryMismatch("homomorphism changes the boundary".into()));
        }
        if map.len() != source.vertices.len() {
            return Err(GraphError::NotAHomomorphism("vertex map is not total".into()));
        }
        if let Some(&w) = map.iter().find(|&&w| w >= target.vertices.len()) {
            return Err(GraphError::UnknownVertex(format!("#{w}")));
        }
        for &(a, b) in &source.edges {
            if !target.edges.contains(&(map[a], map[b])) {
                return Err(GraphError::NotAHomomorphism(format!(
                    "edge {} -> {} has no image",
                    source.vertices[a], source.vertices[b]
                )));
            }
        }
        let legs = |points: &[String], legs: &[usize], other_legs: &[usize], kind: &str| {
            for (i, p) in points.iter().enumerate() {
                if map[legs[i]] != other_legs[i] {
                    return Err(GraphError::NotAHomomorphism(format!("{kind} leg {p} is not preserved")));
                }
            }
            Ok(())
        };
        legs(&source.inputs, &source.in_leg, &target.in_leg, "input")?;
        legs(&source.outputs, &source.out_leg, &target.out_leg, "output")?;
        Ok(GraphHom { source, target, map })
    }

    pub fn identity(g: &OpenGraph) -> GraphHom {
        GraphHom {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.vertices.len()).collect(),
        }
    }

    /// Reads a homomorphism out of `source`: the target graph in the open
    /// graph format plus one `map <v> => <w>` line per source vertex.
    pub fn parse(source: &OpenGraph, src: &str) -> Result<GraphHom, GraphError> {
        let mut graph_text = String::new();
        let mut entries = Vec::new();
        for (lineno, line) in src.lines().enumerate() {
            let stripped = strip_comment(line);
            match stripped.strip_prefix("map").filter(|r| r.starts_with(char::is_whitespace)) {
                Some(rest) => {
                    let (v, w) = rest
                        .split_once("=>")
                        .ok_or_else(|| ParseError::new(lineno + 1, "expected `map <v> => <w>`"))?;
                    entries.push((v.trim().to_string(), w.trim().to_string()));
                    graph_text.push('\n');
                }
                None => {
                    graph_text.push_str(line);
                    graph_text.push('\n');
                }
            }
        }
        let target = OpenGraph::parse(&graph_text)?;
        let src_index: HashMap<&str, usize> = source.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let tgt_index: HashMap<&str, usize> = target.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut map = vec![usize::MAX; source.vertices.len()];
        for (v, w) in &entries {
            let i = *src_index.get(v.as_str()).ok_or_else(|| GraphError::UnknownVertex(v.clone()))?;
            let j = *tgt_index.get(w.as_str()).ok_or_else(|| GraphError::UnknownVertex(w.clone()))?;
            if map[i] != usize::MAX {
                return Err(GraphError::NotAHomomorphism(format!("vertex {v} is mapped twice")));
            }
            map[i] = j;
        }
        if let Some(i) = map.iter().position(|&j| j == usize::MAX) {
            return Err(GraphError::NotAHomomorphism(format!("vertex {} is not mapped", source.vertices[i])));
        }
        GraphHom::new(source.clone(), target, map)
    }

    pub fn to_text(&self) -> String {
        let mut out = self.target.to_text();
        for (i, &j) in self.map.iter().enumerate() {
            let _ = writeln!(out, "map {} => {}", self.source.vertices[i], self.target.vertices[j]);
        }
        out
    }

    pub fn source(&self) -> &OpenGraph {
        &self.source
    }

    pub fn target(&self) -> &OpenGraph {
        &self.target
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::opengraph::reach;
    use crate::opengraph::tests::g;

    pub const IDENTIFY: &str = "inputs 1\noutputs 1,2,3\nvertex i1 o13 o2\nedge i1 -> o13\nedge o2 -> o13\nin 1 = i1\nout 1 = o13\nout 2 = o2\nout 3 = o13\nmap i1 => i1\nmap o1 => o13\nmap o2 => o2\nmap o3 => o13\n";

    #[test]
    fn identifying_outputs() {
        let hom = GraphHom::parse(&g(), IDENTIFY).unwrap();
        assert_eq!(reach(hom.target()).to_string(), "{(1,1),(1,3)}");
        assert_eq!(GraphHom::parse(&g(), &hom.to_text()).unwrap(), hom);
    }

    #[test]
    fn rejections() {
        let dropped_edge = IDENTIFY.replace("edge o2 -> o13\n", "");
        assert!(matches!(GraphHom::parse(&g(), &dropped_edge), Err(GraphError::NotAHomomorphism(_))));
        let moved_leg = IDENTIFY.replace("map o1 => o13", "map o1 => o2");
        assert!(matches!(GraphHom::parse(&g(), &moved_leg), Err(GraphError::NotAHomomorphism(_))));
        let partial = IDENTIFY.replace("map o2 => o2\n", "");
        assert!(matches!(GraphHom::parse(&g(), &partial), Err(GraphError::NotAHomomorphism(_))));
    }

    #[test]
    fn reach_grows_along_homs() {
        let hom = GraphHom::parse(&g(), IDENTIFY).unwrap();
        assert!(reach(hom.source()).is_subset(&reach(hom.target())));
        assert_eq!(GraphHom::identity(&g()).target(), &g());
    }
}
