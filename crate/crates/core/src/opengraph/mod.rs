//! Open graphs: directed graphs with input and output legs, glued along a
//! shared boundary, and the reachability relation from inputs to outputs.
//!
//! Text format:
//!
//! ```text
//! inputs 1
//! outputs 1,2,3
//! vertex i1 o1 o2 o3
//! edge i1 -> o1
//! edge o2 -> o3
//! in 1 = i1
//! out 1 = o1
//! out 2 = o2
//! out 3 = o3
//! ```

mod hom;
mod laxator;
mod relation;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write;

use thiserror::Error;

use crate::fincat::text::strip_comment;
use crate::order::OrderError;
use crate::ParseError;

pub use hom::GraphHom;
pub use laxator::{act, laxator_obstructions, laxator_subsets, pi1_laxator, Action, GENERIC_PI1_LIMIT};
pub use relation::{compose_rel, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown boundary point `{0}`")]
    UnknownBoundary(String),
    #[error("boundary point `{0}` has {1} legs")]
    BadLeg(String, usize),
    #[error("boundaries do not match: {0}")]
    BoundaryMismatch(String),
    #[error("relations are not composable: {0}")]
    TypeMismatch(String),
    #[error("not a graph homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("laxator inclusion fails at {0}")]
    LaxityViolation(String),
    #[error(transparent)]
    Order(#[from] OrderError),
}

impl GraphError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Parse(_) => "ParseError",
            Self::DuplicateName(_) => "DuplicateName",
            Self::UnknownVertex(_) => "UnknownVertex",
            Self::UnknownBoundary(_) => "UnknownBoundary",
            Self::BadLeg(..) => "BadLeg",
            Self::BoundaryMismatch(_) => "BoundaryMismatch",
            Self::TypeMismatch(_) => "TypeMismatch",
            Self::NotAHomomorphism(_) => "NotAHomomorphism",
            Self::LaxityViolation(_) => "LaxityViolation",
            Self::Order(e) => e.name(),
        }
    }
}

/// A directed graph with input legs `X -> V` and output legs `Y -> V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenGraph {
    inputs: Vec<String>,
    outputs: Vec<String>,
    vertices: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
    in_leg: Vec<usize>,
    out_leg: Vec<usize>,
}

fn distinct(names: &[String]) -> Result<(), GraphError> {
    let mut seen = BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(GraphError::DuplicateName(n.clone()));
        }
    }
    Ok(())
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(str::trim).filter(|e| !e.is_empty()).map(String::from).collect()
}

impl OpenGraph {
    pub fn new(
        inputs: Vec<String>,
        outputs: Vec<String>,
        vertices: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
        in_leg: Vec<usize>,
        out_leg: Vec<usize>,
    ) -> Result<OpenGraph, GraphError> {
        distinct(&inputs)?;
        distinct(&outputs)?;
        distinct(&vertices)?;
        let n = vertices.len();
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().collect();
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(GraphError::UnknownVertex(format!("#{}", a.max(b))));
        }
        if in_leg.len() != inputs.len() || out_leg.len() != outputs.len() {
            return Err(GraphError::BadLeg("legs".into(), 0));
        }
        if let Some(&v) = in_leg.iter().chain(&out_leg).find(|&&v| v >= n) {
            return Err(GraphError::UnknownVertex(format!("#{v}")));
        }
        Ok(OpenGraph {
            inputs,
            outputs,
            vertices,
            edges,
            in_leg,
            out_leg,
        })
    }

    /// The discrete graph on `boundary` with both legs the identity.
    pub fn identity(boundary: &[String]) -> OpenGraph {
        let n = boundary.len();
        OpenGraph::new(
            boundary.to_vec(),
            boundary.to_vec(),
            boundary.to_vec(),
            [],
            (0..n).collect(),
            (0..n).collect(),
        )
        .expect("identity graph")
    }

    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[String] {
        &self.outputs
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn in_leg(&self, i: usize) -> usize {
        self.in_leg[i]
    }

    pub fn out_leg(&self, i: usize) -> usize {
        self.out_leg[i]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn parse(src: &str) -> Result<OpenGraph, GraphError> {
        let mut builder = Builder::default();
        for (lineno, line) in src.lines().enumerate() {
            builder.line(lineno + 1, line)?;
        }
        builder.finish()
    }

    /// The text format; parsing it back gives an equal graph.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "inputs {}", self.inputs.join(","));
        let _ = writeln!(out, "outputs {}", self.outputs.join(","));
        if !self.vertices.is_empty() {
            let _ = writeln!(out, "vertex {}", self.vertices.join(" "));
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "edge {} -> {}", self.vertices[a], self.vertices[b]);
        }
        for (x, &v) in self.inputs.iter().zip(&self.in_leg) {
            let _ = writeln!(out, "in {x} = {}", self.vertices[v]);
        }
        for (y, &v) in self.outputs.iter().zip(&self.out_leg) {
            let _ = writeln!(out, "out {y} = {}", self.vertices[v]);
        }
        out
    }

    /// Graphviz rendering; boundary legs are dashed edges from and to
    /// plain-text boundary labels.
    pub fn to_dot(&self, title: &str) -> String {
        let q = crate::order::quote;
        let mut out = String::new();
        let _ = writeln!(out, "digraph {} {{", q(title));
        let _ = writeln!(out, "  rankdir=LR;");
        for v in &self.vertices {
            let _ = writeln!(out, "  {} [shape=circle];", q(v));
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  {} -> {};", q(&self.vertices[a]), q(&self.vertices[b]));
        }
        for (x, &v) in self.inputs.iter().zip(&self.in_leg) {
            let node = q(&format!("in {x}"));
            let _ = writeln!(out, "  {node} [shape=plaintext, label={}];", q(x));
            let _ = writeln!(out, "  {node} -> {} [style=dashed, arrowhead=none];", q(&self.vertices[v]));
        }
        for (y, &v) in self.outputs.iter().zip(&self.out_leg) {
            let node = q(&format!("out {y}"));
            let _ = writeln!(out, "  {node} [shape=plaintext, label={}];", q(y));
            let _ = writeln!(out, "  {} -> {node} [style=dashed, arrowhead=none];", q(&self.vertices[v]));
        }
        out.push_str("}\n");
        out
    }

    /// Vertices reachable from `start` by directed paths, `start` included.
    pub fn reachable_from(&self, start: usize) -> BTreeSet<usize> {
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
        }
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Whether a boundary-preserving graph isomorphism `self -> other`
    /// exists. Boundary points are matched by label.
    pub fn is_isomorphic(&self, other: &OpenGraph) -> bool {
        if self.inputs != other.inputs
            || self.outputs != other.outputs
            || self.vertices.len() != other.vertices.len()
            || self.edges.len() != other.edges.len()
        {
            return false;
        }
        let n = self.vertices.len();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let legs = self.in_leg.iter().zip(&other.in_leg).chain(self.out_leg.iter().zip(&other.out_leg));
        for (&a, &b) in legs {
            if map[a] == usize::MAX && !used[b] {
                map[a] = b;
                used[b] = true;
            } else if map[a] != b {
                return false;
            }
        }
        let degree = |g: &OpenGraph, v: usize| {
            (
                g.edges.iter().filter(|e| e.0 == v).count(),
                g.edges.iter().filter(|e| e.1 == v).count(),
                g.edges.contains(&(v, v)),
            )
        };
        let free: Vec<usize> = (0..n).filter(|&a| map[a] == usize::MAX).collect();
        iso_search(self, other, &free, 0, &mut map, &mut used, &degree)
    }
}

fn iso_search(
    a: &OpenGraph,
    b: &OpenGraph,
    free: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
    degree: &dyn Fn(&OpenGraph, usize) -> (usize, usize, bool),
) -> bool {
    let Some(&v) = free.get(depth) else {
        return a.edges.iter().all(|&(x, y)| b.edges.contains(&(map[x], map[y])));
    };
    for w in 0..b.vertices.len() {
        if used[w] || degree(a, v) != degree(b, w) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if iso_search(a, b, free, depth + 1, map, used, degree) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

#[derive(Default)]
struct Builder {
    inputs: Option<Vec<String>>,
    outputs: Option<Vec<String>>,
    vertices: Vec<String>,
    edges: Vec<(String, String, usize)>,
    in_legs: Vec<(String, String, usize)>,
    out_legs: Vec<(String, String, usize)>,
    extra: Vec<(usize, String)>,
}

impl Builder {
    fn line(&mut self, lineno: usize, line: &str) -> Result<(), GraphError> {
        let line = strip_comment(line);
        if line.is_empty() {
            return Ok(());
        }
        let err = |msg: &str| GraphError::from(ParseError::new(lineno, msg));
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "inputs" => self.inputs = Some(split_list(rest)),
            "outputs" => self.outputs = Some(split_list(rest)),
            "vertex" => self.vertices.extend(rest.split_whitespace().map(String::from)),
            "edge" => {
                let (a, b) = rest.split_once("->").ok_or_else(|| err("expected `edge <u> -> <v>`"))?;
                self.edges.push((a.trim().to_string(), b.trim().to_string(), lineno));
            }
            "in" | "out" => {
                let (x, v) = rest
                    .split_once('=')
                    .ok_or_else(|| err(&format!("expected `{keyword} <point> = <vertex>`")))?;
                let entry = (x.trim().to_string(), v.trim().to_string(), lineno);
                if keyword == "in" {
                    self.in_legs.push(entry);
                } else {
                    self.out_legs.push(entry);
                }
            }
            _ => self.extra.push((lineno, line.to_string())),
        }
        Ok(())
    }

    fn finish(self) -> Result<OpenGraph, GraphError> {
        if let Some((lineno, line)) = self.extra.first() {
            let keyword = line.split_whitespace().next().unwrap_or("");
            return Err(ParseError::new(*lineno, format!("unknown directive `{keyword}`")).into());
        }
        let inputs = self.inputs.unwrap_or_default();
        let outputs = self.outputs.unwrap_or_default();
        distinct(&self.vertices)?;
        let index: HashMap<&str, usize> = self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let vertex = |v: &str| index.get(v).copied().ok_or_else(|| GraphError::UnknownVertex(v.to_string()));
        let edges = self
            .edges
            .iter()
            .map(|(a, b, _)| Ok((vertex(a)?, vertex(b)?)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        let legs = |points: &[String], entries: &[(String, String, usize)]| -> Result<Vec<usize>, GraphError> {
            let mut found: BTreeMap<&str, Vec<usize>> = points.iter().map(|p| (p.as_str(), Vec::new())).collect();
            for (x, v, _) in entries {
                found
                    .get_mut(x.as_str())
                    .ok_or_else(|| GraphError::UnknownBoundary(x.clone()))?
                    .push(vertex(v)?);
            }
            points
                .iter()
                .map(|p| match found[p.as_str()].as_slice() {
                    [v] => Ok(*v),
                    vs => Err(GraphError::BadLeg(p.clone(), vs.len())),
                })
                .collect()
        };
        let in_leg = legs(&inputs, &self.in_legs)?;
        let out_leg = legs(&outputs, &self.out_legs)?;
        OpenGraph::new(inputs, outputs, self.vertices, edges, in_leg, out_leg)
    }
}

/// Glues `g : X -> Y` and `h : Y -> Z` along `Y`.
///
/// The vertices are the classes of `V_g + V_h` under the equivalence
/// generated by `out_g(y) ~ in_h(y)`, each named by its sorted member names
/// joined with `+`. A vertex name used on both sides is prefixed with `l.`
/// or `r.` respectively.
pub fn compose(g: &OpenGraph, h: &OpenGraph) -> Result<OpenGraph, GraphError> {
    let (gy, hy): (BTreeSet<&String>, BTreeSet<&String>) = (g.outputs.iter().collect(), h.inputs.iter().collect());
    if gy != hy {
        return Err(GraphError::BoundaryMismatch(format!(
            "outputs {{{}}} against inputs {{{}}}",
            g.outputs.join(","),
            h.inputs.join(",")
        )));
    }
    let ng = g.vertices.len();
    let total = ng + h.vertices.len();
    let shared: BTreeSet<&String> = g.vertices.iter().filter(|v| h.vertices.contains(v)).collect();
    let label = |i: usize| -> String {
        if i < ng {
            let v = &g.vertices[i];
            if shared.contains(v) { format!("l.{v}") } else { v.clone() }
        } else {
            let v = &h.vertices[i - ng];
            if shared.contains(v) { format!("r.{v}") } else { v.clone() }
        }
    };

    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }
    for (y, &v) in g.outputs.iter().zip(&g.out_leg) {
        let w = h.in_leg[h.inputs.iter().position(|x| x == y).expect("boundaries match")];
        let (a, b) = (find(&mut parent, v), find(&mut parent, ng + w));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut members: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for i in 0..total {
        let root = find(&mut parent, i);
        members.entry(root).or_default().push(label(i));
    }
    let mut classes: Vec<(String, usize)> = members
        .into_iter()
        .map(|(root, mut names)| {
            names.sort();
            (names.join("+"), root)
        })
        .collect();
    classes.sort();
    let slot: HashMap<usize, usize> = classes.iter().enumerate().map(|(i, &(_, r))| (r, i)).collect();
    let class: Vec<usize> = (0..total).map(|i| slot[&find(&mut parent, i)]).collect();
    let quotient = |i: usize| class[i];
    let edges: Vec<(usize, usize)> = g
        .edges
        .iter()
        .map(|&(a, b)| (quotient(a), quotient(b)))
        .chain(h.edges.iter().map(|&(a, b)| (quotient(ng + a), quotient(ng + b))))
        .collect();
    let in_leg = g.in_leg.iter().map(|&v| quotient(v)).collect();
    let out_leg = h.out_leg.iter().map(|&v| quotient(ng + v)).collect();
    OpenGraph::new(
        g.inputs.clone(),
        h.outputs.clone(),
        classes.into_iter().map(|(n, _)| n).collect(),
        edges,
        in_leg,
        out_leg,
    )
}

/// Pairs `(x, y)` such that a directed path of length at least zero leads
/// from the vertex of input `x` to the vertex of output `y`.
pub fn reach(g: &OpenGraph) -> Relation {
    let mut pairs = BTreeSet::new();
    for (x, &v) in g.in_leg.iter().enumerate() {
        let seen = g.reachable_from(v);
        for (y, w) in g.out_leg.iter().enumerate() {
            if seen.contains(w) {
                pairs.insert((x, y));
            }
        }
    }
    Relation::new(g.inputs.clone(), g.outputs.clone(), pairs).expect("pairs are typed")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub const G: &str = "inputs 1\noutputs 1,2,3\nvertex i1 o1 o2 o3\nedge i1 -> o1\nedge o2 -> o3\nin 1 = i1\nout 1 = o1\nout 2 = o2\nout 3 = o3\n";
    pub const H: &str = "inputs 1,2,3\noutputs 1\nvertex p1 p2 p3 q1\nedge p1 -> p2\nedge p3 -> q1\nin 1 = p1\nin 2 = p2\nin 3 = p3\nout 1 = q1\n";

    pub fn g() -> OpenGraph {
        OpenGraph::parse(G).unwrap()
    }

    pub fn h() -> OpenGraph {
        OpenGraph::parse(H).unwrap()
    }

    #[test]
    fn parse_round_trip() {
        let g = g();
        assert_eq!(g.vertices().len(), 4);
        assert_eq!(OpenGraph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            OpenGraph::parse("inputs a\nvertex v\n").unwrap_err(),
            GraphError::BadLeg("a".into(), 0)
        );
        assert_eq!(
            OpenGraph::parse("vertex v\nedge v -> w\n").unwrap_err(),
            GraphError::UnknownVertex("w".into())
        );
        assert!(matches!(
            OpenGraph::parse("vertex v\nloop v\n"),
            Err(GraphError::Parse(ParseError { line: 2, .. }))
        ));
        assert_eq!(
            OpenGraph::parse("outputs c\nvertex v\nout d = v\n").unwrap_err(),
            GraphError::UnknownBoundary("d".into())
        );
    }

    #[test]
    fn composite_of_the_example() {
        let gh = compose(&g(), &h()).unwrap();
        assert_eq!(gh.vertices(), ["i1", "o1+p1", "o2+p2", "o3+p3", "q1"]);
        assert_eq!(gh.vertices().len(), 4 + 4 - 3);
        assert_eq!(reach(&gh).to_string(), "{(1,1)}");
    }

    #[test]
    fn reachability_of_the_parts() {
        assert_eq!(reach(&g()).to_string(), "{(1,1)}");
        assert_eq!(reach(&h()).to_string(), "{(3,1)}");
    }

    #[test]
    fn identity_composition() {
        let g = g();
        let id = OpenGraph::identity(g.outputs());
        let gi = compose(&g, &id).unwrap();
        assert!(gi.is_isomorphic(&g));
        assert!(!gi.is_isomorphic(&h()));
        let ig = compose(&OpenGraph::identity(g.inputs()), &g).unwrap();
        assert!(ig.is_isomorphic(&g));
    }

    #[test]
    fn boundary_mismatch() {
        assert!(matches!(compose(&g(), &g()), Err(GraphError::BoundaryMismatch(_))));
    }

    #[test]
    fn shared_names_are_prefixed() {
        let a = OpenGraph::parse("inputs x\noutputs x\nvertex v w\nedge v -> w\nin x = v\nout x = w\n").unwrap();
        let aa = compose(&a, &a).unwrap();
        assert_eq!(aa.vertices(), ["l.v", "l.w+r.v", "r.w"]);
    }

    #[test]
    fn zero_length_paths_count() {
        let a = OpenGraph::parse("inputs x\noutputs y\nvertex v\nin x = v\nout y = v\n").unwrap();
        assert_eq!(reach(&a).to_string(), "{(x,y)}");
    }

    #[test]
    fn dot_has_legs() {
        let dot = g().to_dot("G");
        assert!(dot.contains("\"in 1\" -> \"i1\" [style=dashed, arrowhead=none];"));
        assert!(dot.contains("\"o2\" -> \"o3\";"));
    }
}
