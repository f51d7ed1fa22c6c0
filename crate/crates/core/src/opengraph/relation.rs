use std::collections::BTreeSet;
use std::fmt;

use super::GraphError;

/// A relation between two finite labelled sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    dom: Vec<String>,
    cod: Vec<String>,
    pairs: BTreeSet<(usize, usize)>,
}

impl Relation {
    pub fn new(dom: Vec<String>, cod: Vec<String>, pairs: BTreeSet<(usize, usize)>) -> Result<Relation, GraphError> {
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= dom.len() || b >= cod.len()) {
            return Err(GraphError::TypeMismatch(format!("pair #({a},{b}) is out of range")));
        }
        Ok(Relation { dom, cod, pairs })
    }

    pub fn total(dom: &[String], cod: &[String]) -> Relation {
        let pairs = (0..dom.len()).flat_map(|a| (0..cod.len()).map(move |b| (a, b))).collect();
        Relation {
            dom: dom.to_vec(),
            cod: cod.to_vec(),
            pairs,
        }
    }

    pub fn identity(set: &[String]) -> Relation {
        Relation {
            dom: set.to_vec(),
            cod: set.to_vec(),
            pairs: (0..set.len()).map(|a| (a, a)).collect(),
        }
    }

    pub fn dom(&self) -> &[String] {
        &self.dom
    }

    pub fn cod(&self) -> &[String] {
        &self.cod
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    /// `(a,b)` with labels.
    pub fn pair_label(&self, (a, b): (usize, usize)) -> String {
        format!("({},{})", self.dom[a], self.cod[b])
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|&p| self.pair_label(p)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Relational composite: `(x, z)` whenever `(x, y)` and `(y, z)` for some `y`.
pub fn compose_rel(r: &Relation, s: &Relation) -> Result<Relation, GraphError> {
    if r.cod != s.dom {
        return Err(GraphError::TypeMismatch(format!(
            "{{{}}} against {{{}}}",
            r.cod.join(","),
            s.dom.join(",")
        )));
    }
    let pairs = r
        .pairs
        .iter()
        .flat_map(|&(x, y)| s.pairs.range((y, 0)..(y + 1, 0)).map(move |&(_, z)| (x, z)))
        .collect();
    Ok(Relation {
        dom: r.dom.clone(),
        cod: s.cod.clone(),
        pairs,
    })
}
