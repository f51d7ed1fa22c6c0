use super::{OrderError, PointedPoset};

/// A monotone, basepoint-preserving map between pointed posets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedMap {
    source: PointedPoset,
    target: PointedPoset,
    map: Vec<usize>,
}

impl PointedMap {
    pub fn new(source: PointedPoset, target: PointedPoset, map: Vec<usize>) -> Result<PointedMap, OrderError> {
        if map.len() != source.len() {
            return Err(OrderError::IllDefined("map is not total".into()));
        }
        if let Some(&b) = map.iter().find(|&&b| b >= target.len()) {
            return Err(OrderError::UnknownElement(format!("#{b}")));
        }
        if map[source.basepoint()] != target.basepoint() {
            return Err(OrderError::BasepointNotPreserved);
        }
        let (p, q) = (source.poset(), target.poset());
        for a in 0..p.len() {
            for b in 0..p.len() {
                if p.leq(a, b) && !q.leq(map[a], map[b]) {
                    return Err(OrderError::NotMonotone(p.name(a).to_string(), p.name(b).to_string()));
                }
            }
        }
        Ok(PointedMap { source, target, map })
    }

    pub fn identity(p: &PointedPoset) -> PointedMap {
        PointedMap {
            source: p.clone(),
            target: p.clone(),
            map: (0..p.len()).collect(),
        }
    }

    pub fn source(&self) -> &PointedPoset {
        &self.source
    }

    pub fn target(&self) -> &PointedPoset {
        &self.target
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// `(source element, target element)` by name.
    pub fn named_pairs(&self) -> Vec<(String, String)> {
        self.map
            .iter()
            .enumerate()
            .map(|(a, &b)| {
                (
                    self.source.poset().name(a).to_string(),
                    self.target.poset().name(b).to_string(),
                )
            })
            .collect()
    }

    /// Diagrammatic composite, first `self` then `next`. The middle posets
    /// must agree.
    pub fn then(&self, next: &PointedMap) -> Result<PointedMap, OrderError> {
        if self.target != next.source {
            return Err(OrderError::IllDefined("maps are not composable".into()));
        }
        Ok(PointedMap {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&b| next.map[b]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map.iter().enumerate().all(|(a, &b)| a == b)
    }

    /// Whether every element goes to the basepoint.
    pub fn is_trivialising(&self) -> bool {
        self.map.iter().all(|&b| b == self.target.basepoint())
    }
}
