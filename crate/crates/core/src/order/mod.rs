//! Finite posets, pointed posets and the constructions the homotopy posets are
//! computed from: poset reflection of a category and collapse of a lower set.

mod dot;
mod iso;
mod map;
mod subsets;

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::fincat::{FinCat, Mor, MorphismEntry, Obj};

pub use dot::hasse_dot;
pub(crate) use dot::quote;
pub use iso::iso_pointed;
pub use map::PointedMap;
pub use subsets::{SubsetMap, SubsetQuotient};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("relation is not antisymmetric on `{0}`, `{1}`")]
    NotAntisymmetric(String, String),
    #[error("relation is not transitive on `{0}` <= `{1}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("set to collapse is not down-closed: `{0}` is missing")]
    NotDownClosed(String),
    #[error("set to collapse is empty")]
    EmptyCollapseSet,
    #[error("basepoint label `{0}` collides with a surviving element")]
    LabelCollision(String),
    #[error("map is not monotone: `{0}` <= `{1}` is not preserved")]
    NotMonotone(String, String),
    #[error("map does not preserve the basepoint")]
    BasepointNotPreserved,
    #[error("map is not well defined on `{0}`")]
    IllDefined(String),
    #[error("poset over {size} elements is too large to list (cap {cap})")]
    TooLarge { size: String, cap: usize },
}

impl OrderError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::DuplicateElement(_) => "DuplicateElement",
            Self::UnknownElement(_) => "UnknownElement",
            Self::NotReflexive(_) => "NotReflexive",
            Self::NotAntisymmetric(..) => "NotAntisymmetric",
            Self::NotTransitive(..) => "NotTransitive",
            Self::NotDownClosed(_) => "NotDownClosed",
            Self::EmptyCollapseSet => "EmptyCollapseSet",
            Self::LabelCollision(_) => "LabelCollision",
            Self::NotMonotone(..) => "NotMonotone",
            Self::BasepointNotPreserved => "BasepointNotPreserved",
            Self::IllDefined(_) => "IllDefined",
            Self::TooLarge { .. } => "TooLarge",
        }
    }
}

/// A finite partial order over named elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    leq: Vec<bool>,
}

impl Poset {
    /// Builds the poset with the given order pairs `(a, b)` meaning `a <= b`.
    /// Reflexive pairs are added; the relation must already be transitive.
    pub fn new(
        elements: Vec<String>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Poset, OrderError> {
        let n = elements.len();
        let mut seen = BTreeSet::new();
        for e in &elements {
            if !seen.insert(e) {
                return Err(OrderError::DuplicateElement(e.clone()));
            }
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(OrderError::UnknownElement(format!("#{}", a.max(b))));
            }
            leq[a * n + b] = true;
        }
        let p = Poset { elements, leq };
        p.check()?;
        Ok(p)
    }

    /// Builds a poset from named pairs.
    pub fn from_names(elements: &[&str], pairs: &[(&str, &str)]) -> Result<Poset, OrderError> {
        let index: HashMap<&str, usize> = elements.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let idx = |s: &str| index.get(s).copied().ok_or_else(|| OrderError::UnknownElement(s.to_string()));
        let pairs = pairs
            .iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<Vec<_>, OrderError>>()?;
        Poset::new(elements.iter().map(|s| s.to_string()).collect(), pairs)
    }

    pub(crate) fn from_matrix_unchecked(elements: Vec<String>, leq: Vec<bool>) -> Poset {
        debug_assert_eq!(leq.len(), elements.len() * elements.len());
        Poset { elements, leq }
    }

    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn check(&self) -> Result<(), OrderError> {
        let n = self.len();
        for a in 0..n {
            if !self.leq(a, a) {
                return Err(OrderError::NotReflexive(self.elements[a].clone()));
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err(OrderError::NotAntisymmetric(
                        self.elements[a].clone(),
                        self.elements[b].clone(),
                    ));
                }
                if !self.leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.leq(b, c) && !self.leq(a, c) {
                        return Err(OrderError::NotTransitive(
                            self.elements[a].clone(),
                            self.elements[b].clone(),
                            self.elements[c].clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// All pairs `a <= b`, including reflexive ones.
    pub fn leq_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.leq(a, b))
            .collect()
    }

    /// The least down-closed superset of `set`.
    pub fn lower_closure(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.len())
            .filter(|&a| set.iter().any(|&s| self.leq(a, s)))
            .collect()
    }

    pub fn is_down_closed(&self, set: &BTreeSet<usize>) -> bool {
        self.lower_closure(set) == *set
    }

    /// Minimal elements of `set` under the induced order.
    pub fn minimal_in(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        set.iter()
            .copied()
            .filter(|&a| !set.iter().any(|&b| self.lt(b, a)))
            .collect()
    }

    /// The cover relation (transitive reduction of `<`).
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    covers.push((a, b));
                }
            }
        }
        covers
    }

    /// Reflexive-transitive closure of a relation, as a poset, if antisymmetric.
    pub fn from_covers(elements: Vec<String>, covers: &[(usize, usize)]) -> Result<Poset, OrderError> {
        let n = elements.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in covers {
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let p = Poset { elements, leq };
        p.check()?;
        Ok(p)
    }

    /// Height of each element: length of the longest chain below it.
    pub fn levels(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| (0..n).filter(|&b| self.leq(b, a)).count());
        let mut level = vec![0; n];
        for &a in &order {
            level[a] = (0..n)
                .filter(|&b| self.lt(b, a))
                .map(|b| level[b] + 1)
                .max()
                .unwrap_or(0);
        }
        level
    }

    /// The poset as a thin category: one morphism `a<=b` per order pair.
    pub fn to_category(&self) -> FinCat {
        let pairs = self.leq_pairs();
        let index: HashMap<(usize, usize), Mor> = pairs.iter().enumerate().map(|(i, &p)| (p, Mor(i))).collect();
        let morphisms = pairs
            .iter()
            .map(|&(a, b)| MorphismEntry {
                name: format!("{}<={}", self.name(a), self.name(b)),
                dom: Obj(a),
                cod: Obj(b),
            })
            .collect();
        let identities = (0..self.len()).map(|a| index[&(a, a)]).collect();
        FinCat::from_fn(self.elements.clone(), morphisms, identities, |f, g| {
            index[&(pairs[f.0].0, pairs[g.0].1)]
        })
    }
}

/// A poset with a distinguished basepoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedPoset {
    poset: Poset,
    basepoint: usize,
}

impl PointedPoset {
    pub fn new(poset: Poset, basepoint: usize) -> Result<PointedPoset, OrderError> {
        if basepoint >= poset.len() {
            return Err(OrderError::UnknownElement(format!("#{basepoint}")));
        }
        Ok(PointedPoset { poset, basepoint })
    }

    /// The one-element pointed poset.
    pub fn trivial(label: &str) -> PointedPoset {
        PointedPoset {
            poset: Poset::from_matrix_unchecked(vec![label.to_string()], vec![true]),
            basepoint: 0,
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn basepoint_name(&self) -> &str {
        self.poset.name(self.basepoint)
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.poset.len() == 1
    }

    /// Minimal elements among the non-basepoint elements.
    pub fn minimal_obstructions(&self) -> BTreeSet<usize> {
        let rest: BTreeSet<usize> = (0..self.len()).filter(|&a| a != self.basepoint).collect();
        self.poset.minimal_in(&rest)
    }

    /// Whether no element lies strictly below the basepoint.
    pub fn basepoint_is_minimal(&self) -> bool {
        (0..self.len()).all(|a| !self.poset.lt(a, self.basepoint))
    }

    /// Whether the order is discrete.
    pub fn is_discrete(&self) -> bool {
        self.poset.hasse().is_empty()
    }
}

/// Poset reflection of a category with the class of each object.
#[derive(Debug, Clone)]
pub struct Reflection {
    pub poset: Poset,
    pub class_of: Vec<usize>,
}

/// Classes of mutually reachable objects, ordered by existence of morphisms.
///
/// Each class is named after its lexicographically least object; elements are
/// listed in lexicographic order of those names.
pub fn poset_reflection(c: &FinCat) -> Reflection {
    let n = c.object_count();
    let mut rep = vec![usize::MAX; n];
    for x in 0..n {
        if rep[x] != usize::MAX {
            continue;
        }
        for (y, r) in rep.iter_mut().enumerate().skip(x) {
            if *r == usize::MAX && c.has_morphism(Obj(x), Obj(y)) && c.has_morphism(Obj(y), Obj(x)) {
                *r = x;
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_slot = vec![usize::MAX; n];
    for x in 0..n {
        if rep[x] == x {
            class_slot[x] = classes.len();
            classes.push(Vec::new());
        }
        classes[class_slot[rep[x]]].push(x);
    }
    let mut named: Vec<(String, usize)> = classes
        .iter()
        .enumerate()
        .map(|(i, members)| {
            let least = members
                .iter()
                .map(|&m| c.object_name(Obj(m)))
                .min()
                .expect("classes are non-empty");
            (least.to_string(), i)
        })
        .collect();
    named.sort();
    let mut position = vec![0; classes.len()];
    for (pos, (_, i)) in named.iter().enumerate() {
        position[*i] = pos;
    }
    let class_of: Vec<usize> = (0..n).map(|x| position[class_slot[rep[x]]]).collect();
    let reps: Vec<usize> = {
        let mut r = vec![0; classes.len()];
        for (i, members) in classes.iter().enumerate() {
            r[position[i]] = members[0];
        }
        r
    };
    let k = reps.len();
    let mut leq = vec![false; k * k];
    for a in 0..k {
        for b in 0..k {
            leq[a * k + b] = c.has_morphism(Obj(reps[a]), Obj(reps[b]));
        }
    }
    Reflection {
        poset: Poset::from_matrix_unchecked(named.into_iter().map(|(s, _)| s).collect(), leq),
        class_of,
    }
}

/// Result of collapsing a lower set: the pointed poset and where every old
/// element went.
#[derive(Debug, Clone)]
pub struct Collapse {
    pub pointed: PointedPoset,
    pub image: Vec<usize>,
}

/// Identifies the elements of the down-closed set `lower` into a single
/// basepoint named `label`.
///
/// The basepoint sits below `e` exactly when some member of `lower` does; it
/// is never above another element. Survivors keep their names and their
/// order, listed after the basepoint in their original order.
pub fn collapse_lower(p: &Poset, lower: &BTreeSet<usize>, label: &str) -> Result<Collapse, OrderError> {
    if lower.is_empty() {
        return Err(OrderError::EmptyCollapseSet);
    }
    if let Some(&a) = lower.iter().find(|&&a| a >= p.len()) {
        return Err(OrderError::UnknownElement(format!("#{a}")));
    }
    let closure = p.lower_closure(lower);
    if let Some(&missing) = closure.difference(lower).next() {
        return Err(OrderError::NotDownClosed(p.name(missing).to_string()));
    }
    let survivors: Vec<usize> = (0..p.len()).filter(|a| !lower.contains(a)).collect();
    if survivors.iter().any(|&a| p.name(a) == label) {
        return Err(OrderError::LabelCollision(label.to_string()));
    }
    let n = survivors.len() + 1;
    let mut image = vec![0; p.len()];
    for (i, &a) in survivors.iter().enumerate() {
        image[a] = i + 1;
    }
    let mut elements = Vec::with_capacity(n);
    elements.push(label.to_string());
    elements.extend(survivors.iter().map(|&a| p.name(a).to_string()));
    let mut leq = vec![false; n * n];
    leq[0] = true;
    for (i, &a) in survivors.iter().enumerate() {
        leq[i + 1] = lower.iter().any(|&l| p.leq(l, a));
        for (j, &b) in survivors.iter().enumerate() {
            leq[(i + 1) * n + j + 1] = p.leq(a, b);
        }
    }
    Ok(Collapse {
        pointed: PointedPoset {
            poset: Poset::from_matrix_unchecked(elements, leq),
            basepoint: 0,
        },
        image,
    })
}
