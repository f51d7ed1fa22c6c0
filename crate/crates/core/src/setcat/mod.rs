//! Functions between finite sets, their kernel pairs, and the subset
//! descriptions of the homotopy posets of a function seen as an object of a
//! slice of sets.
//!
//! Over `Y`, `π₀` at `f : X -> Y` is the powerset of `Y` with every subset of
//! the image collapsed; `π₁` is the powerset of the kernel pair with every
//! subset of the diagonal collapsed.

mod ambient;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::homotopy::ObstructionReport;
use crate::order::SubsetQuotient;
use crate::ParseError;

pub use ambient::{ambient_morphism, finset_ambient, finset_ambient_with_cap, DEFAULT_AMBIENT_CAP};

/// Label of the collapsed class in the subset posets.
pub const EMPTY_LABEL: &str = "{}";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("function is not total: `{0}` has {1} images")]
    NotTotal(String, usize),
    #[error("ambient category of sets up to {k} elements exceeds the cap of {cap}")]
    CapExceeded { k: usize, cap: usize },
}

impl SetError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Parse(_) => "ParseError",
            Self::DuplicateElement(_) => "DuplicateElement",
            Self::UnknownElement(_) => "UnknownElement",
            Self::NotTotal(..) => "NotTotal",
            Self::CapExceeded { .. } => "CapExceeded",
        }
    }
}

/// A total function between finite sets of labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteFunction {
    name: String,
    dom: Vec<String>,
    cod: Vec<String>,
    map: Vec<usize>,
}

fn check_distinct(labels: &[String]) -> Result<(), SetError> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(SetError::DuplicateElement(l.clone()));
        }
    }
    Ok(())
}

impl FiniteFunction {
    pub fn new(name: &str, dom: Vec<String>, cod: Vec<String>, map: Vec<usize>) -> Result<Self, SetError> {
        check_distinct(&dom)?;
        check_distinct(&cod)?;
        if map.len() != dom.len() {
            return Err(SetError::NotTotal(name.to_string(), map.len()));
        }
        if let Some(&b) = map.iter().find(|&&b| b >= cod.len()) {
            return Err(SetError::UnknownElement(format!("#{b}")));
        }
        Ok(FiniteFunction {
            name: name.to_string(),
            dom,
            cod,
            map,
        })
    }

    /// `{0..n-1} -> {0..m-1}` with elements labelled by their index.
    pub fn canonical(n: usize, m: usize, map: Vec<usize>) -> Result<Self, SetError> {
        let labels = |k: usize| (0..k).map(|i| i.to_string()).collect();
        let name = format!("{n}->{m}:{}", map.iter().map(|b| b.to_string()).collect::<String>());
        FiniteFunction::new(&name, labels(n), labels(m), map)
    }

    /// Every function `{0..n-1} -> {0..m-1}`, images listed lexicographically.
    pub fn all_canonical(n: usize, m: usize) -> Vec<FiniteFunction> {
        let count = m.checked_pow(n as u32).unwrap_or(0);
        (0..count)
            .map(|mut code| {
                let mut map = vec![0; n];
                for slot in map.iter_mut().rev() {
                    *slot = code % m;
                    code /= m;
                }
                FiniteFunction::canonical(n, m, map).expect("canonical function")
            })
            .collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dom(&self) -> &[String] {
        &self.dom
    }

    pub fn cod(&self) -> &[String] {
        &self.cod
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self) -> BTreeSet<usize> {
        self.map.iter().copied().collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.cod.len()
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.dom.len()
    }

    /// Parses `fn <name> : {a,b} -> {c,d} ; a=>c, b=>c`. The declaration may
    /// span several lines; `#` starts a comment.
    pub fn parse(src: &str) -> Result<FiniteFunction, SetError> {
        let mut first = None;
        let mut body = String::new();
        for (lineno, line) in src.lines().enumerate() {
            let line = crate::fincat::text::strip_comment(line);
            if !line.is_empty() {
                first.get_or_insert(lineno + 1);
                body.push_str(line);
                body.push(' ');
            }
        }
        let line = first.unwrap_or(1);
        let err = |msg: &str| SetError::from(ParseError::new(line, msg));
        let rest = body
            .trim()
            .strip_prefix("fn")
            .filter(|r| r.starts_with(char::is_whitespace))
            .ok_or_else(|| err("expected `fn <name> : {..} -> {..} ; ..`"))?;
        // names may themselves contain `:` or `->`, so the name is the first token
        let rest = rest.trim_start();
        let (token, tail) = rest.split_at(rest.find(char::is_whitespace).unwrap_or(rest.len()));
        let (name, rest) = match (tail.trim_start().strip_prefix(':'), token.strip_suffix(':')) {
            (Some(rest), _) => (token, rest),
            (None, Some(name)) => (name, tail),
            (None, None) => return Err(err("expected `:` after the name")),
        };
        if name.is_empty() {
            return Err(err("bad function name"));
        }
        let (sig, mapping) = rest.split_once(';').unwrap_or((rest, ""));
        let close = sig.find('}').ok_or_else(|| err("expected `{..} -> {..}`"))?;
        let (dom, cod) = sig.split_at(close + 1);
        let cod = cod.trim_start().strip_prefix("->").ok_or_else(|| err("expected `{..} -> {..}`"))?;
        let dom = parse_set(dom).ok_or_else(|| err("bad domain set"))?;
        let cod = parse_set(cod).ok_or_else(|| err("bad codomain set"))?;
        check_distinct(&dom)?;
        check_distinct(&cod)?;
        let cod_index: HashMap<&str, usize> = cod.iter().enumerate().map(|(i, c)| (c.as_str(), i)).collect();
        let dom_index: HashMap<&str, usize> = dom.iter().enumerate().map(|(i, c)| (c.as_str(), i)).collect();
        let mut images: Vec<Vec<usize>> = vec![Vec::new(); dom.len()];
        for entry in mapping.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (a, b) = entry.split_once("=>").ok_or_else(|| err("expected `a=>b`"))?;
            let (a, b) = (a.trim(), b.trim());
            let i = *dom_index.get(a).ok_or_else(|| SetError::UnknownElement(a.to_string()))?;
            let j = *cod_index.get(b).ok_or_else(|| SetError::UnknownElement(b.to_string()))?;
            images[i].push(j);
        }
        let mut map = Vec::with_capacity(dom.len());
        for (i, imgs) in images.iter().enumerate() {
            match imgs.as_slice() {
                [j] => map.push(*j),
                _ => return Err(SetError::NotTotal(dom[i].clone(), imgs.len())),
            }
        }
        FiniteFunction::new(name, dom, cod, map)
    }
}

fn parse_set(s: &str) -> Option<Vec<String>> {
    let inner = s.trim().strip_prefix('{')?.strip_suffix('}')?;
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    inner
        .split(',')
        .map(|e| {
            let e = e.trim();
            (!e.is_empty() && !e.contains(char::is_whitespace)).then(|| e.to_string())
        })
        .collect()
}

impl fmt::Display for FiniteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .map
            .iter()
            .enumerate()
            .map(|(i, &j)| format!("{}=>{}", self.dom[i], self.cod[j]))
            .collect();
        write!(
            f,
            "fn {} : {{{}}} -> {{{}}} ; {}",
            self.name,
            self.dom.join(","),
            self.cod.join(","),
            pairs.join(", ")
        )
    }
}

/// Pairs `(a, b)` of domain elements with equal image, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelPair {
    pairs: Vec<(usize, usize)>,
    labels: Vec<String>,
}

impl KernelPair {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `(a,b)` with the domain's labels.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn first(&self, i: usize) -> usize {
        self.pairs[i].0
    }

    pub fn second(&self, i: usize) -> usize {
        self.pairs[i].1
    }

    pub fn diagonal(&self) -> BTreeSet<usize> {
        (0..self.pairs.len()).filter(|&i| self.pairs[i].0 == self.pairs[i].1).collect()
    }

    pub fn index_of(&self, a: usize, b: usize) -> Option<usize> {
        self.pairs.binary_search(&(a, b)).ok()
    }

    /// Whether the pairs form an equivalence relation on `0..n`.
    pub fn is_equivalence(&self, n: usize) -> bool {
        let has = |a, b| self.index_of(a, b).is_some();
        (0..n).all(|a| has(a, a))
            && self.pairs.iter().all(|&(a, b)| has(b, a))
            && self
                .pairs
                .iter()
                .all(|&(a, b)| self.pairs.iter().filter(|p| p.0 == b).all(|&(_, c)| has(a, c)))
    }
}

pub fn kernel_pair(f: &FiniteFunction) -> KernelPair {
    let n = f.dom.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| f.map[a] == f.map[b])
        .collect();
    let labels = pairs
        .iter()
        .map(|&(a, b)| format!("({},{})", f.dom[a], f.dom[b]))
        .collect();
    KernelPair { pairs, labels }
}

/// Subsets of the codomain, those inside the image collapsed.
pub fn pi0_subsets(f: &FiniteFunction) -> SubsetQuotient {
    SubsetQuotient::new(f.cod.clone(), f.image(), EMPTY_LABEL).expect("codomain labels are distinct")
}

/// Subsets of the kernel pair, those inside the diagonal collapsed.
pub fn pi1_subsets(f: &FiniteFunction) -> SubsetQuotient {
    let k = kernel_pair(f);
    let diagonal = k.diagonal();
    SubsetQuotient::new(k.labels, diagonal, EMPTY_LABEL).expect("pair labels are distinct")
}

pub fn pi0_function(f: &FiniteFunction) -> ObstructionReport {
    ObstructionReport::from_subsets(format!("pi0 of {} over its codomain", f.name), pi0_subsets(f))
}

pub fn pi1_function(f: &FiniteFunction) -> ObstructionReport {
    ObstructionReport::from_subsets(format!("pi1 of {} over its codomain", f.name), pi1_subsets(f))
}
