//! States `I -> A` in two finite monoidal settings and the obstructions to
//! their compositionality.
//!
//! In the cartesian setting a state of a finite set is one of its elements
//! and the laxator is a bijection. Over GF(2) a state of a space of
//! dimension `d` is one of its `2^d` vectors, written as a bit string with
//! coordinate 0 first; the tensor of spaces of dimensions `m` and `n` is
//! flattened row-major, so `(a ⊗ b)[i*n + j] = a[i] b[j]`.

mod linear;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::homotopy::{Level, ObstructionReport};
use crate::order::{OrderError, SubsetMap, SubsetQuotient};
use crate::setcat::{pi0_subsets, pi1_function, FiniteFunction, SetError, EMPTY_LABEL};
use crate::ParseError;

pub use linear::LinearMap;

/// Largest dimension of a single factor.
pub const DIMENSION_CAP: usize = 6;
/// Largest dimension of a tensor product.
pub const PRODUCT_DIMENSION_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatesError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("{0}")]
    WrongContext(String),
    #[error("{0}")]
    TypeMismatch(String),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Order(#[from] OrderError),
}

impl StatesError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Parse(_) => "ParseError",
            Self::DimensionCap { .. } => "DimensionCap",
            Self::WrongContext(_) => "WrongContext",
            Self::TypeMismatch(_) => "TypeMismatch",
            Self::Set(e) => e.name(),
            Self::Order(e) => e.name(),
        }
    }
}

/// An object of one of the two settings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Set(Vec<String>),
    Space(usize),
}

/// A pair of objects `A`, `B` in one setting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StateContext {
    Cartesian { a: Vec<String>, b: Vec<String> },
    Gf2 { a: usize, b: usize },
}

/// The states of an object, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSet {
    pub object: Object,
    pub states: Vec<String>,
}

fn check_dims(a: usize, b: usize) -> Result<(), StatesError> {
    for d in [a, b] {
        if d > DIMENSION_CAP {
            return Err(StatesError::DimensionCap { dim: d, cap: DIMENSION_CAP });
        }
    }
    if a * b > PRODUCT_DIMENSION_CAP {
        return Err(StatesError::DimensionCap { dim: a * b, cap: PRODUCT_DIMENSION_CAP });
    }
    Ok(())
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect()
}

/// `v` as a bit string of length `dim`; the single vector of dimension 0 is `()`.
pub fn vector_label(v: u64, dim: usize) -> String {
    if dim == 0 {
        return "()".into();
    }
    (0..dim).map(|i| if v >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// Outer product flattened row-major.
pub fn tensor(x: u64, m: usize, y: u64, n: usize) -> u64 {
    let mut out = 0;
    for i in 0..m {
        if x >> i & 1 == 1 {
            out |= y << (i * n);
        }
    }
    debug_assert!(n == 0 || out < 1u64 << (m * n));
    out
}

/// Whether `v`, as an `m × n` matrix, has rank at most one.
pub fn is_separable(v: u64, m: usize, n: usize) -> bool {
    let rows: Vec<u64> = (0..m).map(|i| v >> (i * n) & ((1u64 << n) - 1)).collect();
    linear::rank(rows) <= 1
}

impl StateContext {
    pub fn cartesian(a: Vec<String>, b: Vec<String>) -> Result<StateContext, StatesError> {
        for set in [&a, &b] {
            let mut seen = BTreeSet::new();
            if let Some(x) = set.iter().find(|x| !seen.insert(*x)) {
                return Err(SetError::DuplicateElement(x.clone()).into());
            }
        }
        Ok(StateContext::Cartesian { a, b })
    }

    pub fn gf2(a: usize, b: usize) -> Result<StateContext, StatesError> {
        check_dims(a, b)?;
        Ok(StateContext::Gf2 { a, b })
    }

    /// Reads `a,b|c,d`.
    pub fn parse_sets(src: &str) -> Result<StateContext, StatesError> {
        let (a, b) = src
            .split_once('|')
            .ok_or_else(|| ParseError::new(1, "expected two sets separated by `|`"))?;
        StateContext::cartesian(split_list(a), split_list(b))
    }

    /// Reads `m,n`.
    pub fn parse_dims(src: &str) -> Result<StateContext, StatesError> {
        let dims = src
            .split(',')
            .map(|d| d.trim().parse::<usize>().map_err(|_| ParseError::new(1, format!("bad dimension `{}`", d.trim()))))
            .collect::<Result<Vec<_>, _>>()?;
        match dims[..] {
            [a, b] => StateContext::gf2(a, b),
            _ => Err(ParseError::new(1, "expected two dimensions").into()),
        }
    }

    pub fn a(&self) -> Object {
        match self {
            Self::Cartesian { a, .. } => Object::Set(a.clone()),
            Self::Gf2 { a, .. } => Object::Space(*a),
        }
    }

    pub fn b(&self) -> Object {
        match self {
            Self::Cartesian { b, .. } => Object::Set(b.clone()),
            Self::Gf2 { b, .. } => Object::Space(*b),
        }
    }

    /// `A ⊗ B`.
    pub fn product(&self) -> Object {
        match self {
            Self::Cartesian { a, b } => Object::Set(
                a.iter()
                    .flat_map(|x| b.iter().map(move |y| format!("({x},{y})")))
                    .collect(),
            ),
            Self::Gf2 { a, b } => Object::Space(a * b),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Self::Cartesian { a, b } => format!("cartesian {{{}}} x {{{}}}", a.join(","), b.join(",")),
            Self::Gf2 { a, b } => format!("gf2 dims {a},{b}"),
        }
    }

    /// `ψ_A, ψ_B ↦ ψ_A ⊗ ψ_B`.
    pub fn laxator(&self) -> FiniteFunction {
        let (sa, sb, sp) = (states_of(&self.a()), states_of(&self.b()), states_of(&self.product()));
        let dom = sa
            .states
            .iter()
            .flat_map(|x| sb.states.iter().map(move |y| format!("({x},{y})")))
            .collect();
        let map = match self {
            Self::Cartesian { a, b } => (0..a.len() * b.len()).collect(),
            Self::Gf2 { a, b } => (0..1u64 << a)
                .flat_map(|x| (0..1u64 << b).map(move |y| tensor(x, *a, y, *b) as usize))
                .collect(),
        };
        FiniteFunction::new("laxator", dom, sp.states, map).expect("labels are distinct")
    }

    /// The states of `A ⊗ B` with the separable ones collapsed.
    pub fn pi0_subsets(&self) -> SubsetQuotient {
        pi0_subsets(&self.laxator())
    }

    pub fn obstructions(&self, level: Level) -> ObstructionReport {
        let lax = self.laxator();
        match level {
            Level::Zero => ObstructionReport::from_subsets(
                format!("pi0 of the laxator for {}", self.describe()),
                pi0_subsets(&lax),
            ),
            Level::One => {
                let mut r = pi1_function(&lax);
                r.context = format!("pi1 of the laxator for {}", self.describe());
                r
            }
        }
    }

    /// States of `A ⊗ B` that are no tensor of states, found with the rank
    /// test rather than the laxator's image.
    pub fn non_separable(&self) -> Vec<String> {
        match self {
            Self::Cartesian { .. } => Vec::new(),
            Self::Gf2 { a, b } => (0..1u64 << (a * b))
                .filter(|&v| !is_separable(v, *a, *b))
                .map(|v| vector_label(v, a * b))
                .collect(),
        }
    }

    /// The cartesian splitting `A × B -> states(A) × states(B)`.
    pub fn oplaxator(&self) -> Result<FiniteFunction, StatesError> {
        match self {
            Self::Gf2 { .. } => Err(StatesError::WrongContext(
                "GF(2) spaces have no projections onto factors of a tensor".into(),
            )),
            Self::Cartesian { a, b } => {
                let Object::Set(prod) = self.product() else { unreachable!() };
                let pairs = prod.clone();
                FiniteFunction::new("oplaxator", prod, pairs, (0..a.len() * b.len()).collect()).map_err(Into::into)
            }
        }
    }
}

pub fn states_of(object: &Object) -> StateSet {
    let states = match object {
        Object::Set(xs) => xs.clone(),
        Object::Space(d) => (0..1u64 << d).map(|v| vector_label(v, *d)).collect(),
    };
    StateSet { object: object.clone(), states }
}

/// A morphism of one of the two settings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalMap {
    Function(FiniteFunction),
    Linear(LinearMap),
}

/// The outcome of acting on `A ⊗ B` with `f ⊗ g`.
#[derive(Debug, Clone)]
pub struct LocalAction {
    pub target: StateContext,
    pub map: SubsetMap,
}

/// Sends each state of `A ⊗ B` to its image under `f ⊗ g` and reads off the
/// map between `π₀` obstruction posets.
pub fn local_action(ctx: &StateContext, f: &LocalMap, g: &LocalMap) -> Result<LocalAction, StatesError> {
    let (target, image): (StateContext, Vec<usize>) = match (ctx, f, g) {
        (StateContext::Cartesian { a, b }, LocalMap::Function(f), LocalMap::Function(g)) => {
            if f.dom() != &a[..] || g.dom() != &b[..] {
                return Err(StatesError::TypeMismatch(format!(
                    "local maps start at {{{}}} and {{{}}}",
                    f.dom().join(","),
                    g.dom().join(",")
                )));
            }
            let target = StateContext::cartesian(f.cod().to_vec(), g.cod().to_vec())?;
            let m = g.cod().len();
            let image = (0..a.len())
                .flat_map(|x| (0..b.len()).map(move |y| f.apply(x) * m + g.apply(y)))
                .collect();
            (target, image)
        }
        (StateContext::Gf2 { a, b }, LocalMap::Linear(f), LocalMap::Linear(g)) => {
            if f.cols() != *a || g.cols() != *b {
                return Err(StatesError::TypeMismatch(format!(
                    "local maps start at dims {},{} instead of {a},{b}",
                    f.cols(),
                    g.cols()
                )));
            }
            let target = StateContext::gf2(f.rows(), g.rows())?;
            let image = (0..1u64 << (a * b)).map(|v| f.tensor_apply(g, v) as usize).collect();
            (target, image)
        }
        _ => {
            return Err(StatesError::WrongContext(
                "local maps must be functions for sets and matrices for GF(2)".into(),
            ))
        }
    };
    let map = SubsetMap::new(ctx.pi0_subsets(), target.pi0_subsets(), image)?;
    Ok(LocalAction { target, map })
}

impl LocalAction {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "local action into {}\nsource obstructions: {}\ntarget obstructions: {}\n",
            self.target.describe(),
            self.map.source().obstruction_generators().len(),
            self.map.target().obstruction_generators().len()
        );
        for (from, to, trivialised) in self.map.minimal_fates() {
            let mark = if trivialised { " (trivialised)" } else { "" };
            out.push_str(&format!("{from} -> {to}{mark}\n"));
        }
        out
    }

    pub fn to_interchange(&self) -> serde_json::Value {
        let fates: Vec<serde_json::Value> = self
            .map
            .minimal_fates()
            .into_iter()
            .map(|(from, to, t)| serde_json::json!({ "from": from, "to": to, "trivialised": t }))
            .collect();
        serde_json::json!({
            "version": crate::homotopy::INTERCHANGE_VERSION,
            "target": self.target.describe(),
            "basepoint": EMPTY_LABEL,
            "trivialising": self.map.is_trivialising(),
            "fates": fates,
        })
    }
}
