//! Zeroth and first homotopy posets of a category over an object.
//!
//! `π₀(C, x)` is the poset reflection of `C` with the lower set of the class
//! of `x` collapsed to a basepoint `[x]`. Its other elements are obstructions
//! to `x` being weakly terminal. `π₁(C, x)` is `π₀` of the category of
//! parallel arrows over `x`, pointed at `(id_x, id_x)`; its other elements are
//! obstructions to `x` being subterminal.

mod explicit;
mod maps;
mod report;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::fincat::{parallel_arrows, CategoryError, FinCat, Obj, ParallelArrows};
use crate::order::{collapse_lower, poset_reflection, OrderError, PointedPoset};

pub use explicit::{pi0_explicit, pi1_explicit};
pub use maps::{covariance_map, pi_functor_map, pi_object_action};
pub use report::{analyze_morphism, Invariant, MorphismAnalysis, ObstructionReport, INTERCHANGE_VERSION};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("invariant disagrees with the direct check: {0}")]
    OracleMismatch(String),
}

impl HomotopyError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Category(e) => e.name(),
            Self::Order(e) => e.name(),
            Self::OracleMismatch(_) => "OracleMismatch",
        }
    }
}

/// Which homotopy poset: `π₀` or `π₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Zero,
    One,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Zero => "pi0",
            Level::One => "pi1",
        })
    }
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Level, String> {
        match s {
            "0" | "pi0" => Ok(Level::Zero),
            "1" | "pi1" => Ok(Level::One),
            _ => Err(format!("unknown level `{s}`")),
        }
    }
}

/// A homotopy poset together with the class of every object it was computed
/// from, which is what induced maps are built from.
#[derive(Debug, Clone)]
pub struct HomotopyPoset {
    pointed: PointedPoset,
    level: Level,
    over: Obj,
    underlying: Arc<FinCat>,
    class_of: Vec<usize>,
    parallel: Option<ParallelArrows>,
}

impl HomotopyPoset {
    pub fn pointed(&self) -> &PointedPoset {
        &self.pointed
    }

    pub fn into_pointed(self) -> PointedPoset {
        self.pointed
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn over(&self) -> Obj {
        self.over
    }

    /// The category whose reflection was collapsed: the base category for
    /// `π₀`, the parallel-arrow category for `π₁`.
    pub fn underlying(&self) -> &Arc<FinCat> {
        &self.underlying
    }

    pub fn parallel(&self) -> Option<&ParallelArrows> {
        self.parallel.as_ref()
    }

    /// Element holding an object of [`HomotopyPoset::underlying`].
    pub fn class_of(&self, object: Obj) -> usize {
        self.class_of[object.0]
    }

    pub fn is_trivial(&self) -> bool {
        self.pointed.is_trivial()
    }
}

fn basepoint_label(c: &FinCat, x: Obj) -> String {
    format!("[{}]", c.object_name(x))
}

fn check_object(c: &FinCat, x: Obj) -> Result<(), CategoryError> {
    if x.0 >= c.object_count() {
        return Err(CategoryError::UnknownObject(format!("#{}", x.0)));
    }
    Ok(())
}

fn reflect_and_collapse(c: &FinCat, x: Obj, label: &str) -> Result<(PointedPoset, Vec<usize>), HomotopyError> {
    let reflection = poset_reflection(c);
    let lower = reflection
        .poset
        .lower_closure(&[reflection.class_of[x.0]].into_iter().collect());
    let collapse = collapse_lower(&reflection.poset, &lower, label)?;
    let class_of = reflection.class_of.iter().map(|&k| collapse.image[k]).collect();
    Ok((collapse.pointed, class_of))
}

/// `π₀(C, x)`.
pub fn pi0(c: &Arc<FinCat>, x: Obj) -> Result<HomotopyPoset, HomotopyError> {
    check_object(c, x)?;
    let (pointed, class_of) = reflect_and_collapse(c, x, &basepoint_label(c, x))?;
    Ok(HomotopyPoset {
        pointed,
        level: Level::Zero,
        over: x,
        underlying: c.clone(),
        class_of,
        parallel: None,
    })
}

/// `π₁(C, x)`; the parallel-arrow category must fit under `cap` objects.
pub fn pi1(c: &Arc<FinCat>, x: Obj, cap: usize) -> Result<HomotopyPoset, HomotopyError> {
    check_object(c, x)?;
    let par = parallel_arrows(c, x, cap)?;
    let base = par.identity_pair(c);
    let (pointed, class_of) = reflect_and_collapse(par.category(), base, &basepoint_label(c, x))?;
    Ok(HomotopyPoset {
        pointed,
        level: Level::One,
        over: x,
        underlying: par.category().clone(),
        class_of,
        parallel: Some(par),
    })
}

pub fn pi(c: &Arc<FinCat>, x: Obj, level: Level, cap: usize) -> Result<HomotopyPoset, HomotopyError> {
    match level {
        Level::Zero => pi0(c, x),
        Level::One => pi1(c, x, cap),
    }
}

/// Every object has a morphism into `x`.
pub fn is_weak_terminal(c: &FinCat, x: Obj) -> Result<bool, CategoryError> {
    check_object(c, x)?;
    Ok(c.all_objects().all(|y| !c.hom(y, x).is_empty()))
}

/// Parallel morphisms into `x` are equal.
pub fn is_subterminal(c: &FinCat, x: Obj) -> Result<bool, CategoryError> {
    check_object(c, x)?;
    Ok(c.all_objects().all(|y| c.hom(y, x).len() <= 1))
}

pub fn is_terminal(c: &FinCat, x: Obj) -> Result<bool, CategoryError> {
    check_object(c, x)?;
    Ok(c.all_objects().all(|y| c.hom(y, x).len() == 1))
}
