use std::fmt::Write;
use std::sync::Arc;

use serde::Serialize;

use crate::fincat::{slice, CategoryError, FinCat, Mor};
use crate::order::{hasse_dot, OrderError, PointedPoset, SubsetQuotient};

use super::{pi0, pi1, HomotopyError};

/// Version of the interchange documents written by [`ObstructionReport::to_interchange`].
pub const INTERCHANGE_VERSION: u32 = 1;

/// The pointed poset behind a report, explicit or as a symbolic subset
/// quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Invariant {
    Poset(PointedPoset),
    Subsets(SubsetQuotient),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub context: String,
    pub invariant: Invariant,
    pub minimal: Vec<String>,
    pub trivial: bool,
}

#[derive(Serialize)]
struct Interchange<'a> {
    version: u32,
    context: &'a str,
    trivial: bool,
    element_count: String,
    basepoint: &'a str,
    minimal: &'a [String],
    elements: Option<Vec<String>>,
    leq: Option<Vec<(String, String)>>,
}

impl ObstructionReport {
    pub fn from_poset(context: impl Into<String>, p: PointedPoset) -> ObstructionReport {
        let minimal = p
            .minimal_obstructions()
            .into_iter()
            .map(|a| p.poset().name(a).to_string())
            .collect();
        ObstructionReport {
            context: context.into(),
            trivial: p.is_trivial(),
            minimal,
            invariant: Invariant::Poset(p),
        }
    }

    pub fn from_subsets(context: impl Into<String>, q: SubsetQuotient) -> ObstructionReport {
        ObstructionReport {
            context: context.into(),
            trivial: q.is_trivial(),
            minimal: q.minimal_names(),
            invariant: Invariant::Subsets(q),
        }
    }

    pub fn basepoint_name(&self) -> &str {
        match &self.invariant {
            Invariant::Poset(p) => p.basepoint_name(),
            Invariant::Subsets(q) => q.basepoint_label(),
        }
    }

    pub fn element_count(&self) -> String {
        match &self.invariant {
            Invariant::Poset(p) => p.len().to_string(),
            Invariant::Subsets(q) => q.element_count_display(),
        }
    }

    /// The explicit pointed poset; subset quotients are listed only when the
    /// universe has at most `max_universe` members.
    pub fn materialize(&self, max_universe: usize) -> Result<PointedPoset, OrderError> {
        match &self.invariant {
            Invariant::Poset(p) => Ok(p.clone()),
            Invariant::Subsets(q) => q.materialize(max_universe).map(|(p, _)| p),
        }
    }

    /// `trivial`, or a one-line count of elements and minimal obstructions.
    pub fn summary(&self) -> String {
        if self.trivial {
            "trivial".to_string()
        } else {
            format!(
                "non-trivial: {} elements, {} minimal obstruction{}",
                self.element_count(),
                self.minimal.len(),
                if self.minimal.len() == 1 { "" } else { "s" }
            )
        }
    }

    pub fn to_text(&self, max_universe: usize) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.summary());
        let _ = writeln!(out, "context: {}", self.context);
        let _ = writeln!(out, "basepoint: {}", self.basepoint_name());
        let _ = writeln!(out, "minimal:{}", self.minimal.iter().map(|m| format!(" {m}")).collect::<String>());
        match self.materialize(max_universe) {
            Ok(p) => {
                let q = p.poset();
                let _ = writeln!(out, "elements: {}", q.elements().join(" "));
                let mut covers: Vec<(&str, &str)> = q.hasse().into_iter().map(|(a, b)| (q.name(a), q.name(b))).collect();
                covers.sort();
                for (a, b) in covers {
                    let _ = writeln!(out, "cover: {a} < {b}");
                }
            }
            Err(_) => {
                let _ = writeln!(out, "elements: not listed ({} elements)", self.element_count());
            }
        }
        out
    }

    pub fn to_dot(&self, max_universe: usize) -> Result<String, OrderError> {
        Ok(hasse_dot(&self.materialize(max_universe)?, &self.context))
    }

    /// JSON document with the context, element list, order pairs, basepoint,
    /// minimal obstructions and triviality flag. Element lists and order
    /// pairs are `null` when the poset is too large to list.
    pub fn to_interchange(&self, max_universe: usize) -> serde_json::Value {
        let listed = self.materialize(max_universe).ok();
        let doc = Interchange {
            version: INTERCHANGE_VERSION,
            context: &self.context,
            trivial: self.trivial,
            element_count: self.element_count(),
            basepoint: self.basepoint_name(),
            minimal: &self.minimal,
            elements: listed.as_ref().map(|p| p.poset().elements().to_vec()),
            leq: listed.as_ref().map(|p| {
                let q = p.poset();
                q.leq_pairs()
                    .into_iter()
                    .map(|(a, b)| (q.name(a).to_string(), q.name(b).to_string()))
                    .collect()
            }),
        };
        serde_json::to_value(doc).expect("report serializes")
    }
}

/// Slice invariants of a morphism `f : X -> Y` together with the properties
/// they decide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismAnalysis {
    pub morphism: String,
    pub pi0: ObstructionReport,
    pub pi1: ObstructionReport,
    pub split_epi: bool,
    pub mono: bool,
    pub iso: bool,
}

impl MorphismAnalysis {
    pub fn to_text(&self, max_universe: usize) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "morphism: {}", self.morphism);
        let _ = writeln!(out, "split epi: {}", self.split_epi);
        let _ = writeln!(out, "mono: {}", self.mono);
        let _ = writeln!(out, "iso: {}", self.iso);
        let _ = writeln!(out, "-- pi0");
        out.push_str(&self.pi0.to_text(max_universe));
        let _ = writeln!(out, "-- pi1");
        out.push_str(&self.pi1.to_text(max_universe));
        out
    }

    pub fn to_interchange(&self, max_universe: usize) -> serde_json::Value {
        serde_json::json!({
            "version": INTERCHANGE_VERSION,
            "morphism": self.morphism,
            "split_epi": self.split_epi,
            "mono": self.mono,
            "iso": self.iso,
            "pi0": self.pi0.to_interchange(max_universe),
            "pi1": self.pi1.to_interchange(max_universe),
        })
    }
}

fn is_split_epi(c: &FinCat, f: Mor) -> bool {
    let (x, y) = (c.dom(f), c.cod(f));
    c.hom(y, x).iter().any(|&s| c.compose(s, f) == Some(c.identity(y)))
}

fn is_mono(c: &FinCat, f: Mor) -> bool {
    let x = c.dom(f);
    c.all_objects().all(|w| {
        let hom = c.hom(w, x);
        hom.iter().all(|&g| {
            hom.iter()
                .all(|&h| g == h || c.compose(g, f) != c.compose(h, f))
        })
    })
}

/// Computes `π₀` and `π₁` of the slice over the codomain at `f` and reads
/// off split-epi, mono and iso. The flags are checked against direct
/// searches; a disagreement is reported as `OracleMismatch`.
pub fn analyze_morphism(c: &Arc<FinCat>, f: Mor, cap: usize) -> Result<MorphismAnalysis, HomotopyError> {
    if f.0 >= c.morphism_count() {
        return Err(CategoryError::UnknownMorphism(format!("#{}", f.0)).into());
    }
    let y = c.cod(f);
    let s = slice(c, y, cap)?;
    let at = s.object_for(f).expect("f lies over its codomain");
    let name = c.morphism_name(f);
    let over = c.object_name(y);
    let p0 = pi0(s.category(), at)?.into_pointed();
    let p1 = pi1(s.category(), at, cap)?.into_pointed();
    let pi0 = ObstructionReport::from_poset(format!("pi0 of the slice over {over} at {name}"), p0);
    let pi1 = ObstructionReport::from_poset(format!("pi1 of the slice over {over} at {name}"), p1);
    let (split_epi, mono) = (pi0.trivial, pi1.trivial);
    if split_epi != is_split_epi(c, f) {
        return Err(HomotopyError::OracleMismatch(format!("split epi flag for {name}")));
    }
    if mono != is_mono(c, f) {
        return Err(HomotopyError::OracleMismatch(format!("mono flag for {name}")));
    }
    Ok(MorphismAnalysis {
        morphism: name.to_string(),
        pi0,
        pi1,
        split_epi,
        mono,
        iso: split_epi && mono,
    })
}
