//! Direct descriptions of `π₀` and `π₁` that avoid building any derived
//! category. Used to cross-check the reflect-then-collapse route.

use crate::fincat::{FinCat, Mor, Obj};
use crate::order::{Poset, PointedPoset};

use super::{basepoint_label, check_object, HomotopyError};

/// Builds `[x]` plus the classes of `nodes` under mutual `reaches`.
///
/// `nodes` must be closed under mutual reachability and exclude everything
/// in the basepoint's class; `below` decides `[x] <= node`.
fn assemble(
    label: String,
    names: Vec<String>,
    reaches: impl Fn(usize, usize) -> bool,
    below: impl Fn(usize) -> bool,
) -> Result<PointedPoset, HomotopyError> {
    let n = names.len();
    let mut class = vec![usize::MAX; n];
    let mut reps: Vec<(String, usize)> = Vec::new();
    for a in 0..n {
        if class[a] != usize::MAX {
            continue;
        }
        let k = reps.len();
        let mut least = names[a].clone();
        for b in a..n {
            if class[b] == usize::MAX && reaches(a, b) && reaches(b, a) {
                class[b] = k;
                least = least.min(names[b].clone());
            }
        }
        reps.push((least, a));
    }
    reps.sort();
    let mut elements = vec![label];
    elements.extend(reps.iter().map(|(s, _)| s.clone()));
    let mut pairs = Vec::new();
    for (i, &(_, a)) in reps.iter().enumerate() {
        if below(a) {
            pairs.push((0, i + 1));
        }
        for (j, &(_, b)) in reps.iter().enumerate() {
            if reaches(a, b) {
                pairs.push((i + 1, j + 1));
            }
        }
    }
    Ok(PointedPoset::new(Poset::new(elements, pairs)?, 0)?)
}

/// `π₀(C, x)` from its explicit description: classes `⦅y⦆` with no morphism
/// `y -> x`, ordered by existence of morphisms, and `[x] <= ⦅y⦆` exactly
/// when a span `x <- w -> y` exists.
pub fn pi0_explicit(c: &FinCat, x: Obj) -> Result<PointedPoset, HomotopyError> {
    check_object(c, x)?;
    let outside: Vec<Obj> = c.all_objects().filter(|&y| !c.has_morphism(y, x)).collect();
    let names = outside.iter().map(|&y| c.object_name(y).to_string()).collect();
    assemble(
        basepoint_label(c, x),
        names,
        |a, b| c.has_morphism(outside[a], outside[b]),
        |a| c.all_objects().any(|w| c.has_morphism(w, x) && c.has_morphism(w, outside[a])),
    )
}

/// `π₁(C, x)` from its explicit description: classes of pairs `(f, g)` of
/// distinct parallel morphisms into `x`, ordered by simultaneous
/// factorisation, with `[x] <= ⦅(f, g)⦆` exactly when some `h` equalises
/// `f` and `g`.
pub fn pi1_explicit(c: &FinCat, x: Obj) -> Result<PointedPoset, HomotopyError> {
    check_object(c, x)?;
    let pairs: Vec<(Mor, Mor)> = c
        .all_objects()
        .flat_map(|y| {
            let hom = c.hom(y, x);
            hom.iter()
                .flat_map(move |&f| hom.iter().map(move |&g| (f, g)))
                .filter(|(f, g)| f != g)
        })
        .collect();
    let names = pairs
        .iter()
        .map(|&(f, g)| format!("({},{})", c.morphism_name(f), c.morphism_name(g)))
        .collect();
    let factors = |(f0, f1): (Mor, Mor), (g0, g1): (Mor, Mor)| {
        c.hom(c.dom(f0), c.dom(g0))
            .iter()
            .any(|&h| c.compose(h, g0) == Some(f0) && c.compose(h, g1) == Some(f1))
    };
    let equalised = |(f, g): (Mor, Mor)| {
        c.all_objects()
            .any(|w| c.hom(w, c.dom(f)).iter().any(|&h| c.compose(h, f) == c.compose(h, g)))
    };
    assemble(
        basepoint_label(c, x),
        names,
        |a, b| factors(pairs[a], pairs[b]),
        |a| equalised(pairs[a]),
    )
}
