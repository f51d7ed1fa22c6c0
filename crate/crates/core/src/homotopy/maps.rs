//! Maps between homotopy posets induced by morphisms, functors and natural
//! transformations. Every map is computed on objects and then checked to be
//! well defined on classes, monotone and basepoint-preserving.

use std::sync::Arc;

use crate::fincat::{slice, CategoryError, FinCat, Functor, Mor, NaturalTransformation, Obj};
use crate::order::{OrderError, PointedMap};

use super::{pi, HomotopyError, HomotopyPoset, Level};

fn induced(
    source: HomotopyPoset,
    target: HomotopyPoset,
    object_map: impl Fn(Obj) -> Result<Obj, HomotopyError>,
) -> Result<PointedMap, HomotopyError> {
    let mut map = vec![usize::MAX; source.pointed().len()];
    for o in source.underlying().all_objects() {
        let e = source.class_of(o);
        let t = target.class_of(object_map(o)?);
        if map[e] == usize::MAX {
            map[e] = t;
        } else if map[e] != t {
            let name = source.pointed().poset().name(e).to_string();
            return Err(OrderError::IllDefined(name).into());
        }
    }
    Ok(PointedMap::new(source.into_pointed(), target.into_pointed(), map)?)
}

fn check_morphism(c: &FinCat, f: Mor) -> Result<(), CategoryError> {
    if f.0 >= c.morphism_count() {
        return Err(CategoryError::UnknownMorphism(format!("#{}", f.0)));
    }
    Ok(())
}

fn missing(what: &str) -> HomotopyError {
    OrderError::IllDefined(what.to_string()).into()
}

/// `π_i(C, x) -> π_i(C, y)` for `f : x -> y`, postcomposing with `f`.
pub fn pi_object_action(c: &Arc<FinCat>, f: Mor, level: Level, cap: usize) -> Result<PointedMap, HomotopyError> {
    check_morphism(c, f)?;
    let source = pi(c, c.dom(f), level, cap)?;
    let target = pi(c, c.cod(f), level, cap)?;
    match level {
        Level::Zero => induced(source, target, Ok),
        Level::One => {
            let (sp, tp) = (source.parallel().cloned().unwrap(), target.parallel().cloned().unwrap());
            induced(source, target, |o| {
                let (g, h) = sp.pair(o);
                tp.object_for(c.compose_unchecked(g, f), c.compose_unchecked(h, f))
                    .ok_or_else(|| missing("postcomposed pair"))
            })
        }
    }
}

/// `π_i(C, x) -> π_i(D, Fx)` induced by a functor.
pub fn pi_functor_map(functor: &Functor, x: Obj, level: Level, cap: usize) -> Result<PointedMap, HomotopyError> {
    let (c, d) = (functor.source(), functor.target());
    let source = pi(c, x, level, cap)?;
    let target = pi(d, functor.obj(x), level, cap)?;
    match level {
        Level::Zero => induced(source, target, |z| Ok(functor.obj(z))),
        Level::One => {
            let (sp, tp) = (source.parallel().cloned().unwrap(), target.parallel().cloned().unwrap());
            induced(source, target, |o| {
                let (g, h) = sp.pair(o);
                tp.object_for(functor.mor(g), functor.mor(h))
                    .ok_or_else(|| missing("image pair"))
            })
        }
    }
}

/// For `α : F => G` and `f : x -> y`, the map
/// `π_i(D/Gx, α_x) -> π_i(D/Gy, α_y)` sending `h` to `h ; Gf`.
pub fn covariance_map(
    alpha: &NaturalTransformation,
    f: Mor,
    level: Level,
    cap: usize,
) -> Result<PointedMap, HomotopyError> {
    let (ff, gg) = (alpha.source(), alpha.target());
    let c = ff.source();
    let d = gg.target();
    check_morphism(c, f)?;
    let (x, y) = (c.dom(f), c.cod(f));
    let gf = gg.mor(f);
    let sx = slice(d, gg.obj(x), cap)?;
    let sy = slice(d, gg.obj(y), cap)?;
    let ax = sx.object_for(alpha.component(x)).expect("component lies over Gx");
    let ay = sy.object_for(alpha.component(y)).expect("component lies over Gy");
    let source = pi(sx.category(), ax, level, cap)?;
    let target = pi(sy.category(), ay, level, cap)?;
    let move_object = |o: Obj| -> Result<Obj, HomotopyError> {
        sy.object_for(d.compose_unchecked(sx.base_morphism(o), gf))
            .ok_or_else(|| missing("postcomposed slice object"))
    };
    match level {
        Level::Zero => induced(source, target, move_object),
        Level::One => {
            let (sp, tp) = (source.parallel().cloned().unwrap(), target.parallel().cloned().unwrap());
            let ffm = ff.mor(f);
            let move_leg = |p: Mor| -> Result<Mor, HomotopyError> {
                let o = move_object(sx.category().dom(p))?;
                let base = d.compose_unchecked(sx.projection().mor(p), ffm);
                sy.morphism_for(o, ay, base).ok_or_else(|| missing("postcomposed slice morphism"))
            };
            induced(source, target, |o| {
                let (p, q) = sp.pair(o);
                tp.object_for(move_leg(p)?, move_leg(q)?)
                    .ok_or_else(|| missing("postcomposed pair"))
            })
        }
    }
}
