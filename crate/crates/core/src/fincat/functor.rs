use std::sync::Arc;

use super::{CategoryError, FinCat, Mor, Obj};

/// A functor between finite categories, checked exhaustively on construction.
#[derive(Debug, Clone)]
pub struct Functor {
    source: Arc<FinCat>,
    target: Arc<FinCat>,
    obj_map: Vec<Obj>,
    mor_map: Vec<Mor>,
}

/// Functor data by name: object and morphism assignments.
#[derive(Debug, Clone, Default)]
pub struct RawFunctor {
    pub objects: Vec<(String, String)>,
    pub morphisms: Vec<(String, String)>,
}

fn same(a: &Arc<FinCat>, b: &Arc<FinCat>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Functor {
    pub fn new(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        obj_map: Vec<Obj>,
        mor_map: Vec<Mor>,
    ) -> Result<Functor, CategoryError> {
        if obj_map.len() != source.object_count() || mor_map.len() != source.morphism_count() {
            return Err(CategoryError::NotAFunctor("maps are not total".into()));
        }
        if obj_map.iter().any(|o| o.0 >= target.object_count())
            || mor_map.iter().any(|m| m.0 >= target.morphism_count())
        {
            return Err(CategoryError::NotAFunctor("image outside the target".into()));
        }
        let f = Functor::from_parts_unchecked(source, target, obj_map, mor_map);
        f.check()?;
        Ok(f)
    }

    /// Resolves a name-based assignment and validates it.
    pub fn from_raw(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        raw: &RawFunctor,
    ) -> Result<Functor, CategoryError> {
        let mut obj_map = vec![None; source.object_count()];
        for (a, b) in &raw.objects {
            obj_map[source.object(a)?.0] = Some(target.object(b)?);
        }
        let mut mor_map = vec![None; source.morphism_count()];
        for (f, g) in &raw.morphisms {
            mor_map[source.morphism(f)?.0] = Some(target.morphism(g)?);
        }
        let obj_map = obj_map
            .into_iter()
            .enumerate()
            .map(|(i, o)| {
                o.ok_or_else(|| {
                    CategoryError::NotAFunctor(format!("object `{}` unmapped", source.object_name(Obj(i))))
                })
            })
            .collect::<Result<_, _>>()?;
        let mor_map = mor_map
            .into_iter()
            .enumerate()
            .map(|(i, m)| {
                m.ok_or_else(|| {
                    CategoryError::NotAFunctor(format!(
                        "morphism `{}` unmapped",
                        source.morphism_name(Mor(i))
                    ))
                })
            })
            .collect::<Result<_, _>>()?;
        Functor::new(source, target, obj_map, mor_map)
    }

    pub(crate) fn from_parts_unchecked(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        obj_map: Vec<Obj>,
        mor_map: Vec<Mor>,
    ) -> Functor {
        Functor {
            source,
            target,
            obj_map,
            mor_map,
        }
    }

    pub fn identity(c: Arc<FinCat>) -> Functor {
        let obj_map = c.all_objects().collect();
        let mor_map = c.all_morphisms().collect();
        Functor::from_parts_unchecked(c.clone(), c, obj_map, mor_map)
    }

    /// The functor sending everything to `d` and its identity.
    pub fn constant(source: Arc<FinCat>, target: Arc<FinCat>, d: Obj) -> Functor {
        let obj_map = vec![d; source.object_count()];
        let mor_map = vec![target.identity(d); source.morphism_count()];
        Functor::from_parts_unchecked(source, target, obj_map, mor_map)
    }

    /// Checks preservation of endpoints, identities and composites.
    pub fn check(&self) -> Result<(), CategoryError> {
        let (c, d) = (&*self.source, &*self.target);
        for f in c.all_morphisms() {
            let g = self.mor(f);
            if d.dom(g) != self.obj(c.dom(f)) || d.cod(g) != self.obj(c.cod(f)) {
                return Err(CategoryError::NotAFunctor(format!(
                    "`{}` is sent to `{}` with the wrong endpoints",
                    c.morphism_name(f),
                    d.morphism_name(g)
                )));
            }
        }
        for x in c.all_objects() {
            if self.mor(c.identity(x)) != d.identity(self.obj(x)) {
                return Err(CategoryError::NotAFunctor(format!(
                    "identity of `{}` is not preserved",
                    c.object_name(x)
                )));
            }
        }
        for f in c.all_morphisms() {
            for g in c.all_morphisms() {
                if let Some(h) = c.compose(f, g) {
                    if d.compose(self.mor(f), self.mor(g)) != Some(self.mor(h)) {
                        return Err(CategoryError::NotAFunctor(format!(
                            "composite `{} ; {}` is not preserved",
                            c.morphism_name(f),
                            c.morphism_name(g)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<FinCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCat> {
        &self.target
    }

    pub fn obj(&self, x: Obj) -> Obj {
        self.obj_map[x.0]
    }

    pub fn mor(&self, f: Mor) -> Mor {
        self.mor_map[f.0]
    }

    /// Diagrammatic composite: first `self`, then `next`.
    pub fn then(&self, next: &Functor) -> Result<Functor, CategoryError> {
        if !same(&self.target, &next.source) {
            return Err(CategoryError::NotAFunctor("functors are not composable".into()));
        }
        Ok(Functor::from_parts_unchecked(
            self.source.clone(),
            next.target.clone(),
            self.obj_map.iter().map(|&o| next.obj(o)).collect(),
            self.mor_map.iter().map(|&m| next.mor(m)).collect(),
        ))
    }
}

/// A natural transformation between parallel functors.
#[derive(Debug, Clone)]
pub struct NaturalTransformation {
    source: Functor,
    target: Functor,
    components: Vec<Mor>,
}

#[derive(Debug, Clone, Default)]
pub struct RawNaturalTransformation {
    pub components: Vec<(String, String)>,
}

impl NaturalTransformation {
    pub fn new(source: Functor, target: Functor, components: Vec<Mor>) -> Result<Self, CategoryError> {
        if !same(source.source(), target.source()) || !same(source.target(), target.target()) {
            return Err(CategoryError::NotNatural("functors are not parallel".into()));
        }
        let (c, d) = (source.source().clone(), source.target().clone());
        if components.len() != c.object_count() {
            return Err(CategoryError::NotNatural("components are not total".into()));
        }
        for x in c.all_objects() {
            let a = components[x.0];
            if a.0 >= d.morphism_count() || d.dom(a) != source.obj(x) || d.cod(a) != target.obj(x) {
                return Err(CategoryError::NotNatural(format!(
                    "component at `{}` has the wrong endpoints",
                    c.object_name(x)
                )));
            }
        }
        for f in c.all_morphisms() {
            let (x, y) = (c.dom(f), c.cod(f));
            let left = d.compose(source.mor(f), components[y.0]);
            let right = d.compose(components[x.0], target.mor(f));
            if left != right {
                return Err(CategoryError::NotNatural(format!(
                    "square at `{}` does not commute: F({0}) ; a_{} != a_{} ; G({0})",
                    c.morphism_name(f),
                    c.object_name(y),
                    c.object_name(x)
                )));
            }
        }
        Ok(NaturalTransformation {
            source,
            target,
            components,
        })
    }

    pub fn from_raw(source: Functor, target: Functor, raw: &RawNaturalTransformation) -> Result<Self, CategoryError> {
        let c = source.source().clone();
        let d = source.target().clone();
        let mut comps = vec![None; c.object_count()];
        for (x, a) in &raw.components {
            comps[c.object(x)?.0] = Some(d.morphism(a)?);
        }
        let comps = comps
            .into_iter()
            .enumerate()
            .map(|(i, a)| {
                a.ok_or_else(|| CategoryError::NotNatural(format!("no component at `{}`", c.object_name(Obj(i)))))
            })
            .collect::<Result<_, _>>()?;
        NaturalTransformation::new(source, target, comps)
    }

    pub fn identity(f: Functor) -> NaturalTransformation {
        let components = f
            .source()
            .all_objects()
            .map(|x| f.target().identity(f.obj(x)))
            .collect();
        NaturalTransformation {
            source: f.clone(),
            target: f,
            components,
        }
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    pub fn component(&self, x: Obj) -> Mor {
        self.components[x.0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::tests::{raw, walking_arrow, z2};

    #[test]
    fn identity_and_constant_functors_are_valid() {
        let c = Arc::new(walking_arrow());
        Functor::identity(c.clone()).check().unwrap();
        let t = Arc::new(z2());
        Functor::constant(c.clone(), t.clone(), Obj(0)).check().unwrap();
        let raw = RawFunctor {
            objects: vec![("0".into(), "*".into()), ("1".into(), "*".into())],
            morphisms: vec![
                ("id0".into(), "id*".into()),
                ("id1".into(), "id*".into()),
                ("a".into(), "s".into()),
            ],
        };
        Functor::from_raw(c, t, &raw).unwrap();
    }

    #[test]
    fn broken_functor_is_rejected() {
        let c = Arc::new(z2());
        // s |-> id breaks nothing; id |-> s breaks identity preservation
        let err = Functor::new(c.clone(), c.clone(), vec![Obj(0)], vec![Mor(1), Mor(1)]).unwrap_err();
        assert_eq!(err.name(), "NotAFunctor");
    }

    #[test]
    fn broken_naturality_square_names_the_morphism() {
        // two objects with two parallel arrows a, b : 0 -> 1
        let c = Arc::new(FinCat::validate(&raw(&["0", "1"], &[("a", "0", "1"), ("b", "0", "1")], &[])).unwrap());
        let w = Arc::new(walking_arrow());
        // F = G = inclusion of the walking arrow via a
        let f = Functor::new(w.clone(), c.clone(), vec![Obj(0), Obj(1)], vec![Mor(0), Mor(1), Mor(2)]).unwrap();
        // constant-at-1 functor H; components a_0 = b, a_1 = id1 from F to H
        let h = Functor::constant(w.clone(), c.clone(), Obj(1));
        let ok = NaturalTransformation::new(f.clone(), h.clone(), vec![c.morphism("a").unwrap(), c.morphism("id1").unwrap()]);
        assert!(ok.is_ok());
        let bad = NaturalTransformation::new(f, h, vec![c.morphism("b").unwrap(), c.morphism("id1").unwrap()]).unwrap_err();
        assert!(matches!(bad, CategoryError::NotNatural(ref s) if s.contains("`a`")));
    }

    #[test]
    fn composite_functor() {
        let c = Arc::new(walking_arrow());
        let id = Functor::identity(c.clone());
        let k = id.then(&id).unwrap();
        k.check().unwrap();
    }
}
