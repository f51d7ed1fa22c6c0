//! Finite categories given by explicit object, morphism and composition tables.
//!
//! A [`FinCat`] is immutable once built. Categories read from text go through
//! [`FinCat::validate`], which checks every category law exhaustively. Derived
//! categories (slices, parallel arrows, opposites, arrow categories) are built
//! from an already valid category and are valid by construction.

mod derived;
mod functor;
pub mod text;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use derived::{arrow_category, opposite, parallel_arrows, slice, ParallelArrows, Slice};
pub use functor::{Functor, NaturalTransformation, RawFunctor, RawNaturalTransformation};

/// Default bound on the number of objects of a derived category.
pub const DEFAULT_OBJECT_CAP: usize = 20_000;

/// Index of an object in a [`FinCat`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Obj(pub usize);

/// Index of a morphism in a [`FinCat`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mor(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("dangling reference to `{0}`")]
    DanglingReference(String),
    #[error("duplicate definition of `{0}`")]
    DuplicateName(String),
    #[error("identity law fails at `{0}`")]
    MissingIdentity(String),
    #[error("composite `{f} ; {g}` is not defined")]
    IncompleteComposition { f: String, g: String },
    #[error("composite `{f} ; {g} = {h}` is badly typed")]
    BadCompositionTyping { f: String, g: String, h: String },
    #[error("composition is not associative on `{f}`, `{g}`, `{h}`")]
    NonAssociative { f: String, g: String, h: String },
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("derived category would have {projected} objects, above the cap of {cap}")]
    SizeCapExceeded { projected: usize, cap: usize },
    #[error("not a functor: {0}")]
    NotAFunctor(String),
    #[error("not natural: {0}")]
    NotNatural(String),
}

impl CategoryError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::DanglingReference(_) => "DanglingReference",
            Self::DuplicateName(_) => "DuplicateName",
            Self::MissingIdentity(_) => "MissingIdentity",
            Self::IncompleteComposition { .. } => "IncompleteComposition",
            Self::BadCompositionTyping { .. } => "BadCompositionTyping",
            Self::NonAssociative { .. } => "NonAssociative",
            Self::UnknownObject(_) => "UnknownObject",
            Self::UnknownMorphism(_) => "UnknownMorphism",
            Self::SizeCapExceeded { .. } => "SizeCapExceeded",
            Self::NotAFunctor(_) => "NotAFunctor",
            Self::NotNatural(_) => "NotNatural",
        }
    }
}

/// Category tables as written by a user, referring to everything by name.
///
/// Composition is written in diagrammatic order: `(f, g, h)` means `f ; g = h`,
/// first `f`, then `g`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<(String, String, String)>,
    pub identities: Vec<(String, String)>,
    pub compositions: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct MorphismEntry {
    pub name: String,
    pub dom: Obj,
    pub cod: Obj,
}

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub(crate) enum Composition {
    /// Dense `m * m` table, `NONE` off composable pairs.
    Table(Vec<u32>),
    /// Every morphism is a morphism of `base` relabelled with new endpoints;
    /// composition is computed in `base`. Hom lists are sorted by base morphism.
    Lifted { base: Arc<FinCat>, base_of: Vec<Mor> },
}

/// A validated finite category.
#[derive(Debug, Clone)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<MorphismEntry>,
    identities: Vec<Mor>,
    homs: Vec<Vec<Mor>>,
    comp: Composition,
    object_index: HashMap<String, Obj>,
    morphism_index: HashMap<String, Mor>,
}

impl FinCat {
    /// Validates user tables, checking typing, identity laws, totality on
    /// composable pairs and associativity on every composable triple.
    pub fn validate(raw: &RawCategory) -> Result<FinCat, CategoryError> {
        let mut object_index = HashMap::new();
        for (i, o) in raw.objects.iter().enumerate() {
            if object_index.insert(o.clone(), Obj(i)).is_some() {
                return Err(CategoryError::DuplicateName(o.clone()));
            }
        }
        let lookup_obj = |name: &str| {
            object_index
                .get(name)
                .copied()
                .ok_or_else(|| CategoryError::DanglingReference(name.to_string()))
        };
        let mut morphisms = Vec::with_capacity(raw.morphisms.len());
        let mut morphism_index = HashMap::new();
        for (i, (name, dom, cod)) in raw.morphisms.iter().enumerate() {
            if morphism_index.insert(name.clone(), Mor(i)).is_some() {
                return Err(CategoryError::DuplicateName(name.clone()));
            }
            morphisms.push(MorphismEntry {
                name: name.clone(),
                dom: lookup_obj(dom)?,
                cod: lookup_obj(cod)?,
            });
        }
        let lookup_mor = |name: &str| {
            morphism_index
                .get(name)
                .copied()
                .ok_or_else(|| CategoryError::DanglingReference(name.to_string()))
        };

        let mut identities: Vec<Option<Mor>> = vec![None; raw.objects.len()];
        for (obj, mor) in &raw.identities {
            let o = lookup_obj(obj)?;
            let m = lookup_mor(mor)?;
            if identities[o.0].is_some() {
                return Err(CategoryError::DuplicateName(format!("id {obj}")));
            }
            if morphisms[m.0].dom != o || morphisms[m.0].cod != o {
                return Err(CategoryError::MissingIdentity(obj.clone()));
            }
            identities[o.0] = Some(m);
        }
        let identities = identities
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| CategoryError::MissingIdentity(raw.objects[i].clone())))
            .collect::<Result<Vec<_>, _>>()?;

        let m = morphisms.len();
        let mut table = vec![NONE; m * m];
        for (f, g, h) in &raw.compositions {
            let (fi, gi, hi) = (lookup_mor(f)?, lookup_mor(g)?, lookup_mor(h)?);
            let (fe, ge, he) = (&morphisms[fi.0], &morphisms[gi.0], &morphisms[hi.0]);
            if fe.cod != ge.dom || he.dom != fe.dom || he.cod != ge.cod {
                return Err(CategoryError::BadCompositionTyping {
                    f: f.clone(),
                    g: g.clone(),
                    h: h.clone(),
                });
            }
            let slot = &mut table[fi.0 * m + gi.0];
            if *slot != NONE && *slot != hi.0 as u32 {
                return Err(CategoryError::DuplicateName(format!("comp {f} ; {g}")));
            }
            *slot = hi.0 as u32;
        }

        let cat = FinCat::assemble(
            raw.objects.clone(),
            morphisms,
            identities,
            Composition::Table(table),
        );
        cat.check_laws()?;
        Ok(cat)
    }

    /// Builds a category from trusted parts. Only hom lists and indices are
    /// computed here; no law is checked.
    pub(crate) fn assemble(
        objects: Vec<String>,
        morphisms: Vec<MorphismEntry>,
        identities: Vec<Mor>,
        comp: Composition,
    ) -> FinCat {
        let n = objects.len();
        let mut homs = vec![Vec::new(); n * n];
        for (i, e) in morphisms.iter().enumerate() {
            homs[e.dom.0 * n + e.cod.0].push(Mor(i));
        }
        if let Composition::Lifted { base_of, .. } = &comp {
            for hom in &mut homs {
                hom.sort_by_key(|m| base_of[m.0]);
            }
        }
        let object_index = objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.clone(), Obj(i)))
            .collect();
        let morphism_index = morphisms
            .iter()
            .enumerate()
            .map(|(i, e)| (e.name.clone(), Mor(i)))
            .collect();
        FinCat {
            objects,
            morphisms,
            identities,
            homs,
            comp,
            object_index,
            morphism_index,
        }
    }

    /// Builds a category from a composition function over trusted data.
    pub(crate) fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<MorphismEntry>,
        identities: Vec<Mor>,
        compose: impl Fn(Mor, Mor) -> Mor,
    ) -> FinCat {
        let m = morphisms.len();
        let mut table = vec![NONE; m * m];
        for f in 0..m {
            for g in 0..m {
                if morphisms[f].cod == morphisms[g].dom {
                    table[f * m + g] = compose(Mor(f), Mor(g)).0 as u32;
                }
            }
        }
        FinCat::assemble(objects, morphisms, identities, Composition::Table(table))
    }

    /// Re-checks totality, typing, identity and associativity laws.
    pub fn check_laws(&self) -> Result<(), CategoryError> {
        let name = |m: Mor| self.morphisms[m.0].name.clone();
        for f in self.all_morphisms() {
            for g in self.all_morphisms() {
                if self.cod(f) != self.dom(g) {
                    continue;
                }
                let h = self.compose(f, g).ok_or_else(|| CategoryError::IncompleteComposition {
                    f: name(f),
                    g: name(g),
                })?;
                if self.dom(h) != self.dom(f) || self.cod(h) != self.cod(g) {
                    return Err(CategoryError::BadCompositionTyping {
                        f: name(f),
                        g: name(g),
                        h: name(h),
                    });
                }
            }
        }
        for f in self.all_morphisms() {
            let left = self.compose(self.identity(self.dom(f)), f);
            let right = self.compose(f, self.identity(self.cod(f)));
            if left != Some(f) || right != Some(f) {
                return Err(CategoryError::MissingIdentity(name(f)));
            }
        }
        for y in self.all_objects() {
            for z in self.all_objects() {
                for &g in self.hom(y, z) {
                    for x in self.all_objects() {
                        for &f in self.hom(x, y) {
                            let fg = self.compose_unchecked(f, g);
                            for w in self.all_objects() {
                                for &h in self.hom(z, w) {
                                    let gh = self.compose_unchecked(g, h);
                                    if self.compose_unchecked(fg, h) != self.compose_unchecked(f, gh)
                                    {
                                        return Err(CategoryError::NonAssociative {
                                            f: name(f),
                                            g: name(g),
                                            h: name(h),
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn all_objects(&self) -> impl Iterator<Item = Obj> + '_ {
        (0..self.objects.len()).map(Obj)
    }

    pub fn all_morphisms(&self) -> impl Iterator<Item = Mor> + '_ {
        (0..self.morphisms.len()).map(Mor)
    }

    pub fn object_name(&self, x: Obj) -> &str {
        &self.objects[x.0]
    }

    pub fn morphism_name(&self, f: Mor) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn object(&self, name: &str) -> Result<Obj, CategoryError> {
        self.object_index
            .get(name)
            .copied()
            .ok_or_else(|| CategoryError::UnknownObject(name.to_string()))
    }

    pub fn morphism(&self, name: &str) -> Result<Mor, CategoryError> {
        self.morphism_index
            .get(name)
            .copied()
            .ok_or_else(|| CategoryError::UnknownMorphism(name.to_string()))
    }

    pub fn dom(&self, f: Mor) -> Obj {
        self.morphisms[f.0].dom
    }

    pub fn cod(&self, f: Mor) -> Obj {
        self.morphisms[f.0].cod
    }

    pub fn identity(&self, x: Obj) -> Mor {
        self.identities[x.0]
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identities[self.dom(f).0] == f
    }

    /// Morphisms `x -> y`.
    pub fn hom(&self, x: Obj, y: Obj) -> &[Mor] {
        &self.homs[x.0 * self.objects.len() + y.0]
    }

    pub fn has_morphism(&self, x: Obj, y: Obj) -> bool {
        !self.hom(x, y).is_empty()
    }

    /// `f ; g`, defined when `cod f = dom g`.
    pub fn compose(&self, f: Mor, g: Mor) -> Option<Mor> {
        if self.cod(f) != self.dom(g) {
            return None;
        }
        match &self.comp {
            Composition::Table(table) => {
                let h = table[f.0 * self.morphisms.len() + g.0];
                (h != NONE).then_some(Mor(h as usize))
            }
            Composition::Lifted { base, base_of } => {
                let b = base.compose(base_of[f.0], base_of[g.0])?;
                self.lifted_morphism(self.dom(f), self.cod(g), b)
            }
        }
    }

    pub(crate) fn compose_unchecked(&self, f: Mor, g: Mor) -> Mor {
        self.compose(f, g).expect("composable pair without composite")
    }

    /// For a derived category, the morphism `a -> b` lying over `base`.
    pub(crate) fn lifted_morphism(&self, a: Obj, b: Obj, base: Mor) -> Option<Mor> {
        match &self.comp {
            Composition::Lifted { base_of, .. } => {
                let hom = self.hom(a, b);
                hom.binary_search_by_key(&base, |m| base_of[m.0])
                    .ok()
                    .map(|i| hom[i])
            }
            Composition::Table(_) => None,
        }
    }

    /// Whether every morphism has a two-sided inverse.
    pub fn is_groupoid(&self) -> bool {
        self.all_morphisms().all(|f| {
            self.hom(self.cod(f), self.dom(f)).iter().any(|&g| {
                self.compose(f, g) == Some(self.identity(self.dom(f)))
                    && self.compose(g, f) == Some(self.identity(self.cod(f)))
            })
        })
    }

    /// Tables in the name-based form accepted by [`FinCat::validate`].
    pub fn to_raw(&self) -> RawCategory {
        let mut raw = RawCategory {
            objects: self.objects.clone(),
            ..RawCategory::default()
        };
        for e in &self.morphisms {
            raw.morphisms.push((
                e.name.clone(),
                self.objects[e.dom.0].clone(),
                self.objects[e.cod.0].clone(),
            ));
        }
        for x in self.all_objects() {
            raw.identities.push((
                self.objects[x.0].clone(),
                self.morphism_name(self.identity(x)).to_string(),
            ));
        }
        for f in self.all_morphisms() {
            for g in self.all_morphisms() {
                if let Some(h) = self.compose(f, g) {
                    raw.compositions.push((
                        self.morphism_name(f).to_string(),
                        self.morphism_name(g).to_string(),
                        self.morphism_name(h).to_string(),
                    ));
                }
            }
        }
        raw
    }
}

impl PartialEq for FinCat {
    /// Equality of tables: same names in the same order, same composites.
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.all_morphisms().all(|f| {
                self.all_morphisms()
                    .all(|g| self.compose(f, g) == other.compose(f, g))
            })
    }
}

impl Eq for FinCat {}

impl fmt::Display for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::write_category(&self.to_raw()))
    }
}
