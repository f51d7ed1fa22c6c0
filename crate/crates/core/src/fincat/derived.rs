use std::collections::HashMap;
use std::sync::Arc;

use super::{CategoryError, Composition, FinCat, Functor, Mor, MorphismEntry, Obj};

/// The opposite category: endpoints swapped, composition reversed.
pub fn opposite(c: &FinCat) -> FinCat {
    let morphisms = c
        .morphisms
        .iter()
        .map(|e| MorphismEntry {
            name: e.name.clone(),
            dom: e.cod,
            cod: e.dom,
        })
        .collect();
    FinCat::from_fn(c.objects.clone(), morphisms, c.identities.clone(), |f, g| {
        c.compose_unchecked(g, f)
    })
}

/// The slice `C/x` together with its domain projection.
///
/// Objects are the morphisms into `x`, named after them; a morphism from
/// `f` to `g` is a morphism `h` of `C` with `h ; g = f`.
#[derive(Debug, Clone)]
pub struct Slice {
    category: Arc<FinCat>,
    projection: Functor,
    over: Obj,
    base_of_object: Vec<Mor>,
    object_of_base: HashMap<Mor, Obj>,
}

impl Slice {
    pub fn category(&self) -> &Arc<FinCat> {
        &self.category
    }

    pub fn projection(&self) -> &Functor {
        &self.projection
    }

    pub fn over(&self) -> Obj {
        self.over
    }

    /// The morphism of the base category that a slice object stands for.
    pub fn base_morphism(&self, object: Obj) -> Mor {
        self.base_of_object[object.0]
    }

    /// The slice object for a base morphism into `over`.
    pub fn object_for(&self, base: Mor) -> Option<Obj> {
        self.object_of_base.get(&base).copied()
    }

    /// The slice morphism `a -> b` whose underlying morphism is `base`.
    pub fn morphism_for(&self, a: Obj, b: Obj, base: Mor) -> Option<Mor> {
        self.category.lifted_morphism(a, b, base)
    }
}

pub fn slice(c: &Arc<FinCat>, x: Obj, cap: usize) -> Result<Slice, CategoryError> {
    if x.0 >= c.object_count() {
        return Err(CategoryError::UnknownObject(format!("#{}", x.0)));
    }
    let projected: usize = c.all_objects().map(|y| c.hom(y, x).len()).sum();
    if projected > cap {
        return Err(CategoryError::SizeCapExceeded { projected, cap });
    }
    let mut objects = Vec::with_capacity(projected);
    let mut base_of_object = Vec::with_capacity(projected);
    let mut object_of_base = HashMap::with_capacity(projected);
    for y in c.all_objects() {
        for &f in c.hom(y, x) {
            object_of_base.insert(f, Obj(objects.len()));
            objects.push(c.morphism_name(f).to_string());
            base_of_object.push(f);
        }
    }

    let mut morphisms = Vec::new();
    let mut base_of = Vec::new();
    // h : dom f -> dom g lies over (h;g -> g); enumerate by target.
    for (gi, &g) in base_of_object.iter().enumerate() {
        let b = c.dom(g);
        for a in c.all_objects() {
            for &h in c.hom(a, b) {
                let f = c.compose_unchecked(h, g);
                let src = object_of_base[&f];
                morphisms.push(MorphismEntry {
                    name: format!("{}:{}->{}", c.morphism_name(h), objects[src.0], objects[gi]),
                    dom: src,
                    cod: Obj(gi),
                });
                base_of.push(h);
            }
        }
    }
    let category = lifted(c, objects, morphisms, base_of, |i| c.identity(c.dom(base_of_object[i])));
    let projection = Functor::from_parts_unchecked(
        category.clone(),
        c.clone(),
        base_of_object.iter().map(|&f| c.dom(f)).collect(),
        lifted_base_of(&category),
    );
    Ok(Slice {
        category,
        projection,
        over: x,
        base_of_object,
        object_of_base,
    })
}

/// The category of parallel arrows over `x` with its domain projection.
///
/// Objects are pairs `(f0, f1)` of morphisms `y -> x`; a morphism
/// `(f0, f1) -> (g0, g1)` is `h` with `f0 = h ; g0` and `f1 = h ; g1`.
#[derive(Debug, Clone)]
pub struct ParallelArrows {
    category: Arc<FinCat>,
    projection: Functor,
    over: Obj,
    pairs: Vec<(Mor, Mor)>,
    object_of_pair: HashMap<(Mor, Mor), Obj>,
}

impl ParallelArrows {
    pub fn category(&self) -> &Arc<FinCat> {
        &self.category
    }

    pub fn projection(&self) -> &Functor {
        &self.projection
    }

    pub fn over(&self) -> Obj {
        self.over
    }

    pub fn pair(&self, object: Obj) -> (Mor, Mor) {
        self.pairs[object.0]
    }

    pub fn object_for(&self, f0: Mor, f1: Mor) -> Option<Obj> {
        self.object_of_pair.get(&(f0, f1)).copied()
    }

    /// The object `(id_x, id_x)`.
    pub fn identity_pair(&self, base: &FinCat) -> Obj {
        let id = base.identity(self.over);
        self.object_of_pair[&(id, id)]
    }
}

/// `Σ_y |hom(y, x)|²`, the object count of [`parallel_arrows`].
pub fn parallel_arrow_count(c: &FinCat, x: Obj) -> usize {
    c.all_objects().map(|y| c.hom(y, x).len().pow(2)).sum()
}

pub fn parallel_arrows(c: &Arc<FinCat>, x: Obj, cap: usize) -> Result<ParallelArrows, CategoryError> {
    if x.0 >= c.object_count() {
        return Err(CategoryError::UnknownObject(format!("#{}", x.0)));
    }
    let projected = parallel_arrow_count(c, x);
    if projected > cap {
        return Err(CategoryError::SizeCapExceeded { projected, cap });
    }
    let mut objects = Vec::with_capacity(projected);
    let mut pairs = Vec::with_capacity(projected);
    let mut object_of_pair = HashMap::with_capacity(projected);
    for y in c.all_objects() {
        let hom = c.hom(y, x);
        for &f0 in hom {
            for &f1 in hom {
                object_of_pair.insert((f0, f1), Obj(objects.len()));
                objects.push(format!("({},{})", c.morphism_name(f0), c.morphism_name(f1)));
                pairs.push((f0, f1));
            }
        }
    }

    let mut morphisms = Vec::new();
    let mut base_of = Vec::new();
    for (ti, &(g0, g1)) in pairs.iter().enumerate() {
        let z = c.dom(g0);
        for y in c.all_objects() {
            for &h in c.hom(y, z) {
                let src = object_of_pair[&(c.compose_unchecked(h, g0), c.compose_unchecked(h, g1))];
                morphisms.push(MorphismEntry {
                    name: format!("{}:{}->{}", c.morphism_name(h), objects[src.0], objects[ti]),
                    dom: src,
                    cod: Obj(ti),
                });
                base_of.push(h);
            }
        }
    }
    let category = lifted(c, objects, morphisms, base_of, |i| c.identity(c.dom(pairs[i].0)));
    let projection = Functor::from_parts_unchecked(
        category.clone(),
        c.clone(),
        pairs.iter().map(|&(f, _)| c.dom(f)).collect(),
        lifted_base_of(&category),
    );
    Ok(ParallelArrows {
        category,
        projection,
        over: x,
        pairs,
        object_of_pair,
    })
}

fn lifted(
    base: &Arc<FinCat>,
    objects: Vec<String>,
    morphisms: Vec<MorphismEntry>,
    base_of: Vec<Mor>,
    identity_base: impl Fn(usize) -> Mor,
) -> Arc<FinCat> {
    let n = objects.len();
    let mut cat = FinCat::assemble(
        objects,
        morphisms,
        vec![Mor(0); n],
        Composition::Lifted {
            base: base.clone(),
            base_of,
        },
    );
    let identities = (0..n)
        .map(|i| {
            cat.lifted_morphism(Obj(i), Obj(i), identity_base(i))
                .expect("identity lies over an identity")
        })
        .collect();
    cat.identities = identities;
    Arc::new(cat)
}

fn lifted_base_of(c: &FinCat) -> Vec<Mor> {
    match &c.comp {
        Composition::Lifted { base_of, .. } => base_of.clone(),
        Composition::Table(_) => unreachable!("lifted category"),
    }
}

/// The arrow category: objects are morphisms, morphisms are commuting squares
/// `(u, v) : a -> b` with `a ; v = u ; b`.
pub fn arrow_category(c: &FinCat, cap: usize) -> Result<FinCat, CategoryError> {
    let projected = c.morphism_count();
    if projected > cap {
        return Err(CategoryError::SizeCapExceeded { projected, cap });
    }
    let objects: Vec<String> = c.all_morphisms().map(|f| c.morphism_name(f).to_string()).collect();
    let mut morphisms = Vec::new();
    let mut squares = Vec::new();
    let mut index = HashMap::new();
    for a in c.all_morphisms() {
        for b in c.all_morphisms() {
            for &u in c.hom(c.dom(a), c.dom(b)) {
                for &v in c.hom(c.cod(a), c.cod(b)) {
                    if c.compose(a, v) == c.compose(u, b) {
                        index.insert((a, b, u, v), Mor(morphisms.len()));
                        morphisms.push(MorphismEntry {
                            name: format!("[{},{}]:{}->{}", c.morphism_name(u), c.morphism_name(v), objects[a.0], objects[b.0]),
                            dom: Obj(a.0),
                            cod: Obj(b.0),
                        });
                        squares.push((a, b, u, v));
                    }
                }
            }
        }
    }
    let identities = c
        .all_morphisms()
        .map(|a| index[&(a, a, c.identity(c.dom(a)), c.identity(c.cod(a)))])
        .collect();
    Ok(FinCat::from_fn(objects, morphisms, identities, |s, t| {
        let (a, _, u, v) = squares[s.0];
        let (_, b, u2, v2) = squares[t.0];
        index[&(a, b, c.compose_unchecked(u, u2), c.compose_unchecked(v, v2))]
    }))
}
