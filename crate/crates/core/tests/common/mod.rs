#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use obstructia::fincat::{FinCat, Functor, Mor, NaturalTransformation, Obj, RawCategory};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_OBJECTS: usize = 5;
pub const MAX_MORPHISMS: usize = 25;

/// Base seed, overridable through `OBSTRUCTIA_SEED`.
pub fn seed() -> u64 {
    std::env::var("OBSTRUCTIA_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(0x0b57_7ac7)
}

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed() ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

type Function = (usize, usize, Vec<usize>);

fn compose(f: &Function, g: &Function) -> Function {
    (f.0, g.1, f.2.iter().map(|&b| g.2[b]).collect())
}

fn random_function(rng: &mut ChaCha8Rng, sizes: &[usize]) -> Option<Function> {
    let (d, c) = (rng.gen_range(0..sizes.len()), rng.gen_range(0..sizes.len()));
    if sizes[d] > 0 && sizes[c] == 0 {
        return None;
    }
    Some((d, c, (0..sizes[d]).map(|_| rng.gen_range(0..sizes[c])).collect()))
}

/// A random subcategory of finite sets: a few objects of size at most three,
/// some generating functions, closed under composition. Sometimes one
/// singleton object receives every map into it, making it terminal.
pub fn random_category(rng: &mut ChaCha8Rng) -> Arc<FinCat> {
    loop {
        let n = rng.gen_range(1..=MAX_OBJECTS);
        let mut sizes: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        let mut functions: BTreeSet<Function> = (0..n).map(|o| (o, o, (0..sizes[o]).collect())).collect();
        let generators = rng.gen_range(0..=6);
        for _ in 0..generators {
            if let Some(f) = random_function(rng, &sizes) {
                functions.insert(f);
            }
        }
        if rng.gen_bool(0.3) {
            let t = rng.gen_range(0..n);
            sizes[t] = 1;
            functions.retain(|f| f.0 != t && f.1 != t);
            functions.insert((t, t, vec![0]));
            for (o, &size) in sizes.iter().enumerate() {
                functions.insert((o, t, vec![0; size]));
            }
        }
        loop {
            let current: Vec<Function> = functions.iter().cloned().collect();
            let before = functions.len();
            for f in &current {
                for g in current.iter().filter(|g| g.0 == f.1) {
                    functions.insert(compose(f, g));
                }
            }
            if functions.len() > MAX_MORPHISMS || functions.len() == before {
                break;
            }
        }
        if functions.len() > MAX_MORPHISMS {
            continue;
        }
        return Arc::new(FinCat::validate(&to_raw(&functions, n)).expect("closed sets of functions form a category"));
    }
}

fn to_raw(functions: &BTreeSet<Function>, n: usize) -> RawCategory {
    let list: Vec<&Function> = functions.iter().collect();
    let index: BTreeMap<&Function, usize> = list.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let name = |i: usize| {
        let f = list[i];
        if f.0 == f.1 && f.2.iter().enumerate().all(|(a, &b)| a == b) {
            format!("id{}", f.0)
        } else {
            format!("m{i}")
        }
    };
    let mut raw = RawCategory {
        objects: (0..n).map(|o| format!("o{o}")).collect(),
        ..Default::default()
    };
    for (i, f) in list.iter().enumerate() {
        raw.morphisms.push((name(i), format!("o{}", f.0), format!("o{}", f.1)));
        if raw.morphisms.last().unwrap().0.starts_with("id") {
            raw.identities.push((format!("o{}", f.0), name(i)));
        }
    }
    for (i, f) in list.iter().enumerate() {
        for (j, g) in list.iter().enumerate().filter(|(_, g)| g.0 == f.1) {
            raw.compositions.push((name(i), name(j), name(index[&compose(f, g)])));
        }
    }
    raw
}

/// Composable pairs `(f, g, f;g)`.
fn composable(c: &FinCat) -> Vec<(Mor, Mor, Mor)> {
    let mut out = Vec::new();
    for f in c.all_morphisms() {
        for g in c.all_morphisms() {
            if let Some(h) = c.compose(f, g) {
                out.push((f, g, h));
            }
        }
    }
    out
}

/// A random functor `C -> D` found by randomized backtracking, falling back
/// to a constant functor when the search budget runs out.
pub fn random_functor(rng: &mut ChaCha8Rng, c: &Arc<FinCat>, d: &Arc<FinCat>) -> Functor {
    let comps = composable(c);
    let mut budget = 20_000usize;
    let mut objs: Vec<Obj> = d.all_objects().collect();
    for _ in 0..4 {
        let obj_map: Vec<Obj> = c.all_objects().map(|_| *objs.choose(rng).unwrap()).collect();
        let mut mor_map: Vec<Option<Mor>> = vec![None; c.morphism_count()];
        for x in c.all_objects() {
            mor_map[c.identity(x).0] = Some(d.identity(obj_map[x.0]));
        }
        let order: Vec<Mor> = c.all_morphisms().filter(|&f| mor_map[f.0].is_none()).collect();
        if search(rng, c, d, &comps, &obj_map, &mut mor_map, &order, 0, &mut budget) {
            let mors = mor_map.into_iter().map(Option::unwrap).collect();
            return Functor::new(c.clone(), d.clone(), obj_map, mors).expect("search checks every law");
        }
    }
    objs.shuffle(rng);
    Functor::constant(c.clone(), d.clone(), objs[0])
}

#[allow(clippy::too_many_arguments)]
fn search(
    rng: &mut ChaCha8Rng,
    c: &FinCat,
    d: &FinCat,
    comps: &[(Mor, Mor, Mor)],
    obj_map: &[Obj],
    mor_map: &mut Vec<Option<Mor>>,
    order: &[Mor],
    at: usize,
    budget: &mut usize,
) -> bool {
    if at == order.len() {
        return true;
    }
    let f = order[at];
    let mut candidates: Vec<Mor> = d.hom(obj_map[c.dom(f).0], obj_map[c.cod(f).0]).to_vec();
    candidates.shuffle(rng);
    for m in candidates {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        mor_map[f.0] = Some(m);
        let consistent = comps.iter().all(|&(g, h, k)| match (mor_map[g.0], mor_map[h.0], mor_map[k.0]) {
            (Some(a), Some(b), Some(ab)) => d.compose(a, b) == Some(ab),
            _ => true,
        });
        if consistent && search(rng, c, d, comps, obj_map, mor_map, order, at + 1, budget) {
            return true;
        }
    }
    mor_map[f.0] = None;
    false
}

/// Components `α_x : F x -> G x` making every naturality square commute,
/// found by randomized search over each object's candidates.
pub fn find_transformation(rng: &mut ChaCha8Rng, f: &Functor, g: &Functor) -> Option<NaturalTransformation> {
    let (c, d) = (f.source().clone(), f.target().clone());
    let objects: Vec<Obj> = c.all_objects().collect();
    let mut chosen: Vec<Option<Mor>> = vec![None; objects.len()];
    let mut budget = 20_000usize;
    #[allow(clippy::too_many_arguments)]
    fn go(
        rng: &mut ChaCha8Rng,
        c: &FinCat,
        d: &FinCat,
        f: &Functor,
        g: &Functor,
        chosen: &mut Vec<Option<Mor>>,
        at: usize,
        budget: &mut usize,
    ) -> bool {
        if at == chosen.len() {
            return true;
        }
        let x = Obj(at);
        let mut candidates = d.hom(f.obj(x), g.obj(x)).to_vec();
        candidates.shuffle(rng);
        for a in candidates {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            chosen[at] = Some(a);
            let natural = c.all_morphisms().all(|m| {
                match (chosen[c.dom(m).0], chosen[c.cod(m).0]) {
                    (Some(ax), Some(ay)) => d.compose(f.mor(m), ay) == d.compose(ax, g.mor(m)),
                    _ => true,
                }
            });
            if natural && go(rng, c, d, f, g, chosen, at + 1, budget) {
                return true;
            }
        }
        chosen[at] = None;
        false
    }
    if !go(rng, &c, &d, f, g, &mut chosen, 0, &mut budget) {
        return None;
    }
    let components = chosen.into_iter().map(Option::unwrap).collect();
    Some(NaturalTransformation::new(f.clone(), g.clone(), components).expect("search checks naturality"))
}

/// A random natural transformation between random functors `C -> D`,
/// settling for an identity transformation after a few failed pairs.
pub fn random_transformation(rng: &mut ChaCha8Rng, c: &Arc<FinCat>, d: &Arc<FinCat>) -> NaturalTransformation {
    for _ in 0..8 {
        let f = random_functor(rng, c, d);
        let g = random_functor(rng, c, d);
        if let Some(alpha) = find_transformation(rng, &f, &g) {
            return alpha;
        }
    }
    NaturalTransformation::identity(random_functor(rng, c, d))
}

pub fn is_weak_terminal(c: &FinCat, x: Obj) -> bool {
    c.all_objects().all(|z| !c.hom(z, x).is_empty())
}

pub fn is_subterminal(c: &FinCat, x: Obj) -> bool {
    c.all_objects().all(|z| c.hom(z, x).len() <= 1)
}

pub fn is_split_epi(c: &FinCat, f: Mor) -> bool {
    c.hom(c.cod(f), c.dom(f))
        .iter()
        .any(|&s| c.compose(s, f) == Some(c.identity(c.cod(f))))
}

pub fn is_mono(c: &FinCat, f: Mor) -> bool {
    c.all_objects().all(|w| {
        let hom = c.hom(w, c.dom(f));
        hom.iter()
            .all(|&g| hom.iter().all(|&h| g == h || c.compose(g, f) != c.compose(h, f)))
    })
}
