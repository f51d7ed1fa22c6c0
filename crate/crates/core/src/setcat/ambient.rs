use crate::fincat::{CategoryError, FinCat, Mor, MorphismEntry, Obj};

use super::{FiniteFunction, SetError};

pub const DEFAULT_AMBIENT_CAP: usize = 4;

/// The skeleton of finite sets `{0..n-1}` for `n = 0..=k`, with every
/// function as a morphism. Morphisms are named `n->m:` followed by the
/// images of `0..n-1`.
pub fn finset_ambient(k: usize) -> Result<FinCat, SetError> {
    finset_ambient_with_cap(k, DEFAULT_AMBIENT_CAP)
}

pub fn finset_ambient_with_cap(k: usize, cap: usize) -> Result<FinCat, SetError> {
    if k > cap || k > 9 {
        return Err(SetError::CapExceeded { k, cap });
    }
    let sizes = k + 1;
    let mut offset = vec![0usize; sizes * sizes];
    let mut functions: Vec<Vec<usize>> = Vec::new();
    let mut morphisms = Vec::new();
    for n in 0..sizes {
        for m in 0..sizes {
            offset[n * sizes + m] = functions.len();
            for f in FiniteFunction::all_canonical(n, m) {
                morphisms.push(MorphismEntry {
                    name: f.name().to_string(),
                    dom: Obj(n),
                    cod: Obj(m),
                });
                functions.push(f.map);
            }
        }
    }
    let index_of = |n: usize, m: usize, map: &[usize]| {
        let code = map.iter().fold(0, |acc, &b| acc * m + b);
        Mor(offset[n * sizes + m] + code)
    };
    let identities = (0..sizes).map(|n| index_of(n, n, &(0..n).collect::<Vec<_>>())).collect();
    let objects = (0..sizes).map(|n| n.to_string()).collect();
    let compose = |f: Mor, g: Mor| {
        let (ff, gg) = (&functions[f.0], &functions[g.0]);
        let composite: Vec<usize> = ff.iter().map(|&b| gg[b]).collect();
        index_of(morphisms[f.0].dom.0, morphisms[g.0].cod.0, &composite)
    };
    Ok(FinCat::from_fn(objects, morphisms.clone(), identities, compose))
}

/// The morphism of the ambient skeleton standing for `f`, read through the
/// positions of its domain and codomain labels.
pub fn ambient_morphism(ambient: &FinCat, f: &FiniteFunction) -> Result<Mor, CategoryError> {
    let name = format!(
        "{}->{}:{}",
        f.dom().len(),
        f.cod().len(),
        f.as_slice().iter().map(|b| b.to_string()).collect::<String>()
    );
    ambient.morphism(&name)
}
