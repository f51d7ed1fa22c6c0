use super::{PointedMap, PointedPoset, Poset};

type Signature = (bool, usize, usize, usize, usize, usize);

fn signatures(p: &PointedPoset) -> Vec<Signature> {
    let q = p.poset();
    let n = q.len();
    let covers = q.hasse();
    let levels = q.levels();
    (0..n)
        .map(|a| {
            (
                a == p.basepoint(),
                (0..n).filter(|&b| q.leq(b, a)).count(),
                (0..n).filter(|&b| q.leq(a, b)).count(),
                covers.iter().filter(|c| c.1 == a).count(),
                covers.iter().filter(|c| c.0 == a).count(),
                levels[a],
            )
        })
        .collect()
}

/// Searches for a basepoint-preserving order isomorphism.
///
/// Exhaustive backtracking; candidates are pruned by a per-element signature
/// (down-set and up-set sizes, cover degrees and height).
pub fn iso_pointed(a: &PointedPoset, b: &PointedPoset) -> Option<PointedMap> {
    if a.len() != b.len() {
        return None;
    }
    let (sa, sb) = (signatures(a), signatures(b));
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort();
    kb.sort();
    if ka != kb {
        return None;
    }
    let n = a.len();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| sa[x] == sb[y]).collect())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| candidates[x].len());

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(a.poset(), b.poset(), &order, &candidates, 0, &mut map, &mut used) {
        PointedMap::new(a.clone(), b.clone(), map).ok()
    } else {
        None
    }
}

fn search(
    p: &Poset,
    q: &Poset,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&z| {
            let w = map[z];
            p.leq(x, z) == q.leq(y, w) && p.leq(z, x) == q.leq(w, y)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if search(p, q, order, candidates, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}
