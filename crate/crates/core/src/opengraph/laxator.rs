use crate::fincat::DEFAULT_OBJECT_CAP;
use crate::homotopy::{pi1, ObstructionReport};
use crate::order::{OrderError, PointedPoset, SubsetMap, SubsetQuotient};
use crate::setcat::EMPTY_LABEL;

use super::{compose, compose_rel, reach, GraphError, GraphHom, OpenGraph, Relation};

/// Largest `|R(G∘H)|` for which [`pi1_laxator`] runs the generic engine on
/// the slice of relations; beyond it the slice is thin and `π₁` is read off
/// as trivial.
pub const GENERIC_PI1_LIMIT: usize = 4;

/// The laxator component `R(G);R(H) ⊆ R(G∘H)` as a subset quotient: relations
/// inside `R(G∘H)`, with those inside `R(G);R(H)` collapsed. Also returns
/// both relations.
pub fn laxator_subsets(g: &OpenGraph, h: &OpenGraph) -> Result<(SubsetQuotient, Relation, Relation), GraphError> {
    let whole = reach(&compose(g, h)?);
    let parts = compose_rel(&reach(g), &reach(h))?;
    if let Some(&p) = parts.pairs().iter().find(|&&(a, b)| !whole.contains(a, b)) {
        return Err(GraphError::LaxityViolation(parts.pair_label(p)));
    }
    let universe: Vec<(usize, usize)> = whole.pairs().iter().copied().collect();
    let labels = universe.iter().map(|&p| whole.pair_label(p)).collect();
    let collapsed = (0..universe.len()).filter(|&i| parts.pairs().contains(&universe[i])).collect();
    let q = SubsetQuotient::new(labels, collapsed, EMPTY_LABEL)?;
    Ok((q, whole, parts))
}

/// `π₀` of the slice of relations over `R(G∘H)` at the laxator component.
pub fn laxator_obstructions(g: &OpenGraph, h: &OpenGraph) -> Result<ObstructionReport, GraphError> {
    let (q, _, _) = laxator_subsets(g, h)?;
    Ok(ObstructionReport::from_subsets("pi0 of the laxator component", q))
}

/// `π₁` of the same slice at the same point. Small slices are handed to the
/// generic engine as thin categories.
pub fn pi1_laxator(g: &OpenGraph, h: &OpenGraph) -> Result<ObstructionReport, GraphError> {
    let (_, whole, parts) = laxator_subsets(g, h)?;
    let context = "pi1 of the laxator component";
    let label = format!("[{parts}]");
    if whole.len() > GENERIC_PI1_LIMIT {
        return Ok(ObstructionReport::from_poset(context, PointedPoset::trivial(&label)));
    }
    let labels: Vec<String> = whole.pairs().iter().map(|&p| whole.pair_label(p)).collect();
    let everything = SubsetQuotient::new(labels, Default::default(), EMPTY_LABEL)?;
    let (powerset, sets) = everything.materialize(GENERIC_PI1_LIMIT)?;
    let pairs: Vec<(usize, usize)> = whole.pairs().iter().copied().collect();
    let at = sets
        .iter()
        .position(|s| s.len() == parts.len() && s.iter().all(|&i| parts.pairs().contains(&pairs[i])))
        .expect("composite of parts is a subset");
    let thin = std::sync::Arc::new(powerset.poset().to_category());
    let p = pi1(&thin, crate::fincat::Obj(at), DEFAULT_OBJECT_CAP).expect("slice of a small powerset");
    let q = p.pointed().poset();
    let names: Vec<String> = q.elements().to_vec();
    let relabelled = crate::order::Poset::new(
        names
            .iter()
            .enumerate()
            .map(|(i, n)| if i == p.pointed().basepoint() { label.clone() } else { n.clone() })
            .collect(),
        q.leq_pairs(),
    )?;
    Ok(ObstructionReport::from_poset(context, PointedPoset::new(relabelled, p.pointed().basepoint())?))
}

/// The result of acting on `G` with a homomorphism `G -> G'`.
#[derive(Debug, Clone)]
pub struct Action {
    pub graph: OpenGraph,
    pub before: ObstructionReport,
    pub after: ObstructionReport,
    pub map: SubsetMap,
}

/// Pushes the laxator obstructions of `(G, H)` to those of `(G', H)` along
/// `hom : G -> G'`: a relation inside `R(G∘H)` is sent to the same relation
/// inside `R(G'∘H)`.
pub fn act(hom: &GraphHom, h: &OpenGraph) -> Result<Action, GraphError> {
    let (before, whole_before, _) = laxator_subsets(hom.source(), h)?;
    let (after, whole_after, _) = laxator_subsets(hom.target(), h)?;
    let target_pairs: Vec<(usize, usize)> = whole_after.pairs().iter().copied().collect();
    let image = whole_before
        .pairs()
        .iter()
        .map(|p| {
            target_pairs
                .binary_search(p)
                .map_err(|_| OrderError::IllDefined(whole_before.pair_label(*p)))
        })
        .collect::<Result<Vec<usize>, OrderError>>()?;
    let map = SubsetMap::new(before.clone(), after.clone(), image)?;
    Ok(Action {
        graph: hom.target().clone(),
        before: ObstructionReport::from_subsets("pi0 of the laxator component before", before),
        after: ObstructionReport::from_subsets("pi0 of the laxator component after", after),
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opengraph::hom::tests::IDENTIFY;
    use crate::opengraph::tests::{g, h};

    #[test]
    fn example_has_one_obstruction() {
        let r = laxator_obstructions(&g(), &h()).unwrap();
        assert_eq!(r.minimal, ["{(1,1)}"]);
        let p = r.materialize(12).unwrap();
        assert_eq!(p.poset().elements(), ["{}", "{(1,1)}"]);
        assert!(p.poset().lt(0, 1));
    }

    #[test]
    fn example_pi1_is_trivial() {
        let r = pi1_laxator(&g(), &h()).unwrap();
        assert!(r.trivial);
        assert_eq!(r.basepoint_name(), "[{}]");
    }

    #[test]
    fn identifying_outputs_trivialises() {
        let hom = GraphHom::parse(&g(), IDENTIFY).unwrap();
        let a = act(&hom, &h()).unwrap();
        assert!(a.after.trivial);
        assert!(a.map.is_trivialising());
        let fates = a.map.minimal_fates();
        assert_eq!(fates, [("{(1,1)}".to_string(), "{}".to_string(), true)]);
    }

    #[test]
    fn identity_action() {
        let a = act(&GraphHom::identity(&g()), &h()).unwrap();
        assert!(a.map.materialize(12).unwrap().is_identity());
    }

    #[test]
    fn strong_pair_is_trivial() {
        let id = OpenGraph::identity(g().outputs());
        assert!(laxator_obstructions(&g(), &id).unwrap().trivial);
    }

    #[test]
    fn gap_of_two() {
        let right = OpenGraph::parse(
            "inputs 1,2,3\noutputs z,w\nvertex p1 p2 p3 z w\nedge p1 -> p2\nedge p3 -> z\nedge p3 -> w\n\
             in 1 = p1\nin 2 = p2\nin 3 = p3\nout z = z\nout w = w\n",
        )
        .unwrap();
        let (q, whole, parts) = laxator_subsets(&g(), &right).unwrap();
        assert!(parts.is_empty());
        assert_eq!(whole.len(), 2);
        assert_eq!(q.element_count(), Some(4));
        let r = laxator_obstructions(&g(), &right).unwrap();
        assert_eq!(r.minimal, ["{(1,z)}", "{(1,w)}"]);
        assert!(pi1_laxator(&g(), &right).unwrap().trivial);
    }
}
