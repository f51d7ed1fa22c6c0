use std::collections::BTreeSet;

use super::{OrderError, PointedMap, PointedPoset, Poset};

/// Subsets of a finite universe ordered by inclusion, with every subset of
/// `collapsed` identified into the basepoint.
///
/// This is the shape every homotopy poset of a slice of finite sets takes, as
/// well as that of slices of inclusion-ordered relations. It is kept
/// symbolic because the number of elements is exponential in the universe;
/// [`SubsetQuotient::materialize`] lists it explicitly when small.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetQuotient {
    universe: Vec<String>,
    collapsed: BTreeSet<usize>,
    basepoint_label: String,
}

impl SubsetQuotient {
    pub fn new(universe: Vec<String>, collapsed: BTreeSet<usize>, basepoint_label: &str) -> Result<Self, OrderError> {
        if let Some(&i) = collapsed.iter().find(|&&i| i >= universe.len()) {
            return Err(OrderError::UnknownElement(format!("#{i}")));
        }
        let mut seen = BTreeSet::new();
        for u in &universe {
            if !seen.insert(u) {
                return Err(OrderError::DuplicateElement(u.clone()));
            }
        }
        Ok(SubsetQuotient {
            universe,
            collapsed,
            basepoint_label: basepoint_label.to_string(),
        })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn collapsed(&self) -> &BTreeSet<usize> {
        &self.collapsed
    }

    pub fn basepoint_label(&self) -> &str {
        &self.basepoint_label
    }

    pub fn is_trivial(&self) -> bool {
        self.collapsed.len() == self.universe.len()
    }

    /// `2^|U| - 2^|L| + 1`, if it fits.
    pub fn element_count(&self) -> Option<u128> {
        let (u, l) = (self.universe.len() as u32, self.collapsed.len() as u32);
        if u >= 127 {
            return None;
        }
        Some((1u128 << u) - (1u128 << l) + 1)
    }

    /// Element count, written as a power expression when it overflows.
    pub fn element_count_display(&self) -> String {
        match self.element_count() {
            Some(n) => n.to_string(),
            None => format!("2^{} - 2^{} + 1", self.universe.len(), self.collapsed.len()),
        }
    }

    /// Universe members outside the collapsed set; their singletons are the
    /// minimal obstructions.
    pub fn obstruction_generators(&self) -> Vec<usize> {
        (0..self.universe.len()).filter(|i| !self.collapsed.contains(i)).collect()
    }

    pub fn minimal_names(&self) -> Vec<String> {
        self.obstruction_generators()
            .into_iter()
            .map(|i| self.subset_name(&[i].into_iter().collect()))
            .collect()
    }

    pub fn subset_name(&self, s: &BTreeSet<usize>) -> String {
        let parts: Vec<&str> = s.iter().map(|&i| self.universe[i].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// `None` stands for the basepoint.
    pub fn class_of(&self, s: &BTreeSet<usize>) -> Option<BTreeSet<usize>> {
        (!s.is_subset(&self.collapsed)).then(|| s.clone())
    }

    /// Lists every element: the basepoint first, then the surviving subsets
    /// by size and then lexicographically by index.
    pub fn materialize(&self, max_universe: usize) -> Result<(PointedPoset, Vec<BTreeSet<usize>>), OrderError> {
        let u = self.universe.len();
        if u > max_universe {
            return Err(OrderError::TooLarge {
                size: self.element_count_display(),
                cap: max_universe,
            });
        }
        let collapsed_mask: u64 = self.collapsed.iter().map(|&i| 1u64 << i).sum();
        let mut masks: Vec<u64> = (0..1u64 << u).filter(|m| m & !collapsed_mask != 0).collect();
        masks.sort_by_key(|&m| {
            let bits: Vec<usize> = (0..u).filter(|&i| m >> i & 1 == 1).collect();
            (bits.len(), bits)
        });
        let sets: Vec<BTreeSet<usize>> = std::iter::once(BTreeSet::new())
            .chain(masks.iter().map(|&m| (0..u).filter(|&i| m >> i & 1 == 1).collect()))
            .collect();
        let mut elements = vec![self.basepoint_label.clone()];
        elements.extend(sets[1..].iter().map(|s| self.subset_name(s)));
        if elements[1..].contains(&self.basepoint_label) {
            return Err(OrderError::LabelCollision(self.basepoint_label.clone()));
        }
        let n = elements.len();
        let mut leq = vec![false; n * n];
        leq[..n].fill(true);
        for (i, &ma) in masks.iter().enumerate() {
            for (j, &mb) in masks.iter().enumerate() {
                leq[(i + 1) * n + j + 1] = ma & !mb == 0;
            }
        }
        let pointed = PointedPoset::new(Poset::from_matrix_unchecked(elements, leq), 0)?;
        Ok((pointed, sets))
    }
}

/// The map between subset quotients induced by a function of universes,
/// sending a subset to its image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetMap {
    source: SubsetQuotient,
    target: SubsetQuotient,
    image: Vec<usize>,
}

impl SubsetMap {
    /// Fails with `BasepointNotPreserved` unless collapsed members land in
    /// the target's collapsed set. Monotonicity is automatic.
    pub fn new(source: SubsetQuotient, target: SubsetQuotient, image: Vec<usize>) -> Result<SubsetMap, OrderError> {
        if image.len() != source.universe.len() {
            return Err(OrderError::IllDefined("universe map is not total".into()));
        }
        if let Some(&b) = image.iter().find(|&&b| b >= target.universe.len()) {
            return Err(OrderError::UnknownElement(format!("#{b}")));
        }
        if source.collapsed.iter().any(|&l| !target.collapsed.contains(&image[l])) {
            return Err(OrderError::BasepointNotPreserved);
        }
        Ok(SubsetMap { source, target, image })
    }

    pub fn source(&self) -> &SubsetQuotient {
        &self.source
    }

    pub fn target(&self) -> &SubsetQuotient {
        &self.target
    }

    pub fn universe_image(&self, i: usize) -> usize {
        self.image[i]
    }

    /// Image of a subset element; `None` is the basepoint.
    pub fn apply(&self, s: &BTreeSet<usize>) -> Option<BTreeSet<usize>> {
        let img: BTreeSet<usize> = s.iter().map(|&i| self.image[i]).collect();
        self.target.class_of(&img)
    }

    /// For each minimal obstruction, whether it is sent to the basepoint.
    pub fn minimal_fates(&self) -> Vec<(String, String, bool)> {
        self.source
            .obstruction_generators()
            .into_iter()
            .map(|i| {
                let s: BTreeSet<usize> = [i].into_iter().collect();
                let img = [self.image[i]].into_iter().collect();
                let trivialised = self.target.class_of(&img).is_none();
                let name = if trivialised {
                    self.target.basepoint_label.clone()
                } else {
                    self.target.subset_name(&img)
                };
                (self.source.subset_name(&s), name, trivialised)
            })
            .collect()
    }

    /// Whether every element goes to the basepoint.
    pub fn is_trivialising(&self) -> bool {
        self.source
            .obstruction_generators()
            .into_iter()
            .all(|i| self.target.collapsed.contains(&self.image[i]))
    }

    pub fn materialize(&self, max_universe: usize) -> Result<PointedMap, OrderError> {
        let (src, src_sets) = self.source.materialize(max_universe)?;
        let (tgt, tgt_sets) = self.target.materialize(max_universe)?;
        let map = src_sets
            .iter()
            .enumerate()
            .map(|(i, s)| {
                if i == 0 {
                    return 0;
                }
                match self.apply(s) {
                    None => 0,
                    Some(t) => tgt_sets.iter().position(|x| *x == t).expect("image is listed"),
                }
            })
            .collect();
        PointedMap::new(src, tgt, map)
    }
}
