use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::weyl::diagram::CoxeterDiagram;
use crate::weyl::genset::GenSet;
use crate::weyl::group::WeylGroup;

/// The subgroup of `W` generated by the images of the generators in `gamma`.
///
/// For parabolic subgroups the images are simple reflections; when `s_0` is
/// involved its image is the highest-root reflection and the subgroup need
/// not be parabolic. Lengths are always measured over the images.
#[derive(Clone, Debug)]
pub struct SubgroupTable {
    pub gamma: GenSet,
    /// `(label, parent element)` for each generator of `gamma`, ascending.
    pub images: Vec<(usize, usize)>,
    /// Parent element indices, in order of `gamma`-length then smallest word.
    pub members: Vec<usize>,
    pub gamma_length: Vec<usize>,
    position: HashMap<usize, usize>,
    /// `step[p * images.len() + g]` = position of `members[p] * image_g`.
    step: Vec<usize>,
}

/// Closure of the `images` (given by label) of `gamma` inside `group`.
///
/// The member count must equal the abstract order of the Coxeter group of
/// the subdiagram; anything else means the projection is not injective.
pub fn reflection_subgroup(
    group: &WeylGroup,
    diagram: &CoxeterDiagram,
    gamma: GenSet,
    images: &[(usize, usize)],
) -> Result<SubgroupTable> {
    let expected = diagram.subgroup_order(gamma).ok_or_else(|| Error::InfiniteSubgroup(gamma.to_string()))?;
    let mut images: Vec<(usize, usize)> = images.iter().copied().filter(|(l, _)| gamma.contains(*l)).collect();
    images.sort_unstable();
    images.dedup();
    if images.len() != gamma.len() {
        let missing = gamma.iter().find(|l| !images.iter().any(|(m, _)| m == l)).unwrap_or(0);
        return Err(Error::UnknownGenerator { label: missing, kind: diagram.kind.to_string() });
    }
    let n = images.len();
    let mut members = vec![0usize];
    let mut gamma_length = vec![0usize];
    let mut position = HashMap::from([(0usize, 0usize)]);
    let mut step = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(p) = queue.pop_front() {
        for &(_, img) in &images {
            let prod = group.multiply(members[p], img);
            let q = match position.get(&prod) {
                Some(&q) => q,
                None => {
                    let q = members.len();
                    if q as u128 >= expected {
                        return Err(Error::SubgroupOrderMismatch {
                            gamma: gamma.to_string(),
                            found: q + 1,
                            expected,
                        });
                    }
                    members.push(prod);
                    gamma_length.push(gamma_length[p] + 1);
                    position.insert(prod, q);
                    queue.push_back(q);
                    q
                }
            };
            step.push(q);
        }
    }
    debug_assert_eq!(step.len(), members.len() * n);
    if members.len() as u128 != expected {
        return Err(Error::SubgroupOrderMismatch { gamma: gamma.to_string(), found: members.len(), expected });
    }
    Ok(SubgroupTable { gamma, images, members, gamma_length, position, step })
}

impl SubgroupTable {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.position.contains_key(&element)
    }

    /// Position in `members` of a parent element.
    pub fn position(&self, element: usize) -> Option<usize> {
        self.position.get(&element).copied()
    }

    pub fn length_of(&self, element: usize) -> Option<usize> {
        self.position(element).map(|p| self.gamma_length[p])
    }

    fn generator_slot(&self, label: usize) -> usize {
        self.images.iter().position(|(l, _)| *l == label).expect("generator belongs to gamma")
    }

    /// Position of `members[p] * image(label)`.
    pub fn right_mult(&self, p: usize, label: usize) -> usize {
        self.step[p * self.images.len() + self.generator_slot(label)]
    }

    /// Members `w` with `l(w s) > l(w)` for every `s` in `gamma_prime`,
    /// as parent element indices in member order.
    pub fn min_coset_representatives(&self, gamma_prime: GenSet) -> Vec<usize> {
        self.min_coset_positions(gamma_prime).into_iter().map(|p| self.members[p]).collect()
    }

    pub fn min_coset_positions(&self, gamma_prime: GenSet) -> Vec<usize> {
        assert!(gamma_prime.is_subset(self.gamma), "{gamma_prime} is not contained in {}", self.gamma);
        let slots: Vec<usize> = gamma_prime.iter().map(|l| self.generator_slot(l)).collect();
        let n = self.images.len();
        (0..self.members.len())
            .filter(|&p| slots.iter().all(|&g| self.gamma_length[self.step[p * n + g]] > self.gamma_length[p]))
            .collect()
    }
}

/// Left cosets `w W_gamma` of a subgroup in the whole group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    /// One representative per coset: minimal length, ties by canonical order.
    pub representatives: Vec<usize>,
    /// Coset number of each element of `W`.
    pub coset: Vec<usize>,
    /// Member position `p` with `w = rep * members[p]`.
    pub factor: Vec<usize>,
}

impl CosetDecomposition {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

pub fn coset_decomposition(group: &WeylGroup, table: &SubgroupTable) -> CosetDecomposition {
    let n = group.order();
    let mut coset = vec![usize::MAX; n];
    let mut factor = vec![0; n];
    let mut representatives = Vec::new();
    // Canonical order sorts by length first, so the first unseen element of
    // each coset is its shortest member.
    for w in 0..n {
        if coset[w] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(w);
        for (p, &u) in table.members.iter().enumerate() {
            let wu = group.multiply(w, u);
            coset[wu] = c;
            factor[wu] = p;
        }
    }
    CosetDecomposition { representatives, coset, factor }
}
