use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::weyl::diagram::{coxeter_diagram, CoxeterDiagram};
use crate::weyl::genset::GenSet;
use crate::weyl::group::{enumerate_weyl_group_bounded, project_affine_generator, WeylGroup, DEFAULT_MAX_ORDER};
use crate::weyl::subgroup::{coset_decomposition, reflection_subgroup, CosetDecomposition, SubgroupTable};
use crate::weyl::types::WeylType;

/// A finite or affine type together with the enumerated finite group `W`
/// and the image of every generator in it.
///
/// For affine types `W` is the quotient `W~/L`; `s_0` maps to the
/// highest-root reflection. Subgroup tables are built on first use.
#[derive(Debug)]
pub struct WeylContext {
    pub kind: WeylType,
    pub diagram: CoxeterDiagram,
    pub group: WeylGroup,
    images: Vec<usize>,
    tables: Vec<OnceLock<Arc<SubgroupTable>>>,
}

impl WeylContext {
    pub fn new(kind: WeylType) -> Result<Self> {
        Self::with_bound(kind, DEFAULT_MAX_ORDER)
    }

    pub fn with_bound(kind: WeylType, max_order: u128) -> Result<Self> {
        let diagram = coxeter_diagram(kind)?;
        let finite = coxeter_diagram(kind.finite_part())?;
        let group = enumerate_weyl_group_bounded(&finite, max_order)?;
        let mut images = vec![0; kind.rank + 1];
        for &label in &diagram.labels {
            images[label] = project_affine_generator(&diagram, &group, label)?;
        }
        let tables = (0..1usize << (kind.rank + 1)).map(|_| OnceLock::new()).collect();
        Ok(Self { kind, diagram, group, images, tables })
    }

    pub fn generators(&self) -> GenSet {
        self.diagram.generators()
    }

    pub fn is_affine(&self) -> bool {
        self.kind.affine
    }

    /// Image in `W` of the generator `s_label`.
    pub fn image(&self, label: usize) -> usize {
        assert!(self.generators().contains(label), "s{label} is not a generator of {}", self.kind);
        self.images[label]
    }

    /// Whether `gamma` generates a finite subgroup of the (affine) group.
    pub fn is_finite(&self, gamma: GenSet) -> bool {
        gamma.is_subset(self.generators()) && self.diagram.subgroup_order(gamma).is_some()
    }

    pub fn subgroup(&self, gamma: GenSet) -> Result<Arc<SubgroupTable>> {
        if !gamma.is_subset(self.generators()) {
            let label = gamma.minus(self.generators()).iter().next().unwrap_or(0);
            return Err(Error::UnknownGenerator { label, kind: self.kind.to_string() });
        }
        let slot = &self.tables[gamma.bits() as usize];
        if let Some(t) = slot.get() {
            return Ok(Arc::clone(t));
        }
        let images: Vec<(usize, usize)> = gamma.iter().map(|l| (l, self.images[l])).collect();
        let table = Arc::new(reflection_subgroup(&self.group, &self.diagram, gamma, &images)?);
        Ok(Arc::clone(slot.get_or_init(|| table)))
    }

    pub fn cosets(&self, gamma: GenSet) -> Result<CosetDecomposition> {
        Ok(coset_decomposition(&self.group, &*self.subgroup(gamma)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabolic_lengths_agree_with_ambient_lengths() {
        let ctx = WeylContext::new("B3".parse().unwrap()).unwrap();
        for gamma in ctx.generators().subsets() {
            let t = ctx.subgroup(gamma).unwrap();
            for (p, &w) in t.members.iter().enumerate() {
                assert_eq!(t.gamma_length[p], ctx.group.length(w));
            }
        }
    }

    #[test]
    fn b2_affine_non_parabolic_subgroup_index() {
        let ctx = WeylContext::new("B~2".parse().unwrap()).unwrap();
        let gamma = ctx.generators().without(2);
        let t = ctx.subgroup(gamma).unwrap();
        let expected = ctx.diagram.subgroup_order(gamma).unwrap() as usize;
        assert_eq!(t.order(), expected);
        assert_eq!(ctx.cosets(gamma).unwrap().len(), ctx.group.order() / expected);
    }

    #[test]
    fn every_proper_affine_subset_embeds() {
        for tag in ["A~1", "A~2", "A~3", "B~2", "C~2", "G~2", "B~3", "C~3", "D~4"] {
            let ctx = WeylContext::new(tag.parse().unwrap()).unwrap();
            for gamma in ctx.generators().subsets().filter(|g| *g != ctx.generators()) {
                ctx.subgroup(gamma).unwrap_or_else(|e| panic!("{tag} {gamma}: {e}"));
            }
            assert!(ctx.subgroup(ctx.generators()).is_err());
        }
    }
}
