//! The maps of a filtration step
//!
//! ```text
//! 0 -> ⊕ F^B(C(W_D)) [|A|]  --i-->  F^{B ∪ A}(C_G)  --j-->  F^{B ∪ A ∪ x}(C_G) -> 0
//! ```
//!
//! where `B` is the base requirement, `A` the added generators, `x` the next
//! generator and `D = G \ A \ x`. The direct sum runs over the left cosets of
//! `W_D` and is materialised as `F^B(C_D)` over all of `W`. The inclusion is
//! `E(w, g) -> ±E(w, g ∪ A)` and `Δ` is the chain-level connecting map.

use std::sync::Arc;

use crate::complex::builder::build_complex;
use crate::complex::cell::Cell;
use crate::complex::chain::{ChainComplex, ChainMap, MuConvention};
use crate::error::{Error, Result};
use crate::scalar::{sign, Int};
use crate::weyl::{CosetDecomposition, GenSet, WeylContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiltrationStep {
    pub ambient: GenSet,
    pub base: GenSet,
    pub added: GenSet,
    pub next: usize,
}

impl FiltrationStep {
    pub fn new(ambient: GenSet, base: GenSet, added: GenSet, next: usize) -> Result<Self> {
        let step = Self { ambient, base, added, next };
        let x = GenSet::single(next);
        if !base.union(added).union(x).is_subset(ambient) {
            return Err(Error::InvalidFiltration(format!("{step} uses generators outside {ambient}")));
        }
        if !base.intersection(added).is_empty() || base.union(added).contains(next) {
            return Err(Error::InvalidFiltration(format!("{step}: base, added and next must be disjoint")));
        }
        Ok(step)
    }

    /// Requirement of the middle complex.
    pub fn required(&self) -> GenSet {
        self.base.union(self.added)
    }

    /// Requirement of the quotient complex.
    pub fn quotient_required(&self) -> GenSet {
        self.required().with(self.next)
    }

    /// Generators `D` of the summands of the kernel.
    pub fn kernel_generators(&self) -> GenSet {
        self.ambient.minus(self.added).without(self.next)
    }

    /// Same middle and quotient, with the kernel taken as the plain
    /// subcomplex `F^{B ∪ A}(C_{G \ x})`.
    pub fn generalized(&self) -> Self {
        Self { base: self.required(), added: GenSet::EMPTY, ..*self }
    }

    pub fn inclusion_shift(&self) -> isize {
        self.added.len() as isize
    }

    pub fn delta_shift(&self) -> isize {
        -(self.added.len() as isize + 1)
    }

    /// Sign exponent making `E(w, g) -> E(w, g ∪ A)` a chain map:
    /// the number of pairs `(a, s)` with `a` added, `s` in `g \ B`, `a < s`.
    pub fn koszul(&self, gamma: GenSet) -> usize {
        gamma.minus(self.base).iter().map(|s| self.added.count_below(s)).sum()
    }
}

impl std::fmt::Display for FiltrationStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "step(G={}, B={}, A={}, x=s{})", self.ambient, self.base, self.added, self.next)
    }
}

/// All complexes and maps of one filtration step.
#[derive(Clone, Debug)]
pub struct FiltrationMaps {
    pub step: FiltrationStep,
    pub kernel: Arc<ChainComplex>,
    pub middle: Arc<ChainComplex>,
    pub quotient: Arc<ChainComplex>,
    pub inclusion: ChainMap,
    pub projection: ChainMap,
    pub delta: ChainMap,
    /// Left cosets of `W_D`, one per summand of the kernel.
    pub copies: CosetDecomposition,
}

/// Builds the step and checks that `i`, `j` and `Δ` are chain maps.
pub fn build_filtration_step(ctx: &WeylContext, step: FiltrationStep, mu: MuConvention) -> Result<FiltrationMaps> {
    let kernel = Arc::new(build_complex(ctx, step.kernel_generators(), step.base, mu)?);
    let middle = Arc::new(build_complex(ctx, step.ambient, step.required(), mu)?);
    let quotient = Arc::new(build_complex(ctx, step.ambient, step.quotient_required(), mu)?);
    let inclusion = build_inclusion_map(&step, &kernel, &middle)?;
    let projection = build_projection_map(&middle, &quotient);
    let delta = build_delta_map(ctx, &step, &quotient, &kernel, mu)?;
    inclusion.check_chain_map()?;
    projection.check_chain_map()?;
    delta.check_chain_map()?;
    let copies = ctx.cosets(step.kernel_generators())?;
    Ok(FiltrationMaps { step, kernel, middle, quotient, inclusion, projection, delta, copies })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepForm {
    /// Kernel is the sum of copies of the smaller complex.
    Summands,
    /// The summand form failed the chain-map check; the kernel is the
    /// subcomplex of cells without `x`.
    Generalized,
}

/// Tries the summand form first and falls back to the generalized one.
pub fn build_filtration_step_or_generalized(
    ctx: &WeylContext,
    step: FiltrationStep,
    mu: MuConvention,
) -> Result<(FiltrationMaps, StepForm)> {
    match build_filtration_step(ctx, step, mu) {
        Ok(maps) => Ok((maps, StepForm::Summands)),
        Err(Error::NotAChainMap { .. }) if !step.added.is_empty() => {
            Ok((build_filtration_step(ctx, step.generalized(), mu)?, StepForm::Generalized))
        }
        Err(e) => Err(e),
    }
}

fn lookup(complex: &ChainComplex, cell: Cell, what: &str) -> Result<usize> {
    complex
        .cell_index(cell.dimension(), &cell)
        .ok_or_else(|| Error::InvalidFiltration(format!("{what}: cell {cell} missing from target")))
}

pub fn build_inclusion_map(step: &FiltrationStep, kernel: &Arc<ChainComplex>, middle: &Arc<ChainComplex>) -> Result<ChainMap> {
    let mut columns: Vec<Vec<Vec<(usize, Int)>>> = Vec::new();
    for d in 0..kernel.num_degrees() {
        let mut cols = Vec::new();
        for cell in kernel.cells(d) {
            let image = Cell::new(cell.element, cell.gamma.union(step.added));
            cols.push(vec![(lookup(middle, image, "inclusion")?, sign::<Int>(step.koszul(cell.gamma)))]);
        }
        columns.push(cols);
    }
    Ok(ChainMap::from_fn("i", Arc::clone(kernel), Arc::clone(middle), step.inclusion_shift(), |d, c| {
        columns[d][c].clone()
    }))
}

/// Keeps the cells that survive in the quotient.
pub fn build_projection_map(middle: &Arc<ChainComplex>, quotient: &Arc<ChainComplex>) -> ChainMap {
    ChainMap::from_fn("j", Arc::clone(middle), Arc::clone(quotient), 0, |d, c| {
        let cell = middle.cells(d)[c];
        quotient.cell_index(d, &cell).map(|r| vec![(r, Int::from(1))]).unwrap_or_default()
    })
}

/// `Δ E(w, g ∪ A ∪ x) = τ Σ_{b ∈ W^{g ∪ A}_{g ∪ A ∪ x}} (-1)^{l(b)} E(w b, g)`,
/// with `τ = (-1)^{deg + mu(g ∪ A ∪ x, x) + koszul(g)}`.
pub fn build_delta_map(
    ctx: &WeylContext,
    step: &FiltrationStep,
    quotient: &Arc<ChainComplex>,
    kernel: &Arc<ChainComplex>,
    mu: MuConvention,
) -> Result<ChainMap> {
    let group = &ctx.group;
    let mut columns: Vec<Vec<Vec<(usize, Int)>>> = Vec::new();
    for d in 0..quotient.num_degrees() {
        let mut cols = Vec::new();
        for cell in quotient.cells(d) {
            let full = cell.gamma;
            let gamma = full.minus(step.added).without(step.next);
            let table = ctx.subgroup(full)?;
            let tau = d + mu.mu(full, step.next) + step.koszul(gamma);
            let mut col = Vec::new();
            for p in table.min_coset_positions(full.without(step.next)) {
                let target = Cell::new(group.multiply(cell.element, table.members[p]), gamma);
                col.push((lookup(kernel, target, "delta")?, sign::<Int>(table.gamma_length[p] + tau)));
            }
            cols.push(col);
        }
        columns.push(cols);
    }
    Ok(ChainMap::from_fn("delta", Arc::clone(quotient), Arc::clone(kernel), step.delta_shift(), |d, c| {
        columns[d][c].clone()
    }))
}

/// Whether `Δ` equals the literal sum (without `τ`) up to one global sign,
/// and which sign.
pub fn delta_literal_sign(maps: &FiltrationMaps, mu: MuConvention) -> Option<i32> {
    let step = &maps.step;
    let mut seen: Option<i32> = None;
    for d in 0..maps.quotient.num_degrees() {
        for cell in maps.quotient.cells(d) {
            let gamma = cell.gamma.minus(step.added).without(step.next);
            let t = d + mu.mu(cell.gamma, step.next) + step.koszul(gamma);
            let s = if t % 2 == 0 { 1 } else { -1 };
            match seen {
                None => seen = Some(s),
                Some(prev) if prev != s => return None,
                _ => {}
            }
        }
    }
    Some(seen.unwrap_or(1))
}
