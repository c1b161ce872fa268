//! Cell bases and boundary matrices.
//!
//! Every complex here is `F^R(C_G)`: the cells `E(w, gamma)` for all `w` in
//! the finite group `W`, with `R ⊆ gamma ⊆ G` and `W_gamma` finite, and
//!
//! ```text
//! d E(w, gamma) = sum over s in gamma \ R, b in W_gamma^{gamma \ s} of
//!                 (-1)^(l_gamma(b) + mu(gamma, s)) E(w b, gamma \ s)
//! ```
//!
//! With `G = S` and `R = ∅` this is the Salvetti complex `C(W)`; with
//! `G = S~` it is the toric complex. When `G` is a proper subset the complex
//! splits as one copy of `C(W_G)` per left coset of `W_G`.

use crate::complex::chain::{ChainComplex, ComplexInfo, Construction, MuConvention};
use crate::complex::cell::Cell;
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::scalar::{sign, Int};
use crate::weyl::{GenSet, WeylContext};

pub fn build_complex(ctx: &WeylContext, generators: GenSet, required: GenSet, mu: MuConvention) -> Result<ChainComplex> {
    if !generators.is_subset(ctx.generators()) {
        let label = generators.minus(ctx.generators()).iter().next().unwrap_or(0);
        return Err(Error::UnknownGenerator { label, kind: ctx.kind.to_string() });
    }
    if !required.is_subset(generators) {
        return Err(Error::InvalidFiltration(format!("{required} is not contained in {generators}")));
    }
    let construction = if ctx.is_affine() { Construction::Toric } else { Construction::Salvetti };
    let info = ComplexInfo { kind: ctx.kind, construction, generators, required, mu };

    let gammas: Vec<GenSet> =
        generators.subsets().filter(|g| required.is_subset(*g) && ctx.is_finite(*g)).collect();
    let Some(top) = gammas.iter().map(|g| g.len()).max() else {
        let mut c = ChainComplex::empty();
        c.info = Some(info);
        return Ok(c);
    };
    let by_degree: Vec<Vec<GenSet>> =
        (0..=top).map(|k| gammas.iter().copied().filter(|g| g.len() == k).collect()).collect();
    let ordinal = |g: GenSet| by_degree[g.len()].iter().position(|h| *h == g).expect("gamma in basis");

    let group = &ctx.group;
    let n = group.order();
    let basis: Vec<Vec<Cell>> = by_degree
        .iter()
        .map(|gs| (0..n).flat_map(|w| gs.iter().map(move |&g| Cell::new(w, g))).collect())
        .collect();

    let mut boundary = vec![SparseMatrix::zeros(0, basis[0].len())];
    for k in 1..=top {
        // Terms of d E(e, gamma), shared by every w: (b, gamma \ s, sign).
        let mut terms: Vec<Vec<(usize, usize, Int)>> = Vec::new();
        for &gamma in &by_degree[k] {
            let table = ctx.subgroup(gamma)?;
            let mut t = Vec::new();
            for s in gamma.minus(required).iter() {
                let face = gamma.without(s);
                let m = mu.mu(gamma, s);
                for p in table.min_coset_positions(face) {
                    t.push((table.members[p], ordinal(face), sign::<Int>(table.gamma_length[p] + m)));
                }
            }
            terms.push(t);
        }
        let ng = by_degree[k].len();
        let nf = by_degree[k - 1].len();
        let columns = (0..n * ng)
            .map(|col| {
                let (w, gi) = (col / ng, col % ng);
                terms[gi].iter().map(|(b, fi, v)| (group.multiply(w, *b) * nf + fi, v.clone())).collect()
            })
            .collect();
        boundary.push(SparseMatrix::from_columns(n * nf, columns));
    }
    let complex = ChainComplex::new(Some(info), basis, boundary)?;
    complex.check_boundary_squares()?;
    Ok(complex)
}

/// `C(W)` for a finite type.
pub fn build_salvetti_complex(ctx: &WeylContext, mu: MuConvention) -> Result<ChainComplex> {
    if ctx.is_affine() {
        return Err(Error::InvalidFiltration(format!("{} is affine; build the toric complex instead", ctx.kind)));
    }
    build_complex(ctx, ctx.generators(), GenSet::EMPTY, mu)
}

/// `T(W~)` for an affine type: cells `E([w], gamma)` with `gamma ⊊ S~`.
pub fn build_toric_complex(ctx: &WeylContext, mu: MuConvention) -> Result<ChainComplex> {
    if !ctx.is_affine() {
        return Err(Error::NotFinite(format!("{} is finite; the toric complex needs an affine type", ctx.kind)));
    }
    build_complex(ctx, ctx.generators(), GenSet::EMPTY, mu)
}

/// The quotient spanned by cells whose `gamma` contains `required`.
pub fn filtration_quotient<T: crate::scalar::Ring>(complex: &ChainComplex<T>, required: GenSet) -> Result<ChainComplex<T>> {
    let info = match complex.info {
        Some(info) => {
            if !required.is_subset(info.generators) {
                return Err(Error::InvalidFiltration(format!("{required} is not contained in {}", info.generators)));
            }
            Some(ComplexInfo { required: info.required.union(required), ..info })
        }
        None => None,
    };
    Ok(complex.restrict(|c| required.is_subset(c.gamma), info))
}
