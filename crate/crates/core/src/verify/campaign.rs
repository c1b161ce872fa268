use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::complex::{
    build_complex, build_delta_map, build_filtration_step_or_generalized, build_inclusion_map, build_projection_map,
    square_difference,
    verify_short_exact, ChainComplex, ChainMap, FiltrationMaps, FiltrationStep, MuConvention, StepForm,
};
use crate::error::{Error, Result};
use crate::homology::{
    homology_all, homology_bases, homology_ladder, induced_maps, is_one_free, verify_long_exact, HomologyGroup,
};
use crate::linalg::Matrix;
use crate::scalar::Int;
use crate::verify::report::{Check, Status, SubjectReport, Timing, VerificationReport};
use crate::weyl::{GenSet, WeylContext, WeylType, DEFAULT_MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// (a) `d^2 = 0`, cell counts, unit coefficients.
    Boundary,
    /// (b) homology of `C(W)`.
    FiniteSalvetti,
    /// (c) homology of every filtration stage.
    Filtration,
    /// (d) homology of the toric complex.
    Toric,
    /// (e) short and long exact sequences.
    Exactness,
    /// (f) one-freeness of the induced maps.
    OneFree,
    /// (g) commuting squares between toric and finite maps.
    Squares,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Boundary,
        Suite::FiniteSalvetti,
        Suite::Filtration,
        Suite::Toric,
        Suite::Exactness,
        Suite::OneFree,
        Suite::Squares,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Boundary => "boundary",
            Suite::FiniteSalvetti => "finite-salvetti",
            Suite::Filtration => "filtration",
            Suite::Toric => "toric",
            Suite::Exactness => "exactness",
            Suite::OneFree => "one-free",
            Suite::Squares => "squares",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    /// Accepts the suite name or its letter `a`..`g`.
    fn from_str(s: &str) -> Result<Self> {
        let by_letter = ["a", "b", "c", "d", "e", "f", "g"].iter().position(|l| *l == s);
        if let Some(i) = by_letter {
            return Ok(Suite::ALL[i]);
        }
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Schema(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct CampaignSpec {
    pub types: Vec<WeylType>,
    pub suites: Vec<Suite>,
    pub mu: MuConvention,
    /// Worker threads; `None` uses every core.
    pub jobs: Option<usize>,
    pub max_order: u128,
}

impl Default for CampaignSpec {
    fn default() -> Self {
        Self {
            types: default_types(),
            suites: Suite::ALL.to_vec(),
            mu: MuConvention::Index,
            jobs: None,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

/// The desk-scale campaign: `A1`-`A3`, `B2`, `B3`, `G2` and the affine
/// types `A~1`-`A~3`, `B~2`, `C~2`, `G~2`.
pub fn default_types() -> Vec<WeylType> {
    ["A1", "A2", "A3", "B2", "B3", "G2", "A~1", "A~2", "A~3", "B~2", "C~2", "G~2"]
        .iter()
        .map(|t| t.parse().expect("catalogued type"))
        .collect()
}

impl CampaignSpec {
    pub fn validate(&self) -> Result<()> {
        for t in &self.types {
            if t.group_order() > self.max_order {
                return Err(Error::GroupTooLarge { kind: t.to_string(), order: t.group_order(), bound: self.max_order });
            }
        }
        Ok(())
    }

    fn wants(&self, s: Suite) -> bool {
        self.suites.contains(&s)
    }
}

/// Runs every requested suite on every type. Types are processed in a
/// bounded pool; the report lists them in the requested order.
pub fn run_campaign(spec: &CampaignSpec) -> Result<VerificationReport> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Schema(format!("cannot start worker pool: {e}")))?;
    let results: Vec<(SubjectReport, Timing)> =
        pool.install(|| spec.types.par_iter().map(|t| run_subject(*t, spec)).collect());
    let (subjects, timings) = results.into_iter().unzip();
    let mut suites = spec.suites.clone();
    suites.sort();
    suites.dedup();
    Ok(VerificationReport::new(spec.mu.name(), suites.iter().map(|s| s.name().to_string()).collect(), subjects, timings))
}

struct Log {
    checks: Vec<Check>,
}

impl Log {
    fn push(&mut self, suite: Suite, name: impl Into<String>, status: Status, detail: impl Into<String>, witness: Option<Value>) {
        self.checks.push(Check { suite: suite.name().into(), name: name.into(), status, detail: detail.into(), witness });
    }

    fn check(&mut self, suite: Suite, name: impl Into<String>, ok: bool, detail: impl Into<String>, witness: Option<Value>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(suite, name, status, detail, witness);
    }

    fn error(&mut self, suite: Suite, name: impl Into<String>, e: &Error) {
        self.push(suite, name, Status::Fail, e.to_string(), None);
    }
}

fn run_subject(kind: WeylType, spec: &CampaignSpec) -> (SubjectReport, Timing) {
    let start = Instant::now();
    let construction = if kind.affine { "toric" } else { "salvetti" };
    let subject = format!("{kind} {construction}");
    let mut log = Log { checks: Vec::new() };
    match WeylContext::with_bound(kind, spec.max_order) {
        Ok(ctx) => run_checks(&ctx, spec, &mut log),
        Err(e) => log.error(Suite::Boundary, "enumerate the group", &e),
    }
    let millis = start.elapsed().as_millis() as u64;
    let report = SubjectReport { subject: subject.clone(), kind: kind.to_string(), construction: construction.into(), checks: log.checks };
    (report, Timing { subject, millis })
}

fn run_checks(ctx: &WeylContext, spec: &CampaignSpec, log: &mut Log) {
    let mu = spec.mu;
    if spec.wants(Suite::Boundary) {
        boundary_checks(ctx, mu, log);
    }
    if !ctx.is_affine() && spec.wants(Suite::FiniteSalvetti) {
        match build_complex(ctx, ctx.generators(), GenSet::EMPTY, mu) {
            Ok(c) => finite_homology_checks(ctx, &c, log),
            Err(e) => log.error(Suite::FiniteSalvetti, "build C(W)", &e),
        }
    }
    if ctx.is_affine() && spec.wants(Suite::Toric) {
        toric_checks(ctx, mu, log);
    }
    if spec.wants(Suite::Filtration) {
        for required in filtration_stages(ctx) {
            let name = format!("F^{required} torsion-free");
            match build_complex(ctx, ctx.generators(), required, mu) {
                Ok(c) => {
                    torsion_check(log, Suite::Filtration, name, &c);
                }
                Err(e) => log.error(Suite::Filtration, name, &e),
            }
        }
    }
    if spec.wants(Suite::Exactness) || spec.wants(Suite::OneFree) {
        for step in filtration_steps(ctx) {
            step_checks(ctx, step, spec, log);
        }
    }
    if ctx.is_affine() && spec.wants(Suite::Squares) {
        let m = ctx.kind.rank as isize;
        for h in -1..=m - 2 {
            base_square(ctx, h, mu, log);
        }
        for h in -1..=m - 3 {
            for k in h + 2..=m - 1 {
                ladder_square(ctx, h, k, mu, log);
            }
        }
    }
}

fn boundary_checks(ctx: &WeylContext, mu: MuConvention, log: &mut Log) {
    let other = match mu {
        MuConvention::Index => MuConvention::Position,
        MuConvention::Position => MuConvention::Index,
    };
    for conv in [mu, other] {
        let name = format!("d^2 = 0 with mu convention `{}`", conv.name());
        let result = build_complex(ctx, ctx.generators(), GenSet::EMPTY, conv);
        let status = match (&result, conv == mu) {
            (Ok(_), true) => Status::Pass,
            (Err(_), true) => Status::Fail,
            (_, false) => Status::Note,
        };
        let detail = match &result {
            Ok(_) => "boundary squares to zero".to_string(),
            Err(e) => e.to_string(),
        };
        log.push(Suite::Boundary, name, status, detail, None);
        let Ok(c) = result else { continue };
        if conv != mu {
            continue;
        }
        let m = ctx.kind.rank;
        let order = ctx.group.order();
        let expected: Vec<usize> = if ctx.is_affine() {
            (0..=m).map(|k| order * binomial(m + 1, k)).collect()
        } else {
            (0..=m).map(|k| order * binomial(m, k)).collect()
        };
        log.check(Suite::Boundary, "cell counts", c.dims() == expected, format!("{:?}", c.dims()), Some(json!({ "expected": expected, "found": c.dims() })));
        log.check(Suite::Boundary, "boundary coefficients are units", c.has_unit_boundary(), "", None);
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn groups_witness(groups: &[HomologyGroup]) -> Value {
    json!({
        "betti": groups.iter().map(|g| g.betti).collect::<Vec<_>>(),
        "torsion": groups
            .iter()
            .filter(|g| !g.torsion.is_empty())
            .map(|g| json!({ "degree": g.degree, "factors": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>() }))
            .collect::<Vec<_>>(),
    })
}

fn torsion_check(log: &mut Log, suite: Suite, name: String, c: &ChainComplex) -> Vec<HomologyGroup> {
    let groups = homology_all(c);
    let ok = groups.iter().all(HomologyGroup::is_torsion_free);
    let table: Vec<String> = groups.iter().map(|g| g.to_string()).collect();
    log.check(suite, name, ok, table.join(", "), Some(groups_witness(&groups)));
    groups
}

/// Coefficients of `prod (1 + e_i t)`.
pub fn poincare_polynomial(exponents: &[usize]) -> Vec<usize> {
    let mut p = vec![1usize];
    for &e in exponents {
        let mut next = vec![0; p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * e;
        }
        p = next;
    }
    p
}

fn euler_from_betti(groups: &[HomologyGroup]) -> i64 {
    groups.iter().map(|g| if g.degree % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) }).sum()
}

fn finite_homology_checks(ctx: &WeylContext, c: &ChainComplex, log: &mut Log) {
    let groups = torsion_check(log, Suite::FiniteSalvetti, "H_*(C(W)) torsion-free".into(), c);
    let betti: Vec<usize> = groups.iter().map(|g| g.betti).collect();
    let expected = poincare_polynomial(&ctx.kind.exponents());
    log.check(
        Suite::FiniteSalvetti,
        "Betti numbers match prod (1 + e_i t)",
        betti == expected,
        format!("{betti:?}"),
        Some(json!({ "expected": expected, "found": betti })),
    );
    log.check(
        Suite::FiniteSalvetti,
        "Euler characteristic from Betti numbers",
        euler_from_betti(&groups) == c.euler_characteristic(),
        c.euler_characteristic().to_string(),
        None,
    );
}

fn toric_checks(ctx: &WeylContext, mu: MuConvention, log: &mut Log) {
    let proper: Vec<GenSet> = ctx.generators().subsets().filter(|g| *g != ctx.generators()).collect();
    let mut bad = Vec::new();
    for gamma in &proper {
        if let Err(e) = ctx.subgroup(*gamma) {
            bad.push(format!("{gamma}: {e}"));
        }
    }
    log.check(
        Suite::Toric,
        "quotient subgroups have the abstract orders",
        bad.is_empty(),
        format!("{} proper subsets", proper.len()),
        (!bad.is_empty()).then(|| json!(bad)),
    );
    let c = match build_complex(ctx, ctx.generators(), GenSet::EMPTY, mu) {
        Ok(c) => c,
        Err(e) => return log.error(Suite::Toric, "build the toric complex", &e),
    };
    let groups = torsion_check(log, Suite::Toric, "H_*(T) torsion-free".into(), &c);
    let m = ctx.kind.rank;
    let expected = if m % 2 == 0 { 1 } else { -1 } * ctx.group.order() as i64;
    log.check(
        Suite::Toric,
        "Euler characteristic is (-1)^m |W|",
        c.euler_characteristic() == expected && euler_from_betti(&groups) == expected,
        expected.to_string(),
        Some(json!({ "cells": c.euler_characteristic(), "betti": euler_from_betti(&groups), "expected": expected })),
    );
}

/// `{s_0..s_h}`, empty for `h = -1`.
pub fn lower(h: isize) -> GenSet {
    GenSet::range(0, h)
}

/// `{s_{k+1}..s_m}`.
pub fn upper(k: isize, m: usize) -> GenSet {
    GenSet::range((k + 1) as usize, m as isize)
}

/// Requirement sets of the filtration stages checked for `ctx`.
pub fn filtration_stages(ctx: &WeylContext) -> Vec<GenSet> {
    let m = ctx.kind.rank;
    let mut out = BTreeSet::new();
    if ctx.is_affine() {
        for h in -1..=m as isize - 1 {
            for k in h + 1..=m as isize {
                out.insert(lower(h).union(upper(k, m)));
            }
        }
        out.remove(&GenSet::EMPTY);
    } else {
        for k in 0..=m {
            out.insert(GenSet::range(m - k + 1, m as isize));
            out.insert(GenSet::range(1, k as isize));
        }
    }
    let mut v: Vec<GenSet> = out.into_iter().collect();
    v.sort_by_key(|g| (g.len(), g.bits()));
    v
}

/// Short exact sequences of the finite filtrations (from the top generator
/// down and from the bottom up) or of the two toric families.
pub fn filtration_steps(ctx: &WeylContext) -> Vec<FiltrationStep> {
    let g = ctx.generators();
    let m = ctx.kind.rank;
    let mut steps = Vec::new();
    let mut push = |base: GenSet, added: GenSet, next: usize| {
        let s = FiltrationStep::new(g, base, added, next).expect("well-formed step");
        if !steps.contains(&s) {
            steps.push(s);
        }
    };
    if ctx.is_affine() {
        let mi = m as isize;
        for h in -1..=mi - 2 {
            for k in h + 1..=mi - 1 {
                push(lower(h), upper(k + 1, m), (k + 1) as usize);
            }
        }
        for h in -1..=mi - 2 {
            for k in h + 2..=mi {
                push(upper(k, m), lower(h), (h + 1) as usize);
            }
        }
    } else {
        for k in 0..m {
            push(GenSet::EMPTY, GenSet::range(m - k + 1, m as isize), m - k);
        }
        for k in 0..m {
            push(GenSet::EMPTY, GenSet::range(1, k as isize), k + 1);
        }
    }
    steps
}

fn matrix_witness(m: &Matrix<Int>) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(|v| v.to_string()).collect()).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

fn step_checks(ctx: &WeylContext, step: FiltrationStep, spec: &CampaignSpec, log: &mut Log) {
    let label = step.to_string();
    let (maps, form) = match build_filtration_step_or_generalized(ctx, step, spec.mu) {
        Ok(x) => x,
        Err(e) => {
            let suite = if spec.wants(Suite::Exactness) { Suite::Exactness } else { Suite::OneFree };
            return log.error(suite, format!("{label}: chain maps"), &e);
        }
    };
    if form == StepForm::Generalized {
        log.push(
            Suite::Exactness,
            format!("{label}: summand form"),
            Status::Note,
            format!("inclusion of copies is not a chain map; using {}", maps.step),
            None,
        );
    }
    let ladder = match homology_ladder(&maps.inclusion, &maps.projection) {
        Ok(l) => l,
        Err(e) => return log.error(Suite::Exactness, format!("{label}: long exact sequence"), &e),
    };
    if spec.wants(Suite::Exactness) {
        let se = verify_short_exact(&maps.inclusion, &maps.projection);
        let witness = se.first_failure().map(|d| json!({ "degree": d.degree, "injective": d.injective, "surjective": d.surjective, "image_is_kernel": d.image_is_kernel }));
        log.check(Suite::Exactness, format!("{label}: short exact"), se.is_exact(), format!("{} copies", maps.copies.representatives.len()), witness);

        let les = ladder.long_exact_sequence(maps.inclusion.shift);
        let nodes = verify_long_exact(&les);
        let bad: Vec<&str> = nodes.iter().filter(|n| !n.is_exact()).map(|n| n.label.as_str()).collect();
        log.check(
            Suite::Exactness,
            format!("{label}: long exact"),
            bad.is_empty(),
            format!("{} nodes", nodes.len()),
            (!bad.is_empty()).then(|| json!({ "nodes": bad })),
        );
        delta_identification(&maps, &ladder, log, &label);
    }
    if spec.wants(Suite::OneFree) {
        let delta = induced_maps(&maps.delta, &ladder.quotient, &ladder.kernel);
        let mut failures = Vec::new();
        for (name, list) in [("i_*", Ok(ladder.i_star.clone())), ("j_*", Ok(ladder.j_star.clone())), ("Delta_*", delta)] {
            match list {
                Ok(list) => {
                    for m in list.iter().filter(|m| !is_one_free(&m.free)) {
                        failures.push(json!({ "map": name, "degree": m.source_degree, "matrix": matrix_witness(&m.free) }));
                    }
                }
                Err(e) => failures.push(json!({ "map": name, "error": e.to_string() })),
            }
        }
        for (n, m) in ladder.connecting.iter().enumerate().filter(|(_, m)| !is_one_free(m)) {
            failures.push(json!({ "map": "connecting", "degree": n, "matrix": matrix_witness(m) }));
        }
        log.check(
            Suite::OneFree,
            format!("{label}: i_*, j_*, Delta_* one-free"),
            failures.is_empty(),
            "",
            (!failures.is_empty()).then(|| json!(failures)),
        );
    }
}

/// `Δ_*` against the connecting map of the long exact sequence, up to `(-1)^n`.
fn delta_identification(maps: &FiltrationMaps, ladder: &crate::homology::HomologyLadder, log: &mut Log, label: &str) {
    let delta = match induced_maps(&maps.delta, &ladder.quotient, &ladder.kernel) {
        Ok(d) => d,
        Err(e) => return log.error(Suite::Exactness, format!("{label}: Delta_* is the connecting map"), &e),
    };
    let mut bad = Vec::new();
    for (n, conn) in ladder.connecting.iter().enumerate() {
        let d = &delta[n].free;
        let expected = if n % 2 == 0 { conn.clone() } else { conn.map(|v| -v.clone()) };
        if *d != expected {
            bad.push(json!({ "degree": n, "delta": matrix_witness(d), "connecting": matrix_witness(conn) }));
        }
    }
    log.check(
        Suite::Exactness,
        format!("{label}: Delta_* = (-1)^n connecting map"),
        bad.is_empty(),
        "",
        (!bad.is_empty()).then(|| json!(bad)),
    );
}

fn parts(ctx: &WeylContext, step: &FiltrationStep, mu: MuConvention) -> Result<[Arc<ChainComplex>; 3]> {
    Ok([
        Arc::new(build_complex(ctx, step.kernel_generators(), step.base, mu)?),
        Arc::new(build_complex(ctx, step.ambient, step.required(), mu)?),
        Arc::new(build_complex(ctx, step.ambient, step.quotient_required(), mu)?),
    ])
}

/// Which map of a step a square needs. Only that map has to be a chain map.
#[derive(Clone, Copy)]
enum Piece {
    I,
    J,
    Delta,
}

fn piece(ctx: &WeylContext, (ambient, base, added, next): (GenSet, GenSet, GenSet, usize), which: Piece, mu: MuConvention) -> Result<ChainMap> {
    let step = FiltrationStep::new(ambient, base, added, next)?;
    let [kernel, middle, quotient] = parts(ctx, &step, mu)?;
    let map = match which {
        Piece::I => build_inclusion_map(&step, &kernel, &middle)?,
        Piece::J => build_projection_map(&middle, &quotient),
        Piece::Delta => build_delta_map(ctx, &step, &quotient, &kernel, mu)?,
    };
    map.check_chain_map()?;
    Ok(map)
}

fn unavailable(log: &mut Log, name: String, e: Error) {
    match e {
        Error::NotAChainMap { .. } => log.push(Suite::Squares, name, Status::Note, format!("summand form unavailable: {e}"), None),
        e => log.error(Suite::Squares, name, &e),
    }
}

fn square_check(log: &mut Log, name: String, top: &ChainMap, bottom: &ChainMap, left: &ChainMap, right: &ChainMap) {
    match square_difference(top, bottom, left, right) {
        Ok(None) => log.check(Suite::Squares, name, true, "", None),
        Ok(Some((d, r, c))) => log.check(Suite::Squares, name, false, format!("differs in source degree {d}"), Some(json!({ "degree": d, "row": r, "col": c }))),
        Err(e) => log.error(Suite::Squares, name, &e),
    }
}

/// `Δ~` on the top cells `E([w], S~ \ s_{h+1})` against the finite `Δ` of
/// `W_{S~ \ s_{h+1}}` followed by the inclusion of the vertices.
fn base_square(ctx: &WeylContext, h: isize, mu: MuConvention, log: &mut Log) {
    let m = ctx.kind.rank;
    let s = ctx.generators();
    let hp = (h + 1) as usize;
    let x = (h + 2) as usize;
    let top_set = s.without(hp);
    let name = format!("base square h={h}");
    let built = (|| -> Result<_> {
        let toric = piece(ctx, (s, lower(h), upper(h + 2, m), x), Piece::Delta, mu)?;
        let finite = piece(ctx, (top_set, GenSet::EMPTY, top_set.without(x), x), Piece::Delta, mu)?;
        let incl = piece(ctx, (lower(h + 1), GenSet::EMPTY, lower(h), hp), Piece::I, mu)?;
        Ok((toric, finite, incl))
    })();
    let (toric, finite, incl) = match built {
        Ok(x) => x,
        Err(e) => return unavailable(log, name, e),
    };
    let id = ChainMap::identity(Arc::clone(&finite.source));
    square_check(log, format!("{name}: Delta~ = i Delta"), &finite, &toric, &id, &incl);

    // The same identity on homology, with independently computed bases.
    let q = homology_bases(&toric.source);
    let v = homology_bases(&finite.target);
    let k = homology_bases(&toric.target);
    let on_homology = (|| -> Result<bool> {
        let top = ctx.kind.rank;
        let dt = induced_maps(&toric, &q, &k)?;
        let df = induced_maps(&finite, &q, &v)?;
        let ii = induced_maps(&incl, &v, &k)?;
        let composite = &ii[0].free * &df[top].free;
        Ok(dt[top].free == composite)
    })();
    match on_homology {
        Ok(ok) => log.check(Suite::Squares, format!("{name}: Delta~_* = i_* Delta_*"), ok, "", None),
        Err(e) => log.error(Suite::Squares, format!("{name}: Delta~_* = i_* Delta_*"), &e),
    }
}

/// The two squares linking the filtration by `s_{h+1}` of
/// `F^{S~_h ∪ S^k}` with the maps `Δ~_n` and `Δ~_{n+1}`.
fn ladder_square(ctx: &WeylContext, h: isize, k: isize, mu: MuConvention, log: &mut Log) {
    let m = ctx.kind.rank;
    let s = ctx.generators();
    let name = format!("square h={h} k={k}");
    let (hp, kp) = ((h + 1) as usize, (k + 1) as usize);
    let top = (s, upper(k, m), lower(h), hp);
    let dn = (s, lower(h), upper(k + 1, m), kp);
    let dn1 = (s, lower(h + 1), upper(k + 1, m), kp);
    let bottom = (lower(k), GenSet::EMPTY, lower(h), hp);
    let left = (upper(h + 1, m), GenSet::EMPTY, upper(k + 1, m), kp);

    let built = (|| -> Result<_> {
        Ok([
            piece(ctx, top, Piece::I, mu)?,
            piece(ctx, bottom, Piece::I, mu)?,
            piece(ctx, left, Piece::Delta, mu)?,
            piece(ctx, dn, Piece::Delta, mu)?,
        ])
    })();
    match built {
        Ok([t, b, l, r]) => square_check(log, format!("{name}: left"), &t, &b, &l, &r),
        Err(e) => unavailable(log, format!("{name}: left"), e),
    }
    let built = (|| -> Result<_> {
        Ok([
            piece(ctx, top, Piece::J, mu)?,
            piece(ctx, bottom, Piece::J, mu)?,
            piece(ctx, dn, Piece::Delta, mu)?,
            piece(ctx, dn1, Piece::Delta, mu)?,
        ])
    })();
    match built {
        Ok([t, b, l, r]) => square_check(log, format!("{name}: right"), &t, &b, &l, &r),
        Err(e) => unavailable(log, format!("{name}: right"), e),
    }
}
