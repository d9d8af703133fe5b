//! Seeded verification suites. Every report records its seed and instance
//! count, so a rerun with the same flags is byte-identical.

use mazic_core::dmc::{
    check_degraded, check_strong_conditions, check_very_strong_conditions, fixtures, theorem1_region,
    theorem2_region, DiscreteMazic, Direction, InputFactorization, Verdict,
};
use mazic_core::gaussian::{
    inner_bound, inner_bound_timeshared, mixed_outer_contains, nosplit_inner, one_strong_outer,
    strong_capacity_b_large, strong_outer, very_strong_capacity, weak_outer_contains,
};
use mazic_core::json::to_string;
use mazic_core::model::sample;
use mazic_core::ratesystem::verify_theorem1_equivalence;
use mazic_core::{GaussianMazic, Polytope3, SplitParams, EPS_CMP};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::commands::read_channel_file;
use crate::error::CliError;
use crate::{Opts, Output, Suite};

/// Failures listed in a report beyond this count are only counted.
const MAX_LISTED: usize = 20;

#[derive(Serialize)]
struct Report {
    suite: &'static str,
    seed: u64,
    tol: f64,
    checks: usize,
    failed: usize,
    failures: Vec<String>,
    detail: Value,
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(what());
            }
        }
    }

    fn finish(self, suite: &'static str, seed: u64, tol: f64, detail: Value) -> Output {
        let failed = self.failed > 0;
        let report =
            Report { suite, seed, tol, checks: self.checks, failed: self.failed, failures: self.failures, detail };
        Output { text: to_string(&report), failed }
    }
}

pub fn run(opts: &Opts, suite: Suite) -> Result<Output, CliError> {
    let tol = opts.tol_or(EPS_CMP)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    match suite {
        Suite::Containment => containment(opts, tol, &mut rng),
        Suite::FmEquivalence => fm_equivalence(opts, tol, &mut rng),
        Suite::DmcChecks => dmc_checks(opts, &mut rng),
    }
}

fn random_split(rng: &mut ChaCha8Rng) -> Result<SplitParams, CliError> {
    Ok(SplitParams::new(rng.gen(), rng.gen())?)
}

/// Achievable regions valid for every channel.
fn inner_family(ch: &GaussianMazic, rng: &mut ChaCha8Rng) -> Result<Vec<Polytope3>, CliError> {
    Ok(vec![
        nosplit_inner(ch)?,
        inner_bound(ch, random_split(rng)?)?,
        inner_bound(ch, SplitParams::new(1.0, 1.0)?)?,
        inner_bound_timeshared(ch, 3)?,
    ])
}

fn containment(opts: &Opts, tol: f64, rng: &mut ChaCha8Rng) -> Result<Output, CliError> {
    let n = opts.count.unwrap_or(200);
    let mut t = Tally::default();
    for _ in 0..n {
        let ch = sample::weak(rng);
        for p in inner_family(&ch, rng)? {
            for v in p.vertices() {
                t.check(weak_outer_contains(&ch, v, tol)?, || format!("weak {ch:?}: {v:?} outside the outer bound"));
            }
        }
    }
    for _ in 0..n {
        let ch = sample::mixed(rng);
        for p in inner_family(&ch, rng)? {
            for v in p.vertices() {
                t.check(mixed_outer_contains(&ch, v, tol)?, || format!("mixed {ch:?}: {v:?} outside the outer bound"));
            }
        }
    }
    for _ in 0..n {
        let ch = sample::strong(rng);
        let outer = strong_outer(&ch)?;
        let one = if ch.a <= 1.0 + ch.p3 { Some(one_strong_outer(&ch)?) } else { None };
        for p in inner_family(&ch, rng)? {
            t.check(outer.contains_region(&p, tol), || format!("strong {ch:?}: inner escapes the strong outer bound"));
            if let Some(o) = &one {
                t.check(o.contains_region(&p, tol), || format!("strong {ch:?}: inner escapes the one-strong bound"));
            }
        }
    }
    for _ in 0..n {
        let ch = sample::very_strong(rng);
        let cap = very_strong_capacity(&ch)?;
        t.check(cap.region_eq(&nosplit_inner(&ch)?.remove_redundant(), tol), || {
            format!("very strong {ch:?}: no-split region differs from capacity")
        });
    }
    for _ in 0..n {
        let ch = sample::b_large(rng);
        let (inner, outer) = (strong_capacity_b_large(&ch)?, one_strong_outer(&ch)?);
        t.check(inner.region_eq(&outer, tol), || format!("b-large {ch:?}: inner and outer differ"));
    }
    let detail = json!({ "channels_per_regime": n, "regimes": ["weak", "mixed", "strong", "very-strong", "b-large"] });
    Ok(t.finish("containment", opts.seed, tol, detail))
}

fn fm_equivalence(opts: &Opts, tol: f64, rng: &mut ChaCha8Rng) -> Result<Output, CliError> {
    let n = opts.count.unwrap_or(100);
    let mut t = Tally::default();
    let (mut worst, mut rows) = (0.0f64, 0usize);
    for _ in 0..n {
        let ch = sample::any(rng);
        let split = random_split(rng)?;
        let rep = verify_theorem1_equivalence(&ch, split)?;
        worst = worst.max(rep.max_slack_bits);
        rows = rows.max(rep.rows_after_fm);
        t.check(rep.max_slack_bits <= tol, || format!("{ch:?} {split:?}: slack {}", rep.max_slack_bits));
    }
    let detail = json!({ "instances": n, "max_slack_bits": worst, "max_rows_after_fm": rows });
    Ok(t.finish("fm-equivalence", opts.seed, tol, detail))
}

fn dmc_checks(opts: &Opts, rng: &mut ChaCha8Rng) -> Result<Output, CliError> {
    if let Some(v) = read_channel_file(opts)? {
        let ch: DiscreteMazic = serde_json::from_value(v).map_err(|e| CliError::Input(format!("channel: {e}")))?;
        return Ok(Output::ok(channel_report(&ch, opts.grid_or(5)?)?));
    }
    let mut t = Tally::default();
    let dirs = [Direction::ThroughX2, Direction::ThroughX1, Direction::Mixed, Direction::Weak];
    let n = opts.count.unwrap_or(10);
    for i in 0..n {
        let dir = dirs[i % dirs.len()];
        let ch = fixtures::degraded_channel(rng, [3, 3, 2, 2, 2], dir);
        t.check(check_degraded(&ch, dir).feasible, || format!("composed channel {i} ({dir:?}) not degraded"));
        let bad = fixtures::perturb_y2(&ch, [0, 0, 0, 0], 0.05);
        t.check(!check_degraded(&bad, dir).feasible, || format!("perturbed channel {i} ({dir:?}) degraded"));
    }

    let p_y1: Vec<f64> = (0..4).flat_map(|_| fixtures::random_pmf(rng, 3)).collect();
    let full = fixtures::full_view_receiver2([2, 2, 2], 3, p_y1);
    let strong = check_strong_conditions(&full, 5)?;
    t.check(strong.verdict == Verdict::HoldsOnGrid, || format!("full view: min margin {}", strong.min_margin));
    let (p1, p2, p3) = (fixtures::random_pmf(rng, 2), fixtures::random_pmf(rng, 2), fixtures::random_pmf(rng, 2));
    let t2 = theorem2_region(&full, &InputFactorization::product(&p1, &p2, &p3))?;
    let t1 = theorem1_region(&full, &InputFactorization::full_common(&p1, &p2, &p3))?;
    t.check(t2.contains_region(&t1, 1e-9), || "full view: capacity region misses the common-message region".into());

    let blind = check_strong_conditions(&fixtures::xor_with_blind_receiver2(0.1), 5)?;
    t.check(blind.verdict == Verdict::Counterexample, || "blind receiver 2: no counterexample".into());

    let detail = json!({
        "degraded_pairs": n,
        "full_view_min_margin": strong.min_margin,
        "blind_min_margin": blind.min_margin,
    });
    Ok(t.finish("dmc-checks", opts.seed, 1e-9, detail))
}

/// Condition and degradedness verdicts for a user-supplied discrete channel.
fn channel_report(ch: &DiscreteMazic, levels: usize) -> Result<String, CliError> {
    let strong = check_strong_conditions(ch, levels)?;
    let very = check_very_strong_conditions(ch, levels)?;
    let degraded: Vec<Value> = [Direction::ThroughX2, Direction::ThroughX1, Direction::Mixed, Direction::Weak]
        .into_iter()
        .map(|d| {
            let r = check_degraded(ch, d);
            json!({ "direction": d, "feasible": r.feasible, "max_residual": r.max_residual })
        })
        .collect();
    let summary = |r: &mazic_core::dmc::ConditionReport| {
        json!({
            "verdict": r.verdict,
            "levels": r.levels,
            "grid_points": r.grid_points,
            "min_margin": r.min_margin,
            "per_condition_min": r.per_condition_min,
            "argmin": r.argmin,
        })
    };
    Ok(to_string(&json!({
        "strong": summary(&strong),
        "very_strong": summary(&very),
        "degraded": degraded,
    })))
}
