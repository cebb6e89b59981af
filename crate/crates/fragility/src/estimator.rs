//! Fragility estimation: greedy removal, rewiring repair, iterative
//! add-back, and the two-strategy pipeline that picks the cheaper candidate
//! removal set.
//!
//! Rewiring swaps removed edges back in exchange for an equal number of
//! LCC-internal edges (so the removal count never changes) and keeps a swap
//! only when the largest component strictly shrinks; passes repeat until the
//! LCC stops decreasing. Add-back then restores any removed edge that does
//! not push the LCC above the allowed bound `c`, so the final removal count
//! never exceeds the greedy count.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::attack::{greedy_until_lcc, Strategy};
use crate::closed_form::{self, FragilityQuery};
use crate::generators::GeneratorConfig;
use crate::ratio::Rat;
use crate::{AttackState, Error, Graph, Result};

/// A node of the current LCC together with its incident edge sets:
/// `s1` all original incident edges, `s2` the still-present (LCC-internal)
/// ones, `s3 = s1 \ s2` the removed ones.
#[derive(Debug, Clone)]
pub struct RewireCandidate {
    pub node: usize,
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
    pub s3: Vec<usize>,
}

impl RewireCandidate {
    pub fn evaluate(state: &AttackState, node: usize) -> RewireCandidate {
        let mut s1: Vec<usize> = state
            .graph()
            .neighbors(node)
            .iter()
            .map(|&(_, e)| e)
            .collect();
        s1.sort_unstable();
        let (s2, s3) = s1.iter().copied().partition(|&e| state.is_present(e));
        RewireCandidate { node, s1, s2, s3 }
    }

    /// A node can only be rewired out of the LCC if it has no more edges
    /// inside than were removed from it: `card(s2) <= card(s1) / 2`,
    /// equivalently `card(s2) <= card(s3)`.
    pub fn eligible(&self) -> bool {
        self.s2.len() <= self.s3.len()
    }
}

/// One rewiring sweep over the current LCC members in ascending node order.
/// Returns true if any swap was accepted.
fn rewiring_pass(state: &mut AttackState, rng: &mut ChaCha8Rng) -> bool {
    let members = state.components().lcc_members();
    let mut improved = false;
    for v in members {
        let view = state.components();
        if view.label(v) != view.lcc_id() {
            // An earlier accepted swap already moved this node out.
            continue;
        }
        let candidate = RewireCandidate::evaluate(state, v);
        if !candidate.eligible() || candidate.s2.is_empty() {
            continue;
        }
        // One uniformly random replacement set per eligible node, no redraw.
        let picked: Vec<usize> =
            rand::seq::index::sample(rng, candidate.s3.len(), candidate.s2.len())
                .into_iter()
                .map(|i| candidate.s3[i])
                .collect();
        let lcc_before = view.lcc_size();
        for &e in &candidate.s2 {
            state.set_edge_present(e, false);
        }
        for &e in &picked {
            state.set_edge_present(e, true);
        }
        if state.lcc_size() < lcc_before {
            improved = true;
        } else {
            for &e in &picked {
                state.set_edge_present(e, false);
            }
            for &e in &candidate.s2 {
                state.set_edge_present(e, true);
            }
        }
    }
    improved
}

/// Rewires edges out of the LCC, repeating whole passes until the largest
/// component no longer decreases. The removal count is preserved exactly.
pub fn rewiring_removal(state: &mut AttackState, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rewiring_removal_with(state, &mut rng);
}

fn rewiring_removal_with(state: &mut AttackState, rng: &mut ChaCha8Rng) {
    while rewiring_pass(state, rng) {}
}

/// Restores removed edges (ascending edge id) whenever the restoration keeps
/// the LCC at or below `c`. Requires the state to already satisfy the bound.
pub fn iterative_add_back(state: &mut AttackState, c: usize) -> Result<()> {
    if state.lcc_size() > c {
        return Err(Error::InvalidParam(format!(
            "add-back requires lcc {} <= c = {c}",
            state.lcc_size()
        )));
    }
    for e in state.removed_edge_ids() {
        state.set_edge_present(e, true);
        if state.lcc_size() > c {
            state.set_edge_present(e, false);
        }
    }
    Ok(())
}

/// Wall time per pipeline stage, in milliseconds.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct StageTimings {
    pub greedy: u64,
    pub rewire: u64,
    pub addback: u64,
}

/// Outcome of one strategy branch of the pipeline.
pub struct BranchOutcome<'g> {
    pub strategy: Strategy,
    pub state: AttackState<'g>,
    pub r_greedy: usize,
    pub r_final: usize,
    pub stage_ms: StageTimings,
}

/// Runs greedy-until-`c`, recursive rewiring, then add-back for one strategy.
/// `r_final <= r_greedy` holds structurally: rewiring preserves the count and
/// add-back only restores.
pub fn run_pipeline_branch<'g>(
    g: &'g Graph,
    c: usize,
    strategy: Strategy,
    rng: &mut ChaCha8Rng,
) -> Result<BranchOutcome<'g>> {
    let t0 = Instant::now();
    let mut state = greedy_until_lcc(g, c, strategy)?;
    let r_greedy = state.removed_count();
    let t1 = Instant::now();
    rewiring_removal_with(&mut state, rng);
    debug_assert_eq!(state.removed_count(), r_greedy);
    let t2 = Instant::now();
    iterative_add_back(&mut state, c)?;
    let t3 = Instant::now();
    Ok(BranchOutcome {
        strategy,
        r_final: state.removed_count(),
        state,
        r_greedy,
        stage_ms: StageTimings {
            greedy: t1.duration_since(t0).as_millis() as u64,
            rewire: t2.duration_since(t1).as_millis() as u64,
            addback: t3.duration_since(t2).as_millis() as u64,
        },
    })
}

/// Estimation result. `fragility_hat` may be negative: a suboptimal attack
/// overestimates the critical edge fraction, and nothing clamps it.
#[derive(Debug, Clone, Serialize)]
pub struct FragilityReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub delta: Rat,
    pub c: usize,
    pub strategy: String,
    pub r_greedy: usize,
    pub r_final: usize,
    pub f_hat: Rat,
    pub f_comp: Rat,
    pub fragility_hat: Rat,
    pub seed: u64,
    pub stage_ms: StageTimings,
}

#[allow(clippy::too_many_arguments)]
fn report_from_counts(
    graph_id: &str,
    g: &Graph,
    query: FragilityQuery,
    strategy: &str,
    r_greedy: usize,
    r_final: usize,
    seed: u64,
    stage_ms: StageTimings,
) -> Result<FragilityReport> {
    let m = g.edge_count();
    let f_comp = closed_form::f_comp(g.node_count(), query.c())?;
    // An edgeless graph needs no removals; its critical fraction is zero.
    let f_hat = if m == 0 {
        Rat::ZERO
    } else {
        Rat::new(r_final as i128, m as i128)
    };
    Ok(FragilityReport {
        graph_id: graph_id.to_string(),
        n: g.node_count(),
        m,
        delta: query.delta(),
        c: query.c(),
        strategy: strategy.to_string(),
        r_greedy,
        r_final,
        f_hat,
        f_comp,
        fragility_hat: Rat::ONE - f_hat / f_comp,
        seed,
        stage_ms,
    })
}

/// Full two-strategy pipeline: min-degree and edge-betweenness branches run
/// independently (each with its own rewiring stream derived from `seed`);
/// the candidate with fewer final removals wins, ties to edge betweenness.
pub fn estimate_fragility(
    g: &Graph,
    delta: Rat,
    seed: u64,
    graph_id: &str,
) -> Result<FragilityReport> {
    let query = FragilityQuery::resolve(g.node_count(), delta)?;
    let c = query.c();

    let mut md_rng = ChaCha8Rng::seed_from_u64(seed);
    md_rng.set_stream(1);
    let md = run_pipeline_branch(g, c, Strategy::MinDegree, &mut md_rng)?;

    let mut eb_rng = ChaCha8Rng::seed_from_u64(seed);
    eb_rng.set_stream(2);
    let eb = run_pipeline_branch(g, c, Strategy::EdgeBetweenness, &mut eb_rng)?;

    let chosen = if md.r_final < eb.r_final { md } else { eb };
    report_from_counts(
        graph_id,
        g,
        query,
        chosen.strategy.name(),
        chosen.r_greedy,
        chosen.r_final,
        seed,
        chosen.stage_ms,
    )
}

/// Greedy stage only (no rewiring, no add-back), for baseline comparisons.
pub fn estimate_fragility_greedy_only(
    g: &Graph,
    delta: Rat,
    strategy: Strategy,
    seed: u64,
    graph_id: &str,
) -> Result<FragilityReport> {
    let query = FragilityQuery::resolve(g.node_count(), delta)?;
    let t0 = Instant::now();
    let state = greedy_until_lcc(g, query.c(), strategy)?;
    let stage_ms = StageTimings {
        greedy: t0.elapsed().as_millis() as u64,
        ..StageTimings::default()
    };
    let r = state.removed_count();
    report_from_counts(
        graph_id,
        g,
        query,
        &format!("greedy_only_{}", strategy.name()),
        r,
        r,
        seed,
        stage_ms,
    )
}

/// Random-removal baseline: removes uniformly random edges until the LCC
/// bound holds. Always pessimistic, typically yielding a negative estimate.
pub fn estimate_fragility_random(
    g: &Graph,
    delta: Rat,
    seed: u64,
    graph_id: &str,
) -> Result<FragilityReport> {
    let query = FragilityQuery::resolve(g.node_count(), delta)?;
    let t0 = Instant::now();
    let state = greedy_until_lcc(g, query.c(), Strategy::Random { seed })?;
    let stage_ms = StageTimings {
        greedy: t0.elapsed().as_millis() as u64,
        ..StageTimings::default()
    };
    let r = state.removed_count();
    report_from_counts(graph_id, g, query, "random", r, r, seed, stage_ms)
}

/// Aggregate over seeded trials: mean and sample standard deviation of the
/// fragility estimate, with every per-trial report retained.
#[derive(Debug, Clone, Serialize)]
pub struct BatchReport {
    pub trials: usize,
    pub mean: f64,
    pub sd: f64,
    pub per_trial: Vec<FragilityReport>,
}

/// Runs the pipeline on fresh realizations of `config` with seeds
/// `base_seed .. base_seed + trials`. Trials run in parallel but results are
/// collected in seed order, so output is identical to a sequential run.
pub fn batch_estimate(
    config: &GeneratorConfig,
    delta: Rat,
    trials: usize,
    base_seed: u64,
) -> Result<BatchReport> {
    if trials < 1 {
        return Err(Error::InvalidParam("trials must be >= 1".into()));
    }
    use rayon::prelude::*;
    let per_trial: Vec<FragilityReport> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let seed = base_seed + i;
            let mut cfg = config.clone();
            cfg.seed = seed;
            let g = cfg.generate()?;
            estimate_fragility(&g, delta, seed, &cfg.describe())
        })
        .collect::<Result<_>>()?;
    Ok(aggregate(per_trial))
}

/// Same aggregation over repeated runs on one fixed graph, varying only the
/// pipeline seed.
pub fn batch_estimate_on_graph(
    g: &Graph,
    delta: Rat,
    trials: usize,
    base_seed: u64,
    graph_id: &str,
) -> Result<BatchReport> {
    if trials < 1 {
        return Err(Error::InvalidParam("trials must be >= 1".into()));
    }
    use rayon::prelude::*;
    let per_trial: Vec<FragilityReport> = (0..trials as u64)
        .into_par_iter()
        .map(|i| estimate_fragility(g, delta, base_seed + i, graph_id))
        .collect::<Result<_>>()?;
    Ok(aggregate(per_trial))
}

fn aggregate(per_trial: Vec<FragilityReport>) -> BatchReport {
    let values: Vec<f64> = per_trial.iter().map(|r| r.fragility_hat.to_f64()).collect();
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let sd = if values.len() < 2 {
        0.0
    } else {
        let var =
            values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (values.len() - 1) as f64;
        var.sqrt()
    };
    BatchReport {
        trials: per_trial.len(),
        mean,
        sd,
        per_trial,
    }
}
