//! Destruction functions and greedy edge removal.
//!
//! A destruction function scores every candidate edge; greedy removal takes
//! the present edge with the largest score each step, breaking ties toward
//! the smallest edge id so runs are reproducible. Scoring is restricted to
//! the current largest component: removing an edge elsewhere can never
//! shrink the LCC. Scores are exact rationals so they can be checked against
//! the brute-force oracle without tolerance; betweenness sums need arbitrary
//! precision (reduced denominators overflow i128 already around n = 100).

use std::collections::{BTreeMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{AttackState, Error, Graph, Result};

pub use crate::graph::RemovalRecord;
pub use crate::score::Score;

/// Edge-removal strategy. The random baseline carries its own seed; the
/// targeted strategies are fully deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    EdgeBetweenness,
    MinDegree,
    Random { seed: u64 },
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::EdgeBetweenness => "edge_betweenness",
            Strategy::MinDegree => "min_degree",
            Strategy::Random { .. } => "random",
        }
    }
}

/// Exact edge-betweenness centrality of the present edges inside the current
/// LCC, counting each unordered node pair once. Edges outside the LCC are
/// absent from the map. Recomputed from scratch on every call.
pub fn score_edge_betweenness(state: &AttackState) -> BTreeMap<usize, Score> {
    let g = state.graph();
    let view = state.components();
    let members = view.lcc_members();
    let n = g.node_count();

    let mut acc = vec![Score::zero(); g.edge_count()];
    let mut sigma = vec![0u64; n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![Score::zero(); n];
    let mut stack = Vec::with_capacity(members.len());
    let mut queue = VecDeque::new();

    for &s in &members {
        for &v in &members {
            sigma[v] = 0;
            dist[v] = usize::MAX;
            delta[v] = Score::zero();
        }
        sigma[s] = 1;
        dist[s] = 0;
        stack.clear();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &(w, e) in g.neighbors(v) {
                if !state.is_present(e) {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                }
            }
        }
        // Pair-dependency accumulation in reverse BFS order.
        while let Some(w) = stack.pop() {
            for &(v, e) in g.neighbors(w) {
                if !state.is_present(e) || dist[v] + 1 != dist[w] {
                    continue;
                }
                let ratio = Score::new(sigma[v] as i128, sigma[w] as i128);
                let contribution = if delta[w].is_zero() {
                    ratio
                } else {
                    ratio.mul(&Score::one().add(&delta[w]))
                };
                acc[e] += &contribution;
                delta[v] += contribution;
            }
        }
    }

    let two = Score::from_int(2);
    let mut scores = BTreeMap::new();
    for (e, &(u, _)) in g.edges().iter().enumerate() {
        if state.is_present(e) && view.label(u) == view.lcc_id() {
            scores.insert(e, acc[e].div(&two));
        }
    }
    scores
}

/// Min-degree destruction function over the current LCC:
/// `score(u, v) = -min(deg(u), deg(v))` with degrees taken in the present
/// graph, so every edge of the minimum-degree node ties at the maximum.
pub fn score_min_degree(state: &AttackState) -> BTreeMap<usize, Score> {
    let g = state.graph();
    let view = state.components();
    let degrees = state.degrees();
    let mut scores = BTreeMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if state.is_present(e) && view.label(u) == view.lcc_id() {
            let d = degrees[u].min(degrees[v]);
            scores.insert(e, Score::from_int(-(d as i128)));
        }
    }
    scores
}

fn scores_for(state: &AttackState, strategy: Strategy) -> BTreeMap<usize, Score> {
    match strategy {
        Strategy::EdgeBetweenness => score_edge_betweenness(state),
        Strategy::MinDegree => score_min_degree(state),
        Strategy::Random { .. } => unreachable!("random strategy does not use scores"),
    }
}

/// Largest score wins; ties go to the smallest edge id.
fn argmax_edge(scores: &BTreeMap<usize, Score>) -> Option<usize> {
    let mut best: Option<(usize, &Score)> = None;
    for (&e, s) in scores {
        match best {
            Some((_, bs)) if s <= bs => {}
            _ => best = Some((e, s)),
        }
    }
    best.map(|(e, _)| e)
}

// One short-lived picker per attack run; the variant size gap is fine.
#[allow(clippy::large_enum_variant)]
enum Picker {
    Scored(Strategy),
    Random(ChaCha8Rng, Vec<usize>),
}

impl Picker {
    fn new(strategy: Strategy, m: usize) -> Picker {
        match strategy {
            Strategy::Random { seed } => {
                Picker::Random(ChaCha8Rng::seed_from_u64(seed), (0..m).collect())
            }
            s => Picker::Scored(s),
        }
    }

    /// Next edge to remove, with its score when the strategy has one.
    fn pick(&mut self, state: &AttackState) -> Option<(usize, Option<f64>)> {
        match self {
            Picker::Scored(strategy) => {
                let scores = scores_for(state, *strategy);
                let e = argmax_edge(&scores)?;
                Some((e, Some(scores[&e].to_f64())))
            }
            Picker::Random(rng, pool) => {
                if pool.is_empty() {
                    return None;
                }
                let idx = rng.gen_range(0..pool.len());
                let e = pool.swap_remove(idx);
                Some((e, None))
            }
        }
    }
}

/// Removes exactly `r` edges greedily and returns the perturbed state with
/// its removal trajectory.
pub fn greedy_edge_removal(g: &Graph, r: usize, strategy: Strategy) -> Result<AttackState<'_>> {
    if r > g.edge_count() {
        return Err(Error::InvalidParam(format!(
            "cannot remove r = {r} of m = {} edges",
            g.edge_count()
        )));
    }
    let mut state = AttackState::new(g);
    let mut picker = Picker::new(strategy, g.edge_count());
    for _ in 0..r {
        let (e, score) = picker
            .pick(&state)
            .expect("present edges remain while r <= m");
        state.record_removal(e, score);
    }
    Ok(state)
}

/// Removes edges greedily until the LCC has at most `c` nodes.
pub fn greedy_until_lcc(g: &Graph, c: usize, strategy: Strategy) -> Result<AttackState<'_>> {
    if c < 1 || c >= g.node_count() {
        return Err(Error::InvalidParam(format!(
            "component bound c = {c} outside [1, {})",
            g.node_count()
        )));
    }
    let mut state = AttackState::new(g);
    let mut picker = Picker::new(strategy, g.edge_count());
    while state.lcc_size() > c {
        let (e, score) = picker
            .pick(&state)
            .expect("a component larger than c always has a removable edge");
        state.record_removal(e, score);
    }
    Ok(state)
}

/// Uniformly random removal of every edge, one per step, recording the LCC
/// size after each. The degree-distribution view of the same run comes from
/// replaying the records through the metrics module.
pub fn random_removal_trajectory(g: &Graph, seed: u64) -> Vec<RemovalRecord> {
    let mut state = AttackState::new(g);
    let mut picker = Picker::new(Strategy::Random { seed }, g.edge_count());
    while let Some((e, _)) = picker.pick(&state) {
        state.record_removal(e, None);
    }
    state.trajectory().to_vec()
}
