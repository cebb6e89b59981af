//! Degree-distribution comparison and trajectory aggregation.
//!
//! The divergence between degree distributions is the standard normalized
//! Hellinger distance `H(p, q) = sqrt(1/2 * sum_i (sqrt(p_i) - sqrt(q_i))^2)`,
//! which is 0 for identical distributions and 1 for disjoint supports.
//! Distributions are node fractions over degrees, isolated nodes included,
//! so the mass drifts toward degree 0 as edges vanish.

use crate::graph::RemovalRecord;
use crate::{AttackState, Error, Graph, Result};

/// Probabilities over degrees `0..support_len`, summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    probs: Vec<f64>,
}

const SUM_TOLERANCE: f64 = 1e-12;

impl DegreeDistribution {
    pub fn from_probs(probs: Vec<f64>) -> Result<DegreeDistribution> {
        validate(&probs)?;
        Ok(DegreeDistribution { probs })
    }

    /// Node-fraction histogram of the present graph's degrees.
    pub fn from_state(state: &AttackState) -> DegreeDistribution {
        Self::from_degrees(state.graph().node_count(), &state.degrees())
    }

    fn from_degrees(n: usize, degrees: &[usize]) -> DegreeDistribution {
        let mut probs = vec![0.0; n.max(1)];
        for &d in degrees {
            probs[d] += 1.0 / n as f64;
        }
        DegreeDistribution { probs }
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }
}

fn validate(probs: &[f64]) -> Result<()> {
    if probs.iter().any(|&p| p.is_nan() || p < 0.0) {
        return Err(Error::InvalidDistribution(
            "negative or NaN probability".into(),
        ));
    }
    let sum: f64 = probs.iter().sum();
    if (sum - 1.0).abs() > SUM_TOLERANCE {
        return Err(Error::InvalidDistribution(format!(
            "probabilities sum to {sum}, expected 1"
        )));
    }
    Ok(())
}

/// Hellinger distance in `[0, 1]`; the shorter support is zero-padded.
pub fn hellinger(p: &DegreeDistribution, q: &DegreeDistribution) -> Result<f64> {
    validate(p.probs())?;
    validate(q.probs())?;
    let len = p.probs.len().max(q.probs.len());
    let at = |probs: &[f64], i: usize| probs.get(i).copied().unwrap_or(0.0);
    let sum: f64 = (0..len)
        .map(|i| {
            let d = at(&p.probs, i).sqrt() - at(&q.probs, i).sqrt();
            d * d
        })
        .sum();
    Ok((0.5 * sum).sqrt())
}

/// Hellinger distance to the intact graph's degree distribution after each
/// recorded removal; entry `k` reflects the state after `k + 1` removals.
pub fn divergence_trajectory(g: &Graph, records: &[RemovalRecord]) -> Vec<f64> {
    let n = g.node_count();
    let initial = {
        let mut degrees = vec![0usize; n];
        for &(u, v) in g.edges() {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        degrees
    };
    let dist0 = DegreeDistribution::from_degrees(n, &initial);
    let mut degrees = initial;
    records
        .iter()
        .map(|rec| {
            let (u, v) = g.endpoints(rec.edge);
            degrees[u] -= 1;
            degrees[v] -= 1;
            let dist = DegreeDistribution::from_degrees(n, &degrees);
            hellinger(&dist0, &dist).expect("histogram distributions are valid")
        })
        .collect()
}

/// Pointwise mean across trials. Shorter trajectories are padded by carrying
/// their final value.
pub fn average_trajectories(trajectories: &[Vec<f64>]) -> Result<Vec<f64>> {
    if trajectories.is_empty() {
        return Err(Error::EmptyInput("no trajectories to average".into()));
    }
    let len = trajectories.iter().map(Vec::len).max().unwrap();
    if len == 0 {
        return Ok(Vec::new());
    }
    if trajectories.iter().any(|t| t.is_empty()) {
        return Err(Error::EmptyInput(
            "cannot pad an empty trajectory to a positive length".into(),
        ));
    }
    let mut mean = vec![0.0; len];
    for traj in trajectories {
        for (i, slot) in mean.iter_mut().enumerate() {
            *slot += traj.get(i).copied().unwrap_or(*traj.last().unwrap());
        }
    }
    for slot in &mut mean {
        *slot /= trajectories.len() as f64;
    }
    Ok(mean)
}
