//! Exact closed forms for structured families: optimal removal counts
//! `r*(c)`, critical edge fractions, and fragility.
//!
//! Everything here is exact rational arithmetic; no floating point. The
//! fragility of a graph at fractional component size delta is
//! `F_delta(G) = 1 - f_G(delta) / f_comp(delta)` where `f_G = r*(c) / m` and
//! `f_comp` is the complete graph's critical edge fraction at the same `n`
//! and `c = floor(delta * n)`. Estimates from suboptimal attacks can be
//! negative, so nothing in this module clamps to `[0, 1]`.

use crate::ratio::Rat;
use crate::{Error, Result};

/// Graph family with a known closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Complete graph `K_n`.
    Complete,
    /// Complete equitable bipartite graph: part sizes differ by at most 1.
    Ceb,
    /// Generalized barbell: two complete halves joined by `n` bridge edges.
    Gb,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Ceb => "ceb",
            Family::Gb => "gb",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "complete" => Ok(Family::Complete),
            "ceb" => Ok(Family::Ceb),
            "gb" => Ok(Family::Gb),
            other => Err(Error::InvalidParam(format!("unknown family {other:?}"))),
        }
    }
}

/// `card(E(K_n)) = n(n-1)/2`.
pub fn complete_edges(n: usize) -> i128 {
    let n = n as i128;
    n * (n - 1) / 2
}

/// `card(E(CEB_n))`: `(n/2)^2` for even n, `(n^2-1)/4` for odd n.
/// Gives 0 for n in {0, 1}, where no cross edge is possible.
pub fn ceb_edges(n: usize) -> i128 {
    let n = n as i128;
    if n % 2 == 0 {
        (n / 2) * (n / 2)
    } else {
        (n * n - 1) / 4
    }
}

/// Edge count of the generalized barbell on even `n >= 4`: two `K_{n/2}`
/// plus `n` bridges.
pub fn gb_edges(n: usize) -> Result<i128> {
    if !n.is_multiple_of(2) || n < 4 {
        return Err(Error::InvalidParam(format!(
            "gb graph requires even n >= 4, got {n}"
        )));
    }
    let half = (n / 2) as i128;
    Ok(half * (half - 1) + n as i128)
}

pub fn edge_count(family: Family, n: usize) -> Result<i128> {
    match family {
        Family::Complete => {
            if n < 1 {
                return Err(Error::InvalidParam("complete graph requires n >= 1".into()));
            }
            Ok(complete_edges(n))
        }
        Family::Ceb => {
            if n < 2 {
                return Err(Error::InvalidParam("ceb graph requires n >= 2".into()));
            }
            Ok(ceb_edges(n))
        }
        Family::Gb => gb_edges(n),
    }
}

fn check_c(n: usize, c: usize) -> Result<()> {
    if c < 1 || c >= n {
        return Err(Error::InvalidParam(format!(
            "component bound c = {c} outside [1, {n})"
        )));
    }
    Ok(())
}

/// Minimal removals so that no component of `K_n` exceeds `c` nodes:
/// `card(E(K_n)) - (floor(n/c) * card(E(K_c)) + card(E(K_b)))`, `b = n mod c`.
pub fn r_star_complete(n: usize, c: usize) -> Result<i128> {
    check_c(n, c)?;
    let b = n % c;
    Ok(complete_edges(n) - ((n / c) as i128 * complete_edges(c) + complete_edges(b)))
}

/// CEB analogue of [`r_star_complete`]; `card(E(CEB_b))` is 0 for `b <= 1`.
pub fn r_star_ceb(n: usize, c: usize) -> Result<i128> {
    check_c(n, c)?;
    let b = n % c;
    Ok(ceb_edges(n) - ((n / c) as i128 * ceb_edges(c) + ceb_edges(b)))
}

/// Critical edge fraction of the complete graph, `r*_complete(c) / card(E(K_n))`.
pub fn f_comp(n: usize, c: usize) -> Result<Rat> {
    Ok(Rat::new(r_star_complete(n, c)?, complete_edges(n)))
}

/// A resolved fragility query: `c = floor(delta * n)` with `delta` snapped to
/// the exact rational `c / n`, and `b = n mod c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FragilityQuery {
    delta: Rat,
    c: usize,
    b: usize,
}

impl FragilityQuery {
    pub fn resolve(n: usize, delta: Rat) -> Result<FragilityQuery> {
        let c = (delta * Rat::from(n)).floor();
        if c < 1 || c >= n as i128 {
            return Err(Error::InvalidDelta {
                delta: delta.to_string(),
                c,
                n,
            });
        }
        let c = c as usize;
        Ok(FragilityQuery {
            delta: Rat::new(c as i128, n as i128),
            c,
            b: n % c,
        })
    }

    pub fn delta(&self) -> Rat {
        self.delta
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn b(&self) -> usize {
        self.b
    }
}

/// Exact fragility of a closed-form family at the given delta.
///
/// The gb family is only analyzed at the half split (`delta = 1/2`), where
/// the optimal cut is the `n` bridges; other deltas go through the estimator
/// instead.
pub fn fragility_exact(family: Family, n: usize, delta: Rat) -> Result<Rat> {
    let query = FragilityQuery::resolve(n, delta)?;
    let c = query.c();
    let f_comp = f_comp(n, c)?;
    let f_g = match family {
        Family::Complete => f_comp,
        Family::Ceb => Rat::new(r_star_ceb(n, c)?, ceb_edges(n)),
        Family::Gb => {
            if query.delta() != Rat::new(1, 2) {
                return Err(Error::Unsupported(format!(
                    "gb fragility has a closed form only at delta = 1/2, got {}",
                    query.delta()
                )));
            }
            Rat::new(n as i128, gb_edges(n)?)
        }
    };
    Ok(Rat::ONE - f_g / f_comp)
}

/// CEB fragility at `c = n - k` through the four parity-case expansions.
///
/// Each case spells out the edge-count polynomials for its `(n, c)` parity
/// rather than going through [`r_star_ceb`], so the two routes check each
/// other. The `b = n mod c` term uses the expansion matching b's own parity
/// (in the `k < n/2` regime `b = k`, so the case split already determines it).
pub fn ceb_fragility_parity(n: usize, k: usize) -> Result<Rat> {
    if n < 2 {
        return Err(Error::InvalidParam(format!("ceb requires n >= 2, got {n}")));
    }
    if k < 1 || k >= n {
        return Err(Error::InvalidParam(format!(
            "k = {k} outside [1, {n}) for n = {n}"
        )));
    }
    let c = n - k;
    let q = Rat::from(n / c);
    let b = n % c;

    let int = |x: usize| Rat::from(x);
    let sq = |x: usize| int(x) * int(x);
    // card(E(K_x)) = (x^2 - x) / 2
    let comp = |x: usize| (sq(x) - int(x)) / Rat::integer(2);
    // card(E(CEB_x)) by parity: (x/2)^2 even, (x^2 - 1)/4 odd.
    let ceb_even = |x: usize| sq(x) / Rat::integer(4);
    let ceb_odd = |x: usize| (sq(x) - Rat::ONE) / Rat::integer(4);
    let ceb_b = if b.is_multiple_of(2) {
        ceb_even(b)
    } else {
        ceb_odd(b)
    };

    let n2 = comp(n);
    let denom_tail = n2 - q * comp(c) - comp(b);
    let (num, den) = match (n.is_multiple_of(2), c.is_multiple_of(2)) {
        // n even, c even (b is forced even).
        (true, true) => (
            n2 * (ceb_even(n) - q * ceb_even(c) - ceb_b),
            ceb_even(n) * denom_tail,
        ),
        // n even, c odd.
        (true, false) => (
            n2 * (ceb_even(n) - q * ceb_odd(c) - ceb_b),
            ceb_even(n) * denom_tail,
        ),
        // n odd, c even (b is forced odd).
        (false, true) => (
            n2 * (ceb_odd(n) - q * ceb_even(c) - ceb_b),
            ceb_odd(n) * denom_tail,
        ),
        // n odd, c odd.
        (false, false) => (
            n2 * (ceb_odd(n) - q * ceb_odd(c) - ceb_b),
            ceb_odd(n) * denom_tail,
        ),
    };
    Ok(Rat::ONE - num / den)
}

/// Robustness cutoff: a graph is robust when its fragility is below epsilon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RobustnessThreshold {
    epsilon: Rat,
}

impl RobustnessThreshold {
    /// Requires `0 < epsilon < 1/2` (epsilon is meant to be small).
    pub fn new(epsilon: Rat) -> Result<RobustnessThreshold> {
        if epsilon <= Rat::ZERO || epsilon >= Rat::new(1, 2) {
            return Err(Error::InvalidParam(format!(
                "epsilon must lie in (0, 1/2), got {epsilon}"
            )));
        }
        Ok(RobustnessThreshold { epsilon })
    }

    pub fn epsilon(&self) -> Rat {
        self.epsilon
    }
}

pub fn is_robust(fragility: Rat, threshold: RobustnessThreshold) -> bool {
    fragility < threshold.epsilon()
}
