//! Exact edge scores with automatic widening.
//!
//! Betweenness accumulation is exact rational arithmetic, but the reduced
//! denominators of pair dependencies can outgrow i128 on graphs of a few
//! hundred edges. Almost every individual operation still fits, so scores
//! stay on the allocation-free [`Rat`] fast path and promote to
//! `BigRational` only when a checked operation overflows. Results demote
//! back whenever they fit, giving a canonical form: a `Big` value never
//! represents something expressible as `Small`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::ratio::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Score {
    Small(Rat),
    Big(BigRational),
}

impl Score {
    pub fn zero() -> Score {
        Score::Small(Rat::ZERO)
    }

    pub fn one() -> Score {
        Score::Small(Rat::ONE)
    }

    pub fn new(num: i128, den: i128) -> Score {
        Score::Small(Rat::new(num, den))
    }

    pub fn from_int(n: i128) -> Score {
        Score::Small(Rat::integer(n))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Score::Small(r) => r.is_zero(),
            // Canonical: zero always fits in Small.
            Score::Big(_) => false,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Score::Small(r) => r.to_f64(),
            Score::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            // Rat is reduced with a positive denominator, so raw
            // construction preserves the canonical form.
            Score::Small(r) => BigRational::new_raw(BigInt::from(r.num()), BigInt::from(r.den())),
            Score::Big(b) => b.clone(),
        }
    }

    fn normalize(big: BigRational) -> Score {
        match (big.numer().to_i128(), big.denom().to_i128()) {
            (Some(num), Some(den)) => Score::Small(Rat::new(num, den)),
            _ => Score::Big(big),
        }
    }

    pub fn add(&self, rhs: &Score) -> Score {
        if let (Score::Small(a), Score::Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_add(*b) {
                return Score::Small(r);
            }
        }
        Score::normalize(self.to_big() + rhs.to_big())
    }

    pub fn mul(&self, rhs: &Score) -> Score {
        if let (Score::Small(a), Score::Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_mul(*b) {
                return Score::Small(r);
            }
        }
        Score::normalize(self.to_big() * rhs.to_big())
    }

    pub fn div(&self, rhs: &Score) -> Score {
        if let (Score::Small(a), Score::Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_div(*b) {
                return Score::Small(r);
            }
        }
        Score::normalize(self.to_big() / rhs.to_big())
    }
}

impl std::ops::AddAssign<&Score> for Score {
    fn add_assign(&mut self, rhs: &Score) {
        *self = self.add(rhs);
    }
}

impl std::ops::AddAssign<Score> for Score {
    fn add_assign(&mut self, rhs: Score) {
        *self = self.add(&rhs);
    }
}

impl PartialOrd for Score {
    fn partial_cmp(&self, other: &Score) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Score {
    fn cmp(&self, other: &Score) -> Ordering {
        match (self, other) {
            (Score::Small(a), Score::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Score::Small(r) => write!(f, "{r}"),
            Score::Big(b) => write!(f, "{b}"),
        }
    }
}
