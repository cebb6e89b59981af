//! Exact rational arithmetic on `i128`.
//!
//! Closed-form fragility values, betweenness scores, and the brute-force
//! oracles all compare for *exact* equality, so every value in those paths is
//! a reduced fraction rather than a float. Arithmetic panics loudly on
//! overflow instead of wrapping; intermediate growth is kept down with the
//! usual gcd tricks, and ordering is computed by continued-fraction descent
//! so comparisons never overflow at all.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A reduced fraction `num/den` with `den > 0` and `gcd(|num|, den) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    /// Overflow-aware arithmetic; `None` means the reduced result does not
    /// fit in i128. The operator impls panic on overflow instead — callers
    /// that can widen (the attack scores) use these directly.
    pub fn checked_add(self, rhs: Rat) -> Option<Rat> {
        // Knuth 4.5.1: reduce by gcd of denominators before cross-multiplying.
        let g = gcd(self.den, rhs.den);
        let lhs_scale = rhs.den / g;
        let rhs_scale = self.den / g;
        let num = self
            .num
            .checked_mul(lhs_scale)?
            .checked_add(rhs.num.checked_mul(rhs_scale)?)?;
        let den = self.den.checked_mul(lhs_scale)?;
        Some(Rat::new(num, den))
    }

    pub fn checked_mul(self, rhs: Rat) -> Option<Rat> {
        // Cross-reduce first so intermediates stay small.
        let g1 = gcd(self.num, rhs.den);
        let g2 = gcd(rhs.num, self.den);
        let num = (self.num / g1).checked_mul(rhs.num / g2)?;
        let den = (self.den / g2).checked_mul(rhs.den / g1)?;
        Some(Rat::new(num, den))
    }

    pub fn checked_div(self, rhs: Rat) -> Option<Rat> {
        if rhs.num == 0 {
            return None;
        }
        self.checked_mul(Rat::new(rhs.den, rhs.num))
    }
}

impl Rat {
    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };

    /// Builds `num/den`, normalizing sign and reducing. Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Rat {
        assert!(den != 0, "rational with zero denominator");
        let g = gcd(num, den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Rat { num, den }
    }

    pub fn integer(n: i128) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Floor of `self`, exact for negatives too.
    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    /// Parses `"p/q"`, a plain integer, or a decimal like `"0.25"` exactly.
    pub fn parse(s: &str) -> Option<Rat> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let num: i128 = p.trim().parse().ok()?;
            let den: i128 = q.trim().parse().ok()?;
            if den == 0 {
                return None;
            }
            return Some(Rat::new(num, den));
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let negative = int.starts_with('-');
            let int_part: i128 = if int == "-" || int.is_empty() {
                0
            } else {
                int.parse().ok()?
            };
            let frac_num: i128 = frac.parse().ok()?;
            let den = 10i128.checked_pow(frac.len() as u32)?;
            let mag = int_part.abs().checked_mul(den)?.checked_add(frac_num)?;
            let num = if negative { -mag } else { mag };
            return Some(Rat::new(num, den));
        }
        s.parse::<i128>().ok().map(Rat::integer)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        self.checked_add(rhs)
            .unwrap_or_else(|| panic!("rational overflow: {self} + {rhs}"))
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        self + (-rhs)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        self.checked_mul(rhs)
            .unwrap_or_else(|| panic!("rational overflow: {self} * {rhs}"))
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        self.checked_div(rhs)
            .unwrap_or_else(|| panic!("rational overflow or zero divisor: {self} / {rhs}"))
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        cmp_frac(self.num, self.den, other.num, other.den)
    }
}

/// Compares `a/b` with `c/d` (b, d > 0) by continued-fraction descent;
/// never multiplies, so it cannot overflow.
fn cmp_frac(a: i128, b: i128, c: i128, d: i128) -> Ordering {
    debug_assert!(b > 0 && d > 0);
    match (a.signum(), c.signum()) {
        (x, y) if x != y => return x.cmp(&y),
        (0, 0) => return Ordering::Equal,
        (-1, -1) => return cmp_frac(-c, d, -a, b),
        _ => {}
    }
    // Both strictly positive from here.
    let (qa, ra) = (a / b, a % b);
    let (qc, rc) = (c / d, c % d);
    if qa != qc {
        return qa.cmp(&qc);
    }
    match (ra == 0, rc == 0) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        // a/b vs c/d with equal integer parts: compare remainders' reciprocals.
        (false, false) => cmp_frac(d, rc, b, ra),
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i128> for Rat {
    fn from(n: i128) -> Rat {
        Rat::integer(n)
    }
}

impl From<usize> for Rat {
    fn from(n: usize) -> Rat {
        Rat::integer(n as i128)
    }
}

impl std::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::ZERO, |acc, x| acc + x)
    }
}

impl serde::Serialize for Rat {
    /// Rationals travel as `{"num": .., "den": .., "approx": ..}` so exact
    /// values survive JSON round-trips alongside a convenience float.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let num = i64::try_from(self.num).map_err(serde::ser::Error::custom)?;
        let den = i64::try_from(self.den).map_err(serde::ser::Error::custom)?;
        let mut s = serializer.serialize_struct("Rat", 3)?;
        s.serialize_field("num", &num)?;
        s.serialize_field("den", &den)?;
        s.serialize_field("approx", &self.to_f64())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduction_and_sign() {
        assert_eq!(Rat::new(4, 6), Rat::new(2, 3));
        assert_eq!(Rat::new(-4, 6), Rat::new(4, -6));
        assert_eq!(Rat::new(0, -7), Rat::ZERO);
        assert_eq!(Rat::new(-2, -4), Rat::new(1, 2));
    }

    #[test]
    fn arithmetic() {
        let half = Rat::new(1, 2);
        let third = Rat::new(1, 3);
        assert_eq!(half + third, Rat::new(5, 6));
        assert_eq!(half - third, Rat::new(1, 6));
        assert_eq!(half * third, Rat::new(1, 6));
        assert_eq!(half / third, Rat::new(3, 2));
        assert_eq!(Rat::ONE - Rat::new(7, 8), Rat::new(1, 8));
    }

    #[test]
    fn floor_handles_negatives() {
        assert_eq!(Rat::new(7, 2).floor(), 3);
        assert_eq!(Rat::new(-7, 2).floor(), -4);
        assert_eq!(Rat::integer(5).floor(), 5);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Rat::parse("1/2"), Some(Rat::new(1, 2)));
        assert_eq!(Rat::parse("0.25"), Some(Rat::new(1, 4)));
        assert_eq!(Rat::parse("0.5"), Some(Rat::new(1, 2)));
        assert_eq!(Rat::parse("3"), Some(Rat::integer(3)));
        assert_eq!(Rat::parse("-0.1"), Some(Rat::new(-1, 10)));
        assert_eq!(Rat::parse("1/0"), None);
        assert_eq!(Rat::parse("x"), None);
    }

    #[test]
    fn ordering_no_overflow() {
        // Denominators near i128 range: naive cross-multiplication would overflow.
        let big = 1i128 << 100;
        let a = Rat::new(big - 1, big);
        let b = Rat::new(big - 2, big - 1);
        assert!(b < a);
        assert!(a < Rat::ONE);
    }

    proptest! {
        #[test]
        fn add_commutes(an in -1000i128..1000, ad in 1i128..1000,
                        bn in -1000i128..1000, bd in 1i128..1000) {
            let a = Rat::new(an, ad);
            let b = Rat::new(bn, bd);
            prop_assert_eq!(a + b, b + a);
        }

        #[test]
        fn reduced_invariant(n in -10_000i128..10_000, d in 1i128..10_000) {
            let r = Rat::new(n, d);
            prop_assert!(r.den() > 0);
            prop_assert_eq!(gcd(r.num(), r.den()), if r.num() == 0 { r.den() } else { 1 });
        }

        #[test]
        fn ord_matches_f64(an in -1000i128..1000, ad in 1i128..1000,
                           bn in -1000i128..1000, bd in 1i128..1000) {
            let a = Rat::new(an, ad);
            let b = Rat::new(bn, bd);
            // f64 is exact for these small fractions' comparisons unless equal.
            if a != b {
                prop_assert_eq!(a < b, a.to_f64() < b.to_f64());
            }
        }

        #[test]
        fn mul_div_roundtrip(an in -1000i128..1000, ad in 1i128..1000,
                             bn in 1i128..1000, bd in 1i128..1000) {
            let a = Rat::new(an, ad);
            let b = Rat::new(bn, bd);
            prop_assert_eq!(a * b / b, a);
        }
    }
}
