use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element `num/den` of `Q/Z`, standing for the root of unity
/// `exp(2πi·num/den)`. Always reduced with `0 <= num < den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    num: u64,
    den: u64,
}

impl Phase {
    pub const ZERO: Phase = Phase { num: 0, den: 1 };

    /// `num/den` reduced into `[0, 1)`. `den` must be positive.
    pub fn new(num: i128, den: u64) -> Phase {
        assert!(den > 0, "phase denominator must be positive");
        let n = num.rem_euclid(den as i128) as u64;
        let g = n.gcd(&den);
        Phase {
            num: n / g,
            den: den / g,
        }
    }

    pub fn from_bigint(num: &BigInt, den: u64) -> Phase {
        let r = num.mod_floor(&BigInt::from(den));
        Phase::new(r.to_i128().expect("reduced residue fits"), den)
    }

    /// `ζ_m^a` with `ζ_m = exp(2πi/m)`.
    pub fn zeta(m: u64, a: i64) -> Phase {
        Phase::new(a as i128, m)
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// `k·p`, i.e. the root of unity raised to the `k`-th power.
    pub fn scale(self, k: i64) -> Phase {
        Phase::new(self.num as i128 * k as i128, self.den)
    }

    pub fn scale_big(self, k: &BigInt) -> Phase {
        let r = k.mod_floor(&BigInt::from(self.den));
        self.scale(r.to_i64().expect("residue below a u64 denominator"))
    }

    /// Residue `j` with `self = j/order`; `None` if the denominator does not divide `order`.
    pub fn residue_mod(&self, order: u64) -> Option<u64> {
        (order % self.den == 0).then(|| self.num * (order / self.den))
    }

    /// Display-only floating approximation `(cos, sin)` of the root of unity.
    pub fn to_complex(&self) -> (f64, f64) {
        let angle = 2.0 * std::f64::consts::PI * self.num as f64 / self.den as f64;
        (angle.cos(), angle.sin())
    }
}

impl Default for Phase {
    fn default() -> Self {
        Phase::ZERO
    }
}

impl Add for Phase {
    type Output = Phase;

    fn add(self, rhs: Phase) -> Phase {
        let l = self.den.lcm(&rhs.den);
        let a = self.num as i128 * (l / self.den) as i128;
        let b = rhs.num as i128 * (l / rhs.den) as i128;
        Phase::new(a + b, l)
    }
}

impl Neg for Phase {
    type Output = Phase;

    fn neg(self) -> Phase {
        Phase::new(-(self.num as i128), self.den)
    }
}

impl Sub for Phase {
    type Output = Phase;

    fn sub(self, rhs: Phase) -> Phase {
        self + (-rhs)
    }
}

impl AddAssign for Phase {
    fn add_assign(&mut self, rhs: Phase) {
        *self = *self + rhs;
    }
}

impl SubAssign for Phase {
    fn sub_assign(&mut self, rhs: Phase) {
        *self = *self - rhs;
    }
}

impl Sum for Phase {
    fn sum<I: Iterator<Item = Phase>>(iter: I) -> Phase {
        iter.fold(Phase::ZERO, Add::add)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Phase {
    type Err = Error;

    /// Accepts any `p/q` with `q > 0` (or a bare integer) and reduces it.
    fn from_str(s: &str) -> Result<Phase> {
        let bad = |why: &str| Error::Parse(format!("phase {s:?}: {why}"));
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: i128 = n.parse().map_err(|_| bad("bad numerator"))?;
        let den: u64 = d.parse().map_err(|_| bad("bad denominator"))?;
        if den == 0 {
            return Err(bad("zero denominator"));
        }
        Ok(Phase::new(num, den))
    }
}

impl Serialize for Phase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Phase {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Phase {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(p("1/2") + p("1/2"), Phase::ZERO);
        assert_eq!(Phase::ZERO.to_string(), "0/1");
        assert_eq!(Phase::zeta(4, 2), p("1/2"));
        assert_eq!(p("1/3").scale(4), p("1/3"));
        assert_eq!(p("-1/4"), p("3/4"));
        assert_eq!(p("6/4").to_string(), "1/2");
        assert!("1/0".parse::<Phase>().is_err());
        assert_eq!(p("3/8").residue_mod(16), Some(6));
        assert_eq!(p("1/3").residue_mod(16), None);
    }

    fn phase() -> impl Strategy<Value = Phase> {
        (any::<i32>(), 1u64..200).prop_map(|(n, d)| Phase::new(n as i128, d))
    }

    proptest! {
        #[test]
        fn abelian_group_laws(a in phase(), b in phase(), c in phase()) {
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!(a + Phase::ZERO, a);
            prop_assert_eq!(a + (-a), Phase::ZERO);
            prop_assert!(a.num() < a.den());
            prop_assert_eq!(a.num().gcd(&a.den()), 1);
        }

        #[test]
        fn scaling_by_denominator_is_trivial(a in phase(), k in -50i64..50) {
            prop_assert_eq!(a.scale(a.den() as i64), Phase::ZERO);
            prop_assert_eq!(a.scale(k) + a, a.scale(k + 1));
            prop_assert_eq!(a.scale_big(&BigInt::from(k)), a.scale(k));
        }

        #[test]
        fn string_form_round_trips(a in phase()) {
            prop_assert_eq!(a.to_string().parse::<Phase>().unwrap(), a);
        }
    }
}
