//! Integer Laurent polynomials in one variable `q`.
//!
//! Coefficients are arbitrary precision. The zero polynomial is the empty
//! coefficient map, and no stored coefficient is ever zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    coeffs: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * q^e`.
    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// The quantum integer `[a] = q^(a-1) + q^(a-3) + ... + q^(1-a)`.
    pub fn qint(a: i64) -> Result<Self, Error> {
        if a < 1 {
            return Err(Error::Domain(format!("quantum integer [{a}] needs a >= 1")));
        }
        let mut p = Self::zero();
        for k in 0..a {
            p.add_term(a - 1 - 2 * k, BigInt::one());
        }
        Ok(p)
    }

    /// Builds a polynomial from a multiset of exponents, each contributing `+1`.
    pub fn from_exponents<I: IntoIterator<Item = i64>>(exps: I) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.add_term(e, BigInt::one());
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitutes `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        *self == self.bar()
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("string-keyed map always serializes")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Laurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a Laurent polynomial: {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // Split into signed terms; a '-' right after '^' belongs to an exponent.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(bad());
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad());
        }
        terms.push((neg, cur));

        let mut p = Self::zero();
        for (neg, t) in terms {
            let (coef, exp) = match t.find('q') {
                None => (t.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let head = t[..pos].trim_end_matches('*');
                    let coef = if head.is_empty() {
                        BigInt::one()
                    } else {
                        head.parse::<BigInt>().map_err(|_| bad())?
                    };
                    let tail = &t[pos + 1..];
                    let exp = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?
                    };
                    (coef, exp)
                }
            };
            p.add_term(exp, if neg { -coef } else { coef });
        }
        Ok(p)
    }
}

impl Serialize for Laurent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let m: BTreeMap<String, serde_json::Number> = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let n = c.to_string().parse::<serde_json::Number>().expect("integer literal");
                (e.to_string(), n)
            })
            .collect();
        m.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Laurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let m = BTreeMap::<String, serde_json::Number>::deserialize(d)?;
        let mut p = Self::zero();
        for (k, v) in m {
            let e = k.parse::<i64>().map_err(D::Error::custom)?;
            let c = v.to_string().parse::<BigInt>().map_err(D::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(mut self, rhs: Laurent) -> Laurent {
        self += &rhs;
        self
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Laurent {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(Laurent::qint(1).unwrap(), Laurent::one());
        assert_eq!(Laurent::qint(3).unwrap().to_string(), "q^2 + 1 + q^-2");
        let six = Laurent::qint(2).unwrap() * Laurent::qint(3).unwrap();
        assert_eq!(six.to_string(), "q^3 + 2*q + 2*q^-1 + q^-3");
        assert!(Laurent::qint(0).is_err());
        assert!(Laurent::qint(-2).is_err());
    }

    #[test]
    fn ring_plumbing() {
        assert!((&p("q") + &p("-q")).is_zero());
        assert_eq!(Laurent::qint(2).unwrap().shift(1), p("q^2 + 1"));
        let two = Laurent::qint(2).unwrap();
        assert_eq!(&two * &two, p("q^2 + 2 + q^-2"));
        assert_eq!(&p("3*q^-1") - &p("q^-1"), p("2*q^-1"));
    }

    #[test]
    fn text_form() {
        assert_eq!(Laurent::zero().to_string(), "0");
        assert_eq!(p("-q^-3 + 5").to_string(), "5 - q^-3");
        assert_eq!(p("-2*q").to_string(), "-2*q");
        assert!("q^".parse::<Laurent>().is_err());
        assert!("1 ++ q".parse::<Laurent>().is_err());
        assert!("".parse::<Laurent>().is_err());
    }

    #[test]
    fn json_form() {
        let x = p("q^3 + 2*q^-1");
        let v = x.to_json();
        assert_eq!(v, serde_json::json!({"3": 1, "-1": 2}));
        let back: Laurent = serde_json::from_value(v).unwrap();
        assert_eq!(back, x);
    }
}
