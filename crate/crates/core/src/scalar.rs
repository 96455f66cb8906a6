//! Golden integers `a + b*phi` with `phi^2 = phi + 1`.
//!
//! Ordinary integers are the golden integers with `b = 0`, so one type covers
//! both the crystallographic and the `H3`/`H4` root systems. All arithmetic is
//! checked; overflow panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub a: i64,
    pub b: i64,
}

impl Scalar {
    pub const ZERO: Scalar = Scalar { a: 0, b: 0 };
    pub const ONE: Scalar = Scalar { a: 1, b: 0 };
    pub const PHI: Scalar = Scalar { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Scalar { a, b }
    }

    pub const fn int(a: i64) -> Self {
        Scalar { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Exact sign of `a + b*phi` as a real number.
    ///
    /// With `t = 2a + b` the value is `(t + b*sqrt(5)) / 2`. When `t` and `b`
    /// agree in sign the answer is immediate; otherwise the larger of `t^2` and
    /// `5 b^2` decides.
    pub fn sign(self) -> Ordering {
        let t = checked(self.a.checked_mul(2).and_then(|x| x.checked_add(self.b)));
        let b = self.b;
        if t == 0 && b == 0 {
            return Ordering::Equal;
        }
        if t >= 0 && b >= 0 {
            return Ordering::Greater;
        }
        if t <= 0 && b <= 0 {
            return Ordering::Less;
        }
        let t2 = (t as i128) * (t as i128);
        let b2 = 5 * (b as i128) * (b as i128);
        // t2 == b2 would need sqrt(5) rational, so it cannot happen here.
        if t2 > b2 {
            t.cmp(&0)
        } else {
            b.cmp(&0)
        }
    }

    pub fn is_positive(self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(self) -> bool {
        self.sign() == Ordering::Less
    }

    /// Floating approximation, for display only.
    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * (1.0 + 5f64.sqrt()) / 2.0
    }
}

#[track_caller]
fn checked(x: Option<i64>) -> i64 {
    x.expect("golden integer arithmetic overflowed")
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar {
            a: checked(self.a.checked_add(rhs.a)),
            b: checked(self.b.checked_add(rhs.b)),
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar {
            a: checked(self.a.checked_sub(rhs.a)),
            b: checked(self.b.checked_sub(rhs.b)),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: checked(self.a.checked_neg()),
            b: checked(self.b.checked_neg()),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    /// `(a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi`
    fn mul(self, rhs: Scalar) -> Scalar {
        let ac = self.a.checked_mul(rhs.a);
        let bd = self.b.checked_mul(rhs.b);
        let ad = self.a.checked_mul(rhs.b);
        let bc = self.b.checked_mul(rhs.a);
        let bd = checked(bd);
        Scalar {
            a: checked(ac.and_then(|x| x.checked_add(bd))),
            b: checked(ad.and_then(|x| x.checked_add(checked(bc))).and_then(|x| x.checked_add(bd))),
        }
    }
}

impl From<i64> for Scalar {
    fn from(a: i64) -> Self {
        Scalar::int(a)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "φ"),
            (0, -1) => write!(f, "-φ"),
            (0, b) => write!(f, "{b}φ"),
            (a, 1) => write!(f, "{a}+φ"),
            (a, -1) => write!(f, "{a}-φ"),
            (a, b) if b < 0 => write!(f, "{a}{b}φ"),
            (a, b) => write!(f, "{a}+{b}φ"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sign_examples() {
        assert_eq!(Scalar::new(1, -1).sign(), Ordering::Less);
        assert_eq!(Scalar::new(0, 0).sign(), Ordering::Equal);
        assert_eq!(Scalar::new(2, -1).sign(), Ordering::Greater);
        assert_eq!(Scalar::new(-2, 1).sign(), Ordering::Less);
        assert_eq!(Scalar::PHI.sign(), Ordering::Greater);
    }

    #[test]
    fn phi_squared() {
        assert_eq!(Scalar::PHI * Scalar::PHI, Scalar::PHI + Scalar::ONE);
    }

    #[test]
    #[should_panic(expected = "overflowed")]
    fn overflow_panics() {
        let _ = Scalar::int(i64::MAX) + Scalar::ONE;
    }

    proptest! {
        #[test]
        fn sign_matches_float(a in -1000i64..1000, b in -1000i64..1000) {
            let x = Scalar::new(a, b);
            let f = x.to_f64();
            // Nonzero golden integers this small are far from zero.
            prop_assert_eq!(x.sign(), f.partial_cmp(&0.0).unwrap());
        }

        #[test]
        fn ring_laws(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50, e in -50i64..50, g in -50i64..50) {
            let (x, y, z) = (Scalar::new(a, b), Scalar::new(c, d), Scalar::new(e, g));
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x - y) + y, x);
        }
    }
}
