//! Dyadic rationals `num / 2^den2` with arbitrary-precision numerators.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Always normalized: either `num` is odd or `den2 == 0`; zero has `den2 == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    num: BigInt,
    den2: u32,
}

impl Dyadic {
    pub fn new(num: BigInt, den2: u32) -> Self {
        let mut d = Dyadic { num, den2 };
        d.normalize();
        d
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic {
            num: n.into(),
            den2: 0,
        }
    }

    pub fn zero() -> Self {
        Dyadic::default()
    }

    pub fn one() -> Self {
        Dyadic::from_int(1)
    }

    /// `2^e` for any signed exponent.
    pub fn pow2(e: i32) -> Self {
        Dyadic::one().shifted(e)
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn den2(&self) -> u32 {
        self.den2
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den2 == 0
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.num.clone())
    }

    /// Multiplication by `2^e`.
    pub fn shifted(&self, e: i32) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        if e >= 0 {
            let e = e as u32;
            if e >= self.den2 {
                Dyadic {
                    num: &self.num << (e - self.den2) as usize,
                    den2: 0,
                }
            } else {
                Dyadic {
                    num: self.num.clone(),
                    den2: self.den2 - e,
                }
            }
        } else {
            Dyadic::new(self.num.clone(), self.den2 + e.unsigned_abs())
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den2 = 0;
            return;
        }
        if self.den2 > 0 {
            let tz = self.num.trailing_zeros().unwrap_or(0).min(self.den2 as u64) as u32;
            if tz > 0 {
                self.num >>= tz as usize;
                self.den2 -= tz;
            }
        }
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_int(n)
    }
}

impl From<BigInt> for Dyadic {
    fn from(n: BigInt) -> Self {
        Dyadic::from_int(n)
    }
}

impl Add<&Dyadic> for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let den2 = self.den2.max(rhs.den2);
        let a = &self.num << (den2 - self.den2) as usize;
        let b = &rhs.num << (den2 - rhs.den2) as usize;
        Dyadic::new(a + b, den2)
    }
}

impl AddAssign<&Dyadic> for Dyadic {
    fn add_assign(&mut self, rhs: &Dyadic) {
        if self.den2 == rhs.den2 {
            self.num += &rhs.num;
            self.normalize();
        } else {
            *self = &*self + rhs;
        }
    }
}

impl Sub<&Dyadic> for &Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            num: -&self.num,
            den2: self.den2,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        -&self
    }
}

impl Mul<&Dyadic> for &Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &rhs.num, self.den2 + rhs.den2)
    }
}

impl Mul<&BigInt> for &Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: &BigInt) -> Dyadic {
        Dyadic::new(&self.num * rhs, self.den2)
    }
}

impl fmt::Display for Dyadic {
    /// `num` or `num/2^e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den2 == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.den2)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Dyadic {
    pub fn is_one(&self) -> bool {
        self.den2 == 0 && self.num.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            num: self.num.abs(),
            den2: self.den2,
        }
    }
}
