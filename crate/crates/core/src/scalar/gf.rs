//! Prime fields GF(p) with a runtime modulus.
//!
//! Elements carry their modulus. Constants such as `zero()` and `one()` have
//! no operand to borrow it from, so they read the modulus of the innermost
//! active [`GfContext`] on the current thread.

use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::field::{Field, Ring, Scalar};
use crate::error::{Error, Result};

thread_local! {
    static ACTIVE_PRIME: Cell<Option<u32>> = const { Cell::new(None) };
}

/// Scope guard that fixes the modulus for GF(p) constants on this thread.
///
/// Guards nest; dropping one restores the previous modulus.
#[must_use = "the context is only active while the guard is alive"]
pub struct GfContext {
    previous: Option<u32>,
}

impl GfContext {
    pub fn enter(p: u32) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::InvalidField(format!("GF({p}) requires a prime below 2^31")));
        }
        let previous = ACTIVE_PRIME.with(|c| c.replace(Some(p)));
        Ok(GfContext { previous })
    }

    pub fn active() -> Option<u32> {
        ACTIVE_PRIME.with(|c| c.get())
    }
}

impl Drop for GfContext {
    fn drop(&mut self) {
        ACTIVE_PRIME.with(|c| c.set(self.previous));
    }
}

/// Run `f` with GF(p) constants bound to `p`.
pub fn with_prime<T>(p: u32, f: impl FnOnce() -> T) -> Result<T> {
    let _guard = GfContext::enter(p)?;
    Ok(f())
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn active_prime() -> u32 {
    GfContext::active().expect("GF(p) constant requested outside of a GfContext")
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf {
    value: u32,
    modulus: u32,
}

impl Gf {
    pub fn new(value: i64, modulus: u32) -> Self {
        let v = value.rem_euclid(modulus as i64) as u32;
        Gf { value: v, modulus }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    fn check(&self, other: &Gf) -> u64 {
        assert_eq!(self.modulus, other.modulus, "mixed moduli in GF arithmetic");
        self.modulus as u64
    }

    fn pow(&self, mut e: u64) -> Gf {
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Gf { value: acc as u32, modulus: self.modulus }
    }
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Gf {
    type Output = Gf;
    fn add(self, rhs: Gf) -> Gf {
        let p = self.check(&rhs);
        Gf { value: ((self.value as u64 + rhs.value as u64) % p) as u32, modulus: self.modulus }
    }
}

impl Sub for Gf {
    type Output = Gf;
    fn sub(self, rhs: Gf) -> Gf {
        let p = self.check(&rhs);
        Gf { value: ((self.value as u64 + p - rhs.value as u64) % p) as u32, modulus: self.modulus }
    }
}

impl Mul for Gf {
    type Output = Gf;
    fn mul(self, rhs: Gf) -> Gf {
        let p = self.check(&rhs);
        Gf { value: ((self.value as u64 * rhs.value as u64) % p) as u32, modulus: self.modulus }
    }
}

impl Neg for Gf {
    type Output = Gf;
    fn neg(self) -> Gf {
        let p = self.modulus;
        Gf { value: (p - self.value) % p, modulus: p }
    }
}

impl Div for Gf {
    type Output = Gf;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Gf) -> Gf {
        self * rhs.inv()
    }
}

impl Ring for Gf {
    fn zero() -> Self {
        Gf { value: 0, modulus: active_prime() }
    }
    fn one() -> Self {
        Gf { value: 1, modulus: active_prime() }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
}

impl Field for Gf {
    fn inv(&self) -> Self {
        assert!(self.value != 0, "inverse of zero");
        // Fermat: a^(p-2) = a^-1
        self.pow(self.modulus as u64 - 2)
    }
}

impl Scalar for Gf {
    fn from_i64(v: i64) -> Self {
        Gf::new(v, active_prime())
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(active_prime());
        let n = num.mod_floor(&p).to_i64()?;
        let d = den.mod_floor(&p).to_i64()?;
        if d == 0 {
            return None;
        }
        Some(Gf::from_i64(n) / Gf::from_i64(d))
    }
}
