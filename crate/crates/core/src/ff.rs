//! Prime fields `GF(p)` with `p < 2^31`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("modulus {0} is out of range (need 2 <= p < 2^31)")]
    ModulusOutOfRange(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by zero at index {0}")]
    DivisionByZeroAt(usize),
    #[error("elements of GF({0}) and GF({1}) combined")]
    FieldMismatch(u32, u32),
}

/// The field with `p` elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

/// Deterministic Miller-Rabin; the bases 2, 3, 5, 7, 11 are exact below 2.1e12.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    r
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !(2..(1u64 << 31)).contains(&p) {
            return Err(FieldError::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(FieldError::CompositeModulus(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn elem(&self, v: i64) -> FieldElement {
        FieldElement { value: self.reduce_i64(v), field: *self }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { value: 0, field: *self }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { value: 1 % self.p, field: *self }
    }

    #[inline]
    pub fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn reduce_u64(&self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        pow_mod(a as u64, e, self.p as u64) as u32
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a.is_multiple_of(self.p) {
            return Err(FieldError::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.reduce_i64(t0))
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Map a representative into the symmetric range `(-p/2, p/2]`.
    pub fn signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// Invert all entries with a single field inversion (Montgomery's trick).
    pub fn batch_invert_raw(&self, xs: &[u32]) -> Result<Vec<u32>, FieldError> {
        let mut prefix = Vec::with_capacity(xs.len());
        let mut acc = 1u32;
        for (i, &x) in xs.iter().enumerate() {
            if x % self.p == 0 {
                return Err(FieldError::DivisionByZeroAt(i));
            }
            prefix.push(acc);
            acc = self.mul(acc, x);
        }
        let mut inv = self.inv(acc)?;
        let mut out = vec![0; xs.len()];
        for i in (0..xs.len()).rev() {
            out[i] = self.mul(inv, prefix[i]);
            inv = self.mul(inv, xs[i]);
        }
        Ok(out)
    }

    pub fn batch_invert(&self, xs: &[FieldElement]) -> Result<Vec<FieldElement>, FieldError> {
        for x in xs {
            if x.field != *self {
                return Err(FieldError::FieldMismatch(self.p, x.field.p));
            }
        }
        let raw: Vec<u32> = xs.iter().map(|x| x.value).collect();
        Ok(self.batch_invert_raw(&raw)?.into_iter().map(|v| FieldElement { value: v, field: *self }).collect())
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// An element of a prime field, stored as its canonical representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: PrimeField,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, o: &FieldElement) -> Result<(), FieldError> {
        if self.field != o.field {
            Err(FieldError::FieldMismatch(self.field.p, o.field.p))
        } else {
            Ok(())
        }
    }

    pub fn arith(&self, o: &FieldElement, op: ArithOp) -> Result<FieldElement, FieldError> {
        self.check(o)?;
        let f = self.field;
        let value = match op {
            ArithOp::Add => f.add(self.value, o.value),
            ArithOp::Sub => f.sub(self.value, o.value),
            ArithOp::Mul => f.mul(self.value, o.value),
            ArithOp::Div => f.div(self.value, o.value)?,
        };
        Ok(FieldElement { value, field: f })
    }

    pub fn add(&self, o: &FieldElement) -> Result<FieldElement, FieldError> {
        self.arith(o, ArithOp::Add)
    }

    pub fn sub(&self, o: &FieldElement) -> Result<FieldElement, FieldError> {
        self.arith(o, ArithOp::Sub)
    }

    pub fn mul(&self, o: &FieldElement) -> Result<FieldElement, FieldError> {
        self.arith(o, ArithOp::Mul)
    }

    pub fn div(&self, o: &FieldElement) -> Result<FieldElement, FieldError> {
        self.arith(o, ArithOp::Div)
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        Ok(FieldElement { value: self.field.inv(self.value)?, field: self.field })
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement { value: self.field.pow(self.value, e), field: self.field }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement { value: self.field.neg(self.value), field: self.field }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Dot product of two rows with a wide accumulator, reduced once.
pub fn dot_mod(f: PrimeField, a: &[u32], b: &[u32]) -> u32 {
    let mut acc: u128 = 0;
    for (x, y) in a.iter().zip(b) {
        acc += *x as u128 * *y as u128;
    }
    (acc % f.p() as u128) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        assert_eq!(PrimeField::new(67).unwrap().p(), 67);
        assert!(PrimeField::new(2).is_ok());
        assert_eq!(PrimeField::new(6), Err(FieldError::CompositeModulus(6)));
        assert!(matches!(PrimeField::new(1), Err(FieldError::ModulusOutOfRange(1))));
        assert!(PrimeField::new(2_147_483_647).is_ok());
        assert!(PrimeField::new(2_147_483_649).is_err());
    }

    #[test]
    fn primality_against_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "{n}");
        }
        // Strong pseudoprimes to small bases.
        for n in [2047u64, 1373653, 25326001, 3215031751] {
            assert_eq!(is_prime(n), trial(n), "{n}");
        }
    }

    #[test]
    fn small_examples() {
        let f = PrimeField::new(67).unwrap();
        assert_eq!(f.elem(33).add(&f.elem(34)).unwrap().value(), 0);
        let half = f.one().div(&f.elem(2)).unwrap();
        assert_eq!(half.value(), 34);
        assert_eq!(f.mul(2, half.value()), 1);
        assert_eq!(f.elem(5).div(&f.zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn batch_examples() {
        let f = PrimeField::new(7).unwrap();
        assert!(f.batch_invert(&[]).unwrap().is_empty());
        let xs: Vec<_> = [1, 2, 4].iter().map(|&v| f.elem(v)).collect();
        let inv: Vec<u32> = f.batch_invert(&xs).unwrap().iter().map(|x| x.value()).collect();
        assert_eq!(inv, vec![1, 4, 2]);
        assert_eq!(f.batch_invert(&[f.zero()]), Err(FieldError::DivisionByZeroAt(0)));
        assert_eq!(f.batch_invert(&[f.one(), f.one(), f.zero()]), Err(FieldError::DivisionByZeroAt(2)));
    }

    #[test]
    fn mismatch() {
        let a = PrimeField::new(5).unwrap().one();
        let b = PrimeField::new(7).unwrap().one();
        assert_eq!(a.add(&b), Err(FieldError::FieldMismatch(5, 7)));
    }
}
