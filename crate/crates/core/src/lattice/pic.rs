//! The Picard lattice of a degree-one del Pezzo surface, written in the
//! basis `h, e1, ..., e8` of a fixed blow-down to the plane.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use serde::{Deserialize, Serialize};
/// A class `a*h - sum_i b[i]*e_{i+1}` in `Pic(S) = I_{1,8}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PicClass {
    pub a: i64,
    pub b: [i64; 8],
}

impl PicClass {
    pub const fn new(a: i64, b: [i64; 8]) -> Self {
        PicClass { a, b }
    }

    pub const fn zero() -> Self {
        PicClass { a: 0, b: [0; 8] }
    }

    /// The pullback `h` of a line.
    pub const fn h() -> Self {
        PicClass { a: 1, b: [0; 8] }
    }

    /// The exceptional curve `e_i`, 1-based as in the usual notation.
    pub fn e(i: usize) -> Self {
        assert!((1..=8).contains(&i), "exceptional index {i} out of 1..=8");
        let mut b = [0; 8];
        b[i - 1] = -1;
        PicClass { a: 0, b }
    }

    /// The canonical class `K = -3h + e1 + ... + e8`.
    pub const fn canonical() -> Self {
        PicClass { a: -3, b: [-1; 8] }
    }

    /// The lattice pairing `a*a' - sum b_i*b'_i`.
    pub fn dot(&self, other: &PicClass) -> i64 {
        let mut s = self.a * other.a;
        for i in 0..8 {
            s -= self.b[i] * other.b[i];
        }
        s
    }

    pub fn square(&self) -> i64 {
        self.dot(self)
    }

    /// `C . K`
    pub fn canonical_degree(&self) -> i64 {
        self.dot(&Self::canonical())
    }

    /// Reflection in a (-2)-class `alpha`: `x + (x.alpha) alpha`.
    pub fn reflect(&self, alpha: &PicClass) -> PicClass {
        debug_assert_eq!(alpha.square(), -2);
        *self + *alpha * self.dot(alpha)
    }

    pub fn coefficients(&self) -> [i64; 9] {
        let mut out = [0; 9];
        out[0] = self.a;
        out[1..].copy_from_slice(&self.b);
        out
    }

    pub fn from_coefficients(c: [i64; 9]) -> Self {
        let mut b = [0; 8];
        b.copy_from_slice(&c[1..]);
        PicClass { a: c[0], b }
    }

    /// Sorted coefficient view used to compare classes up to relabelling
    /// of the exceptional curves.
    pub fn sorted_b(&self) -> [i64; 8] {
        let mut b = self.b;
        b.sort_unstable_by(|x, y| y.cmp(x));
        b
    }
}

impl Add for PicClass {
    type Output = PicClass;
    fn add(self, o: PicClass) -> PicClass {
        let mut b = self.b;
        for (x, y) in b.iter_mut().zip(o.b) {
            *x += y;
        }
        PicClass { a: self.a + o.a, b }
    }
}

impl Sub for PicClass {
    type Output = PicClass;
    fn sub(self, o: PicClass) -> PicClass {
        self + (-o)
    }
}

impl Neg for PicClass {
    type Output = PicClass;
    fn neg(self) -> PicClass {
        PicClass { a: -self.a, b: self.b.map(|x| -x) }
    }
}

impl Mul<i64> for PicClass {
    type Output = PicClass;
    fn mul(self, k: i64) -> PicClass {
        PicClass { a: self.a * k, b: self.b.map(|x| x * k) }
    }
}

impl fmt::Display for PicClass {
    /// Prints `11h - 3e1 - 4e2 - ...`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, c: i64, name: &str| -> fmt::Result {
            if c == 0 {
                return Ok(());
            }
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if mag == 1 {
                write!(f, "{name}")
            } else {
                write!(f, "{mag}{name}")
            }
        };
        term(f, self.a, "h")?;
        for i in 0..8 {
            term(f, -self.b[i], &format!("e{}", i + 1))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The Bertini involution on `Pic(S)`: fixes `K` and acts as `-1` on `K^perp`,
/// i.e. `gamma -> 2 (gamma.K) K - gamma`.
pub fn bertini_pullback(gamma: &PicClass) -> PicClass {
    let k = PicClass::canonical();
    k * (2 * gamma.dot(&k)) - *gamma
}

/// The eight simple roots of the `E8` root system inside `K^perp`:
/// `e_i - e_{i+1}` for `i = 1..7` and `h - e1 - e2 - e3`.
pub fn simple_roots() -> [PicClass; 8] {
    let mut roots = [PicClass::zero(); 8];
    for (i, r) in roots.iter_mut().enumerate().take(7) {
        *r = PicClass::e(i + 1) - PicClass::e(i + 2);
    }
    roots[7] = PicClass::new(1, [1, 1, 1, 0, 0, 0, 0, 0]);
    roots
}

/// `h - e_i - e_j`, the class of the transform of the line through `q_i, q_j`.
pub fn line_class(i: usize, j: usize) -> PicClass {
    PicClass::h() - PicClass::e(i) - PicClass::e(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_square_is_one() {
        assert_eq!(PicClass::canonical().square(), 1);
    }

    #[test]
    fn conic_has_canonical_degree_minus_two() {
        let c = PicClass::h() - PicClass::e(1);
        assert_eq!(c.canonical_degree(), -2);
        assert_eq!(c.square(), 0);
    }

    #[test]
    fn simple_roots_are_orthogonal_to_k() {
        for r in simple_roots() {
            assert_eq!(r.square(), -2);
            assert_eq!(r.canonical_degree(), 0);
        }
    }

    #[test]
    fn bertini_on_first_conic() {
        let c = PicClass::h() - PicClass::e(1);
        let img = bertini_pullback(&c);
        assert_eq!(img, PicClass::new(11, [3, 4, 4, 4, 4, 4, 4, 4]));
        assert_eq!(img.square(), 0);
        assert_eq!(img.canonical_degree(), -2);
        assert_eq!(bertini_pullback(&img), c);
    }

    #[test]
    fn display_is_readable() {
        let c = PicClass::new(11, [3, 4, 4, 4, 4, 4, 4, 4]);
        assert_eq!(c.to_string(), "11h - 3e1 - 4e2 - 4e3 - 4e4 - 4e5 - 4e6 - 4e7 - 4e8");
        assert_eq!(PicClass::canonical().to_string(), "-3h + e1 + e2 + e3 + e4 + e5 + e6 + e7 + e8");
        assert_eq!(PicClass::zero().to_string(), "0");
    }
}
