//! Packed monomials and monomial orders.
//!
//! Exponents live in the sixteen byte lanes of a `u128`, one lane per
//! variable, with the top bit of every lane kept clear as a guard. That
//! caps a ring at 16 variables and every exponent at 127, and makes
//! multiplication a single add and divisibility a subtract-and-mask.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

pub const MAX_VARS: usize = 16;
pub const MAX_EXPONENT: u32 = 127;

const GUARD: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

/// A monomial `x^a` together with a free-module position (0 for ring
/// elements). The total degree is cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    bits: u128,
    deg: u32,
    pos: u32,
}

#[inline]
fn lane_sum(x: u128) -> u32 {
    const M8: u128 = 0x00FF_00FF_00FF_00FF_00FF_00FF_00FF_00FF;
    const M16: u128 = 0x0000_FFFF_0000_FFFF_0000_FFFF_0000_FFFF;
    const M32: u128 = 0x0000_0000_FFFF_FFFF_0000_0000_FFFF_FFFF;
    let x = (x & M8) + ((x >> 8) & M8);
    let x = (x & M16) + ((x >> 16) & M16);
    let x = (x & M32) + ((x >> 32) & M32);
    ((x as u64) + ((x >> 64) as u64)) as u32
}

/// Per-lane mask, `0xFF` where `a >= b`.
#[inline]
fn ge_mask(a: u128, b: u128) -> u128 {
    let flags = ((a | GUARD).wrapping_sub(b)) & GUARD;
    (flags >> 7).wrapping_mul(0xFF)
}

impl Monomial {
    pub const ONE: Monomial = Monomial { bits: 0, deg: 0, pos: 0 };

    /// Build from an exponent vector. Panics if it has more than 16 entries
    /// or an exponent above 127.
    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        let mut bits = 0u128;
        let mut deg = 0;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_EXPONENT, "exponent {e} exceeds {MAX_EXPONENT}");
            bits |= (e as u128) << (8 * i);
            deg += e;
        }
        Monomial { bits, deg, pos: 0 }
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS);
        Monomial { bits: 1u128 << (8 * i), deg: 1, pos: 0 }
    }

    /// The basis element at position `pos` of a free module.
    pub fn unit(pos: u32) -> Self {
        Monomial { bits: 0, deg: 0, pos }
    }

    #[inline]
    pub fn with_pos(self, pos: u32) -> Self {
        Monomial { pos, ..self }
    }

    #[inline]
    pub fn pos(&self) -> u32 {
        self.pos
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        ((self.bits >> (8 * i)) & 0xFF) as u32
    }

    pub fn exponents(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.exp(i)).collect()
    }

    pub fn is_one(&self) -> bool {
        self.bits == 0
    }

    /// Product; the position is the sum of positions, so a ring monomial
    /// times a module monomial keeps the module position.
    #[inline]
    pub fn mul(&self, o: &Monomial) -> Monomial {
        let bits = self.bits + o.bits;
        assert!(bits & GUARD == 0, "exponent overflow in monomial product");
        Monomial { bits, deg: self.deg + o.deg, pos: self.pos + o.pos }
    }

    /// Whether `self` divides `o` (same position, exponentwise `<=`).
    #[inline]
    pub fn divides(&self, o: &Monomial) -> bool {
        self.pos == o.pos && self.deg <= o.deg && ((o.bits | GUARD).wrapping_sub(self.bits)) & GUARD == GUARD
    }

    /// Exponentwise divisibility ignoring positions.
    #[inline]
    pub fn divides_exponents(&self, o: &Monomial) -> bool {
        ((o.bits | GUARD).wrapping_sub(self.bits)) & GUARD == GUARD
    }

    /// `o / self` as a ring monomial (position 0), assuming divisibility of exponents.
    #[inline]
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        debug_assert!(self.divides_exponents(o));
        Monomial { bits: o.bits - self.bits, deg: o.deg - self.deg, pos: 0 }
    }

    /// Exponentwise maximum; keeps `self`'s position.
    #[inline]
    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let m = ge_mask(self.bits, o.bits);
        let bits = (self.bits & m) | (o.bits & !m);
        Monomial { bits, deg: lane_sum(bits), pos: self.pos }
    }

    /// Exponentwise minimum, position 0.
    #[inline]
    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let m = ge_mask(self.bits, o.bits);
        let bits = (o.bits & m) | (self.bits & !m);
        Monomial { bits, deg: lane_sum(bits), pos: 0 }
    }

    #[inline]
    pub fn coprime(&self, o: &Monomial) -> bool {
        self.gcd(o).bits == 0
    }

    /// Weighted degree `sum w_i a_i`.
    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        let mut d = 0;
        for (i, w) in weights.iter().enumerate() {
            d += w * self.exp(i);
        }
        d
    }

    /// Drop variable lanes `[from, from + count)` shifting higher lanes down;
    /// used when moving between a ring and its subring.
    pub fn remove_lanes(&self, from: usize, count: usize) -> Monomial {
        let low_mask = if from == 0 { 0 } else { (1u128 << (8 * from)) - 1 };
        let low = self.bits & low_mask;
        let high = if 8 * (from + count) >= 128 { 0 } else { self.bits >> (8 * (from + count)) };
        let bits = low | (high << (8 * from));
        Monomial { bits, deg: lane_sum(bits), pos: self.pos }
    }

    /// Insert `count` zero lanes at `at`, shifting higher lanes up.
    pub fn insert_lanes(&self, at: usize, count: usize) -> Monomial {
        let low_mask = if at == 0 { 0 } else { (1u128 << (8 * at)) - 1 };
        let low = self.bits & low_mask;
        let high = self.bits & !low_mask;
        let shifted = high << (8 * count);
        assert!(shifted >> (8 * count) == high, "too many variables");
        Monomial { bits: low | shifted, deg: self.deg, pos: self.pos }
    }
}

/// Mask selecting lanes `[0, k)`.
#[inline]
pub(crate) fn lanes_below(k: usize) -> u128 {
    if k >= 16 {
        !0u128
    } else {
        (1u128 << (8 * k)) - 1
    }
}

#[inline]
fn grevlex_tail(a: u128, b: u128) -> Ordering {
    // Degrees are equal; the last differing variable decides, smaller wins.
    let x = a ^ b;
    if x == 0 {
        return Ordering::Equal;
    }
    let lane = (127 - x.leading_zeros()) / 8;
    let ea = (a >> (8 * lane)) & 0xFF;
    let eb = (b >> (8 * lane)) & 0xFF;
    eb.cmp(&ea)
}

#[inline]
fn lex_cmp(a: u128, b: u128) -> Ordering {
    let x = a ^ b;
    if x == 0 {
        return Ordering::Equal;
    }
    let lane = x.trailing_zeros() / 8;
    let ea = (a >> (8 * lane)) & 0xFF;
    let eb = (b >> (8 * lane)) & 0xFF;
    ea.cmp(&eb)
}

/// Monomial orders on ring monomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Weighted degree first, ties broken by grevlex. Weights must be positive.
    Weighted(Vec<u32>),
    /// Product order: grevlex on the first `k` variables, then `inner` on
    /// the rest. Any monomial involving the first block beats any without.
    Elim { k: usize, inner: Box<MonomialOrder> },
}

impl MonomialOrder {
    pub fn elim(k: usize) -> Self {
        MonomialOrder::Elim { k, inner: Box::new(MonomialOrder::Grevlex) }
    }

    /// Compare exponent parts only (positions ignored).
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| grevlex_tail(a.bits, b.bits)),
            MonomialOrder::Lex => lex_cmp(a.bits, b.bits),
            MonomialOrder::Weighted(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| a.deg.cmp(&b.deg))
                .then_with(|| grevlex_tail(a.bits, b.bits)),
            MonomialOrder::Elim { k, inner } => {
                let mask = lanes_below(*k);
                let (ah, bh) = (a.bits & mask, b.bits & mask);
                let da = lane_sum(ah);
                let db = lane_sum(bh);
                da.cmp(&db).then_with(|| grevlex_tail(ah, bh)).then_with(|| {
                    let ar = Monomial { bits: a.bits & !mask, deg: a.deg - da, pos: 0 };
                    let br = Monomial { bits: b.bits & !mask, deg: b.deg - db, pos: 0 };
                    inner.cmp(&ar, &br)
                })
            }
        }
    }

    /// Whether the order compares total degree first (so homogeneous
    /// inputs are processed degree by degree).
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Weighted(w) => {
                let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                format!("weighted:{}", ws.join(","))
            }
            MonomialOrder::Elim { k, inner } => match **inner {
                MonomialOrder::Grevlex => format!("elim:{k}"),
                _ => format!("elim:{k}/{}", inner.name()),
            },
        }
    }

    pub fn parse(s: &str) -> Option<MonomialOrder> {
        let s = s.trim();
        match s {
            "grevlex" => return Some(MonomialOrder::Grevlex),
            "lex" => return Some(MonomialOrder::Lex),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("elim:") {
            let k: usize = rest.parse().ok()?;
            return Some(MonomialOrder::elim(k));
        }
        if let Some(rest) = s.strip_prefix("weighted:") {
            let w: Option<Vec<u32>> = rest.split(',').map(|x| x.trim().parse().ok()).collect();
            let w = w?;
            if w.contains(&0) {
                return None;
            }
            return Some(MonomialOrder::Weighted(w));
        }
        None
    }
}

/// How module positions enter the comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrderKind {
    /// Twisted degree, then the monomial order, then position (smaller index wins).
    TermOverPosition,
    /// Position first (smaller index wins), then the monomial order.
    PositionOverTerm,
    /// Positions below `split` beat all others; term-over-position inside each block.
    Block { split: u32 },
}

/// A term order on free-module monomials `x^a e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    pub mono: MonomialOrder,
    pub kind: ModuleOrderKind,
    /// Degree of each basis element `e_i`.
    pub twists: Vec<i32>,
}

impl TermOrder {
    /// The order on a polynomial ring (single position, twist 0).
    pub fn ring(mono: MonomialOrder) -> Self {
        TermOrder { mono, kind: ModuleOrderKind::TermOverPosition, twists: vec![0] }
    }

    pub fn module(mono: MonomialOrder, kind: ModuleOrderKind, twists: Vec<i32>) -> Self {
        TermOrder { mono, kind, twists }
    }

    #[inline]
    pub fn twist(&self, pos: u32) -> i32 {
        self.twists.get(pos as usize).copied().unwrap_or(0)
    }

    #[inline]
    pub fn twisted_degree(&self, m: &Monomial) -> i64 {
        m.deg as i64 + self.twist(m.pos) as i64
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.twists.len() <= 1 && a.pos == b.pos {
            return self.mono.cmp(a, b);
        }
        let top = || {
            self.twisted_degree(a)
                .cmp(&self.twisted_degree(b))
                .then_with(|| self.mono.cmp(a, b))
                .then_with(|| b.pos.cmp(&a.pos))
        };
        match &self.kind {
            ModuleOrderKind::TermOverPosition => top(),
            ModuleOrderKind::PositionOverTerm => b.pos.cmp(&a.pos).then_with(|| self.mono.cmp(a, b)),
            ModuleOrderKind::Block { split } => {
                let ua = a.pos < *split;
                let ub = b.pos < *split;
                ua.cmp(&ub).then_with(top)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn packing_roundtrip() {
        let a = m(&[3, 0, 127, 5, 1]);
        assert_eq!(a.exponents(5), vec![3, 0, 127, 5, 1]);
        assert_eq!(a.degree(), 136);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), m(&[1, 0, 1]));
        assert_eq!(m(&[3, 0, 1]).lcm(&m(&[1, 4, 1])), m(&[3, 4, 1]));
        assert_eq!(m(&[3, 0, 1]).gcd(&m(&[1, 4, 1])), m(&[1, 0, 1]));
        assert!(m(&[1, 0]).coprime(&m(&[0, 5])));
        assert!(!a.with_pos(1).divides(&b));
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        // x0 x2 < x1^2 in grevlex.
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 3])), Ordering::Greater);
    }

    #[test]
    fn elimination_examples() {
        let o = MonomialOrder::elim(1);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 10])), Ordering::Greater);
    }

    #[test]
    fn lane_surgery() {
        let a = m(&[1, 2, 3, 4]);
        assert_eq!(a.remove_lanes(0, 1), m(&[2, 3, 4]));
        assert_eq!(a.remove_lanes(1, 2), m(&[1, 4]));
        assert_eq!(m(&[2, 3]).insert_lanes(0, 1), m(&[0, 2, 3]));
    }
}
