//! Enumeration of (-1)-classes, conics and cubics on the degree-one
//! del Pezzo surface.
//!
//! The primary method is a breadth-first orbit closure under the eight
//! simple reflections of `E8 ⊂ K^perp`. A bounded exhaustive search over
//! the numerical conditions is provided as an independent cross-check.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::pic::{simple_roots, PicClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    /// `l^2 = -1`, `l.K = -1`
    MinusOne,
    /// `C^2 = 0`, `C.K = -2`
    Conic,
    /// `c^2 = 1`, `c.K = -3`, in the Weyl orbit of `h`
    Cubic,
}

impl ClassKind {
    pub const ALL: [ClassKind; 3] = [ClassKind::MinusOne, ClassKind::Conic, ClassKind::Cubic];

    /// `(self-intersection, canonical degree)`
    pub fn numerics(self) -> (i64, i64) {
        match self {
            ClassKind::MinusOne => (-1, -1),
            ClassKind::Conic => (0, -2),
            ClassKind::Cubic => (1, -3),
        }
    }

    /// A representative the orbit closure starts from.
    pub fn seed(self) -> PicClass {
        match self {
            ClassKind::MinusOne => PicClass::e(8),
            ClassKind::Conic => PicClass::h() - PicClass::e(1),
            ClassKind::Cubic => PicClass::h(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::MinusOne => "minus-one",
            ClassKind::Conic => "conics",
            ClassKind::Cubic => "cubics",
        }
    }

    pub fn parse(s: &str) -> Option<ClassKind> {
        match s {
            "minus-one" | "minus_one" => Some(ClassKind::MinusOne),
            "conic" | "conics" => Some(ClassKind::Conic),
            "cubic" | "cubics" => Some(ClassKind::Cubic),
            _ => None,
        }
    }

    pub fn matches(self, c: &PicClass) -> bool {
        let (sq, kd) = self.numerics();
        c.square() == sq && c.canonical_degree() == kd
    }
}

/// Weyl-orbit closure of `seed` under the simple reflections, returned sorted.
pub fn orbit(seed: PicClass) -> Vec<PicClass> {
    let roots = simple_roots();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed);
    queue.push_back(seed);
    while let Some(c) = queue.pop_front() {
        for r in &roots {
            let next = c.reflect(r);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<PicClass> = seen.into_iter().collect();
    out.sort();
    out
}

/// Enumerate a class family by orbit closure, sorted.
pub fn enumerate_classes(kind: ClassKind) -> Vec<PicClass> {
    orbit(kind.seed())
}

/// Exhaustive search for classes with the numerics of `kind`.
///
/// With `d = -c.K` and `s = c^2`, write `c = -dK + v` and `h = -3K + w`
/// with `v, w` in the negative definite `K^perp`. Then `a = c.h = 3d + v.w`
/// and Cauchy-Schwarz gives `|a - 3d| <= sqrt(8 (d^2 - s))`, so the search
/// over that window with sorted `b` tuples is complete.
///
/// For cubics the numerical conditions also admit the 240 classes
/// `-3K + 2r` for roots `r`; those are filtered by [`verify_cubic`].
///
/// [`verify_cubic`]: super::facets::verify_cubic
pub fn enumerate_by_search(kind: ClassKind) -> Vec<PicClass> {
    let (sq, kd) = kind.numerics();
    let d = -kd;
    let slack = isqrt(8 * (d * d - sq));
    let mut out = Vec::new();
    for a in (3 * d - slack)..=(3 * d + slack) {
        // sum b = 3a + kd, sum b^2 = a^2 - sq, with b sorted descending.
        let sum = 3 * a + kd;
        let sumsq = a * a - sq;
        let mut b = [0i64; 8];
        search_tuples(0, sum, sumsq, i64::MAX, &mut b, &mut |t: &[i64; 8]| {
            for perm in distinct_permutations(t) {
                let c = PicClass::new(a, perm);
                if kind == ClassKind::Cubic && !super::facets::verify_cubic(&c) {
                    continue;
                }
                out.push(c);
            }
        });
    }
    out.sort();
    out
}

fn search_tuples(
    idx: usize,
    sum: i64,
    sumsq: i64,
    cap: i64,
    b: &mut [i64; 8],
    emit: &mut dyn FnMut(&[i64; 8]),
) {
    let left = (8 - idx) as i64;
    if left == 0 {
        if sum == 0 && sumsq == 0 {
            emit(b);
        }
        return;
    }
    if sumsq < 0 {
        return;
    }
    // Any remaining entry has |b| <= sqrt(sumsq).
    let r = isqrt(sumsq);
    let hi = cap.min(r);
    for v in (-r..=hi).rev() {
        // The remaining `left` entries are all <= v, so their sum is at most left*v.
        if sum > left * v {
            break;
        }
        // Minimal sum of squares for `left` entries adding to `sum`.
        let rest = sum - v;
        let restsq = sumsq - v * v;
        if restsq < 0 {
            continue;
        }
        let m = left - 1;
        if m > 0 && rest * rest > m * restsq {
            continue;
        }
        b[idx] = v;
        search_tuples(idx + 1, rest, restsq, v, b, emit);
    }
}

fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// All distinct rearrangements of a descending-sorted tuple.
fn distinct_permutations(sorted_desc: &[i64; 8]) -> Vec<[i64; 8]> {
    let mut cur = *sorted_desc;
    cur.sort_unstable();
    let mut out = vec![cur];
    // Lexicographic next-permutation on the ascending start.
    loop {
        let mut i = 7;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = 7;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        assert_eq!(enumerate_classes(ClassKind::MinusOne).len(), 240);
        assert_eq!(enumerate_classes(ClassKind::Conic).len(), 2160);
    }

    #[test]
    fn search_agrees_with_orbit_for_small_kinds() {
        for kind in [ClassKind::MinusOne, ClassKind::Conic] {
            assert_eq!(enumerate_by_search(kind), enumerate_classes(kind), "{kind:?}");
        }
    }

    #[test]
    fn orbit_members_have_the_right_numerics() {
        for kind in [ClassKind::MinusOne, ClassKind::Conic] {
            for c in enumerate_classes(kind) {
                assert!(kind.matches(&c), "{c}");
            }
        }
    }

    #[test]
    fn permutations_of_repeated_entries() {
        let t = [2, 1, 1, 0, 0, 0, 0, 0];
        // 8! / (1! 2! 5!) = 168
        assert_eq!(distinct_permutations(&t).len(), 168);
    }
}
