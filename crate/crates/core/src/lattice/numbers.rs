//! Intersection-number tables on the fourfold, the surface `W'` and the
//! exceptional projective bundle.

use serde::Serialize;

/// A curve class on the blow-up of `P^4` at 8 points: degree `d` and
/// multiplicities `m_i` at the points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CurveClassX {
    pub degree: i64,
    pub mult: [i64; 8],
}

impl CurveClassX {
    pub fn new(degree: i64, mult: [i64; 8]) -> Self {
        CurveClassX { degree, mult }
    }

    /// A curve inside the exceptional divisor over point `i` (1-based)
    /// with `E_i`-degree `-t`.
    pub fn in_exceptional(i: usize, t: i64) -> Self {
        let mut mult = [0; 8];
        mult[i - 1] = -t;
        CurveClassX { degree: 0, mult }
    }

    /// `-K_X . C = 5d - 3 sum m_i` for `-K_X = 5H - 3 sum E_i`.
    pub fn anticanonical_degree(&self) -> i64 {
        5 * self.degree - 3 * self.mult.iter().sum::<i64>()
    }
}

/// The anticanonical degree on the blow-up of `P^4` at 8 points.
pub fn anticanonical_degree_x(c: &CurveClassX) -> i64 {
    c.anticanonical_degree()
}

/// A divisor on `W'` in the basis `(R, F, e1..e8)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfClassW {
    pub c: [i64; 10],
}

impl SurfClassW {
    pub const R: usize = 0;
    pub const F: usize = 1;

    pub fn basis(i: usize) -> Self {
        let mut c = [0; 10];
        c[i] = 1;
        SurfClassW { c }
    }

    pub fn r() -> Self {
        Self::basis(Self::R)
    }

    pub fn f() -> Self {
        Self::basis(Self::F)
    }

    pub fn e(i: usize) -> Self {
        Self::basis(1 + i)
    }

    pub fn combo(r: i64, f: i64) -> Self {
        let mut c = [0; 10];
        c[0] = r;
        c[1] = f;
        SurfClassW { c }
    }

    /// Gram matrix entry for basis elements `i, j`.
    pub fn gram(i: usize, j: usize) -> i64 {
        match (i.min(j), i.max(j)) {
            (0, 0) => -1,
            (1, 1) => 0,
            (0, 1) => 1,
            (0, _) | (1, _) => 1,
            (a, b) if a == b => -1,
            _ => 0,
        }
    }

    pub fn dot(&self, o: &SurfClassW) -> i64 {
        let mut s = 0;
        for i in 0..10 {
            if self.c[i] == 0 {
                continue;
            }
            for j in 0..10 {
                s += self.c[i] * o.c[j] * Self::gram(i, j);
            }
        }
        s
    }

    pub fn scale(&self, k: i64) -> Self {
        SurfClassW { c: self.c.map(|x| x * k) }
    }

    pub fn add(&self, o: &SurfClassW) -> Self {
        let mut c = self.c;
        for (x, y) in c.iter_mut().zip(o.c) {
            *x += y;
        }
        SurfClassW { c }
    }

    /// `K_{W'} = -F`
    pub fn canonical() -> Self {
        Self::f().scale(-1)
    }

    /// Riemann-Roch on a rational surface: `chi(D) = 1 + (D^2 - D.K)/2`.
    pub fn chi(&self) -> i64 {
        let k = Self::canonical();
        1 + (self.dot(self) - self.dot(&k)) / 2
    }

    /// Adjunction: `p_a(C) = 1 + (C^2 + C.K)/2`.
    pub fn genus(&self) -> i64 {
        let k = Self::canonical();
        1 + (self.dot(self) + self.dot(&k)) / 2
    }
}

/// A class on the exceptional divisor of the blow-up along the base curve,
/// a `P^2`-bundle over `P^1`: divisors in `(xi, F)` and curves in `(l, gamma)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PBundleClass {
    pub xi: i64,
    pub fibre: i64,
}

/// A curve class `a*l + b*gamma` on the bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PBundleCurve {
    pub l: i64,
    pub gamma: i64,
}

impl PBundleClass {
    pub fn new(xi: i64, fibre: i64) -> Self {
        PBundleClass { xi, fibre }
    }

    /// Degree of `self * other * third` using `F^2 = 0`, `xi^3 = xi^2 F`,
    /// `deg(xi^2 F) = 1`.
    pub fn triple(&self, b: &PBundleClass, c: &PBundleClass) -> i64 {
        // Expand the product as a polynomial in xi and F.
        let mut total = 0;
        for (x1, f1) in [(1, 0), (0, 1)] {
            for (x2, f2) in [(1, 0), (0, 1)] {
                for (x3, f3) in [(1, 0), (0, 1)] {
                    let coef = pick(self, x1) * pick(b, x2) * pick(c, x3);
                    let f = f1 + f2 + f3;
                    let value = match f {
                        0 => 1, // xi^3 = xi^2 F
                        1 => 1, // xi^2 F
                        _ => 0, // F^2 = 0
                    };
                    total += coef * value;
                }
            }
        }
        total
    }

    /// The curve class of `self * other`, determined by its pairings with
    /// `xi` and `F`: `xi.l = 1, xi.gamma = 0, F.l = 0, F.gamma = 1`.
    pub fn product_curve(&self, other: &PBundleClass) -> PBundleCurve {
        let xi = PBundleClass::new(1, 0);
        let f = PBundleClass::new(0, 1);
        PBundleCurve { l: self.triple(other, &xi), gamma: self.triple(other, &f) }
    }

    pub fn dot_curve(&self, c: &PBundleCurve) -> i64 {
        self.xi * c.l + self.fibre * c.gamma
    }
}

fn pick(c: &PBundleClass, xi: i32) -> i64 {
    if xi == 1 {
        c.xi
    } else {
        c.fibre
    }
}

/// Self-intersection numbers on the fourfolds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourfoldNumbers {
    /// `(-K_X)^4` on the blow-up of `P^4` at 8 points.
    pub antican_x: i64,
    /// Number of flips between `X` and `Y`.
    pub flips: i64,
    /// `(-K_Y)^4`
    pub antican_y: i64,
    /// `E^4` for the exceptional divisor of the blow-up of `Y` along the base curve.
    pub exceptional: i64,
    /// `D^4` for the strict transform `D` of a general anticanonical member.
    pub strict_transform: i64,
    /// Generic degree of the anticanonical map onto the quadric.
    pub map_degree: i64,
}

/// Expand `(sum_i c_i D_i)^4` where the `D_i` have pairwise vanishing
/// mixed products and fourth powers `p_i`.
fn orthogonal_fourth_power(coeffs: &[i64], fourth: &[i64]) -> i64 {
    coeffs.iter().zip(fourth).map(|(c, p)| c.pow(4) * p).sum()
}

pub fn fourfold_numbers() -> FourfoldNumbers {
    // -K_X = 5H - 3 sum E_i, H^4 = 1, E_i^4 = -1, mixed products vanish.
    let mut coeffs = vec![5];
    let mut fourth = vec![1];
    for _ in 0..8 {
        coeffs.push(-3);
        fourth.push(-1);
    }
    let antican_x = orthogonal_fourth_power(&coeffs, &fourth);
    // 28 lines and 8 quartics, each flip raising the top self-intersection by one.
    let flips = 28 + 8;
    let antican_y = antican_x + flips;
    // The base curve: -K_Y . R = 1, genus 0.
    let deg_r = 1;
    let genus_r = 0;
    let exceptional = deg_r + 2 * genus_r - 2;
    // (A - E)^4 with A^3 E = A^2 E^2 = 0 and A E^3 = -K_Y . R.
    let a4 = antican_y;
    let a_e3 = deg_r;
    let strict_transform = a4 - 4 * a_e3 + exceptional;
    FourfoldNumbers {
        antican_x,
        flips,
        antican_y,
        exceptional,
        strict_transform,
        map_degree: strict_transform / 2,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceNumbers {
    /// `(R + 2F)^2`
    pub antican_square: i64,
    /// `(-2K_Y|_W)^2 = 4 (R + 2F)^2`
    pub biantican_square: i64,
    pub chi_antican: i64,
    pub chi_biantican: i64,
    /// Genus of the residual ramification curve `3(R + F)`.
    pub residual_genus: i64,
    /// Determinant of `(R, F, e_i)` in the basis `(e0, f0, e_i)`.
    pub basis_determinant: i64,
    /// The `b` forced by a splitting `B1 = (e + b f) + (2e + (6 - b) f)`.
    pub branch_split_b: i64,
    /// Whether that `b` lies in the admissible range `0..=6`.
    pub branch_split_admissible: bool,
}

/// Pairing on the Hirzebruch surface `F_n` in the basis (negative section, fibre).
fn hirzebruch_dot(n: i64, x: (i64, i64), y: (i64, i64)) -> i64 {
    -n * x.0 * y.0 + x.0 * y.1 + x.1 * y.0
}

pub fn surface_numbers() -> SurfaceNumbers {
    let d = SurfClassW::combo(1, 2);
    let d2 = d.scale(2);
    let residual = SurfClassW::combo(3, 3);

    // R = e0 + 4 f0 - sum e_i, F = 2 e0 + 3 f0 - sum e_i on the blow-up of F_1.
    let m = [[1i64, 4], [2, 3]];
    let basis_determinant = m[0][0] * m[1][1] - m[0][1] * m[1][0];

    // (e + b f).(2e + (6 - b) f) = 0 on F_2 is linear in b: solve it.
    let at = |b: i64| hirzebruch_dot(2, (1, b), (2, 6 - b));
    let slope = at(1) - at(0);
    let branch_split_b = -at(0) / slope;
    debug_assert_eq!(at(branch_split_b), 0);

    SurfaceNumbers {
        antican_square: d.dot(&d),
        biantican_square: d2.dot(&d2),
        chi_antican: d.chi(),
        chi_biantican: d2.chi(),
        residual_genus: residual.genus(),
        basis_determinant,
        branch_split_b,
        branch_split_admissible: (0..=6).contains(&branch_split_b),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PBundleNumbers {
    /// `(xi + F)^3`
    pub cube: i64,
    /// `(xi + F)^2` as `a l + b gamma`
    pub square_curve: PBundleCurve,
    /// `(xi - F).(l + gamma)`
    pub disjointness: i64,
}

pub fn pbundle_numbers() -> PBundleNumbers {
    let d = PBundleClass::new(1, 1);
    let s = PBundleClass::new(1, -1);
    PBundleNumbers {
        cube: d.triple(&d, &d),
        square_curve: d.product_curve(&d),
        disjointness: s.dot_curve(&PBundleCurve { l: 1, gamma: 1 }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourfold_table() {
        let n = fourfold_numbers();
        assert_eq!(n.antican_x, -23);
        assert_eq!(n.antican_y, 13);
        assert_eq!(n.exceptional, -1);
        assert_eq!(n.strict_transform, 8);
        assert_eq!(n.map_degree, 4);
    }

    #[test]
    fn surface_table() {
        let n = surface_numbers();
        assert_eq!(n.antican_square, 3);
        assert_eq!(n.biantican_square, 12);
        assert_eq!(n.chi_antican, 3);
        assert_eq!(n.chi_biantican, 8);
        assert_eq!(n.residual_genus, 4);
        assert_eq!(n.basis_determinant, -5);
        assert_eq!(n.branch_split_b, -2);
        assert!(!n.branch_split_admissible);
    }

    #[test]
    fn pbundle_table() {
        let n = pbundle_numbers();
        assert_eq!(n.cube, 4);
        assert_eq!(n.square_curve, PBundleCurve { l: 3, gamma: 1 });
        assert_eq!(n.disjointness, 0);
    }

    #[test]
    fn curve_degrees() {
        assert_eq!(anticanonical_degree_x(&CurveClassX::new(5, [1; 8])), 1);
        assert_eq!(anticanonical_degree_x(&CurveClassX::new(1, [1, 1, 0, 0, 0, 0, 0, 0])), -1);
        assert_eq!(anticanonical_degree_x(&CurveClassX::new(4, [1, 1, 1, 1, 1, 1, 1, 0])), -1);
        for t in 1..5 {
            assert_eq!(anticanonical_degree_x(&CurveClassX::in_exceptional(3, t)), 3 * t);
        }
    }

    #[test]
    fn w_table_entries() {
        let r = SurfClassW::r();
        let f = SurfClassW::f();
        assert_eq!(r.dot(&r), -1);
        assert_eq!(f.dot(&f), 0);
        assert_eq!(r.dot(&f), 1);
        for i in 1..=8 {
            let e = SurfClassW::e(i);
            assert_eq!(e.dot(&e), -1);
            assert_eq!(r.dot(&e), 1);
            assert_eq!(f.dot(&e), 1);
            for j in (i + 1)..=8 {
                assert_eq!(e.dot(&SurfClassW::e(j)), 0);
            }
        }
    }
}
