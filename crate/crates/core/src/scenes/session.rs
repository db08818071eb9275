//! The shared pipeline behind the polynomial scenes. Every intermediate
//! ideal is computed on first use and cached, so a scene can run alone
//! (pulling in what it depends on) or after its dependencies.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ff::PrimeField;
use crate::idealops::{
    graded_piece_points, intersect_all, point_ideal, points_on_curve, quotient, rnc_through_seven, saturate,
    singular_locus, sum, GradedPieceBasis, Ideal, IdealError, PointConfiguration,
};
use crate::invariants::{is_smooth, numeric_invariants};
use crate::linalg::DenseMatrix;
use crate::mpoly::{monomials_of_degree, MonomialOrder, PolyRing, Polynomial, Ring};
use crate::Error;

/// The eight points: five coordinate points, the unit point and two
/// points whose consecutive coordinate ratios are fixed primes.
pub fn base_points_integer() -> Vec<Vec<u64>> {
    let chain = |r: [u64; 4]| {
        vec![r[0] * r[1] * r[2] * r[3], r[1] * r[2] * r[3], r[2] * r[3], r[3], 1]
    };
    let mut pts: Vec<Vec<u64>> = (0..5)
        .map(|i| {
            let mut v = vec![0; 5];
            v[i] = 1;
            v
        })
        .collect();
    pts.push(vec![1; 5]);
    pts.push(chain([3, 7, 11, 13]));
    pts.push(chain([17, 23, 29, 31]));
    pts
}

/// Three points on the rational quintic recorded with the original
/// GF(67) computation, used only as regression data at that prime.
pub const LITERAL_SECANT_POINTS: [[u32; 5]; 3] = [[12, 66, 1, 14, 1], [65, 47, 22, 50, 1], [46, 30, 40, 26, 1]];

/// Combination coefficients of the three quintics through the scroll
/// recorded with the original GF(67) computation.
pub const LITERAL_QW_COEFFS: [u32; 3] = [11, 7, 19];

/// The number of seeded points sampled on the rational quintic.
pub const SECANT_SAMPLES: usize = 3;

/// `(dim, degree, genus, smooth)` of a curve or surface.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Shape {
    pub dim: i64,
    pub degree: i64,
    pub genus: Option<i64>,
    pub smooth: bool,
}

pub fn shape(i: &Ideal) -> Result<Shape, Error> {
    let n = numeric_invariants(i);
    Ok(Shape { dim: n.dim, degree: n.degree, genus: n.genus, smooth: is_smooth(i)? })
}

pub struct Session {
    pub prime: u64,
    pub seed: u64,
    field: PrimeField,
    ring: Ring,
    points: Vec<Vec<u32>>,
    j: Option<Ideal>,
    ii: Option<Ideal>,
    lines: Option<Ideal>,
    quartics: Option<Ideal>,
    i5: Option<Ideal>,
    samples: Option<Vec<Vec<u32>>>,
    secants: Option<Vec<Ideal>>,
    e1: Option<Ideal>,
    ss3: Option<Ideal>,
    ss: Option<Ideal>,
    w: Option<Ideal>,
    quintics_w: Option<GradedPieceBasis>,
    decics: Option<GradedPieceBasis>,
    decics_w: Option<GradedPieceBasis>,
}

impl Session {
    pub fn new(prime: u64, seed: u64) -> Result<Self, Error> {
        let field = PrimeField::new(prime)?;
        let ring = PolyRing::new(field, 5, MonomialOrder::Grevlex)?;
        let points = base_points_integer()
            .into_iter()
            .map(|q| q.into_iter().map(|x| (x % prime) as u32).collect())
            .collect();
        Ok(Session {
            prime,
            seed,
            field,
            ring,
            points,
            j: None,
            ii: None,
            lines: None,
            quartics: None,
            i5: None,
            samples: None,
            secants: None,
            e1: None,
            ss3: None,
            ss: None,
            w: None,
            quintics_w: None,
            decics: None,
            decics_w: None,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    /// A seeded RNG for one named choice, independent of evaluation order.
    pub fn rng(&self, tag: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ tag)
    }

    /// Every five of the points are linearly independent.
    pub fn general_position(&self) -> bool {
        let n = self.points.len();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() != 5 {
                continue;
            }
            let rows: Vec<Vec<u32>> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| self.points[k].clone()).collect();
            if DenseMatrix::from_rows(self.field, 5, rows).rank() < 5 {
                return false;
            }
        }
        true
    }

    pub fn config(&self, m: u32) -> Result<PointConfiguration, Error> {
        Ok(PointConfiguration::uniform(self.field, self.points.clone(), m)?)
    }

    pub fn j(&mut self) -> Result<Ideal, Error> {
        if self.j.is_none() {
            let ideals = self.points.iter().map(|q| point_ideal(&self.ring, q)).collect::<Result<Vec<_>, _>>()?;
            self.j = Some(intersect_all(&ideals)?);
        }
        Ok(self.j.clone().unwrap())
    }

    /// Ideal of the quintics with a triple point at each of the 8 points.
    pub fn ii(&mut self) -> Result<Ideal, Error> {
        if self.ii.is_none() {
            let basis = graded_piece_points(&self.ring, &self.config(3)?, 5, &[])?;
            self.ii = Some(Ideal::new(&self.ring, basis.basis)?);
        }
        Ok(self.ii.clone().unwrap())
    }

    /// The 28 lines through pairs of points.
    pub fn lines(&mut self) -> Result<Ideal, Error> {
        if self.lines.is_none() {
            let monos = monomials_of_degree(5, 1);
            let mut lines = Vec::new();
            for a in 0..self.points.len() {
                for b in 0..a {
                    let m = DenseMatrix::from_rows(self.field, 5, vec![self.points[a].clone(), self.points[b].clone()]);
                    let gens =
                        m.kernel().iter().map(|v| Polynomial::from_coefficients(&self.ring, &monos, v)).collect();
                    lines.push(Ideal::new(&self.ring, gens)?);
                }
            }
            self.lines = Some(intersect_all(&lines)?);
        }
        Ok(self.lines.clone().unwrap())
    }

    /// The 8 rational normal quartics through seven of the points.
    pub fn quartics(&mut self) -> Result<Ideal, Error> {
        if self.quartics.is_none() {
            let mut curves = Vec::new();
            for a in 0..self.points.len() {
                let seven: Vec<Vec<u32>> =
                    self.points.iter().enumerate().filter(|(b, _)| *b != a).map(|(_, q)| q.clone()).collect();
                curves.push(rnc_through_seven(&self.ring, &seven)?.ideal);
            }
            self.quartics = Some(intersect_all(&curves)?);
        }
        Ok(self.quartics.clone().unwrap())
    }

    /// The rational quintic curve: `(II : LL) : RN`.
    pub fn i5(&mut self) -> Result<Ideal, Error> {
        if self.i5.is_none() {
            let (ii, ll, rn) = (self.ii()?, self.lines()?, self.quartics()?);
            self.i5 = Some(quotient(&quotient(&ii, &ll)?, &rn)?);
        }
        Ok(self.i5.clone().unwrap())
    }

    /// Seeded rational points on the rational quintic.
    pub fn samples(&mut self) -> Result<Vec<Vec<u32>>, Error> {
        if self.samples.is_none() {
            let i5 = self.i5()?;
            let seed = self.rng(0x5ec).gen();
            // The curve passes through the eight points; those are not
            // general points of it, so draw extra and skip them.
            let field = self.field;
            let base = &self.points;
            let general: Vec<Vec<u32>> = points_on_curve(&i5, SECANT_SAMPLES + base.len(), seed)?
                .into_iter()
                .filter(|q| base.iter().all(|b| DenseMatrix::from_rows(field, 5, vec![q.clone(), b.clone()]).rank() == 2))
                .take(SECANT_SAMPLES)
                .collect();
            if general.len() < SECANT_SAMPLES {
                return Err(IdealError::NoRationalPoint(general.len()).into());
            }
            self.samples = Some(general);
        }
        Ok(self.samples.clone().unwrap())
    }

    /// Quintics with triple points at the 8 points and at `q`.
    pub fn secant_system(&self, q: &[u32]) -> Result<GradedPieceBasis, Error> {
        let mut pts = self.points.clone();
        pts.push(q.to_vec());
        let cfg = PointConfiguration::uniform(self.field, pts, 3)?;
        Ok(graded_piece_points(&self.ring, &cfg, 5, &[])?)
    }

    /// The secant quintics through the sampled points.
    pub fn secants(&mut self) -> Result<Vec<Ideal>, Error> {
        if self.secants.is_none() {
            let mut out = Vec::new();
            for q in self.samples()? {
                let b = self.secant_system(&q)?;
                out.push(Ideal::new(&self.ring, b.basis)?);
            }
            self.secants = Some(out);
        }
        Ok(self.secants.clone().unwrap())
    }

    /// The curve along which the first secant quintic is singular.
    pub fn e1(&mut self) -> Result<Ideal, Error> {
        if self.e1.is_none() {
            let q = self.secants()?.remove(0);
            self.e1 = Some(singular_curve(&q)?);
        }
        Ok(self.e1.clone().unwrap())
    }

    pub fn ss3(&mut self) -> Result<Ideal, Error> {
        if self.ss3.is_none() {
            let qs = self.secants()?;
            let mut acc = qs[0].clone();
            for q in &qs[1..] {
                acc = sum(&acc, q)?;
            }
            self.ss3 = Some(acc);
        }
        Ok(self.ss3.clone().unwrap())
    }

    /// `(Q_1 + Q_2 + Q_3) : II`.
    pub fn ss(&mut self) -> Result<Ideal, Error> {
        if self.ss.is_none() {
            let (ss3, ii) = (self.ss3()?, self.ii()?);
            self.ss = Some(quotient(&ss3, &ii)?);
        }
        Ok(self.ss.clone().unwrap())
    }

    /// The cubic scroll: the saturated singular locus of `ss`.
    pub fn w(&mut self) -> Result<Ideal, Error> {
        if self.w.is_none() {
            let ss = self.ss()?;
            self.w = Some(saturate(&singular_locus(&ss)?)?);
        }
        Ok(self.w.clone().unwrap())
    }

    /// Triple-point quintics containing the scroll.
    pub fn quintics_w(&mut self) -> Result<GradedPieceBasis, Error> {
        if self.quintics_w.is_none() {
            let w = self.w()?;
            self.quintics_w = Some(graded_piece_points(&self.ring, &self.config(3)?, 5, &[&w])?);
        }
        Ok(self.quintics_w.clone().unwrap())
    }

    /// Decics with a sixfold point at each of the 8 points.
    pub fn decics(&mut self) -> Result<GradedPieceBasis, Error> {
        if self.decics.is_none() {
            self.decics = Some(graded_piece_points(&self.ring, &self.config(6)?, 10, &[])?);
        }
        Ok(self.decics.clone().unwrap())
    }

    pub fn decics_w(&mut self) -> Result<GradedPieceBasis, Error> {
        if self.decics_w.is_none() {
            let w = self.w()?;
            self.decics_w = Some(graded_piece_points(&self.ring, &self.config(6)?, 10, &[&w])?);
        }
        Ok(self.decics_w.clone().unwrap())
    }
}

/// `Sing(Q) : Sing(Sing(Q))` for a hypersurface `Q`: the curve along which
/// `Q` is singular, with the lower-dimensional strata removed.
pub fn singular_curve(q: &Ideal) -> Result<Ideal, Error> {
    let sing = saturate(&singular_locus(q)?)?;
    let ssing = saturate(&singular_locus(&sing)?)?;
    Ok(quotient(&sing, &ssing)?)
}
