//! Integer lattices and intersection numbers: the Picard lattice of the
//! degree-one del Pezzo surface, curve classes on the blown-up `P^4`, the
//! surface `W'` and the exceptional projective bundle.

pub mod enumerate;
pub mod facets;
pub mod numbers;
pub mod pic;

use std::io::Write;

use thiserror::Error;

pub use enumerate::{enumerate_by_search, enumerate_classes, orbit, ClassKind};
pub use facets::{
    base_locus_certificate, facet_conics, facet_conics_via_frame, run_chase, verify_cubic,
    CertificateTrace, ChaseSetup, FacetStep,
};
pub use numbers::{
    anticanonical_degree_x, fourfold_numbers, pbundle_numbers, surface_numbers, CurveClassX,
    PBundleClass, PBundleCurve, SurfClassW,
};
pub use pic::{bertini_pullback, simple_roots, PicClass};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("pairing between different lattices: {0} and {1}")]
    LatticeMismatch(&'static str, &'static str),
    #[error("not a cubic: {0}")]
    NotACubic(String),
    #[error("certificate failure at facet {facet}: {reason}")]
    CertificateFailure { facet: usize, reason: String },
}

/// A class in any of the lattices, for generic pairing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeClass {
    Pic(PicClass),
    SurfW(SurfClassW),
    /// Divisor on the projective bundle.
    Bundle(PBundleClass),
    /// Curve on the projective bundle.
    BundleCurve(PBundleCurve),
}

impl LatticeClass {
    fn lattice(&self) -> &'static str {
        match self {
            LatticeClass::Pic(_) => "Pic(S)",
            LatticeClass::SurfW(_) => "H^2(W')",
            LatticeClass::Bundle(_) => "N^1(E)",
            LatticeClass::BundleCurve(_) => "N_1(E)",
        }
    }
}

/// The intersection pairing. Divisors and curves on the projective bundle
/// pair with each other; all other pairings stay within one lattice.
pub fn pairing(x: &LatticeClass, y: &LatticeClass) -> Result<i64, LatticeError> {
    use LatticeClass::*;
    match (x, y) {
        (Pic(a), Pic(b)) => Ok(a.dot(b)),
        (SurfW(a), SurfW(b)) => Ok(a.dot(b)),
        (Bundle(d), BundleCurve(c)) | (BundleCurve(c), Bundle(d)) => Ok(d.dot_curve(c)),
        _ => Err(LatticeError::LatticeMismatch(x.lattice(), y.lattice())),
    }
}

/// Rank of the `+1` eigenspace of the Bertini action over the rationals,
/// from exact fraction-free elimination on `M - I`.
pub fn bertini_fixed_rank() -> usize {
    let mut m = [[0i128; 9]; 9];
    for j in 0..9 {
        let mut c = [0i64; 9];
        c[j] = 1;
        let img = bertini_pullback(&PicClass::from_coefficients(c)).coefficients();
        for i in 0..9 {
            m[i][j] = (img[i] - c[i]) as i128;
        }
    }
    9 - integer_rank(&mut m)
}

/// Rank by Bareiss elimination.
fn integer_rank(m: &mut [[i128; 9]; 9]) -> usize {
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..9 {
        let Some(p) = (rank..9).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, p);
        for r in (rank + 1)..9 {
            for c in (col + 1)..9 {
                m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    rank
}

/// Write a class list, one class per line, after a header naming the lattice.
pub fn export_classes<W: Write>(out: &mut W, kind: ClassKind, classes: &[PicClass]) -> std::io::Result<()> {
    writeln!(out, "# lattice I_{{1,8}} basis h e1 e2 e3 e4 e5 e6 e7 e8; class a*h - sum b_i*e_i")?;
    writeln!(out, "# kind {} count {}", kind.name(), classes.len())?;
    for c in classes {
        let row: Vec<String> = c.coefficients().iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_space_is_a_line() {
        assert_eq!(bertini_fixed_rank(), 1);
        assert_eq!(bertini_pullback(&PicClass::canonical()), PicClass::canonical());
    }

    #[test]
    fn mismatched_pairing_is_an_error() {
        let a = LatticeClass::Pic(PicClass::h());
        let b = LatticeClass::SurfW(SurfClassW::r());
        assert!(matches!(pairing(&a, &b), Err(LatticeError::LatticeMismatch(..))));
        assert_eq!(pairing(&a, &a), Ok(1));
    }

    #[test]
    fn export_format() {
        let mut buf = Vec::new();
        export_classes(&mut buf, ClassKind::MinusOne, &[PicClass::e(1)]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("# lattice"));
        assert_eq!(lines[2], "0 -1 0 0 0 0 0 0 0");
    }
}
