use super::poly::{Polynomial, Term};
use super::ring::{same_ring, Ring};
use super::PolyError;

/// A ring homomorphism given by the images of the source variables.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: Ring,
    target: Ring,
    images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(source: &Ring, target: &Ring, images: Vec<Polynomial>) -> Result<Self, PolyError> {
        if images.len() != source.nvars() {
            return Err(PolyError::DimensionMismatch(images.len(), source.nvars()));
        }
        if images.iter().any(|g| !same_ring(g.ring(), target)) {
            return Err(PolyError::RingMismatch);
        }
        if source.field() != target.field() {
            return Err(PolyError::RingMismatch);
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), images })
    }

    pub fn identity(ring: &Ring) -> Self {
        let images = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        RingMap { source: ring.clone(), target: ring.clone(), images }
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Common degree of the images if they are all homogeneous of one degree.
    pub fn degree(&self) -> Option<u32> {
        let mut d = None;
        for g in &self.images {
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return None;
            }
            match (d, g.degree()) {
                (None, e) => d = e,
                (Some(a), Some(b)) if a != b => return None,
                _ => {}
            }
        }
        d
    }

    /// Substitute the images into `f`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        if !same_ring(f.ring(), &self.source) {
            return Err(PolyError::RingMismatch);
        }
        let n = self.source.nvars();
        // Powers of each image, built on demand.
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(&self.target)]; n];
        let mut acc: Vec<Term> = Vec::new();
        let order = self.target.term_order();
        let field = self.target.field();
        for t in f.terms() {
            let mut prod = Polynomial::constant(&self.target, t.c as i64);
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = t.m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while pw.len() <= e {
                    let next = pw.last().unwrap().mul(&self.images[i]);
                    pw.push(next);
                }
                prod = prod.mul(&pw[e]);
                if prod.is_zero() {
                    break;
                }
            }
            acc = super::poly::merge_add(field, &order, &acc, prod.terms(), 1);
        }
        Ok(Polynomial::from_sorted(&self.target, acc))
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &RingMap) -> Result<RingMap, PolyError> {
        if !same_ring(other.target(), &self.source) {
            return Err(PolyError::RingMismatch);
        }
        let images = other.images.iter().map(|g| self.apply(g)).collect::<Result<Vec<_>, _>>()?;
        Ok(RingMap { source: other.source.clone(), target: self.target.clone(), images })
    }
}
