//! Jacobian singular loci, smoothness and component extraction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Ideal, IdealError};
use crate::invariants::hilbert_series;
use crate::mpoly::{jacobian, minors, PolyError, Polynomial};

/// Refuse Jacobian criteria with more minors than this: such inputs come
/// from degenerate configurations, and the minors alone exhaust memory.
const MAX_MINORS: usize = 10_000;

/// The `c x c` minors of the Jacobian of a minimal generating set, where
/// `c` is the codimension of `V(I)`. Together with `I` they cut out the
/// singular locus; the ideal they generate modulo `I` does not depend on
/// the generators chosen.
pub fn singular_locus_gens(i: &Ideal) -> Result<Vec<Polynomial>, IdealError> {
    let h = hilbert_series(i);
    let n = i.ring().nvars();
    let c = n - h.cone_dim;
    if c == 0 {
        return Ok(Vec::new());
    }
    let gens = i.minimalize().gens().to_vec();
    if binomial(gens.len(), c) * binomial(n, c) > MAX_MINORS {
        return Err(IdealError::Poly(PolyError::SizeExceeded { k: c, rows: gens.len(), cols: n }));
    }
    let jac = jacobian(i.ring(), &gens);
    Ok(minors(c, &jac)?.into_iter().filter(|m| !m.is_zero()).collect())
}

/// `I + (c x c minors of the Jacobian)`.
pub fn singular_locus(i: &Ideal) -> Result<Ideal, IdealError> {
    let mut gens = i.gens().to_vec();
    gens.extend(singular_locus_gens(i)?);
    Ideal::new(i.ring(), gens)
}

/// The lead ideal contains a power of every variable (or 1): the ideal
/// defines the empty projective variety.
pub(crate) fn is_irrelevant_primary(i: &Ideal) -> bool {
    let gb = i.gb();
    if gb.is_unit() {
        return true;
    }
    let n = i.ring().nvars();
    let leads = gb.lead_monomials();
    (0..n).all(|v| leads.iter().any(|m| m.exp(v) == m.degree()))
}

/// Smoothness of `V(I)`: first try `I` plus a few random combinations of
/// the minors (enough if they already cut out the empty set), then all
/// minors.
pub(crate) fn is_smooth(i: &Ideal) -> Result<bool, IdealError> {
    let h = hilbert_series(i);
    if h.dim < 0 {
        return Ok(true);
    }
    let m = singular_locus_gens(i)?;
    if m.is_empty() {
        return Ok(h.cone_dim == i.ring().nvars());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x51f);
    let p = i.ring().field().p();
    let top = m.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let same: Vec<&Polynomial> = m.iter().filter(|g| g.degree() == Some(top)).collect();
    if same.len() == m.len() && m.len() > h.cone_dim + 1 {
        let mut gens = i.gens().to_vec();
        for _ in 0..h.cone_dim + 1 {
            let mut acc = Polynomial::zero(i.ring());
            for g in &same {
                acc = acc.add_scaled(g, rng.gen_range(1..p));
            }
            gens.push(acc);
        }
        if is_irrelevant_primary(&Ideal::new(i.ring(), gens)?) {
            return Ok(true);
        }
    }
    let mut gens = i.gens().to_vec();
    gens.extend(m);
    Ok(is_irrelevant_primary(&Ideal::new(i.ring(), gens)?))
}


fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, j| acc * (n - j) / (j + 1))
}
