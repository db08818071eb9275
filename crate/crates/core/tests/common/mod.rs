//! Properties shared by the proptest suite and the acceptance target, each
//! checked against an oracle that does not go through Groebner bases.

#![allow(dead_code)]

use fourfold::groebner::{buchberger_classic, free_resolution, FreeModule, ModuleElement};
use fourfold::idealops::{equals, is_subset, product, saturate};
use fourfold::invariants::hilbert_series;
use fourfold::linalg::DenseMatrix;
use fourfold::mpoly::{monomials_of_degree, Monomial};
use fourfold::{buchberger, Ideal, MonomialOrder, PolyRing, Polynomial, PrimeField, Ring};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const P: u64 = 101;

pub fn ring(n: usize) -> Ring {
    PolyRing::new(PrimeField::new(P).unwrap(), n, MonomialOrder::Grevlex).unwrap()
}

/// A sparse homogeneous form: `Some(c)` entries on the degree-`d` monomials.
pub fn form(r: &Ring, d: u32, coeffs: &[Option<u32>]) -> Polynomial {
    let monos = monomials_of_degree(r.nvars(), d);
    let dense: Vec<u32> = monos.iter().zip(coeffs.iter().cycle()).map(|(_, c)| c.unwrap_or(0)).collect();
    Polynomial::from_coefficients(r, &monos, &dense)
}

/// Raw description of a homogeneous generator: degree and sparse coefficients.
pub type RawForm = (u32, Vec<Option<u32>>);

pub fn raw_form(min_deg: u32, max_deg: u32) -> impl Strategy<Value = RawForm> {
    (min_deg..=max_deg, prop::collection::vec(prop::option::weighted(0.35, 1..P as u32), 1..40))
}

pub fn forms(r: &Ring, raw: &[RawForm]) -> Vec<Polynomial> {
    raw.iter().map(|(d, c)| form(r, *d, c)).filter(|f| !f.is_zero()).collect()
}

/// A possibly inhomogeneous polynomial: a sum of forms of degrees `0..=d`.
pub fn mixed(r: &Ring, parts: &[Vec<Option<u32>>]) -> Polynomial {
    parts.iter().enumerate().fold(Polynomial::zero(r), |acc, (d, c)| acc.add(&form(r, d as u32, c)))
}

/// Rows: coefficient vectors of `u * g` over the degree-`d` monomials, for
/// every generator `g` of degree at most `d` and monomial `u` of the
/// complementary degree.
pub fn macaulay_matrix(r: &Ring, gens: &[Polynomial], d: u32) -> DenseMatrix {
    let cols = monomials_of_degree(r.nvars(), d);
    let mut rows = Vec::new();
    for g in gens {
        let Some(e) = g.degree() else { continue };
        if e > d {
            continue;
        }
        for u in monomials_of_degree(r.nvars(), d - e) {
            rows.push(g.mul_monomial(&u, 1).coefficients_on(&cols));
        }
    }
    DenseMatrix::from_rows(r.field(), cols.len(), rows)
}

/// `dim (S/I)_d` from the span of the generators in degree `d`.
pub fn hf_by_span(r: &Ring, gens: &[Polynomial], d: u32) -> usize {
    monomials_of_degree(r.nvars(), d).len() - macaulay_matrix(r, gens, d).rank()
}

/// Membership of a form of degree `d` by a rank test.
pub fn in_span(r: &Ring, gens: &[Polynomial], f: &Polynomial, d: u32) -> bool {
    let m = macaulay_matrix(r, gens, d);
    let before = m.rank();
    let mut with = m.clone();
    with.push_row(&f.coefficients_on(&monomials_of_degree(r.nvars(), d)));
    with.rank() == before
}

/// `dim (S/I)_d` for the ideal of reduced points: rank of evaluation.
pub fn hf_by_evaluation(r: &Ring, points: &[Vec<u32>], d: u32) -> usize {
    let monos = monomials_of_degree(r.nvars(), d);
    let rows: Vec<Vec<u32>> = points
        .iter()
        .map(|q| monos.iter().map(|u| Polynomial::monomial(r, *u, 1).eval(q)).collect())
        .collect();
    DenseMatrix::from_rows(r.field(), monos.len(), rows).rank()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg.into()))
    }
}

/// Each element monic, and no term of any element divisible by the lead of another.
pub fn is_reduced(elems: &[Polynomial]) -> bool {
    let leads: Vec<Monomial> = elems.iter().map(|g| g.lead_monomial().unwrap()).collect();
    elems.iter().enumerate().all(|(i, g)| {
        g.lead().unwrap().c == 1
            && g.terms().iter().enumerate().all(|(k, t)| {
                leads.iter().enumerate().all(|(j, l)| (j == i && k == 0) || !l.divides(&t.m))
            })
    })
}

/// The reduced basis is reduced, independent of generator order and of
/// redundant generators, and agrees with the textbook engine.
pub fn gb_unique(r: &Ring, gens: &[Polynomial], perm_seed: usize, extra: (usize, usize, u32)) -> Result<(), TestCaseError> {
    let a = buchberger(r, gens).unwrap().elements();
    ensure(is_reduced(&a), "basis is not reduced")?;
    let mut shuffled = gens.to_vec();
    if !shuffled.is_empty() {
        let n = shuffled.len();
        shuffled.rotate_left(perm_seed % n);
        shuffled.swap(0, (perm_seed / n) % n);
        let (i, j, c) = extra;
        let combo = shuffled[i % n].add(&shuffled[j % n].scale(c)).mul(&Polynomial::var(r, i % r.nvars()));
        shuffled.push(combo);
    }
    let b = buchberger(r, &shuffled).unwrap().elements();
    ensure(a == b, "basis changed under shuffling")?;
    let c = buchberger_classic(r, gens).unwrap().elements();
    ensure(a == c, "engines disagree")
}

/// Normal-form membership agrees with the rank test in degree `d`, and
/// `f - NF(f)` always lies in the ideal.
pub fn nf_matches_span(r: &Ring, gens: &[Polynomial], f: &Polynomial, d: u32) -> Result<(), TestCaseError> {
    let gb = buchberger(r, gens).unwrap();
    let nf = gb.normal_form(f);
    let member = in_span(r, gens, f, d);
    ensure(nf.is_zero() == member, format!("NF says {}, rank test says {member}", nf.is_zero()))?;
    let diff = f.sub(&nf);
    ensure(diff.is_zero() || in_span(r, gens, &diff, d), "f - NF(f) not in the ideal")?;
    let leads = gb.lead_monomials();
    ensure(nf.terms().iter().all(|t| !leads.iter().any(|l| l.divides(&t.m))), "NF has a reducible term")
}

/// The Hilbert function from the Groebner basis (standard monomials and
/// the Hilbert series) equals the span rank of the generators.
pub fn hf_matches_span(i: &Ideal, d: u32) -> Result<(), TestCaseError> {
    let by_gb = i.hilbert_function(d);
    let by_series = hilbert_series(i).hilbert_function(d as i64);
    let by_span = hf_by_span(i.ring(), i.gens(), d);
    ensure(
        by_gb == by_span && by_series == by_span as i64,
        format!("degree {d}: standard monomials {by_gb}, series {by_series}, span {by_span}"),
    )
}

/// Saturation is idempotent, contains the ideal, and ignores a factor of
/// the irrelevant ideal.
pub fn saturation_idempotent(i: &Ideal) -> Result<(), TestCaseError> {
    let s = saturate(i).unwrap();
    ensure(is_subset(i, &s).unwrap(), "ideal not inside its saturation")?;
    ensure(equals(&saturate(&s).unwrap(), &s).unwrap(), "saturation not idempotent")?;
    let m = Ideal::irrelevant(i.ring());
    ensure(equals(&saturate(&product(i, &m).unwrap()).unwrap(), &s).unwrap(), "I*m saturates differently")
}

/// Consecutive differentials compose to zero and the length is at most
/// the number of variables.
pub fn resolution_is_complex(r: &Ring, gens: &[Polynomial]) -> Result<(), TestCaseError> {
    let f0 = FreeModule::new(r, vec![0]);
    let elems: Vec<ModuleElement> =
        gens.iter().map(|g| ModuleElement::from_components(&f0, std::slice::from_ref(g))).collect();
    let res = free_resolution(&f0, &elems, r.nvars() + 1).unwrap();
    for k in 1..res.maps.len() {
        let dd = res.maps[k - 1].mul(&res.maps[k]).unwrap();
        ensure(dd.is_zero(), format!("d{} d{} != 0", k, k + 1))?;
    }
    ensure(res.maps.len() <= r.nvars(), format!("length {} exceeds {}", res.maps.len(), r.nvars()))?;
    // d1 generates the ideal.
    let first = res.maps.first().map(|m| m.row_entries(0).to_vec()).unwrap_or_default();
    let a = Ideal::new(r, first).unwrap();
    let b = Ideal::new(r, gens.to_vec()).unwrap();
    ensure(equals(&a, &b).unwrap(), "first differential does not generate the ideal")
}
