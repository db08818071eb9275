//! Cubic recognition, simplicial facets of fixed divisors, and the facet
//! chase ruling out extra base components.

use serde::Serialize;

use super::enumerate::{enumerate_classes, ClassKind};
use super::pic::PicClass;
use super::LatticeError;

/// The reflection in `h - e1 - e2 - e3`.
fn cremona(c: &PicClass) -> PicClass {
    c.reflect(&PicClass::new(1, [1, 1, 1, 0, 0, 0, 0, 0]))
}

/// One step of the reduction to the fundamental chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Move {
    Permute([usize; 8]),
    Cremona,
}

/// Reduce a class to the fundamental Weyl chamber (b sorted descending and
/// `a >= b1 + b2 + b3`), recording the moves.
///
/// Terminates for classes with `c.K < 0`, since each Cremona move strictly
/// lowers `a` and `a` is bounded below on such a class family.
fn reduce_to_chamber(c: &PicClass) -> (PicClass, Vec<Move>) {
    let mut cur = *c;
    let mut moves = Vec::new();
    loop {
        let mut idx: [usize; 8] = [0, 1, 2, 3, 4, 5, 6, 7];
        idx.sort_by(|&i, &j| cur.b[j].cmp(&cur.b[i]).then(i.cmp(&j)));
        if idx != [0, 1, 2, 3, 4, 5, 6, 7] {
            cur.b = idx.map(|i| cur.b[i]);
            moves.push(Move::Permute(idx));
        }
        if cur.a - cur.b[0] - cur.b[1] - cur.b[2] >= 0 {
            return (cur, moves);
        }
        cur = cremona(&cur);
        moves.push(Move::Cremona);
        if moves.len() > 10_000 {
            // Only reachable for classes outside any finite orbit.
            return (cur, moves);
        }
    }
}

/// Undo a recorded sequence of moves on `x`.
fn undo_moves(x: &PicClass, moves: &[Move]) -> PicClass {
    let mut cur = *x;
    for m in moves.iter().rev() {
        match m {
            Move::Cremona => cur = cremona(&cur),
            Move::Permute(idx) => {
                let mut b = [0; 8];
                for (k, &i) in idx.iter().enumerate() {
                    b[i] = cur.b[k];
                }
                cur.b = b;
            }
        }
    }
    cur
}

/// `c^2 = 1`, `c.K = -3` and `c` lies in the Weyl orbit of `h`.
pub fn verify_cubic(c: &PicClass) -> bool {
    if c.square() != 1 || c.canonical_degree() != -3 {
        return false;
    }
    reduce_to_chamber(c).0 == PicClass::h()
}

/// The 8 conics orthogonal to `2c + K`, found by exhaustive search over
/// the supplied conic list.
pub fn facet_conics_among(c: &PicClass, conics: &[PicClass]) -> Result<Vec<PicClass>, LatticeError> {
    if !verify_cubic(c) {
        return Err(LatticeError::NotACubic(c.to_string()));
    }
    let w = *c * 2 + PicClass::canonical();
    let mut out: Vec<PicClass> = conics.iter().copied().filter(|x| x.dot(&w) == 0).collect();
    out.sort();
    Ok(out)
}

/// The 8 conics orthogonal to `2c + K` among all 2160 conics.
pub fn facet_conics(c: &PicClass) -> Result<Vec<PicClass>, LatticeError> {
    facet_conics_among(c, &enumerate_classes(ClassKind::Conic))
}

/// The images `w(h - e_i)` where `w` carries `h` to `c`.
pub fn facet_conics_via_frame(c: &PicClass) -> Result<Vec<PicClass>, LatticeError> {
    if c.square() != 1 || c.canonical_degree() != -3 {
        return Err(LatticeError::NotACubic(c.to_string()));
    }
    let (reduced, moves) = reduce_to_chamber(c);
    if reduced != PicClass::h() {
        return Err(LatticeError::NotACubic(c.to_string()));
    }
    let mut out: Vec<PicClass> =
        (1..=8).map(|i| undo_moves(&(PicClass::h() - PicClass::e(i)), &moves)).collect();
    out.sort();
    Ok(out)
}

/// The fixed divisor attached to the conic `h - e_i`.
pub fn divisor_e(i: usize) -> PicClass {
    PicClass::h() - PicClass::e(i)
}

/// The fixed divisor attached to the conic `2h - e_i - e_j - e_k - e_l`.
pub fn divisor_f(idx: [usize; 4]) -> PicClass {
    let mut c = PicClass::h() * 2;
    for i in idx {
        c = c - PicClass::e(i);
    }
    c
}

/// Human-readable name of a conic used by the chase (`E3`, `F2345`), or
/// its class otherwise.
pub fn divisor_name(c: &PicClass) -> String {
    let minus: Vec<usize> = (0..8).filter(|&i| c.b[i] == 1).map(|i| i + 1).collect();
    let rest_zero = (0..8).all(|i| c.b[i] == 0 || c.b[i] == 1);
    if rest_zero && c.a == 1 && minus.len() == 1 {
        return format!("E{}", minus[0]);
    }
    if rest_zero && c.a == 2 && minus.len() == 4 {
        return format!("F{}{}{}{}", minus[0], minus[1], minus[2], minus[3]);
    }
    c.to_string()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    In,
    Out,
    Unknown,
}

/// What happened at one facet of the chase.
#[derive(Clone, Debug, Serialize)]
pub struct FacetStep {
    pub index: usize,
    pub cubic: PicClass,
    pub cubic_name: String,
    pub conics: Vec<String>,
    /// Conics confirmed by exhaustive orthogonality over all 2160 conics.
    pub confirmed: bool,
    /// The conic forced or chosen to contain the component, if any.
    pub containing: Option<String>,
    /// `true` when several candidates remained and one was picked by symmetry.
    pub choice: bool,
    pub excluded: Vec<String>,
    pub contradiction: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateTrace {
    pub steps: Vec<FacetStep>,
    pub contradiction_at: Option<usize>,
}

/// Input of a facet chase: the cubics whose facets are visited, and the
/// initial assumption about which divisors contain the component.
#[derive(Clone, Debug)]
pub struct ChaseSetup {
    pub cubics: Vec<PicClass>,
    pub initial_in: Vec<PicClass>,
    pub initial_out: Vec<PicClass>,
    /// For each facet where a choice is made, which candidate (by position
    /// in the candidate list sorted by name) to pick. Missing entries pick 0.
    pub branch: Vec<usize>,
}

/// `2h - e_i - e_j - e_k`
pub fn quadratic_cubic(i: usize, j: usize, k: usize) -> PicClass {
    PicClass::h() * 2 - PicClass::e(i) - PicClass::e(j) - PicClass::e(k)
}

impl ChaseSetup {
    /// The chase with component inside `E1` and outside `E2..E8`, visiting
    /// the facets of `2h-e1-e2-e3` and `2h-e2-e3-e_l` for `l = 4..8`.
    pub fn standard() -> Self {
        ChaseSetup::permuted(&[1, 2, 3, 4, 5, 6, 7, 8])
    }

    /// The standard chase with every index `i` renamed to `perm[i-1]`.
    pub fn permuted(perm: &[usize; 8]) -> Self {
        let p = |i: usize| perm[i - 1];
        let mut cubics = vec![quadratic_cubic(p(1), p(2), p(3))];
        for l in 4..=8 {
            cubics.push(quadratic_cubic(p(2), p(3), p(l)));
        }
        ChaseSetup {
            cubics,
            initial_in: vec![divisor_e(p(1))],
            initial_out: (2..=8).map(|i| divisor_e(p(i))).collect(),
            branch: Vec::new(),
        }
    }
}

/// Replay the chase. Each facet must carry exactly one divisor containing
/// the component; a facet with all eight excluded is the contradiction.
///
/// `conics` enables exhaustive confirmation of each facet; with `None` the
/// facets are obtained through the Weyl frame only.
pub fn run_chase(setup: &ChaseSetup, conics: Option<&[PicClass]>) -> Result<CertificateTrace, LatticeError> {
    use std::collections::HashMap;
    let mut state: HashMap<PicClass, Membership> = HashMap::new();
    for c in &setup.initial_in {
        state.insert(*c, Membership::In);
    }
    for c in &setup.initial_out {
        if state.insert(*c, Membership::Out) == Some(Membership::In) {
            return Err(LatticeError::CertificateFailure {
                facet: 0,
                reason: format!("{} assumed both in and out", divisor_name(c)),
            });
        }
    }
    let mut steps = Vec::new();
    let mut choices = 0;
    for (n, cubic) in setup.cubics.iter().enumerate() {
        let index = n + 1;
        let fail = |reason: String| LatticeError::CertificateFailure { facet: index, reason };
        let facet = facet_conics_via_frame(cubic).map_err(|e| fail(e.to_string()))?;
        if facet.len() != 8 {
            return Err(fail(format!("{} conics instead of 8", facet.len())));
        }
        let confirmed = match conics {
            Some(all) => {
                let exhaustive = facet_conics_among(cubic, all).map_err(|e| fail(e.to_string()))?;
                if exhaustive != facet {
                    return Err(fail("exhaustive orthogonality disagrees with the Weyl frame".into()));
                }
                true
            }
            None => false,
        };
        let get = |c: &PicClass| *state.get(c).unwrap_or(&Membership::Unknown);
        let ins: Vec<PicClass> = facet.iter().copied().filter(|c| get(c) == Membership::In).collect();
        let mut unknown: Vec<PicClass> =
            facet.iter().copied().filter(|c| get(c) == Membership::Unknown).collect();
        unknown.sort_by_key(divisor_name);
        if ins.len() > 1 {
            let names: Vec<String> = ins.iter().map(divisor_name).collect();
            return Err(fail(format!("component in several divisors of one facet: {}", names.join(", "))));
        }
        let mut step = FacetStep {
            index,
            cubic: *cubic,
            cubic_name: cubic.to_string(),
            conics: facet.iter().map(divisor_name).collect(),
            confirmed,
            containing: None,
            choice: false,
            excluded: Vec::new(),
            contradiction: false,
        };
        let holder = if let Some(c) = ins.first() {
            Some(*c)
        } else if unknown.is_empty() {
            None
        } else {
            let pick = if unknown.len() > 1 {
                step.choice = true;
                let k = setup.branch.get(choices).copied().unwrap_or(0);
                choices += 1;
                *unknown.get(k).ok_or_else(|| fail(format!("branch {k} out of range")))?
            } else {
                unknown[0]
            };
            state.insert(pick, Membership::In);
            Some(pick)
        };
        match holder {
            Some(h) => {
                step.containing = Some(divisor_name(&h));
                for c in &unknown {
                    if *c != h {
                        state.insert(*c, Membership::Out);
                        step.excluded.push(divisor_name(c));
                    }
                }
                steps.push(step);
            }
            None => {
                step.contradiction = true;
                steps.push(step);
                return Ok(CertificateTrace { steps, contradiction_at: Some(index) });
            }
        }
    }
    Err(LatticeError::CertificateFailure {
        facet: setup.cubics.len(),
        reason: "chase ended without a contradiction".into(),
    })
}

/// The facet chase with exhaustive confirmation of every facet.
pub fn base_locus_certificate() -> Result<CertificateTrace, LatticeError> {
    let conics = enumerate_classes(ClassKind::Conic);
    run_chase(&ChaseSetup::standard(), Some(&conics))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_recognition() {
        assert!(verify_cubic(&PicClass::h()));
        assert!(verify_cubic(&quadratic_cubic(1, 2, 3)));
        assert!(verify_cubic(&quadratic_cubic(4, 7, 8)));
        assert!(!verify_cubic(&(PicClass::h() * 2 - PicClass::e(1) * 3)));
        // -3K + 2r has the numerics of a cubic but is not in the orbit of h.
        let r = PicClass::e(1) - PicClass::e(2);
        let fake = PicClass::canonical() * -3 + r * 2;
        assert_eq!((fake.square(), fake.canonical_degree()), (1, -3));
        assert!(!verify_cubic(&fake));
    }

    #[test]
    fn standard_facet() {
        let f = facet_conics(&PicClass::h()).unwrap();
        let expected: Vec<PicClass> = {
            let mut v: Vec<_> = (1..=8).map(divisor_e).collect();
            v.sort();
            v
        };
        assert_eq!(f, expected);
    }

    #[test]
    fn quadratic_facet_matches_line_description() {
        use super::super::pic::line_class;
        let h2 = quadratic_cubic(1, 2, 3);
        let mut expected = vec![h2 - line_class(2, 3), h2 - line_class(1, 3), h2 - line_class(1, 2)];
        for l in 4..=8 {
            expected.push(h2 - PicClass::e(l));
        }
        expected.sort();
        assert_eq!(facet_conics(&h2).unwrap(), expected);
        assert_eq!(facet_conics_via_frame(&h2).unwrap(), expected);
    }

    #[test]
    fn not_a_cubic_is_rejected() {
        assert!(matches!(facet_conics(&PicClass::e(1)), Err(LatticeError::NotACubic(_))));
    }

    #[test]
    fn standard_chase_needs_six_facets() {
        let trace = base_locus_certificate().unwrap();
        assert_eq!(trace.contradiction_at, Some(6));
        assert_eq!(trace.steps[1].containing.as_deref(), Some("F2345"));
        assert!(trace.steps[1].choice);
        assert_eq!(trace.steps[3].containing.as_deref(), Some("F2367"));
        assert!(trace.steps.iter().all(|s| s.confirmed));
    }

    #[test]
    fn double_membership_fails_at_first_facet() {
        let mut setup = ChaseSetup::standard();
        setup.initial_in.push(divisor_e(2));
        setup.initial_out.retain(|c| *c != divisor_e(2));
        match run_chase(&setup, None) {
            Err(LatticeError::CertificateFailure { facet, .. }) => assert_eq!(facet, 1),
            other => panic!("expected failure, got {other:?}"),
        }
    }
}
