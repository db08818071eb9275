//! Scenes over GF(p)[x0..x4].

use rand::Rng;

use super::session::{shape, singular_curve, Session, Shape, LITERAL_QW_COEFFS, LITERAL_SECANT_POINTS};
use super::Values;
use crate::groebner::betti_table;
use crate::homalg::{conormal, ext_module, sheaf_h0_detail, splitting_type_from_h0, GradedModule};
use crate::idealops::{
    curve_components, equals, graded_piece_points, image_invariants, intersect, is_subset, power, quotient,
    relations_in_degree, saturate, singular_locus, sum, Ideal, IdealError, ImageInvariants, PointConfiguration,
};
use crate::invariants::{is_smooth, numeric_invariants};
use crate::mpoly::{minors, random_graded_matrix, Polynomial};
use crate::Error;

pub fn points_setup(s: &mut Session, v: &mut Values) -> Result<(), Error> {
    v.set("points", s.points());
    v.set("general_position", s.general_position());
    let j = s.j()?;
    v.set("point_ideal_hilbert", (0..5).map(|d| j.hilbert_function(d)).collect::<Vec<_>>());
    Ok(())
}

pub fn base_scheme(s: &mut Session, v: &mut Values) -> Result<(), Error> {
    let ii = s.ii()?;
    v.set("quintic_dim", ii.gens().len());
    let slow = saturate(&power(&s.j()?, 3))?;
    v.set("quintic_dim_saturation", slow.graded_piece(5).dimension());
    let n = numeric_invariants(&ii);
    v.set("base_dim", n.dim);
    v.set("base_degree", n.degree);
    let (ll, rn) = (s.lines()?, s.quartics()?);
    v.set("ii_in_lines", is_subset(&ii, &ll)?);
    v.set("ii_in_quartics", is_subset(&ii, &rn)?);
    let i5 = s.i5()?;
    let sh = shape(&i5)?;
    v.set("i5_dim", sh.dim);
    v.set("i5_degree", sh.degree);
    v.set("i5_genus", sh.genus);
    v.set("i5_smooth", sh.smooth);
    v.set("base_identity", equals(&intersect(&intersect(&ll, &rn)?, &i5)?, &ii)?);
    Ok(())
}

pub fn normal_bundle(s: &mut Session, v: &mut Values) -> Result<(), Error> {
    let i5 = s.i5()?;
    let inv = numeric_invariants(&i5);
    // h0 of the conormal and normal sheaves themselves (0 and 26 at p = 67)
    // needs resolutions of about 4 GB; only the twisted module is resolved.
    let conormal_mod = conormal(&i5)?;
    let canonical = ext_module(&GradedModule::cyclic(&i5), 3, -5)?.quotient_by(&i5)?;
    let twisted = conormal_mod.tensor(&canonical.dual(Some(&i5))?)?.shift(1);
    let h0 = sheaf_h0_detail(&twisted, 0)?;
    v.set("h0_twisted_conormal", h0.h0);
    v.set("h0_twisted_conormal_detail", h0);
    // deg N = deg T_P4|_C - deg T_C = 5 deg C + 2g - 2
    let genus = inv.genus.unwrap_or(0);
    let total = 5 * inv.degree + 2 * genus - 2;
    let split = splitting_type_from_h0(h0.h0 as i64, total, inv.degree, 1)?;
    v.set("splitting", split);
    let points = s.points().len() as i64;
    v.set("normal_in_blowup", split.map(|a| a - points));
    Ok(())
}

fn elliptic_quintic(sh: &Shape) -> bool {
    sh.dim == 1 && sh.degree == 5 && sh.genus == Some(1) && sh.smooth
}

pub fn secants(s: &mut Session, v: &mut Values) -> Result<(), Error> {
    let samples = s.samples()?;
    v.set("samples", &samples);
    let mut dims = Vec::new();
    for q in &samples {
        dims.push(s.secant_system(q)?.dimension());
    }
    v.set("secant_dims", &dims);
    let mut shapes = Vec::new();
    for q in s.secants()? {
        shapes.push(shape(&singular_curve(&q)?)?);
    }
    v.set("singular_curve_degrees", shapes.iter().map(|c| c.degree).collect::<Vec<_>>());
    v.set("singular_curve_genera", shapes.iter().map(|c| c.genus).collect::<Vec<_>>());
    v.set("singular_curves_elliptic_quintics", shapes.iter().all(elliptic_quintic));
    if s.prime == super::REFERENCE_PRIME {
        let i5 = s.i5()?;
        let on = LITERAL_SECANT_POINTS.iter().all(|q| i5.gens().iter().all(|g| g.eval(q) == 0));
        v.set("literal_points_on_curve", on);
        let mut ldims = Vec::new();
        for q in LITERAL_SECANT_POINTS {
            ldims.push(s.secant_system(&q)?.dimension());
        }
        v.set("literal_secant_dims", ldims);
    }
    Ok(())
}

pub fn scroll(s: &mut Session, v: &mut Values) -> Result<(), Error> {
    let ss = s.ss()?;
    let n = numeric_invariants(&ss);
    v.set("ss_dim", n.dim);
    v.set("ss_degree", n.degree);
    let w = s.w()?;
    let sh = shape(&w)?;
    v.set("w_dim", sh.dim);
    v.set("w_degree", sh.degree);
    v.set("w_smooth", sh.smooth);
    v.set("w_equals_colon", equals(&quotient(&ss, &w)?, &w)?);
    Ok(())
}

pub fn antican_w(s: &mut Session, v: &mut Values) -> Result<(), Error> {
    let b = s.quintics_w()?;
    v.set("quintics_through_w", b.dimension());
    let iiw = Ideal::new(s.ring(), b.basis)?;
    v.set("equals_secant_sum", equals(&iiw, &s.ss3()?)?);
    Ok(())
}

struct SingQw {
    shapes: Vec<Shape>,
    e1_meets: Vec<i64>,
    i5_meets: Vec<i64>,
}

const SING_QW_DRAWS: usize = 16;

fn sing_qw_for(s: &mut Session, coeffs: &[u32]) -> Result<SingQw, Error> {
    let basis = s.quintics_w()?.basis;
    let mut qw = Polynomial::zero(s.ring());
    for (g, &c) in basis.iter().zip(coeffs) {
        qw = qw.add_scaled(g, c);
    }
    let j = s.j()?;
    let mut sing = singular_locus(&Ideal::new(s.ring(), vec![qw])?)?;
    for _ in 0..3 {
        sing = quotient(&sing, &j)?;
    }
    let comps = curve_components(&sing, s.seed, 8)?;
    let (e1, i5) = (s.e1()?, s.i5()?);
    let mut out = SingQw { shapes: Vec::new(), e1_meets: Vec::new(), i5_meets: Vec::new() };
    for c in &comps {
        out.shapes.push(shape(c)?);
        out.e1_meets.push(numeric_invariants(&sum(&e1, c)?).degree);
        out.i5_meets.push(numeric_invariants(&sum(&i5, c)?).degree);
    }
    Ok(out)
}

pub fn sing_qw(s: &mut Session, v: &mut Values) -> Result<(), Error> {
    let p = s.field().p();
    let mut rng = s.rng(0x9a);
    // The two singular curves of a member may be conjugate over GF(p^2);
    // then the curve has almost no rational points and cannot be split
    // here. Redraw until the components are defined over GF(p).
    let mut draws = 0;
    let (coeffs, r) = loop {
        draws += 1;
        let coeffs: Vec<u32> = (0..3).map(|_| rng.gen_range(1..p)).collect();
        match sing_qw_for(s, &coeffs) {
            Err(Error::Ideal(IdealError::NoRationalPoint(_))) if draws < SING_QW_DRAWS => continue,
            r => break (coeffs, r?),
        }
    };
    v.set("coefficients", &coeffs);
    v.set("coefficient_draws", draws);
    v.set("component_count", r.shapes.len());
    v.set("component_shapes", &r.shapes);
    v.set("all_elliptic_quintics", r.shapes.iter().all(elliptic_quintic));
    v.set("e1_intersection_degrees", r.e1_meets);
    v.set("i5_intersection_degrees", r.i5_meets);
    if s.prime == super::REFERENCE_PRIME {
        let l = sing_qw_for(s, &LITERAL_QW_COEFFS)?;
        v.set("literal_component_count", l.shapes.len());
        v.set("literal_all_elliptic_quintics", l.shapes.iter().all(elliptic_quintic));
    }
    Ok(())
}

pub fn biantican(s: &mut Session, v: &mut Values) -> Result<(), Error> {
    v.set("decic_dim", s.decics()?.dimension());
    v.set("decic_w_dim", s.decics_w()?.dimension());
    // Reduced instance: four of the points, triple, in degree 6, by
    // interpolation and by saturating the intersection of fat points.
    let four: Vec<Vec<u32>> = s.points()[..4].to_vec();
    let cfg = PointConfiguration::uniform(s.field(), four, 3)?;
    let fast = graded_piece_points(s.ring(), &cfg, 6, &[])?.dimension();
    let slow = saturate(&cfg.ideal(s.ring())?)?.graded_piece(6).dimension();
    v.set("reduced_fast_dim", fast);
    v.set("reduced_slow_dim", slow);
    v.set("reduced_paths_agree", fast == slow);
    Ok(())
}

fn record_image(v: &mut Values, prefix: &str, inv: &ImageInvariants) {
    v.set(&format!("{prefix}_image_dim"), inv.dim);
    v.set(&format!("{prefix}_image_degree"), inv.degree);
    v.set(&format!("{prefix}_preimage_degree"), inv.preimage_degree);
    v.set(&format!("{prefix}_map_degree"), inv.map_degree);
}

pub fn biantican_images(s: &mut Session, v: &mut Values) -> Result<(), Error> {
    let forms = s.decics()?.basis;
    let seed = s.rng(0x1a).gen();
    let (w, e1, i5) = (s.w()?, s.e1()?, s.i5()?);
    record_image(v, "w", &image_invariants(&forms, &w, seed)?);
    record_image(v, "e1", &image_invariants(&forms, &e1, seed)?);
    record_image(v, "i5", &image_invariants(&forms, &i5, seed)?);
    Ok(())
}

pub fn special_member(s: &mut Session, v: &mut Values) -> Result<(), Error> {
    let w = s.w()?;
    let n = s.points().len();
    let mut dims = Vec::new();
    let mut contains = Vec::new();
    for i in 0..n {
        let mut m = vec![6u32; n];
        m[i] = 7;
        let cfg = PointConfiguration::new(s.field(), s.points().to_vec(), m)?;
        let all = graded_piece_points(s.ring(), &cfg, 10, &[])?.dimension();
        let through_w = graded_piece_points(s.ring(), &cfg, 10, &[&w])?.dimension();
        dims.push(all);
        contains.push(all > 0 && through_w == all);
    }
    v.set("special_dims", dims);
    v.set("member_contains_w", contains);
    Ok(())
}

/// The degree-2 relations among `forms`, whether there is exactly one
/// and it is a smooth quadric, and the image invariants.
fn quadric_image(forms: &[Polynomial], seed: u64) -> Result<(usize, bool, ImageInvariants), Error> {
    let ring = forms[0].ring();
    let quadrics = relations_in_degree(forms, &Ideal::zero(ring), 2)?;
    let smooth = match quadrics.as_slice() {
        [q] => is_smooth(&Ideal::new(q.ring(), vec![q.clone()])?)?,
        _ => false,
    };
    Ok((quadrics.len(), smooth, image_invariants(forms, &Ideal::zero(ring), seed)?))
}

pub fn anticanonical_image(s: &mut Session, v: &mut Values) -> Result<(), Error> {
    let ii = s.ii()?;
    let seed: u64 = s.rng(0x3c).gen();
    let m = random_graded_matrix(s.ring(), &[0, 0, 0, 0], &[2, 3], seed)?;
    let jj = minors(2, &m)?;
    let b_jj = betti_table(s.ring(), &jj)?;
    let b_ii = betti_table(s.ring(), ii.gens())?;
    v.set("betti_model", b_jj.entries.iter().map(|(k, c)| (k.0, k.1, *c)).collect::<Vec<_>>());
    v.set("betti_equal", b_jj == b_ii);
    let (count, smooth, inv) = quadric_image(&jj, seed)?;
    v.set("model_quadrics", count);
    v.set("model_image_smooth", smooth);
    v.set("model_image_dim", inv.dim);
    v.set("model_image_degree", inv.degree);
    let (count, smooth, inv) = quadric_image(ii.gens(), seed)?;
    v.set("quadrics", count);
    v.set("image_smooth", smooth);
    v.set("image_dim", inv.dim);
    v.set("image_degree", inv.degree);
    v.set("preimage_degree", inv.preimage_degree);
    v.set("map_degree", inv.map_degree);
    Ok(())
}

pub fn mult2_along_r(s: &mut Session, v: &mut Values) -> Result<(), Error> {
    let i5 = s.i5()?;
    let i5sq = saturate(&power(&i5, 2))?;
    let fast = graded_piece_points(s.ring(), &s.config(3)?, 5, &[&i5sq])?.dimension();
    let slow = saturate(&intersect(&power(&s.j()?, 3), &power(&i5, 2))?)?.graded_piece(5).dimension();
    v.set("quintic_dim", slow);
    v.set("quintic_dim_interpolation", fast);
    Ok(())
}
