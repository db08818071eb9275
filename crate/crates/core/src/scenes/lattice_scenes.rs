//! Scenes on the lattices (no polynomial work).

use super::session::Session;
use super::Values;
use crate::lattice::facets::divisor_name;
use crate::lattice::{
    base_locus_certificate, enumerate_by_search, enumerate_classes, facet_conics, facet_conics_via_frame,
    fourfold_numbers, pbundle_numbers, surface_numbers, ClassKind,
};
use crate::Error;

pub fn counts(_: &mut Session, v: &mut Values) -> Result<(), Error> {
    for kind in ClassKind::ALL {
        let key = kind.name().replace('-', "_");
        v.set(&format!("{key}_count"), enumerate_classes(kind).len());
        v.set(&format!("{key}_search_count"), enumerate_by_search(kind).len());
    }
    Ok(())
}

pub fn facets(_: &mut Session, v: &mut Values) -> Result<(), Error> {
    let trace = base_locus_certificate()?;
    v.set("contradiction_at", trace.contradiction_at);
    v.set("steps", trace.steps.len());
    v.set("all_facets_confirmed", trace.steps.iter().all(|s| s.confirmed));
    let mut agree = true;
    for step in &trace.steps {
        let a = facet_conics(&step.cubic)?;
        agree &= a.len() == 8 && a == facet_conics_via_frame(&step.cubic)?;
    }
    v.set("facet_routes_agree", agree);
    v.set("facet_cubics", trace.steps.iter().map(|s| s.cubic_name.clone()).collect::<Vec<_>>());
    if let Some(last) = trace.steps.last() {
        v.set("final_facet_conics", &last.conics);
        v.set("final_excluded", &last.excluded);
    }
    let first = facet_conics(&crate::lattice::PicClass::h())?;
    v.set("first_facet_conics", first.iter().map(divisor_name).collect::<Vec<_>>());
    Ok(())
}

pub fn numbers(_: &mut Session, v: &mut Values) -> Result<(), Error> {
    let f = fourfold_numbers();
    v.set("antican_x", f.antican_x);
    v.set("antican_y", f.antican_y);
    v.set("exceptional", f.exceptional);
    v.set("strict_transform", f.strict_transform);
    v.set("map_degree", f.map_degree);
    let s = surface_numbers();
    v.set("chi_antican", s.chi_antican);
    v.set("chi_biantican", s.chi_biantican);
    v.set("residual_genus", s.residual_genus);
    v.set("basis_determinant", s.basis_determinant);
    v.set("branch_split_b", s.branch_split_b);
    v.set("branch_split_admissible", s.branch_split_admissible);
    let b = pbundle_numbers();
    v.set("bundle_cube", b.cube);
    v.set("bundle_square", [b.square_curve.l, b.square_curve.gamma]);
    v.set("bundle_disjointness", b.disjointness);
    Ok(())
}
