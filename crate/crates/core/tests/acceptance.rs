//! Acceptance checks with pinned time budgets. Prints one PASS/FAIL line
//! per criterion and exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use fourfold::idealops::{graded_piece_points, saturate, PointConfiguration};
use fourfold::lattice::{
    base_locus_certificate, bertini_fixed_rank, bertini_pullback, enumerate_by_search,
    enumerate_classes, facet_conics, facet_conics_via_frame, fourfold_numbers, pbundle_numbers, surface_numbers,
};
use fourfold::lattice::facets::divisor_name;
use fourfold::scenes::session::Session;
use fourfold::scenes::{find_scene, run_in, GoldenTable, SceneReport};
use fourfold::{ClassKind, Ideal, PicClass};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use serde_json::{json, Value};

type Check = Result<String, String>;

fn require(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

struct Outcome {
    id: usize,
    title: &'static str,
    budget: Duration,
    elapsed: Duration,
    result: Check,
}

impl Outcome {
    fn pass(&self) -> bool {
        self.result.is_ok() && self.elapsed <= self.budget
    }

    fn line(&self) -> String {
        let detail = match &self.result {
            Ok(d) if self.elapsed > self.budget => format!("over budget; {d}"),
            Ok(d) => d.clone(),
            Err(e) => e.clone(),
        };
        format!(
            "criterion {:>2} {} {:<28} {:>9.2} s / {:>5} s  {}",
            self.id,
            if self.pass() { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            detail
        )
    }
}

fn run(id: usize, title: &'static str, budget_s: u64, f: impl FnOnce() -> Check) -> Outcome {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let o = Outcome { id, title, budget: Duration::from_secs(budget_s), elapsed: start.elapsed(), result };
    println!("{}", o.line());
    o
}

/// Run a registered scene in the shared session; all golden checks must pass.
fn scene(s: &mut Session, table: &GoldenTable, name: &str, budget_s: u64) -> Result<SceneReport, String> {
    let spec = find_scene(name).ok_or(format!("no scene {name}"))?;
    let r = run_in(s, spec, table, Some(Duration::from_secs(budget_s))).map_err(|e| e.to_string())?;
    let failed: Vec<String> =
        r.golden.iter().filter(|g| !g.pass).map(|g| format!("{}: {} != {}", g.key, g.actual, g.expected)).collect();
    require(failed.is_empty(), format!("{name}: {}", failed.join("; ")))?;
    Ok(r)
}

fn value(r: &SceneReport, key: &str) -> Result<Value, String> {
    r.values.get(key).cloned().ok_or(format!("{}: missing {key}", r.scene))
}

fn expect(r: &SceneReport, key: &str, want: Value) -> Result<(), String> {
    let got = value(r, key)?;
    require(got == want, format!("{key}: {got} != {want}"))
}

fn lattice_counts() -> Check {
    let mut found = Vec::new();
    for (kind, want) in [(ClassKind::MinusOne, 240), (ClassKind::Conic, 2160), (ClassKind::Cubic, 17280)] {
        let orbit = enumerate_classes(kind);
        let mut search = enumerate_by_search(kind);
        let mut sorted = orbit.clone();
        sorted.sort();
        search.sort();
        require(orbit.len() == want, format!("{}: {} classes", kind.name(), orbit.len()))?;
        require(sorted == search, format!("{}: orbit and search differ", kind.name()))?;
        found.push(orbit.len().to_string());
    }
    Ok(format!("{} (orbit = search)", found.join("/")))
}

fn bertini() -> Check {
    let k = PicClass::canonical();
    let basis: Vec<PicClass> = (0..9)
        .map(|j| {
            let mut c = [0i64; 9];
            c[j] = 1;
            PicClass::from_coefficients(c)
        })
        .collect();
    for x in &basis {
        require(bertini_pullback(&bertini_pullback(x)) == *x, "not an involution")?;
        for y in &basis {
            require(bertini_pullback(x).dot(&bertini_pullback(y)) == x.dot(y), "not an isometry")?;
        }
    }
    require(bertini_pullback(&k) == k, "K not fixed")?;
    let rank = bertini_fixed_rank();
    require(rank == 1, format!("fixed space has rank {rank}"))?;
    for kind in ClassKind::ALL {
        let mut classes = enumerate_classes(kind);
        let mut images: Vec<PicClass> = classes.iter().map(bertini_pullback).collect();
        classes.sort();
        images.sort();
        require(classes == images, format!("{} not permuted", kind.name()))?;
    }
    Ok("fixed space = span K (rank 1); permutes 240/2160/17280".into())
}

fn certificate() -> Check {
    let trace = base_locus_certificate().map_err(|e| e.to_string())?;
    require(trace.steps.len() == 6, format!("{} facet steps", trace.steps.len()))?;
    require(trace.contradiction_at == Some(6), format!("contradiction at {:?}", trace.contradiction_at))?;
    for step in &trace.steps {
        let search = facet_conics(&step.cubic).map_err(|e| e.to_string())?;
        let frame = facet_conics_via_frame(&step.cubic).map_err(|e| e.to_string())?;
        require(search.len() == 8 && search == frame, format!("facet of {} not confirmed", step.cubic_name))?;
        let mut names: Vec<String> = search.iter().map(divisor_name).collect();
        let mut listed = step.conics.clone();
        names.sort();
        listed.sort();
        require(step.confirmed && names == listed, format!("facet of {} differs from the trace", step.cubic_name))?;
    }
    Ok("contradiction at facet 6; 6 x 8 conics confirmed over 2160".into())
}

fn numbers() -> Check {
    let f = fourfold_numbers();
    let s = surface_numbers();
    let b = pbundle_numbers();
    let got = json!([
        f.antican_x, f.antican_y, f.strict_transform, f.exceptional, b.cube, s.chi_antican, s.chi_biantican,
        s.residual_genus, b.square_curve.gamma, b.square_curve.l
    ]);
    let want = json!([-23, 13, 8, -1, 4, 3, 8, 4, 1, 3]);
    require(got == want, format!("{got} != {want}"))?;
    Ok("-23, 13, 8, -1; cube 4; chi 3, 8; genus 4; gamma + 3l".into())
}

fn dimensions(s: &mut Session) -> Check {
    // The scroll is computed by criterion 8, which runs first.
    let w = s.w().map_err(|e| e.to_string())?;
    let ring = s.ring().clone();
    let triple = s.config(3).map_err(|e| e.to_string())?;
    let sextuple = s.config(6).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let dims = [
        graded_piece_points(&ring, &triple, 5, &[]),
        graded_piece_points(&ring, &triple, 5, &[&w]),
        graded_piece_points(&ring, &sextuple, 10, &[]),
        graded_piece_points(&ring, &sextuple, 10, &[&w]),
    ]
    .into_iter()
    .map(|b| b.map(|b| b.dimension()))
    .collect::<Result<Vec<_>, _>>()
    .map_err(|e| e.to_string())?;
    let fast = start.elapsed();
    require(dims == [6, 3, 29, 21], format!("dimensions {dims:?}"))?;
    require(fast <= Duration::from_secs(60), format!("fast path took {:.1} s", fast.as_secs_f64()))?;

    let start = Instant::now();
    let four = PointConfiguration::uniform(s.field(), s.points()[..4].to_vec(), 3).map_err(|e| e.to_string())?;
    let by_points = graded_piece_points(&ring, &four, 6, &[]).map_err(|e| e.to_string())?.dimension();
    let by_saturation =
        saturate(&four.ideal(&ring).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.graded_piece(6).dimension();
    let slow = start.elapsed();
    require(by_points == by_saturation, format!("reduced instance: {by_points} vs {by_saturation}"))?;
    require(slow <= Duration::from_secs(300), format!("slow path took {:.1} s", slow.as_secs_f64()))?;
    Ok(format!(
        "6/3/29/21 in {:.1} s; reduced instance {by_points} = {by_saturation} in {:.1} s",
        fast.as_secs_f64(),
        slow.as_secs_f64()
    ))
}

fn fail<T: std::fmt::Debug>(what: &str, e: proptest::test_runner::TestError<T>) -> String {
    format!("{what}: {e}")
}

fn properties(s: &mut Session) -> Check {
    let mut runner = TestRunner::new_with_rng(
        Config { cases: 24, failure_persistence: None, ..Config::default() },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let coeffs = || prop::collection::vec(prop::option::weighted(0.3, 1..P as u32), 1..12);
    runner
        .run(
            &(prop::collection::vec(prop::collection::vec(coeffs(), 1..4), 1..4), 0usize..64, (0usize..4, 0usize..4, 1u32..P as u32)),
            |(raw, perm, extra)| {
                let r = ring(3);
                let gens: Vec<_> = raw.iter().map(|p| mixed(&r, p)).filter(|f| !f.is_zero()).collect();
                prop_assume!(!gens.is_empty());
                gb_unique(&r, &gens, perm, extra)
            },
        )
        .map_err(|e| fail("GB uniqueness", e))?;
    runner
        .run(&(prop::collection::vec(raw_form(2, 3), 1..4), 0u32..=6, coeffs()), |(raw, d, target)| {
            let r = ring(4);
            let gens = forms(&r, &raw);
            prop_assume!(!gens.is_empty());
            nf_matches_span(&r, &gens, &form(&r, d, &target), d)?;
            // An element of the ideal as well, so membership is exercised.
            let inside = gens.iter().filter(|g| g.degree().unwrap() <= d).fold(fourfold::Polynomial::zero(&r), |acc, g| {
                acc.add(&g.mul(&form(&r, d - g.degree().unwrap(), &target)))
            });
            nf_matches_span(&r, &gens, &inside, d)
        })
        .map_err(|e| fail("NF vs rank", e))?;
    runner
        .run(&prop::collection::vec(raw_form(1, 3), 1..4), |raw| {
            let r = ring(4);
            let gens = forms(&r, &raw);
            prop_assume!(!gens.is_empty());
            saturation_idempotent(&Ideal::new(&r, gens).unwrap())
        })
        .map_err(|e| fail("saturation", e))?;
    runner
        .run(&(prop::collection::vec(raw_form(1, 3), 1..5), any::<bool>()), |(raw, five)| {
            let r = ring(if five { 5 } else { 4 });
            let gens = forms(&r, &raw);
            prop_assume!(!gens.is_empty());
            resolution_is_complex(&r, &gens)
        })
        .map_err(|e| fail("resolution", e))?;

    let err = |e: fourfold::Error| e.to_string();
    let scene_ideals = [
        ("points", s.j().map_err(err)?),
        ("base", s.ii().map_err(err)?),
        ("rational quintic", s.i5().map_err(err)?),
        ("lines", s.lines().map_err(err)?),
        ("quartics", s.quartics().map_err(err)?),
        ("scroll", s.w().map_err(err)?),
        ("secant residual", s.ss().map_err(err)?),
        ("elliptic quintic", s.e1().map_err(err)?),
    ];
    for (name, i) in &scene_ideals {
        for d in 0..=8 {
            hf_matches_span(i, d).map_err(|e| format!("HF {name}: {e}"))?;
        }
    }
    let j = s.j().map_err(err)?;
    for d in 0..=8 {
        let (a, b) = (j.hilbert_function(d), hf_by_evaluation(s.ring(), s.points(), d));
        require(a == b, format!("HF points degree {d}: {a} vs evaluation {b}"))?;
    }
    for (name, i) in &scene_ideals[..3] {
        resolution_is_complex(s.ring(), i.gens()).map_err(|e| format!("resolution {name}: {e}"))?;
    }
    Ok(format!("4 x 24 random cases; HF on {} scene ideals, degrees 0-8", scene_ideals.len()))
}

fn main() {
    let table = GoldenTable::builtin();
    let mut s = Session::new(67, 1).expect("session");
    let mut out = Vec::new();

    out.push(run(1, "lattice counts", 10, lattice_counts));
    out.push(run(2, "Bertini action", 5, bertini));
    out.push(run(3, "base-locus certificate", 10, certificate));
    out.push(run(12, "intersection numbers", 1, numbers));
    out.push(run(4, "base scheme", 600, || {
        let r = scene(&mut s, &table, "base-scheme", 600)?;
        expect(&r, "quintic_dim", json!(6))?;
        expect(&r, "base_identity", json!(true))?;
        Ok(format!(
            "dim 6; quintic curve (1, 5, 0, smooth={}); identity holds",
            value(&r, "i5_smooth")?
        ))
    }));
    out.push(run(5, "normal bundle", 600, || {
        let r = scene(&mut s, &table, "normal-bundle", 600)?;
        expect(&r, "h0_twisted_conormal", json!(1))?;
        expect(&r, "splitting", json!([7, 8, 8]))?;
        Ok("h0 = 1, splitting (7, 8, 8)".into())
    }));
    out.push(run(7, "secant uniqueness", 900, || {
        let r = scene(&mut s, &table, "secants", 900)?;
        let n = value(&r, "samples")?.as_array().map_or(0, |a| a.len());
        require(n >= 3, format!("{n} sampled points"))?;
        expect(&r, "singular_curves_elliptic_quintics", json!(true))?;
        Ok(format!("{n} points: dim 1 each, singular along elliptic quintics"))
    }));
    out.push(run(8, "scroll extraction", 900, || {
        let r = scene(&mut s, &table, "scroll", 900)?;
        expect(&r, "w_equals_colon", json!(true))?;
        let a = scene(&mut s, &table, "antican-W", 900)?;
        expect(&a, "equals_secant_sum", json!(true))?;
        Ok("(6, 2) residual; smooth cubic scroll; colon identity; secant equality".into())
    }));
    out.push(run(6, "restriction dimensions", 360, || dimensions(&mut s)));
    out.push(run(9, "decic images", 1800, || {
        let r = scene(&mut s, &table, "biantican-images", 1800)?;
        let degs: Vec<String> = ["w", "e1", "i5"]
            .iter()
            .map(|p| value(&r, &format!("{p}_image_degree")).map(|v| v.to_string()))
            .collect::<Result<_, _>>()?;
        expect(&r, "w_map_degree", json!(2))?;
        Ok(format!("degrees {}; map degree 2 = 12/6", degs.join("/")))
    }));
    out.push(run(10, "anticanonical image", 1800, || {
        let r = scene(&mut s, &table, "anticanonical-image", 1800)?;
        expect(&r, "betti_equal", json!(true))?;
        Ok("smooth quadric fourfold of degree 2; Betti tables equal".into())
    }));
    out.push(run(11, "double along the curve", 600, || {
        let r = scene(&mut s, &table, "mult2-along-R", 600)?;
        expect(&r, "quintic_dim", json!(0))?;
        Ok("degree-5 piece is zero".into())
    }));
    out.push(run(13, "property suites", 600, || properties(&mut s)));

    out.sort_by_key(|o| o.id);
    println!("\nsummary");
    for o in &out {
        println!("{}", o.line());
    }
    let failed = out.iter().filter(|o| !o.pass()).count();
    println!("{} of {} criteria passed", out.len() - failed, out.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
