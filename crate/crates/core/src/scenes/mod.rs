//! Named, seeded reproduction scenes with golden-value comparison.
//!
//! Each scene runs one step of the computation against the kernel, fills a
//! map of typed values and compares it with the versioned golden table in
//! `golden/golden.json`. Polynomial scenes share a [`Session`] that caches
//! intermediate ideals, so the dependency graph is implicit in the session's
//! accessors and explicit in [`SceneSpec::depends_on`] for ordering.

mod lattice_scenes;
mod polynomial;
pub mod session;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

pub use session::{Session, Shape};

use crate::Error as KernelError;

/// Prime the golden table was recorded at. At other primes mismatches are
/// reported but do not fail the run.
pub const REFERENCE_PRIME: u64 = 67;
pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("scene {scene} failed: {source}")]
    SceneFailure {
        scene: String,
        #[source]
        source: KernelError,
    },
    #[error("scene {scene} took {elapsed_ms} ms, over its {budget_ms} ms budget")]
    BudgetExceeded { scene: String, budget_ms: u128, elapsed_ms: u128 },
    #[error("golden key {key} missing from the report of scene {scene}")]
    MissingKey { scene: String, key: String },
    #[error("unknown scene {0}")]
    UnknownScene(String),
    #[error("golden table: {0}")]
    GoldenTable(String),
}

/// Computed values of one scene, keyed by name.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Values(pub BTreeMap<String, Value>);

impl Values {
    pub fn set(&mut self, key: &str, v: impl Serialize) {
        self.0.insert(key.to_string(), serde_json::to_value(v).expect("serializable value"));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.get(key)
    }
}

type SceneFn = fn(&mut Session, &mut Values) -> Result<(), KernelError>;

pub struct SceneSpec {
    pub name: &'static str,
    pub summary: &'static str,
    pub depends_on: &'static [&'static str],
    /// Heavy scenes only run in `all` with `--long`.
    pub long: bool,
    pub budget: Duration,
    run: SceneFn,
}

const MIN: u64 = 60;

/// All scenes in a topological order of the dependency graph.
pub fn registry() -> &'static [SceneSpec] {
    use polynomial::*;
    static SCENES: &[SceneSpec] = &[
        SceneSpec {
            name: "points-setup",
            summary: "eight points in general linear position",
            depends_on: &[],
            long: false,
            budget: Duration::from_secs(2 * MIN),
            run: points_setup,
        },
        SceneSpec {
            name: "base-scheme",
            summary: "triple-point quintics and the rational quintic in their base locus",
            depends_on: &["points-setup"],
            long: false,
            budget: Duration::from_secs(10 * MIN),
            run: base_scheme,
        },
        SceneSpec {
            name: "normal-bundle",
            summary: "sections of the twisted conormal sheaf and the splitting type",
            depends_on: &["base-scheme"],
            long: false,
            budget: Duration::from_secs(10 * MIN),
            run: normal_bundle,
        },
        SceneSpec {
            name: "secants",
            summary: "quintics with a ninth triple point on the quintic curve",
            depends_on: &["base-scheme"],
            long: false,
            budget: Duration::from_secs(15 * MIN),
            run: secants,
        },
        SceneSpec {
            name: "scroll",
            summary: "the cubic scroll inside the intersection of three secant quintics",
            depends_on: &["secants"],
            long: false,
            budget: Duration::from_secs(15 * MIN),
            run: scroll,
        },
        SceneSpec {
            name: "antican-W",
            summary: "triple-point quintics containing the scroll",
            depends_on: &["scroll"],
            long: false,
            budget: Duration::from_secs(2 * MIN),
            run: antican_w,
        },
        SceneSpec {
            name: "sing-QW",
            summary: "components of the singular curve of a quintic through the scroll",
            depends_on: &["antican-W"],
            long: true,
            budget: Duration::from_secs(30 * MIN),
            run: sing_qw,
        },
        SceneSpec {
            name: "biantican",
            summary: "sextuple-point decics, and those containing the scroll",
            depends_on: &["scroll"],
            long: false,
            budget: Duration::from_secs(5 * MIN),
            run: biantican,
        },
        SceneSpec {
            name: "biantican-images",
            summary: "images of the scroll and two curves under the decic map",
            depends_on: &["biantican", "secants"],
            long: true,
            budget: Duration::from_secs(30 * MIN),
            run: biantican_images,
        },
        SceneSpec {
            name: "special-member",
            summary: "decics with one sevenfold point",
            depends_on: &["scroll"],
            long: false,
            budget: Duration::from_secs(2 * MIN),
            run: special_member,
        },
        SceneSpec {
            name: "anticanonical-image",
            summary: "image of the quintic map and the determinantal model",
            depends_on: &["base-scheme"],
            long: true,
            budget: Duration::from_secs(30 * MIN),
            run: anticanonical_image,
        },
        SceneSpec {
            name: "mult2-along-R",
            summary: "triple-point quintics double along the quintic curve",
            depends_on: &["base-scheme"],
            long: false,
            budget: Duration::from_secs(10 * MIN),
            run: mult2_along_r,
        },
        SceneSpec {
            name: "lattice-counts",
            summary: "(-1)-classes, conics and cubics on the degree-one del Pezzo surface",
            depends_on: &[],
            long: false,
            budget: Duration::from_secs(MIN),
            run: lattice_scenes::counts,
        },
        SceneSpec {
            name: "lattice-facets",
            summary: "facet conics and the base-locus certificate",
            depends_on: &["lattice-counts"],
            long: false,
            budget: Duration::from_secs(MIN),
            run: lattice_scenes::facets,
        },
        SceneSpec {
            name: "lattice-numbers",
            summary: "intersection numbers on the fourfolds, the scroll and the bundle",
            depends_on: &[],
            long: false,
            budget: Duration::from_secs(MIN),
            run: lattice_scenes::numbers,
        },
    ];
    SCENES
}

pub fn find_scene(name: &str) -> Option<&'static SceneSpec> {
    registry().iter().find(|s| s.name == name)
}

/// One golden assertion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenEntry {
    pub key: String,
    pub expected: Value,
    pub anchor: String,
    /// Compare arrays as sets.
    #[serde(default)]
    pub set: bool,
    /// Only checked at this prime (regression data tied to one field).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub only_prime: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenTable {
    pub version: u32,
    pub reference_prime: u64,
    pub scenes: BTreeMap<String, Vec<GoldenEntry>>,
}

const GOLDEN_JSON: &str = include_str!("../../golden/golden.json");

impl GoldenTable {
    /// The table shipped with the crate.
    pub fn builtin() -> GoldenTable {
        Self::parse(GOLDEN_JSON).expect("built-in golden table parses")
    }

    pub fn parse(s: &str) -> Result<GoldenTable, SceneError> {
        serde_json::from_str(s).map_err(|e| SceneError::GoldenTable(e.to_string()))
    }

    /// Problems that make the table unusable: unknown scenes, empty anchors,
    /// duplicate keys.
    pub fn lint(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (scene, entries) in &self.scenes {
            if find_scene(scene).is_none() {
                out.push(format!("unknown scene {scene}"));
            }
            let mut keys = std::collections::BTreeSet::new();
            for e in entries {
                if e.anchor.trim().is_empty() {
                    out.push(format!("{scene}.{} has no anchor", e.key));
                }
                if !keys.insert(&e.key) {
                    out.push(format!("{scene}.{} is duplicated", e.key));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenCheck {
    pub key: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
    pub anchor: String,
    /// A mismatch here does not fail the run.
    #[serde(default)]
    pub informational: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SceneReport {
    pub scene: String,
    pub prime: u64,
    pub seed: u64,
    pub values: Values,
    pub golden: Vec<GoldenCheck>,
    pub wall_ms: u128,
}

impl SceneReport {
    /// Every binding golden check passed.
    pub fn passed(&self) -> bool {
        self.golden.iter().all(|g| g.pass || g.informational)
    }

    /// The report without its timing, for determinism checks.
    pub fn body(&self) -> String {
        let mut r = self.clone();
        r.wall_ms = 0;
        serde_json::to_string(&r).expect("report serializes")
    }
}

fn as_set(v: &Value) -> Option<Vec<String>> {
    let mut items: Vec<String> = v.as_array()?.iter().map(|x| x.to_string()).collect();
    items.sort();
    Some(items)
}

/// Compare a report's values with the table's entries for its scene.
pub fn compare_golden(report: &SceneReport, table: &GoldenTable) -> Result<Vec<GoldenCheck>, SceneError> {
    let Some(entries) = table.scenes.get(&report.scene) else {
        return Ok(Vec::new());
    };
    let informational = report.prime != table.reference_prime;
    let mut out = Vec::new();
    for e in entries {
        if e.only_prime.is_some_and(|p| p != report.prime) {
            continue;
        }
        let actual = report
            .values
            .get(&e.key)
            .ok_or_else(|| SceneError::MissingKey { scene: report.scene.clone(), key: e.key.clone() })?;
        let pass = if e.set {
            as_set(actual).is_some() && as_set(actual) == as_set(&e.expected)
        } else {
            *actual == e.expected
        };
        out.push(GoldenCheck {
            key: e.key.clone(),
            expected: e.expected.clone(),
            actual: actual.clone(),
            pass,
            anchor: e.anchor.clone(),
            informational,
        });
    }
    Ok(out)
}

/// Run one scene inside an existing session (reusing its caches).
pub fn run_in(
    session: &mut Session,
    spec: &SceneSpec,
    table: &GoldenTable,
    budget: Option<Duration>,
) -> Result<SceneReport, SceneError> {
    let start = Instant::now();
    let mut values = Values::default();
    (spec.run)(session, &mut values)
        .map_err(|source| SceneError::SceneFailure { scene: spec.name.to_string(), source })?;
    let elapsed = start.elapsed();
    let budget = budget.unwrap_or(spec.budget);
    if elapsed > budget {
        return Err(SceneError::BudgetExceeded {
            scene: spec.name.to_string(),
            budget_ms: budget.as_millis(),
            elapsed_ms: elapsed.as_millis(),
        });
    }
    let mut report = SceneReport {
        scene: spec.name.to_string(),
        prime: session.prime,
        seed: session.seed,
        values,
        golden: Vec::new(),
        wall_ms: elapsed.as_millis(),
    };
    report.golden = compare_golden(&report, table)?;
    Ok(report)
}

fn session(prime: u64, seed: u64, scene: &str) -> Result<Session, SceneError> {
    Session::new(prime, seed).map_err(|source| SceneError::SceneFailure { scene: scene.to_string(), source })
}

/// Run one scene in a fresh session.
pub fn run_scene(name: &str, prime: u64, seed: u64) -> Result<SceneReport, SceneError> {
    run_scene_with(name, prime, seed, None, &GoldenTable::builtin())
}

pub fn run_scene_with(
    name: &str,
    prime: u64,
    seed: u64,
    budget: Option<Duration>,
    table: &GoldenTable,
) -> Result<SceneReport, SceneError> {
    let spec = find_scene(name).ok_or_else(|| SceneError::UnknownScene(name.to_string()))?;
    let mut s = session(prime, seed, name)?;
    run_in(&mut s, spec, table, budget)
}

/// Outcome of [`run_all`].
#[derive(Debug, Default)]
pub struct RunSummary {
    pub reports: Vec<SceneReport>,
    pub errors: Vec<(String, SceneError)>,
}

impl RunSummary {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.reports.len() - self.passed()
    }

    /// 0 when everything passed, 1 on a golden failure, 2 on a kernel error.
    pub fn exit_code(&self) -> i32 {
        if !self.errors.is_empty() {
            2
        } else if self.failed() > 0 {
            1
        } else {
            0
        }
    }
}

/// Run every scene whose name matches `filter` (a glob; all when `None`)
/// in dependency order, sharing one session. Long scenes run only when
/// `long` is set. A failing scene does not stop the others.
pub fn run_all(prime: u64, seed: u64, filter: Option<&str>, long: bool) -> Result<RunSummary, SceneError> {
    run_all_with(prime, seed, filter, long, &GoldenTable::builtin())
}

/// [`run_all`] against a given golden table.
pub fn run_all_with(
    prime: u64,
    seed: u64,
    filter: Option<&str>,
    long: bool,
    table: &GoldenTable,
) -> Result<RunSummary, SceneError> {
    let pattern = match filter {
        Some(f) => Some(glob::Pattern::new(f).map_err(|e| SceneError::UnknownScene(format!("{f}: {e}")))?),
        None => None,
    };
    let mut s = session(prime, seed, "all")?;
    let mut summary = RunSummary::default();
    for spec in registry() {
        if spec.long && !long {
            continue;
        }
        if pattern.as_ref().is_some_and(|p| !p.matches(spec.name)) {
            continue;
        }
        match run_in(&mut s, spec, table, None) {
            Ok(r) => summary.reports.push(r),
            Err(e) => summary.errors.push((spec.name.to_string(), e)),
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_topological() {
        let names: Vec<&str> = registry().iter().map(|s| s.name).collect();
        for (i, s) in registry().iter().enumerate() {
            for d in s.depends_on {
                let j = names.iter().position(|n| n == d).expect("dependency registered");
                assert!(j < i, "{} before {}", d, s.name);
            }
        }
    }

    #[test]
    fn golden_table_lints_clean() {
        let t = GoldenTable::builtin();
        assert_eq!(t.lint(), Vec::<String>::new());
        for spec in registry() {
            assert!(t.scenes.contains_key(spec.name), "{} has golden entries", spec.name);
        }
    }

    fn report(values: Values) -> SceneReport {
        SceneReport { scene: "x".into(), prime: 67, seed: 1, values, golden: vec![], wall_ms: 0 }
    }

    fn table(entries: Vec<GoldenEntry>) -> GoldenTable {
        GoldenTable { version: 1, reference_prime: 67, scenes: [("x".to_string(), entries)].into() }
    }

    fn entry(key: &str, expected: Value, set: bool) -> GoldenEntry {
        GoldenEntry { key: key.into(), expected, anchor: "a".into(), set, only_prime: None }
    }

    #[test]
    fn comparisons() {
        let mut v = Values::default();
        v.set("dim", 5);
        v.set("classes", vec!["e2", "e1"]);
        let r = report(v);
        let ok = compare_golden(&r, &table(vec![entry("classes", serde_json::json!(["e1", "e2"]), true)])).unwrap();
        assert!(ok[0].pass);
        let bad = compare_golden(&r, &table(vec![entry("dim", serde_json::json!(6), false)])).unwrap();
        assert!(!bad[0].pass);
        assert_eq!((bad[0].expected.clone(), bad[0].actual.clone()), (serde_json::json!(6), serde_json::json!(5)));
        let missing = compare_golden(&r, &table(vec![entry("genus", serde_json::json!(0), false)]));
        assert!(matches!(missing, Err(SceneError::MissingKey { .. })));
    }
}
