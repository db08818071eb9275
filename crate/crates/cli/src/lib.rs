//! Shared plumbing for the command-line tools.

use std::path::Path;

use fourfold::scenes::SceneReport;

/// Exit status when every check passed.
pub const EXIT_OK: i32 = 0;
/// Exit status when a golden comparison failed.
pub const EXIT_GOLDEN: i32 = 1;
/// Exit status when a kernel or input error stopped the run.
pub const EXIT_ERROR: i32 = 2;

pub fn write_report(path: &Path, report: &SceneReport) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(report).expect("report serializes");
    std::fs::write(path, text + "\n")
}

/// One human-readable line per scene.
pub fn report_line(r: &SceneReport) -> String {
    let failed: Vec<&str> = r.golden.iter().filter(|g| !g.pass && !g.informational).map(|g| g.key.as_str()).collect();
    let informational = r.golden.iter().filter(|g| !g.pass && g.informational).count();
    let mut line = format!(
        "{:<22} {}  {}/{} checks  {} ms",
        r.scene,
        if r.passed() { "PASS" } else { "FAIL" },
        r.golden.iter().filter(|g| g.pass).count(),
        r.golden.len(),
        r.wall_ms
    );
    if !failed.is_empty() {
        line.push_str(&format!("  failed: {}", failed.join(", ")));
    }
    if informational > 0 {
        line.push_str(&format!("  ({informational} informational mismatches)"));
    }
    line
}
