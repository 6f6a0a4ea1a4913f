// Runs the default family grid in both modes and prints the summary and
// every row that is not a plain match.

use status_indices::verify::{default_grid, grid_report, verify_grid, Mode};
use status_indices::DEFAULT_VERTEX_CAP;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid = default_grid();
    for mode in [Mode::Corrected, Mode::AsPrinted] {
        let report = grid_report(verify_grid(&grid, mode, DEFAULT_VERTEX_CAP), mode);
        let s = report.summary();
        println!(
            "{mode}: {} rows, {} passed, {} registered errata, {} failed",
            s.total, s.passed, s.errata, s.failed
        );
        for c in report.mismatches() {
            let why = c
                .erratum
                .map(str::to_string)
                .or_else(|| c.note.clone())
                .unwrap_or_default();
            println!(
                "  {} {}: {} vs {} [{why}]",
                c.subject, c.check, c.oracle, c.claimed
            );
        }
    }
    Ok(())
}
