//! Sweep every forbidden-subgraph template and list the exceptional
//! assignments.

use specgraph::forms::Family;
use specgraph::verify::run_case_table;

fn main() -> specgraph::Result<()> {
    for fam in Family::all() {
        let rep = run_case_table(fam)?;
        let ex: Vec<String> = rep.exceptions.iter().map(|e| format!("{e:?}")).collect();
        println!("{fam:>3}: {:>3} rows ({} feasible), exceptions [{}]", rep.unfiltered, rep.filtered, ex.join(", "));
    }
    Ok(())
}
