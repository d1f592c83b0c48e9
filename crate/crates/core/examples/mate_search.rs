//! Cospectral classes of all connected graphs of one order, and the
//! determined-by-spectrum verdict for each T(a,b) of that order.
//!
//! cargo run --release --example mate_search -- 8

use specgraph::mates::{cospectral_classes, ds_verdict_from_table, enumerate_connected};

fn main() -> specgraph::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let graphs = enumerate_connected(n)?;
    let table = cospectral_classes(&graphs)?;
    println!("{} connected graphs on {n} vertices, {} classes", graphs.len(), table.classes.len());
    if let Some((fp, members)) = table.cospectral().next() {
        println!("first cospectral class ({}): {}", fp.decode(), members.join(" "));
    }
    for a in 1..n.saturating_sub(3) {
        let r = ds_verdict_from_table(&table, a, n - 3 - a)?;
        println!("T({a},{}): {}", n - 3 - a, r.status);
    }
    Ok(())
}
