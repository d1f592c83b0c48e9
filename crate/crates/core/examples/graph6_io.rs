//! Write the connected graphs of order 5 as graph6 and read them back.

use specgraph::graph::graph6::{from_graph6, to_graph6};
use specgraph::mates::{enumerate_connected, ingest_graph6, isomorphic};

fn main() -> specgraph::Result<()> {
    let graphs = enumerate_connected(5)?;
    let lines: Vec<String> = graphs.iter().map(to_graph6).collect();
    let path = std::env::temp_dir().join("specgraph-order5.g6");
    std::fs::write(&path, lines.join("\n") + "\nnot-graph6\n")?;
    let (back, bad) = ingest_graph6(&path)?;
    println!("{} graphs written, {} read back, {} bad lines", lines.len(), back.len(), bad.len());
    for (line, e) in &bad {
        println!("  line {line}: {e}");
    }
    let first = from_graph6(&lines[0])?;
    println!("{} round-trips: {}", lines[0], isomorphic(&first, &graphs[0]));
    std::fs::remove_file(&path)?;
    Ok(())
}
