//! Distance spectrum of a graph given by name or graph6 string.
//!
//! cargo run --example spectrum -- "T:2,3"

use specgraph::cli::parse_graph;
use specgraph::graph::distance_matrix;
use specgraph::spectra::spectrum_of;

fn main() -> specgraph::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "T:1,1".into());
    let g = parse_graph(&text)?;
    let d = distance_matrix(&g)?;
    for row in d.rows() {
        println!("{row:?}");
    }
    let s = spectrum_of(&d.to_int_matrix())?;
    for (i, x) in s.values.iter().enumerate() {
        println!("λ{} = {x:.6}", i + 1);
    }
    Ok(())
}
