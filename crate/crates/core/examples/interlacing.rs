//! Interlacing of D(T(1,1)) inside D(T(a,b)).

use specgraph::graph::{distance_matrix, named_graph, NamedGraphSpec};
use specgraph::spectra::{check_interlacing, spectrum_of};

fn main() -> specgraph::Result<()> {
    let spec = |a, b| -> specgraph::Result<_> {
        spectrum_of(&distance_matrix(&named_graph(&NamedGraphSpec::Tab(a, b))?)?.to_int_matrix())
    };
    let base = spec(1, 1)?;
    for (a, b) in [(2, 1), (3, 2), (5, 5)] {
        let s = spec(a, b)?;
        let head: Vec<String> = s.values[..4].iter().map(|x| format!("{x:.4}")).collect();
        println!(
            "T({a},{b}): λ1..λ4 = {}, λn = {:.4}, interlaces T(1,1): {}",
            head.join(", "),
            s.min(),
            check_interlacing(&s, &base, 1e-9)
        );
    }
    Ok(())
}
