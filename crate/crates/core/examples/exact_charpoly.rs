//! Exact characteristic polynomial of D(T(a,b)) against its closed form,
//! and the exact multiplicity of −2.

use specgraph::forms::{expand_closed, tab_charpoly_closed};
use specgraph::graph::{distance_matrix, named_graph, NamedGraphSpec};
use specgraph::poly::charpoly_exact;

fn main() -> specgraph::Result<()> {
    for (a, b) in [(1, 1), (2, 3), (4, 4)] {
        let g = named_graph(&NamedGraphSpec::Tab(a, b))?;
        let exact = charpoly_exact(&distance_matrix(&g)?.to_int_matrix());
        let (e, reduced) = tab_charpoly_closed(a as u32, b as u32)?;
        println!("T({a},{b}): {exact}");
        println!("  (-λ-2)^{e} · ({reduced})  equal: {}", expand_closed(e, &reduced) == exact);
        println!("  multiplicity of -2: {}", exact.root_multiplicity(&(-2).into()));
    }
    Ok(())
}
