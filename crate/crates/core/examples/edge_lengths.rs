//! Dual graphs and tropical edge lengths: the linear form of each ridge, its
//! value at the heights, the circuit it comes from, and the distance between
//! the two dual vertices.

use mstfan::geometry::fundamental_circuit;
use mstfan::triangulate::{distance_report, dual_graph, regular_triangulation};
use mstfan::{generators, HeightFunction, PointConfiguration};

fn show(name: &str, config: &PointConfiguration, heights: &[i64]) -> anyhow::Result<()> {
    let h = HeightFunction::from_ints(config, heights)?;
    let tri = regular_triangulation(config, &h)?;
    let g = dual_graph(&tri, &h)?;
    println!("{name}: {} cells, {} dual edges", g.node_count(), g.edge_count());
    for e in g.edges() {
        let z = fundamental_circuit(config, &e.ridge)?;
        let terms: Vec<String> = e.form.nonzero().map(|(i, c)| format!("{c}*h[{}]", config.label(i))).collect();
        println!(
            "  {} | {}  length {:>4}  circuit {:?}  form {}",
            e.ridge.left().display(config),
            e.ridge.right().display(config),
            e.length.to_string(),
            z.support().iter().map(|&i| config.label(i)).collect::<Vec<_>>(),
            terms.join(" + "),
        );
    }
    for d in distance_report(&tri, &h)? {
        if let Some(r) = d.ratio {
            println!("  |dual edge|^2 / length^2 = {r}");
        }
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    let seg = PointConfiguration::unlabeled(vec![vec![0], vec![1], vec![2], vec![3]])?;
    show("four points on a line", &seg, &[0, 2, 3, 0])?;
    show("octahedron", &generators::crosspoly(3)?, &[0, 0, 1, 2, 5, 3])?;
    Ok(())
}
