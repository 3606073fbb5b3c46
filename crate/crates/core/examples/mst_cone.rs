//! Ordered minimum spanning trees of a dual graph and the cones of heights
//! realizing them.

use mstfan::mstfan::{cut_edge, greedy_mst, FanContext, OrderedSpanningTree};
use mstfan::triangulate::regular_triangulation;
use mstfan::{generators, HeightFunction};

fn main() -> anyhow::Result<()> {
    let octa = generators::crosspoly(3)?;
    let h = HeightFunction::from_ints(&octa, &[0, 0, 1, 2, 5, 3])?;
    let tri = regular_triangulation(&octa, &h)?;
    let ctx = FanContext::new(&octa, &tri, Some(&h))?;
    let g = ctx.graph();

    let (tree, partition) = greedy_mst(g, &g.lengths())?;
    println!("greedy order {:?}, ranges {:?}", order_of(g, &tree), partition.ranges());
    for e in g.edges().iter().filter(|e| !tree.contains(&e.ridge)) {
        let (i, r) = cut_edge(&tree, g, &e.ridge)?;
        println!(
            "edge {} is cut by tree edge {} at position {i}",
            g.edge_index(&e.ridge).unwrap(),
            g.edge_index(&r).unwrap()
        );
    }
    let k = ctx.mst_cone(&tree)?;
    println!("MST-cone: {} inequalities, contains h: {}", k.inequality_count(), k.cone.contains(h.values()));

    let reversed = OrderedSpanningTree::new(g, tree.edges().iter().rev().cloned().collect())?;
    println!("reversed order realizable: {}", ctx.is_realizable(&reversed)?);

    println!("{} spanning trees, {} ordered trees", ctx.spanning_trees().len(), ctx.ordered_tree_count());
    for k in ctx.enumerate_realizable()? {
        println!("  realizable {:?}", order_of(g, &k.tree));
    }
    Ok(())
}

fn order_of(g: &mstfan::DualGraph, t: &OrderedSpanningTree) -> Vec<usize> {
    t.edges().iter().map(|r| g.edge_index(r).unwrap()).collect()
}
