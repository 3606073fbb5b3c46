//! Epistatic filtration of a genotope: cells merge along dual edges in order
//! of weight, giving a merge tree. Also evaluates the support function.

use mstfan::epistasis::{self, WeightKind};
use mstfan::generators;
use mstfan::mstfan::greedy_mst;
use mstfan::sample::RationalSampler;
use mstfan::scalar::ratio;
use mstfan::triangulate::{dual_graph, regular_triangulation, Candidates};

fn main() -> anyhow::Result<()> {
    let cube = generators::cube(3)?;
    let fitness = generators::random_generic_heights(&Candidates::new(&cube)?, &mut RationalSampler::new(11))?;
    let shown: Vec<String> = fitness.values().iter().map(|x| x.to_string()).collect();
    println!("fitness {}", shown.join(" "));
    let tri = regular_triangulation(&cube, &fitness)?;
    let g = dual_graph(&tri, &fitness)?;

    for kind in [WeightKind::Lattice, WeightKind::Epistatic] {
        let f = epistasis::epistatic_filtration(&cube, &fitness, kind)?;
        println!("{kind:?} weights:");
        for s in &f.steps {
            let tag = if s.critical { "merge" } else { "cycle" };
            println!("  edge {:>2} weight {:>5}  {tag}", s.edge, s.weight.to_string());
        }
        let t = epistasis::merge_tree(&f)?;
        println!("  merge tree: {} leaves, root {}", t.leaves.len(), t.root());
    }

    let w = epistasis::edge_weights(&cube, &g, WeightKind::Lattice)?;
    let (mst, _) = greedy_mst(&g, &w)?;
    let d = epistasis::leaf_distance(&mst, &g, &w, 0, g.node_count() - 1)?;
    println!("distance between first and last cell along the MST: {d}");

    let centre = vec![ratio(1, 2); 3];
    let v = epistasis::eval_support_function(&cube, &fitness, &tri, &centre)?;
    println!("support function at the centre: {} (cell {})", v.value, v.cell.display(&cube));
    Ok(())
}
