//! Secondary cones as exact H-cones: dimension, implicit equalities, an
//! interior witness, sampling, and the sign of each edge length on the cone.

use mstfan::cone::ridge_sign;
use mstfan::sample::RationalSampler;
use mstfan::triangulate::{dual_graph, Candidates};
use mstfan::{generators, HeightFunction};

fn main() -> anyhow::Result<()> {
    let prism = generators::prism(3)?;
    let cand = Candidates::new(&prism)?;
    let h = HeightFunction::from_ints(&prism, &[0, 1, 5, 2, 7, 3])?;
    let tri = cand.regular_triangulation(&h)?;
    let sc = cand.secondary_cone(&tri)?;
    let report = sc.dimension();
    println!(
        "triangular prism: {} cells, {} constraints ({} essential), dimension {} of {}",
        tri.cells().len(),
        sc.constraints().len(),
        sc.minimized().constraints().len(),
        report.dimension,
        sc.ambient()
    );
    println!("h strictly inside: {}", sc.contains_strictly(h.values()));

    let mut sampler = RationalSampler::new(7);
    let g = dual_graph(&tri, &h)?;
    for _ in 0..3 {
        let x = sc.sample_interior(&mut sampler).expect("full-dimensional cone");
        let hx = HeightFunction::new(&prism, x)?;
        assert_eq!(cand.regular_triangulation(&hx)?.cells(), tri.cells());
        let lengths: Vec<String> = g.at_heights(&hx).lengths().iter().map(|l| l.to_string()).collect();
        println!("sample lengths {}", lengths.join(", "));
    }
    let signs: Vec<i8> = g.edges().iter().map(|e| ridge_sign(&prism, &sc, &e.ridge, &h)).collect::<Result<_, _>>()?;
    println!("length signs on the cone: {signs:?}");
    Ok(())
}
