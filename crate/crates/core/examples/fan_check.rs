//! The realizable MST-cones of a secondary cone form a fan. Checks support,
//! purity and face intersections, and compares orders on a shared tree.

use mstfan::mstfan::{check_fan, order_permutation_analysis, FanContext, FanOptions};
use mstfan::triangulate::regular_triangulation;
use mstfan::{generators, HeightFunction};

fn main() -> anyhow::Result<()> {
    for (name, config, heights) in [
        ("hexagon", generators::ngon(6)?, vec![0, 4, 1, 2, 0, 9]),
        ("octahedron", generators::crosspoly(3)?, vec![0, 0, 1, 2, 5, 3]),
    ] {
        let h = HeightFunction::from_ints(&config, &heights)?;
        let tri = regular_triangulation(&config, &h)?;
        let ctx = FanContext::new(&config, &tri, Some(&h))?;
        let cones = ctx.enumerate_realizable()?;
        let report = check_fan(&ctx, &cones, FanOptions { samples: 200, seed: 3 })?;
        println!(
            "{name}: {} cones ({} distinct), {} samples, {} uncovered, {} face pairs, {} violations",
            report.cones,
            report.distinct_cones,
            report.samples,
            report.uncovered,
            report.face_pairs_checked,
            report.violations()
        );
        for &(a, b, inv) in report.shared_facets.iter().take(4) {
            let p = order_permutation_analysis(&cones[a], &cones[b])?.expect("same tree");
            println!("  cones {a} and {b} share a facet: sigma {:?}, {inv} inversions, codim {}", p.sigma, p.codim);
        }
    }
    Ok(())
}
