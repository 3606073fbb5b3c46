//! Cycle matroids of dual graphs, initial matroids, flags of flats, and the
//! saturating cells of the MST-fan checked against the Bergman fan.

use mstfan::matroid::{self, CycleMatroid};
use mstfan::mstfan::FanContext;
use mstfan::scalar::int;
use mstfan::triangulate::regular_triangulation;
use mstfan::{generators, HeightFunction};

fn main() -> anyhow::Result<()> {
    let square = CycleMatroid::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)])?;
    println!("4-cycle: rank {}, {} bases", square.rank(&[0, 1, 2, 3]), square.bases().len());
    for w in [[1, 2, 3, 4], [1, 1, 1, 4], [1, 2, 2, 2]] {
        let w: Vec<_> = w.iter().map(|&x| int(x)).collect();
        let loops = matroid::initial_matroid_loops(&square, &w);
        let flag = matroid::flag_of(&w);
        println!(
            "  w = {:?}: loops {loops:?}, in Bergman fan {}, flag {:?} of flats {}",
            w.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            matroid::bergman_membership(&square, &w),
            flag.chain(),
            matroid::is_flag_of_flats(&square, &flag)
        );
    }

    let octa = generators::crosspoly(3)?;
    let h = HeightFunction::from_ints(&octa, &[0, 0, 1, 2, 5, 3])?;
    let tri = regular_triangulation(&octa, &h)?;
    let ctx = FanContext::new(&octa, &tri, Some(&h))?;
    let cones = ctx.enumerate_realizable()?;
    for cell in matroid::saturating_cells(&cones, ctx.graph(), ctx.secondary_cone())? {
        println!(
            "saturating {:?}: dimension {}, Bergman {}",
            cell.collection,
            cell.cone.dimension().dimension,
            cell.bergman
        );
    }

    let circuit = [
        octa.index_of("+1").unwrap(),
        octa.index_of("-1").unwrap(),
        octa.index_of("+2").unwrap(),
        octa.index_of("-2").unwrap(),
    ];
    let r = matroid::ridge_for_circuit(&octa, &circuit)?;
    println!("ridge for circuit: {} | {}", r.left().display(&octa), r.right().display(&octa));
    Ok(())
}
