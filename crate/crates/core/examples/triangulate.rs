//! Regular triangulation of a pentagon from a height function, with the
//! genericity check and the secondary cone it lives in.

use mstfan::generators;
use mstfan::triangulate::Candidates;
use mstfan::HeightFunction;

fn main() -> anyhow::Result<()> {
    let pentagon = generators::ngon(5)?;
    let cand = Candidates::new(&pentagon)?;
    println!("{} candidate simplices, normalized area {}", cand.simplices().len(), cand.total_volume());

    for heights in [[0, 3, 1, 5, 0], [0, 0, 0, 0, 0], [0, 1, 4, 9, 16]] {
        let h = HeightFunction::from_ints(&pentagon, &heights)?;
        if let Some(w) = cand.is_generic(&h)?.witness {
            println!("h = {heights:?}: not generic ({w:?})");
            continue;
        }
        let tri = cand.regular_triangulation(&h)?;
        let cells: Vec<String> = tri.cells().iter().map(|s| s.display(&pentagon)).collect();
        println!("h = {heights:?}: cells {}", cells.join(" "));
    }

    let h = HeightFunction::from_ints(&pentagon, &[0, 3, 1, 5, 0])?;
    let tri = cand.regular_triangulation(&h)?;
    let sc = cand.secondary_cone(&tri)?.minimized();
    println!("secondary cone: {} facets, dimension {}", sc.constraints().len(), sc.dimension().dimension);
    for f in sc.constraints() {
        println!("  {:?} >= 0", f.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    Ok(())
}
