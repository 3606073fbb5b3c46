//! All triangulations of small configurations, tagged regular or not.

use mstfan::generators::Generator;
use mstfan::triangulate::enumerate_triangulations;

fn main() -> anyhow::Result<()> {
    for g in [
        Generator::Ngon(5),
        Generator::Ngon(6),
        Generator::Ngon(7),
        Generator::Prism(3),
        Generator::Crosspoly(3),
        Generator::Cube(3),
    ] {
        let config = g.build()?;
        let all = enumerate_triangulations(&config)?;
        let regular = all.iter().filter(|t| t.regular).count();
        let mut sizes: Vec<usize> = all.iter().map(|t| t.triangulation.cells().len()).collect();
        sizes.sort_unstable();
        sizes.dedup();
        println!("{g:>11}: {:>3} triangulations, {regular:>3} regular, cell counts {sizes:?}", all.len());
    }
    let octa = Generator::Crosspoly(3).build()?;
    for t in enumerate_triangulations(&octa)? {
        let cells: Vec<String> = t.triangulation.cells().iter().map(|s| s.display(&octa)).collect();
        println!("  {}", cells.join(" "));
    }
    Ok(())
}
