//! Counts of triangulations, ordered spanning trees and realizable ordered
//! trees for the standard polytopes.
//!
//! Run with `cargo run --release --example table1 -- P5 octa cube3 prism4`.

use std::time::Instant;

use mstfan::cli::table_row;
use mstfan::mstfan::{census, CensusOptions};

fn main() -> anyhow::Result<()> {
    let rows: Vec<String> = std::env::args().skip(1).collect();
    let rows = if rows.is_empty() { ["P5", "P6", "prism3", "octa"].map(String::from).to_vec() } else { rows };
    for row in rows {
        let g = table_row(&row)?;
        let start = Instant::now();
        let c = census(&g.build()?, CensusOptions { jobs: None, lift_guard: true })?;
        println!(
            "{row:>7}: {} regular triangulations, {} ordered trees, {} realizable ({:.1?})",
            c.regular,
            c.ordered_trees,
            c.realizable,
            start.elapsed()
        );
    }
    Ok(())
}
