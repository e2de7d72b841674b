//! Orbit tables from the invariant histogram, with the closed-form check.

use h2orbits::closed_form::{closed_form_table, verdict};
use h2orbits::enumerate::{coverage, tabulate, PairSpace};
use h2orbits::GroupType;

fn main() -> h2orbits::Result<()> {
    let types: [(u64, &[u32]); 5] = [(3, &[1, 2]), (5, &[1, 1]), (2, &[2, 3]), (3, &[1, 1, 1]), (3, &[1, 1, 1, 1])];
    for (p, e) in types {
        let g = GroupType::new(p, e)?;
        let space = PairSpace::new(&g)?;
        let (table, _) = tabulate(&space)?;
        let cov = coverage(&space);
        println!("{g}: {} orbits, {}/{} covered", table.rows.len(), cov.covered, cov.total);
        for r in &table.rows {
            println!("  {:<34} {:>6}", r.invariant.to_string(), r.size);
        }
        let case = closed_form_table(&g).map_or("none", |c| c.case);
        println!("  closed form ({case}): {}", verdict(&g, &table.sizes()).as_str());
    }
    Ok(())
}
