//! Closed-form orbit sizes for rank two and three, at several primes.

use h2orbits::closed_form::{abelian_sizes, closed_form_table};
use h2orbits::GroupType;

fn main() -> h2orbits::Result<()> {
    for p in [3u64, 5, 7] {
        for e in [&[1u32, 1][..], &[1, 2], &[1, 1, 1], &[1, 2, 2], &[1, 1, 2], &[1, 2, 3]] {
            let g = GroupType::new(p, e)?;
            let cf = closed_form_table(&g).expect("rank two or three");
            println!("p={p} {:<10} {:>2} orbits, total {:>7}, abelian {:?}", cf.case, cf.count(), cf.total(), abelian_sizes(&g).unwrap());
        }
    }
    Ok(())
}
