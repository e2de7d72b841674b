//! Brute-force orbits versus the invariant partition.

use h2orbits::aut_oracle::{compare, enumerate_aut, generated_automorphisms, orbit_partition_bruteforce};
use h2orbits::enumerate::{tabulate, PairSpace};
use h2orbits::GroupType;

fn main() -> h2orbits::Result<()> {
    for (p, e) in [(3u64, &[1u32, 2][..]), (3, &[1, 1]), (2, &[2, 3]), (3, &[1, 1, 2])] {
        let g = GroupType::new(p, e)?;
        let closure = generated_automorphisms(&g, 1 << 22)?.len();
        match enumerate_aut(&g, 1_000_000) {
            Ok(all) => println!("{g}: |Aut| = {} (generators reach {closure})", all.len()),
            Err(err) => println!("{g}: generators reach {closure}; {err}"),
        }
        let space = PairSpace::new(&g)?;
        let oracle = orbit_partition_bruteforce(&space)?;
        let (_, invariant) = tabulate(&space)?;
        println!("  {}", compare(&oracle, &invariant).describe(&space));
        println!("  orbit sizes {:?}", oracle.block_sizes());
    }
    Ok(())
}
