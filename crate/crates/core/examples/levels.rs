//! Levels of a pair of index-p^2 subgroups that share their G-levels and
//! c-index but not their T-levels.

use h2orbits::invariants::{c_index, levels};
use h2orbits::{Element, GroupType, Subgroup};

fn around_pg(g: &GroupType, gens: &[&[i64]]) -> h2orbits::Result<Subgroup> {
    let mut v: Vec<Element> = gens.iter().map(|c| g.element(c)).collect::<h2orbits::Result<_>>()?;
    v.extend(g.p_power_multiple_gens(1));
    Ok(Subgroup::generated(g, &v))
}

fn main() -> h2orbits::Result<()> {
    let g = GroupType::new(3, &[1, 2, 2, 3, 4, 4])?;
    let whole = Subgroup::whole(&g);
    let t = around_pg(&g, &[&[1, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0], &[0, 0, 0, 0, 0, 1]])?;
    let m = around_pg(&g, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, -1, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 1]])?;
    let m2 = around_pg(&g, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0]])?;
    println!("{g}");
    for (name, s) in [("M", &m), ("M'", &m2)] {
        println!(
            "{name}: lL = ({}), lL_T = ({}), c-index {}",
            levels(&whole, s)?,
            levels(&t, s)?,
            c_index(&t, s)?
        );
    }
    Ok(())
}
