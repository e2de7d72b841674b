//! Subgroup arithmetic in G = Z/3 + Z/9 + Z/27.

use h2orbits::{GroupType, Subgroup};

fn main() -> h2orbits::Result<()> {
    let g = GroupType::new(3, &[1, 2, 3])?;
    println!("{g}, order {}", g.order());

    let x = g.element(&[1, 3, 9])?;
    let y = g.element(&[0, 1, 3])?;
    println!("order of {x} is {}, order of {y} is {}", g.element_order(&x), g.element_order(&y));

    let s = Subgroup::generated(&g, &[x.clone(), y]);
    let t = Subgroup::p_power_multiple(&g, 1);
    println!("S = {s}: order {}, type {:?}", s.order(), s.iso_type());
    println!("T = pG = {t}: index {}, type {:?}", t.index(), t.iso_type());

    let meet = s.intersect(&t)?;
    let join = s.sum(&t)?;
    println!("S n T = {meet}, order {}", meet.order());
    println!("S + T = {join}, order {}", join.order());
    // |S + T| |S n T| = |S| |T|
    assert_eq!(join.order() * meet.order(), s.order() * t.order());

    for m in 0..=3 {
        let layer = Subgroup::whole(&g).torsion(m);
        println!("G[3^{m}] has order {} and type {:?}", layer.order(), layer.iso_type());
    }
    Ok(())
}
