//! Dual elements, their Bockstein reductions and Bockquivalence classes.

use h2orbits::cohomology::{bockquivalence_class, bockstein_reduce};
use h2orbits::{DualElement, GroupType};

fn main() -> h2orbits::Result<()> {
    let g = GroupType::new(3, &[1, 2, 2, 3])?;
    println!("{g} has {} blocks, so {} classes", g.t(), g.t() + 1);
    for c in [[0, 0, 0, 0], [1, 0, 0, 0], [2, 3, 0, 9], [1, 1, 0, 0], [0, 3, 6, 3], [1, 0, 4, 1]] {
        let d = DualElement::new(&g, &c)?;
        println!("{:?}: reduces to {}, class {}", d.coords(), bockstein_reduce(&d), bockquivalence_class(&d));
    }
    Ok(())
}
