//! Classify a few classes of H^2(G; F_3) for G = Z/3 + Z/9 + Z/27.

use h2orbits::cohomology::{kernel_m, kernel_t};
use h2orbits::{classify, GroupType, HabClass, WedgeClass};

fn main() -> h2orbits::Result<()> {
    let g = GroupType::new(3, &[1, 2, 3])?;
    let classes = [
        (HabClass::zero(&g), WedgeClass::zero(&g)),
        (HabClass::new(&g, &[0, 1, 0])?, WedgeClass::zero(&g)),
        (HabClass::new(&g, &[0, 1, 0])?, WedgeClass::from_entries(&g, &[(0, 2, 1)])?),
        (HabClass::new(&g, &[1, 0, 2])?, WedgeClass::from_entries(&g, &[(0, 1, 1), (1, 2, 2)])?),
    ];
    for (h, w) in &classes {
        let t = kernel_t(h);
        let m = kernel_m(w)?;
        println!("h={h} w={w}");
        println!("  T = {t} (index {}), M = {m} (index {})", t.index(), m.index());
        println!("  invariant {}", classify(h, w)?);
    }
    Ok(())
}
