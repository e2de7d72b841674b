//! Central extensions of Z/3 + Z/3 and Z/3 + Z/9 by F_3 and their fingerprints.

use h2orbits::cohomology::kernel_m;
use h2orbits::extension::extension_of;
use h2orbits::{GroupType, HabClass, WedgeClass};

fn main() -> h2orbits::Result<()> {
    for e in [&[1u32, 1][..], &[1, 2]] {
        let g = GroupType::new(3, e)?;
        for (h, w) in [
            (HabClass::zero(&g), WedgeClass::zero(&g)),
            (HabClass::new(&g, &[0, 1])?, WedgeClass::zero(&g)),
            (HabClass::zero(&g), WedgeClass::from_entries(&g, &[(0, 1, 1)])?),
            (HabClass::new(&g, &[1, 1])?, WedgeClass::from_entries(&g, &[(0, 1, 2)])?),
        ] {
            let ext = extension_of(&h, &w)?;
            let f = &ext.fingerprint;
            println!("{g}, h={h} w={w}: |E| = {}", ext.order());
            println!("  orders {:?}", f.order_histogram);
            println!("  |[E,E]| = {}, |Z(E)| = {}, E/[E,E] type {:?}", f.commutator_order, f.center_order, f.abelianization);
            if !ext.is_abelian() {
                assert_eq!(ext.center_image(), kernel_m(&w)?);
                println!("  center projects onto M = {}", ext.center_image());
            }
        }
    }
    Ok(())
}
