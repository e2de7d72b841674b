//! Central extensions `1 -> F_p -> E -> G -> 1` built from explicit cocycles.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::{bockstein_reduce, wedge_factorize, DualElement, HabClass, WedgeClass};
use crate::error::{Error, Result};
use crate::group::{Element, GroupType, Subgroup};

/// Groups up to this order get an exhaustive cocycle check.
const EXHAUSTIVE_LIMIT: usize = 729;
const SAMPLED_TRIPLES: usize = 200_000;

/// A normalized 2-cocycle `G x G -> F_p`, tabulated on element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    group: GroupType,
    size: usize,
    values: Vec<u32>,
}

impl Cocycle {
    pub fn zero(g: &GroupType) -> Self {
        let size = g.order() as usize;
        Cocycle { group: g.clone(), size, values: vec![0; size * size] }
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    #[inline]
    pub fn value(&self, x: usize, y: usize) -> u32 {
        self.values[x * self.size + y]
    }

    /// First triple where `c(y,z) - c(x+y,z) + c(x,y+z) - c(x,y) != 0`.
    pub fn find_violation(&self) -> Option<(usize, usize, usize)> {
        let add = add_table(&self.group);
        let n = self.size;
        let p = self.group.p() as u32;
        let bad = |x: usize, y: usize, z: usize| {
            let xy = add[x * n + y];
            let yz = add[y * n + z];
            !(self.value(y, z) + self.value(x, yz) + 2 * p - self.value(xy, z) - self.value(x, y)).is_multiple_of(p)
        };
        if n <= EXHAUSTIVE_LIMIT {
            (0..n).into_par_iter().find_map_first(|x| {
                (0..n).find_map(|y| (0..n).find(|&z| bad(x, y, z)).map(|z| (x, y, z)))
            })
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed);
            (0..SAMPLED_TRIPLES)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
                .find(|&(x, y, z)| bad(x, y, z))
        }
    }
}

fn add_table(g: &GroupType) -> Vec<usize> {
    let n = g.order() as usize;
    let elems: Vec<Element> = g.elements().collect();
    let mut t = vec![0; n * n];
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            t[i * n + j] = g.index_of(&g.add(x, y));
        }
    }
    t
}

/// Largest group order for which cocycles are tabulated.
pub const TABLE_LIMIT: u128 = 6561;

/// `c(x,y) = carry(x,y) + f(x) g(y)`, where the carry comes from lifting the
/// values of `lift` to `[0, p^n)` and `w = f ^ g`.
pub fn cocycle_from_class(h: &HabClass, w: &WedgeClass, lift: &DualElement) -> Result<Cocycle> {
    let g = h.group();
    if g != w.group() || g != lift.group() {
        return Err(Error::ParentMismatch);
    }
    if &bockstein_reduce(lift) != h {
        return Err(Error::LiftMismatch);
    }
    if g.order() > TABLE_LIMIT {
        return Err(Error::CapExceeded { what: "cocycle table", needed: g.order(), cap: TABLE_LIMIT });
    }
    let p = g.p();
    let pn = g.ring().modulus;
    let cup = if w.is_zero() { None } else { Some(wedge_factorize(w)?) };
    let elems: Vec<Element> = g.elements().collect();
    let lifted: Vec<u64> = elems.iter().map(|x| lift.eval(x)).collect();
    let lin = |v: &[u64], x: &Element| v.iter().zip(&x.coords).map(|(a, b)| a * (b % p)).sum::<u64>() % p;
    let (fx, gx): (Vec<u64>, Vec<u64>) = match &cup {
        Some((f, gg)) => elems.iter().map(|x| (lin(f, x), lin(gg, x))).unzip(),
        None => (vec![0; elems.len()], vec![0; elems.len()]),
    };
    let n = elems.len();
    let mut values = vec![0u32; n * n];
    values.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
        for (j, slot) in row.iter_mut().enumerate() {
            let s = g.index_of(&g.add(&elems[i], &elems[j]));
            let carry = (lifted[i] + lifted[j] - lifted[s]) / pn;
            *slot = ((carry + fx[i] * gx[j]) % p) as u32;
        }
    });
    Ok(Cocycle { group: g.clone(), size: n, values })
}

/// Structural summary used to tell extensions apart.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    /// element order -> number of elements
    pub order_histogram: BTreeMap<u64, u64>,
    pub commutator_order: u64,
    pub center_order: u64,
    /// abelian invariants of `E/[E,E]` as p-exponents
    pub abelianization: Vec<u32>,
}

/// `E = G x F_p` with `(g, m)(g', m') = (g + g', m + m' + c(g, g'))`.
/// Element `(g, m)` has index `index_of(g) * p + m`.
#[derive(Debug, Clone)]
pub struct ExtensionGroup {
    cocycle: Cocycle,
    add: Vec<usize>,
    neg: Vec<usize>,
    pub fingerprint: Fingerprint,
}

impl ExtensionGroup {
    pub fn group(&self) -> &GroupType {
        &self.cocycle.group
    }

    pub fn order(&self) -> usize {
        self.cocycle.size * self.p()
    }

    fn p(&self) -> usize {
        self.cocycle.group.p() as usize
    }

    pub fn split(&self, e: usize) -> (usize, usize) {
        (e / self.p(), e % self.p())
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.p();
        let (g1, m1) = (a / p, a % p);
        let (g2, m2) = (b / p, b % p);
        let g = self.add[g1 * self.cocycle.size + g2];
        g * p + (m1 + m2 + self.cocycle.value(g1, g2) as usize) % p
    }

    pub fn identity(&self) -> usize {
        let p = self.p();
        (p - self.cocycle.value(0, 0) as usize % p) % p
    }

    pub fn inverse(&self, a: usize) -> usize {
        let p = self.p();
        let (g, m) = (a / p, a % p);
        let ng = self.neg[g];
        // m + m' + c(g, -g) = -c(0, 0)
        let c = self.cocycle.value(g, ng) as usize + self.cocycle.value(0, 0) as usize + m;
        ng * p + (p * 3 - c % p) % p
    }

    fn element_order(&self, a: usize) -> u64 {
        let id = self.identity();
        let mut x = a;
        let mut k = 1;
        while x != id {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `(gamma_i, 0)` for each generator of G, plus the central `(0, 1)`.
    fn generators(&self) -> Vec<usize> {
        let g = self.group();
        let p = self.p();
        let mut out: Vec<usize> = (0..g.rank()).map(|i| g.index_of(&g.generator(i)) * p).collect();
        out.push(self.identity() / p * p + (self.identity() + 1) % p);
        out
    }

    fn closure(&self, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = seed.clone();
        set.insert(self.identity());
        loop {
            let cur: Vec<usize> = set.iter().copied().collect();
            let mut grew = false;
            for &a in &cur {
                for &b in seed {
                    if set.insert(self.mul(a, b)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return set;
            }
        }
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inverse(a), self.inverse(b)))
    }

    pub fn is_central(&self, a: usize) -> bool {
        self.generators().iter().all(|&b| self.mul(a, b) == self.mul(b, a))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order()).filter(|&a| self.is_central(a)).collect()
    }

    /// Projection of the center to G.
    pub fn center_image(&self) -> Subgroup {
        let g = self.group();
        let gens: Vec<Element> = self.center().iter().map(|&a| g.element_at(a / self.p())).collect();
        Subgroup::generated(g, &gens)
    }

    /// `[E,E]`: the closure of the set of all commutators.
    pub fn commutator_subgroup(&self) -> BTreeSet<usize> {
        let n = self.order();
        let comms: BTreeSet<usize> = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect::<BTreeSet<usize>>();
        self.closure(&comms)
    }

    fn compute_fingerprint(&self) -> Fingerprint {
        let n = self.order();
        let mut order_histogram = BTreeMap::new();
        for o in (0..n).into_par_iter().map(|a| self.element_order(a)).collect::<Vec<_>>() {
            *order_histogram.entry(o).or_insert(0) += 1;
        }
        let comm = self.commutator_subgroup();
        let center_order = self.center().len() as u64;

        // E/[E,E]: count cosets whose p^k-th power lands in [E,E].
        let p = self.p() as u64;
        let coset_of = |a: usize| comm.iter().map(|&c| self.mul(a, c)).min().unwrap();
        let reps: BTreeSet<usize> = (0..n).map(coset_of).collect();
        let log_orders: Vec<u32> = reps
            .iter()
            .map(|&a| {
                let mut x = a;
                let mut k = 0;
                while !comm.contains(&x) {
                    let mut y = x;
                    for _ in 1..p {
                        y = self.mul(y, x);
                    }
                    x = y;
                    k += 1;
                }
                k
            })
            .collect();
        let top = log_orders.iter().copied().max().unwrap_or(0);
        // s_k = log_p #{x : x^{p^k} = 1}; #{a_i >= k} = s_k - s_{k-1}
        let s: Vec<u32> = (0..=top)
            .map(|k| {
                let c = log_orders.iter().filter(|&&o| o <= k).count() as u64;
                crate::zpn::valuation(c, p, 64)
            })
            .collect();
        let mut abelianization = Vec::new();
        for k in 1..=top as usize {
            let at_least_k = s[k] - s[k - 1];
            let at_least_next = if k < top as usize { s[k + 1] - s[k] } else { 0 };
            for _ in 0..at_least_k - at_least_next {
                abelianization.push(k as u32);
            }
        }
        abelianization.sort_unstable();
        Fingerprint { order_histogram, commutator_order: comm.len() as u64, center_order, abelianization }
    }

    pub fn is_abelian(&self) -> bool {
        self.fingerprint.commutator_order == 1
    }

    /// Plain-text multiplication table: a legend, then one `i j k` line per
    /// product `e_i * e_j = e_k`.
    pub fn multiplication_table(&self) -> String {
        let g = self.group();
        let n = self.order();
        let mut out = String::new();
        let _ = writeln!(out, "# extension of {} by F_{}, order {}", g, g.p(), n);
        let _ = writeln!(out, "# element i = (g; m), g in G, m in F_p");
        for e in 0..n {
            let (gi, m) = self.split(e);
            let _ = writeln!(out, "# {} = ({}; {})", e, g.element_at(gi), m);
        }
        for a in 0..n {
            for b in 0..n {
                let _ = writeln!(out, "{} {} {}", a, b, self.mul(a, b));
            }
        }
        out
    }
}

/// Validates the cocycle identity and assembles the group with its fingerprint.
pub fn build_extension(cocycle: Cocycle) -> Result<ExtensionGroup> {
    if let Some((x, y, z)) = cocycle.find_violation() {
        return Err(Error::CocycleViolation { x, y, z });
    }
    let g = cocycle.group.clone();
    let add = add_table(&g);
    let neg = g.elements().map(|x| g.index_of(&g.neg(&x))).collect();
    let mut e = ExtensionGroup {
        cocycle,
        add,
        neg,
        fingerprint: Fingerprint {
            order_histogram: BTreeMap::new(),
            commutator_order: 0,
            center_order: 0,
            abelianization: vec![],
        },
    };
    e.fingerprint = e.compute_fingerprint();
    Ok(e)
}

/// Convenience: class with its canonical lift straight to the extension.
pub fn extension_of(h: &HabClass, w: &WedgeClass) -> Result<ExtensionGroup> {
    build_extension(cocycle_from_class(h, w, &h.canonical_lift())?)
}
