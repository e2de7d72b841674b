//! Ground truth for the orbit partition: generate `A`, act, and search.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::cohomology::{AutElement, HabClass, WedgeClass};
use crate::enumerate::PairSpace;
use crate::error::{Error, Result};
use crate::fp;
use crate::group::GroupType;
use crate::invariants::{classify, InvariantVector};

/// Largest pair space the breadth-first search will materialize.
pub const PAIR_LIMIT: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Oracle,
    Invariant,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Oracle => "oracle",
            Provenance::Invariant => "invariant",
        }
    }
}

/// A partition of a [`PairSpace`], stored as one block label per pair index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    labels: Vec<usize>,
    block_count: usize,
    pub provenance: Provenance,
}

impl OrbitPartition {
    pub fn from_labels(labels: Vec<usize>, provenance: Provenance) -> Self {
        let block_count = labels.iter().copied().max().map_or(0, |m| m + 1);
        OrbitPartition { labels, block_count, provenance }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l].push(i);
        }
        out
    }

    pub fn block_sizes(&self) -> Vec<u128> {
        let mut s = vec![0u128; self.block_count];
        for &l in &self.labels {
            s[l] += 1;
        }
        s.sort_unstable();
        s
    }
}

/// Two pair indices that one side puts together and the other keeps apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub first: usize,
    pub second: usize,
    pub together_in: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    pub identical: bool,
    pub oracle_blocks: usize,
    pub invariant_blocks: usize,
    pub witness: Option<Witness>,
}

impl CompareReport {
    pub fn describe(&self, space: &PairSpace) -> String {
        let mut s = format!(
            "{}: {} oracle orbits, {} invariant classes",
            if self.identical { "PASS" } else { "FAIL" },
            self.oracle_blocks,
            self.invariant_blocks
        );
        if let Some(w) = &self.witness {
            let (h1, w1) = space.pair(w.first);
            let (h2, w2) = space.pair(w.second);
            let other = match w.together_in {
                Provenance::Oracle => Provenance::Invariant,
                Provenance::Invariant => Provenance::Oracle,
            };
            s.push_str(&format!(
                "\nwitness: (h={h1}, w={w1}) and (h={h2}, w={w2}) share a {} block but not an {} block",
                w.together_in.as_str(),
                other.as_str()
            ));
        }
        s
    }
}

fn first_split(a: &OrbitPartition, b: &OrbitPartition) -> Option<(usize, usize)> {
    let mut seen: HashMap<usize, usize> = HashMap::new();
    for (i, (&la, &lb)) in a.labels.iter().zip(&b.labels).enumerate() {
        match seen.get(&la) {
            Some(&j) if b.labels[j] != lb => return Some((j, i)),
            Some(_) => {}
            None => {
                seen.insert(la, i);
            }
        }
    }
    None
}

/// Element-by-element comparison of two partitions of the same pair space.
pub fn compare(oracle: &OrbitPartition, invariant: &OrbitPartition) -> CompareReport {
    assert_eq!(oracle.labels.len(), invariant.labels.len(), "partitions of different spaces");
    let witness = first_split(oracle, invariant)
        .map(|(first, second)| Witness { first, second, together_in: oracle.provenance })
        .or_else(|| {
            first_split(invariant, oracle)
                .map(|(first, second)| Witness { first, second, together_in: invariant.provenance })
        });
    CompareReport {
        identical: witness.is_none(),
        oracle_blocks: oracle.block_count,
        invariant_blocks: invariant.block_count,
        witness,
    }
}

/// Negative control: the full invariant with the index component erased.
pub fn classify_without_index(h: &HabClass, w: &WedgeClass) -> Result<InvariantVector> {
    classify(h, w).map(|v| InvariantVector { idx: 0, ..v })
}

/// A generator of the unit group modulo every power of an odd prime.
fn primitive_root_mod_p2(p: u64) -> u64 {
    let order_is_full = |g: u64| {
        let q = p - 1;
        let mut m = q;
        let mut f = 2;
        let mut factors = Vec::new();
        while f * f <= m {
            if m.is_multiple_of(f) {
                factors.push(f);
                while m.is_multiple_of(f) {
                    m /= f;
                }
            }
            f += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        factors.iter().all(|&r| fp::pow(g, q / r, p) != 1)
    };
    (2..p)
        .find(|&g| order_is_full(g) && {
            let p2 = p * p;
            let mut x = 1u64;
            for _ in 0..p - 1 {
                x = x * g % p2;
            }
            x != 1
        })
        .expect("odd primes have primitive roots")
}

/// Swaps inside blocks, diagonal unit maps, elementary transvections and
/// (for odd p) a generator of the scalar factor.
pub fn aut_generators(g: &GroupType) -> Vec<AutElement> {
    let d = g.rank();
    let p = g.p();
    let e = g.exponents();
    let ident = || -> Vec<Vec<u64>> { (0..d).map(|i| (0..d).map(|j| u64::from(i == j)).collect()).collect() };
    let mut out = Vec::new();

    for b in g.blocks() {
        for k in b.start..b.start + b.rank - 1 {
            let mut m = ident();
            m.swap(k, k + 1);
            out.push(AutElement::from_parts(g, m, 1));
        }
    }

    for i in 0..d {
        let units: Vec<u64> = if p == 2 {
            if e[i] >= 3 {
                vec![g.summand_order(i) - 1, 5]
            } else {
                vec![3]
            }
        } else {
            vec![primitive_root_mod_p2(p) % g.summand_order(i)]
        };
        for u in units {
            let mut m = ident();
            m[i][i] = u;
            out.push(AutElement::from_parts(g, m, 1));
        }
    }

    for i in 0..d {
        for j in 0..d {
            if i != j {
                let mut m = ident();
                m[i][j] = p.pow(e[i].saturating_sub(e[j])) % g.summand_order(i);
                out.push(AutElement::from_parts(g, m, 1));
            }
        }
    }

    if p > 2 {
        out.push(AutElement::from_parts(g, ident(), primitive_root_mod_p2(p) % p));
    }
    out
}

/// Number of endomorphism matrices: `prod_{i,j} p^{min(e_i, e_j)}`.
pub fn endomorphism_count(g: &GroupType) -> u128 {
    let e = g.exponents();
    let log: u32 = e.iter().flat_map(|&a| e.iter().map(move |&b| a.min(b))).sum();
    (g.p() as u128).checked_pow(log).unwrap_or(u128::MAX)
}

/// Every automorphism of G (with scalar 1), by filtering all endomorphisms.
pub fn enumerate_aut(g: &GroupType, cap: u128) -> Result<Vec<AutElement>> {
    let total = endomorphism_count(g);
    if total > cap {
        return Err(Error::CapExceeded { what: "endomorphism enumeration", needed: total, cap });
    }
    let d = g.rank();
    let p = g.p();
    let e = g.exponents();
    // Entry (i, j) runs over multiples of `step` below p^{e_i}.
    let slots: Vec<(usize, usize, u64, u64)> = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .map(|(i, j)| {
            let step = p.pow(e[i].saturating_sub(e[j]));
            (i, j, step, g.summand_order(i) / step)
        })
        .collect();
    let mut out = Vec::new();
    let mut digits = vec![0u64; slots.len()];
    'outer: loop {
        let mut m = vec![vec![0u64; d]; d];
        for (k, &(i, j, step, _)) in slots.iter().enumerate() {
            m[i][j] = digits[k] * step;
        }
        let a = AutElement::from_parts(g, m, 1);
        if a.image_of_generators().index() == 1 {
            out.push(a);
        }
        for k in (0..slots.len()).rev() {
            digits[k] += 1;
            if digits[k] < slots[k].3 {
                continue 'outer;
            }
            digits[k] = 0;
        }
        break;
    }
    Ok(out)
}

/// The automorphism part of the group generated by [`aut_generators`].
pub fn generated_automorphisms(g: &GroupType, cap: usize) -> Result<HashSet<Vec<Vec<u64>>>> {
    let gens: Vec<AutElement> = aut_generators(g)
        .into_iter()
        .map(|a| AutElement::from_parts(g, a.matrix().to_vec(), 1))
        .collect();
    let id = AutElement::identity(g);
    let mut seen: HashSet<Vec<Vec<u64>>> = HashSet::from([id.matrix().to_vec()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = s.compose(&x)?;
            if seen.insert(y.matrix().to_vec()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded { what: "generator closure", needed: seen.len() as u128, cap: cap as u128 });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// Orbits of `A` on the pair space by breadth-first search from every
/// unvisited pair. Labels follow discovery order.
pub fn orbit_partition_bruteforce(space: &PairSpace) -> Result<OrbitPartition> {
    if space.len() > PAIR_LIMIT {
        return Err(Error::CapExceeded { what: "pair space", needed: space.len() as u128, cap: PAIR_LIMIT as u128 });
    }
    let g = &space.group;
    let wedge_pos: HashMap<&[u64], usize> =
        space.wedges.iter().enumerate().map(|(i, w)| (w.upper(), i)).collect();

    let mut hab_perms = Vec::new();
    let mut wedge_perms = Vec::new();
    for a in aut_generators(g) {
        let act = a.mod_p_action();
        hab_perms.push(
            space
                .habs
                .iter()
                .map(|h| HabClass::new(g, &act.hab(h.functional()).iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap().index())
                .collect::<Vec<usize>>(),
        );
        wedge_perms.push(
            space
                .wedges
                .iter()
                .map(|w| {
                    let m = act.wedge(&w.matrix());
                    let upper: Vec<u64> = (0..g.rank()).flat_map(|i| m[i][i + 1..].to_vec()).collect();
                    wedge_pos[upper.as_slice()]
                })
                .collect::<Vec<usize>>(),
        );
    }

    let nw = space.wedges.len();
    let mut labels = vec![usize::MAX; space.len()];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for seed in 0..space.len() {
        if labels[seed] != usize::MAX {
            continue;
        }
        labels[seed] = next;
        queue.push_back(seed);
        while let Some(x) = queue.pop_front() {
            let (hi, wi) = (x / nw, x % nw);
            for (hp, wp) in hab_perms.iter().zip(&wedge_perms) {
                let y = hp[hi] * nw + wp[wi];
                if labels[y] == usize::MAX {
                    labels[y] = next;
                    queue.push_back(y);
                }
            }
        }
        next += 1;
    }
    Ok(OrbitPartition::from_labels(labels, Provenance::Oracle))
}
