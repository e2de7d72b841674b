//! Finite abelian p-groups `G = Z/p^{e_1} + ... + Z/p^{e_d}` and their subgroup lattice.
//!
//! Subgroups are stored through the embedding `G -> (Z/p^n)^d` that multiplies
//! coordinate `i` by `p^{n - e_i}`. Inside `(Z/p^n)^d` every submodule has a
//! unique Howell basis, so equality of subgroups is equality of matrices and
//! all lattice operations reduce to one canonicalization routine.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat;
use crate::zpn::{howell_form, howell_log_order, howell_reduce, is_prime, ZpRing};

/// Largest `p^n` we accept; keeps every product inside `u64`/`u128` comfortably.
const MAX_MODULUS: u64 = 1 << 40;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroupType", into = "RawGroupType")]
pub struct GroupType {
    p: u64,
    exponents: Vec<u32>,
    blocks: Vec<Block>,
    ring: ZpRing,
}

/// A maximal run of equal exponents: `rank` summands of order `p^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub exponent: u32,
    pub rank: usize,
    /// index of the first summand of the block
    pub start: usize,
}

#[derive(Serialize, Deserialize)]
struct RawGroupType {
    p: u64,
    exponents: Vec<u32>,
}

impl TryFrom<RawGroupType> for GroupType {
    type Error = Error;
    fn try_from(raw: RawGroupType) -> Result<Self> {
        GroupType::new(raw.p, &raw.exponents)
    }
}

impl From<GroupType> for RawGroupType {
    fn from(g: GroupType) -> Self {
        RawGroupType { p: g.p, exponents: g.exponents }
    }
}

impl GroupType {
    /// Validates `p` and the exponents and sorts the latter.
    pub fn new(p: u64, exponents: &[u32]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if exponents.is_empty() {
            return Err(Error::EmptyType);
        }
        if exponents.contains(&0) {
            return Err(Error::ZeroExponent);
        }
        let mut exponents = exponents.to_vec();
        exponents.sort_unstable();
        if p == 2 && exponents[0] == 1 {
            return Err(Error::TwoTorsionSummand);
        }
        let n = *exponents.last().unwrap();
        let total: u32 = exponents.iter().sum();
        if (n as f64) * (p as f64).log2() > (MAX_MODULUS as f64).log2() || total > 60 {
            return Err(Error::TooLarge { p, total });
        }
        let mut blocks: Vec<Block> = Vec::new();
        for (i, &e) in exponents.iter().enumerate() {
            match blocks.last_mut() {
                Some(b) if b.exponent == e => b.rank += 1,
                _ => blocks.push(Block { exponent: e, rank: 1, start: i }),
            }
        }
        Ok(GroupType { p, exponents, blocks, ring: ZpRing::new(p, n) })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of cyclic summands, d(G).
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// log_p of the exponent of G.
    pub fn n(&self) -> u32 {
        self.ring.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of distinct exponents.
    pub fn t(&self) -> usize {
        self.blocks.len()
    }

    /// Block index (0-based) of summand `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.blocks.iter().position(|b| i < b.start + b.rank).unwrap()
    }

    pub fn ring(&self) -> &ZpRing {
        &self.ring
    }

    /// Order of summand `i`.
    pub fn summand_order(&self, i: usize) -> u64 {
        self.p.pow(self.exponents[i])
    }

    pub fn log_order(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.log_order())
    }

    pub fn zero(&self) -> Element {
        Element { coords: vec![0; self.rank()] }
    }

    /// The i-th standard generator.
    pub fn generator(&self, i: usize) -> Element {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        Element { coords: c }
    }

    /// Builds an element, reducing every coordinate.
    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.rank() {
            return Err(Error::Dimension { expected: self.rank(), got: coords.len() });
        }
        let coords = coords
            .iter()
            .enumerate()
            .map(|(i, &c)| c.rem_euclid(self.summand_order(i) as i64) as u64)
            .collect();
        Ok(Element { coords })
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        let coords = (0..self.rank())
            .map(|i| (x.coords[i] + y.coords[i]) % self.summand_order(i))
            .collect();
        Element { coords }
    }

    pub fn neg(&self, x: &Element) -> Element {
        let coords = (0..self.rank())
            .map(|i| {
                let m = self.summand_order(i);
                (m - x.coords[i]) % m
            })
            .collect();
        Element { coords }
    }

    pub fn scale(&self, k: u64, x: &Element) -> Element {
        let coords = (0..self.rank())
            .map(|i| {
                let m = self.summand_order(i) as u128;
                ((k as u128 % m) * x.coords[i] as u128 % m) as u64
            })
            .collect();
        Element { coords }
    }

    /// Element order as a power of p: `max_i p^{e_i - v_p(x_i)}`.
    pub fn element_order(&self, x: &Element) -> u64 {
        self.p.pow(self.element_log_order(x))
    }

    pub fn element_log_order(&self, x: &Element) -> u32 {
        (0..self.rank())
            .map(|i| {
                let e = self.exponents[i];
                e - crate::zpn::valuation(x.coords[i], self.p, e)
            })
            .max()
            .unwrap_or(0)
    }

    /// Lexicographic index of an element in `0..|G|`.
    pub fn index_of(&self, x: &Element) -> usize {
        x.coords
            .iter()
            .enumerate()
            .fold(0usize, |acc, (i, &c)| acc * self.summand_order(i) as usize + c as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> Element {
        let mut coords = vec![0; self.rank()];
        for i in (0..self.rank()).rev() {
            let m = self.summand_order(i) as usize;
            coords[i] = (idx % m) as u64;
            idx /= m;
        }
        Element { coords }
    }

    /// All elements in index order. Only sensible for small groups.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let total = self.order() as usize;
        (0..total).map(move |i| self.element_at(i))
    }

    pub(crate) fn embed(&self, x: &Element) -> Vec<u64> {
        let n = self.n();
        x.coords
            .iter()
            .zip(&self.exponents)
            .map(|(&c, &e)| c * self.p.pow(n - e))
            .collect()
    }

    pub(crate) fn unembed(&self, v: &[u64]) -> Element {
        let n = self.n();
        let coords = v
            .iter()
            .zip(&self.exponents)
            .map(|(&c, &e)| c / self.p.pow(n - e))
            .collect();
        Element { coords }
    }

    /// Generators of `p^k G`.
    pub fn p_power_multiple_gens(&self, k: u32) -> Vec<Element> {
        (0..self.rank())
            .map(|i| self.scale(self.p.pow(k.min(self.exponents[i])), &self.generator(i)))
            .collect()
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|&e| if e == 1 { format!("Z/{}", self.p) } else { format!("Z/{}^{}", self.p, e) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// An element of G with coordinate `i` reduced modulo `p^{e_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element {
    pub coords: Vec<u64>,
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A subgroup of G in canonical (Howell) form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    group: GroupType,
    rows: Vec<Vec<u64>>,
    log_order: u32,
}

impl Subgroup {
    pub fn generated(group: &GroupType, gens: &[Element]) -> Subgroup {
        let rows: Vec<Vec<u64>> = gens.iter().map(|g| group.embed(g)).collect();
        Self::from_embedded(group, &rows)
    }

    fn from_embedded(group: &GroupType, rows: &[Vec<u64>]) -> Subgroup {
        let rows = howell_form(group.ring(), rows, group.rank());
        let log_order = howell_log_order(group.ring(), &rows);
        Subgroup { group: group.clone(), rows, log_order }
    }

    pub fn whole(group: &GroupType) -> Subgroup {
        let gens: Vec<Element> = (0..group.rank()).map(|i| group.generator(i)).collect();
        Self::generated(group, &gens)
    }

    pub fn trivial(group: &GroupType) -> Subgroup {
        Subgroup { group: group.clone(), rows: vec![], log_order: 0 }
    }

    /// `p^k G`.
    pub fn p_power_multiple(group: &GroupType, k: u32) -> Subgroup {
        Self::generated(group, &group.p_power_multiple_gens(k))
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    /// The canonical matrix, rows in embedded coordinates.
    pub fn canonical_rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Canonical generators as elements of G.
    pub fn generators(&self) -> Vec<Element> {
        self.rows.iter().map(|r| self.group.unembed(r)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn log_order(&self) -> u32 {
        self.log_order
    }

    pub fn order(&self) -> u128 {
        (self.group.p as u128).pow(self.log_order)
    }

    pub fn log_index(&self) -> u32 {
        self.group.log_order() - self.log_order
    }

    /// `|G : S|`.
    pub fn index(&self) -> u128 {
        (self.group.p as u128).pow(self.log_index())
    }

    /// log_p of the exponent of S (0 for the trivial subgroup).
    pub fn log_exponent(&self) -> u32 {
        let ring = self.group.ring();
        self.rows
            .iter()
            .map(|r| ring.n - r.iter().map(|&x| ring.valuation(x)).min().unwrap_or(ring.n))
            .max()
            .unwrap_or(0)
    }

    pub fn contains(&self, x: &Element) -> bool {
        let v = self.group.embed(x);
        howell_reduce(self.group.ring(), &self.rows, &v).iter().all(|&c| c == 0)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.group == other.group
            && self
                .rows
                .iter()
                .all(|r| howell_reduce(other.group.ring(), &other.rows, r).iter().all(|&c| c == 0))
    }

    fn check_parent(&self, other: &Subgroup) -> Result<()> {
        if self.group != other.group {
            Err(Error::ParentMismatch)
        } else {
            Ok(())
        }
    }

    pub fn sum(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_parent(other)?;
        let rows: Vec<Vec<u64>> = self.rows.iter().chain(&other.rows).cloned().collect();
        Ok(Self::from_embedded(&self.group, &rows))
    }

    /// Tail of the Howell form of `[left | right]` rows: the right halves of
    /// rows whose left half vanishes. This is the projection of a kernel.
    fn tail_of(&self, pairs: Vec<Vec<u64>>) -> Subgroup {
        let d = self.group.rank();
        let h = howell_form(self.group.ring(), &pairs, 2 * d);
        let tail: Vec<Vec<u64>> = h
            .into_iter()
            .filter(|r| r[..d].iter().all(|&x| x == 0))
            .map(|r| r[d..].to_vec())
            .collect();
        Self::from_embedded(&self.group, &tail)
    }

    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_parent(other)?;
        let d = self.group.rank();
        let mut pairs = Vec::with_capacity(self.rows.len() + other.rows.len());
        for a in &self.rows {
            let mut r = a.clone();
            r.extend_from_slice(a);
            pairs.push(r);
        }
        for b in &other.rows {
            let mut r = b.clone();
            r.extend(std::iter::repeat_n(0, d));
            pairs.push(r);
        }
        Ok(self.tail_of(pairs))
    }

    /// `S[p^m] = {x in S : p^m x = 0}`, the kernel of multiplication by `p^m`.
    pub fn torsion(&self, m: u32) -> Subgroup {
        let ring = self.group.ring();
        if m >= ring.n {
            return self.clone();
        }
        let pm = self.group.p.pow(m);
        let pairs = self
            .rows
            .iter()
            .map(|a| {
                let mut r: Vec<u64> = a.iter().map(|&x| ring.mul(x, pm)).collect();
                r.extend_from_slice(a);
                r
            })
            .collect();
        self.tail_of(pairs)
    }

    /// Abelian invariants of S as a sorted list of p-exponents.
    pub fn iso_type(&self) -> Vec<u32> {
        let g = &self.group;
        let d = g.rank();
        let mut rows: intmat::IMat = self
            .generators()
            .iter()
            .map(|x| x.coords.iter().map(|&c| c as i128).collect())
            .collect();
        let relations: intmat::IMat = (0..d)
            .map(|i| (0..d).map(|j| if i == j { g.summand_order(i) as i128 } else { 0 }).collect())
            .collect();
        rows.extend(relations.iter().cloned());
        let basis = intmat::hermite_rows(rows, d);
        let rel_in_basis: intmat::IMat = relations
            .iter()
            .map(|r| intmat::solve_left_upper(&basis, r).expect("relations lie in the lattice"))
            .collect();
        let mut out: Vec<u32> = intmat::smith_diagonal(rel_in_basis)
            .into_iter()
            .filter(|&x| x > 1)
            .map(|x| crate::zpn::valuation(x as u64, g.p, 64))
            .collect();
        out.sort_unstable();
        out
    }

    /// All elements of S, in no particular order. Only for small subgroups.
    pub fn elements(&self) -> Vec<Element> {
        let ring = self.group.ring();
        let d = self.group.rank();
        let mut acc: Vec<Vec<u64>> = vec![vec![0; d]];
        for r in &self.rows {
            let c = crate::zpn::pivot_col(r).unwrap();
            let ord = self.group.p.pow(ring.n - ring.valuation(r[c]));
            let mut next = Vec::with_capacity(acc.len() * ord as usize);
            for v in &acc {
                for k in 0..ord {
                    next.push(v.iter().zip(r).map(|(&a, &b)| ring.add(a, ring.mul(k, b))).collect());
                }
            }
            acc = next;
        }
        acc.iter().map(|v| self.group.unembed(v)).collect()
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}
