//! Exhaustive enumeration of `Hab x im(cup)` and the invariant histogram.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::aut_oracle::{OrbitPartition, Provenance};
use crate::cohomology::{pair_count, wedge_is_decomposable, HabClass, WedgeClass};
use crate::error::{Error, Result};
use crate::group::GroupType;
use crate::invariants::{classify, InvariantVector};

/// Largest number of raw wedge coefficient vectors we are willing to scan.
const WEDGE_SCAN_LIMIT: u128 = 50_000_000;

pub fn enumerate_hab(g: &GroupType) -> Vec<HabClass> {
    let count = (g.p() as usize).pow(g.rank() as u32);
    (0..count).map(|i| HabClass::from_index(g, i)).collect()
}

/// Every alternating form of rank at most 2, zero first, in index order.
pub fn enumerate_decomposable_wedges(g: &GroupType) -> Result<Vec<WedgeClass>> {
    let raw = (g.p() as u128).pow(pair_count(g.rank()) as u32);
    if raw > WEDGE_SCAN_LIMIT {
        return Err(Error::CapExceeded { what: "wedge scan", needed: raw, cap: WEDGE_SCAN_LIMIT });
    }
    let all: Vec<WedgeClass> = (0..raw as usize)
        .into_par_iter()
        .map(|i| WedgeClass::from_index(g, i))
        .filter(wedge_is_decomposable)
        .collect();
    Ok(all)
}

/// The classifiable pairs, indexed as `hab_index * wedges.len() + wedge_position`.
#[derive(Debug, Clone)]
pub struct PairSpace {
    pub group: GroupType,
    pub habs: Vec<HabClass>,
    pub wedges: Vec<WedgeClass>,
}

impl PairSpace {
    pub fn new(g: &GroupType) -> Result<Self> {
        Ok(PairSpace { group: g.clone(), habs: enumerate_hab(g), wedges: enumerate_decomposable_wedges(g)? })
    }

    pub fn len(&self) -> usize {
        self.habs.len() * self.wedges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pair(&self, idx: usize) -> (&HabClass, &WedgeClass) {
        let nw = self.wedges.len();
        (&self.habs[idx / nw], &self.wedges[idx % nw])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRow {
    pub invariant: InvariantVector,
    pub representative: (HabClass, WedgeClass),
    pub size: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTable {
    pub group: GroupType,
    /// Sorted by invariant vector.
    pub rows: Vec<OrbitRow>,
    pub total: u128,
}

impl OrbitTable {
    pub fn sizes(&self) -> Vec<u128> {
        self.rows.iter().map(|r| r.size).collect()
    }

    /// Rows whose wedge part is zero, i.e. the orbits on `Hab` alone.
    pub fn abelian_rows(&self) -> impl Iterator<Item = &OrbitRow> {
        self.rows.iter().filter(|r| r.representative.1.is_zero())
    }
}

/// `|Hab x im(cup)|` against `|H^2(G; F_p)| = p^{d + d(d-1)/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coverage {
    pub covered: u128,
    pub total: u128,
}

impl Coverage {
    pub fn is_full(&self) -> bool {
        self.covered == self.total
    }
}

pub fn coverage(space: &PairSpace) -> Coverage {
    let g = &space.group;
    let d = g.rank();
    Coverage {
        covered: space.len() as u128,
        total: (g.p() as u128).pow((d + pair_count(d)) as u32),
    }
}

/// Classifies every pair with `classifier`, then groups by invariant.
/// Returns the table and the induced element-level partition.
pub fn tabulate_with<F>(space: &PairSpace, classifier: F) -> Result<(OrbitTable, OrbitPartition)>
where
    F: Fn(&HabClass, &WedgeClass) -> Result<InvariantVector> + Sync,
{
    let keys: Vec<InvariantVector> = (0..space.len())
        .into_par_iter()
        .map(|i| {
            let (h, w) = space.pair(i);
            classifier(h, w)
        })
        .collect::<Result<_>>()?;

    let mut hist: BTreeMap<InvariantVector, (usize, u128)> = BTreeMap::new();
    for (i, k) in keys.iter().enumerate() {
        hist.entry(*k).or_insert((i, 0)).1 += 1;
    }
    let position: BTreeMap<InvariantVector, usize> = hist.keys().enumerate().map(|(r, k)| (*k, r)).collect();
    let rows: Vec<OrbitRow> = hist
        .iter()
        .map(|(k, &(first, size))| {
            let (h, w) = space.pair(first);
            OrbitRow { invariant: *k, representative: (h.clone(), w.clone()), size }
        })
        .collect();
    let labels = keys.iter().map(|k| position[k]).collect();
    let table = OrbitTable { group: space.group.clone(), total: keys.len() as u128, rows };
    Ok((table, OrbitPartition::from_labels(labels, Provenance::Invariant)))
}

pub fn tabulate(space: &PairSpace) -> Result<(OrbitTable, OrbitPartition)> {
    tabulate_with(space, classify)
}

pub fn orbit_table(g: &GroupType) -> Result<OrbitTable> {
    Ok(tabulate(&PairSpace::new(g)?)?.0)
}
