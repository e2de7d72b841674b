//! Level invariants of subgroup pairs and the orbit invariant of a class.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cohomology::{kernel_m, kernel_t, wedge_is_decomposable, HabClass, WedgeClass};
use crate::error::{Error, Result};
use crate::group::Subgroup;

/// `(l_T(M), L_T(M))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct LevelPair {
    pub lo: u32,
    pub hi: u32,
}

impl From<(u32, u32)> for LevelPair {
    fn from((lo, hi): (u32, u32)) -> Self {
        LevelPair { lo, hi }
    }
}

impl From<LevelPair> for (u32, u32) {
    fn from(l: LevelPair) -> Self {
        (l.lo, l.hi)
    }
}

impl fmt::Display for LevelPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.lo, self.hi)
    }
}

/// `(lL(T), lL(M), lL_T(M), i_T(M))` for `T = T_h`, `M = M_w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(LevelPair, LevelPair, LevelPair, u8)", into = "(LevelPair, LevelPair, LevelPair, u8)")]
pub struct InvariantVector {
    pub hab: LevelPair,
    pub wedge: LevelPair,
    pub relative: LevelPair,
    pub idx: u8,
}

impl From<(LevelPair, LevelPair, LevelPair, u8)> for InvariantVector {
    fn from((hab, wedge, relative, idx): (LevelPair, LevelPair, LevelPair, u8)) -> Self {
        InvariantVector { hab, wedge, relative, idx }
    }
}

impl From<InvariantVector> for (LevelPair, LevelPair, LevelPair, u8) {
    fn from(v: InvariantVector) -> Self {
        (v.hab, v.wedge, v.relative, v.idx)
    }
}

impl fmt::Display for InvariantVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {} | {} | {})", self.hab, self.wedge, self.relative, self.idx)
    }
}

/// T-levels of M: `l = 1 + max{i : T[p^i] <= M n T}` and
/// `L = min{j : T[p^j] + (M n T) = T}`, scanning `0..=log_p exp(T)`.
pub fn levels(t: &Subgroup, m: &Subgroup) -> Result<LevelPair> {
    let mt = m.intersect(t)?;
    let top = t.log_exponent();
    let mut lo = 1;
    let mut hi = None;
    for i in 0..=top {
        let layer = t.torsion(i);
        if layer.is_subgroup_of(&mt) {
            lo = i + 1;
        }
        if hi.is_none() && layer.sum(&mt)?.log_order() == t.log_order() {
            hi = Some(i);
        }
    }
    Ok(LevelPair { lo, hi: hi.expect("T[p^exp] = T") })
}

/// 0 when `M <= T`, else 1. Requires `|G:T| <= p`, `pG <= M` and `|G:M| <= p^2`.
pub fn c_index(t: &Subgroup, m: &Subgroup) -> Result<u8> {
    let g = t.group();
    if t.log_index() > 1 || m.log_index() > 2 || !Subgroup::p_power_multiple(g, 1).is_subgroup_of(m) {
        return Err(Error::IndexPrecondition);
    }
    Ok((m.sum(t)?.log_order() - t.log_order()) as u8)
}

/// The complete orbit invariant of `h + w` for decomposable `w`.
pub fn classify(h: &HabClass, w: &WedgeClass) -> Result<InvariantVector> {
    if h.group() != w.group() {
        return Err(Error::ParentMismatch);
    }
    if !wedge_is_decomposable(w) {
        return Err(Error::OutsideScope(format!(
            "wedge {} has rank {}; only decomposable wedges are classified",
            w,
            w.rank()
        )));
    }
    let whole = Subgroup::whole(h.group());
    let t = kernel_t(h);
    let m = kernel_m(w)?;
    Ok(InvariantVector {
        hab: levels(&whole, &t)?,
        wedge: levels(&whole, &m)?,
        relative: levels(&t, &m)?,
        idx: c_index(&t, &m)?,
    })
}
