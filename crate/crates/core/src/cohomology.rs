//! Coordinates for the classifiable part of `H^2(G; F_p)`.
//!
//! `V = G/pG` with basis `v_i` (the images of the standard generators).
//! Abelian classes are functionals on `V`, cup-product classes are
//! alternating forms on `V`. Both are acted on by `A = Aut(G) x F_p^*`
//! through the mod-p reduction of an automorphism.

use std::fmt;

use crate::error::{Error, Result};
use crate::fp;
use crate::group::{Element, GroupType, Subgroup};

/// An element `c = sum a_i g*_i` of `Hom(G, C/p^n C)`, where `g*_i` sends the
/// i-th generator to `p^{n - e_i}`. Coordinate `i` lives modulo `p^{e_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualElement {
    group: GroupType,
    coords: Vec<u64>,
}

impl DualElement {
    pub fn new(group: &GroupType, coords: &[i64]) -> Result<Self> {
        let e = group.element(coords)?;
        Ok(DualElement { group: group.clone(), coords: e.coords })
    }

    /// The dual basis element for summand `i`.
    pub fn basis(group: &GroupType, i: usize) -> Self {
        DualElement { group: group.clone(), coords: group.generator(i).coords }
    }

    pub fn zero(group: &GroupType) -> Self {
        DualElement { group: group.clone(), coords: vec![0; group.rank()] }
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// Value on `x` as a residue modulo `p^n`.
    pub fn eval(&self, x: &Element) -> u64 {
        let g = &self.group;
        let ring = g.ring();
        let n = g.n();
        (0..g.rank()).fold(0, |acc, i| {
            let t = ring.mul(ring.mul(self.coords[i], x.coords[i]), g.p().pow(n - g.exponents()[i]));
            ring.add(acc, t)
        })
    }
}

/// Reduces a dual element to its abelian class; the kernel is `pG^`.
pub fn bockstein_reduce(c: &DualElement) -> HabClass {
    let p = c.group.p();
    HabClass { group: c.group.clone(), functional: c.coords.iter().map(|a| a % p).collect() }
}

/// 0 when `c` dies under the Bockstein, otherwise the 1-based index of the
/// largest block carrying a unit coordinate.
pub fn bockquivalence_class(c: &DualElement) -> usize {
    let g = &c.group;
    g.blocks()
        .iter()
        .enumerate()
        .filter(|(_, b)| (b.start..b.start + b.rank).any(|i| !c.coords[i].is_multiple_of(g.p())))
        .map(|(j, _)| j + 1)
        .next_back()
        .unwrap_or(0)
}

/// A functional on `V`, i.e. an element of `Hab(G; F_p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HabClass {
    group: GroupType,
    functional: Vec<u64>,
}

impl HabClass {
    pub fn new(group: &GroupType, functional: &[i64]) -> Result<Self> {
        if functional.len() != group.rank() {
            return Err(Error::Dimension { expected: group.rank(), got: functional.len() });
        }
        let p = group.p() as i64;
        Ok(HabClass {
            group: group.clone(),
            functional: functional.iter().map(|&a| a.rem_euclid(p) as u64).collect(),
        })
    }

    pub fn zero(group: &GroupType) -> Self {
        HabClass { group: group.clone(), functional: vec![0; group.rank()] }
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    pub fn functional(&self) -> &[u64] {
        &self.functional
    }

    pub fn is_zero(&self) -> bool {
        self.functional.iter().all(|&a| a == 0)
    }

    /// Lexicographic index in `0..p^d`.
    pub fn index(&self) -> usize {
        let p = self.group.p() as usize;
        self.functional.iter().fold(0, |acc, &a| acc * p + a as usize)
    }

    pub fn from_index(group: &GroupType, mut idx: usize) -> Self {
        let p = group.p() as usize;
        let mut f = vec![0; group.rank()];
        for slot in f.iter_mut().rev() {
            *slot = (idx % p) as u64;
            idx /= p;
        }
        HabClass { group: group.clone(), functional: f }
    }

    /// Canonical dual element reducing to this class (coordinates in `[0, p)`).
    pub fn canonical_lift(&self) -> DualElement {
        DualElement { group: self.group.clone(), coords: self.functional.clone() }
    }
}

impl fmt::Display for HabClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.functional.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Number of strictly upper entries of a `d x d` matrix.
pub fn pair_count(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

/// Position of `(i, j)`, `i < j`, in the lexicographic list of pairs.
fn pair_slot(d: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < d);
    i * d - i * (i + 1) / 2 + (j - i - 1)
}

/// An alternating form `w = sum_{i<j} w_ij v*_i ^ v*_j` on `V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WedgeClass {
    group: GroupType,
    /// Upper entries in lexicographic `(i, j)` order.
    upper: Vec<u64>,
}

impl WedgeClass {
    pub fn zero(group: &GroupType) -> Self {
        WedgeClass { group: group.clone(), upper: vec![0; pair_count(group.rank())] }
    }

    /// Builds from the lexicographic list of upper coefficients.
    pub fn from_upper(group: &GroupType, upper: &[i64]) -> Result<Self> {
        let want = pair_count(group.rank());
        if upper.len() != want {
            return Err(Error::Dimension { expected: want, got: upper.len() });
        }
        let p = group.p() as i64;
        Ok(WedgeClass { group: group.clone(), upper: upper.iter().map(|&a| a.rem_euclid(p) as u64).collect() })
    }

    /// Builds from sparse `(i, j, coef)` entries; `(j, i, c)` means `(i, j, -c)`.
    pub fn from_entries(group: &GroupType, entries: &[(usize, usize, i64)]) -> Result<Self> {
        let d = group.rank();
        let p = group.p() as i64;
        let mut w = Self::zero(group);
        for &(i, j, c) in entries {
            if i >= d || j >= d || i == j {
                return Err(Error::Dimension { expected: d, got: i.max(j) + 1 });
            }
            let (a, b, c) = if i < j { (i, j, c) } else { (j, i, -c) };
            let s = pair_slot(d, a, b);
            w.upper[s] = (w.upper[s] as i64 + c).rem_euclid(p) as u64;
        }
        Ok(w)
    }

    /// `f ^ g`, with `(f ^ g)_ij = f_i g_j - f_j g_i`.
    pub fn wedge(group: &GroupType, f: &[u64], g: &[u64]) -> Self {
        let d = group.rank();
        let p = group.p();
        let mut upper = Vec::with_capacity(pair_count(d));
        for i in 0..d {
            for j in i + 1..d {
                upper.push((f[i] * g[j] % p + p * p - f[j] * g[i] % p) % p);
            }
        }
        WedgeClass { group: group.clone(), upper }
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    pub fn upper(&self) -> &[u64] {
        &self.upper
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        let p = self.group.p();
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => self.upper[pair_slot(self.group.rank(), i, j)],
            std::cmp::Ordering::Greater => (p - self.upper[pair_slot(self.group.rank(), j, i)]) % p,
        }
    }

    /// The antisymmetric matrix `W` with `W_ij = w_ij`, `W_ji = -w_ij`.
    pub fn matrix(&self) -> fp::FpMat {
        let d = self.group.rank();
        (0..d).map(|i| (0..d).map(|j| self.get(i, j)).collect()).collect()
    }

    fn from_matrix(group: &GroupType, m: &fp::FpMat) -> Self {
        let d = group.rank();
        let mut upper = Vec::with_capacity(pair_count(d));
        for i in 0..d {
            for j in i + 1..d {
                upper.push(m[i][j]);
            }
        }
        WedgeClass { group: group.clone(), upper }
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(|&a| a == 0)
    }

    pub fn rank(&self) -> usize {
        fp::rank(&self.matrix(), self.group.p())
    }

    /// Lexicographic index in `0..p^{d(d-1)/2}`.
    pub fn index(&self) -> usize {
        let p = self.group.p() as usize;
        self.upper.iter().fold(0, |acc, &a| acc * p + a as usize)
    }

    pub fn from_index(group: &GroupType, mut idx: usize) -> Self {
        let p = group.p() as usize;
        let mut upper = vec![0; pair_count(group.rank())];
        for slot in upper.iter_mut().rev() {
            *slot = (idx % p) as u64;
            idx /= p;
        }
        WedgeClass { group: group.clone(), upper }
    }

    /// Renders in the `i<j:coef` syntax (1-based), skipping zero entries.
    pub fn to_spec(&self) -> String {
        let d = self.group.rank();
        let mut parts = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let c = self.get(i, j);
                if c != 0 {
                    parts.push(format!("{}<{}:{}", i + 1, j + 1, c));
                }
            }
        }
        parts.join(",")
    }
}

impl fmt::Display for WedgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}", self.to_spec())
        }
    }
}

pub fn wedge_is_decomposable(w: &WedgeClass) -> bool {
    w.rank() <= 2
}

/// Splits a nonzero decomposable `w` as `f ^ g`, using the first nonzero
/// upper entry `(i, j)`: `f = -row_j / w_ij`, `g = row_i`.
pub fn wedge_factorize(w: &WedgeClass) -> Result<(Vec<u64>, Vec<u64>)> {
    if w.is_zero() {
        return Err(Error::ZeroWedge);
    }
    let rank = w.rank();
    if rank > 2 {
        return Err(Error::NotDecomposable { rank });
    }
    let d = w.group.rank();
    let p = w.group.p();
    let (i, j) = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .find(|&(i, j)| w.get(i, j) != 0)
        .unwrap();
    let m = w.matrix();
    let s = fp::inv(w.get(i, j), p);
    let f: Vec<u64> = m[j].iter().map(|&x| (p - x * s % p) % p).collect();
    let g = m[i].clone();
    Ok((f, g))
}

/// `pi^{-1}(K)` for a subspace `K` of `V` given by a spanning list.
fn preimage(group: &GroupType, basis: &[Vec<u64>]) -> Subgroup {
    let mut gens: Vec<Element> = basis.iter().map(|v| Element { coords: v.clone() }).collect();
    gens.extend(group.p_power_multiple_gens(1));
    Subgroup::generated(group, &gens)
}

/// `T_h = pi^{-1}(ker h)`, or G when `h = 0`.
pub fn kernel_t(h: &HabClass) -> Subgroup {
    if h.is_zero() {
        return Subgroup::whole(&h.group);
    }
    let ker = fp::null_space(&vec![h.functional.clone()], h.group.rank(), h.group.p());
    preimage(&h.group, &ker)
}

/// `M_w = pi^{-1}(ker f n ker g)` for `w = f ^ g`, or G when `w = 0`.
pub fn kernel_m(w: &WedgeClass) -> Result<Subgroup> {
    if w.is_zero() {
        return Ok(Subgroup::whole(&w.group));
    }
    let (f, g) = wedge_factorize(w)?;
    let ker = fp::null_space(&vec![f, g], w.group.rank(), w.group.p());
    Ok(preimage(&w.group, &ker))
}

/// An element `(sigma, lambda)` of `A = Aut(G) x F_p^*`.
///
/// Column `j` of the matrix is `sigma(g_j)`; entry `(i, j)` lives modulo `p^{e_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutElement {
    group: GroupType,
    matrix: Vec<Vec<u64>>,
    lambda: u64,
}

impl AutElement {
    pub fn new(group: &GroupType, matrix: &[Vec<i64>], lambda: i64) -> Result<Self> {
        let d = group.rank();
        if matrix.len() != d {
            return Err(Error::Dimension { expected: d, got: matrix.len() });
        }
        let p = group.p();
        let e = group.exponents();
        let mut m = vec![vec![0u64; d]; d];
        for i in 0..d {
            if matrix[i].len() != d {
                return Err(Error::Dimension { expected: d, got: matrix[i].len() });
            }
            for j in 0..d {
                let v = matrix[i][j].rem_euclid(group.summand_order(i) as i64) as u64;
                let need = e[i].saturating_sub(e[j]);
                if !v.is_multiple_of(p.pow(need)) {
                    return Err(Error::NotEndomorphism { row: i, col: j, need });
                }
                m[i][j] = v;
            }
        }
        let lambda = lambda.rem_euclid(p as i64) as u64;
        if lambda == 0 {
            return Err(Error::ZeroScalar);
        }
        let a = AutElement { group: group.clone(), matrix: m, lambda };
        if a.image_of_generators().index() != 1 {
            return Err(Error::NotInvertible);
        }
        Ok(a)
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts(group: &GroupType, matrix: Vec<Vec<u64>>, lambda: u64) -> Self {
        AutElement { group: group.clone(), matrix, lambda }
    }

    pub fn identity(group: &GroupType) -> Self {
        let d = group.rank();
        let m = (0..d).map(|i| (0..d).map(|j| u64::from(i == j)).collect()).collect();
        AutElement { group: group.clone(), matrix: m, lambda: 1 }
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    /// The subgroup generated by the images of the standard generators.
    pub fn image_of_generators(&self) -> Subgroup {
        let d = self.group.rank();
        let cols: Vec<Element> = (0..d).map(|j| self.apply(&self.group.generator(j))).collect();
        Subgroup::generated(&self.group, &cols)
    }

    pub fn apply(&self, x: &Element) -> Element {
        let g = &self.group;
        let d = g.rank();
        let coords = (0..d)
            .map(|i| {
                let m = g.summand_order(i) as u128;
                ((0..d).map(|j| self.matrix[i][j] as u128 * x.coords[j] as u128 % m).sum::<u128>() % m) as u64
            })
            .collect();
        Element { coords }
    }

    pub fn apply_subgroup(&self, s: &Subgroup) -> Subgroup {
        let gens: Vec<Element> = s.generators().iter().map(|x| self.apply(x)).collect();
        Subgroup::generated(&self.group, &gens)
    }

    /// `self o other`.
    pub fn compose(&self, other: &AutElement) -> Result<AutElement> {
        if self.group != other.group {
            return Err(Error::ParentMismatch);
        }
        let g = &self.group;
        let d = g.rank();
        let matrix = (0..d)
            .map(|i| {
                let m = g.summand_order(i) as u128;
                (0..d)
                    .map(|j| {
                        ((0..d).map(|k| self.matrix[i][k] as u128 * other.matrix[k][j] as u128 % m).sum::<u128>()
                            % m) as u64
                    })
                    .collect()
            })
            .collect();
        Ok(AutElement { group: g.clone(), matrix, lambda: self.lambda * other.lambda % g.p() })
    }

    /// The matrix of `sigma` on `V = G/pG`.
    pub fn reduced(&self) -> fp::FpMat {
        let p = self.group.p();
        self.matrix.iter().map(|r| r.iter().map(|x| x % p).collect()).collect()
    }

    /// The induced linear action on `(h, w)` coordinates.
    pub fn mod_p_action(&self) -> ModPAction {
        let p = self.group.p();
        let sinv = fp::mat_inv(&self.reduced(), p).expect("automorphisms are invertible mod p");
        ModPAction { p, sinv, lambda: self.lambda }
    }
}

/// `S^{-1}` and `lambda` for one element of A, ready to act repeatedly.
#[derive(Debug, Clone)]
pub struct ModPAction {
    p: u64,
    sinv: fp::FpMat,
    lambda: u64,
}

impl ModPAction {
    /// `lambda * h * S^{-1}` as a row vector.
    pub fn hab(&self, h: &[u64]) -> Vec<u64> {
        let p = self.p;
        let d = h.len();
        (0..d)
            .map(|j| (0..d).map(|k| h[k] * self.sinv[k][j] % p).sum::<u64>() % p * self.lambda % p)
            .collect()
    }

    /// `lambda * S^{-T} W S^{-1}`.
    pub fn wedge(&self, w: &fp::FpMat) -> fp::FpMat {
        let p = self.p;
        let t = fp::mat_mul(&fp::transpose(&self.sinv), &fp::mat_mul(w, &self.sinv, p), p);
        t.into_iter().map(|r| r.into_iter().map(|x| x * self.lambda % p).collect()).collect()
    }
}

/// `(sigma, lambda) . (h, w) = (lambda h sigma^{-1}, lambda w (sigma^{-1} x sigma^{-1}))`.
pub fn act(a: &AutElement, h: &HabClass, w: &WedgeClass) -> Result<(HabClass, WedgeClass)> {
    if a.group != h.group || a.group != w.group {
        return Err(Error::ParentMismatch);
    }
    let m = a.mod_p_action();
    let h2 = HabClass { group: h.group.clone(), functional: m.hab(&h.functional) };
    let w2 = WedgeClass::from_matrix(&w.group, &m.wedge(&w.matrix()));
    Ok((h2, w2))
}
