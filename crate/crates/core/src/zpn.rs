//! Arithmetic in Z/p^n and the Howell normal form of row spans over it.
//!
//! `Z/p^n` is a chain ring: every nonzero residue is `p^v * u` with `u` a unit,
//! so a pivot can always be normalized to a pure power of `p`. The Howell
//! form of a generating set is the unique reduced echelon basis of its span
//! in which every "tail" submodule (vectors vanishing on a prefix of columns)
//! is spanned by the rows whose pivot lies in that tail.

/// The ring Z/p^n together with its prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZpRing {
    pub p: u64,
    pub n: u32,
    pub modulus: u64,
}

impl ZpRing {
    pub fn new(p: u64, n: u32) -> Self {
        ZpRing { p, n, modulus: p.pow(n) }
    }

    #[inline]
    pub fn reduce(&self, x: i128) -> u64 {
        x.rem_euclid(self.modulus as i128) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.modulus
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.modulus - b % self.modulus) % self.modulus
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    /// p-adic valuation; the valuation of zero is `n`.
    pub fn valuation(&self, a: u64) -> u32 {
        valuation(a % self.modulus, self.p, self.n)
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self, u: u64) -> u64 {
        debug_assert!(!u.is_multiple_of(self.p));
        let (g, x, _) = ext_gcd(u as i128, self.modulus as i128);
        debug_assert_eq!(g, 1);
        self.reduce(x)
    }
}

/// Valuation of `a` at `p`, capped at `cap` (used for zero).
pub fn valuation(mut a: u64, p: u64, cap: u32) -> u32 {
    if a == 0 {
        return cap;
    }
    let mut v = 0;
    while a.is_multiple_of(p) && v < cap {
        a /= p;
        v += 1;
    }
    v
}

pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Howell normal form of the span of `rows` in `(Z/p^n)^width`.
///
/// Output rows are nonzero, in strict echelon order, each pivot is a power of
/// `p`, and entries above a pivot `p^v` lie in `[0, p^v)`.
pub fn howell_form(ring: &ZpRing, rows: &[Vec<u64>], width: usize) -> Vec<Vec<u64>> {
    let mut pool: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x % ring.modulus).collect::<Vec<_>>())
        .filter(|r: &Vec<u64>| r.iter().any(|&x| x != 0))
        .collect();
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();

    for col in 0..width {
        let best = pool
            .iter()
            .enumerate()
            .filter(|(_, r)| r[col] != 0)
            .min_by_key(|(_, r)| ring.valuation(r[col]))
            .map(|(i, _)| i);
        let Some(idx) = best else { continue };
        let mut pivot = pool.swap_remove(idx);
        let v = ring.valuation(pivot[col]);
        let unit = pivot[col] / ring.p.pow(v);
        let inv = ring.unit_inverse(unit);
        for x in pivot.iter_mut() {
            *x = ring.mul(*x, inv);
        }
        let pv = ring.p.pow(v);
        for r in pool.iter_mut() {
            if r[col] != 0 {
                let q = r[col] / pv;
                for (x, &y) in r.iter_mut().zip(pivot.iter()) {
                    *x = ring.sub(*x, ring.mul(q, y));
                }
            }
        }
        // The annihilator multiple of the pivot row keeps the tail spans complete.
        let shift = ring.p.pow(ring.n - v);
        let tail: Vec<u64> = pivot.iter().map(|&x| ring.mul(x, shift)).collect();
        pool.push(tail);
        pool.retain(|r| r.iter().any(|&x| x != 0));
        basis.push((col, pivot));
    }

    // Reduce entries above each pivot. Later pivots only touch later columns,
    // so a forward sweep leaves earlier reductions intact.
    for i in 0..basis.len() {
        let (col, ref prow) = basis[i];
        let prow = prow.clone();
        let pv = prow[col];
        for j in 0..i {
            let e = basis[j].1[col];
            if e >= pv {
                let q = e / pv;
                for (x, &y) in basis[j].1.iter_mut().zip(prow.iter()) {
                    *x = ring.sub(*x, ring.mul(q, y));
                }
            }
        }
    }
    basis.into_iter().map(|(_, r)| r).collect()
}

/// Column index of the first nonzero entry.
pub fn pivot_col(row: &[u64]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

/// Reduce `v` against a Howell basis. Returns the remainder, which is zero
/// exactly when `v` lies in the span.
pub fn howell_reduce(ring: &ZpRing, basis: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    let mut v: Vec<u64> = v.iter().map(|&x| x % ring.modulus).collect();
    for row in basis {
        let c = pivot_col(row).expect("Howell rows are nonzero");
        let pv = row[c];
        if v[c].is_multiple_of(pv) && v[c] != 0 {
            let q = v[c] / pv;
            for (x, &y) in v.iter_mut().zip(row.iter()) {
                *x = ring.sub(*x, ring.mul(q, y));
            }
        }
    }
    v
}

/// Order of the span of a Howell basis, as an exponent of p.
pub fn howell_log_order(ring: &ZpRing, basis: &[Vec<u64>]) -> u32 {
    basis
        .iter()
        .map(|r| ring.n - ring.valuation(r[pivot_col(r).unwrap()]))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(ring: &ZpRing, rows: &[Vec<u64>], width: usize) -> std::collections::BTreeSet<Vec<u64>> {
        let mut out = std::collections::BTreeSet::new();
        out.insert(vec![0; width]);
        loop {
            let before = out.len();
            let cur: Vec<_> = out.iter().cloned().collect();
            for x in &cur {
                for r in rows {
                    let y: Vec<u64> = x.iter().zip(r).map(|(a, b)| ring.add(*a, *b)).collect();
                    out.insert(y);
                }
            }
            if out.len() == before {
                return out;
            }
        }
    }

    #[test]
    fn valuation_of_zero_is_capped() {
        let r = ZpRing::new(3, 2);
        assert_eq!(r.valuation(0), 2);
        assert_eq!(r.valuation(3), 1);
        assert_eq!(r.valuation(5), 0);
    }

    #[test]
    fn unit_inverse_roundtrip() {
        let r = ZpRing::new(5, 3);
        for u in (1..125).filter(|u| u % 5 != 0) {
            assert_eq!(r.mul(u, r.unit_inverse(u)), 1);
        }
    }

    #[test]
    fn howell_is_canonical_and_sized() {
        let r = ZpRing::new(3, 2);
        let a = vec![vec![3, 1, 0], vec![0, 3, 6]];
        let b = vec![vec![0, 3, 6], vec![3, 1, 0], vec![6, 5, 6]];
        let ha = howell_form(&r, &a, 3);
        let hb = howell_form(&r, &b, 3);
        assert_eq!(ha, hb);
        assert_eq!(3u64.pow(howell_log_order(&r, &ha)), span(&r, &a, 3).len() as u64);
    }

    #[test]
    fn membership_matches_span() {
        let r = ZpRing::new(2, 2);
        let gens = vec![vec![2, 1], vec![0, 2]];
        let basis = howell_form(&r, &gens, 2);
        let s = span(&r, &gens, 2);
        for a in 0..4 {
            for b in 0..4 {
                let inside = howell_reduce(&r, &basis, &[a, b]).iter().all(|&x| x == 0);
                assert_eq!(inside, s.contains(&vec![a, b]), "({a},{b})");
            }
        }
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..20).filter(|&k| is_prime(k)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
