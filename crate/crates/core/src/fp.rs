//! Dense linear algebra over F_p with `u64` entries in `[0, p)`.

pub type FpMat = Vec<Vec<u64>>;

pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a % p, p - 2, p)
}

pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Reduced row echelon form; returns (rref, pivot columns).
pub fn rref(m: &FpMat, p: u64) -> (FpMat, Vec<usize>) {
    let mut m: FpMat = m.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(k) = (r..rows).find(|&k| m[k][c] != 0) else { continue };
        m.swap(r, k);
        let s = inv(m[r][c], p);
        m[r].iter_mut().for_each(|x| *x = *x * s % p);
        for k in 0..rows {
            if k != r && m[k][c] != 0 {
                let f = m[k][c];
                let prow = m[r].clone();
                for (x, y) in m[k].iter_mut().zip(prow) {
                    *x = (*x + p * p - f * y) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(m: &FpMat, p: u64) -> usize {
    rref(m, p).1.len()
}

/// Basis of the right null space `{x : m x = 0}` of an `rows x cols` matrix.
pub fn null_space(m: &FpMat, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let (r, pivots) = rref(m, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - r[i][f]) % p;
            }
            v
        })
        .collect()
}

pub fn identity(d: usize) -> FpMat {
    (0..d).map(|i| (0..d).map(|j| u64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &FpMat, b: &FpMat, p: u64) -> FpMat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|t| a[i][t] * b[t][j] % p).sum::<u64>() % p).collect())
        .collect()
}

pub fn transpose(a: &FpMat) -> FpMat {
    if a.is_empty() {
        return vec![];
    }
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

/// Inverse of a square matrix, or `None` when singular.
pub fn mat_inv(a: &FpMat, p: u64) -> Option<FpMat> {
    let d = a.len();
    let aug: FpMat = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<u64> = r.iter().map(|x| x % p).collect();
            row.extend((0..d).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    let (r, pivots) = rref(&aug, p);
    if pivots.len() < d || pivots[d - 1] != d - 1 {
        return None;
    }
    Some(r.into_iter().map(|row| row[d..].to_vec()).collect())
}
