//! Small exact integer matrix routines: row Hermite form and Smith diagonal.

pub type IMat = Vec<Vec<i128>>;

/// Row-style Hermite normal form. Returns the nonzero rows, upper triangular
/// with positive pivots.
pub fn hermite_rows(mut rows: IMat, width: usize) -> IMat {
    let mut out: IMat = Vec::new();
    for col in 0..width {
        loop {
            // Euclid on the column among remaining rows.
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let best = *nz.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            let pivot = rows[best].clone();
            for &i in &nz {
                if i != best {
                    let q = rows[i][col].div_euclid(pivot[col]);
                    for (x, &y) in rows[i].iter_mut().zip(pivot.iter()) {
                        *x -= q * y;
                    }
                }
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| rows[i][col] != 0) {
            let mut r = rows.swap_remove(i);
            if r[col] < 0 {
                r.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(r);
        }
        rows.retain(|r| r.iter().any(|&x| x != 0));
    }
    out
}

/// Diagonal of the Smith normal form (nonzero entries, absolute values),
/// sorted so each divides the next.
pub fn smith_diagonal(mut m: IMat) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pick the smallest nonzero entry in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.is_none_or(|(a, b)| m[i][j].abs() < m[a][b].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for r in m.iter_mut() {
            r.swap(t, bj);
        }
        let mut done = true;
        for i in t + 1..rows {
            let q = m[i][t].div_euclid(m[t][t]);
            if q != 0 {
                let prow = m[t].clone();
                for (x, &y) in m[i].iter_mut().zip(prow.iter()) {
                    *x -= q * y;
                }
            }
            if m[i][t] != 0 {
                done = false;
            }
        }
        for j in t + 1..cols {
            let q = m[t][j].div_euclid(m[t][t]);
            if q != 0 {
                for r in m.iter_mut() {
                    let y = r[t];
                    r[j] -= q * y;
                }
            }
            if m[t][j] != 0 {
                done = false;
            }
        }
        if !done {
            continue;
        }
        // Divisibility fix-up: fold any non-multiple into the pivot row.
        let piv = m[t][t];
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % piv != 0));
        if let Some(i) = bad {
            let r = m[i].clone();
            for (x, y) in m[t].iter_mut().zip(r) {
                *x += y;
            }
            continue;
        }
        diag.push(piv.abs());
        t += 1;
    }
    diag
}

/// Solve `x * upper = target` for an upper-triangular square `upper`
/// (rows as returned by `hermite_rows` with full rank). Requires exact
/// divisibility; returns `None` otherwise.
pub fn solve_left_upper(upper: &IMat, target: &[i128]) -> Option<Vec<i128>> {
    let n = upper.len();
    let mut rem = target.to_vec();
    let mut x = vec![0i128; n];
    for i in 0..n {
        let c = upper[i].iter().position(|&v| v != 0)?;
        if rem[c] % upper[i][c] != 0 {
            return None;
        }
        x[i] = rem[c] / upper[i][c];
        for (r, &u) in rem.iter_mut().zip(upper[i].iter()) {
            *r -= x[i] * u;
        }
    }
    if rem.iter().all(|&v| v == 0) {
        Some(x)
    } else {
        None
    }
}
