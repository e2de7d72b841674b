//! Reference orbit-size polynomials for the acceptance run.
//!
//! Written out independently of `h2orbits::closed_form` so the two can be
//! compared.

pub fn rank_two_distinct(p: u128) -> Vec<u128> {
    vec![1, p - 1, p * p - p, p - 1, (p - 1) * (p - 1), (p - 1) * (p * p - p)]
}

pub fn rank_two_equal(p: u128) -> Vec<u128> {
    vec![1, p * p - 1, p - 1, (p - 1) * (p * p - 1)]
}

pub fn rank_three(p: u128, e: &[u32]) -> Vec<u128> {
    let (p2, p3) = (p * p, p * p * p);
    let q = p - 1;
    match (e[0] == e[1], e[1] == e[2]) {
        (true, true) => vec![1, p3 - 1, p3 - 1, (p3 - 1) * (p2 - 1), (p3 - 1) * (p3 - p2)],
        (false, true) => vec![
            1, q, p3 - p,
            p3 - p, q,
            q * (p2 - 1), q * q, q * (p3 - p2 - p + 1),
            (p3 - p) * (p2 - p), (p3 - p) * q, (p3 - p) * (p3 - p2),
        ],
        (true, false) => vec![
            1, p2 - 1, p3 - p2,
            p3 - p2, p2 - 1,
            (p2 - 1) * (p2 - p), (p2 - 1) * (p3 - 2 * p2 + p), (p2 - 1) * q, (p2 - 1) * (p2 - p),
            (p3 - p2) * (p3 - p2), (p3 - p2) * (p2 - 1),
        ],
        (false, false) => vec![
            1, q, p2 - p, p3 - p2,
            p3 - p2, p2 - p, q,
            q * q * p, q * q * q * p, q * q, q * q * q, q * q,
            (p2 - p) * (p2 - p), (p2 - p) * (p3 - 2 * p2 + p), (p2 - p) * (p2 - p), (p2 - p) * q,
            (p3 - p2) * (p3 - p2), (p3 - p2) * (p2 - p), (p3 - p2) * q,
        ],
    }
}

/// Orbit sizes on the abelian classes alone.
pub fn abelian_part(p: u128, e: &[u32]) -> Vec<u128> {
    let (p2, p3) = (p * p, p * p * p);
    match e.len() {
        2 if e[0] == e[1] => vec![1, p2 - 1],
        2 => vec![1, p - 1, p2 - p],
        3 => match (e[0] == e[1], e[1] == e[2]) {
            (true, true) => vec![1, p3 - 1],
            (false, true) => vec![1, p - 1, p3 - p],
            (true, false) => vec![1, p2 - 1, p3 - p2],
            (false, false) => vec![1, p - 1, p2 - p, p3 - p2],
        },
        _ => unreachable!(),
    }
}
