//! Published orbit-size polynomials for two- and three-generated groups.
//!
//! Sizes are kept in the groups in which the formulas are tabulated; only
//! the flattened multiset is compared against computed tables.

use crate::group::GroupType;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub case: &'static str,
    pub groups: Vec<Vec<u128>>,
}

impl ClosedForm {
    pub fn count(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    /// All sizes, sorted.
    pub fn sizes(&self) -> Vec<u128> {
        let mut v: Vec<u128> = self.groups.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn total(&self) -> u128 {
        self.groups.iter().flatten().sum()
    }
}

fn exps3(g: &GroupType) -> Option<(u32, u32, u32)> {
    match g.exponents() {
        [a, b, c] => Some((*a, *b, *c)),
        _ => None,
    }
}

fn to_u128(groups: Vec<Vec<i128>>) -> Vec<Vec<u128>> {
    groups
        .into_iter()
        .map(|v| v.into_iter().map(|x| u128::try_from(x).expect("orbit sizes are positive")).collect())
        .collect()
}

/// Expected orbit sizes on `Hab x im(cup)`, or `None` when no formula is
/// tabulated (rank 1 and rank at least 4).
pub fn closed_form_table(g: &GroupType) -> Option<ClosedForm> {
    let p = g.p() as i128;
    let (p2, p3) = (p * p, p * p * p);
    let (case, groups): (&'static str, Vec<Vec<i128>>) = match g.rank() {
        2 => {
            let e = g.exponents();
            if e[0] == e[1] {
                ("m1=m2", vec![vec![1, p2 - 1], vec![p - 1, (p - 1) * (p2 - 1)]])
            } else {
                ("m1<m2", vec![vec![1, p - 1, p2 - p], vec![p - 1, (p - 1) * (p - 1), (p - 1) * (p2 - p)]])
            }
        }
        3 => {
            let (a, b, c) = exps3(g)?;
            if a == b && b == c {
                (
                    "m1=m2=m3",
                    vec![
                        vec![1, p3 - 1],
                        vec![p3 - 1],
                        vec![(p3 - 1) * (p2 - 1), (p3 - 1) * (p3 - p2)],
                    ],
                )
            } else if a < b && b == c {
                (
                    "m1<m2=m3",
                    vec![
                        vec![1, p - 1, p3 - p],
                        vec![p3 - p, p - 1],
                        vec![(p - 1) * (p2 - 1), (p - 1) * (p - 1), (p - 1) * (p3 - p2 - p + 1)],
                        vec![(p3 - p) * (p2 - p), (p3 - p) * (p - 1), (p3 - p) * (p3 - p2)],
                    ],
                )
            } else if a == b && b < c {
                (
                    "m1=m2<m3",
                    vec![
                        vec![1, p2 - 1, p3 - p2],
                        vec![p3 - p2, p2 - 1],
                        vec![
                            (p2 - 1) * (p2 - p),
                            (p2 - 1) * (p3 - 2 * p2 + p),
                            (p2 - 1) * (p - 1),
                            (p2 - 1) * (p2 - p),
                        ],
                        vec![(p3 - p2) * (p3 - p2), (p3 - p2) * (p2 - 1)],
                    ],
                )
            } else {
                let q = p - 1;
                (
                    "m1<m2<m3",
                    vec![
                        vec![1, q, p2 - p, p3 - p2],
                        vec![p3 - p2, p2 - p, q],
                        vec![q * q * p, q * q * q * p, q * q, q * q * q, q * q],
                        vec![
                            (p2 - p) * (p2 - p),
                            (p2 - p) * (p3 - 2 * p2 + p),
                            (p2 - p) * (p2 - p),
                            (p2 - p) * q,
                        ],
                        vec![(p3 - p2) * (p3 - p2), (p3 - p2) * (p2 - p), (p3 - p2) * q],
                    ],
                )
            }
        }
        _ => return None,
    };
    Some(ClosedForm { case, groups: to_u128(groups) })
}

/// Expected orbit sizes on `Hab` alone for two- and three-generated groups.
pub fn abelian_sizes(g: &GroupType) -> Option<Vec<u128>> {
    let p = g.p() as i128;
    let (p2, p3) = (p * p, p * p * p);
    let v: Vec<i128> = match g.rank() {
        2 => {
            let e = g.exponents();
            if e[0] == e[1] {
                vec![1, p2 - 1]
            } else {
                vec![1, p - 1, p2 - p]
            }
        }
        3 => {
            let (a, b, c) = exps3(g)?;
            if a == b && b == c {
                vec![1, p3 - 1]
            } else if a < b && b == c {
                vec![1, p - 1, p3 - p]
            } else if a == b && b < c {
                vec![1, p2 - 1, p3 - p2]
            } else {
                vec![1, p - 1, p2 - p, p3 - p2]
            }
        }
        _ => return None,
    };
    let mut v: Vec<u128> = v.into_iter().map(|x| x as u128).collect();
    v.sort_unstable();
    Some(v)
}

/// Whether a size multiset agrees with the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::NotApplicable => "n/a",
        }
    }
}

pub fn verdict(g: &GroupType, sizes: &[u128]) -> Verdict {
    match closed_form_table(g) {
        None => Verdict::NotApplicable,
        Some(cf) => {
            let mut s = sizes.to_vec();
            s.sort_unstable();
            if s == cf.sizes() {
                Verdict::Match
            } else {
                Verdict::Mismatch
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(p: u64, e: &[u32]) -> GroupType {
        GroupType::new(p, e).unwrap()
    }

    #[test]
    fn totals_are_full_h2() {
        for (p, e) in [(3u64, &[1u32, 2][..]), (5, &[1, 1]), (2, &[2, 3]), (3, &[1, 1, 1]), (3, &[1, 2, 2]), (5, &[1, 1, 2]), (7, &[1, 2, 3])] {
            let group = g(p, e);
            let d = group.rank() as u32;
            let cf = closed_form_table(&group).unwrap();
            assert_eq!(cf.total(), (p as u128).pow(d + d * (d - 1) / 2), "{p} {e:?}");
        }
    }

    #[test]
    fn counts() {
        assert_eq!(closed_form_table(&g(3, &[1, 2, 2])).unwrap().count(), 11);
        assert_eq!(closed_form_table(&g(3, &[1, 1, 2])).unwrap().count(), 11);
        assert_eq!(closed_form_table(&g(3, &[1, 2, 3])).unwrap().count(), 19);
        assert_eq!(closed_form_table(&g(3, &[1, 1, 1])).unwrap().count(), 5);
    }

    #[test]
    fn evaluated_vectors() {
        let cf = closed_form_table(&g(3, &[1, 2, 2])).unwrap();
        assert_eq!(cf.groups, vec![vec![1, 2, 24], vec![24, 2], vec![16, 4, 32], vec![144, 48, 432]]);
        let cf = closed_form_table(&g(2, &[2, 3])).unwrap();
        assert_eq!(cf.sizes(), vec![1, 1, 1, 1, 2, 2]);
        assert!(closed_form_table(&g(3, &[2])).is_none());
        assert!(closed_form_table(&g(3, &[1, 1, 1, 1])).is_none());
    }

    #[test]
    fn abelian_vectors_sum_to_hab() {
        for e in [&[1u32, 2][..], &[1, 1], &[1, 1, 1], &[1, 2, 2], &[1, 1, 2], &[1, 2, 3]] {
            let group = g(5, e);
            let s = abelian_sizes(&group).unwrap();
            assert_eq!(s.iter().sum::<u128>(), 5u128.pow(group.rank() as u32));
            assert_eq!(s.len(), group.t() + 1);
        }
    }
}
