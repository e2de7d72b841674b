//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use h2orbits::aut_oracle::{
    classify_without_index, compare, enumerate_aut, generated_automorphisms, orbit_partition_bruteforce,
};
use h2orbits::cohomology::kernel_m;
use h2orbits::enumerate::{orbit_table, tabulate, tabulate_with, OrbitTable, PairSpace};
use h2orbits::extension::extension_of;
use h2orbits::invariants::{c_index, levels};
use h2orbits_acceptance::{abelian_part, rank_three, rank_two_distinct, rank_two_equal};
use h2orbits::{classify, Element, GroupType, HabClass, LevelPair, Subgroup, WedgeClass};

const RANK_TWO_BUDGET: Duration = Duration::from_secs(1);
const RANK_THREE_BUDGET: Duration = Duration::from_secs(10);
const ORACLE_BUDGET: Duration = Duration::from_secs(300);

struct Check {
    pass: bool,
    notes: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check { pass: true, notes: Vec::new() }
    }

    fn expect(&mut self, ok: bool, note: String) {
        self.pass &= ok;
        self.notes.push(format!("{} {}", if ok { "ok  " } else { "FAIL" }, note));
    }
}

fn group(p: u64, e: &[u32]) -> GroupType {
    GroupType::new(p, e).expect("valid group type")
}

fn sorted(mut v: Vec<u128>) -> Vec<u128> {
    v.sort_unstable();
    v
}

fn timed_table(g: &GroupType) -> (OrbitTable, Duration) {
    let start = Instant::now();
    let t = orbit_table(g).expect("table");
    (t, start.elapsed())
}

fn criterion_1() -> Check {
    let mut c = Check::new();
    for (p, e) in [(3u64, [1u32, 2]), (5, [1, 2]), (3, [2, 4]), (2, [2, 3])] {
        let (t, dt) = timed_table(&group(p, &e));
        let want = sorted(rank_two_distinct(p as u128));
        c.expect(
            t.rows.len() == 6 && sorted(t.sizes()) == want && dt < RANK_TWO_BUDGET,
            format!("p={p} {e:?}: {} orbits, sizes {:?}, expected {:?}, {:?}", t.rows.len(), sorted(t.sizes()), want, dt),
        );
    }
    c
}

fn criterion_2() -> Check {
    let mut c = Check::new();
    for (p, e) in [(3u64, [1u32, 1]), (5, [2, 2]), (2, [2, 2])] {
        let (t, dt) = timed_table(&group(p, &e));
        let want = sorted(rank_two_equal(p as u128));
        c.expect(
            t.rows.len() == 4 && sorted(t.sizes()) == want && dt < RANK_TWO_BUDGET,
            format!("p={p} {e:?}: {} orbits, sizes {:?}, expected {:?}, {:?}", t.rows.len(), sorted(t.sizes()), want, dt),
        );
    }
    c
}

fn criterion_3() -> Check {
    let mut c = Check::new();
    for (e, count) in [([1u32, 1, 1], 5usize), ([1, 2, 2], 11), ([1, 1, 2], 11), ([1, 2, 3], 19)] {
        let (t, dt) = timed_table(&group(3, &e));
        let want = sorted(rank_three(3, &e));
        let got = sorted(t.sizes());
        c.expect(
            t.rows.len() == count && t.total == 729 && got == want && dt < RANK_THREE_BUDGET,
            format!("{e:?}: {} orbits (want {count}), total {}, sizes {:?}, expected {:?}, {:?}", t.rows.len(), t.total, got, want, dt),
        );
    }
    c
}

fn criterion_4() -> Check {
    let mut c = Check::new();
    let start = Instant::now();
    for (p, e) in [(3u64, &[1u32, 2][..]), (3, &[1, 1]), (3, &[1, 1, 1]), (2, &[2, 3])] {
        let space = PairSpace::new(&group(p, e)).expect("space");
        let oracle = orbit_partition_bruteforce(&space).expect("oracle");
        let (_, inv) = tabulate(&space).expect("table");
        let r = compare(&oracle, &inv);
        c.expect(r.identical, format!("p={p} {e:?}: {}", r.describe(&space).replace('\n', "; ")));
    }
    let dt = start.elapsed();
    c.expect(dt < ORACLE_BUDGET, format!("total {dt:?}"));
    c
}

fn criterion_5() -> Check {
    let mut c = Check::new();
    for (e, want) in [([1u32, 2], 108usize), ([1, 1], 48)] {
        let g = group(3, &e);
        let all = enumerate_aut(&g, 1_000_000).expect("fits").len();
        let closure = generated_automorphisms(&g, 1 << 20).expect("fits").len();
        c.expect(all == want && closure == want, format!("{e:?}: exhaustive {all}, closure {closure}, expected {want}"));
    }
    c
}

fn around_pg(g: &GroupType, gens: &[&[i64]]) -> Subgroup {
    let mut v: Vec<Element> = gens.iter().map(|x| g.element(x).unwrap()).collect();
    v.extend(g.p_power_multiple_gens(1));
    Subgroup::generated(g, &v)
}

fn lp(lo: u32, hi: u32) -> LevelPair {
    LevelPair { lo, hi }
}

fn criterion_6() -> Check {
    let mut c = Check::new();

    let g = group(3, &[2, 2, 3, 3]);
    let whole = Subgroup::whole(&g);
    let t = around_pg(&g, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    let m = around_pg(&g, &[&[0, 1, 0, 0], &[0, 0, 1, -1]]);
    let got = (levels(&whole, &m).unwrap(), levels(&t, &m).unwrap(), c_index(&t, &m).unwrap());
    c.expect(got == (lp(2, 3), lp(3, 3), 0), format!("type (2,2,3,3): lL {}, lL_T {}, i_c {}", got.0, got.1, got.2));

    let g = group(3, &[1, 2, 3, 4]);
    let whole = Subgroup::whole(&g);
    let t = Subgroup::generated(&g, &[g.generator(1), g.generator(2), g.generator(3)]);
    let m = around_pg(&g, &[&[1, 0, -1, -1], &[0, 1, 0, 0]]);
    let got = (levels(&whole, &m).unwrap(), levels(&t, &m).unwrap(), c_index(&t, &m).unwrap());
    c.expect(got == (lp(1, 3), lp(3, 4), 1), format!("type (1,2,3,4): lL {}, lL_T {}, i_c {}", got.0, got.1, got.2));

    let g = group(3, &[1, 2, 2, 3, 4, 4]);
    let whole = Subgroup::whole(&g);
    let h = HabClass::new(&g, &[0, 1, 0, 0, 0, 0]).unwrap();
    let t = around_pg(&g, &[&[1, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0], &[0, 0, 0, 0, 0, 1]]);
    let m = around_pg(&g, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, -1, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 1]]);
    let m2 = around_pg(&g, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0]]);
    // annihilators of the images of M and M' in G/pG
    let w = WedgeClass::wedge(&g, &[0, 0, 0, 0, 1, 0], &[0, 1, 0, 1, 0, 0]);
    let w2 = WedgeClass::wedge(&g, &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 1]);
    let lm = (levels(&whole, &m).unwrap(), levels(&t, &m).unwrap(), c_index(&t, &m).unwrap());
    let lm2 = (levels(&whole, &m2).unwrap(), levels(&t, &m2).unwrap(), c_index(&t, &m2).unwrap());
    let v = classify(&h, &w).unwrap();
    let v2 = classify(&h, &w2).unwrap();
    c.expect(
        kernel_m(&w).unwrap() == m && kernel_m(&w2).unwrap() == m2 && cohomology_t(&h) == t,
        "six-summand pair: kernels reproduce T, M, M'".into(),
    );
    c.expect(
        lm.0 == lp(2, 4) && lm2.0 == lp(2, 4) && lm.2 == lm2.2 && lm.1 == lp(3, 4) && lm2.1 == lp(2, 4) && v != v2,
        format!("six-summand pair: lL(M) {} lL(M') {}, lL_T(M) {} vs lL_T(M') {}, i_c {}/{}", lm.0, lm2.0, lm.1, lm2.1, lm.2, lm2.2),
    );

    let g = group(3, &[3, 3]);
    let pg = Subgroup::p_power_multiple(&g, 1);
    let whole = Subgroup::whole(&g);
    let got = levels(&whole, &pg).unwrap();
    c.expect(got == lp(3, 3), format!("type (3,3), M = pG: lL {got}"));
    c
}

fn cohomology_t(h: &HabClass) -> Subgroup {
    h2orbits::cohomology::kernel_t(h)
}

fn criterion_7() -> Check {
    let mut c = Check::new();
    let types: [(u64, &[u32]); 11] = [
        (3, &[1, 2]), (5, &[1, 2]), (3, &[2, 4]), (2, &[2, 3]),
        (3, &[1, 1]), (5, &[2, 2]), (2, &[2, 2]),
        (3, &[1, 1, 1]), (3, &[1, 2, 2]), (3, &[1, 1, 2]), (3, &[1, 2, 3]),
    ];
    for (p, e) in types {
        let g = group(p, e);
        let t = orbit_table(&g).unwrap();
        let got = sorted(t.abelian_rows().map(|r| r.size).collect());
        let want = sorted(abelian_part(p as u128, e));
        c.expect(
            got.len() == g.t() + 1 && got == want,
            format!("p={p} {e:?}: {} abelian orbits (t+1 = {}), sizes {:?}, expected {:?}", got.len(), g.t() + 1, got, want),
        );
    }
    c
}

/// Distinct subgroups `T` (index p, containing pG) and `M` (index p^2, containing pG).
fn kernel_pairs(g: &GroupType) -> (Vec<Subgroup>, Vec<Subgroup>) {
    let space = PairSpace::new(g).unwrap();
    let dedup = |it: Vec<Subgroup>| {
        let mut seen = BTreeSet::new();
        it.into_iter().filter(|s| seen.insert(s.canonical_rows().to_vec())).collect::<Vec<_>>()
    };
    let ts = dedup(space.habs.iter().filter(|h| !h.is_zero()).map(cohomology_t).collect());
    let ms = dedup(space.wedges.iter().filter(|w| !w.is_zero()).map(|w| kernel_m(w).unwrap()).collect());
    (ts, ms)
}

fn criterion_8() -> Check {
    let mut c = Check::new();

    // orbit sizes divisible by p - 1
    for (p, e) in [(3u64, &[1u32, 2][..]), (3, &[1, 1, 2]), (3, &[1, 2, 3]), (3, &[2, 2, 3]), (5, &[1, 2]), (5, &[1, 1, 2]), (7, &[1, 1])] {
        let t = orbit_table(&group(p, e)).unwrap();
        let bad: Vec<u128> = t.sizes().into_iter().filter(|&s| s > 1 && s % (p as u128 - 1) != 0).collect();
        let trivial = t.rows.iter().filter(|r| r.size == 1).all(|r| r.representative.0.is_zero() && r.representative.1.is_zero() || p == 2);
        c.expect(bad.is_empty() && trivial, format!("p={p} {e:?}: sizes divisible by p-1"));
    }

    // level chain and the c-index dichotomy over all (T, M) pairs
    for e in [&[1u32, 2][..], &[1, 1, 2], &[2, 2, 3]] {
        let g = group(3, e);
        let whole = Subgroup::whole(&g);
        let (ts, ms) = kernel_pairs(&g);
        let mut chain_ok = true;
        let mut dichotomy_ok = true;
        let mut pairs = 0;
        for t in &ts {
            for m in &ms {
                pairs += 1;
                let LevelPair { lo: l, hi: big_l } = levels(&whole, m).unwrap();
                let LevelPair { lo: lt, hi: big_lt } = levels(t, m).unwrap();
                let inside = m.is_subgroup_of(t);
                let min = big_l.min(big_lt);
                chain_ok &= l <= lt && lt <= min && min == if inside { big_lt } else { big_l };
                if inside {
                    assert_eq!(c_index(t, m).unwrap(), 0);
                    let layer_in_t = whole.torsion(l).is_subgroup_of(t);
                    let lhs = l == lt && lt == big_lt && big_lt < big_l;
                    let rhs = l <= lt && lt == big_lt && big_lt == big_l;
                    dichotomy_ok &= if layer_in_t { lhs } else { rhs };
                }
            }
        }
        c.expect(chain_ok, format!("3 {e:?}: l <= l_T <= min(L, L_T) with the stated min over {pairs} pairs"));
        c.expect(dichotomy_ok, format!("3 {e:?}: i_c = 0 dichotomy"));
    }

    // cocycle identity on every triple, |G| <= 729
    let mut classes: Vec<(HabClass, WedgeClass)> = Vec::new();
    for (p, e) in [(2u64, &[2u32, 2, 3][..]), (5, &[1, 1]), (3, &[1, 1, 2]), (3, &[2, 2])] {
        let t = orbit_table(&group(p, e)).unwrap();
        classes.extend(t.rows.iter().map(|r| r.representative.clone()));
    }
    for e in [&[1u32, 2, 3][..], &[1, 1, 1, 1, 1, 1], &[3, 3]] {
        let g = group(3, e);
        let d = g.rank();
        let unit = |i: usize| (0..d).map(|k| u64::from(k == i)).collect::<Vec<u64>>();
        let h = |i: usize| HabClass::new(&g, &(0..d).map(|k| i64::from(k == i)).collect::<Vec<i64>>()).unwrap();
        let w = WedgeClass::wedge(&g, &unit(0), &unit(d - 1));
        classes.push((h(0), WedgeClass::zero(&g)));
        classes.push((HabClass::zero(&g), w.clone()));
        classes.push((h(d - 1), w));
    }
    let mut broken = Vec::new();
    for (h, w) in &classes {
        if extension_of(h, w).is_err() {
            broken.push(format!("{} h={h} w={w}", h.group()));
        }
    }
    c.expect(broken.is_empty(), format!("cocycle identity on all triples for {} classes {:?}", classes.len(), broken));

    // abelian iff w = 0, and Z(E) projects onto M, for |E| <= 3^5
    let mut nonabelian = 0;
    let mut ok = true;
    for e in [&[1u32][..], &[2], &[3], &[4], &[1, 1], &[1, 2], &[1, 3], &[2, 2], &[1, 1, 1], &[1, 1, 2]] {
        let g = group(3, e);
        let space = PairSpace::new(&g).unwrap();
        for h in &space.habs {
            for w in &space.wedges {
                let ext = extension_of(h, w).unwrap();
                ok &= ext.is_abelian() == w.is_zero();
                ok &= ext.fingerprint.commutator_order == 1 || ext.fingerprint.commutator_order == 3;
                if !ext.is_abelian() {
                    nonabelian += 1;
                    ok &= ext.center_image() == kernel_m(w).unwrap();
                }
            }
        }
    }
    c.expect(ok, format!("abelian iff w = 0; center image = M on {nonabelian} nonabelian extensions"));
    c
}

fn criterion_9() -> Check {
    let mut c = Check::new();
    let space = PairSpace::new(&group(3, &[1, 1])).unwrap();
    let oracle = orbit_partition_bruteforce(&space).unwrap();
    let (_, bad) = tabulate_with(&space, classify_without_index).unwrap();
    let r = compare(&oracle, &bad);
    c.expect(!r.identical && r.witness.is_some(), format!("(3,[1,1]) with idx dropped: {}", r.describe(&space).replace('\n', "; ")));

    let space = PairSpace::new(&group(3, &[1, 1, 1])).unwrap();
    let oracle = orbit_partition_bruteforce(&space).unwrap();
    let (_, bad) = tabulate_with(&space, classify_without_index).unwrap();
    let r = compare(&oracle, &bad);
    c.notes.push(format!(
        "info supplementary control (3,[1,1,1]) with idx dropped: {}",
        r.describe(&space).replace('\n', "; ")
    ));
    c
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("rank two, distinct exponents: 6 orbits with the closed-form sizes", criterion_1),
        ("rank two, equal exponents: 4 orbits with the closed-form sizes", criterion_2),
        ("rank three at p = 3: counts and size multisets", criterion_3),
        ("brute-force orbits equal the invariant partition", criterion_4),
        ("generator closure equals exhaustive automorphism count", criterion_5),
        ("worked level examples", criterion_6),
        ("abelian classes: t+1 orbits with the expected sizes", criterion_7),
        ("property suites", criterion_8),
        ("negative control: dropping idx is detected on (3,[1,1])", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let check = f();
        let status = if check.pass { "PASS" } else { "FAIL" };
        println!("criterion {} {status}: {name} ({:.2?})", i + 1, start.elapsed());
        for n in &check.notes {
            println!("    {n}");
        }
        failed += usize::from(!check.pass);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
