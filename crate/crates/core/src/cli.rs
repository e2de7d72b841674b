//! Command execution behind the `h2orbits` binary, kept here so it can be
//! driven and tested without a process boundary.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::aut_oracle::{compare, endomorphism_count, enumerate_aut, generated_automorphisms, orbit_partition_bruteforce, PAIR_LIMIT};
use crate::closed_form::{abelian_sizes, closed_form_table, verdict, Verdict};
use crate::cohomology::{DualElement, HabClass, WedgeClass};
use crate::enumerate::{coverage, tabulate, Coverage, OrbitRow, OrbitTable, PairSpace};
use crate::error::{Error, Result};
use crate::extension::{build_extension, cocycle_from_class, Fingerprint};
use crate::group::GroupType;
use crate::invariants::{classify, InvariantVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Classify,
    Orbits,
    Verify,
    Tables,
    Extension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub p: u64,
    /// Empty means "not given" (only `tables` accepts that).
    pub exponents: Vec<u32>,
    pub output: OutputFormat,
    /// Oracle size guard in pairs; defaults to [`PAIR_LIMIT`].
    pub cap: Option<u128>,
    pub hab: Option<String>,
    pub wedge: Option<String>,
    pub lift: Option<String>,
}

impl RunConfig {
    pub fn new(command: Command, p: u64, exponents: &[u32]) -> Self {
        RunConfig {
            command,
            p,
            exponents: exponents.to_vec(),
            output: OutputFormat::Table,
            cap: None,
            hab: None,
            wedge: None,
            lift: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub status: i32,
    pub output: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub p: u64,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSpec {
    pub hab: Vec<u64>,
    /// Upper coefficients `w_ij`, `i < j`, in lexicographic order.
    pub wedge: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub invariant: InvariantVector,
    pub size: u128,
    pub representative: ClassSpec,
}

/// Machine-readable form of an [`OrbitTable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub group: GroupSpec,
    pub orbits: Vec<OrbitEntry>,
    pub total: u128,
    pub coverage: Coverage,
    pub closed_form: String,
}

impl OrbitReport {
    pub fn new(table: &OrbitTable, coverage: Coverage) -> Self {
        let g = &table.group;
        OrbitReport {
            group: GroupSpec { p: g.p(), exponents: g.exponents().to_vec() },
            orbits: table
                .rows
                .iter()
                .map(|r| OrbitEntry {
                    invariant: r.invariant,
                    size: r.size,
                    representative: ClassSpec {
                        hab: r.representative.0.functional().to_vec(),
                        wedge: r.representative.1.upper().to_vec(),
                    },
                })
                .collect(),
            total: table.total,
            coverage,
            closed_form: verdict(g, &table.sizes()).as_str().to_string(),
        }
    }

    /// Rebuilds the table the report was made from.
    pub fn to_table(&self) -> Result<OrbitTable> {
        let g = GroupType::new(self.group.p, &self.group.exponents)?;
        let to_i64 = |v: &[u64]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
        let rows = self
            .orbits
            .iter()
            .map(|o| {
                Ok(OrbitRow {
                    invariant: o.invariant,
                    representative: (
                        HabClass::new(&g, &to_i64(&o.representative.hab))?,
                        WedgeClass::from_upper(&g, &to_i64(&o.representative.wedge))?,
                    ),
                    size: o.size,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(OrbitTable { group: g, rows, total: self.total })
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::OutsideScope(format!("malformed integer list `{s}`"))))
        .collect()
}

pub fn parse_exponents(s: &str) -> Result<Vec<u32>> {
    parse_ints(s)?
        .into_iter()
        .map(|e| u32::try_from(e).map_err(|_| Error::ZeroExponent))
        .collect()
}

/// Parses `i<j:coef,...` with 1-based indices; `0` or an empty string is the zero wedge.
pub fn parse_wedge(g: &GroupType, s: &str) -> Result<WedgeClass> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(WedgeClass::zero(g));
    }
    let bad = || Error::OutsideScope(format!("malformed wedge spec `{s}`, expected i<j:coef,..."));
    let mut entries = Vec::new();
    for part in s.split(',') {
        let (pair, coef) = part.split_once(':').ok_or_else(bad)?;
        let (i, j) = pair.split_once('<').ok_or_else(bad)?;
        let i: usize = i.trim().parse().map_err(|_| bad())?;
        let j: usize = j.trim().parse().map_err(|_| bad())?;
        let c: i64 = coef.trim().parse().map_err(|_| bad())?;
        if i == 0 || j == 0 || i >= j {
            return Err(bad());
        }
        entries.push((i - 1, j - 1, c));
    }
    WedgeClass::from_entries(g, &entries)
}

fn parse_hab(g: &GroupType, s: Option<&str>) -> Result<HabClass> {
    match s {
        None => Ok(HabClass::zero(g)),
        Some(s) => HabClass::new(g, &parse_ints(s)?),
    }
}

fn group_line(g: &GroupType) -> String {
    let e: Vec<String> = g.exponents().iter().map(|x| x.to_string()).collect();
    format!("G = {}  (p = {}, type {})", g, g.p(), e.join(","))
}

pub fn run(config: &RunConfig) -> RunOutcome {
    match execute(config) {
        Ok(o) => o,
        Err(e) => RunOutcome { status: 2, output: format!("error: {e}\n") },
    }
}

fn execute(config: &RunConfig) -> Result<RunOutcome> {
    if config.command == Command::Tables && config.exponents.is_empty() {
        return tables_all(config);
    }
    let g = GroupType::new(config.p, &config.exponents)?;
    match config.command {
        Command::Classify => run_classify(config, &g),
        Command::Orbits => run_orbits(config, &g),
        Command::Verify => run_verify(config, &g),
        Command::Tables => run_tables(config, &[g]),
        Command::Extension => run_extension(config, &g),
    }
}

fn ok(output: String) -> Result<RunOutcome> {
    Ok(RunOutcome { status: 0, output })
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes") + "\n"
}

fn run_classify(config: &RunConfig, g: &GroupType) -> Result<RunOutcome> {
    let h = parse_hab(g, config.hab.as_deref())?;
    let w = parse_wedge(g, config.wedge.as_deref().unwrap_or(""))?;
    let v = classify(&h, &w)?;
    if config.output == OutputFormat::Json {
        #[derive(Serialize)]
        struct Out<'a> {
            group: GroupSpec,
            class: ClassSpec,
            invariant: &'a InvariantVector,
        }
        return ok(json(&Out {
            group: GroupSpec { p: g.p(), exponents: g.exponents().to_vec() },
            class: ClassSpec { hab: h.functional().to_vec(), wedge: w.upper().to_vec() },
            invariant: &v,
        }));
    }
    ok(format!("{}\nclass h={} w={}\ninvariant {}\n", group_line(g), h, w, v))
}

fn run_orbits(config: &RunConfig, g: &GroupType) -> Result<RunOutcome> {
    let space = PairSpace::new(g)?;
    let (table, _) = tabulate(&space)?;
    let cov = coverage(&space);
    if config.output == OutputFormat::Json {
        return ok(json(&OrbitReport::new(&table, cov)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}", group_line(g));
    let _ = writeln!(out, "{:>4}  {:<36} {:>10}  representative", "#", "invariant", "size");
    for (i, r) in table.rows.iter().enumerate() {
        let _ = writeln!(
            out,
            "{:>4}  {:<36} {:>10}  h={} w={}",
            i + 1,
            r.invariant.to_string(),
            r.size,
            r.representative.0,
            r.representative.1
        );
    }
    let _ = writeln!(out, "{} orbits, {}/{} covered", table.rows.len(), cov.covered, cov.total);
    match (verdict(g, &table.sizes()), closed_form_table(g)) {
        (Verdict::NotApplicable, _) | (_, None) => {
            let _ = writeln!(out, "closed form: n/a");
        }
        (v, Some(cf)) => {
            let _ = writeln!(out, "closed form ({}): {}", cf.case, v.as_str().to_uppercase());
        }
    }
    ok(out)
}

fn run_verify(config: &RunConfig, g: &GroupType) -> Result<RunOutcome> {
    let cap = config.cap.unwrap_or(PAIR_LIMIT as u128);
    let space = PairSpace::new(g)?;
    if space.len() as u128 > cap {
        return Err(Error::CapExceeded { what: "pair space", needed: space.len() as u128, cap });
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}", group_line(g));
    let mut pass = true;
    if endomorphism_count(g) <= cap {
        let all = enumerate_aut(g, cap)?.len();
        let closure = generated_automorphisms(g, all + 1)?.len();
        pass &= all == closure;
        let _ = writeln!(out, "generators: closure {closure}, exhaustive {all}");
    } else {
        let _ = writeln!(out, "generators: exhaustive count skipped ({} endomorphisms > cap)", endomorphism_count(g));
    }
    let oracle = orbit_partition_bruteforce(&space)?;
    let (table, invariant) = tabulate(&space)?;
    let report = compare(&oracle, &invariant);
    pass &= report.identical && table.total == space.len() as u128;
    if config.output == OutputFormat::Json {
        #[derive(Serialize)]
        struct Out {
            group: GroupSpec,
            result: &'static str,
            orbits: usize,
            invariant_classes: usize,
        }
        let o = Out {
            group: GroupSpec { p: g.p(), exponents: g.exponents().to_vec() },
            result: if pass { "pass" } else { "fail" },
            orbits: report.oracle_blocks,
            invariant_classes: report.invariant_blocks,
        };
        return Ok(RunOutcome { status: i32::from(!pass), output: json(&o) });
    }
    let _ = writeln!(out, "{}", report.describe(&space));
    let _ = writeln!(out, "{}, {} orbits", if pass { "PASS" } else { "FAIL" }, report.oracle_blocks);
    Ok(RunOutcome { status: i32::from(!pass), output: out })
}

fn tables_all(config: &RunConfig) -> Result<RunOutcome> {
    let types: [&[u32]; 6] = [&[1, 1], &[1, 2], &[1, 1, 1], &[1, 2, 2], &[1, 1, 2], &[1, 2, 3]];
    let min = if config.p == 2 { 1 } else { 0 };
    let groups = types
        .iter()
        .map(|e| GroupType::new(config.p, &e.iter().map(|x| x + min).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    run_tables(config, &groups)
}

fn run_tables(config: &RunConfig, groups: &[GroupType]) -> Result<RunOutcome> {
    #[derive(Serialize)]
    struct Entry {
        group: GroupSpec,
        case: Option<&'static str>,
        orbits: Option<usize>,
        sizes: Option<Vec<Vec<u128>>>,
        abelian: Option<Vec<u128>>,
    }
    let entries: Vec<Entry> = groups
        .iter()
        .map(|g| {
            let cf = closed_form_table(g);
            Entry {
                group: GroupSpec { p: g.p(), exponents: g.exponents().to_vec() },
                case: cf.as_ref().map(|c| c.case),
                orbits: cf.as_ref().map(|c| c.count()),
                sizes: cf.map(|c| c.groups),
                abelian: abelian_sizes(g),
            }
        })
        .collect();
    if config.output == OutputFormat::Json {
        return ok(json(&entries));
    }
    let mut out = String::new();
    for (g, e) in groups.iter().zip(&entries) {
        let _ = writeln!(out, "{}", group_line(g));
        match (&e.case, &e.sizes) {
            (Some(case), Some(sizes)) => {
                let groups: Vec<String> = sizes
                    .iter()
                    .map(|s| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
                    .collect();
                let _ = writeln!(out, "  case {case}: {} orbits", e.orbits.unwrap_or(0));
                let _ = writeln!(out, "  sizes ({})", groups.join(" | "));
            }
            _ => {
                let _ = writeln!(out, "  no closed form for this rank");
            }
        }
        if let Some(a) = &e.abelian {
            let s: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "  abelian part ({})", s.join(", "));
        }
    }
    ok(out)
}

fn run_extension(config: &RunConfig, g: &GroupType) -> Result<RunOutcome> {
    let h = parse_hab(g, config.hab.as_deref())?;
    let w = parse_wedge(g, config.wedge.as_deref().unwrap_or(""))?;
    let lift = match config.lift.as_deref() {
        Some(s) => DualElement::new(g, &parse_ints(s)?)?,
        None => h.canonical_lift(),
    };
    let e = build_extension(cocycle_from_class(&h, &w, &lift)?)?;
    if config.output == OutputFormat::Json {
        #[derive(Serialize)]
        struct Out<'a> {
            group: GroupSpec,
            order: usize,
            fingerprint: &'a Fingerprint,
            products: Vec<[usize; 3]>,
        }
        let n = e.order();
        let products = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| [a, b, e.mul(a, b)]).collect();
        return ok(json(&Out {
            group: GroupSpec { p: g.p(), exponents: g.exponents().to_vec() },
            order: n,
            fingerprint: &e.fingerprint,
            products,
        }));
    }
    let f = &e.fingerprint;
    let mut out = String::new();
    let _ = writeln!(out, "# {}", group_line(g));
    let _ = writeln!(out, "# class h={} w={}", h, w);
    let hist: Vec<String> = f.order_histogram.iter().map(|(o, c)| format!("{o}:{c}")).collect();
    let _ = writeln!(out, "# orders {}", hist.join(" "));
    let _ = writeln!(out, "# |[E,E]| = {}, |Z(E)| = {}, abelianization {:?}", f.commutator_order, f.center_order, f.abelianization);
    out.push_str(&e.multiplication_table());
    ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_syntax() {
        let g = GroupType::new(3, &[1, 1, 1]).unwrap();
        let w = parse_wedge(&g, "1<2:1,2<3:2").unwrap();
        assert_eq!(w.upper(), &[1, 0, 2]);
        assert!(parse_wedge(&g, "2<1:1").is_err());
        assert!(parse_wedge(&g, "1-2:1").is_err());
        assert!(parse_wedge(&g, "1<4:1").is_err());
        assert!(parse_wedge(&g, "0").unwrap().is_zero());
    }

    #[test]
    fn exponent_syntax() {
        assert_eq!(parse_exponents("1, 2,3").unwrap(), vec![1, 2, 3]);
        assert!(parse_exponents("1,x").is_err());
        assert!(parse_exponents("-1").is_err());
    }

    #[test]
    fn orbits_text() {
        let out = run(&RunConfig::new(Command::Orbits, 3, &[1, 2]));
        assert_eq!(out.status, 0);
        assert!(out.output.contains("6 orbits, 27/27 covered"));
        assert!(out.output.contains("MATCH"));
    }

    #[test]
    fn p_two_needs_exponent_two() {
        let out = run(&RunConfig::new(Command::Orbits, 2, &[1, 2]));
        assert_ne!(out.status, 0);
        assert!(out.output.starts_with("error:"));
    }

    #[test]
    fn report_round_trip() {
        let g = GroupType::new(3, &[1, 1, 2]).unwrap();
        let space = PairSpace::new(&g).unwrap();
        let (table, _) = tabulate(&space).unwrap();
        let r = OrbitReport::new(&table, coverage(&space));
        let text = serde_json::to_string(&r).unwrap();
        let back: OrbitReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_table().unwrap(), table);
    }
}
