//! Registered reproduction cases and the JSON-lines report.

use std::fmt::Display;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use dgsym::arith::{factorize, half_exponent_divisor, p_part, ppd, prime_divisors, zsigmondy_has_ppd, FactoredInteger};
use dgsym::catalog::{find, sp6_2};
use dgsym::constructions::{coset_digraph_specs, diagonal_spec, gamma_certificate, gamma_certificate_with_order};
use dgsym::digraph::Digraph;
use dgsym::symmetry::LemValOutcome;
use dgsym::{Bounds, PermutationGroup, Status, SubgroupHandle, Transitivity};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::sweeps;

#[derive(Debug, thiserror::Error)]
pub enum CaseError {
    #[error("unknown case {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Engine(#[from] dgsym::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// One checked statement inside a case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl Claim {
    /// Passes iff the rendered values coincide.
    pub fn equal(description: impl Into<String>, expected: impl Display, actual: impl Display) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Claim {
            description: description.into(),
            status: Status::from_bool(expected == actual),
            expected,
            actual,
            witness: None,
        }
    }

    pub fn with_status(
        description: impl Into<String>,
        expected: impl Display,
        actual: impl Display,
        status: Status,
    ) -> Self {
        Claim {
            description: description.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            status,
            witness: None,
        }
    }

    pub fn witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }
}

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub case_id: String,
    pub claims: Vec<Claim>,
    pub elapsed: Duration,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }
}

type Runner = fn(&Bounds) -> Result<Vec<Claim>, CaseError>;

pub struct CaseInfo {
    pub id: &'static str,
    pub summary: &'static str,
    /// Disabled unless long cases are requested.
    pub long: bool,
    run: Runner,
}

pub const CASES: &[CaseInfo] = &[
    CaseInfo {
        id: "sp6_2_arith",
        summary: "|Sp(6,2)| from bundled generators and its half-exponent divisor",
        long: false,
        run: sp6_2_arith,
    },
    CaseInfo {
        id: "he_divisor",
        summary: "half-exponent divisor of 2^9·3^2·5^2·17",
        long: false,
        run: he_divisor,
    },
    CaseInfo {
        id: "gamma_a5",
        summary: "symbolic certificate for Γ(A5) and its enumeration invariance",
        long: false,
        run: gamma_a5,
    },
    CaseInfo {
        id: "lemval_census",
        summary: "valency lemma over orbital digraphs of primitive groups of degree ≤ 12",
        long: false,
        run: lemval_census,
    },
    CaseInfo {
        id: "coset_criterion_sweep",
        summary: "factorization criterion against brute-force 2-arc-transitivity",
        long: false,
        run: coset_criterion_sweep,
    },
    CaseInfo {
        id: "lemma22_sweep",
        summary: "stabilizer factorization clauses on 2-arc-transitive coset digraphs",
        long: false,
        run: lemma22_sweep,
    },
    CaseInfo {
        id: "rglr_tiny",
        summary: "regular-subgroup hypothesis against brute-force search in G ≀ S2",
        long: false,
        run: rglr_tiny,
    },
    CaseInfo {
        id: "zsigmondy_table",
        summary: "primitive prime divisors against direct search, a ≤ 16, m ≤ 10",
        long: false,
        run: zsigmondy_table,
    },
    CaseInfo {
        id: "product_cycles",
        summary: "C3 × C5 and the s-arc product rule",
        long: false,
        run: product_cycles,
    },
    CaseInfo {
        id: "diagonal_a5_k3",
        summary: "explicit diagonal coset digraph of A5^3 on 3600 vertices",
        long: true,
        run: diagonal_a5_k3,
    },
];

pub fn case_info(id: &str) -> Option<&'static CaseInfo> {
    CASES.iter().find(|c| c.id == id)
}

pub fn run_case(id: &str, bounds: &Bounds) -> Result<CaseResult, CaseError> {
    let info = case_info(id).ok_or_else(|| CaseError::Unknown(id.to_string()))?;
    let start = Instant::now();
    let claims = (info.run)(bounds)?;
    Ok(CaseResult {
        case_id: info.id.to_string(),
        claims,
        elapsed: start.elapsed(),
    })
}

/// Every registered case in registration order.
pub fn run_all(bounds: &Bounds, allow_long: bool) -> Result<Vec<CaseResult>, CaseError> {
    CASES
        .iter()
        .filter(|c| allow_long || !c.long)
        .map(|c| run_case(c.id, bounds))
        .collect()
}

#[derive(Serialize)]
struct ReportLine<'a> {
    case: &'a str,
    claim: &'a str,
    status: Status,
    expected: &'a str,
    actual: &'a str,
    witness: Option<&'a str>,
    elapsed_ms: u128,
}

/// One JSON object per claim.
pub fn report_lines(results: &[CaseResult]) -> Vec<String> {
    results
        .iter()
        .flat_map(|r| {
            r.claims.iter().map(move |c| {
                serde_json::to_string(&ReportLine {
                    case: &r.case_id,
                    claim: &c.description,
                    status: c.status,
                    expected: &c.expected,
                    actual: &c.actual,
                    witness: c.witness.as_deref(),
                    elapsed_ms: r.elapsed.as_millis(),
                })
                .expect("plain data serializes")
            })
        })
        .collect()
}

pub fn emit_report(results: &[CaseResult], out: &mut impl Write) -> io::Result<()> {
    for line in report_lines(results) {
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn sp6_2_arith(_: &Bounds) -> Result<Vec<Claim>, CaseError> {
    let sp = sp6_2()?;
    let order = sp.group.order().clone();
    let n: u64 = order.clone().try_into().unwrap_or(0);
    let f = factorize(n.max(1))?;
    let divisor = half_exponent_divisor(&f);
    Ok(vec![
        Claim::equal("|Sp(6,2)| from the degree-63 generators", 1_451_520, &order),
        Claim::equal("factorization of |Sp(6,2)|", "2^9·3^4·5·7", &f),
        Claim::equal("prime divisors of |Sp(6,2)|", "{2, 3, 5, 7}", format!("{:?}", prime_divisors(n.max(1))?)),
        Claim::equal("2-part of |Sp(6,2)|", 512, p_part(n.max(1), 2)?),
        Claim::equal("half-exponent divisor 2^5·3^2·5·7", 10_080, &divisor)
            .witness(format!("{}", factorize(divisor.try_into().unwrap_or(1))?)),
    ])
}

fn he_divisor(_: &Bounds) -> Result<Vec<Claim>, CaseError> {
    let n = FactoredInteger::from_factors(&[(2, 9), (3, 2), (5, 2), (17, 1)])?;
    let divisor = half_exponent_divisor(&n);
    let as_u64: u64 = divisor.clone().try_into().unwrap_or(1);
    Ok(vec![
        Claim::equal("half-exponent divisor of 2^9·3^2·5^2·17", 8160, &divisor),
        Claim::equal("factored divisor", "2^5·3·5·17", factorize(as_u64)?),
    ])
}

fn gamma_a5(bounds: &Bounds) -> Result<Vec<Claim>, CaseError> {
    let a5 = find("A5")?.group;
    let cert = gamma_certificate(&a5, bounds)?;
    let sixty = big(60);
    let mut claims = vec![
        Claim::equal("k = |T|", 60, cert.k),
        Claim::equal("vertex count |T|^(k-1) = 60^59", sixty.pow(59), &cert.vertex_count),
        Claim::equal("R ∩ D trivial", true, cert.intersection_rd_trivial),
        Claim::equal("|R|·|D| = 60^60", sixty.pow(60), &cert.product_rd_order),
        Claim::equal("T^k = RD", true, cert.product_rd_is_g),
        Claim::equal("diagonal self-intersection |D ∩ D^g|", 1, cert.diag_self_intersection_order),
        Claim::equal("valency |D : D ∩ D^g|", 60, cert.valency),
        Claim::equal("g lies outside D", true, cert.irreflexive),
        Claim::equal("g^-1 lies outside DgD", true, cert.antisymmetric),
    ];
    let elements = a5.element_list(bounds.enumeration)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x60);
    let mut same = 0;
    for _ in 0..10 {
        let mut shuffled = elements.clone();
        shuffled.shuffle(&mut rng);
        if gamma_certificate_with_order(&a5, &shuffled, bounds)? == cert {
            same += 1;
        }
    }
    claims.push(Claim::equal("certificate invariant under 10 random enumerations", 10, same));
    let square = a5.direct_power(2);
    let diag = SubgroupHandle::new(&square, a5.diagonal_subgroup(2).generators().to_vec())?;
    claims.push(Claim::equal("k = 2 analogue: index of D in A5^2", 60, square.index_of(diag.group())));
    claims.push(
        Claim::equal(
            "k = 2 analogue: valid g up to double cosets",
            0,
            coset_digraph_specs(&square, &diag, bounds)?.len(),
        )
        .witness("(1,x)^-1 ∈ D(1,x)D iff x is conjugate to x^-1; every element of A5 is"),
    );
    Ok(claims)
}

fn lemval_census(bounds: &Bounds) -> Result<Vec<Claim>, CaseError> {
    let (groups, records) = sweeps::lemval_census(12, bounds)?;
    let count = |f: fn(&LemValOutcome) -> bool| records.iter().filter(|r| f(&r.outcome)).count();
    let cycles = count(|o| matches!(o, LemValOutcome::PrimeCycle(_)));
    let large = count(|o| matches!(o, LemValOutcome::ValencyAtLeast3(_)));
    let bad: Vec<String> = records
        .iter()
        .filter(|r| matches!(r.outcome, LemValOutcome::Counterexample(_)))
        .map(|r| format!("{} valency {:?}", r.group, r.valency))
        .collect();
    let na = count(|o| matches!(o, LemValOutcome::NotApplicable(_)));
    let valency2 = records.iter().filter(|r| r.valency == Some(2)).count();
    let summary = format!(
        "{groups} groups, {} orbital digraphs: {cycles} prime cycles, {large} of valency ≥ 3",
        records.len()
    );
    Ok(vec![
        Claim::with_status(
            "orbital digraphs examined",
            "> 0",
            records.len(),
            Status::from_bool(!records.is_empty()),
        )
        .witness(summary),
        Claim::equal("counterexamples to the valency lemma", 0, bad.len()).witness(bad.join("; ")),
        Claim::equal("orbital digraphs failing primitivity or arc-transitivity", 0, na),
        Claim::equal("vertex-primitive arc-transitive digraphs of valency 2", 0, valency2),
    ])
}

fn coset_criterion_sweep(bounds: &Bounds) -> Result<Vec<Claim>, CaseError> {
    let sweep = sweeps::criterion_sweep(120, 120, bounds)?;
    let mut claims = Vec::new();
    for name in &sweep.groups {
        let inst: Vec<_> = sweep.instances.iter().filter(|i| &i.group == name).collect();
        let bad: Vec<String> = inst
            .iter()
            .filter(|i| !i.agrees())
            .map(|i| format!("|H|={} g={}", i.subgroup_order, i.g))
            .collect();
        let yes = inst.iter().filter(|i| i.brute == Transitivity::Yes).count();
        claims.push(
            Claim::equal(format!("{name}: criterion = brute force"), 0, bad.len()).witness(if bad.is_empty() {
                format!("{} specs, {yes} 2-arc-transitive", inst.len())
            } else {
                bad.join("; ")
            }),
        );
    }
    let total_bad = sweep.instances.iter().filter(|i| !i.agrees()).count();
    claims.push(
        Claim::equal("all groups of order ≤ 120: discrepancies", 0, total_bad)
            .witness(format!("{} groups, {} specs", sweep.groups.len(), sweep.instances.len())),
    );
    Ok(claims)
}

fn lemma22_sweep(bounds: &Bounds) -> Result<Vec<Claim>, CaseError> {
    let sweep = sweeps::criterion_sweep(120, 120, bounds)?;
    let reports: Vec<_> = sweep
        .instances
        .iter()
        .filter_map(|i| i.lemma.as_ref().map(|l| (i, l)))
        .collect();
    let mut claims = Vec::new();
    for clause in ["a", "b", "c"] {
        let pick = |l: &dgsym::symmetry::PrimeFactnReport| match clause {
            "a" => l.a.clone(),
            "b" => l.b.clone(),
            _ => l.c.clone(),
        };
        let applicable: Vec<_> = reports
            .iter()
            .filter(|(_, l)| pick(l).status != Status::NotApplicable)
            .collect();
        let failed: Vec<String> = applicable
            .iter()
            .filter(|(_, l)| pick(l).status == Status::Fail)
            .map(|(i, l)| format!("{} |H|={} g={}: {}", i.group, i.subgroup_order, i.g, pick(l).witness))
            .collect();
        let status = if applicable.is_empty() {
            Status::Vacuous
        } else {
            Status::from_bool(failed.is_empty())
        };
        let sample = applicable
            .iter()
            .find(|(i, _)| i.subgroup_order > BigUint::from(1u32))
            .map(|(i, l)| format!("e.g. {} |H|={}: {}", i.group, i.subgroup_order, pick(l).witness));
        let witness = if failed.is_empty() {
            sample.unwrap_or_default()
        } else {
            failed.join("; ")
        };
        claims.push(
            Claim::with_status(
                format!("clause ({clause}) on certified connected 2-arc-transitive instances"),
                format!("{0} of {0}", applicable.len()),
                format!("{} of {}", applicable.len() - failed.len(), applicable.len()),
                status,
            )
            .witness(witness),
        );
    }
    let degenerate = reports
        .iter()
        .filter(|(_, l)| l.a.status != Status::NotApplicable && l.c.status == Status::NotApplicable)
        .count();
    claims.push(Claim::with_status(
        "instances with Guv = Gvw, clause (c) not applicable",
        "recorded",
        degenerate,
        Status::NotApplicable,
    ));
    let sp = FactoredInteger::from_factors(&[(2, 9), (3, 4), (5, 1), (7, 1)])?;
    claims.push(Claim::equal(
        "|Gv| = 2^9·3^4·5·7 forces this divisor of |Guv|",
        10_080,
        half_exponent_divisor(&sp),
    ));
    Ok(claims)
}

fn rglr_tiny(bounds: &Bounds) -> Result<Vec<Claim>, CaseError> {
    let b = bounds;
    let mut claims = Vec::new();
    for (name, expected) in [("S3", 9u64), ("C5", 25)] {
        let g = find(name)?.group;
        let r = dgsym::symmetry::lemma_rglr_brute_force(&g, 2, b)?;
        let found = r.regular.as_ref().map(|h| h.order().to_string()).unwrap_or("none".into());
        claims.push(
            Claim::equal(format!("{name} ≀ S2: regular subgroup order"), expected, found)
                .witness(format!("hypothesis holds: {}", r.hypothesis.holds)),
        );
    }
    let sweep = sweeps::rglr_sweep(2, 100, b)?;
    for r in &sweep.records {
        let found = r.regular.as_ref().map(|o| o.to_string()).unwrap_or("none".into());
        claims.push(
            Claim::with_status(
                format!("{} ≀ S2 on {} points", r.group, r.degree * r.degree),
                "no regular subgroup when the hypothesis holds",
                format!("hypothesis {}, regular subgroup {found}", r.hypothesis),
                Status::from_bool(r.consistent),
            )
            .witness(format!(
                "core-free only: {}, all transitive: {}",
                r.hypothesis_core_free, r.hypothesis_all_transitive
            )),
        );
    }
    for (name, why) in &sweep.skipped {
        claims.push(Claim::with_status(format!("{name} ≀ S2"), "within bounds", "skipped", Status::NotApplicable).witness(why));
    }
    let holding: Vec<&str> = sweep.records.iter().filter(|r| r.hypothesis).map(|r| r.group.as_str()).collect();
    let conflicts = sweep.records.iter().filter(|r| !r.consistent).count();
    claims.push(
        Claim::equal("groups passing the hypothesis yet admitting a regular subgroup", 0, conflicts)
            .witness(format!("hypothesis holds for: {}", holding.join(", "))),
    );
    Ok(claims)
}

/// Primitive prime divisors of `a^m - 1` by direct search.
fn direct_ppds(a: u64, m: u32) -> Vec<u64> {
    let target = (a as u128).pow(m) - 1;
    let mut primes = Vec::new();
    let mut rest = target;
    let mut d = 2u128;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            primes.push(d);
            while rest.is_multiple_of(d) {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    primes
        .into_iter()
        .filter(|&r| (1..m).all(|i| ((a as u128).pow(i) - 1) % r != 0))
        .map(|r| r as u64)
        .collect()
}

fn zsigmondy_table(_: &Bounds) -> Result<Vec<Claim>, CaseError> {
    let mut agree = 0;
    let mut bad = Vec::new();
    for a in 2..=16u64 {
        for m in 2..=10u32 {
            if zsigmondy_has_ppd(a, m) == !direct_ppds(a, m).is_empty() {
                agree += 1;
            } else {
                bad.push(format!("({a},{m})"));
            }
        }
    }
    let mut congruence = 0;
    let mut violations = Vec::new();
    for a in (2..=16u64).filter(|&a| dgsym::arith::prime_power(a).is_ok()) {
        let (_, f) = dgsym::arith::prime_power(a)?;
        for m in 2..=10u32 {
            let fm = (f * m) as u64;
            for r in ppd(a, m)? {
                if r % fm == 1 && r > fm {
                    congruence += 1;
                } else {
                    violations.push(format!("ppd({a},{m}) ∋ {r}"));
                }
            }
        }
    }
    let set = |a, m| -> Result<String, CaseError> { Ok(format!("{:?}", ppd(a, m)?)) };
    Ok(vec![
        Claim::equal("zsigmondy_has_ppd = direct search, 2 ≤ a ≤ 16, 2 ≤ m ≤ 10", 135, agree).witness(bad.join(" ")),
        Claim::equal("(7,2) has no primitive prime divisor", false, zsigmondy_has_ppd(7, 2)),
        Claim::equal("(2,6) has no primitive prime divisor", false, zsigmondy_has_ppd(2, 6)),
        Claim::equal("ppd(2,6)", "{7}", set(2, 6)?),
        Claim::equal("ppd(2,4)", "{5}", set(2, 4)?),
        Claim::equal("ppd(4,3)", "{7}", set(4, 3)?),
        Claim::with_status(
            "r ≡ 1 (mod fm) and r > fm for r ∈ ppd(p^f, m), p^f ≤ 16, m ≤ 10",
            "no violations",
            format!("{congruence} primes checked, {} violations", violations.len()),
            Status::from_bool(violations.is_empty() && congruence > 0),
        )
        .witness(violations.join(" ")),
    ])
}

/// A random digraph on `2..=6` vertices: each unordered pair gets no arc or
/// one arc in a random direction.
pub fn random_digraph(rng: &mut impl Rng) -> Digraph {
    let n = rng.gen_range(2..=6);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match rng.gen_range(0..3) {
                0 => arcs.push((u, v)),
                1 => arcs.push((v, u)),
                _ => {}
            }
        }
    }
    Digraph::new(n, &arcs).expect("no loops or 2-cycles by construction")
}

/// Checks of `count(Γ×Σ, s) = count(Γ, s)·count(Σ, s)` for `s ≤ 4` over
/// `pairs` seeded random pairs, each also compared with enumeration.
pub fn product_rule_checks(pairs: usize, seed: u64, bounds: &Bounds) -> dgsym::Result<(usize, Vec<String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut bad = Vec::new();
    for pair in 0..pairs {
        let (x, y) = (random_digraph(&mut rng), random_digraph(&mut rng));
        let p = x.direct_product(&y, bounds)?;
        for s in 0..=4 {
            let lhs = p.count_s_arcs(s);
            let enumerated = p.enumerate_s_arcs(s, bounds)?.len();
            if lhs != x.count_s_arcs(s) * y.count_s_arcs(s) || lhs != BigUint::from(enumerated) {
                bad.push(format!("pair {pair}, s = {s}"));
            }
            checked += 1;
        }
    }
    Ok((checked, bad))
}

fn product_cycles(bounds: &Bounds) -> Result<Vec<Claim>, CaseError> {
    let c15 = Digraph::directed_cycle(3)?.direct_product(&Digraph::directed_cycle(5)?, bounds)?;
    let (checked, bad) = product_rule_checks(50, 15, bounds)?;
    Ok(vec![
        Claim::equal("C3 × C5 has 15 vertices", 15, c15.vertex_count()),
        Claim::equal("C3 × C5 is a directed cycle", true, c15.is_directed_cycle()),
        Claim::equal("s-arc product rule, s ≤ 4, 50 random pairs", 250, checked - bad.len()).witness(bad.join("; ")),
    ])
}

fn diagonal_a5_k3(bounds: &Bounds) -> Result<Vec<Claim>, CaseError> {
    let a5 = find("A5")?.group;
    let elements = a5.element_list(bounds.enumeration)?;
    let one = a5.identity();
    let spec = elements
        .iter()
        .flat_map(|x| elements.iter().map(move |y| (x, y)))
        .find_map(|(x, y)| diagonal_spec(&a5, &[one.clone(), x.clone(), y.clone()]).ok())
        .ok_or_else(|| dgsym::Error::Precondition("no valid g for k = 3".into()))?;
    let built = spec.build(bounds)?;
    let d = built.digraph();
    let rgens: Vec<_> = a5
        .generators()
        .iter()
        .flat_map(|s| [vec![s.clone(), one.clone(), one.clone()], vec![one.clone(), s.clone(), one.clone()]])
        .map(|parts| a5.tuple_element(&parts))
        .collect();
    let images: Vec<_> = rgens
        .iter()
        .map(|r| built.cosets.act(r).expect("element of A5^3"))
        .collect();
    let r = PermutationGroup::new(images)?;
    let two = built.action.is_s_arc_transitive(2, bounds)?;
    Ok(vec![
        Claim::equal("vertex count 60^2", 3600, d.vertex_count()),
        Claim::equal("valency", spec.valency(), d.valency().map_or("irregular".into(), |k| k.to_string())),
        Claim::equal("arc-transitive", "Yes", format!("{:?}", built.action.is_s_arc_transitive(1, bounds)?)),
        Claim::equal("R = A5^2 × 1 acts regularly", true, r.is_regular()),
        Claim::with_status("2-arc-transitive", "recorded", format!("{two:?}"), Status::NotApplicable)
            .witness(format!("g = {}", spec.g())),
    ])
}
