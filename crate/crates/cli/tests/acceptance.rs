//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use degpow::constructions::{friendship, girth5_almost_regular, h_prime};
use degpow::{
    biex, canonical_form, contains_subgraph, decomposition_family, degree_power_sum, search_max,
    star_weights, subgraph_count, verify_claim, CatalogId, Claim, Engine, ForbiddenFamily, Graph,
    Objective, SearchOptions, Verdict,
};
use degpow_cli::{check_identity, run};
use num_bigint::BigUint;
use serde_json::Value;

const IDENTITY_BUDGET: Duration = Duration::from_secs(60);
const KIN_BUDGET: Duration = Duration::from_secs(300);
const IDENTITY_SEED: u64 = 20_240_601;
const RANDOM_GRAPHS: usize = 1000;
const RANDOM_MAX_ORDER: usize = 20;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cat(name: &str) -> Graph {
    name.parse::<CatalogId>().unwrap().build().unwrap()
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn weight_identity() -> Outcome {
    let start = Instant::now();
    let report = check_identity(
        7,
        6,
        true,
        RANDOM_GRAPHS,
        RANDOM_MAX_ORDER,
        IDENTITY_SEED,
        &opts(),
    )
    .map_err(|e| e.to_string())?;
    ensure(report.failures.is_empty(), || {
        format!(
            "{} failures among classes and random graphs",
            report.failures.len()
        )
    })?;
    ensure(report.classes >= 1044, || {
        format!("only {} classes", report.classes)
    })?;

    let weights: Vec<_> = (1..=6).map(|r| star_weights(r).unwrap()).collect();
    let mut labelled = 0u64;
    for n in 0..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            for w in &weights {
                let lhs = degree_power_sum(&g, w.r()).unwrap();
                ensure(lhs == w.weighted_star_sum(&g), || {
                    format!("identity fails on {g} for r = {}", w.r())
                })?;
            }
            labelled += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < IDENTITY_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} classes on <= 7 vertices, {labelled} labelled graphs on <= 5 vertices, {} random graphs on <= {RANDOM_MAX_ORDER} vertices, r = 1..6, {elapsed:.1?}",
        report.classes, report.random
    ))
}

fn surjections(r: u32, p: u32) -> u64 {
    let total = (p as u64).pow(r);
    (0..total)
        .filter(|&code| {
            let mut hit = 0u64;
            let mut c = code;
            for _ in 0..r {
                hit |= 1 << (c % p as u64);
                c /= p as u64;
            }
            hit.count_ones() == p
        })
        .count() as u64
}

fn weight_values() -> Outcome {
    for r in 1..=7 {
        let w = star_weights(r).map_err(|e| e.to_string())?;
        for p in 1..=r {
            let want = BigUint::from(surjections(r, p));
            ensure(w.get(p) == Some(&want), || {
                format!("w_{p} for r = {r} is {:?}, expected {want}", w.get(p))
            })?;
        }
    }
    for r in 1..=20 {
        let w = star_weights(r).map_err(|e| e.to_string())?;
        ensure(w.get(1) == Some(&BigUint::from(1u8)), || {
            format!("w_1 != 1 for r = {r}")
        })?;
    }
    Ok("w_p equals surjection counts for r <= 7; w_1 = 1 for r <= 20".into())
}

fn claim_matrix(claim: Claim, ns: &[usize], rs: &[u32]) -> Result<(u64, Duration), String> {
    let mut checked = 0;
    let mut slowest = Duration::ZERO;
    for &n in ns {
        for &r in rs {
            let start = Instant::now();
            let report = verify_claim(claim, n, r, &opts()).map_err(|e| e.to_string())?;
            slowest = slowest.max(start.elapsed());
            ensure(report.verdict == Verdict::Pass, || {
                let first = report.counterexamples.first().map(|g| g.to_string());
                format!("{claim} fails at n = {n}, r = {r}: {first:?}")
            })?;
            checked += report.checked;
        }
    }
    Ok((checked, slowest))
}

fn sparse_c4_free() -> Outcome {
    let (checked, slowest) = claim_matrix(Claim::Kin, &[5, 6, 7], &[2, 3, 4, 5])?;
    ensure(slowest < KIN_BUDGET, || {
        format!("slowest run took {slowest:?}")
    })?;
    let out = run([
        "degpow", "--format", "json", "verify", "kin", "--n", "6", "--r", "4",
    ]);
    ensure(out.code == 0, || {
        format!("cli exit {}: {}", out.code, out.stderr)
    })?;
    let json: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    ensure(json["e_4(F_6)"] == "690", || {
        format!("cli reported {}", json["e_4(F_6)"])
    })?;
    Ok(format!(
        "{checked} graph checks, zero counterexamples, slowest {slowest:.1?}"
    ))
}

fn c4_free_inequality() -> Outcome {
    let ns: Vec<usize> = (1..=7).collect();
    let (checked, _) = claim_matrix(Claim::StarsI, &ns, &[2, 3, 4])?;
    Ok(format!(
        "{checked} graph checks for n <= 7, r = 2..4, zero counterexamples"
    ))
}

fn star_counts_c4_free() -> Outcome {
    let mut values = Vec::new();
    for n in [5, 6, 7] {
        for r in [2, 3] {
            let report =
                verify_claim(Claim::PropSmall, n, r, &opts()).map_err(|e| e.to_string())?;
            ensure(report.verdict == Verdict::Pass, || {
                format!("optimum differs from the friendship graph at n = {n}, r = {r}")
            })?;
            values.push(format!(
                "n={n},r={r}:{}",
                report.fact(&format!("ex({n},S_{r},C4)")).unwrap_or("?")
            ));
        }
    }
    Ok(values.join(" "))
}

fn turan_baseline() -> Outcome {
    for n in 1..=8 {
        let report =
            verify_claim(Claim::TuranBaseline, n, 1, &opts()).map_err(|e| e.to_string())?;
        ensure(report.verdict == Verdict::Pass, || {
            format!(
                "ex({n},K3) = {:?} or T({n},2) missing",
                report.fact(&format!("ex({n},K3)"))
            )
        })?;
    }
    let mut witnesses = 0;
    for n in 1..=7 {
        let report =
            verify_claim(Claim::TuranBaseline, n, 2, &opts()).map_err(|e| e.to_string())?;
        ensure(report.verdict == Verdict::Pass, || {
            format!("non-multipartite ex_2 witness at n = {n}")
        })?;
        witnesses += report
            .fact("witnesses")
            .and_then(|w| w.parse::<usize>().ok())
            .unwrap_or(0);
    }
    Ok(format!(
        "ex(n,K3) = floor(n^2/4) with T(n,2) extremal for n <= 8; all {witnesses} ex_2(n,K3) witnesses for n <= 7 are complete multipartite"
    ))
}

fn biex_values() -> Outcome {
    let c5 = cat("cycle:5");
    let k4 = cat("clique:4");
    let k3 = cat("clique:3");
    let bowtie = cat("book:3");
    for n in 2..=7 {
        for (f, name, want) in [(&c5, "C5", 0u32), (&k4, "K4", 0), (&bowtie, "B31", 1)] {
            let res = biex(n, f, &opts()).map_err(|e| e.to_string())?;
            ensure(res.optimum == BigUint::from(want), || {
                format!("biex({n},{name}) = {}, expected {want}", res.optimum)
            })?;
        }
    }
    let k2 = vec![canonical_form(&cat("clique:2"))];
    for (f, name) in [(&c5, "C5"), (&k3, "K3")] {
        let fam = decomposition_family(f, true).map_err(|e| e.to_string())?;
        ensure(fam.into_vec() == k2, || {
            format!("family of {name} is not {{K2}}")
        })?;
    }
    let p3 = canonical_form(&cat("path:3"));
    let matching = canonical_form(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
    let mut want = vec![p3, matching];
    want.sort();
    let fam = decomposition_family(&bowtie, true).map_err(|e| e.to_string())?;
    ensure(fam.into_vec() == want, || {
        "family of B31 is not {P3, 2K2}".into()
    })?;
    Ok("biex(n,C5) = biex(n,K4) = 0 and biex(n,B31) = 1 for 2 <= n <= 7; families {K2}, {K2}, {P3, 2K2}".into())
}

fn constructions() -> Outcome {
    let mut built = 0;
    for (s, t) in [(2, 2), (2, 3), (3, 3)] {
        let kst = cat(&format!("complete_bipartite:{s},{t}"));
        // The girth-5 part needs n - s + 1 >= 5 vertices once t >= 3.
        let first = if t >= 3 { s + 4 } else { s };
        for n in s..=40 {
            match h_prime(s, t, n, 0) {
                Ok(g) => {
                    ensure(g.order() == n, || {
                        format!("H'({s},{t},{n}) has wrong order")
                    })?;
                    ensure(!contains_subgraph(&kst, &g), || {
                        format!("H'({s},{t},{n}) contains K_{{{s},{t}}}")
                    })?;
                    built += 1;
                }
                Err(e) => ensure(n < first, || format!("H'({s},{t},{n}): {e}"))?,
            }
        }
    }

    let c3 = cat("cycle:3");
    let c4 = cat("cycle:4");
    let mut girth = 0;
    for d in 1..=3usize {
        let smallest = [0, 2, 5, 10][d];
        for m in 1..=40usize {
            let g = match girth5_almost_regular(m, d, 0) {
                Ok(g) => g,
                Err(e) => {
                    ensure(m < smallest, || format!("girth-5 graph ({m},{d}): {e}"))?;
                    continue;
                }
            };
            ensure(
                subgraph_count(&c3, &g).0 == BigUint::ZERO
                    && subgraph_count(&c4, &g).0 == BigUint::ZERO,
                || format!("girth-5 graph ({m},{d}) has a short cycle"),
            )?;
            let mut want = vec![d; m];
            if m * d % 2 == 1 {
                want[m - 1] = d - 1;
            }
            ensure(g.degree_sequence().as_slice() == want.as_slice(), || {
                format!(
                    "girth-5 graph ({m},{d}) has degrees {}",
                    g.degree_sequence()
                )
            })?;
            girth += 1;
        }
    }

    for n in 2..=40 {
        let a = canonical_form(&h_prime(2, 2, n, 0).map_err(|e| e.to_string())?);
        let b = canonical_form(&friendship(n).map_err(|e| e.to_string())?);
        ensure(a == b, || {
            format!("H'(1,1,{n}) is not the friendship graph")
        })?;
    }
    Ok(format!(
        "{built} H' graphs K_(s,t)-free, {girth} girth-5 graphs with exact degrees, H'(1,1,n) = F_n for n <= 40"
    ))
}

fn desk_reports() -> Outcome {
    let mut runs: Vec<(String, Vec<String>)> = Vec::new();
    let mut add = |label: &str, args: &[&str], ns: Vec<usize>| {
        for n in ns {
            let mut argv: Vec<String> = ["degpow", "--format", "json", "verify"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            argv.extend(args.iter().map(|s| s.to_string()));
            argv.extend(["--n".into(), n.to_string(), "--desk".into()]);
            runs.push((format!("{label} n={n}"), argv));
        }
    };
    let all: Vec<usize> = (1..=8).collect();
    add("stars_ii r=3", &["stars_ii_desk", "--r", "3"], all.clone());
    for k in ["3", "4"] {
        add(
            &format!("stars_iii k={k}"),
            &["stars_iii_desk", "--k", k, "--r", "2"],
            all.clone(),
        );
    }
    for (s, t, r) in [(2, 2, 3), (2, 3, 4), (3, 3, 4)] {
        let feasible = (1..=8).filter(|&n| h_prime(s, t, n, 0).is_ok()).collect();
        let (s, t, r) = (s.to_string(), t.to_string(), r.to_string());
        add(
            &format!("kovik s={s} t={t} r={r}"),
            &["kovik_ii_desk", "--s", &s, "--t", &t, "--r", &r],
            feasible,
        );
    }
    for k in [2usize, 3] {
        for r in ["2", "3"] {
            let ks = k.to_string();
            add(
                &format!("labe k={k} r={r}"),
                &["labe_iii_desk", "--k", &ks, "--r", r],
                (k + 1..=8).collect(),
            );
        }
    }

    let mut equal = 0;
    let mut gaps = Vec::new();
    for (label, argv) in &runs {
        let out = run(argv);
        ensure(out.code == 0, || {
            format!("{label}: exit {}: {}", out.code, out.stderr)
        })?;
        let json: Value = serde_json::from_str(&out.stdout).map_err(|e| format!("{label}: {e}"))?;
        let opt: BigUint = json["brute-force optimum"]
            .as_str()
            .unwrap_or("")
            .parse()
            .map_err(|_| format!("{label}: no optimum"))?;
        let deficit: i64 = json["deficit"]
            .as_str()
            .unwrap_or("")
            .parse()
            .map_err(|_| format!("{label}: no deficit"))?;
        ensure(deficit >= 0, || {
            format!("{label}: construction exceeds optimum {opt}")
        })?;
        if deficit == 0 {
            equal += 1;
        } else {
            gaps.push(format!("{label} (+{deficit})"));
        }
    }
    Ok(format!(
        "{} desk runs, construction <= optimum everywhere, equality in {equal}; strict gaps: {}",
        runs.len(),
        if gaps.is_empty() {
            "none".into()
        } else {
            gaps.join(", ")
        }
    ))
}

fn engine_agreement() -> Outcome {
    let families: Vec<Vec<Graph>> = vec![
        vec![cat("clique:3")],
        vec![cat("clique:4")],
        vec![cat("cycle:4")],
        vec![cat("cycle:5")],
        vec![cat("path:3")],
        vec![cat("star:3")],
        vec![cat("book:3")],
        vec![cat("complete_bipartite:2,3")],
        vec![cat("cycle:4"), cat("cycle:5")],
    ];
    let objectives = [
        Objective::Edges,
        Objective::DegreePower(2),
        Objective::DegreePower(3),
        Objective::StarCount(2),
        Objective::StarCount(3),
        Objective::Copies(cat("clique:3")),
        Objective::Copies(cat("path:3")),
    ];
    let naive = SearchOptions::with_engine(Engine::Naive);
    let canonical = SearchOptions::with_engine(Engine::Canonical);
    let maximal = SearchOptions {
        maximal_only: true,
        ..canonical
    };
    let mut pairs = 0;
    for members in &families {
        let family = ForbiddenFamily::new(members.clone()).map_err(|e| e.to_string())?;
        for obj in &objectives {
            for n in 0..=6 {
                let a = search_max(n, &family, obj, &naive).map_err(|e| e.to_string())?;
                let b = search_max(n, &family, obj, &canonical).map_err(|e| e.to_string())?;
                let c = search_max(n, &family, obj, &maximal).map_err(|e| e.to_string())?;
                ensure(a.optimum == b.optimum && a.witnesses == b.witnesses, || {
                    format!(
                        "engines disagree: n = {n}, {obj}, family of {}",
                        members.len()
                    )
                })?;
                ensure(c.optimum == a.optimum, || {
                    format!("maximal-only scan changes the optimum: n = {n}, {obj}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{pairs} (n, family, objective) cases over {} families and {} objectives",
        families.len(),
        objectives.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("weighted star identity", weight_identity),
        ("star weights", weight_values),
        ("sparse C4-free degree powers", sparse_c4_free),
        ("C4-free degree power inequality", c4_free_inequality),
        ("star counts in C4-free graphs", star_counts_c4_free),
        ("triangle-free baseline", turan_baseline),
        ("decomposition families and biex", biex_values),
        ("constructions", constructions),
        ("desk-scale comparisons", desk_reports),
        ("engine agreement", engine_agreement),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!(
                "criterion {:>2} PASS {name}: {detail} [{elapsed:.1?}]",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why} [{elapsed:.1?}]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
