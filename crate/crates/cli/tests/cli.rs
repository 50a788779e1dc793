use degpow::{graph6, search_max, ForbiddenFamily, Graph, Objective, SearchOptions};
use degpow_cli::{report_table, run, Format, Outcome};

fn degpow(args: &[&str]) -> Outcome {
    run(std::iter::once("degpow").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut argv = vec!["--format", "json"];
    argv.extend_from_slice(args);
    let out = degpow(&argv);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn weights_line() {
    let out = degpow(&["weights", "--r", "3"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "1 6 6\n");
    assert_eq!(
        json(&["weights", "--r", "4"])["weights"],
        serde_json::json!(["1", "14", "36", "24"])
    );
}

#[test]
fn verify_kin_reports_fan_value() {
    let v = json(&["verify", "kin", "--n", "6", "--r", "4"]);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["e_4(F_6)"], "690");
    assert_eq!(v["checked"], "44");
    assert_eq!(v["counterexamples"], serde_json::json!([]));
}

#[test]
fn identity_check_exhaustive() {
    let out = degpow(&["identity-check", "--n", "5", "--r", "4", "--exhaustive"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "53 classes checked, identity holds\n");
    let out = degpow(&[
        "identity-check",
        "--n",
        "3",
        "--r",
        "3",
        "--random",
        "50",
        "--seed",
        "9",
    ]);
    assert_eq!(
        out.stdout,
        "0 classes checked, 50 random graphs checked, identity holds\n"
    );
}

#[test]
fn count_and_construct() {
    let v = json(&["count", "complete_bipartite:2,3", "--pattern", "cycle:4"]);
    assert_eq!(v["degree_power"], "30");
    assert_eq!(v["copies"], "3");
    let out = degpow(&["construct", "friendship", "9"]);
    let g = graph6::decode(out.stdout.trim()).unwrap();
    assert_eq!(
        json(&["count", out.stdout.trim(), "--r", "3"])["degree_power"],
        "576"
    );
    assert_eq!(g.size(), 12);
    let out = degpow(&["construct", "theta", "7", "2"]);
    assert_eq!(out.code, 0);
}

#[test]
fn graph_arguments_accept_edge_lists() {
    let a = json(&["chromatic", "5: 0-1,1-2,2-3,3-4,0-4"]);
    let b = json(&["chromatic", "Dhc"]);
    assert_eq!(a, b);
    assert_eq!(a["chromatic_number"], 3);
}

#[test]
fn decompose_and_critical_edges() {
    let v = json(&["decompose", "book:3"]);
    assert_eq!(v["members"], serde_json::json!(["BW", "CK"]));
    let v = json(&["decompose", "cycle:5", "--no-minimalize"]);
    assert_eq!(v["members"].as_array().unwrap().len(), 2);
    let v = json(&["critical-edges", "clique:4"]);
    assert_eq!(v["count"], 6);
}

#[test]
fn exit_codes() {
    let out = degpow(&["frobnicate"]);
    assert_eq!(out.code, 2);
    let out = degpow(&["weights", "--rr", "3"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--rr"));
    let out = degpow(&[
        "--engine", "naive", "search", "--n", "7", "--forbid", "clique:3",
    ]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("naive"));
    let out = degpow(&["construct", "girth5", "8", "3"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("girth >= 5"));
    let out = degpow(&["verify", "stars_ii_desk", "--n", "6", "--r", "3"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--desk"));
    let out = degpow(&["verify", "nonsense", "--n", "6"]);
    assert_eq!(out.code, 2);
    let out = degpow(&["--help"]);
    assert_eq!(out.code, 0);
}

#[test]
fn every_printed_graph_round_trips() {
    let v = json(&[
        "search",
        "--n",
        "5-6",
        "--forbid",
        "cycle:4",
        "--objective",
        "degree_power:2",
    ]);
    for row in v.as_array().unwrap() {
        for key in ["family", "witnesses"] {
            for g in row[key].as_array().unwrap() {
                let text = g.as_str().unwrap();
                assert_eq!(graph6::encode(&graph6::decode(text).unwrap()), text);
            }
        }
    }
}

#[test]
fn output_independent_of_workers() {
    for format in ["json", "csv", "table"] {
        let base = [
            "--format",
            format,
            "search",
            "--n",
            "4-7",
            "--forbid",
            "clique:3",
            "--objective",
            "star_count:2",
        ];
        let one = degpow(&[&["--workers", "1"][..], &base[..]].concat());
        let four = degpow(&[&["--workers", "4"][..], &base[..]].concat());
        assert_eq!(one, four);
    }
}

#[test]
fn seeded_output_is_reproducible() {
    let a = degpow(&["--seed", "7", "construct", "h_prime", "3", "3", "12"]);
    let b = degpow(&["--seed", "7", "construct", "h_prime", "3", "3", "12"]);
    assert_eq!(a, b);
    assert_eq!(a.code, 0);
}

fn result(n: usize, obj: Objective) -> degpow::SearchResult {
    let family = ForbiddenFamily::single(Graph::complete(3).unwrap()).unwrap();
    search_max(n, &family, &obj, &SearchOptions::default()).unwrap()
}

#[test]
fn report_table_contract() {
    assert_eq!(
        report_table(&[], Format::Csv),
        "objective,n,family,optimum,witness_count,witnesses,explored,complete\n"
    );
    assert_eq!(report_table(&[], Format::Table).lines().count(), 1);
    assert_eq!(report_table(&[], Format::Json).trim(), "[]");

    let rows = [result(5, Objective::Edges), result(4, Objective::Edges)];
    let csv = report_table(&rows, Format::Csv);
    let ns: Vec<&str> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(ns, ["4", "5"]);

    let table = report_table(&[result(4, Objective::Edges)], Format::Table);
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("objective"));
    let optimum_col = lines[0].find("optimum").unwrap();
    assert_eq!(&lines[1][optimum_col..optimum_col + 1], "4");
    assert!(lines[1].contains("C]"));

    let mixed = [
        result(4, Objective::DegreePower(2)),
        result(4, Objective::Edges),
    ];
    let csv = report_table(&mixed, Format::Csv);
    assert!(csv.lines().nth(1).unwrap().starts_with("edges,4"));
}
