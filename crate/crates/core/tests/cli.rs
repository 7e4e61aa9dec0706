//! The `ntd` command line, driven in-process.

use std::fs;
use std::path::{Path, PathBuf};

use ntd::cli;
use ntd::io::ResultDocument;
use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn ntd(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ntd").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const P5: &str = "5 4\n1 2\n2 3\n3 4\n4 5\n";

#[test]
fn gen_writes_edge_lists() {
    let dir = TempDir::new().unwrap();
    let run = ntd(&["gen", "path", "4"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.out, "4 3\n1 2\n2 3\n3 4\n");

    let out = dir.path().join("g.txt");
    assert_eq!(ntd(&["gen", "random-pig", "10", "0.4", "7", "-o", s(&out)]).code, 0);
    let first = fs::read_to_string(&out).unwrap();
    ntd(&["gen", "random-pig", "10", "0.4", "7", "-o", s(&out)]);
    assert_eq!(fs::read_to_string(&out).unwrap(), first);

    assert_eq!(ntd(&["gen", "cycle", "2"]).code, cli::EXIT_USAGE);
}

#[test]
fn solve_prints_a_document_and_the_trace() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p5.txt", P5);
    let run = ntd(&["solve", "--algo", "pig", "--trace", s(&input)]);
    assert_eq!(run.code, 0, "{}", run.err);
    assert_eq!(run.err, "iter=1 i=1 case=2 picked=1,4 next=5\niter=2 i=5 case=4 picked=5 next=return\n");
    let doc = ResultDocument::from_json(&run.out).unwrap();
    assert_eq!(doc.members, vec![1, 4, 5]);
    assert_eq!(doc.size, 3);
    assert!(doc.verify.pass);
    assert_eq!(doc.input_sha256, ntd::io::digest(P5.as_bytes()));

    for algo in ["exact", "approx"] {
        let run = ntd(&["solve", "--algo", algo, s(&input)]);
        assert_eq!(run.code, 0, "{}", run.err);
        let doc = ResultDocument::from_json(&run.out).unwrap();
        assert!(doc.verify.pass);
        assert!(doc.size >= 3);
    }
    let run = ntd(&["solve", "--algo", "approx", "--strict", s(&input)]);
    assert_eq!(run.code, 0);
}

#[test]
fn exact_solve_honors_kind_and_required_vertices() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p5.txt", P5);
    let run = ntd(&["solve", "--algo", "exact", "--kind", "dominating", s(&input)]);
    let doc: Value = serde_json::from_str(&run.out).unwrap();
    assert_eq!(doc["size"], 2);
    assert_eq!(doc["verify"]["kind"], "dominating");

    let run = ntd(&["solve", "--algo", "exact", "--require", "1,3", s(&input)]);
    let doc = ResultDocument::from_json(&run.out).unwrap();
    assert!(doc.members.contains(&1) && doc.members.contains(&3));

    assert_eq!(ntd(&["solve", "--algo", "exact", "--require", "9", s(&input)]).code, cli::EXIT_USAGE);
    assert_eq!(ntd(&["solve", "--algo", "exact", "--limit", "4", s(&input)]).code, cli::EXIT_PRECONDITION);
}

#[test]
fn disconnected_inputs_are_solved_per_component() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "two.txt", "5 3\n1 2\n3 4\n4 5\n");
    for algo in ["pig", "approx", "exact"] {
        let run = ntd(&["solve", "--algo", algo, s(&input)]);
        assert_eq!(run.code, 0, "{algo}: {}", run.err);
        let doc = ResultDocument::from_json(&run.out).unwrap();
        assert!(doc.verify.pass);
    }
    let isolated = write(&dir, "iso.txt", "3 1\n1 2\n");
    assert_eq!(ntd(&["solve", "--algo", "pig", s(&isolated)]).code, cli::EXIT_PRECONDITION);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p5.txt", P5);
    let good = write(&dir, "good.txt", "1 4 5\n");
    let bad = write(&dir, "bad.txt", "1 5\n");
    let run = ntd(&["verify", s(&input), s(&good)]);
    assert_eq!(run.code, 0);
    assert_eq!(run.out, "{\"kind\":\"ntd\",\"pass\":true,\"witness\":null}\n");
    let run = ntd(&["verify", s(&input), s(&bad)]);
    assert_eq!(run.code, cli::EXIT_REJECTED);
    assert_eq!(run.out, "{\"kind\":\"ntd\",\"pass\":false,\"witness\":3}\n");
    assert_eq!(ntd(&["verify", "--kind", "dominating", s(&input), s(&bad)]).code, cli::EXIT_REJECTED);
    let two = write(&dir, "two.txt", "2 5\n");
    assert_eq!(ntd(&["verify", "--kind", "dominating", s(&input), s(&two)]).code, 0);

    let doc = ntd(&["solve", "--algo", "pig", s(&input)]).out;
    let doc_path = write(&dir, "doc.json", &doc);
    assert_eq!(ntd(&["verify", s(&input), s(&doc_path)]).code, 0);
}

#[test]
fn malformed_inputs_exit_with_parse_errors() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "3 2\n1 2\n2 2\n");
    let run = ntd(&["solve", "--algo", "pig", s(&bad)]);
    assert_eq!(run.code, cli::EXIT_PARSE);
    assert!(run.err.contains("line 3"), "{}", run.err);
    let missing = dir.path().join("missing.txt");
    assert_eq!(ntd(&["solve", "--algo", "pig", s(&missing)]).code, cli::EXIT_PARSE);
    let input = write(&dir, "p5.txt", P5);
    let cert = write(&dir, "cert.txt", "1 9\n");
    assert_eq!(ntd(&["verify", s(&input), s(&cert)]).code, cli::EXIT_PARSE);
}

#[test]
fn wrong_graph_class_is_a_precondition_failure() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.txt", "4 4\n1 2\n2 3\n3 4\n4 1\n");
    let run = ntd(&["solve", "--algo", "pig", s(&c4)]);
    assert_eq!(run.code, cli::EXIT_PRECONDITION);
    assert!(run.err.contains("not a proper interval graph"));
    let k15 = write(&dir, "star.txt", "5 4\n1 2\n1 3\n1 4\n1 5\n");
    assert_eq!(ntd(&["reduce", "--kind", "subcubic", s(&k15), "-o", s(&dir.path().join("o"))]).code, cli::EXIT_PRECONDITION);
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(ntd(&[]).code, cli::EXIT_USAGE);
    assert_eq!(ntd(&["solve", "--algo", "magic", "x"]).code, cli::EXIT_USAGE);
    assert_eq!(ntd(&["reduce", "--kind", "nope", "x", "-o", "y"]).code, cli::EXIT_USAGE);
    let help = ntd(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.out.contains("gadget-search"));
    assert!(help.err.is_empty());
}

#[test]
fn reduce_then_extract_round_trips() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.txt", "3 2\n1 2\n2 3\n");
    for (kind, output_n) in [("domset2ntds", 18), ("fourcopy", 12), ("subcubic", 15)] {
        let out = dir.path().join(format!("{kind}.txt"));
        let run = ntd(&["reduce", "--kind", kind, s(&p3), "-o", s(&out)]);
        assert_eq!(run.code, 0, "{}", run.err);
        let summary: Value = serde_json::from_str(&run.out).unwrap();
        assert_eq!(summary["output_n"], output_n);
        let prov = fs::read_to_string(format!("{}.prov", out.display())).unwrap();
        assert!(prov.starts_with(&format!("# kind={kind} ")));
        assert_eq!(prov.lines().count(), output_n + 1);

        let solved = ntd(&["solve", "--algo", "exact", "--limit", "32", s(&out)]);
        assert_eq!(solved.code, 0, "{}", solved.err);
        let cert = write(&dir, &format!("{kind}.json"), &solved.out);
        let run = ntd(&["extract", "--kind", kind, "--source", s(&p3), s(&cert)]);
        assert_eq!(run.code, 0, "{}", run.err);
        let doc = ResultDocument::from_json(&run.out).unwrap();
        assert_eq!(doc.members, vec![2]);
        assert!(doc.verify.pass);
        assert_eq!(doc.algorithm, format!("extract-{kind}"));
    }
}

#[test]
fn extract_refuses_non_certificates() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.txt", "3 2\n1 2\n2 3\n");
    let cert = write(&dir, "cert.txt", "1\n");
    let run = ntd(&["extract", "--kind", "fourcopy", "--source", s(&p3), s(&cert)]);
    assert_eq!(run.code, cli::EXIT_PRECONDITION);
}

#[test]
fn bench_reports_a_fit() {
    let run = ntd(&["bench", "--sizes", "200,400,800", "--seed", "3", "--repeats", "1"]);
    assert_eq!(run.code, 0, "{}", run.err);
    let lines: Vec<&str> = run.out.lines().collect();
    assert_eq!(lines[0], "n\tm\tseconds\tsize");
    assert_eq!(lines.len(), 7);
    assert!(lines[4].starts_with("# fit seconds = "));
}

#[test]
fn gadget_search_finds_the_canonical_gadgets() {
    let run = ntd(&["gadget-search"]);
    assert_eq!(run.code, 0, "{}", run.err);
    assert_eq!(
        run.out,
        "attachment: 6 edges: v-x1 x1-x2 x1-x3 x2-x3 x2-x4 x3-x4 (canonical)\n\
         split: 7 edges: v1-y1 v2-y2 y1-y2 y1-y3 y2-y4 y3-y5 y4-y6 (canonical)\n"
    );
    let run = ntd(&["gadget-search", "--which", "split"]);
    assert_eq!(run.out.lines().count(), 1);
}
