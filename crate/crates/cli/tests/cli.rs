use std::path::{Path, PathBuf};

use mtlog_cli::run;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn mtlog(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("mtlog").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str { p.to_str().unwrap() }

const PARACETAMOL: &str = "NoMoreParacetamol(x) :- Adult(x), diamondminus[0,6] TakesParacetamol(x).\n";
const JOHN: &str = "Adult(John)@(-inf,+inf)\nTakesParacetamol(John)@8\n";

#[test]
fn paracetamol_eval() {
    let dir = TempDir::new().unwrap();
    let (p, d) = (file(&dir, "paracetamol.mtl", PARACETAMOL), file(&dir, "john.facts", JOHN));
    for (t, want) in [("10", "true\n"), ("15", "false\n"), ("8", "true\n"), ("14", "true\n"), ("7", "false\n")] {
        let r = mtlog(&["eval", "--program", s(&p), "--dataset", s(&d), "--atom", "NoMoreParacetamol(John)", "--at", t]);
        assert_eq!((r.code, r.out.as_str()), (0, want), "at {t}: {}", r.err);
    }
    let r = mtlog(&["eval", "--program", s(&p), "--dataset", s(&d), "--atom", "diamondplus[2,2] NoMoreParacetamol(John)", "--at", "-3"]);
    assert_eq!(r.out, "false\n");
}

#[test]
fn wf_of_p_not_p_leaves_p_undefined() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "pnotp.mtl", "P :- not P.\n");
    let r = mtlog(&["wf", "--program", s(&p)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("kind: well-founded\n"), "{}", r.out);
    assert!(r.out.contains("# true\n# undef\nP@(-inf,+inf)\n"), "{}", r.out);

    let r = mtlog(&["eval", "--program", s(&p), "--atom", "P", "--at", "0"]);
    assert_eq!((r.code, r.out.as_str()), (1, "undef\n"));
    let r = mtlog(&["eval", "--program", s(&p), "--atom", "P", "--at", "0", "--three"]);
    assert_eq!((r.code, r.out.as_str()), (0, "undef\n"));
}

#[test]
fn p_not_p_has_no_stable_model_on_a_window() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "pnotp.mtl", "P :- not P.\n");
    let r = mtlog(&["stable", "--enumerate", "--program", s(&p), "--window", "0", "0"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("models: 0\n"), "{}", r.out);
    assert!(!r.out.contains("## model"));
}

#[test]
fn even_loop_enumerates_two_models() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "even.mtl", "P :- G, not Q.\nQ :- G, not P.\n");
    let d = file(&dir, "g.facts", "G@0\n");
    let r = mtlog(&["stable", "--enumerate", "--program", s(&p), "--dataset", s(&d), "--window", "-1", "1"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("complete: true\nmodels: 2\n"), "{}", r.out);
    assert!(r.out.contains("## model 1\n") && r.out.contains("## model 2\n"));

    // each enumerated model passes the checker; a non-model fails it
    let good = file(&dir, "good.facts", "G@0\nP@0\n");
    let r = mtlog(&["stable", "--check", s(&good), "--program", s(&p), "--dataset", s(&d)]);
    assert_eq!((r.code, r.out.as_str()), (0, "stable: true\n"));
    let bad = file(&dir, "bad.facts", "G@0\nP@0\nQ@0\n");
    let r = mtlog(&["stable", "--check", s(&bad), "--program", s(&p), "--dataset", s(&d)]);
    assert_eq!((r.code, r.out.as_str()), (1, "stable: false\n"));
}

#[test]
fn check_and_ground_print_programs() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "p.mtl", "% comment\nP(x) :- Q(x).\nP(x) :- Q(x).\n");
    let d = file(&dir, "d.facts", "Q(A)@[0,1]\nQ(B)@2\n");
    let r = mtlog(&["check", "--program", s(&p)]);
    assert_eq!((r.code, r.out.as_str()), (0, "P(x) :- Q(x).\n"));
    let r = mtlog(&["ground", "--program", s(&p), "--dataset", s(&d)]);
    assert_eq!((r.code, r.out.as_str()), (0, "P(A) :- Q(A).\nP(B) :- Q(B).\n"));
}

#[test]
fn kk_report_reparses() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "p.mtl", PARACETAMOL);
    let d = file(&dir, "d.facts", JOHN);
    let r = mtlog(&["kk", "--program", s(&p), "--dataset", s(&d)]);
    assert_eq!(r.code, 0);
    let report = mtlog::engines::ModelReport::parse(&r.out).unwrap();
    assert!(report.exact);
    assert_eq!(report.to_string(), r.out);
}

#[test]
fn supported_check() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "p.mtl", "P :- not Q.\n");
    let yes = file(&dir, "yes.facts", "P@(-inf,+inf)\n");
    let no = file(&dir, "no.facts", "# true\n# undef\nQ@(-inf,+inf)\n");
    let r = mtlog(&["supported", "--program", s(&p), "--check", s(&yes)]);
    assert_eq!((r.code, r.out.as_str()), (0, "supported: true\n"));
    let r = mtlog(&["supported", "--program", s(&p), "--check", s(&no)]);
    assert_eq!((r.code, r.out.as_str()), (1, "supported: false\n"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let syntax = file(&dir, "bad.mtl", "P :- \n");
    let r = mtlog(&["check", "--program", s(&syntax)]);
    assert_eq!(r.code, 2);
    assert!(r.out.is_empty() && r.err.contains("bad.mtl"), "{}", r.err);

    let unsafe_rule = file(&dir, "unsafe.mtl", "P(x) :- not Q(x).\n");
    assert_eq!(mtlog(&["check", "--program", s(&unsafe_rule)]).code, 2);
    assert_eq!(mtlog(&["check", "--program", s(&dir.path().join("missing.mtl"))]).code, 2);

    let pnotp = file(&dir, "pnotp.mtl", "P :- not P.\n");
    assert_eq!(mtlog(&["stable", "--enumerate", "--program", s(&pnotp)]).code, 2);
    assert_eq!(mtlog(&["stable", "--enumerate", "--program", s(&pnotp), "--window", "3", "1"]).code, 2);

    let runaway = file(&dir, "runaway.mtl", "P :- diamondminus[1,1] P.\n");
    let seed = file(&dir, "seed.facts", "P@0\n");
    let r = mtlog(&["wf", "--program", s(&runaway), "--dataset", s(&seed), "--max-iters", "50"]);
    assert_eq!(r.code, 3);
    assert!(r.out.is_empty());

    let wide = file(&dir, "wide.mtl", "P :- not Q.\nQ :- not P.\n");
    let r = mtlog(&["stable", "--enumerate", "--program", s(&wide), "--window", "0", "40"]);
    assert_eq!(r.code, 3, "{}", r.err);
    assert!(r.out.is_empty());
}

#[test]
fn output_flag_writes_a_file() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "p.mtl", "P :- not P.\n");
    let target = dir.path().join("out.txt");
    let r = mtlog(&["wf", "--program", s(&p), "--output", s(&target)]);
    assert_eq!(r.code, 0);
    assert!(r.out.is_empty());
    assert!(std::fs::read_to_string(&target).unwrap().starts_with("kind: well-founded"));
}

#[test]
fn random_diff_is_deterministic_and_echoes_the_seed() {
    let a = mtlog(&["diff", "--random", "25", "--seed", "11"]);
    let b = mtlog(&["diff", "--random", "25", "--seed", "11", "--jobs", "4"]);
    assert_eq!(a.code, 0, "{}{}", a.out, a.err);
    assert_eq!(a.out, b.out);
    assert!(a.out.starts_with("seed: 11\ninstances: 25\n"));
    assert!(a.out.ends_with("discrepancies: 0\n"));
}

#[test]
fn diff_on_a_single_program() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "even.mtl", "P :- G, not Q.\nQ :- G, not P.\n");
    let d = file(&dir, "g.facts", "G@[0,1]\n");
    let r = mtlog(&["diff", "--program", s(&p), "--dataset", s(&d), "--window", "0", "1"]);
    assert_eq!(r.code, 0, "{}{}", r.out, r.err);
    assert!(r.out.contains("agree: true"), "{}", r.out);
}
