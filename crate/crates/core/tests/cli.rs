use std::path::PathBuf;

use properwalk::cli::run;

fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut full = vec!["properwalk"];
    full.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(full, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("properwalk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn gen_cycle_five() {
    let (code, out, _) = call(&["gen", "cycle", "5"], "");
    assert_eq!(code, 0);
    assert_eq!(out, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
}

#[test]
fn monochromatic_square_fails_on_opposite_corners() {
    let g = scratch("c4.txt", "0 1\n1 2\n2 3\n3 0\n");
    let c = scratch("c4-color.txt", "k 1\n0 1 1\n0 3 1\n1 2 1\n2 3 1\n");
    let (code, out, _) = call(&["verify", g.to_str().unwrap(), c.to_str().unwrap(), "--pairs", "all"], "");
    assert_eq!((code, out.as_str()), (1, "FAIL 0 2\n"));
}

#[test]
fn color_then_verify_round_trip() {
    let families: [&[&str]; 8] = [
        &["petersen"],
        &["two-triangles"],
        &["star", "4"],
        &["theta", "2", "2", "3"],
        &["cycle-feet", "5", "1", "0", "1", "0", "0"],
        &["cycle-feet", "5", "1", "0", "1", "0", "1"],
        &["complete", "5"],
        &["random", "9", "0.3"],
    ];
    for (i, fam) in families.iter().enumerate() {
        let mut args = vec!["gen"];
        args.extend_from_slice(fam);
        let (code, graph, _) = call(&args, "");
        assert_eq!(code, 0, "{fam:?}");
        let g = scratch(&format!("g{i}.txt"), &graph);
        let (code, coloring, err) = call(&["color", g.to_str().unwrap(), "--mode", "auto"], "");
        assert_eq!(code, 0, "{fam:?}: {err}");
        assert!(coloring.lines().last().unwrap().starts_with("# pW <= "));
        let (code, out, _) = call(&["verify", g.to_str().unwrap(), "-"], &coloring);
        assert_eq!((code, out.as_str()), (0, "PASS\n"), "{fam:?}");
    }
}

#[test]
fn color_summaries_and_out_file() {
    let (_, petersen, _) = call(&["gen", "petersen"], "");
    let (code, out, _) = call(&["color", "-"], &petersen);
    assert_eq!(code, 0);
    assert!(out.ends_with("# pW <= 2 (exact) via bridgeless\n"));

    let g = scratch("bowtie-undirected.txt", &call(&["gen", "two-triangles"], "").1);
    let target = g.with_file_name("bowtie-coloring.txt");
    let (code, out, _) = call(&["color", g.to_str().unwrap(), "--out", target.to_str().unwrap()], "");
    assert_eq!((code, out.as_str()), (0, "pW <= 2 (exact) via bridgeless\n"));
    let (code, _, _) = call(&["verify", g.to_str().unwrap(), target.to_str().unwrap()], "");
    assert_eq!(code, 0);
}

#[test]
fn condition_violations_exit_one() {
    let (_, feet, _) = call(&["gen", "cycle-feet", "5", "1", "0", "1", "0", "1"], "");
    let (code, out, _) = call(&["color", "-", "--mode", "cycle-feet"], &feet);
    assert_eq!(code, 1);
    assert!(out.starts_with("violation:"));

    let spider = "0 1\n1 2\n2 3\n3 0\n0 4\n0 5\n0 6\n";
    let (code, out, _) = call(&["color", "-", "--mode", "bipartite"], spider);
    assert_eq!((code, out.as_str()), (1, "violation: core component [0 1 2 3] meets 3 bridges\n"));
}

#[test]
fn mode_preconditions_are_errors() {
    let (code, out, err) = call(&["color", "-", "--mode", "tree"], "0 1\n1 2\n2 0\n");
    assert_eq!((code, out.as_str()), (2, ""));
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn usage_and_input_errors_exit_two() {
    for (args, stdin) in [
        (vec!["verify", "-", "-"], "0 1\n"),
        (vec!["color", "/nonexistent/graph.txt"], ""),
        (vec!["color", "-"], "0 1\n0 1\n"),
        (vec!["color", "-"], "0 0\n"),
        (vec!["gen", "cycle"], ""),
        (vec!["gen", "hypercube", "3"], ""),
        (vec!["gen", "petersen", "--directed"], ""),
        (vec!["analyze", "-", "--frobnicate"], ""),
        (vec!["exact", "-", "--budget", "3"], "0 1\n1 2\n2 3\n3 0\n0 2\n"),
    ] {
        let (code, _, err) = call(&args, stdin);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn single_pair_with_witness() {
    let (_, graph, _) = call(&["gen", "cycle", "5"], "");
    let g = scratch("c5.txt", &graph);
    let (_, coloring, _) = call(&["color", g.to_str().unwrap()], "");
    let c = scratch("c5-color.txt", &coloring);
    let (code, out, _) = call(&["verify", g.to_str().unwrap(), c.to_str().unwrap(), "--pair", "0", "2", "--witness"], "");
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "PASS");
    assert!(lines[1].starts_with("walk [0 ") && lines[1].ends_with(" 2]"));
}

#[test]
fn directed_checks() {
    let (_, bowtie, _) = call(&["gen", "bowtie"], "");
    let d = scratch("bowtie.txt", &bowtie);
    let (code, out, _) = call(&["exact", d.to_str().unwrap(), "--directed"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("# directed pW = 2\nk 2\n"));
    let witness: String = out.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    let c = scratch("bowtie-color.txt", &witness);
    let (code, out, _) = call(&["verify", d.to_str().unwrap(), c.to_str().unwrap(), "--directed"], "");
    assert_eq!((code, out.as_str()), (0, "PASS\n"));
    let (code, out, _) = call(&["verify", d.to_str().unwrap(), c.to_str().unwrap(), "--directed", "--path"], "");
    assert_eq!(code, 1);
    assert!(out.starts_with("FAIL "));

    let (code, out, _) = call(&["exact", "-", "--directed", "--param", "pp"], &bowtie);
    assert_eq!(code, 0);
    assert!(out.starts_with("# directed pP = 3\n"));
}

#[test]
fn exact_reports_and_limits() {
    let (_, star, _) = call(&["gen", "star", "4"], "");
    let (code, out, _) = call(&["exact", "-"], &star);
    assert_eq!(code, 0);
    assert!(out.starts_with("# pW = 4\nk 4\n"));
    assert!(out.lines().last().unwrap().starts_with("# explored "));
    let (code, out, _) = call(&["exact", "-", "--max-k", "3"], &star);
    assert_eq!(code, 1);
    assert!(out.starts_with("pW > 3\n"));
}

#[test]
fn experiment_agreement_and_determinism() {
    let args = ["experiment", "--n", "6", "--p", "0.5", "--trials", "100", "--seed", "7", "--exact"];
    let (code, first, _) = call(&args, "");
    assert_eq!(code, 0);
    assert_eq!(first.lines().filter(|l| l.ends_with("\tagree")).count(), 100);
    assert!(!first.contains("exact-mismatch\n"));
    assert!(first.ends_with("# agreement 100/100, exact-mismatch 0\n"));
    let (_, second, _) = call(&args, "");
    assert_eq!(first, second);

    let (code, out, _) = call(&["experiment", "--n", "6", "--p", "0.5", "--trials", "0", "--seed", "7"], "");
    assert_eq!((code, out.as_str()), (0, "trial\tseed\tn\tm\tk\tstatus\troute\n"));
}

#[test]
fn analyze_reports_structure() {
    let (_, spider, _) = call(&["gen", "star", "3"], "");
    let (code, out, _) = call(&["analyze", "-"], &spider);
    assert_eq!(code, 0);
    assert!(out.contains("tree yes\n"));
    assert!(out.contains("bridges 3 "));
    assert!(out.contains("bridge-condition no\n"));

    let (_, petersen, _) = call(&["gen", "petersen"], "");
    let (_, out, _) = call(&["analyze", "-", "--orient"], &petersen);
    assert!(out.contains("bridges 0 \n"));
    let orientation = out.lines().find(|l| l.starts_with("orientation ")).unwrap();
    assert_eq!(orientation.matches('>').count(), 15);
}

#[test]
fn dot_output() {
    let (code, out, _) = call(&["gen", "cycle", "3", "--dot"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("graph G {\n") && out.contains("0 -- 1;"));
    let (_, out, _) = call(&["color", "-", "--dot"], "0 1\n1 2\n2 3\n");
    assert!(out.contains("[color=red, label=\"1\"]") && out.contains("[color=blue, label=\"2\"]"));
}
