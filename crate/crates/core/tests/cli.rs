use std::path::PathBuf;
use std::process::Command;

use proptest::prelude::*;
use sepgame::combos::disjmp_size_bound;
use sepgame::frontend::cli::run;
use sepgame::frontend::generate::{generate_game, GenerateParams};
use sepgame::frontend::{parse_game, print_game};
use sepgame::Objective;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("sepgame").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn fixture(name: &str, text: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

const MINIMAL: &str = "sepgame 1\nobjective mp 1\nvertices 1\nvertex 0 E\nedge 0 0 0\n";
const BAD_PRIORITY: &str = "sepgame 1\nobjective parity 4\nvertices 1\nvertex 0 E\nedge 0 0 5\n";

#[test]
fn solve_minimal_game() {
    let path = fixture("minimal.game", MINIMAL);
    for algo in ["separating", "oracle"] {
        let (code, out, _) = call(&["solve", "--input", &path, "--from", "0", "--algo", algo]);
        assert_eq!((code, out.as_str()), (0, "WIN\n"));
    }
}

#[test]
fn check_reports_position() {
    let path = fixture("bad-priority.game", BAD_PRIORITY);
    let (code, _, err) = call(&["check", "--input", &path]);
    assert_eq!(code, 2);
    assert!(err.contains("line 5, column 10: priority 5 exceeds d=4"), "{err}");
    let good = fixture("good.game", MINIMAL);
    let (code, out, _) = call(&["check", "--input", &good]);
    assert_eq!(code, 0);
    assert_eq!(out, "ok: objective mp 1, 1 vertices, 1 edges\n");
}

#[test]
fn region_and_stats() {
    let text = "sepgame 1\nobjective parity 2\nvertices 3\nvertex 0 E\nvertex 1 A\nvertex 2 E\n\
                edge 0 1 0\nedge 0 2 1\nedge 1 0 2\nedge 1 2 0\nedge 2 2 1\n";
    let path = fixture("region.game", text);
    let (code, out, _) = call(&["solve", "--input", &path, "--from", "0", "--region", "--stats"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "LOSE");
    assert_eq!(lines[1], "region\t");
    assert!(lines[2].starts_with("automaton_states\t"));
    assert!(lines[3].starts_with("product_vertices\t"));
    let (_, oracle, _) = call(&["solve", "--input", &path, "--from", "0", "--region", "--algo", "oracle"]);
    assert_eq!(oracle, lines[..2].join("\n") + "\n");
}

#[test]
fn bad_start_vertex() {
    let path = fixture("start.game", MINIMAL);
    let (code, _, err) = call(&["solve", "--input", &path, "--from", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("out of range"));
}

#[test]
fn oracle_guard_exit_code() {
    let game = generate_game(&GenerateParams {
        vertices: 40,
        min_degree: 3,
        max_degree: 3,
        objective: Objective::Parity { d: 2 },
        seed: 1,
    })
    .unwrap();
    let path = fixture("large.game", &print_game(&game));
    let (code, _, err) = call(&["solve", "--input", &path, "--from", "0", "--algo", "oracle"]);
    assert_eq!(code, 4, "{err}");
    let (code, _, _) = call(&["solve", "--input", &path, "--from", "0"]);
    assert_eq!(code, 0);
}

#[test]
fn separating_and_oracle_print_the_same() {
    for seed in 0..500u64 {
        let objective = match seed % 4 {
            0 => Objective::Parity { d: 3 },
            1 => Objective::MeanPayoff { max_weight: 2 },
            2 => Objective::ParityOrMp { d: 2, max_weight: 2 },
            _ => Objective::DisjMp { dim: 2, max_weight: 1 },
        };
        let n = 1 + seed as usize % 5;
        let game = generate_game(&GenerateParams { vertices: n, min_degree: 0, max_degree: 3, objective, seed }).unwrap();
        let path = fixture(&format!("diff-{seed}.game"), &print_game(&game));
        let from = (seed as usize * 3 % n).to_string();
        let base = ["solve", "--input", &path, "--from", &from, "--region"];
        let (c1, sep, _) = call(&[&base[..], &["--algo", "separating"]].concat());
        let (c2, ora, _) = call(&[&base[..], &["--algo", "oracle"]].concat());
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(sep, ora, "seed {seed}");
    }
}

#[test]
fn generate_is_deterministic() {
    let args = ["generate", "--objective", "parity-mp", "--d", "3", "--N", "2", "--vertices", "6", "--seed", "9"];
    let (c1, a, _) = call(&args);
    let (c2, b, _) = call(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let game = parse_game(&a).unwrap();
    for v in 0..6 {
        assert!((1..=3).contains(&game.graph().out_degree(v)));
    }
}

#[test]
fn automaton_dot_is_stable() {
    let args = ["automaton", "--objective", "parity-mp", "--n", "3", "--d", "2", "--N", "1", "--emit", "dot"];
    let (code, first, _) = call(&args);
    assert_eq!(code, 0);
    assert_eq!(call(&args).1, first);
    assert!(first.contains("q0 ->"));
    let (code, _, _) = call(&[
        "automaton", "--objective", "disj-mp", "--n", "8", "--d", "3", "--N", "3", "--emit", "dot", "--max-edges", "10",
    ]);
    assert_eq!(code, 4);
}

#[test]
fn scaling_bench_rows_respect_the_size_bound() {
    let (code, out, _) = call(&["bench", "--suite", "scaling"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("# disj-mp size constant c = 1"));
    assert_eq!(lines.next(), Some("objective\tn\tm\td\tN\tstates\tproduct_states\tms"));
    let mut disj = 0;
    for line in lines {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 8);
        let n: usize = cols[1].parse().unwrap();
        assert_eq!(cols[2].parse::<usize>().unwrap(), 4 * n);
        if cols[0] == "disj-mp" {
            let (d, big_n): (usize, i64) = (cols[3].parse().unwrap(), cols[4].parse().unwrap());
            let states: f64 = cols[5].parse().unwrap();
            assert!(states <= disjmp_size_bound(n, d, big_n));
            disj += 1;
        }
    }
    assert_eq!(disj, 4);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sepgame");
    let good = fixture("bin-good.game", MINIMAL);
    let bad = fixture("bin-bad.game", BAD_PRIORITY);
    let out = Command::new(bin).args(["solve", "--input", &good, "--from", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "WIN\n");
    let out = Command::new(bin).args(["check", "--input", &bad]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 5, column 10"));
    let out = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

fn objective_strategy() -> impl Strategy<Value = Objective> {
    prop_oneof![
        Just(Objective::Safety),
        (0u32..6).prop_map(|d| Objective::Parity { d }),
        (0i64..5).prop_map(|n| Objective::MeanPayoff { max_weight: n }),
        (0u32..6, 0i64..5).prop_map(|(d, n)| Objective::ParityOrMp { d, max_weight: n }),
        (1usize..4, 0i64..5).prop_map(|(dim, n)| Objective::DisjMp { dim, max_weight: n }),
    ]
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(
        objective in objective_strategy(),
        vertices in 1usize..8,
        seed in any::<u64>(),
    ) {
        let game = generate_game(&GenerateParams { vertices, min_degree: 0, max_degree: 4, objective, seed }).unwrap();
        let text = print_game(&game);
        let parsed = parse_game(&text).unwrap();
        prop_assert_eq!(&parsed, &game);
        prop_assert_eq!(print_game(&parsed), text);
    }
}
