use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use spectral_pla::channel::minterm_of_channel;
use spectral_pla::synthesis::{parse_expr, truth_table};

fn pla(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pla"))
        .args(args)
        .env_remove("PLA_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn patterns() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/patterns"))
}

#[test]
fn compile_and_of_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("and.tt");
    let o = pla(&["compile", "--expr", "A&B", "--vars", "A,B", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "N=2 minterms=1");
    assert_eq!(fs::read_to_string(&out).unwrap(), "N=2\n8\n");
}

#[test]
fn compile_constant_zero() {
    let o = pla(&["compile", "--expr", "0", "--vars", "A,B,C,D"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "N=4\n0000\n");
}

#[test]
fn compile_errors() {
    let o = pla(&["compile", "--expr", "A&&B", "--vars", "A,B"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 2"));

    let o = pla(&["compile", "--expr", "A&Z", "--vars", "A,B"]);
    assert_eq!(o.status.code(), Some(1));

    let o = pla(&["compile", "--vars", "A"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pla(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pla(&["estimate", "--lambda1", "1500", "--lambda2", "1600", "--bw", "1", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn simulate_comparator_single_input() {
    let o = pla(&["simulate", "--function", "comparator4", "--input", "10010011"]);
    assert_eq!(o.status.code(), Some(0));
    let decisions: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().to_string())
        .collect();
    assert_eq!(decisions, vec!["1", "0", "0"]);
    let o = pla(&["simulate", "--function", "comparator4", "--input", "1001"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn simulate_adder_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("adder.csv");
    let o = pla(&["simulate", "--function", "adder4", "--all", "--out", csv_path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("margin_db O5="));
    let csv = fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "input,bits,O5_dbm,O5,O4_dbm,O4,O3_dbm,O3,O2_dbm,O2,O1_dbm,O1");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 256);
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        let g: usize = cells[0].parse().unwrap();
        let sum = (0..5).fold(0, |acc, k| acc << 1 | cells[3 + 2 * k].parse::<usize>().unwrap());
        assert_eq!(sum, (g >> 4) + (g & 15));
    }
}

#[test]
fn simulate_decoder_margin_line() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("dec.csv");
    let o = pla(&["simulate", "--function", "decoder", "--all", "--out", csv_path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    let margins: Vec<f64> = line
        .trim()
        .split(' ')
        .skip(1)
        .map(|kv| kv.split('=').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(margins.len(), 256);
    assert!(margins.iter().all(|&m| m >= 17.0));
}

#[test]
fn compiled_table_round_trips_through_simulate() {
    let dir = tempfile::tempdir().unwrap();
    let tt = dir.path().join("maj.tt");
    let expr = "(A&B)|(B&C)|(A&C)^D";
    pla(&["compile", "--expr", expr, "--vars", "A,B,C,D", "--out", tt.to_str().unwrap()]);
    let csv_path = dir.path().join("maj.csv");
    let o = pla(&["simulate", "--function", tt.to_str().unwrap(), "--all", "--out", csv_path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let vars: Vec<String> = ["A", "B", "C", "D"].iter().map(|s| s.to_string()).collect();
    let table = truth_table(&parse_expr(expr, &vars).unwrap(), &vars).unwrap();
    let csv = fs::read_to_string(&csv_path).unwrap();
    for (g, row) in csv.lines().skip(1).enumerate() {
        let decision = row.rsplit(',').next().unwrap() == "1";
        assert_eq!(decision, table.lookup(&minterm_of_channel(g, 4).unwrap()).unwrap());
    }
}

#[test]
fn simulate_with_config_file_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("ideal.json");
    fs::write(
        &cfg,
        r#"{"operand_count": 2, "grid": {"channel_count": 4, "start_nm": 1550.0, "spacing_nm": 0.15},
            "params": {"ideal_mode": true}, "outputs": [{"name": "and", "mask_hex": "8"}]}"#,
    )
    .unwrap();
    let o = pla(&["simulate", "--config", cfg.to_str().unwrap(), "--input", "11"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().nth(1).unwrap(), "and,1.000e0,0.00,5.000e-1,1");

    let o = Command::new(env!("CARGO_BIN_EXE_pla"))
        .args(["simulate", "--input", "01"])
        .env("PLA_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(stdout(&o).lines().nth(1).unwrap(), "and,0.000e0,-inf,5.000e-1,0");

    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"operand_count": 2}"#).unwrap();
    assert_eq!(pla(&["simulate", "--config", bad.to_str().unwrap(), "--all"]).status.code(), Some(1));
}

#[test]
fn simulate_reports_non_separable_output() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("leaky.json");
    fs::write(
        &cfg,
        r#"{"operand_count": 8, "grid": {"channel_count": 256, "start_nm": 1530.0, "spacing_nm": 0.15},
            "params": {"stage_extinction": 2.0}}"#,
    )
    .unwrap();
    let o = pla(&["simulate", "--config", cfg.to_str().unwrap(), "--function", "adder4", "--all"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`O4`"));
}

#[test]
fn matrix_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.csv");
    let o = pla(&["matrix", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let margin: f64 = stdout(&o).trim().strip_prefix("min_margin_db=").unwrap().parse().unwrap();
    assert!(margin >= 17.0);
    let csv = fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().count(), 257);
}

#[test]
fn waveform_timestamps() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.csv");
    let o = pla(&[
        "waveform", "--function", "comparator4", "--rate", "10e9", "--samples-per-bit", "16",
        "--streams", "0110,1,0,1,1010,1,0,1", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("bit_period_ps=100.000"));
    assert!(text.contains("A>B=0100"));
    assert!(text.contains("A=B=0011"));
    assert!(text.contains("A<B=1000"));
    let csv = fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().count(), 1 + 64);
    assert!(csv.lines().nth(17).unwrap().starts_with("100.000,"));
}

#[test]
fn life_pulsar_returns_after_three_steps() {
    let dir = tempfile::tempdir().unwrap();
    let pulsar = patterns().join("pulsar.cells");
    let trace = dir.path().join("trace.txt");
    let pgm = dir.path().join("pgm");
    let o = pla(&[
        "life", "--pattern", pulsar.to_str().unwrap(), "--steps", "3",
        "--out", trace.to_str().unwrap(), "--pgm-dir", pgm.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let initial: String = fs::read_to_string(&pulsar)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(stdout(&o), initial);
    assert_eq!(fs::read_to_string(&trace).unwrap().matches("# step").count(), 4);
    assert!(fs::read_to_string(pgm.join("step_0003.pgm")).unwrap().starts_with("P2\n68 68\n255\n"));
}

#[test]
fn life_rejects_bad_pattern() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.cells");
    fs::write(&p, "..x\n...\n...\n").unwrap();
    assert_eq!(pla(&["life", "--pattern", p.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn estimate_output() {
    let o = pla(&["estimate", "--lambda1", "1500", "--lambda2", "1600", "--bw", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "delta_f=12491.3 GHz, W=12491, N=13\nmodulators: proposed=13 eo=169\n");
    assert_eq!(pla(&["estimate", "--lambda1", "1600", "--lambda2", "1500", "--bw", "1"]).status.code(), Some(1));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for out in [&a, &b] {
        pla(&["simulate", "--function", "multiplier4", "--all", "--out", out.to_str().unwrap()]);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}
