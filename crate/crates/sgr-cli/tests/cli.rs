//! End-to-end runs of the sgr binary: exit codes, derived files, replayed
//! logs, and byte-identical drawings.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use sgr_core::{
    build_ivy, canonical_text, to_text, Arm, CellGraph, IvyCenter, IvyDescriptor, SectorFrame,
    StructureKind,
};

fn sgr(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgr"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sgr-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn frame63() -> SectorFrame {
    SectorFrame::new(6, &[0, 3]).expect("valid frame")
}

fn ivy(frame: &SectorFrame, center: IvyCenter, stems: &[(usize, usize)]) -> CellGraph {
    let nu = frame.nu();
    let mut arms: BTreeMap<usize, Arm> = BTreeMap::new();
    for j in frame.dominant_labels() {
        let arm = if frame.is_dominant(frame.add(j, 1)) {
            Arm::flat(StructureKind::I)
        } else {
            Arm::flat(StructureKind::V)
        };
        arms.insert(j, arm);
    }
    for &(j, len) in stems {
        arms.insert(j, Arm::stem(len));
        arms.insert(frame.add(j, nu), Arm::stem(len));
    }
    build_ivy(&IvyDescriptor {
        frame: frame.clone(),
        center,
        arms,
    })
    .expect("descriptor builds")
}

#[test]
fn validate_accepts_a_standard_graph() {
    let dir = scratch("validate-ok");
    let g = ivy(&frame63(), IvyCenter::Vertex, &[]);
    fs::write(dir.join("flat.sgr"), to_text(&g)).unwrap();

    let out = sgr(&dir, &["validate", "flat.sgr"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("ok\n"));
    assert!(text.contains("symmetric true"));
}

#[test]
fn validate_lists_the_broken_laws_and_exits_one() {
    let dir = scratch("validate-bad");
    let mut g = ivy(&frame63(), IvyCenter::Vertex, &[(2, 1)]);
    let e = g.edge_ids().next().unwrap();
    g.set_label(e, 0);
    fs::write(dir.join("bad.sgr"), to_text(&g)).unwrap();

    let out = sgr(&dir, &["validate", "bad.sgr"]);
    assert_eq!(code(&out), 1);
    assert!(stdout_of(&out).contains("law"));
}

#[test]
fn act_round_trips_through_the_inverse() {
    let dir = scratch("act");
    let g = ivy(&frame63(), IvyCenter::Vertex, &[(2, 1)]);
    fs::write(dir.join("stem.sgr"), to_text(&g)).unwrap();
    let start = canonical_text(&g).unwrap();

    let forward = sgr(&dir, &["act", "stem.sgr", "-j", "2"]);
    assert_eq!(code(&forward), 0, "stderr: {}", stderr_of(&forward));
    let moved = stdout_of(&forward);
    assert_ne!(moved, start);
    assert_eq!(fs::read_to_string(dir.join("stem.act.sgr")).unwrap(), moved);
    let log = fs::read_to_string(dir.join("stem.act.log")).unwrap();
    assert!(log.starts_with("E 2 +2 "));

    let back = sgr(&dir, &["act", "stem.act.sgr", "-j", "2", "--inverse"]);
    assert_eq!(code(&back), 0, "stderr: {}", stderr_of(&back));
    assert_eq!(stdout_of(&back), start);
}

#[test]
fn replay_reproduces_the_recorded_run() {
    let dir = scratch("replay");
    let g = ivy(&frame63(), IvyCenter::Vertex, &[(2, 1)]);
    fs::write(dir.join("stem.sgr"), to_text(&g)).unwrap();

    let twice = sgr(&dir, &["act", "stem.sgr", "-j", "2", "-r", "2"]);
    assert_eq!(code(&twice), 0, "stderr: {}", stderr_of(&twice));

    let replayed = sgr(&dir, &["replay", "stem.sgr", "stem.act.log"]);
    assert_eq!(code(&replayed), 0, "stderr: {}", stderr_of(&replayed));
    assert_eq!(replayed.stdout, twice.stdout);
}

#[test]
fn replay_rejects_a_log_for_a_different_start() {
    let dir = scratch("replay-mismatch");
    let stem = ivy(&frame63(), IvyCenter::Vertex, &[(2, 1)]);
    fs::write(dir.join("stem.sgr"), to_text(&stem)).unwrap();
    let flat = ivy(&frame63(), IvyCenter::Vertex, &[]);
    fs::write(dir.join("flat.sgr"), to_text(&flat)).unwrap();

    let acted = sgr(&dir, &["act", "stem.sgr", "-j", "2"]);
    assert_eq!(code(&acted), 0);

    let out = sgr(&dir, &["replay", "flat.sgr", "stem.act.log"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn normalize_and_reduce_emit_replayable_logs() {
    let dir = scratch("reduce");
    let g = ivy(&frame63(), IvyCenter::Vertex, &[(2, 1)]);
    fs::write(dir.join("stem.sgr"), to_text(&g)).unwrap();
    let acted = sgr(&dir, &["act", "stem.sgr", "-j", "2", "-r", "2"]);
    assert_eq!(code(&acted), 0, "stderr: {}", stderr_of(&acted));

    let reduced = sgr(&dir, &["reduce", "stem.act.sgr"]);
    assert_eq!(code(&reduced), 0, "stderr: {}", stderr_of(&reduced));
    let red_text = stdout_of(&reduced);
    assert_eq!(
        fs::read_to_string(dir.join("stem.act.red.sgr")).unwrap(),
        red_text
    );
    let replay_red = sgr(&dir, &["replay", "stem.act.sgr", "stem.act.red.log"]);
    assert_eq!(code(&replay_red), 0, "stderr: {}", stderr_of(&replay_red));
    assert_eq!(stdout_of(&replay_red), red_text);

    let gathered = sgr(&dir, &["normalize", "stem.act.sgr"]);
    assert_eq!(code(&gathered), 0, "stderr: {}", stderr_of(&gathered));
    let replay_ivy = sgr(&dir, &["replay", "stem.act.sgr", "stem.act.ivy.log"]);
    assert_eq!(code(&replay_ivy), 0, "stderr: {}", stderr_of(&replay_ivy));
    assert_eq!(replay_ivy.stdout, gathered.stdout);
}

#[test]
fn orbit_prints_the_two_vertex_partition() {
    let dir = scratch("orbit");
    let out = sgr(
        &dir,
        &["orbit", "-n", "6", "-J", "0,3", "--max-vertices", "2"],
    );
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("corpus 3\n"));
    assert!(text.contains("census 1 1\n"));
    assert!(text.contains("census 2 2\n"));
    assert!(text.contains("class 0 invariant center vertex members 1\n"));
    assert!(text.contains("class 1 invariant center double-edge members 2\n"));
    assert!(text.contains("moves interior "));
}

#[test]
fn guards_and_usage_errors_use_distinct_codes() {
    let dir = scratch("codes");
    let over = sgr(
        &dir,
        &["orbit", "-n", "6", "-J", "0,3", "--max-vertices", "11"],
    );
    assert_eq!(code(&over), 3);

    let odd = sgr(
        &dir,
        &["orbit", "-n", "7", "-J", "0,3", "--max-vertices", "2"],
    );
    assert_eq!(code(&odd), 2);

    let missing = sgr(&dir, &["act"]);
    assert_eq!(code(&missing), 2);

    let repeat = sgr(&dir, &["act", "none.sgr", "-j", "2", "-r", "10001"]);
    assert_eq!(code(&repeat), 3);

    let unreadable = sgr(&dir, &["validate", "none.sgr"]);
    assert_eq!(code(&unreadable), 1);
}

#[test]
fn dot_rendering_is_deterministic_and_structured() {
    let dir = scratch("dot");
    let g = ivy(&frame63(), IvyCenter::Vertex, &[(2, 1)]);
    fs::write(dir.join("stem.sgr"), to_text(&g)).unwrap();

    let first = sgr(&dir, &["render", "stem.sgr", "--format", "dot"]);
    assert_eq!(code(&first), 0, "stderr: {}", stderr_of(&first));
    let second = sgr(&dir, &["render", "stem.sgr", "--format", "dot"]);
    assert_eq!(first.stdout, second.stdout);

    let text = stdout_of(&first);
    assert!(text.starts_with("graph cells {\n"));
    assert!(text.trim_end().ends_with('}'));
    assert_eq!(text.matches(" -- ").count(), g.edge_count());
    assert!(text.contains("tooltip=\"left "));

    let saved = sgr(
        &dir,
        &["render", "stem.sgr", "--format", "dot", "-o", "stem.dot"],
    );
    assert_eq!(code(&saved), 0);
    assert_eq!(fs::read(dir.join("stem.dot")).unwrap(), first.stdout);
}

#[test]
fn svg_rendering_is_deterministic_and_scoped() {
    let dir = scratch("svg");
    let g = ivy(&frame63(), IvyCenter::Vertex, &[(2, 1)]);
    fs::write(dir.join("stem.sgr"), to_text(&g)).unwrap();

    let first = sgr(&dir, &["render", "stem.sgr", "--format", "svg"]);
    assert_eq!(code(&first), 0, "stderr: {}", stderr_of(&first));
    let second = sgr(&dir, &["render", "stem.sgr", "--format", "svg"]);
    assert_eq!(first.stdout, second.stdout);

    let text = stdout_of(&first);
    assert!(text.starts_with("<svg "));
    assert!(text.trim_end().ends_with("</svg>"));
    assert_eq!(text.matches("<circle").count(), g.vertex_count());
    assert_eq!(text.matches("class=\"ray\"").count(), 6);
    assert!(text.contains("class=\"sub\""));
}

#[test]
fn spectrum_prints_the_mode_table() {
    let dir = scratch("spectrum");
    let job = "spectrum 1\ndegree 4\nalpha 2 1.0 0.0\ncount 2\n";
    fs::write(dir.join("quartic.job"), job).unwrap();

    let out = sgr(&dir, &["spectrum", "quartic.job"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.starts_with("mode 0 parity even lambda "));
    assert!(text.contains("\nmode 1 parity odd lambda "));
    assert!(text.contains(" zeros 1"));
}

#[test]
fn spectrum_loop_jobs_report_the_permutation() {
    let dir = scratch("spectrum-loop");
    let job = "spectrum 1\ndegree 4\ncount 2\nloop 2\nstep 0.5\ntrack 0 1\n\
               waypoint 0 0\nwaypoint 0.1 0\nwaypoint 0 0.1\nwaypoint -0.1 0\n\
               waypoint 0 -0.1\nwaypoint 0 0\n";
    fs::write(dir.join("loop.job"), job).unwrap();

    let out = sgr(&dir, &["spectrum", "loop.job"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("\ntrack 0 lambda "));
    assert!(text.trim_end().ends_with("permutation 0 1"));
}

#[test]
fn spectrum_rejects_jobs_without_the_header() {
    let dir = scratch("spectrum-bad");
    fs::write(dir.join("bad.job"), "degree 4\n").unwrap();

    let out = sgr(&dir, &["spectrum", "bad.job"]);
    assert_eq!(code(&out), 1);
    assert!(stderr_of(&out).contains("line 1"));
}
