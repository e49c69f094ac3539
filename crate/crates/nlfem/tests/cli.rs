use std::path::Path;
use std::process::{Command, Output};

fn nlfem(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nlfem")).args(args).current_dir(dir).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn value(out: &str, key: &str) -> f64 {
    out.lines()
        .find_map(|l| l.strip_prefix(key).map(|v| v.trim().parse().unwrap()))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn mesh_gen_writes_a_reproducible_file() {
    let dir = tempfile::tempdir().unwrap();
    assert!(nlfem(&["mesh-gen", "--n", "4", "--out", "a.txt"], dir.path()).status.success());
    assert!(nlfem(&["mesh-gen", "--n", "4", "--out", "b.txt"], dir.path()).status.success());
    let a = std::fs::read(dir.path().join("a.txt")).unwrap();
    assert_eq!(a, std::fs::read(dir.path().join("b.txt")).unwrap());
    let mesh = nlfem::load_mesh(std::str::from_utf8(&a).unwrap()).unwrap();
    assert_eq!(mesh.vertices().len(), 25);
    assert_eq!(nlfem(&["mesh-gen", "--n", "0", "--out", "c.txt"], dir.path()).status.code(), Some(2));
}

#[test]
fn solve_reproduces_the_constant_solution() {
    let dir = tempfile::tempdir().unwrap();
    nlfem(&["mesh-gen", "--n", "4", "--out", "m.txt"], dir.path());
    let args = ["solve", "--mesh", "m.txt", "--kernel", "const", "--delta", "0.25", "--problem", "constant", "--out", "u.csv"];
    let o = nlfem(&args, dir.path());
    assert!(o.status.success(), "{o:?}");
    assert!(value(&stdout(&o), "linf") <= 1e-6);
    let csv = std::fs::read_to_string(dir.path().join("u.csv")).unwrap();
    assert_eq!(csv.lines().next(), Some("cell,local,x,y,value"));
    assert_eq!(csv.lines().count(), 1 + 3 * 32);
    for line in csv.lines().skip(1) {
        let v: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!((v - 1.0).abs() <= 1e-6);
    }
    // reruns are byte-identical
    let first = csv.clone();
    nlfem(&args, dir.path());
    assert_eq!(std::fs::read_to_string(dir.path().join("u.csv")).unwrap(), first);
}

#[test]
fn solve_cosine_reports_finite_errors_and_exports_the_matrix() {
    let dir = tempfile::tempdir().unwrap();
    nlfem(&["mesh-gen", "--n", "4", "--out", "m.txt"], dir.path());
    let o = nlfem(
        &["solve", "--mesh", "m.txt", "--kernel", "quadratic", "--delta", "0.5", "--problem", "cosine", "--out", "u.csv", "--matrix-out", "s.mtx"],
        dir.path(),
    );
    assert!(o.status.success(), "{o:?}");
    let out = stdout(&o);
    assert!(value(&out, "l2").is_finite() && value(&out, "linf").is_finite());
    let mtx = std::fs::read_to_string(dir.path().join("s.mtx")).unwrap();
    assert!(mtx.starts_with("%%MatrixMarket matrix coordinate real symmetric"));
}

#[test]
fn solve_errors_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = nlfem(&["solve", "--mesh", "nope.txt", "--delta", "0.25", "--out", "u.csv"], dir.path());
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("nope.txt"));
    nlfem(&["mesh-gen", "--n", "4", "--out", "m.txt"], dir.path());
    let tiny = nlfem(&["solve", "--mesh", "m.txt", "--delta", "0.0001", "--out", "u.csv"], dir.path());
    assert_eq!(tiny.status.code(), Some(4));
    let kernel = nlfem(&["solve", "--mesh", "m.txt", "--kernel", "gauss", "--delta", "0.25", "--out", "u.csv"], dir.path());
    assert_eq!(kernel.status.code(), Some(2));
}

#[test]
fn convergence_writes_one_row_per_level() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["convergence", "--levels", "2", "--delta-ratio", "2", "--problem", "cosine", "--out", "c.csv"];
    assert!(nlfem(&args, dir.path()).status.success());
    let csv = std::fs::read_to_string(dir.path().join("c.csv")).unwrap();
    let rows: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0], ["level", "n", "h", "delta", "l2", "linf", "assembly_seconds", "cg_iters"]);
    assert_eq!(rows.len(), 3);
    let l2: Vec<f64> = rows[1..].iter().map(|r| r[4].parse().unwrap()).collect();
    assert!(l2[1] < l2[0]);
    assert_eq!(nlfem(&["convergence", "--levels", "1", "--out", "d.csv"], dir.path()).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    let o = nlfem(&["verify", "--suite", "kernels"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS ")));
    let o = nlfem(&["verify", "--suite", "oracle"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).contains("rel-diff"));
    assert_eq!(nlfem(&["verify", "--suite", "speed"], dir.path()).status.code(), Some(2));
}
