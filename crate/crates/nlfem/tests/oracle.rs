use nlfem::oracle::{brute_force_diffusion_entry, brute_force_rhs_entry, Oracle, OracleMode};
use nlfem::{assemble_diffusion, Error, KernelFamily, Mesh, Point, QuadConfig};

const TENSOR: OracleMode = OracleMode::Tensor { degree: 8 };

#[test]
fn two_cell_mesh_matches_assembly() {
    let mesh = Mesh::unit_square(1).unwrap();
    let kf = KernelFamily::new(&[1.0], 2.0).unwrap();
    let d = assemble_diffusion(&mesh, &kf, QuadConfig::default()).unwrap();
    let o = brute_force_diffusion_entry(&mesh, &kf, (0, 0), (0, 0), TENSOR).unwrap().value;
    let a = d.get(0, 0).unwrap();
    assert!((a - o).abs() <= 1e-8 * a.abs(), "{a} vs {o}");
}

#[test]
fn tensor_entries_are_symmetric_and_stable_in_degree() {
    let mesh = Mesh::unit_square(2).unwrap();
    let kf = KernelFamily::new(&[1.0, -1.0], 0.8).unwrap();
    let oracle = Oracle::new(&mesh, &kf).unwrap();
    for (a, b) in [((0, 0), (3, 2)), ((1, 1), (1, 2)), ((5, 0), (6, 1))] {
        let ab = oracle.diffusion_entry(a, b, TENSOR).unwrap().value;
        let ba = oracle.diffusion_entry(b, a, TENSOR).unwrap().value;
        let finer = oracle.diffusion_entry(a, b, OracleMode::Tensor { degree: 10 }).unwrap().value;
        assert!((ab - ba).abs() <= 1e-12 * ab.abs().max(1.0), "{ab} {ba}");
        assert!((ab - finer).abs() <= 1e-10 * ab.abs().max(1.0), "{ab} {finer}");
    }
}

#[test]
fn tensor_mode_refuses_clipped_supports() {
    let mesh = Mesh::unit_square(4).unwrap();
    let kf = KernelFamily::new(&[1.0], 0.25).unwrap();
    let r = brute_force_diffusion_entry(&mesh, &kf, (0, 0), (0, 1), TENSOR);
    assert!(matches!(r, Err(Error::RegimeError)));
}

#[test]
fn far_apart_cells_do_not_interact() {
    let mesh = Mesh::unit_square(8).unwrap();
    let kf = KernelFamily::new(&[1.0], 0.125).unwrap();
    let mc = OracleMode::MonteCarlo { samples: 10_000, seed: 1 };
    let e = brute_force_diffusion_entry(&mesh, &kf, (0, 0), (127, 2), mc).unwrap();
    assert_eq!((e.value, e.std_error), (0.0, 0.0));
}

#[test]
fn zero_boundary_data_has_no_boundary_part() {
    let mesh = Mesh::unit_square(2).unwrap();
    let kf = KernelFamily::new(&[1.0], 0.8).unwrap();
    let b = brute_force_rhs_entry(&mesh, &kf, (0, 1), &|_| 0.0, &|_| 0.0, TENSOR).unwrap();
    assert_eq!(b.value, 0.0);
}

#[test]
fn monte_carlo_agrees_with_tensor_and_error_shrinks() {
    let mesh = Mesh::unit_square(2).unwrap();
    let kf = KernelFamily::new(&[1.0], 0.8).unwrap();
    let oracle = Oracle::new(&mesh, &kf).unwrap();
    let (a, b) = ((2, 0), (3, 1));
    let exact = oracle.diffusion_entry(a, b, TENSOR).unwrap().value;
    let small = oracle.diffusion_entry(a, b, OracleMode::MonteCarlo { samples: 100_000, seed: 7 }).unwrap();
    let large = oracle.diffusion_entry(a, b, OracleMode::MonteCarlo { samples: 1_000_000, seed: 7 }).unwrap();
    let ratio = small.std_error / large.std_error;
    assert!((ratio - 10f64.sqrt()).abs() < 0.5, "ratio {ratio}");
    assert!((large.value - exact).abs() <= 4.0 * large.std_error, "{large:?} vs {exact}");
    let again = oracle.diffusion_entry(a, b, OracleMode::MonteCarlo { samples: 1_000_000, seed: 7 }).unwrap();
    assert_eq!(again, large);
}

#[test]
fn monte_carlo_rhs_agrees_with_tensor() {
    let mesh = Mesh::unit_square(2).unwrap();
    let kf = KernelFamily::new(&[1.0, -1.0], 0.8).unwrap();
    let oracle = Oracle::new(&mesh, &kf).unwrap();
    let f = |p: Point| 1.0 + p.x;
    let g = |p: Point| p.y;
    let exact = oracle.rhs_entry((4, 2), &f, &g, TENSOR).unwrap().value;
    let mc = oracle.rhs_entry((4, 2), &f, &g, OracleMode::MonteCarlo { samples: 400_000, seed: 3 }).unwrap();
    assert!((mc.value - exact).abs() <= 4.0 * mc.std_error, "{mc:?} vs {exact}");
}
