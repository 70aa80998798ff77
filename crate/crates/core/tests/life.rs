use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_pla::devices::DeviceParams;
use spectral_pla::life::patterns::{block, gosper_gun, pulsar};
use spectral_pla::life::{conway_pla, conway_truth_table, direct_step, rule_pla, table_step, Boundary, CellGrid, LifeEngine};
use spectral_pla::synthesis::TruthTable;

fn random_grid(rng: &mut ChaCha8Rng, w: usize, h: usize, boundary: Boundary) -> CellGrid {
    let rows: Vec<Vec<bool>> = (0..h).map(|_| (0..w).map(|_| rng.gen_bool(0.35)).collect()).collect();
    CellGrid::from_rows(&rows, boundary).unwrap()
}

#[test]
fn conway_table_popcount_by_enumeration() {
    let mut born = 0;
    let mut survive = 0;
    for g in 0..512usize {
        let cells: Vec<bool> = (0..9).map(|k| g >> (8 - k) & 1 == 1).collect();
        let live = cells.iter().enumerate().filter(|&(k, &c)| k != 4 && c).count();
        if live == 3 {
            born += 1;
        } else if live == 2 && cells[4] {
            survive += 1;
        }
    }
    assert_eq!((born, survive), (112, 28));
    assert_eq!(conway_truth_table().popcount(), born + survive);
}

#[test]
fn pla_matches_rule_on_every_neighborhood() {
    let engine = LifeEngine::new(conway_pla(DeviceParams::default()).unwrap()).unwrap();
    let table = conway_truth_table();
    for g in 0..512 {
        assert_eq!(engine.response(g), table.get(g), "neighbourhood {g:09b}");
    }
    assert!(engine.calibration().margin_db >= 9.0);
}

#[test]
fn random_grids_agree_with_oracle() {
    let engine = LifeEngine::new(conway_pla(DeviceParams::default()).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..200 {
        let boundary = if i % 2 == 0 { Boundary::Dead } else { Boundary::Toroidal };
        let g = random_grid(&mut rng, 16, 16, boundary);
        assert_eq!(engine.step(&g), direct_step(&g));
    }
}

#[test]
fn pulsar_has_period_three() {
    let engine = LifeEngine::new(conway_pla(DeviceParams::default()).unwrap()).unwrap();
    let trace = engine.run(&pulsar(), 12);
    assert_eq!(trace.len(), 13);
    for k in 0..=9 {
        assert_eq!(trace[k], trace[k + 3]);
    }
    assert_ne!(trace[0], trace[1]);
    assert_ne!(trace[0], trace[2]);
}

#[test]
fn glider_gun_matches_oracle() {
    let engine = LifeEngine::new(conway_pla(DeviceParams::default()).unwrap()).unwrap();
    let trace = engine.run(&gosper_gun(), 30);
    let mut g = gosper_gun();
    for (k, step) in trace.iter().enumerate() {
        assert_eq!(step, &g, "step {k}");
        g = direct_step(&g);
    }
    // the gun has emitted a glider: population grew from 36
    assert!(trace[30].population() > 36);
}

#[test]
fn still_life_and_quiescence() {
    let engine = LifeEngine::new(conway_pla(DeviceParams::default()).unwrap()).unwrap();
    assert_eq!(engine.step(&block()), block());
    for b in [Boundary::Dead, Boundary::Toroidal] {
        let empty = CellGrid::new(8, 6, b).unwrap();
        assert_eq!(engine.step(&empty), empty);
    }
}

#[test]
fn arbitrary_rule_tables_run_on_the_array() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let bits: Vec<bool> = (0..512).map(|_| rng.gen_bool(0.5)).collect();
    // the all-dead neighbourhood keeps quiescence so edges stay meaningful
    let rule = TruthTable::from_index_fn(9, |g| g != 0 && bits[g]).unwrap();
    let engine = LifeEngine::new(rule_pla(&rule, DeviceParams::default()).unwrap()).unwrap();
    for g in 0..512 {
        assert_eq!(engine.response(g), rule.get(g));
    }
    let grid = random_grid(&mut rng, 12, 10, Boundary::Dead);
    assert_eq!(engine.step(&grid), table_step(&grid, &rule).unwrap());
}
