use proptest::prelude::*;
use spectral_pla::channel::{channel_index, minterm_of_channel, InputVector, WavelengthGrid};
use spectral_pla::devices::{
    apply_edfa, apply_sm, apply_spatial_switch, apply_waveshaper, combine_coupler, DeviceParams, SpectralModulatorStage,
    SpectrumState,
};
use spectral_pla::sim::engine::output_powers;
use spectral_pla::sim::report::sweep;
use spectral_pla::sim::{calibrate_thresholds, confusion_matrix, run_waveform, waveforms_to_csv, PlaConfig, PlaSimulator};
use spectral_pla::synthesis::stdlib::decode_word;
use spectral_pla::synthesis::{stdlib_function, NamedTable, TruthTable};
use spectral_pla::ChannelMask;

fn config(name: &str, params: DeviceParams) -> PlaConfig {
    PlaConfig::for_tables(&WavelengthGrid::default(), params, &stdlib_function(name).unwrap()).unwrap()
}

fn spectrum(n: usize) -> impl Strategy<Value = SpectrumState> {
    proptest::collection::vec(0.0f64..10.0, n).prop_map(|p| SpectrumState::new(p).unwrap())
}

fn no_ase() -> DeviceParams {
    DeviceParams {
        ase_floor_long: -400.0,
        ase_floor_short: -400.0,
        ..DeviceParams::default()
    }
}

proptest! {
    #[test]
    fn elements_are_passive(s in spectrum(16), stage in 1usize..=4, bit in any::<bool>(), mask_bits in any::<u16>()) {
        let p = DeviceParams::default();
        let st = SpectralModulatorStage::new(stage, 4).unwrap();
        let mask = ChannelMask::from_bools((0..16).map(|c| mask_bits >> c & 1 == 1));
        let (upper, lower) = apply_spatial_switch(&s, bit, &p);
        for out in [apply_sm(&s, &st, bit, &p).unwrap(), apply_waveshaper(&s, &mask, &p).unwrap(), upper, lower] {
            for (o, i) in out.powers().iter().zip(s.powers()) {
                prop_assert!(o <= i);
            }
        }
    }

    #[test]
    fn elements_are_linear(s in spectrum(16), k in 0.01f64..100.0, bit in any::<bool>(), stage in 1usize..=4) {
        let p = no_ase();
        let grid = WavelengthGrid::for_operands(4).unwrap();
        let st = SpectralModulatorStage::new(stage, 4).unwrap();
        let close = |a: &SpectrumState, b: &SpectrumState| a.powers().iter().zip(b.powers()).all(|(x, y)| (x - y).abs() <= 1e-9 * x.abs().max(1e-300));
        prop_assert!(close(&apply_sm(&s.scaled(k), &st, bit, &p).unwrap(), &apply_sm(&s, &st, bit, &p).unwrap().scaled(k)));
        prop_assert!(close(&apply_edfa(&s.scaled(k), &grid, &p).unwrap(), &apply_edfa(&s, &grid, &p).unwrap().scaled(k)));
        prop_assert!(close(&apply_spatial_switch(&s.scaled(k), bit, &p).0, &apply_spatial_switch(&s, bit, &p).0.scaled(k)));
    }

    #[test]
    fn complementary_states_restore_input(s in spectrum(32), stage in 1usize..=5) {
        let p = DeviceParams::ideal();
        let st = SpectralModulatorStage::new(stage, 5).unwrap();
        let sum = combine_coupler(&apply_sm(&s, &st, true, &p).unwrap(), &apply_sm(&s, &st, false, &p).unwrap()).unwrap();
        prop_assert_eq!(sum, s);
    }

    #[test]
    fn switch_conserves_lit_set(s in spectrum(16), bit in any::<bool>()) {
        let (upper, lower) = apply_spatial_switch(&s, bit, &DeviceParams::ideal());
        for c in 0..16 {
            prop_assert_eq!(upper.powers()[c] > 0.0 || lower.powers()[c] > 0.0, s.powers()[c] > 0.0);
        }
    }

    #[test]
    fn static_dynamic_consistency(
        (n, seed, bits) in (1usize..=9).prop_flat_map(|n| (
            Just(n),
            any::<u64>(),
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), 6), n),
        )),
        rise in 0.0f64..=1.0,
    ) {
        let table = TruthTable::from_index_fn(n, |g| (g as u64 ^ seed).wrapping_mul(0x2545_f491_4f6c_dd1d) >> 61 & 1 == 1).unwrap();
        // 9 operands exercise the switch tree (8 wavelength + 1 spatial)
        let cfg = PlaConfig::for_tables(&WavelengthGrid::default(), DeviceParams::default(), &[NamedTable::new("f", table)]).unwrap();
        let sim = PlaSimulator::calibrated(cfg).unwrap();
        let waves = run_waveform(&sim, &bits, 10e9, 8, rise).unwrap();
        let decisions = waves[0].decisions();
        for k in 0..6 {
            let x = InputVector::new(bits.iter().map(|s| s[k]).collect());
            prop_assert_eq!(decisions[k], sim.evaluate(&x).unwrap().decisions[0]);
        }
    }
}

#[test]
fn ideal_single_lit_channel_through_chain() {
    for n in 1..=9 {
        let cfg = PlaConfig::for_tables(
            &WavelengthGrid::for_operands(n).unwrap(),
            DeviceParams::ideal(),
            &stdlib_function(&format!("decoder({n})")).unwrap(),
        )
        .unwrap();
        for c in 0..1usize << n {
            let x = minterm_of_channel(c, n).unwrap();
            let lit: Vec<_> = output_powers(&cfg, &x)
                .unwrap()
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0.0)
                .map(|(k, _)| k)
                .collect();
            assert_eq!(lit, vec![channel_index(&x)]);
        }
    }
}

#[test]
fn low_states_fall_with_extinction() {
    let mut previous: Option<Vec<Vec<f64>>> = None;
    for ext in [10.0, 15.0, 20.0, 25.0, 30.0, 40.0] {
        let params = DeviceParams { stage_extinction: ext, ..DeviceParams::default() };
        let cfg = config("comparator4", params);
        let powers: Vec<Vec<f64>> = (0..256).map(|g| output_powers(&cfg, &minterm_of_channel(g, 8).unwrap()).unwrap()).collect();
        if let Some(prev) = &previous {
            for g in 0..256 {
                for o in 0..3 {
                    if !cfg.expected(o, g) {
                        assert!(powers[g][o] <= prev[g][o], "g={g} o={o}");
                    }
                }
            }
        }
        previous = Some(powers);
    }
    // the lit path itself is independent of extinction in the ideal chain
    let ideal = |ext: f64| {
        let params = DeviceParams { stage_extinction: ext, ..DeviceParams::ideal() };
        output_powers(&config("decoder", params), &minterm_of_channel(77, 8).unwrap()).unwrap()[77]
    };
    assert_eq!(ideal(10.0), ideal(40.0));
}

#[test]
fn adder_decodes_every_pair() {
    let sim = PlaSimulator::calibrated(config("adder4", DeviceParams::default())).unwrap();
    let report = sweep(&sim).unwrap();
    for a in 0..16 {
        for b in 0..16 {
            assert_eq!(decode_word(&report.decisions[a * 16 + b]), a + b);
        }
    }
}

#[test]
fn default_margins() {
    let decoder = calibrate_thresholds(&config("decoder", DeviceParams::default())).unwrap();
    assert!(decoder.iter().all(|c| c.margin_db >= 17.0));
    let cmp = calibrate_thresholds(&config("comparator4", DeviceParams::default())).unwrap();
    assert!(cmp.iter().all(|c| c.margin_db >= 9.0));
    for c in &cmp {
        assert!(c.threshold > c.max_low && c.threshold < c.min_high);
        assert!((c.threshold - (c.min_high * c.max_low).sqrt()).abs() < 1e-15);
    }
}

#[test]
fn confusion_matrix_properties() {
    let ideal = confusion_matrix(&config("decoder", DeviceParams::ideal())).unwrap();
    for (i, row) in ideal.rows.iter().enumerate() {
        assert!(row.iter().enumerate().all(|(c, &p)| (c == i) == (p > 0.0)));
        assert_eq!(row[i], ideal.rows[0][0]);
    }
    let real = confusion_matrix(&config("decoder", DeviceParams::default())).unwrap();
    assert!(real.min_margin_db() >= 17.0);
    // input 0: channels 48 and 192 leak through two pre-amplifier stages alike,
    // so the difference is the ASE tilt
    assert!(real.dbm(0, 48) > real.dbm(0, 192));
    let short: f64 = real.rows[0][1..128].iter().sum();
    let long: f64 = real.rows[0][129..].iter().sum();
    assert!(short > long);
    let csv = real.to_csv();
    assert_eq!(csv.lines().count(), 257);
    assert_eq!(csv.lines().next().unwrap().split(',').count(), 257);
}

#[test]
fn comparator_waveform_scenarios() {
    let sim = PlaSimulator::calibrated(config("comparator4", DeviceParams::default())).unwrap();
    let a4: Vec<bool> = (0..64).map(|k| (k * 7 + 3) % 5 < 2).collect();
    let b4: Vec<bool> = (0..64).map(|k| (k * 3 + 1) % 4 < 2).collect();
    for (a_low, b_low) in [(2usize, 5usize), (5, 5), (6, 1)] {
        let mut streams = vec![a4.clone()];
        streams.extend((0..3).map(|j| vec![a_low >> (2 - j) & 1 == 1; 64]));
        streams.push(b4.clone());
        streams.extend((0..3).map(|j| vec![b_low >> (2 - j) & 1 == 1; 64]));
        let waves = run_waveform(&sim, &streams, 10e9, 16, 0.3).unwrap();
        assert!((waves[0].time_ps(16) - 100.0).abs() < 1e-9);
        for k in 0..64 {
            let a = usize::from(a4[k]) * 8 + a_low;
            let b = usize::from(b4[k]) * 8 + b_low;
            let got: Vec<bool> = waves.iter().map(|w| w.decisions()[k]).collect();
            assert_eq!(got, vec![a > b, a == b, a < b], "bit {k}");
        }
    }
}

#[test]
fn waveform_edge_cases() {
    let sim = PlaSimulator::calibrated(config("comparator4", DeviceParams::default())).unwrap();
    let constant: Vec<Vec<bool>> = InputVector::parse("10010011").unwrap().bits().iter().map(|&b| vec![b; 4]).collect();
    let waves = run_waveform(&sim, &constant, 10e9, 4, 0.5).unwrap();
    let stat = sim.evaluate(&InputVector::parse("10010011").unwrap()).unwrap();
    for (w, p) in waves.iter().zip(&stat.powers_mw) {
        assert!(w.samples.iter().all(|s| s == p));
    }
    let mut toggling = constant.clone();
    toggling[0] = vec![true, false, true, false];
    let rect = run_waveform(&sim, &toggling, 10e9, 8, 0.0).unwrap();
    for w in &rect {
        for bit in w.samples.chunks(8) {
            assert!(bit.iter().all(|s| *s == bit[0]));
        }
    }
    let csv = waveforms_to_csv(&rect);
    assert_eq!(csv.lines().nth(2).unwrap().split(',').next().unwrap(), "12.500");

    let short = vec![vec![true; 3]; 7];
    assert!(run_waveform(&sim, &short, 10e9, 8, 0.0).is_err());
    let mut ragged = constant.clone();
    ragged[3] = vec![true; 5];
    assert!(run_waveform(&sim, &ragged, 10e9, 8, 0.0).is_err());
    assert!(run_waveform(&sim, &constant, 10e9, 1, 0.0).is_err());
}

#[test]
fn evaluation_is_deterministic() {
    let cfg = config("multiplier4", DeviceParams::default());
    let x = minterm_of_channel(0xb7, 8).unwrap();
    let a = output_powers(&cfg, &x).unwrap();
    let b = output_powers(&cfg.clone(), &x).unwrap();
    assert_eq!(a.iter().map(|p| p.to_bits()).collect::<Vec<_>>(), b.iter().map(|p| p.to_bits()).collect::<Vec<_>>());
}
