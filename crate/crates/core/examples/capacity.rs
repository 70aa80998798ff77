//! How many operands fit in a band, and the modulator counts that follow.
//! Usage: capacity [lambda1_nm lambda2_nm channel_ghz]

use spectral_pla::synthesis::{estimate_capacity, modulator_counts};

fn main() -> spectral_pla::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (l1, l2, bw) = match args[..] {
        [a, b, c] => (a, b, c),
        _ => (1500.0, 1600.0, 1.0),
    };
    let est = estimate_capacity(l1, l2, bw)?;
    println!("{l1}-{l2} nm at {bw} GHz/channel");
    println!("delta_f={} GHz, W={}, N={}", est.delta_f_display(), est.max_channels, est.max_operands);
    println!("modulators: proposed={} eo={}", est.modulators_proposed, est.modulators_eo);
    for n in [4, 8, 13, 16] {
        let (p, e) = modulator_counts(n);
        println!("  N={n:>2}: {p:>3} spectral modulators vs {e:>3} per-channel modulators");
    }
    Ok(())
}
