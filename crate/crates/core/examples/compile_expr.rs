//! Boolean expression to wavelength mask, then a bundle round trip.
//! Usage: compile_expr ["expr" "A,B,..."]

use spectral_pla::channel::WavelengthGrid;
use spectral_pla::synthesis::{bundle_from_json, bundle_to_json, compile_mask, parse_expr, truth_table, NamedTable};

fn main() -> spectral_pla::Result<()> {
    let mut args = std::env::args().skip(1);
    let expr = args.next().unwrap_or_else(|| "(A & ~B) | (C ^ D)".into());
    let vars: Vec<String> = args.next().unwrap_or_else(|| "A,B,C,D".into()).split(',').map(str::to_string).collect();

    let e = parse_expr(&expr, &vars)?;
    let tt = truth_table(&e, &vars)?;
    let mask = compile_mask(&tt, &WavelengthGrid::for_operands(vars.len())?)?;
    println!("{e}");
    println!("{} of {} minterms, hex {}", tt.popcount(), tt.len(), tt.to_hex());
    println!("pass channels {:?}", mask.ones().collect::<Vec<_>>());

    let json = bundle_to_json(&[NamedTable::new("f", tt.clone()), NamedTable::new("not_f", tt.complement())])?;
    println!("{json}");
    let back = bundle_from_json(&json, None)?;
    assert_eq!(back[0].table, tt);

    match parse_expr("A & & B", &vars) {
        Err(err) => println!("\"A & & B\": {err}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
