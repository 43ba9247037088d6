//! Single oscillator vs one oscillator per mode.

use oscfield::emission::AtomParams;
use oscfield::standard::compare_report;
use oscfield::{BasisIndex, FieldConfig, HilbertLayout, ModeLabel, StateVector, C64};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = FieldConfig::default();
    let modes = vec![
        ModeLabel::field(1, [0.0, 0.0, 1.0], 0, cfg.c)?,
        ModeLabel::field(-1, [0.0, 0.0, 1.5], 0, cfg.c)?,
        ModeLabel::field(1, [2.0, 0.0, 0.0], 0, cfg.c)?,
        ModeLabel::field(-1, [0.0, 2.5, 0.0], 0, cfg.c)?,
    ];
    let layout = HilbertLayout::new(modes, 3, false)?;
    let vacua: Vec<StateVector> =
        (0..4).map(|k| StateVector::basis_state(&layout, BasisIndex::new(k, 0))).collect::<Result<_, _>>()?;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let atom = AtomParams::new(1.2, 0.01, [C64::new(r, 0.0), C64::new(0.0, -r), C64::new(0.0, 0.0)])?;
    let weights = [C64::new(0.5, 0.0); 4];

    let report = compare_report(&layout, &cfg, &vacua, Some(&atom), Some((&weights, 1.5)))?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
