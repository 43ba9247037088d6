//! Spontaneous and stimulated emission of a two-level atom at first order.

use oscfield::emission::{convergence_study, first_order_emission, AtomParams, Channel};
use oscfield::{AtomLevel, BasisIndex, FieldConfig, HilbertLayout, ModeLabel, StateVector, C64};

fn main() -> oscfield::Result<()> {
    let cfg = FieldConfig::default();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let atom = AtomParams::new(1.0, 0.01, [C64::new(r, 0.0), C64::new(0.0, -r), C64::new(0.0, 0.0)])?;
    let modes = vec![
        ModeLabel::field(1, [0.0, 0.0, 1.0], 0, cfg.c)?,
        ModeLabel::field(1, [0.0, 0.0, 1.2], 0, cfg.c)?,
        ModeLabel::field(1, [0.9, 0.0, 0.0], 0, cfg.c)?,
    ];
    let layout = HilbertLayout::new(modes, 3, true)?;

    // excited atom; photons only in modes 0 and 1
    let psi = StateVector::superposition(
        &layout,
        [
            (BasisIndex::with_atom(0, 0, AtomLevel::Excited), C64::new(0.6, 0.0)),
            (BasisIndex::with_atom(1, 1, AtomLevel::Excited), C64::new(0.0, 0.8)),
        ],
    )?;
    let amps = first_order_emission(&psi, &atom, &cfg, 2.0)?;
    for channel in [Channel::Spont, Channel::Stim] {
        for e in amps.channel(channel).filter(|e| e.n_initial < layout.nmax()) {
            println!("{channel:<5} mode {} n {} -> {}: {:+.6e} {:+.6e}i", e.mode, e.n_initial, e.n_initial + 1, e.amplitude.re, e.amplitude.im);
        }
    }

    let study = convergence_study(&psi, &atom, &cfg, 2.0, &[0.001, 0.002, 0.004, 0.008])?;
    for (g, dev) in &study.points {
        println!("coupling {g:.3e}  |exact - first order| {dev:.3e}");
    }
    println!("log-log slope {:.4}", study.slope);
    Ok(())
}
