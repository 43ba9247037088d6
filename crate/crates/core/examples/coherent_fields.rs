//! Field averages in a superposition of coherent states follow classical plane waves.

use oscfield::field::{classical_formula, coherent_state, field_averages, required_nmax, CoherentMode, CoherentSpec};
use oscfield::{FieldConfig, HilbertLayout, ModeLabel, C64};

fn main() -> oscfield::Result<()> {
    let modes = vec![ModeLabel::field(1, [0.0, 0.0, 1.0], 0, 1.0)?, ModeLabel::field(-1, [1.0, 0.0, 0.0], 0, 1.0)?];
    let alpha = C64::new(0.6, 0.3);
    let nmax = required_nmax(alpha.norm());
    println!("|alpha| = {:.3} needs N >= {nmax}", alpha.norm());
    let layout = HilbertLayout::new(modes, nmax.max(30), false)?;
    let spec = CoherentSpec::new(vec![
        CoherentMode { mode: 0, phi: C64::new(0.8, 0.0), alpha },
        CoherentMode { mode: 1, phi: C64::new(0.0, 0.6), alpha: C64::new(-0.4, 0.0) },
    ]);
    let psi = coherent_state(&layout, &spec)?;
    let cfg = FieldConfig::default();

    println!("{:>5} {:>22} {:>22}", "t", "<E_x>", "classical E_x");
    for i in 0..8 {
        let t = 0.25 * i as f64;
        let q = field_averages(&psi, &cfg, t, [0.0; 3])?;
        let c = classical_formula(&layout, &spec, &cfg, t, [0.0; 3])?;
        println!("{t:>5.2} {:>22.15} {:>22.15}", q.e[0], c.e[0]);
    }
    Ok(())
}
