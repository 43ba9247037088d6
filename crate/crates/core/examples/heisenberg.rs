//! Propagators and the Heisenberg picture: a_k(t) = exp(-i w_k t) a_k.

use oscfield::algebra::{hamiltonian, mode_annihilator};
use oscfield::dynamics::{heisenberg, Propagator};
use oscfield::{BasisIndex, FieldConfig, HilbertLayout, ModeLabel, StateVector, C64};

fn main() -> oscfield::Result<()> {
    let modes = vec![ModeLabel::abstract_mode(1.0, 0)?, ModeLabel::abstract_mode(2.5, 0)?];
    let layout = HilbertLayout::new(modes, 4, false)?;
    let cfg = FieldConfig::default();
    let h = hamiltonian(&layout, &cfg);

    for t in [0.1, 1.0, 10.0] {
        for k in 0..layout.mode_count() {
            let a = mode_annihilator(&layout, k)?;
            let rotated = a.scale(C64::from_polar(1.0, -layout.modes()[k].omega() * t));
            let dev = heisenberg(&h, &a, t, cfg.hbar)?.max_abs_diff(&rotated);
            println!("t = {t:>4}, mode {k}: |a_k(t) - exp(-i w t) a_k| = {dev:e}");
        }
    }

    let psi = StateVector::superposition(
        &layout,
        [(BasisIndex::new(0, 1), C64::new(1.0, 0.0)), (BasisIndex::new(1, 2), C64::new(0.0, 1.0))],
    )?;
    let u = Propagator::new(&h, 3.0, cfg.hbar)?;
    let later = u.apply(&psi)?;
    println!("unitarity deviation {:e}", u.unitarity_deviation());
    println!("<H> before {} after {}", h.expect(&psi)?.re, h.expect(&later)?.re);
    Ok(())
}
