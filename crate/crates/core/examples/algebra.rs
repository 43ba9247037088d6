//! Mode operators on a truncated single-oscillator space and the algebra they obey.
//!
//! ```bash
//! cargo run -p oscfield --example algebra
//! ```

use oscfield::algebra::{hamiltonian, mode_annihilator, mode_creator, mode_projector, verify_algebra, ALGEBRA_TOL};
use oscfield::{FieldConfig, HilbertLayout, ModeLabel};

fn main() -> oscfield::Result<()> {
    let modes = vec![
        ModeLabel::field(1, [1.0, 0.0, 0.0], 0, 1.0)?,
        ModeLabel::field(-1, [0.0, 1.0, 0.0], 0, 1.0)?,
        ModeLabel::field(1, [0.0, 0.0, 2.0], 0, 1.0)?,
        ModeLabel::field(-1, [1.0, 1.0, 1.0], 0, 1.0)?,
    ];
    let layout = HilbertLayout::new(modes, 5, false)?;
    println!("M = {}, N = {}, dim = {}", layout.mode_count(), layout.nmax(), layout.dim());

    // different modes never mix: a_0^dagger a_1^dagger vanishes identically
    let cross = &mode_creator(&layout, 0)? * &mode_creator(&layout, 1)?;
    println!("max |a0+ a1+|           = {}", cross.max_abs());

    let a = mode_annihilator(&layout, 2)?;
    let edge = a.commutator(&a.adjoint()) - mode_projector(&layout, 2)?;
    let corner = layout.flatten(oscfield::BasisIndex::new(2, 5))?;
    println!("[a2, a2+] - P2 at |2,N> = {}", edge.get(corner, corner).re);

    let h = hamiltonian(&layout, &FieldConfig::default());
    let mut levels: Vec<f64> = h.matrix().diagonal().unwrap().iter().map(|v| v.re).collect();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    println!("distinct levels of H    = {levels:?}");

    let suite = verify_algebra(&layout, ALGEBRA_TOL)?;
    let worst = suite.relations.iter().map(|r| r.deviation).fold(0.0, f64::max);
    println!("{} relation checks, worst deviation {worst:e}, all pass: {}", suite.relations.len(), suite.all_pass());
    Ok(())
}
