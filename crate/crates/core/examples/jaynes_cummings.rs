//! Single mode: the emission Hamiltonian reduces to Jaynes-Cummings.

use oscfield::dynamics::evolve;
use oscfield::emission::{atom_field_hamiltonian, coupling, AtomParams};
use oscfield::standard::{spectrum, standard_atom_field_hamiltonian, JaynesCummings, StandardLayout};
use oscfield::{AtomLevel, BasisIndex, FieldConfig, HilbertLayout, ModeLabel, StateVector, C64};

fn main() -> oscfield::Result<()> {
    let cfg = FieldConfig::default();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let atom = AtomParams::new(1.0, 0.05, [C64::new(r, 0.0), C64::new(0.0, -r), C64::new(0.0, 0.0)])?;
    let mode = ModeLabel::field(1, [0.0, 0.0, 1.0], 0, cfg.c)?;
    let layout = HilbertLayout::new(vec![mode], 3, true)?;
    let h = atom_field_hamiltonian(&layout, &atom, &cfg)?;
    let jc = JaynesCummings::new(&mode, &atom, &cfg, layout.nmax())?;

    let rate = atom.omega0 * atom.d * coupling(&mode, &atom, &cfg)?.norm();
    println!("vacuum Rabi period 2pi/(2 w0 d |g|) = {:.4}", std::f64::consts::PI / rate);

    let psi = StateVector::basis_state(&layout, BasisIndex::with_atom(0, 0, AtomLevel::Excited))?;
    for i in 0..=10 {
        let t = i as f64 / rate;
        let exact = evolve(&h, &psi, t, cfg.hbar)?;
        let p = exact.amplitude(BasisIndex::with_atom(0, 0, AtomLevel::Excited))?.norm_sqr();
        println!("t = {t:>8.3}  P(+) = {p:.12}  closed form {:.12}", jc.excited_population_from_vacuum(t));
    }

    let standard = StandardLayout::new(vec![mode], layout.nmax(), true)?;
    let ours = spectrum(h.matrix());
    let theirs = spectrum(&standard_atom_field_hamiltonian(&standard, &atom, &cfg)?);
    let gap = ours.iter().zip(&theirs).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    println!("spectra agree to {gap:e}");
    Ok(())
}
