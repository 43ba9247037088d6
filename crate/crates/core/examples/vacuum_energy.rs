//! Vacuum energy depends on which zero-photon state the oscillator is in.

use oscfield::emission::vacuum_subspace_check;
use oscfield::standard::{standard_vacuum_energy, StandardLayout};
use oscfield::{BasisIndex, FieldConfig, HilbertLayout, ModeLabel, StateVector, C64};

fn main() -> oscfield::Result<()> {
    let cfg = FieldConfig::default();
    let modes: Vec<ModeLabel> = [1.0, 1.5, 2.0].iter().map(|&w| ModeLabel::abstract_mode(w, 0)).collect::<Result<_, _>>()?;
    let layout = HilbertLayout::new(modes.clone(), 3, false)?;

    let one = C64::new(1.0, 0.0);
    let states = [
        ("|0,0>", vec![(BasisIndex::new(0, 0), one)]),
        ("|2,0>", vec![(BasisIndex::new(2, 0), one)]),
        ("uniform", (0..3).map(|k| (BasisIndex::new(k, 0), one)).collect()),
        ("|0,0> + |0,1>", vec![(BasisIndex::new(0, 0), one), (BasisIndex::new(0, 1), one)]),
    ];
    for (name, amps) in states {
        let psi = StateVector::superposition(&layout, amps)?;
        let r = vacuum_subspace_check(&psi, &cfg)?;
        println!("{name:<14} in vacuum subspace: {:<5}  <H> = {}", r.in_vacuum, r.energy);
    }

    let standard = StandardLayout::new(modes, 3, false)?;
    println!("tensor-product vacuum: <H> = {}", standard_vacuum_energy(&standard, &cfg));
    Ok(())
}
