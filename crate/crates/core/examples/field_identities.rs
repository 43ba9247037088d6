//! Energy and momentum of the quantized field from the field operators.

use oscfield::field::{energy_identity, PoyntingOrdering, SamplePoint};
use oscfield::{FieldConfig, HilbertLayout, ModeLabel};

fn main() -> oscfield::Result<()> {
    let modes = vec![
        ModeLabel::field(1, [0.0, 0.0, 1.0], 0, 1.0)?,
        ModeLabel::field(-1, [1.0, 2.0, -0.5], 0, 1.0)?,
        ModeLabel::field(1, [-0.7, 0.3, 0.2], 0, 1.0)?,
    ];
    let layout = HilbertLayout::new(modes, 4, false)?;
    let samples = [
        SamplePoint::new(0.0, [0.0; 3]),
        SamplePoint::new(0.7, [0.1, 0.2, 0.3]),
        SamplePoint::new(3.1, [-1.0, 0.5, 2.0]),
        SamplePoint::new(9.4, [0.3, -0.8, 0.0]),
        SamplePoint::new(-2.2, [1.7, 1.1, -0.4]),
    ];
    let report = energy_identity(&layout, &FieldConfig::default(), &samples)?;

    println!("max |V(E.E + B.B)/2 - H|  = {:e}", report.max_hamiltonian_deviation());
    println!("variation over (t, x)     = {:e}", report.density_variation);
    println!("E.E alone varies by       = {:e}", report.electric_variation);
    for o in [PoyntingOrdering::Literal, PoyntingOrdering::Symmetrized] {
        println!("max |V E x B - cP| ({o:?}) = {:e}", report.max_momentum_deviation(o));
    }
    Ok(())
}
