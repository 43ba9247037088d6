use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::config::{Component, EmissionSettings, Resolved};
use super::output::{format_float as f, write_csv, write_json};
use super::{CliError, Command, Outcome};
use crate::algebra::{hamiltonian, mode_annihilator, momentum, verify_algebra, verify_algebra_with, ALGEBRA_TOL};
use crate::emission::{
    atom_field_hamiltonian, convergence_study, first_order_emission, first_order_state, first_order_state_quadrature,
    vacuum_subspace_check,
};
use crate::dynamics::{evolve, Quadrature};
use crate::field::{classical_formula, coherent_state, energy_identity, field_averages, FieldKind, SamplePoint};
use crate::hilbert::{AtomLevel, StateVector, C64};
use crate::standard::{compare_report, JaynesCummings, StandardLayout};

const VACUUM_TOL: f64 = 1e-12;
const CLASSICAL_TOL: f64 = 1e-8;
const IDENTITY_TOL: f64 = 1e-10;
const DENSITY_VARIATION_TOL: f64 = 1e-12;
const EMISSION_TOL: f64 = 1e-10;
const SLOPE_TARGET: f64 = 2.0;
const SLOPE_TOL: f64 = 0.1;
const COMPARE_TOL: f64 = 1e-12;
const DEFAULT_SAMPLES: usize = 5;

pub(super) fn run(command: Command, res: &Resolved, out: &Path, fault: bool) -> Result<Outcome, CliError> {
    match command {
        Command::VerifyAlgebra => verify(res, out, fault),
        Command::VacuumEnergy => vacuum(res, out, fault),
        Command::FieldSweep => sweep(res, out, fault),
        Command::FieldIdentities => identities(res, out, fault),
        Command::Emission => emission(res, out, fault),
        Command::CompareStandard => compare(res, out, fault),
    }
}

#[derive(Serialize)]
struct Summary<'a, T: Serialize> {
    command: &'a str,
    pass: bool,
    tolerance: f64,
    #[serde(flatten)]
    details: T,
}

fn finish<T: Serialize>(
    command: Command,
    out: &Path,
    pass: bool,
    tolerance: f64,
    details: T,
    message: String,
    mut files: Vec<std::path::PathBuf>,
) -> Result<Outcome, CliError> {
    let summary = Summary { command: command.name(), pass, tolerance, details };
    files.push(write_json(&out.join("summary.json"), &summary)?);
    Ok(Outcome { pass, message, files })
}

fn c(z: C64) -> [String; 2] {
    [f(z.re), f(z.im)]
}

fn verify(res: &Resolved, out: &Path, fault: bool) -> Result<Outcome, CliError> {
    let tol = res.tolerance(ALGEBRA_TOL);
    let layout = &res.layout;
    let suite = if fault {
        verify_algebra_with(layout, tol, |k| Ok(mode_annihilator(layout, k)?.scale_re(1.0 + 1e-6)))?
    } else {
        verify_algebra(layout, tol)?
    };
    let rows: Vec<Vec<String>> = suite
        .relations
        .iter()
        .map(|r| vec![r.relation.to_string(), r.k.to_string(), r.l.to_string(), r.subspace.to_string(), f(r.deviation), r.pass.to_string()])
        .collect();
    let boundary: Vec<Vec<String>> = suite
        .boundary
        .iter()
        .map(|b| vec![b.k.to_string(), f(b.boundary_entry), f(b.deviation), b.pass.to_string()])
        .collect();
    let files = vec![
        write_csv(&out.join("algebra.csv"), &["relation", "k", "l", "subspace", "deviation", "pass"], &rows)?,
        write_csv(&out.join("boundary.csv"), &["k", "boundary_entry", "deviation", "pass"], &boundary)?,
    ];
    let failed = suite.relations.iter().filter(|r| !r.pass).count() + suite.boundary.iter().filter(|b| !b.pass).count();
    #[derive(Serialize)]
    struct D {
        modes: usize,
        nmax: usize,
        relations: usize,
        boundary: usize,
        failed: usize,
    }
    let d = D { modes: layout.mode_count(), nmax: layout.nmax(), relations: rows.len(), boundary: boundary.len(), failed };
    let msg = format!("{} relations, {} boundary terms, {failed} failed", rows.len(), boundary.len());
    finish(Command::VerifyAlgebra, out, suite.all_pass(), tol, d, msg, files)
}

fn vacuum(res: &Resolved, out: &Path, fault: bool) -> Result<Outcome, CliError> {
    let tol = res.tolerance(VACUUM_TOL);
    let layout = &res.layout;
    let cfg = &res.field;
    let states = match &res.config.states {
        Some(s) => s.iter().map(|n| (n.name.clone(), n.components.clone())).collect(),
        None => vec![("uniform_vacuum".to_string(), res.uniform_vacuum())],
    };
    let omegas: Vec<f64> = layout.modes().iter().map(|m| m.omega()).collect();
    let ceiling = 0.5 * cfg.hbar * omegas.iter().copied().fold(0.0, f64::max);
    let standard = 0.5 * cfg.hbar * omegas.iter().sum::<f64>();
    let p = if layout.modes().iter().all(|m| !m.is_abstract()) { Some(momentum(layout, cfg)?) } else { None };
    let mut h = hamiltonian(layout, cfg);
    if fault {
        h = h.scale_re(1.0 + 1e-6);
    }
    let mut rows = Vec::with_capacity(states.len());
    let mut pass = true;
    for (name, comps) in &states {
        let state = res.state(layout, comps, None)?;
        let report = vacuum_subspace_check(&state, cfg)?;
        let energy = h.expect(&state)?.re;
        let expected: f64 = state.components().map(|(b, a)| a.norm_sqr() * 0.5 * cfg.hbar * omegas[b.mode]).sum();
        if report.in_vacuum {
            pass &= (energy - expected).abs() <= tol && energy <= ceiling + tol;
        }
        let mut row = vec![name.clone(), report.in_vacuum.to_string(), f(energy), f(expected)];
        match &p {
            Some(p) => {
                for pi in p {
                    row.push(f(pi.expect(&state)?.re));
                }
            }
            None => row.extend(std::iter::repeat_n(String::new(), 3)),
        }
        row.push(f(standard));
        rows.push(row);
    }
    let header = ["state", "in_vacuum", "energy", "zero_photon_formula", "px", "py", "pz", "standard_vacuum_energy"];
    let files = vec![write_csv(&out.join("vacuum.csv"), &header, &rows)?];
    #[derive(Serialize)]
    struct D {
        states: usize,
        single_oscillator_ceiling: f64,
        standard_vacuum_energy: f64,
    }
    let msg = format!("{} states, standard vacuum energy {}", rows.len(), f(standard));
    finish(Command::VacuumEnergy, out, pass, tol, D { states: rows.len(), single_oscillator_ceiling: ceiling, standard_vacuum_energy: standard }, msg, files)
}

fn sweep(res: &Resolved, out: &Path, fault: bool) -> Result<Outcome, CliError> {
    let tol = res.tolerance(CLASSICAL_TOL);
    let spec = res.config.coherent.as_ref().ok_or_else(|| CliError::config("field-sweep needs `coherent`"))?;
    let state = coherent_state(&res.layout, spec)?;
    let mut rows = Vec::new();
    let mut worst: f64 = 0.0;
    for t in res.times() {
        for x in res.points() {
            let mut avg = field_averages(&state, &res.field, t, x)?;
            if fault {
                avg.e[0] += 1e-6;
            }
            let classical = classical_formula(&res.layout, spec, &res.field, t, x)?;
            worst = worst.max(avg.max_abs_diff(&classical));
            let mut row = vec![f(t), f(x[0]), f(x[1]), f(x[2])];
            for kind in FieldKind::ALL {
                row.extend(avg.get(kind).iter().map(|&v| f(v)));
            }
            rows.push(row);
        }
    }
    let header = ["t", "x", "y", "z", "Ax", "Ay", "Az", "Ex", "Ey", "Ez", "Bx", "By", "Bz"];
    let files = vec![write_csv(&out.join("field_sweep.csv"), &header, &rows)?];
    #[derive(Serialize)]
    struct D {
        points: usize,
        max_classical_deviation: f64,
    }
    let pass = worst <= tol;
    let msg = format!("{} grid points, max deviation from classical fields {}", rows.len(), f(worst));
    finish(Command::FieldSweep, out, pass, tol, D { points: rows.len(), max_classical_deviation: worst }, msg, files)
}

fn identities(res: &Resolved, out: &Path, fault: bool) -> Result<Outcome, CliError> {
    let tol = res.tolerance(IDENTITY_TOL);
    let mut rng = ChaCha8Rng::seed_from_u64(res.config.seed.unwrap_or(0));
    let count = res.config.samples.unwrap_or(DEFAULT_SAMPLES);
    let samples: Vec<SamplePoint> = (0..count)
        .map(|_| SamplePoint::new(rng.random_range(0.0..10.0), std::array::from_fn(|_| rng.random_range(-1.0..1.0))))
        .collect();
    let mut cfg = res.field;
    if fault {
        cfg.volume *= 1.0 + 1e-6;
    }
    let report = energy_identity(&res.layout, &cfg, &samples)?;
    let rows: Vec<Vec<String>> = samples
        .iter()
        .enumerate()
        .map(|(i, s)| {
            vec![
                f(s.t),
                f(s.x[0]),
                f(s.x[1]),
                f(s.x[2]),
                f(report.hamiltonian_deviation[i]),
                f(report.momentum_literal_deviation[i]),
                f(report.momentum_symmetrized_deviation[i]),
            ]
        })
        .collect();
    let header = ["t", "x", "y", "z", "energy_deviation", "momentum_literal_deviation", "momentum_symmetrized_deviation"];
    let files = vec![write_csv(&out.join("identities.csv"), &header, &rows)?];
    let matching = report.matching_orderings(tol);
    let worst = report.max_hamiltonian_deviation();
    let pass = worst <= tol && report.density_variation <= DENSITY_VARIATION_TOL && !matching.is_empty();
    #[derive(Serialize)]
    struct D {
        samples: usize,
        max_energy_deviation: f64,
        density_variation: f64,
        electric_variation: f64,
        magnetic_variation: f64,
        matching_orderings: Vec<crate::field::PoyntingOrdering>,
    }
    let msg = format!("{count} samples, energy deviation {}, matching orderings {matching:?}", f(worst));
    let d = D {
        samples: count,
        max_energy_deviation: worst,
        density_variation: report.density_variation,
        electric_variation: report.electric_variation,
        magnetic_variation: report.magnetic_variation,
        matching_orderings: matching,
    };
    finish(Command::FieldIdentities, out, pass, tol, d, msg, files)
}

fn emission(res: &Resolved, out: &Path, fault: bool) -> Result<Outcome, CliError> {
    let tol = res.tolerance(EMISSION_TOL);
    let atom = res.atom()?;
    let cfg = &res.field;
    let layout = res.layout.with_atom();
    let settings = res.config.emission.clone().unwrap_or(EmissionSettings { t: 1.0, initial: None, dipoles: Vec::new() });
    let comps = settings.initial.clone().unwrap_or_else(|| res.uniform_vacuum());
    if let Some(c) = comps.iter().find(|c| c.n >= layout.nmax()) {
        return Err(CliError::config(format!("initial component (mode {}, n {}) needs nmax > {}", c.mode, c.n, c.n)));
    }
    if settings.dipoles.iter().any(|&d| !(d.is_finite() && d > 0.0)) {
        return Err(CliError::config("convergence dipoles must be > 0"));
    }
    let initial = res.state(&layout, &comps, Some(AtomLevel::Excited))?;
    let t = settings.t;
    let amps = first_order_emission(&initial, &atom, cfg, t)?;
    let rows: Vec<Vec<String>> = amps
        .entries
        .iter()
        .filter(|e| e.n_initial < layout.nmax())
        .map(|e| {
            let k = e.label.kappa();
            let [re, im] = c(e.amplitude);
            vec![
                e.label.s().to_string(),
                f(k[0]),
                f(k[1]),
                f(k[2]),
                f(e.label.omega()),
                e.n_initial.to_string(),
                re,
                im,
                e.channel.to_string(),
                f(e.amplitude.norm_sqr()),
            ]
        })
        .collect();
    let header = ["s", "kx", "ky", "kz", "omega", "n_initial", "amp_re", "amp_im", "channel", "abs2"];
    let mut files = vec![write_csv(&out.join("emission.csv"), &header, &rows)?];

    let closed = first_order_state(&initial, &atom, cfg, t)?;
    let mut quad = first_order_state_quadrature(&initial, &atom, cfg, t, &Quadrature::default())?;
    if fault {
        let mut a = quad.amplitudes().clone();
        a[0] += C64::new(1e-6, 0.0);
        quad = StateVector::from_amplitudes(&layout, a)?;
    }
    let quadrature_deviation = closed.distance(&quad)?;
    let mut pass = quadrature_deviation <= tol;

    let slope = if settings.dipoles.is_empty() {
        None
    } else {
        let study = convergence_study(&initial, &atom, cfg, t, &settings.dipoles)?;
        let rows: Vec<Vec<String>> =
            settings.dipoles.iter().zip(&study.points).map(|(&d, &(x, y))| vec![f(d), f(x), f(y)]).collect();
        files.push(write_csv(&out.join("convergence.csv"), &["d", "coupling", "deviation"], &rows)?);
        if settings.dipoles.len() >= 2 {
            pass &= (study.slope - SLOPE_TARGET).abs() <= SLOPE_TOL;
            Some(study.slope)
        } else {
            None
        }
    };

    let jc_deviation = if layout.mode_count() == 1 {
        let jc = JaynesCummings::new(&layout.modes()[0], &atom, cfg, layout.nmax())?;
        let h = atom_field_hamiltonian(&layout, &atom, cfg)?;
        let excited = |s: &StateVector| -> f64 { s.amplitudes().rows(layout.field_dim(), layout.field_dim()).norm_squared() };
        let mut worst: f64 = 0.0;
        let mut rows = Vec::new();
        for time in res.times() {
            let exact = evolve(&h, &initial, time, cfg.hbar)?;
            let reference = StateVector::from_amplitudes(&layout, jc.evolve(initial.amplitudes(), time))?;
            let dev = exact.distance(&reference)?;
            worst = worst.max(dev);
            rows.push(vec![f(time), f(excited(&exact)), f(excited(&reference)), f(dev)]);
        }
        files.push(write_csv(&out.join("jaynes_cummings.csv"), &["t", "excited_population", "jc_excited_population", "deviation"], &rows)?);
        pass &= worst <= tol;
        Some(worst)
    } else {
        None
    };

    #[derive(Serialize)]
    struct D {
        t: f64,
        entries: usize,
        quadrature_deviation: f64,
        convergence_slope: Option<f64>,
        jaynes_cummings_deviation: Option<f64>,
    }
    let msg = format!("{} amplitudes, quadrature deviation {}", rows.len(), f(quadrature_deviation));
    let d = D { t, entries: rows.len(), quadrature_deviation, convergence_slope: slope, jaynes_cummings_deviation: jc_deviation };
    finish(Command::Emission, out, pass, tol, d, msg, files)
}

fn compare(res: &Resolved, out: &Path, fault: bool) -> Result<Outcome, CliError> {
    let tol = res.tolerance(COMPARE_TOL);
    let layout = &res.layout;
    let cfg = &res.field;
    StandardLayout::new(layout.modes().to_vec(), layout.nmax(), res.config.atom.is_some())?;
    let mut named: Vec<(String, Vec<Component>)> = match &res.config.states {
        Some(s) => s.iter().map(|n| (n.name.clone(), n.components.clone())).collect(),
        None => (0..layout.mode_count())
            .map(|k| (format!("vacuum_{k}"), vec![Component { mode: k, n: 0, amp: C64::new(1.0, 0.0) }]))
            .collect(),
    };
    if res.config.states.is_none() {
        named.push(("uniform_vacuum".into(), res.uniform_vacuum()));
    }
    let states = named.iter().map(|(_, c)| res.state(layout, c, None)).collect::<Result<Vec<_>, _>>()?;

    let weights = match (&res.config.atom, &res.config.emission) {
        (Some(_), settings) => {
            let comps = settings.as_ref().and_then(|s| s.initial.clone()).unwrap_or_else(|| res.uniform_vacuum());
            if let Some(c) = comps.iter().find(|c| c.n != 0) {
                return Err(CliError::config(format!("compare-standard emission weights must be zero-photon, got n = {}", c.n)));
            }
            let mut w = vec![C64::new(0.0, 0.0); layout.mode_count()];
            for c in &comps {
                *w.get_mut(c.mode).ok_or_else(|| CliError::config(format!("mode {} out of range", c.mode)))? = c.amp;
            }
            Some((w, settings.as_ref().map_or(1.0, |s| s.t)))
        }
        _ => None,
    };
    let mut report = compare_report(layout, cfg, &states, res.config.atom.as_ref(), weights.as_ref().map(|(w, t)| (w.as_slice(), *t)))?;
    if fault {
        report.algebra.cross_creation_single_oscillator = 1.0;
    }

    let v = &report.vacuum_energy;
    let mut pass = report.algebra.cross_creation_single_oscillator == 0.0
        && (layout.mode_count() < 2 || report.algebra.cross_creation_standard > 0.0)
        && report.algebra.standard_interior_commutator_deviation <= tol
        && v.states.iter().zip(&states).all(|(&e, s)| {
            let in_vacuum = s.components().all(|(b, a)| b.n == 0 || a.norm() == 0.0);
            !in_vacuum || (v.single_oscillator_min - tol..=v.single_oscillator_max + tol).contains(&e)
        });
    let mut emission_rows = Vec::with_capacity(report.emission.len());
    for e in &report.emission {
        let dev = (e.single_oscillator - e.weight * e.standard).norm();
        pass &= dev <= tol;
        let mut row = vec![e.mode.to_string(), f(e.omega)];
        row.extend(c(e.weight));
        row.extend(c(e.single_oscillator));
        row.extend(c(e.standard));
        row.push(f(dev));
        emission_rows.push(row);
    }
    let vacuum_rows: Vec<Vec<String>> =
        named.iter().zip(&v.states).map(|((name, _), &e)| vec![name.clone(), f(e), f(v.standard)]).collect();
    let files = vec![
        write_json(&out.join("compare.json"), &report)?,
        write_csv(
            &out.join("compare_emission.csv"),
            &["mode", "omega", "weight_re", "weight_im", "single_re", "single_im", "standard_re", "standard_im", "deviation"],
            &emission_rows,
        )?,
        write_csv(&out.join("compare_vacuum.csv"), &["state", "single_oscillator_energy", "standard_energy"], &vacuum_rows)?,
    ];
    let msg = format!(
        "dimensions {} vs {}, vacuum energy [{}, {}] vs {}",
        report.dimensions.single_oscillator,
        report.dimensions.standard,
        f(v.single_oscillator_min),
        f(v.single_oscillator_max),
        f(v.standard)
    );
    finish(Command::CompareStandard, out, pass, tol, &report.dimensions, msg, files)
}

