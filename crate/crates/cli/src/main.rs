//! `dmv`: runs the verification suites and the individual model calculators.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dirac_maxwell::dirac::{
    alpha_prime_set, canonical_alpha_set, canonical_transform, s_matrix, AlphaSet, TransformMode,
};
use dirac_maxwell::dynamics::{
    centripetal, comparison_table, lagrangian_linear, lagrangian_nonlinear, lorentz_force_ring,
    magnetic_confinement_density, maxwell_lagrangian_forms, ring_wave_residual,
    self_action_constant, Centripetal, ComparisonTable, FieldSample, LinearLagrangian,
    NonlinearLagrangian, Polarization, RingForce, RingWaveProfile,
};
use dirac_maxwell::em::{fields_from_bispinor, ComplexPlaneWave, EmField, FieldLayout, FieldProfile};
use dirac_maxwell::planewave::{
    branch_energy, build_system, dispersion, field_interpretation, residual, solution_basis,
    Branch, FieldInterpretation, PlaneWaveState,
};
use dirac_maxwell::report::DiscrepancyEntry;
use dirac_maxwell::suites::{verify, Meta, OutputFormat, RunConfig, Suite};
use dirac_maxwell::torus::{
    charge_closed_form, consistency_chain, coupling_constant, density_mass, discrepancies,
    integrate_charge, integrate_mass, mass_closed_form, printed_half_wave_charge, ring_current,
    spin_and_moment, stated_half_wave_charge, zitterbewegung, ChainReport, ChargeSpan, SpinMoment,
    TorusModel, Zitterbewegung,
};
use dirac_maxwell::units::UnitMode;
use dirac_maxwell::{Bispinor, Complex, Error};

#[derive(Parser)]
#[command(name = "dmv", version, about = "Dirac/Maxwell correspondence verifier")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value = "natural")]
    units: UnitsArg,
    #[arg(long, global = true, default_value_t = 1.0)]
    zeta: f64,
    #[arg(long = "tol-abs", global = true, default_value_t = 1e-12)]
    tol_abs: f64,
    #[arg(long = "tol-rel", global = true, default_value_t = 1e-12)]
    tol_rel: f64,
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format; `sweep-zeta` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    #[arg(long = "quad-points", global = true, default_value_t = 256)]
    quad_points: usize,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum UnitsArg {
    Natural,
    #[value(name = "gaussian_cgs", alias = "gaussian-cgs", alias = "cgs")]
    GaussianCgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Algebra,
    Bilinear,
    Fierz,
    Torus,
    Planewave,
    Dynamics,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Positive,
    Negative,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetArg {
    Canonical,
    Primed,
    /// `S⁺aS` of the canonical set.
    Similarity,
    /// `SaS` of the canonical set.
    #[value(name = "two-sided")]
    TwoSided,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exit 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// Torus geometry, charge, mass, coupling, spin and moment.
    Torus,
    /// Plane-wave solutions for one momentum.
    Planewave {
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        px: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        py: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        pz: f64,
        #[arg(long, value_enum, default_value = "positive")]
        branch: BranchArg,
    },
    /// Ring forces, Lagrangian values and the photon-photon comparison table.
    Dynamics,
    /// Torus quantities over a grid of ζ values.
    SweepZeta {
        #[arg(long, default_value_t = 0.05)]
        min: f64,
        #[arg(long, default_value_t = 1.0)]
        max: f64,
        #[arg(long, default_value_t = 20)]
        steps: usize,
    },
    /// Serialize a matrix set with complex entries as `[re, im]`.
    DumpMatrices {
        #[arg(long, value_enum, default_value = "canonical")]
        set: SetArg,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) | Error::Domain(..) | Error::AxisMismatch { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn runtime(e: String) -> Failure {
    Failure::Runtime(e)
}

fn config_from(g: &GlobalArgs, default_format: OutputFormat) -> RunConfig {
    RunConfig {
        units: match g.units {
            UnitsArg::Natural => UnitMode::Natural,
            UnitsArg::GaussianCgs => UnitMode::GaussianCgs,
        },
        zeta: g.zeta,
        tol_abs: g.tol_abs,
        tol_rel: g.tol_rel,
        samples: g.samples,
        seed: g.seed,
        format: match g.format {
            Some(FormatArg::Json) => OutputFormat::Json,
            Some(FormatArg::Csv) => OutputFormat::Csv,
            Some(FormatArg::Text) => OutputFormat::Text,
            None => default_format,
        },
        quadrature_points: g.quad_points,
    }
}

fn meta(label: &str, config: &RunConfig) -> Meta {
    Meta {
        version: env!("CARGO_PKG_VERSION").to_string(),
        suite: label.to_string(),
        config: *config,
    }
}

#[derive(Serialize)]
struct ChargeBody {
    full_wave: f64,
    half_wave_density: f64,
    half_wave_printed: f64,
    half_wave_stated: f64,
    closed_form: f64,
}

#[derive(Serialize)]
struct MassBody {
    quadrature: f64,
    closed_form: f64,
    density_form: f64,
}

#[derive(Serialize)]
struct TorusBody {
    meta: Meta,
    model: TorusModel,
    alpha_q: f64,
    charge: ChargeBody,
    mass: MassBody,
    chain: ChainReport,
    spin: SpinMoment,
    zitterbewegung: Zitterbewegung,
    ledger: Vec<DiscrepancyEntry>,
}

fn cmd_torus(cfg: &RunConfig) -> Result<String, Failure> {
    let model = cfg.calibrated_model()?;
    let n = cfg.quadrature_points;
    let q = charge_closed_form(&model)?;
    let body = TorusBody {
        meta: meta("torus", cfg),
        model,
        alpha_q: coupling_constant(model.zeta)?,
        charge: ChargeBody {
            full_wave: integrate_charge(&model, ChargeSpan::FullWave, n)?,
            half_wave_density: integrate_charge(&model, ChargeSpan::HalfWave, n)?,
            half_wave_printed: printed_half_wave_charge(&model, n)?,
            half_wave_stated: stated_half_wave_charge(&model)?,
            closed_form: q,
        },
        mass: MassBody {
            quadrature: integrate_mass(&model, n)?,
            closed_form: mass_closed_form(&model)?,
            density_form: density_mass(&model, n)?,
        },
        chain: consistency_chain(&model)?,
        spin: spin_and_moment(&model, q),
        zitterbewegung: zitterbewegung(&model.units),
        ledger: discrepancies(&model, n)?,
    };
    output::render_body(&body, cfg.format).map_err(runtime)
}

#[derive(Serialize)]
struct SolutionBody {
    amplitudes: Bispinor,
    residual: f64,
    /// Field reading through the negative-orientation layout of the
    /// momentum's axis; absent when the momentum is not along one axis.
    interpretation: Option<FieldInterpretation>,
}

#[derive(Serialize)]
struct PlanewaveBody {
    meta: Meta,
    branch: &'static str,
    momentum: [f64; 3],
    energy: f64,
    dispersion: (f64, f64),
    determinant: Complex,
    orthogonality: f64,
    solutions: Vec<SolutionBody>,
}

fn cmd_planewave(cfg: &RunConfig, p: [f64; 3], branch: Branch) -> Result<String, Failure> {
    for (name, v) in ["px", "py", "pz"].iter().zip(p) {
        if !v.is_finite() {
            return Err(Failure::Usage(format!("{name} must be finite")));
        }
    }
    let units = cfg.unit_system();
    let (m, c) = (units.m_e, units.c);
    let set = canonical_alpha_set();
    let energy = branch_energy(branch, p, m, c);
    let axis_layout = {
        let nonzero: Vec<usize> = (0..3).filter(|&k| p[k] != 0.0).collect();
        match nonzero.as_slice() {
            [k] => Some(
                dirac_maxwell::dirac::axis_triad(
                    dirac_maxwell::Axis::ALL[*k],
                    dirac_maxwell::dirac::Orientation::Negative,
                )
                .layout,
            ),
            _ => None,
        }
    };
    let basis = solution_basis(branch, p, m, c);
    let mut solutions = Vec::new();
    for which in 0..2 {
        let st = PlaneWaveState::from_basis(branch, which, p, m, c, 0.0);
        let interpretation = match &axis_layout {
            Some(l) => Some(field_interpretation(&st, l)?),
            None => None,
        };
        solutions.push(SolutionBody {
            amplitudes: st.amplitudes,
            residual: residual(&st, &set, m, c),
            interpretation,
        });
    }
    let body = PlanewaveBody {
        meta: meta("planewave", cfg),
        branch: branch.as_str(),
        momentum: p,
        energy,
        dispersion: dispersion(p, m, c),
        determinant: build_system(energy, p, m, c).determinant(),
        orthogonality: basis[0].hdot(&basis[1]).norm(),
        solutions,
    };
    output::render_body(&body, cfg.format).map_err(runtime)
}

#[derive(Serialize)]
struct ForceBody {
    ex_hz: RingForce,
    ez_hx: RingForce,
    confinement: [f64; 3],
}

#[derive(Serialize)]
struct LagrangianBody {
    on_shell: LinearLagrangian,
    detuned: LinearLagrangian,
    maxwell_form: (Complex, Complex),
    nonlinear: NonlinearLagrangian,
}

#[derive(Serialize)]
struct DynamicsBody {
    meta: Meta,
    e0: f64,
    forces: ForceBody,
    lagrangian: LagrangianBody,
    comparison: ComparisonTable,
    self_action: f64,
    centripetal: Centripetal,
    ring_wave: RingWaveProfile,
}

fn sample(w: &ComplexPlaneWave, t: f64, y: f64) -> FieldSample {
    FieldSample {
        f: w.fields(t, y),
        dt: w.d_dt(t, y).unwrap_or(EmField::ZERO),
        dy: w.d_ds(t, y).unwrap_or(EmField::ZERO),
    }
}

fn cmd_dynamics(cfg: &RunConfig) -> Result<String, Failure> {
    let model = cfg.calibrated_model()?;
    let units = model.units;
    let (m, c) = (units.m_e, units.c);
    let set = canonical_alpha_set();
    let e0 = model.e0()?;
    let j = ring_current(&model, e0, 0.0).j_tau;
    let confinement =
        magnetic_confinement_density(&EmField::real([e0, 0.0, 0.0], [0.0, 0.0, e0]), [0.0, j, 0.0], c)?.re();

    // y-wave at p_y = mc on the positive branch
    let ky = m * c / units.hbar;
    let p = [0.0, units.hbar * ky, 0.0];
    let b = solution_basis(Branch::Positive, p, m, c)[0];
    let omega = branch_energy(Branch::Positive, p, m, c) / units.hbar;
    let amplitude = fields_from_bispinor(&b, &FieldLayout::electron()).scale(Complex::new(e0, 0.0));
    let plus = ComplexPlaneWave {
        amplitude,
        omega: -omega,
        k: -ky,
    };
    let detuned = ComplexPlaneWave {
        omega: -1.1 * omega,
        ..plus
    };
    let conj = ComplexPlaneWave {
        amplitude,
        omega,
        k: ky,
    };
    let (t, y) = (0.25 / omega, 0.1 / ky);
    let real_probe = EmField::real([e0, 0.0, 0.3 * e0], [0.5 * e0, 0.0, -e0]);
    let body = DynamicsBody {
        meta: meta("dynamics", cfg),
        e0,
        forces: ForceBody {
            ex_hz: lorentz_force_ring(&model, e0, Polarization::ExHz)?,
            ez_hx: lorentz_force_ring(&model, e0, Polarization::EzHx)?,
            confinement,
        },
        lagrangian: LagrangianBody {
            on_shell: lagrangian_linear(&sample(&plus, t, y), &set, &units, m)?,
            detuned: lagrangian_linear(&sample(&detuned, t, y), &set, &units, m)?,
            maxwell_form: maxwell_lagrangian_forms(&sample(&conj, t, y), &units, m),
            nonlinear: lagrangian_nonlinear(&real_probe, None, &model, &set, m)?,
        },
        comparison: comparison_table(&model, m),
        self_action: self_action_constant(&model, coupling_constant(model.zeta)?)?,
        centripetal: centripetal(model.omega_s, model.r_s)?,
        ring_wave: ring_wave_residual(&model, 16)?,
    };
    output::render_body(&body, cfg.format).map_err(runtime)
}

#[derive(Serialize)]
struct SweepRow {
    zeta: f64,
    alpha_q: f64,
    r_c: f64,
    s_c: f64,
    delta_tau: f64,
    e0: f64,
    q: f64,
    m_s: f64,
    alpha_q_from_q: f64,
    r_o_over_r_s: f64,
    mu_s: f64,
}

fn cmd_sweep(cfg: &RunConfig, min: f64, max: f64, steps: usize) -> Result<String, Failure> {
    if steps < 1 || !(min.is_finite() && max.is_finite()) || min > max {
        return Err(Failure::Usage(format!(
            "sweep needs finite min <= max and at least one step, got min={min} max={max} steps={steps}"
        )));
    }
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let zeta = if steps == 1 {
            min
        } else {
            min + (max - min) * i as f64 / (steps - 1) as f64
        };
        let model = RunConfig { zeta, ..*cfg }.calibrated_model()?;
        let chain = consistency_chain(&model)?;
        rows.push(SweepRow {
            zeta,
            alpha_q: chain.alpha_q,
            r_c: model.r_c,
            s_c: model.s_c,
            delta_tau: model.delta_tau,
            e0: chain.e0,
            q: chain.q,
            m_s: chain.m_s,
            alpha_q_from_q: chain.alpha_q_from_q,
            r_o_over_r_s: chain.r_o_over_r_s,
            mu_s: spin_and_moment(&model, chain.q).mu_s,
        });
    }
    output::render_table(&meta("sweep-zeta", cfg), &rows, cfg.format).map_err(runtime)
}

fn cmd_dump(cfg: &RunConfig, which: SetArg) -> Result<String, Failure> {
    let set: AlphaSet = match which {
        SetArg::Canonical => canonical_alpha_set(),
        SetArg::Primed => alpha_prime_set(),
        SetArg::Similarity => canonical_transform(&s_matrix(), &canonical_alpha_set(), TransformMode::Similarity)?,
        SetArg::TwoSided => canonical_transform(&s_matrix(), &canonical_alpha_set(), TransformMode::TwoSided)?,
    };
    #[derive(Serialize)]
    struct DumpBody {
        meta: Meta,
        set: AlphaSet,
        s: dirac_maxwell::Mat4,
    }
    output::render_body(
        &DumpBody {
            meta: meta("dump-matrices", cfg),
            set,
            s: s_matrix(),
        },
        cfg.format,
    )
    .map_err(runtime)
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let default_format = match cli.command {
        Command::SweepZeta { .. } => OutputFormat::Csv,
        _ => OutputFormat::Json,
    };
    let cfg = config_from(&cli.global, default_format);
    cfg.validate()?;
    let text = match &cli.command {
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Algebra => Suite::Algebra,
                SuiteArg::Bilinear => Suite::Bilinear,
                SuiteArg::Fierz => Suite::Fierz,
                SuiteArg::Torus => Suite::Torus,
                SuiteArg::Planewave => Suite::Planewave,
                SuiteArg::Dynamics => Suite::Dynamics,
                SuiteArg::All => Suite::All,
            };
            let report = verify(&cfg, suite)?;
            let failed = report.any_failed();
            return Ok((output::render_report(&report, cfg.format).map_err(runtime)?, failed));
        }
        Command::Torus => cmd_torus(&cfg)?,
        Command::Planewave { px, py, pz, branch } => {
            let b = match branch {
                BranchArg::Positive => Branch::Positive,
                BranchArg::Negative => Branch::Negative,
            };
            cmd_planewave(&cfg, [*px, *py, *pz], b)?
        }
        Command::Dynamics => cmd_dynamics(&cfg)?,
        Command::SweepZeta { min, max, steps } => cmd_sweep(&cfg, *min, *max, *steps)?,
        Command::DumpMatrices { set } => cmd_dump(&cfg, *set)?,
    };
    Ok((text, false))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, failed)) => {
            let written = match &cli.global.out {
                Some(path) => std::fs::write(path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if failed { 1 } else { 0 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
