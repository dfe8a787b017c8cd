//! Command implementations: parameter resolution (flags → config → default),
//! validation with exit-code-2 messages that name the offending flag, and the
//! verification reports.

use crate::config::Config;
use crate::output::{fmt_float, Cell, Table};
use crate::CliError;
use num_complex::Complex64 as C64;
use ptcl_core::analysis::{
    crossing_opposite, crossing_same_positive, figure_data, CrossingKind, FigureFamily,
};
use ptcl_core::liouville::{
    ks_alpha_to_big_a, ks_kappa_sq, transform_potential, transform_wavefunction,
    EffectivePotential, MapKS,
};
use ptcl_core::models::{
    coulomb_energy, coulomb_levels_in_window, coulomb_ode_residual, coulomb_wavefunction,
    ho_energy, ho_levels_in_window, ho_wavefunction, oscillator_ode_residual, ModelError,
    QuantumState, QuasiParity,
};
use ptcl_core::solver::{scan_eigenvalues, ShootingProblem};
use ptcl_core::{Contour, ContourKind, ContourSpec};

const RESIDUAL_TOLERANCE: f64 = 1e-9;
const IDENTITY_TOLERANCE: f64 = 1e-10;
const SHOOT_REL_TOLERANCE: f64 = 1e-5;
const DEFAULT_SHOOT_GRID: usize = 400;

fn require_f64(flag: Option<f64>, cfg: &Config, key: &str) -> Result<f64, CliError> {
    flag.or_else(|| cfg.f64(key)).ok_or_else(|| {
        CliError::usage(format!(
            "missing required flag --{key} (or config key \"{key}\")"
        ))
    })
}

fn require_u32(flag: Option<u32>, cfg: &Config, key: &str) -> Result<u32, CliError> {
    flag.or_else(|| cfg.u32(key)).ok_or_else(|| {
        CliError::usage(format!(
            "missing required flag --{key} (or config key \"{key}\")"
        ))
    })
}

fn positive(value: f64, key: &str) -> Result<f64, CliError> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(CliError::usage(format!("--{key} must be positive, got {value}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum QFilter {
    One(QuasiParity),
    Both,
}

impl QFilter {
    fn parities(&self) -> Vec<QuasiParity> {
        match self {
            QFilter::One(q) => vec![*q],
            QFilter::Both => vec![QuasiParity::Plus, QuasiParity::Minus],
        }
    }
}

fn parse_q_filter(flag: Option<String>, cfg: &Config) -> Result<QFilter, CliError> {
    let raw = flag.or_else(|| cfg.string("q"));
    match raw.as_deref() {
        None | Some("both") => Ok(QFilter::Both),
        Some("+1") | Some("1") => Ok(QFilter::One(QuasiParity::Plus)),
        Some("-1") => Ok(QFilter::One(QuasiParity::Minus)),
        Some(other) => Err(CliError::usage(format!(
            "--q must be +1, -1 or both, got `{other}`"
        ))),
    }
}

fn parse_q_single(flag: Option<String>, cfg: &Config) -> Result<QuasiParity, CliError> {
    match parse_q_filter(flag, cfg)? {
        QFilter::One(q) => Ok(q),
        QFilter::Both => Err(CliError::usage(
            "missing required flag --q (+1 or -1 for this check)",
        )),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Model {
    Ho,
    Coulomb,
}

fn parse_model(raw: &str) -> Result<Model, CliError> {
    match raw {
        "ho" => Ok(Model::Ho),
        "coulomb" => Ok(Model::Coulomb),
        other => Err(CliError::usage(format!(
            "model must be ho or coulomb, got `{other}`"
        ))),
    }
}

// ── spectrum ────────────────────────────────────────────────────────────

pub fn cmd_spectrum(
    cfg: &Config,
    model: &str,
    alpha: Option<f64>,
    big_a: Option<f64>,
    ze2: Option<f64>,
    n_max: Option<u32>,
    q: Option<String>,
) -> Result<Table, CliError> {
    let model = parse_model(model)?;
    let n_max = require_u32(n_max, cfg, "n-max")?;
    let q_filter = parse_q_filter(q, cfg)?;

    let mut table = Table::new(
        match model {
            Model::Ho => "spectrum ho",
            Model::Coulomb => "spectrum coulomb",
        },
        vec!["n", "q", "energy", "normalizable"],
    );

    match model {
        Model::Ho => {
            let alpha = positive(require_f64(alpha, cfg, "alpha")?, "alpha")?;
            table.comment(format!("alpha={}", fmt_float(alpha)));
            for n in 0..=n_max {
                for q in q_filter.parities() {
                    let e = ho_energy(QuantumState::new(n, q), alpha);
                    table.push(vec![
                        Cell::Int(n as i64),
                        Cell::Int(q.as_i8() as i64),
                        Cell::OptFloat(Some(e)),
                        Cell::Bool(true),
                    ]);
                }
            }
        }
        Model::Coulomb => {
            let a = positive(require_f64(big_a, cfg, "A")?, "A")?;
            let ze2 = positive(ze2.or_else(|| cfg.f64("ze2")).unwrap_or(1.0), "ze2")?;
            table.comment(format!("A={} ze2={}", fmt_float(a), fmt_float(ze2)));
            for n in 0..=n_max {
                for q in q_filter.parities() {
                    let row = match coulomb_energy(QuantumState::new(n, q), a, ze2) {
                        Ok(level) => vec![
                            Cell::Int(n as i64),
                            Cell::Int(q.as_i8() as i64),
                            Cell::OptFloat(Some(level.energy)),
                            Cell::Bool(level.normalizable),
                        ],
                        Err(ModelError::DivergentState(_)) => vec![
                            Cell::Int(n as i64),
                            Cell::Int(q.as_i8() as i64),
                            Cell::OptFloat(None),
                            Cell::Bool(false),
                        ],
                        Err(e) => return Err(CliError::failure(e.to_string())),
                    };
                    table.push(row);
                }
            }
        }
    }
    Ok(table)
}

// ── figure ──────────────────────────────────────────────────────────────

#[allow(clippy::too_many_arguments)]
pub fn cmd_figure(
    cfg: &Config,
    which: u8,
    a_min: Option<f64>,
    a_max: Option<f64>,
    a_step: Option<f64>,
    n: Option<Vec<u32>>,
    nprime: Option<u32>,
    crossing: Option<String>,
    ze2: Option<f64>,
) -> Result<Table, CliError> {
    let a_min = require_f64(a_min, cfg, "a-min")?;
    let a_max = require_f64(a_max, cfg, "a-max")?;
    let a_step = require_f64(a_step, cfg, "a-step")?;
    if !(a_min > 0.0 && a_min < a_max && a_step > 0.0) {
        return Err(CliError::usage(format!(
            "empty A range: need 0 < --a-min < --a-max and --a-step > 0, got a-min={a_min} a-max={a_max} a-step={a_step}"
        )));
    }
    let ze2 = positive(ze2.or_else(|| cfg.f64("ze2")).unwrap_or(1.0), "ze2")?;
    let n_list = n.or_else(|| cfg.u32_list("n"));

    let (family, n_list) = match which {
        1 | 2 => {
            let n_list = n_list
                .filter(|l| !l.is_empty())
                .ok_or_else(|| CliError::usage("missing required flag --n (one or more indices)"))?;
            let family = if which == 1 {
                FigureFamily::Fig1QPlus
            } else {
                FigureFamily::Fig2QMinus
            };
            (family, n_list)
        }
        3 => {
            let n_list = n_list
                .ok_or_else(|| CliError::usage("missing required flag --n (the first crossing member)"))?;
            if n_list.len() != 1 {
                return Err(CliError::usage("figure 3 takes exactly one --n value"));
            }
            let n = n_list[0];
            let n_prime = require_u32(nprime, cfg, "nprime")?;
            let kind = match crossing
                .or_else(|| cfg.string("crossing"))
                .as_deref()
            {
                Some("opposite") => CrossingKind::OppositeQ,
                Some("same-positive") | Some("same_positive") => CrossingKind::SamePositiveQ,
                Some(other) => {
                    return Err(CliError::usage(format!(
                        "--crossing must be opposite or same-positive, got `{other}`"
                    )))
                }
                None => {
                    return Err(CliError::usage(
                        "missing required flag --crossing (opposite or same-positive)",
                    ))
                }
            };
            match kind {
                CrossingKind::OppositeQ if n <= n_prime => {
                    return Err(CliError::usage(
                        "opposite crossing needs --n greater than --nprime",
                    ))
                }
                CrossingKind::SamePositiveQ if n == n_prime => {
                    return Err(CliError::usage(
                        "same-positive crossing needs --n different from --nprime",
                    ))
                }
                _ => {}
            }
            (
                FigureFamily::Fig3Crossing { kind, n, n_prime },
                vec![n],
            )
        }
        _ => unreachable!("clap range parser"),
    };

    let mut table = Table::new(&format!("figure {which}"), vec!["A", "n", "q", "E", "normalizable"]);
    table.comment(format!(
        "a_min={} a_max={} a_step={} ze2={}",
        fmt_float(a_min),
        fmt_float(a_max),
        fmt_float(a_step),
        fmt_float(ze2)
    ));
    for row in figure_data(family, a_min, a_max, a_step, &n_list, ze2) {
        table.push(vec![
            Cell::Float(row.a),
            Cell::Int(row.n as i64),
            Cell::Int(row.q as i64),
            Cell::OptFloat(row.energy),
            Cell::Bool(row.normalizable),
        ]);
    }
    Ok(table)
}

// ── crossings ───────────────────────────────────────────────────────────

pub fn cmd_crossings(
    cfg: &Config,
    n_max: Option<i64>,
    ze2: Option<f64>,
) -> Result<Table, CliError> {
    let n_max = n_max
        .or_else(|| cfg.i64("n-max"))
        .ok_or_else(|| CliError::usage("missing required flag --n-max (or config key \"n-max\")"))?;
    if n_max < 0 {
        return Err(CliError::usage(format!(
            "--n-max must be non-negative, got {n_max}"
        )));
    }
    let n_max = n_max as u32;
    let ze2 = positive(ze2.or_else(|| cfg.f64("ze2")).unwrap_or(1.0), "ze2")?;

    let mut table = Table::new(
        "crossings",
        vec![
            "kind",
            "n",
            "nprime",
            "a_crit",
            "energy",
            "denom_n",
            "denom_nprime",
        ],
    );
    table.comment(format!("n_max={n_max} ze2={}", fmt_float(ze2)));

    let mut push = |rec: ptcl_core::analysis::CrossingRecord| {
        let kind = match rec.kind {
            CrossingKind::OppositeQ => "opposite",
            CrossingKind::SamePositiveQ => "same_positive",
        };
        table.push(vec![
            Cell::Str(kind.to_string()),
            Cell::Int(rec.n as i64),
            Cell::Int(rec.n_prime as i64),
            Cell::Float(rec.a_crit),
            Cell::Float(rec.energy_at_crossing),
            Cell::Float(rec.denom_n),
            Cell::Float(rec.denom_n_prime),
        ]);
    };

    for n in 1..=n_max {
        for n_prime in 0..n {
            push(crossing_opposite(n, n_prime, ze2).map_err(|e| CliError::failure(e.to_string()))?);
        }
    }
    for n in 1..=n_max {
        for n_prime in 0..n {
            push(
                crossing_same_positive(n, n_prime, ze2)
                    .map_err(|e| CliError::failure(e.to_string()))?,
            );
        }
    }
    Ok(table)
}

// ── verify ──────────────────────────────────────────────────────────────

#[derive(Debug, Default)]
pub struct ContourFlags {
    pub kind: Option<String>,
    pub c: Option<f64>,
    pub kappa_c_sq: Option<f64>,
    pub eta: Option<f64>,
    pub x_max: Option<f64>,
}

fn resolve_contour(
    cfg: &Config,
    flags: &ContourFlags,
    default_kind: ContourKind,
) -> Result<Contour, CliError> {
    let kind: ContourKind = match flags.kind.clone().or_else(|| cfg.string("contour-kind")) {
        Some(raw) => raw
            .parse()
            .map_err(|e: String| CliError::usage(format!("--contour-kind: {e}")))?,
        None => default_kind,
    };
    let default_x_max = match kind {
        ContourKind::KsParabola => 20.0,
        _ => 12.0,
    };
    let spec = ContourSpec {
        kind,
        c: flags.c.or_else(|| cfg.f64("contour-c")).unwrap_or(1.0),
        kappa_c_sq: flags
            .kappa_c_sq
            .or_else(|| cfg.f64("kappa-c-sq"))
            .or(Some(1.0)),
        eta: flags.eta.or_else(|| cfg.f64("eta")),
        x_max: flags
            .x_max
            .or_else(|| cfg.f64("x-max"))
            .unwrap_or(default_x_max),
    };
    spec.to_contour().map_err(CliError::Usage)
}

/// Residual acceptance for shooting scans: PTCL_TOL overrides the 1e-8
/// default.
fn residual_accept_from_env() -> Result<f64, CliError> {
    match std::env::var("PTCL_TOL") {
        Ok(raw) => {
            let v: f64 = raw
                .parse()
                .map_err(|_| CliError::usage(format!("PTCL_TOL must be a number, got `{raw}`")))?;
            if v > 0.0 && v.is_finite() {
                Ok(v)
            } else {
                Err(CliError::usage(format!("PTCL_TOL must be positive, got {v}")))
            }
        }
        Err(_) => Ok(1e-8),
    }
}

#[derive(Debug)]
pub struct Report {
    pub lines: Vec<String>,
    pub pass: bool,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            lines: vec![format!("# pt-coulomb-lab v1, command={command}")],
            pass: true,
        }
    }

    fn line(&mut self, text: String) {
        self.lines.push(text);
    }

    fn finish(mut self) -> Self {
        self.lines
            .push(format!("RESULT {}", if self.pass { "pass" } else { "fail" }));
        self
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_verify(
    cfg: &Config,
    target: &str,
    model: Option<String>,
    n: Option<u32>,
    q: Option<String>,
    alpha: Option<f64>,
    big_a: Option<f64>,
    ze2: Option<f64>,
    e_min: Option<f64>,
    e_max: Option<f64>,
    grid: Option<usize>,
    contour_flags: ContourFlags,
) -> Result<Report, CliError> {
    match target {
        "residual" => verify_residual(cfg, model, n, q, alpha, big_a, ze2, &contour_flags),
        "liouville" => verify_liouville(cfg, n, q, alpha, ze2, &contour_flags),
        "shoot" => verify_shoot(cfg, model, alpha, big_a, ze2, e_min, e_max, grid, &contour_flags),
        other => Err(CliError::usage(format!(
            "verify target must be residual, liouville or shoot, got `{other}`"
        ))),
    }
}

#[allow(clippy::too_many_arguments)]
fn verify_residual(
    cfg: &Config,
    model: Option<String>,
    n: Option<u32>,
    q: Option<String>,
    alpha: Option<f64>,
    big_a: Option<f64>,
    ze2: Option<f64>,
    contour_flags: &ContourFlags,
) -> Result<Report, CliError> {
    let model = parse_model(
        &model
            .or_else(|| cfg.string("model"))
            .ok_or_else(|| CliError::usage("missing required flag --model (ho or coulomb)"))?,
    )?;
    let n = require_u32(n, cfg, "n")?;
    let q = parse_q_single(q, cfg)?;
    let s = QuantumState::new(n, q);

    let mut report = Report::new("verify residual");
    let (contour, max_residual) = match model {
        Model::Ho => {
            let alpha = positive(require_f64(alpha, cfg, "alpha")?, "alpha")?;
            let contour = resolve_contour(cfg, contour_flags, ContourKind::ShiftedLine)?;
            report.line(format!(
                "model=ho n={n} q={q} alpha={}",
                fmt_float(alpha)
            ));
            let mut worst = 0.0_f64;
            for x in linspace(-contour.x_max(), contour.x_max(), 50) {
                let r = oscillator_ode_residual(s, alpha, contour.eval(x))
                    .map_err(|e| CliError::failure(e.to_string()))?;
                worst = worst.max(r);
            }
            (contour, worst)
        }
        Model::Coulomb => {
            let a = positive(require_f64(big_a, cfg, "A")?, "A")?;
            let ze2 = positive(ze2.or_else(|| cfg.f64("ze2")).unwrap_or(1.0), "ze2")?;
            let contour = resolve_contour(cfg, contour_flags, ContourKind::KsParabola)?;
            report.line(format!(
                "model=coulomb n={n} q={q} A={} ze2={}",
                fmt_float(a),
                fmt_float(ze2)
            ));
            let mut worst = 0.0_f64;
            for x in linspace(-contour.x_max(), contour.x_max(), 50) {
                let r = coulomb_ode_residual(s, a, ze2, contour.eval(x))
                    .map_err(|e| CliError::failure(e.to_string()))?;
                worst = worst.max(r);
            }
            (contour, worst)
        }
    };
    report
        .lines
        .insert(1, format!("# contour {}", contour.spec()));
    report.line(format!(
        "points=50 max_residual={} tolerance={}",
        fmt_float(max_residual),
        fmt_float(RESIDUAL_TOLERANCE)
    ));
    if max_residual > RESIDUAL_TOLERANCE {
        report.pass = false;
        report.line(format!(
            "breach: max_residual={} exceeds tolerance",
            fmt_float(max_residual)
        ));
    }
    Ok(report.finish())
}

fn verify_liouville(
    cfg: &Config,
    n: Option<u32>,
    q: Option<String>,
    alpha: Option<f64>,
    ze2: Option<f64>,
    contour_flags: &ContourFlags,
) -> Result<Report, CliError> {
    let n = require_u32(n, cfg, "n")?;
    let q = parse_q_single(q, cfg)?;
    let alpha = positive(require_f64(alpha, cfg, "alpha")?, "alpha")?;
    let ze2 = positive(ze2.or_else(|| cfg.f64("ze2")).unwrap_or(1.0), "ze2")?;
    let s = QuantumState::new(n, q);

    let a = ks_alpha_to_big_a(alpha);
    let eps_sq = ho_energy(s, alpha);
    let k2 = ks_kappa_sq(eps_sq, ze2).map_err(|_| {
        CliError::usage(format!(
            "state n={n} q={q} alpha={alpha} has eps^2 = 0; the KS link is undefined (divergent state)"
        ))
    })?;
    let energy = k2 * k2;
    let map = MapKS::new(k2);
    let source = EffectivePotential::oscillator(alpha, eps_sq);
    let contour = resolve_contour(cfg, contour_flags, ContourKind::KsParabola)?;

    let mut report = Report::new("verify liouville");
    report.line(format!("# contour {}", contour.spec()));
    report.line(format!(
        "n={n} q={q} alpha={} A={} ze2={} eps_sq={} kappa_sq={}",
        fmt_float(alpha),
        fmt_float(a),
        fmt_float(ze2),
        fmt_float(eps_sq),
        fmt_float(k2)
    ));

    // central identity on 50 points, scaled by (1 + |t|^-2)
    let mut worst_identity = 0.0_f64;
    for x in linspace(-contour.x_max(), contour.x_max(), 50) {
        let t = contour.eval(x);
        let jet = map
            .map_eval(t)
            .map_err(|e| CliError::failure(e.to_string()))?;
        let transformed = transform_potential(&source, &jet, eps_sq)
            .map_err(|e| CliError::failure(e.to_string()))?;
        let target = (a * a - 0.25) / (t * t) + C64::new(0.0, ze2) / t - energy;
        let scaled = (transformed - target).norm() / (1.0 + 1.0 / t.norm_sqr());
        worst_identity = worst_identity.max(scaled);
    }
    report.line(format!(
        "identity_points=50 max_scaled_defect={} tolerance={}",
        fmt_float(worst_identity),
        fmt_float(IDENTITY_TOLERANCE)
    ));
    if worst_identity > IDENTITY_TOLERANCE {
        report.pass = false;
        report.line(format!(
            "breach: identity defect {} exceeds tolerance",
            fmt_float(worst_identity)
        ));
    }

    // wavefunction transport on 20 points
    let half_span = contour.x_max().min(10.0);
    let xs = linspace(-half_span, half_span, 20);
    let mut ratios = Vec::with_capacity(xs.len());
    for &x in &xs {
        let t = contour.eval(x);
        let jet = map
            .map_eval(t)
            .map_err(|e| CliError::failure(e.to_string()))?;
        let transported = transform_wavefunction(
            |r| ho_wavefunction(s, alpha, r).expect("contour avoids the origin"),
            &jet,
        )
        .map_err(|e| CliError::failure(e.to_string()))?;
        let direct = coulomb_wavefunction(s, a, ze2, t)
            .map_err(|e| CliError::failure(e.to_string()))?;
        ratios.push(transported / direct);
    }
    let mean = ratios.iter().sum::<C64>() / ratios.len() as f64;
    let worst_ratio = ratios
        .iter()
        .map(|r| (r - mean).norm() / mean.norm())
        .fold(0.0_f64, f64::max);
    report.line(format!(
        "transport_points=20 max_ratio_deviation={} tolerance={}",
        fmt_float(worst_ratio),
        fmt_float(IDENTITY_TOLERANCE)
    ));
    if worst_ratio > IDENTITY_TOLERANCE {
        report.pass = false;
        report.line(format!(
            "breach: transport ratio deviation {} exceeds tolerance",
            fmt_float(worst_ratio)
        ));
    }
    Ok(report.finish())
}

#[allow(clippy::too_many_arguments)]
fn verify_shoot(
    cfg: &Config,
    model: Option<String>,
    alpha: Option<f64>,
    big_a: Option<f64>,
    ze2: Option<f64>,
    e_min: Option<f64>,
    e_max: Option<f64>,
    grid: Option<usize>,
    contour_flags: &ContourFlags,
) -> Result<Report, CliError> {
    let model = parse_model(
        &model
            .or_else(|| cfg.string("model"))
            .ok_or_else(|| CliError::usage("missing required flag --model (ho or coulomb)"))?,
    )?;
    let e_min = require_f64(e_min, cfg, "e-min")?;
    let e_max = require_f64(e_max, cfg, "e-max")?;
    if !e_min.is_finite() || !e_max.is_finite() || e_min >= e_max {
        return Err(CliError::usage(format!(
            "scan window is empty: --e-min {e_min} must be below --e-max {e_max}"
        )));
    }
    let grid = grid.or_else(|| cfg.usize("grid")).unwrap_or(DEFAULT_SHOOT_GRID);
    if grid < 8 {
        return Err(CliError::usage(format!("--grid must be at least 8, got {grid}")));
    }
    let accept = residual_accept_from_env()?;

    let (mut problem, formula, label) = match model {
        Model::Ho => {
            let alpha = positive(require_f64(alpha, cfg, "alpha")?, "alpha")?;
            let contour = resolve_contour(cfg, contour_flags, ContourKind::ShiftedLine)?;
            (
                ShootingProblem::oscillator(alpha, contour),
                ho_levels_in_window(alpha, e_min, e_max),
                format!("model=ho alpha={}", fmt_float(alpha)),
            )
        }
        Model::Coulomb => {
            let a = positive(require_f64(big_a, cfg, "A")?, "A")?;
            let ze2 = positive(ze2.or_else(|| cfg.f64("ze2")).unwrap_or(1.0), "ze2")?;
            let contour = resolve_contour(cfg, contour_flags, ContourKind::KsParabola)?;
            (
                ShootingProblem::coulomb(a, ze2, contour),
                coulomb_levels_in_window(a, ze2, e_min, e_max),
                format!("model=coulomb A={} ze2={}", fmt_float(a), fmt_float(ze2)),
            )
        }
    };
    problem.residual_accept = accept;

    let mut report = Report::new("verify shoot");
    report.line(format!("# contour {}", problem.contour.spec()));
    report.line(format!(
        "{label} e_min={} e_max={} grid={grid} residual_accept={}",
        fmt_float(e_min),
        fmt_float(e_max),
        fmt_float(accept)
    ));

    let found = scan_eigenvalues(&problem, e_min, e_max, grid)
        .map_err(|e| CliError::failure(e.to_string()))?;

    // pair each found eigenvalue with the nearest formula level
    let mut matched = vec![false; formula.len()];
    for result in &found {
        let nearest = formula
            .iter()
            .enumerate()
            .min_by(|(_, (_, ea)), (_, (_, eb))| {
                (result.energy - ea).abs().total_cmp(&(result.energy - eb).abs())
            });
        match nearest {
            Some((idx, (state, e_formula))) => {
                let rel = ((result.energy - e_formula) / e_formula).abs();
                report.line(format!(
                    "found={} formula={} n={} q={} rel_err={}",
                    fmt_float(result.energy),
                    fmt_float(*e_formula),
                    state.n,
                    state.q,
                    fmt_float(rel)
                ));
                if rel <= SHOOT_REL_TOLERANCE && !matched[idx] {
                    matched[idx] = true;
                } else {
                    report.pass = false;
                    report.line(format!(
                        "breach: eigenvalue {} does not match a fresh formula level",
                        fmt_float(result.energy)
                    ));
                }
            }
            None => {
                report.pass = false;
                report.line(format!(
                    "breach: spurious eigenvalue {} in a window with no formula levels",
                    fmt_float(result.energy)
                ));
            }
        }
    }
    for (idx, (state, e_formula)) in formula.iter().enumerate() {
        if !matched[idx] {
            report.pass = false;
            report.line(format!(
                "breach: formula level n={} q={} E={} was not found",
                state.n,
                state.q,
                fmt_float(*e_formula)
            ));
        }
    }
    report.line(format!(
        "scanned={} found={} formula_levels={}",
        grid,
        found.len(),
        formula.len()
    ));
    Ok(report.finish())
}
