use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use interp_core::interp::{cyclic_convolution, lagrange_coefficients, CyclicSubgroup};
use interp_core::linalg::{Matrix, Tolerance, C64};
use interp_core::{catalog, Formula, InterpolationCurve, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{VerifyArgs, VerifySource};
use crate::error::{CliError, CliResult};
use crate::input;

pub const RANDOM_N_CAP: usize = 16;
pub const RANDOM_TRIALS_CAP: usize = 10_000;
const SAMPLES_PER_CURVE: usize = 16;
const FAILURES_KEPT: usize = 8;

struct Failure {
    curve: usize,
    thetas: Vec<f64>,
    error: f64,
    bound: f64,
    matrices: Vec<(&'static str, Matrix)>,
}

struct Check {
    name: &'static str,
    bound: f64,
    max_error: f64,
    evaluated: usize,
    failures: Vec<Failure>,
    failure_count: usize,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            bound: 0.0,
            max_error: 0.0,
            evaluated: 0,
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn record(
        &mut self,
        curve: usize,
        thetas: &[f64],
        error: f64,
        bound: f64,
        matrices: impl FnOnce() -> Vec<(&'static str, Matrix)>,
    ) {
        self.evaluated += 1;
        self.bound = self.bound.max(bound);
        if error > self.max_error || error.is_nan() {
            self.max_error = error;
        }
        if error.is_nan() || error > bound {
            self.failure_count += 1;
            if self.failures.len() < FAILURES_KEPT {
                self.failures.push(Failure {
                    curve,
                    thetas: thetas.to_vec(),
                    error,
                    bound,
                    matrices: matrices(),
                });
            }
        }
    }

    fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn status(&self) -> &'static str {
        if self.evaluated == 0 {
            "SKIP"
        } else if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

/// Per-curve check bounds, scaled by dimension `n` and order `p`.
struct Bounds {
    matrix: f64,
    scalar: f64,
    generator: f64,
}

impl Bounds {
    fn new(tol: f64, n: usize, p: usize) -> Self {
        Bounds {
            matrix: tol * n as f64,
            scalar: tol,
            generator: tol * n as f64 * p as f64,
        }
    }
}

pub struct Report {
    pub text: String,
    pub passed: bool,
    pub diagnostics: Value,
}

fn parse_random(values: &[String]) -> CliResult<(usize, usize)> {
    let mut n = None;
    let mut trials = None;
    for v in values {
        let (key, value) = v
            .split_once('=')
            .ok_or_else(|| CliError::parse(format!("--random expects KEY=VALUE, got `{v}`")))?;
        let value: usize = value
            .parse()
            .map_err(|_| CliError::parse(format!("--random {key}: `{value}` is not an integer")))?;
        match key {
            "n" => n = Some(value),
            "trials" => trials = Some(value),
            _ => return Err(CliError::parse(format!("--random: unknown key `{key}`"))),
        }
    }
    let n = n.ok_or_else(|| CliError::usage("--random requires n=<n>"))?;
    let trials = trials.unwrap_or(1);
    if !(1..=RANDOM_N_CAP).contains(&n) {
        return Err(CliError::usage(format!(
            "--random n must be between 1 and {RANDOM_N_CAP}, got {n}"
        )));
    }
    if !(1..=RANDOM_TRIALS_CAP).contains(&trials) {
        return Err(CliError::usage(format!(
            "--random trials must be between 1 and {RANDOM_TRIALS_CAP}, got {trials}"
        )));
    }
    Ok((n, trials))
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    image.shuffle(rng);
    Permutation::new(image).expect("shuffle of 0..n")
}

fn curves(
    source: &VerifySource,
    p_max: usize,
    rng: &mut ChaCha8Rng,
) -> CliResult<(String, Vec<InterpolationCurve>)> {
    if let Some(p) = &source.perm {
        let perm = input::parse_permutation(p)?;
        return Ok((
            format!("perm {perm}"),
            vec![InterpolationCurve::from_permutation(&perm)?],
        ));
    }
    if let Some(path) = &source.matrix {
        let q = input::read_matrix(path)?;
        let sub = CyclicSubgroup::detect(q, p_max, Tolerance::DEFAULT)?;
        return Ok((
            format!("matrix {}", path.display()),
            vec![InterpolationCurve::new(sub)],
        ));
    }
    if let Some(name) = &source.catalog {
        return Ok((
            format!("catalog {name}"),
            vec![catalog::lookup(name)?.curve()?],
        ));
    }
    if let Some(values) = &source.random {
        let (n, trials) = parse_random(values)?;
        let curves = (0..trials)
            .map(|_| InterpolationCurve::from_permutation(&random_permutation(n, rng)))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok((format!("random n={n} trials={trials}"), curves));
    }
    Err(CliError::usage(
        "give exactly one of --perm, --matrix, --catalog and --random",
    ))
}

fn sample_thetas(p: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut thetas: Vec<f64> = (0..SAMPLES_PER_CURVE)
        .map(|_| rng.gen_range(-TAU..TAU))
        .collect();
    for offset in [1e-9, 1e-12] {
        let j = rng.gen_range(0..p);
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        thetas.push(TAU * j as f64 / p as f64 + sign * offset);
    }
    thetas
}

fn coeff_error(a: &[C64], b: &[C64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn dist(a: &Matrix, b: &Matrix) -> f64 {
    a.frobenius_distance(b).unwrap_or(f64::NAN)
}

fn run_checks(curves: &[InterpolationCurve], tol: f64, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let mut node = Check::new("node-interpolation");
    let mut formulas = Check::new("formula-equivalence");
    let mut group = Check::new("group-law");
    let mut unitarity = Check::new("unitarity");
    let mut adjoint = Check::new("adjoint-inverse");
    let mut xu = Check::new("xu");
    let mut cauchy = Check::new("cauchy");
    let mut convolution = Check::new("convolution");
    let mut gen_agree = Check::new("generator-agreement");
    let mut gen_herm = Check::new("generator-hermiticity");

    for (idx, curve) in curves.iter().enumerate() {
        let sub = curve.subgroup();
        let (n, p) = (curve.dim(), curve.order());
        let b = Bounds::new(tol, n, p);
        for (j, theta) in curve.nodes().enumerate() {
            let m = curve.evaluate(theta, Formula::Fourier);
            let q_j = sub.power(j as i64);
            node.record(idx, &[theta], dist(&m, q_j), b.matrix, || {
                vec![("m(theta)", m.clone()), ("q^j", q_j.clone())]
            });
        }

        let thetas = sample_thetas(p, rng);
        let is_xu = sub.q().is_xu(Tolerance::DEFAULT);
        for (k, &t1) in thetas.iter().enumerate() {
            let m1 = curve.evaluate(t1, Formula::Fourier);

            let evals: Vec<Matrix> = Formula::ALL
                .iter()
                .map(|&f| curve.evaluate(t1, f))
                .collect();
            let mut worst = 0.0f64;
            for a in 0..evals.len() {
                for b in a + 1..evals.len() {
                    worst = worst.max(dist(&evals[a], &evals[b]));
                }
            }
            formulas.record(idx, &[t1], worst, b.matrix, || {
                Formula::ALL
                    .iter()
                    .map(|f| f.name())
                    .zip(evals.iter().cloned())
                    .collect()
            });

            unitarity.record(idx, &[t1], m1.unitarity_defect(), b.scalar, || {
                vec![("m(theta)", m1.clone())]
            });

            let m_neg = curve.evaluate(-t1, Formula::Fourier);
            let m1_dag = m1.conj_transpose();
            adjoint.record(idx, &[t1], dist(&m_neg, &m1_dag), b.matrix, || {
                vec![
                    ("m(-theta)", m_neg.clone()),
                    ("m(theta)^dagger", m1_dag.clone()),
                ]
            });

            if is_xu {
                let dev = m1.line_sums().max_deviation_from(C64::new(1.0, 0.0));
                xu.record(idx, &[t1], dev, b.scalar, || vec![("m(theta)", m1.clone())]);
            }

            let c1 = sub.coefficients(t1, Formula::Fourier);
            cauchy.record(idx, &[t1], (c1.sum() - 1.0).norm(), b.scalar, Vec::new);

            let t2 = thetas[(k + 1) % thetas.len()];
            let m2 = curve.evaluate(t2, Formula::Fourier);
            let m12 = curve.evaluate(t1 + t2, Formula::Fourier);
            let product = m1.mat_mul(&m2).expect("same dimension");
            group.record(idx, &[t1, t2], dist(&product, &m12), b.matrix, || {
                vec![
                    ("m(theta1) m(theta2)", product.clone()),
                    ("m(theta1+theta2)", m12.clone()),
                ]
            });

            let c2 = sub.coefficients(t2, Formula::Fourier);
            let err = match (
                cyclic_convolution(&c1.coeffs, &c2.coeffs),
                lagrange_coefficients(p, t1 + t2, Formula::Fourier),
            ) {
                (Ok(conv), Ok(c12)) => coeff_error(&conv, &c12.coeffs),
                _ => f64::NAN,
            };
            convolution.record(idx, &[t1, t2], err, b.scalar, Vec::new);
        }

        let closed = curve.generator_closed_form();
        let fourier = curve.generator_fourier_form();
        gen_agree.record(idx, &[], dist(&closed, &fourier), b.generator, || {
            vec![("closed", closed.clone()), ("fourier", fourier.clone())]
        });
        let herm = closed
            .hermiticity_defect()
            .max(fourier.hermiticity_defect());
        gen_herm.record(idx, &[], herm, b.matrix, || {
            vec![("closed", closed.clone()), ("fourier", fourier.clone())]
        });
    }

    vec![
        node,
        formulas,
        group,
        unitarity,
        adjoint,
        xu,
        cauchy,
        convolution,
        gen_agree,
        gen_herm,
    ]
}

fn failure_json(check: &Check, f: &Failure, curves: &[InterpolationCurve]) -> Value {
    let curve = &curves[f.curve];
    let matrices: serde_json::Map<String, Value> = f
        .matrices
        .iter()
        .map(|(label, m)| {
            (
                label.to_string(),
                serde_json::to_value(m).expect("serialisable"),
            )
        })
        .collect();
    json!({
        "check": check.name,
        "curve": f.curve,
        "q": curve.subgroup().q(),
        "order": curve.order(),
        "thetas": f.thetas,
        "error": f.error,
        "bound": f.bound,
        "matrices": matrices,
    })
}

/// Runs every check; the report text is independent of wall-clock time.
pub fn run(args: &VerifyArgs) -> CliResult<Report> {
    let tol = Tolerance::new(args.tol)?.eps();
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let (label, curves) = curves(&args.source, args.p_max, &mut rng)?;
    let checks = run_checks(&curves, tol, &mut rng);

    let mut text = format!(
        "verify {label} seed={} tol={} curves={}\n",
        args.seed,
        crate::output::fmt_f64(args.tol),
        curves.len()
    );
    for c in &checks {
        let _ = writeln!(
            text,
            "{:<22} max_error={:<10.3e} bound={:<10.3e} {}",
            c.name,
            c.max_error,
            c.bound,
            c.status()
        );
    }
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed()).collect();
    if failed.is_empty() {
        text.push_str("result: PASS\n");
    } else {
        let _ = writeln!(
            text,
            "result: FAIL ({} of {} checks)",
            failed.len(),
            checks.len()
        );
    }

    let failures: Vec<Value> = failed
        .iter()
        .flat_map(|c| c.failures.iter().map(|f| failure_json(c, f, &curves)))
        .collect();
    let diagnostics = json!({
        "source": label,
        "seed": args.seed,
        "tol": args.tol,
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "max_error": c.max_error,
            "bound": c.bound,
            "status": c.status(),
            "failures": c.failure_count,
        })).collect::<Vec<_>>(),
        "failures": failures,
    });

    Ok(Report {
        text,
        passed: failed.is_empty(),
        diagnostics,
    })
}

fn default_diagnostics_path() -> PathBuf {
    let ts = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    PathBuf::from(format!("interp-verify-{ts}.json"))
}

pub fn write_diagnostics(report: &Report, path: &Path) -> CliResult<()> {
    let mut s = serde_json::to_string_pretty(&report.diagnostics).expect("serialisable");
    s.push('\n');
    std::fs::write(path, s)
        .map_err(|e| CliError::io(format!("cannot write diagnostics {}: {e}", path.display())))
}

pub fn verify(args: &VerifyArgs) -> CliResult<()> {
    let report = run(args)?;
    crate::output::emit(&report.text, None)?;
    if report.passed {
        return Ok(());
    }
    let path = args
        .diagnostics
        .clone()
        .unwrap_or_else(default_diagnostics_path);
    write_diagnostics(&report, &path)?;
    Err(CliError::verify(format!(
        "checks failed; diagnostics written to {}",
        path.display()
    )))
}
