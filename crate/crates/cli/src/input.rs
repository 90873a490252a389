use std::f64::consts::TAU;
use std::path::Path;

use interp_core::interp::CyclicSubgroup;
use interp_core::linalg::{Matrix, Tolerance};
use interp_core::{catalog, InterpolationCurve, Permutation};

use crate::args::{DetectArgs, InputArgs, ThetaArgs};
use crate::error::{CliError, CliResult};

pub fn read_matrix(path: &Path) -> CliResult<Matrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| CliError {
        message: format!("{}: {}", path.display(), e.message),
        ..e
    })
}

/// JSON syntax errors are parse errors; a well-formed document with the
/// wrong shape or non-finite entries is a dimension violation.
pub fn parse_matrix(text: &str) -> CliResult<Matrix> {
    serde_json::from_str::<Matrix>(text).map_err(|e| {
        if e.is_data() {
            CliError::numeric(e.to_string())
        } else {
            CliError::parse(e.to_string())
        }
    })
}

pub fn parse_permutation(text: &str) -> CliResult<Permutation> {
    text.parse::<Permutation>().map_err(Into::into)
}

/// `a/b` as the angle `2π·a/b`.
pub fn parse_theta_frac(text: &str) -> CliResult<f64> {
    let (a, b) = text
        .split_once('/')
        .ok_or_else(|| CliError::parse(format!("--theta-frac expects a/b, got `{text}`")))?;
    let a: i64 = a
        .trim()
        .parse()
        .map_err(|_| CliError::parse(format!("bad numerator in `{text}`")))?;
    let b: i64 = b
        .trim()
        .parse()
        .map_err(|_| CliError::parse(format!("bad denominator in `{text}`")))?;
    if b == 0 {
        return Err(CliError::parse("--theta-frac denominator must be non-zero"));
    }
    Ok(TAU * a as f64 / b as f64)
}

pub fn theta(args: &ThetaArgs) -> CliResult<f64> {
    let theta = match (&args.theta, &args.theta_frac) {
        (Some(t), None) => *t,
        (None, Some(frac)) => parse_theta_frac(frac)?,
        _ => {
            return Err(CliError::usage(
                "give exactly one of --theta and --theta-frac",
            ))
        }
    };
    if theta.is_finite() {
        Ok(theta)
    } else {
        Err(CliError::parse("theta must be finite"))
    }
}

/// Resolves `--perm`, `--matrix` or `--catalog` to a curve.
pub fn curve(input: &InputArgs, detect: &DetectArgs) -> CliResult<InterpolationCurve> {
    let curve = match (&input.perm, &input.matrix, &input.catalog) {
        (Some(p), None, None) => InterpolationCurve::from_permutation(&parse_permutation(p)?)?,
        (None, Some(path), None) => {
            let q = read_matrix(path)?;
            InterpolationCurve::new(CyclicSubgroup::detect(q, detect.p_max, Tolerance::DEFAULT)?)
        }
        (None, None, Some(name)) => catalog::lookup(name)?.curve()?,
        _ => {
            return Err(CliError::usage(
                "give exactly one of --perm, --matrix and --catalog",
            ))
        }
    };
    if let Some(w) = detect.qubits {
        let n = 1usize
            .checked_shl(w)
            .filter(|&n| n <= 1 << 16)
            .ok_or_else(|| CliError::usage(format!("--qubits {w} is too large")))?;
        if curve.dim() != n {
            return Err(CliError::numeric(format!(
                "--qubits {w} requires a {n}x{n} input, got {}x{}",
                curve.dim(),
                curve.dim()
            )));
        }
    }
    Ok(curve)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_fractions() {
        assert_eq!(
            parse_theta_frac("1/4").unwrap(),
            std::f64::consts::FRAC_PI_2
        );
        assert_eq!(parse_theta_frac("1/2").unwrap(), std::f64::consts::PI);
        assert_eq!(parse_theta_frac("-1/2").unwrap(), -std::f64::consts::PI);
        assert!(parse_theta_frac("1/0").is_err());
        assert!(parse_theta_frac("0.5").is_err());
        assert!(parse_theta_frac("a/2").is_err());
    }

    #[test]
    fn matrix_errors_are_categorised() {
        assert_eq!(parse_matrix("{").unwrap_err().category, "parse");
        let shape = parse_matrix(r#"{"n": 2, "entries": [[[1, 0]]]}"#).unwrap_err();
        assert_eq!(shape.category, "numeric");
        assert_eq!(shape.code, 4);
        assert!(parse_matrix(r#"{"n": 1, "entries": [[[1, 0]]]}"#).is_ok());
    }
}
