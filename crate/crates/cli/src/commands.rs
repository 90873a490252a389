use std::f64::consts::TAU;
use std::fmt::Write as _;

use interp_core::catalog;
use interp_core::interp::lagrange_coefficients;
use interp_core::perm::{all_permutations, enumerate_cycle_graph, landau, CycleGraph, LANDAU_CAP};
use interp_core::Formula;
use serde::Serialize;
use serde_json::json;

use crate::args::{
    CoeffsArgs, CycleGraphArgs, EvalArgs, GeneratorArgs, GeneratorForm, LandauArgs, OutputFormat,
};
use crate::error::{CliError, CliResult};
use crate::input;
use crate::output::{self, emit, fmt_f64};

fn reject_format(command: &str, fmt: OutputFormat, accepted: &[OutputFormat]) -> CliResult<()> {
    if accepted.contains(&fmt) {
        Ok(())
    } else {
        let names: Vec<_> = accepted.iter().map(|f| f.name()).collect();
        Err(CliError::usage(format!(
            "`{command}` does not support --fmt {}; use one of: {}",
            fmt.name(),
            names.join(", ")
        )))
    }
}

pub fn eval(args: &EvalArgs) -> CliResult<()> {
    use OutputFormat::*;
    reject_format("eval", args.fmt, &[Json, Csv, Pretty])?;
    let theta = input::theta(&args.theta)?;
    let curve = input::curve(&args.input, &args.detect)?;
    let m = curve.try_evaluate(theta, args.formula.into())?;
    let text = match args.fmt {
        Json => output::matrix_json(&m),
        Csv => output::matrix_csv(&m),
        _ => output::matrix_pretty(&m),
    };
    emit(&text, args.out.as_deref())
}

#[derive(Serialize)]
struct CoeffRow {
    theta: f64,
    abs2: Vec<f64>,
    re: Vec<f64>,
    im: Vec<f64>,
}

/// Uniform grid on `[0, 2π]` with both endpoints.
pub fn theta_grid(samples: usize) -> impl Iterator<Item = f64> {
    let last = samples - 1;
    (0..samples).map(move |i| TAU * i as f64 / last as f64)
}

pub fn coeffs(args: &CoeffsArgs) -> CliResult<()> {
    use OutputFormat::*;
    reject_format("coeffs", args.fmt, &[Csv, Json])?;
    if args.order < 1 {
        return Err(CliError::usage("--order must be at least 1"));
    }
    if args.samples < 2 {
        return Err(CliError::usage("--samples must be at least 2"));
    }
    let formula: Formula = args.formula.into();
    let rows = theta_grid(args.samples)
        .map(|theta| {
            let v = lagrange_coefficients(args.order, theta, formula)?;
            Ok(CoeffRow {
                theta,
                abs2: v.coeffs.iter().map(|c| c.norm_sqr()).collect(),
                re: v.coeffs.iter().map(|c| c.re).collect(),
                im: v.coeffs.iter().map(|c| c.im).collect(),
            })
        })
        .collect::<CliResult<Vec<_>>>()?;

    let text = if args.fmt == Json {
        let mut s = serde_json::to_string(&json!({
            "order": args.order,
            "formula": formula.name(),
            "rows": rows,
        }))
        .expect("serialisable");
        s.push('\n');
        s
    } else {
        let mut s = String::from("theta");
        for j in 0..args.order {
            let _ = write!(s, ",abs2_m{j}");
        }
        s.push('\n');
        for row in &rows {
            s.push_str(&fmt_f64(row.theta));
            for a in &row.abs2 {
                s.push(',');
                s.push_str(&fmt_f64(*a));
            }
            s.push('\n');
        }
        s
    };
    emit(&text, args.out.as_deref())
}

pub fn generator(args: &GeneratorArgs) -> CliResult<()> {
    use OutputFormat::*;
    reject_format("generator", args.fmt, &[Json, Pretty])?;
    let curve = input::curve(&args.input, &args.detect)?;
    let text = match args.form {
        GeneratorForm::Closed | GeneratorForm::Fourier => {
            let g = if args.form == GeneratorForm::Closed {
                curve.generator_closed_form()
            } else {
                curve.generator_fourier_form()
            };
            if args.fmt == Json {
                output::matrix_json(&g)
            } else {
                output::matrix_pretty(&g)
            }
        }
        GeneratorForm::Both => {
            let closed = curve.generator_closed_form();
            let fourier = curve.generator_fourier_form();
            let distance = closed.frobenius_distance(&fourier)?;
            if args.fmt == Json {
                let mut s = serde_json::to_string(&json!({
                    "closed": closed,
                    "fourier": fourier,
                    "distance": distance,
                }))
                .expect("serialisable");
                s.push('\n');
                s
            } else {
                format!(
                    "closed:\n{}fourier:\n{}distance: {}\n",
                    output::matrix_pretty(&closed),
                    output::matrix_pretty(&fourier),
                    fmt_f64(distance)
                )
            }
        }
    };
    emit(&text, args.out.as_deref())
}

pub fn cycle_graph_dot(graph: &CycleGraph) -> String {
    let mut s = format!("graph cycle_graph_p{} {{\n", graph.n);
    s.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for p in all_permutations(graph.n) {
        let extra = if p.is_identity() {
            ", shape=doublecircle, style=filled, fillcolor=lightgray"
        } else {
            ""
        };
        let _ = writeln!(s, "  \"{p}\" [label=\"{p}\"{extra}];");
    }
    for (k, cycle) in graph.cycles.iter().enumerate() {
        let _ = writeln!(
            s,
            "  // ring {k}: length {}, generator {}",
            cycle.len(),
            cycle.generator()
        );
        let mut prev = cycle.elements().last().expect("ends in identity");
        for e in cycle.elements() {
            let _ = writeln!(s, "  \"{prev}\" -- \"{e}\" [comment=\"ring {k}\"];");
            prev = e;
        }
    }
    s.push_str("}\n");
    s
}

pub fn cycle_graph_json(graph: &CycleGraph) -> String {
    let cycles: Vec<Vec<&[usize]>> = graph
        .cycles
        .iter()
        .map(|c| c.elements().iter().map(|e| e.image()).collect())
        .collect();
    let mut s =
        serde_json::to_string(&json!({ "n": graph.n, "cycles": cycles })).expect("serialisable");
    s.push('\n');
    s
}

pub fn cycle_graph(args: &CycleGraphArgs) -> CliResult<()> {
    use OutputFormat::*;
    reject_format("cycle-graph", args.fmt, &[Dot, Json])?;
    let n = match (args.n, args.qubits) {
        (Some(n), None) => n,
        (None, Some(w)) => 1usize
            .checked_shl(w)
            .filter(|&n| n <= 64)
            .ok_or_else(|| CliError::usage(format!("--qubits {w} is too large")))?,
        _ => return Err(CliError::usage("give exactly one of --n and --qubits")),
    };
    let graph = enumerate_cycle_graph(n)?;
    let text = if args.fmt == Json {
        cycle_graph_json(&graph)
    } else {
        cycle_graph_dot(&graph)
    };
    emit(&text, args.out.as_deref())
}

fn witness_text(parts: &[usize]) -> String {
    parts
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("+")
}

pub fn landau_table(args: &LandauArgs) -> CliResult<()> {
    use OutputFormat::*;
    reject_format("landau", args.fmt, &[Csv, Json, Pretty])?;
    if args.n_max < 1 || args.n_max > LANDAU_CAP {
        return Err(CliError::usage(format!(
            "--n-max must be between 1 and {LANDAU_CAP}, got {}",
            args.n_max
        )));
    }
    let rows = (1..=args.n_max)
        .map(landau)
        .collect::<Result<Vec<_>, _>>()?;
    let text = match args.fmt {
        Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|l| json!({ "n": l.n, "landau": l.value as u64, "witness": l.witness }))
                .collect();
            let mut s = serde_json::to_string(&rows).expect("serialisable");
            s.push('\n');
            s
        }
        Pretty => {
            let mut s = format!("{:>4}  {:>14}  witness\n", "n", "L(n)");
            for l in &rows {
                let _ = writeln!(
                    s,
                    "{:>4}  {:>14}  {}",
                    l.n,
                    l.value,
                    witness_text(&l.witness)
                );
            }
            s
        }
        _ => {
            let mut s = String::from("n,landau,witness\n");
            for l in &rows {
                let _ = writeln!(s, "{},{},{}", l.n, l.value, witness_text(&l.witness));
            }
            s
        }
    };
    emit(&text, args.out.as_deref())
}

pub fn catalog_list(fmt: OutputFormat) -> CliResult<()> {
    use OutputFormat::*;
    reject_format("catalog list", fmt, &[Pretty, Json])?;
    let entries = catalog::catalog();
    let text = if fmt == Json {
        let rows: Vec<_> = entries
            .iter()
            .map(|g| {
                let curve = g.curve().ok();
                json!({
                    "name": g.name,
                    "kind": g.kind_name(),
                    "n": curve.as_ref().map(|c| c.dim()),
                    "order": curve.as_ref().map(|c| c.order()),
                    "provenance": g.provenance,
                })
            })
            .collect();
        let mut s = serde_json::to_string(&rows).expect("serialisable");
        s.push('\n');
        s
    } else {
        let mut s = format!(
            "{:<12} {:<7} {:>2} {:>5}  {}\n",
            "name", "kind", "n", "order", "description"
        );
        for g in &entries {
            let curve = g.curve()?;
            let _ = writeln!(
                s,
                "{:<12} {:<7} {:>2} {:>5}  {}",
                g.name,
                g.kind_name(),
                curve.dim(),
                curve.order(),
                g.provenance
            );
        }
        s
    };
    emit(&text, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_includes_both_endpoints() {
        let g: Vec<f64> = theta_grid(5).collect();
        assert_eq!(g.len(), 5);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[4], TAU);
    }

    #[test]
    fn dot_for_p3() {
        let dot = cycle_graph_dot(&enumerate_cycle_graph(3).unwrap());
        assert!(dot.starts_with("graph cycle_graph_p3 {"));
        assert_eq!(dot.matches("[label=").count(), 6);
        assert_eq!(dot.matches("// ring").count(), 4);
        // 3 + 2 + 2 + 2 edges
        assert_eq!(dot.matches(" -- ").count(), 9);
        assert!(dot.contains("\"0,1,2\" [label=\"0,1,2\", shape=doublecircle"));
    }

    #[test]
    fn witness_joins_parts() {
        assert_eq!(witness_text(&[2, 3, 5]), "2+3+5");
    }
}
