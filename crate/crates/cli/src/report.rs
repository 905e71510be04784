//! Per-command computation and rendering.

use std::fmt::Write as _;

use serde::Serialize;

use qbound_core::{
    build_omm, classical_range, concurrence, hermitian_eigen, imm_coeffs, max_curves,
    max_violation, multiport_solve, su2, sweep, AngleSetup, Basis, Complex64,
    DeterministicStrategy, TwoQubitState,
};

use crate::format::{list, number, rounded};
use crate::{su2_params, CliError, CommandConfig, Format, RunConfig, BELL_NAMES};

struct Out<'a> {
    cfg: &'a RunConfig,
}

impl Out<'_> {
    fn num(&self, x: f64) -> String {
        number(x, self.cfg.precision, self.cfg.decimals)
    }

    fn list(&self, xs: &[f64]) -> String {
        list(xs, self.cfg.precision, self.cfg.decimals)
    }

    fn round(&self, x: f64) -> f64 {
        rounded(x, self.cfg.precision, self.cfg.decimals)
    }

    fn round_all(&self, xs: &[f64]) -> Vec<f64> {
        xs.iter().map(|&x| self.round(x)).collect()
    }

    fn complex(&self, z: Complex64) -> String {
        let re = self.num(z.re);
        let im = self.num(z.im.abs());
        if im.chars().all(|c| c == '0' || c == '.') {
            re
        } else {
            let sign = if z.im < 0.0 { '-' } else { '+' };
            format!("{re}{sign}{im}i")
        }
    }

    fn amplitudes(&self, s: &TwoQubitState) -> String {
        s.amplitudes()
            .iter()
            .map(|&z| self.complex(z))
            .collect::<Vec<_>>()
            .join(",")
    }

    fn json_amplitudes(&self, s: &TwoQubitState) -> Vec<[f64; 2]> {
        s.amplitudes()
            .iter()
            .map(|z| [self.round(z.re), self.round(z.im)])
            .collect()
    }
}

#[derive(Serialize)]
struct Document<'a, T: Serialize> {
    config: &'a RunConfig,
    results: Vec<T>,
}

fn json<T: Serialize>(cfg: &RunConfig, results: Vec<T>) -> Result<String, CliError> {
    let doc = Document { config: cfg, results };
    let mut s = serde_json::to_string_pretty(&doc)
        .map_err(|e| CliError::Io(std::io::Error::other(e)))?;
    s.push('\n');
    Ok(s)
}

fn csv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut s = String::from(header);
    s.push('\n');
    for row in rows {
        s.push_str(&row);
        s.push('\n');
    }
    s
}

fn lines(pairs: &[(&str, String)]) -> String {
    let mut s = String::new();
    for (k, v) in pairs {
        let _ = writeln!(s, "{k}={v}");
    }
    s
}

fn bits(b: &[bool]) -> String {
    b.iter().map(|&x| if x { '1' } else { '0' }).collect()
}

/// Runs the configured command and returns the full report.
pub fn run(cfg: &RunConfig) -> Result<String, CliError> {
    let out = Out { cfg };
    match &cfg.command {
        CommandConfig::Bound { m, left, right } => bound(&out, *m, left, right),
        CommandConfig::Sweep {
            m,
            theta_min,
            theta_max,
            steps,
            max_only,
            ms,
        } => {
            if *max_only {
                sweep_max(&out, ms, *theta_min, *theta_max, *steps)
            } else {
                sweep_full(&out, *m, *theta_min, *theta_max, *steps)
            }
        }
        CommandConfig::Maximize { m, bracket } => maximize(&out, *m, *bracket),
        CommandConfig::Classical { m } => classical(&out, *m),
        CommandConfig::Prepare {
            u1,
            u2,
            bell,
            compare,
        } => prepare(&out, *u1, *u2, *bell, *compare),
        CommandConfig::Multiport { target } => multiport(&out, *target),
    }
}

#[derive(Serialize)]
struct BoundRow {
    m: usize,
    quantum_bound: f64,
    eigenvalues: Vec<f64>,
    classical_min: i64,
    classical_max: i64,
    violation: f64,
    concurrence: f64,
}

fn bound(out: &Out, m: usize, left: &[f64], right: &[f64]) -> Result<String, CliError> {
    let coeffs = imm_coeffs(m)?;
    let setup = AngleSetup::new(left.to_vec(), right.to_vec())?;
    let spectrum = hermitian_eigen(&build_omm(&coeffs, &setup)?)?;
    let (top, v) = spectrum.top();
    let state = TwoQubitState::normalized([v[0], v[1], v[2], v[3]], Basis::Computational)?;
    let range = classical_range(&coeffs)?;
    let row = BoundRow {
        m,
        quantum_bound: top,
        eigenvalues: spectrum.values().to_vec(),
        classical_min: range.min,
        classical_max: range.max,
        violation: top - range.max as f64,
        concurrence: concurrence(&state),
    };
    Ok(match out.cfg.format {
        Format::Text => lines(&[
            ("m", m.to_string()),
            ("left", out.list(left)),
            ("right", out.list(right)),
            ("quantum_bound", out.num(row.quantum_bound)),
            ("eigenvalues", out.list(&row.eigenvalues)),
            ("classical_min", row.classical_min.to_string()),
            ("classical_max", row.classical_max.to_string()),
            ("violation", out.num(row.violation)),
            ("concurrence", out.num(row.concurrence)),
        ]),
        Format::Csv => csv(
            "m,quantum_bound,lambda1,lambda2,lambda3,lambda4,classical_min,classical_max,violation,concurrence",
            [format!(
                "{},{},{},{},{},{},{}",
                m,
                out.num(row.quantum_bound),
                out.list(&row.eigenvalues),
                row.classical_min,
                row.classical_max,
                out.num(row.violation),
                out.num(row.concurrence)
            )],
        ),
        Format::Json => json(
            out.cfg,
            vec![BoundRow {
                quantum_bound: out.round(row.quantum_bound),
                eigenvalues: out.round_all(&row.eigenvalues),
                violation: out.round(row.violation),
                concurrence: out.round(row.concurrence),
                ..row
            }],
        )?,
    })
}

#[derive(Serialize)]
struct SweepRow {
    theta: f64,
    eigenvalues: Vec<f64>,
    concurrence: f64,
}

fn sweep_full(out: &Out, m: usize, lo: f64, hi: f64, steps: usize) -> Result<String, CliError> {
    let points = sweep(m, lo, hi, steps)?;
    Ok(match out.cfg.format {
        Format::Csv => csv(
            "theta,lambda1,lambda2,lambda3,lambda4,concurrence",
            points.iter().map(|p| {
                format!(
                    "{},{},{}",
                    out.num(p.theta),
                    out.list(&p.eigenvalues),
                    out.num(p.max_entanglement)
                )
            }),
        ),
        Format::Text => points
            .iter()
            .map(|p| {
                format!(
                    "theta={} eigenvalues={} concurrence={}\n",
                    out.num(p.theta),
                    out.list(&p.eigenvalues),
                    out.num(p.max_entanglement)
                )
            })
            .collect(),
        Format::Json => json(
            out.cfg,
            points
                .iter()
                .map(|p| SweepRow {
                    theta: out.round(p.theta),
                    eigenvalues: out.round_all(&p.eigenvalues),
                    concurrence: out.round(p.max_entanglement),
                })
                .collect(),
        )?,
    })
}

#[derive(Serialize)]
struct CurveRow {
    theta: f64,
    maxima: Vec<f64>,
}

fn sweep_max(out: &Out, ms: &[usize], lo: f64, hi: f64, steps: usize) -> Result<String, CliError> {
    let curves = max_curves(ms, lo, hi, steps)?;
    Ok(match out.cfg.format {
        Format::Csv => {
            let header = std::iter::once("theta".to_string())
                .chain(ms.iter().map(|m| format!("m{m}")))
                .collect::<Vec<_>>()
                .join(",");
            csv(
                &header,
                curves
                    .iter()
                    .map(|(t, tops)| format!("{},{}", out.num(*t), out.list(tops))),
            )
        }
        Format::Text => curves
            .iter()
            .map(|(t, tops)| format!("theta={} maxima={}\n", out.num(*t), out.list(tops)))
            .collect(),
        Format::Json => json(
            out.cfg,
            curves
                .iter()
                .map(|(t, tops)| CurveRow {
                    theta: out.round(*t),
                    maxima: out.round_all(tops),
                })
                .collect(),
        )?,
    })
}

#[derive(Serialize)]
struct MaximizeRow {
    m: usize,
    theta: f64,
    value: f64,
    concurrence: f64,
    bell_amplitudes: Vec<[f64; 2]>,
}

fn maximize(out: &Out, m: usize, bracket: (f64, f64)) -> Result<String, CliError> {
    let best = max_violation(m, bracket)?;
    Ok(match out.cfg.format {
        Format::Text => lines(&[
            ("m", m.to_string()),
            ("theta", out.num(best.theta)),
            ("value", out.num(best.value)),
            ("concurrence", out.num(best.concurrence)),
            ("bell_amplitudes", out.amplitudes(&best.state)),
        ]),
        Format::Csv => csv(
            "m,theta,value,concurrence,phi_plus,psi_plus,psi_minus,phi_minus",
            [format!(
                "{},{},{},{},{}",
                m,
                out.num(best.theta),
                out.num(best.value),
                out.num(best.concurrence),
                out.amplitudes(&best.state)
            )],
        ),
        Format::Json => json(
            out.cfg,
            vec![MaximizeRow {
                m,
                theta: out.round(best.theta),
                value: out.round(best.value),
                concurrence: out.round(best.concurrence),
                bell_amplitudes: out.json_amplitudes(&best.state),
            }],
        )?,
    })
}

#[derive(Serialize)]
struct ClassicalRow {
    m: usize,
    min: i64,
    max: i64,
    vertices: u64,
    argmin_left: String,
    argmin_right: String,
    argmax_left: String,
    argmax_right: String,
}

fn classical(out: &Out, m: usize) -> Result<String, CliError> {
    let coeffs = imm_coeffs(m)?;
    let r = classical_range(&coeffs)?;
    let s = |d: &DeterministicStrategy| (bits(&d.bits_left), bits(&d.bits_right));
    let (min_l, min_r) = s(&r.argmin);
    let (max_l, max_r) = s(&r.argmax);
    let row = ClassicalRow {
        m,
        min: r.min,
        max: r.max,
        vertices: r.vertices,
        argmin_left: min_l,
        argmin_right: min_r,
        argmax_left: max_l,
        argmax_right: max_r,
    };
    Ok(match out.cfg.format {
        Format::Text => lines(&[
            ("m", m.to_string()),
            ("classical_min", row.min.to_string()),
            ("classical_max", row.max.to_string()),
            ("vertices", row.vertices.to_string()),
            ("argmin", format!("{},{}", row.argmin_left, row.argmin_right)),
            ("argmax", format!("{},{}", row.argmax_left, row.argmax_right)),
        ]),
        Format::Csv => csv(
            "m,classical_min,classical_max,vertices,argmin_left,argmin_right,argmax_left,argmax_right",
            [format!(
                "{},{},{},{},{},{},{},{}",
                m,
                row.min,
                row.max,
                row.vertices,
                row.argmin_left,
                row.argmin_right,
                row.argmax_left,
                row.argmax_right
            )],
        ),
        Format::Json => json(out.cfg, vec![row])?,
    })
}

#[derive(Serialize)]
struct PrepareRow {
    input: &'static str,
    bell_amplitudes: Vec<[f64; 2]>,
    computational_amplitudes: Vec<[f64; 2]>,
    concurrence: f64,
    overlap: Option<f64>,
}

fn prepare(
    out: &Out,
    u1: [f64; 3],
    u2: [f64; 3],
    bell: usize,
    compare: Option<(usize, f64)>,
) -> Result<String, CliError> {
    let input = TwoQubitState::bell(bell);
    let state = qbound_core::apply_local(&su2(su2_params(u1)), &su2(su2_params(u2)), &input)?;
    let comp = state.to_computational();
    let overlap = match compare {
        Some((m, theta)) => {
            let coeffs = imm_coeffs(m)?;
            let o = build_omm(&coeffs, &qbound_core::symmetric_setup(m, theta))?;
            let spectrum = hermitian_eigen(&o)?;
            let v = spectrum.vector(0);
            let target = TwoQubitState::normalized([v[0], v[1], v[2], v[3]], Basis::Computational)?;
            Some(target.overlap(&comp))
        }
        None => None,
    };
    let c = concurrence(&state);
    let opt = |x: Option<f64>| x.map(|v| out.num(v)).unwrap_or_default();
    Ok(match out.cfg.format {
        Format::Text => {
            let mut pairs = vec![
                ("input", BELL_NAMES[bell].to_string()),
                ("bell_amplitudes", out.amplitudes(&state)),
                ("computational_amplitudes", out.amplitudes(&comp)),
                ("concurrence", out.num(c)),
            ];
            if overlap.is_some() {
                pairs.push(("overlap", opt(overlap)));
            }
            lines(&pairs)
        }
        Format::Csv => csv(
            "input,phi_plus,psi_plus,psi_minus,phi_minus,x00,x01,x10,x11,concurrence,overlap",
            [format!(
                "{},{},{},{},{}",
                BELL_NAMES[bell],
                out.amplitudes(&state),
                out.amplitudes(&comp),
                out.num(c),
                opt(overlap)
            )],
        ),
        Format::Json => json(
            out.cfg,
            vec![PrepareRow {
                input: BELL_NAMES[bell],
                bell_amplitudes: out.json_amplitudes(&state),
                computational_amplitudes: out.json_amplitudes(&comp),
                concurrence: out.round(c),
                overlap: overlap.map(|v| out.round(v)),
            }],
        )?,
    })
}

#[derive(Serialize)]
struct MultiportRow {
    normalized_target: Vec<f64>,
    omega: Vec<f64>,
    phi: Vec<f64>,
}

fn multiport(out: &Out, target: [f64; 4]) -> Result<String, CliError> {
    let norm = target.iter().map(|x| x * x).sum::<f64>().sqrt();
    let t = if norm > 0.0 {
        target.map(|x| x / norm)
    } else {
        target
    };
    let p = multiport_solve(t)?;
    Ok(match out.cfg.format {
        Format::Text => format!("omega={} phi={}\n", out.list(&p.omega), out.list(&p.phi)),
        Format::Csv => csv(
            "omega1,omega2,omega3,phi1,phi2,phi3",
            [format!("{},{}", out.list(&p.omega), out.list(&p.phi))],
        ),
        Format::Json => json(
            out.cfg,
            vec![MultiportRow {
                normalized_target: out.round_all(&t),
                omega: out.round_all(&p.omega),
                phi: out.round_all(&p.phi),
            }],
        )?,
    })
}
