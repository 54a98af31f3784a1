//! `lefschetz`: colon ideal generators, weak Lefschetz checks and the
//! borderline integer scan from the command line.

mod report;

use std::io::Write;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Parser, Subcommand, ValueEnum};
use lefschetz_core::colon::{colon_generators, colon_generators_any, ColonParams, Regime};
use lefschetz_core::oracle::{
    brute_colon2, first_graded_difference, hilbert_function_ci2, injectivity_failure_degree,
    injectivity_failure_degree_by_hf, wlp_direct, MonomialIdeal3,
};
use lefschetz_core::par::{self, Exec};
use lefschetz_core::scan::{solve_integer_cases, DEFAULT_A_MAX};
use lefschetz_core::wlp::{build_wlp_matrix, det_exact, determinant_polynomial, integer_root_scan, AciCase, Parity};
use serde::Serialize;
use thiserror::Error;

use report::*;

const EXIT_MISMATCH: u8 = 1;
const EXIT_INTERNAL: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<lefschetz_core::Error> for CliError {
    fn from(e: lefschetz_core::Error) -> Self {
        use lefschetz_core::Error as E;
        match e {
            E::HeldOutMismatch { .. } | E::DuplicateAbscissa(_) | E::ZeroPolynomial | E::NotSymmetric => {
                CliError::Internal(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Det,
    Direct,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Debug, Parser)]
#[command(name = "lefschetz", version, about = "Colon ideals by powers of x+y and the weak Lefschetz property")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Worker threads; 1 runs everything on the calling thread.
    #[arg(long, env = "LEFSCHETZ_JOBS", global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Generators of (x^d1, y^d2) : (x+y)^a.
    ColonGens {
        #[arg(long)]
        d1: u32,
        #[arg(long)]
        d2: u32,
        #[arg(long)]
        a: u32,
    },
    /// Closed-form generators against the linear-algebra oracle on a grid.
    Verify {
        #[arg(long, default_value_t = 6)]
        d1_max: u32,
        #[arg(long, default_value_t = 6)]
        d2_max: u32,
    },
    /// The weak Lefschetz property of (x^(t+a1), y^(t+a2), z^(t+a3), x^a1 y^a2 z^a3).
    Wlp {
        #[arg(long)]
        a1: u32,
        #[arg(long)]
        a2: u32,
        #[arg(long)]
        a3: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// The determinant as a polynomial in t on one parity class.
    DetPoly {
        #[arg(long)]
        a1: u32,
        #[arg(long)]
        a2: u32,
        #[arg(long)]
        a3: u32,
        #[arg(long, value_enum)]
        parity: ParityArg,
        /// Defaults to ceil(s/3).
        #[arg(long)]
        root_lo: Option<i64>,
        #[arg(long, default_value_t = 100)]
        root_hi: i64,
    },
    /// Integer triples where the borderline coefficient vanishes.
    ConjectureScan {
        /// Level; all levels 1..=6 when omitted.
        #[arg(long)]
        a: Option<u32>,
        /// Bound on S = a1 + a2 for the direct fallback scan.
        #[arg(long, default_value_t = 200)]
        max_s: i64,
    },
    /// Hilbert function of k[x,y]/(x^d1, y^d2).
    Hilbert {
        #[arg(long)]
        d1: u32,
        #[arg(long)]
        d2: u32,
        /// Also report the first degree where (x+y)^a stops being injective.
        #[arg(long)]
        a: Option<u32>,
    },
}

/// Rendered output and the exit status it carries.
struct Done {
    out: String,
    code: u8,
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => text(),
    }
}

fn ok(out: String) -> Result<Done, CliError> {
    Ok(Done { out, code: 0 })
}

fn colon_gens(format: Format, d1: u32, d2: u32, a: u32) -> Result<Done, CliError> {
    let g = colon_generators_any(d1, d2, a)?;
    let (p, _) = ColonParams::sorted(d1, d2, a)?;
    let degrees = g.degrees();
    let degree_law_ok = match degrees {
        None => a >= d1 + d2 - 1,
        Some((e1, e2)) => {
            let mut sorted = [e1, e2];
            sorted.sort_unstable();
            let expected = p.expected_degrees().map(|(x, y)| [x.min(y), x.max(y)]);
            e1 + e2 == d1 + d2 - a && expected == Some(sorted)
        }
    };
    let unit = g.regime == Regime::UnitIdeal;
    let rep = ColonReport {
        d1,
        d2,
        a,
        regime: g.regime.as_str(),
        q1: xy_terms(&g.q1),
        q2: if unit { Vec::new() } else { xy_terms(&g.q2) },
        degrees: degrees.map(|(e1, e2)| [e1, e2]),
        degree_law_ok,
    };
    let out = render(format, &rep, || rep.text(&g.q1, &g.q2));
    Ok(Done { out, code: if degree_law_ok { 0 } else { EXIT_INTERNAL } })
}

fn verify(format: Format, exec: Exec, d1_max: u32, d2_max: u32) -> Result<Done, CliError> {
    if d1_max < 2 || d2_max < 2 {
        return Err(CliError::Usage(format!("grid bounds must be at least 2, got ({d1_max}, {d2_max})")));
    }
    let mut grid = Vec::new();
    for d1 in 2..=d1_max {
        for d2 in d1..=d2_max {
            for a in 1..=d1 + d2 - 2 {
                grid.push((d1, d2, a));
            }
        }
    }
    let done = AtomicUsize::new(0);
    let step = (grid.len() / 10).max(1);
    eprintln!("verify: {} cases", grid.len());
    let cases = exec.map(&grid, |&(d1, d2, a)| {
        let g = colon_generators(ColonParams::new(d1, d2, a).expect("grid parameters are valid"));
        let differs_at = first_graded_difference(&g.as_vec(), &brute_colon2(d1, d2, a), d1 + d2);
        let injectivity_degree = injectivity_failure_degree(d1, d2, a);
        let by_hf = injectivity_failure_degree_by_hf(d1, d2, a).map_or(i64::from(d1 + d2), i64::from);
        let injectivity_ok = injectivity_degree == by_hf;
        let n = done.fetch_add(1, Ordering::Relaxed) + 1;
        if n % step == 0 {
            eprintln!("verify: {n}/{}", grid.len());
        }
        VerifyCase { d1, d2, a, ok: differs_at.is_none() && injectivity_ok, differs_at, injectivity_degree, injectivity_ok }
    });
    let failures = cases.iter().filter(|c| !c.ok).count();
    let first_counterexample = cases.iter().find(|c| !c.ok).map(|c| [c.d1, c.d2, c.a]);
    let rep = VerifyReport { d1_max, d2_max, total: cases.len(), failures, first_counterexample, cases };
    let out = render(format, &rep, || rep.text());
    Ok(Done { out, code: if failures == 0 { 0 } else { EXIT_MISMATCH } })
}

fn wlp(format: Format, a1: u32, a2: u32, a3: u32, t: u32, method: Method) -> Result<Done, CliError> {
    let case = AciCase::new(a1, a2, a3, t)?;
    let det = matches!(method, Method::Det | Method::Both).then(|| -> Result<_, CliError> {
        if case.a() == 0 {
            return Ok(DetVerdictReport { holds: true, short_circuit: true, determinant: None });
        }
        let d = det_exact(&build_wlp_matrix(case)?);
        Ok(DetVerdictReport { holds: d != 0.into(), short_circuit: false, determinant: Some(d.to_string()) })
    });
    let det = det.transpose()?;
    let direct = matches!(method, Method::Direct | Method::Both).then(|| -> Result<_, CliError> {
        let r = wlp_direct(&MonomialIdeal3::level([a1, a2, a3], t)?);
        Ok(DirectVerdictReport { holds: r.holds, failing_degrees: r.failing_degrees() })
    });
    let direct = direct.transpose()?;
    let agree = match (&det, &direct) {
        (Some(d), Some(r)) => Some(d.holds == r.holds),
        _ => None,
    };
    let method = match method {
        Method::Det => "det",
        Method::Direct => "direct",
        Method::Both => "both",
    };
    let rep = WlpCmdReport { a1, a2, a3, t, method, det, direct, agree };
    let out = render(format, &rep, || rep.text());
    Ok(Done { out, code: if agree == Some(false) { EXIT_MISMATCH } else { 0 } })
}

fn det_poly(
    format: Format,
    exec: Exec,
    (a1, a2, a3): (u32, u32, u32),
    parity: ParityArg,
    root_lo: Option<i64>,
    root_hi: i64,
) -> Result<Done, CliError> {
    let parity = match parity {
        ParityArg::Even => Parity::Even,
        ParityArg::Odd => Parity::Odd,
    };
    let lo = root_lo.unwrap_or(i64::from((a1 + a2 + a3).div_ceil(3)));
    if lo > root_hi {
        return Err(CliError::Usage(format!("empty root range [{lo}, {root_hi}]")));
    }
    eprintln!("det-poly: sampling determinants for ({a1}, {a2}, {a3}), {} t", parity.as_str());
    let p = determinant_polynomial(a1, a2, a3, parity, exec)?;
    let scan = integer_root_scan(&p.poly, lo, root_hi, parity);
    let rep = DetPolyReport {
        a1,
        a2,
        a3,
        parity: parity.as_str(),
        degree: p.degree(),
        degree_bound: p.degree_bound,
        coefficients: scaled_terms(&p.poly),
        root_range: [lo, root_hi],
        identically_zero: scan.identically_zero,
        roots: scan.roots,
        held_out: p.held_out.clone(),
        verified: true,
    };
    ok(render(format, &rep, || rep.text(&p.poly)))
}

fn conjecture_scan(format: Format, exec: Exec, a: Option<u32>, max_s: i64) -> Result<Done, CliError> {
    let levels: Vec<u32> = match a {
        Some(0) => return Err(CliError::Usage("level a must be positive".into())),
        Some(a) => vec![a],
        None => (1..=DEFAULT_A_MAX).collect(),
    };
    let mut out = Vec::new();
    for a in levels {
        eprintln!("conjecture-scan: level {a}");
        out.push(LevelReport::new(&solve_integer_cases(a, max_s, exec)?));
    }
    let rep = ScanOut { levels: out };
    ok(render(format, &rep, || rep.levels.iter().map(LevelReport::text).collect()))
}

fn hilbert(format: Format, d1: u32, d2: u32, a: Option<u32>) -> Result<Done, CliError> {
    if d1 == 0 || d2 == 0 {
        return Err(CliError::Usage(format!("need d1, d2 >= 1, got ({d1}, {d2})")));
    }
    let values = (0..=d1 + d2 - 2).map(|deg| hilbert_function_ci2(d1, d2, deg)).collect();
    let injectivity = match a {
        None => None,
        Some(0) => return Err(CliError::Usage("need a >= 1".into())),
        Some(a) => {
            let (lo, hi) = (d1.min(d2), d1.max(d2));
            Some(InjectivityReport {
                a,
                closed_form: injectivity_failure_degree(lo, hi, a),
                by_hilbert_function: injectivity_failure_degree_by_hf(lo, hi, a),
            })
        }
    };
    let rep = HilbertReport { d1, d2, values, injectivity };
    ok(render(format, &rep, || rep.text()))
}

fn run(cli: Cli) -> Result<Done, CliError> {
    let exec = match cli.jobs {
        Some(0) => return Err(CliError::Usage("--jobs must be positive".into())),
        Some(1) => Exec::Sequential,
        Some(n) => {
            par::set_threads(n);
            Exec::Parallel
        }
        None => Exec::Parallel,
    };
    let f = cli.format;
    match cli.cmd {
        Cmd::ColonGens { d1, d2, a } => colon_gens(f, d1, d2, a),
        Cmd::Verify { d1_max, d2_max } => verify(f, exec, d1_max, d2_max),
        Cmd::Wlp { a1, a2, a3, t, method } => wlp(f, a1, a2, a3, t, method),
        Cmd::DetPoly { a1, a2, a3, parity, root_lo, root_hi } => det_poly(f, exec, (a1, a2, a3), parity, root_lo, root_hi),
        Cmd::ConjectureScan { a, max_s } => conjecture_scan(f, exec, a, max_s),
        Cmd::Hilbert { d1, d2, a } => hilbert(f, d1, d2, a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(Done { out, code }) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
