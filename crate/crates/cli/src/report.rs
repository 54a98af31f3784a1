//! Serializable reports. Field order is the JSON key order; every list is
//! built in a fixed order so identical inputs give identical bytes.

use std::fmt::Write as _;

use lefschetz_core::arith::{BivarPoly, ScaledPoly, UniPoly};
use lefschetz_core::scan::{A1Regime, Class, RegimeReport, ScanReport, Triple};
use num_traits::Zero;
use serde::Serialize;

/// One term `coeff * x^x y^y`. Coefficients are decimal strings.
#[derive(Debug, Serialize)]
pub struct XyTerm {
    pub x: u32,
    pub y: u32,
    pub coeff: String,
}

/// Terms by decreasing total degree, then decreasing power of `x`.
pub fn xy_terms(p: &BivarPoly) -> Vec<XyTerm> {
    let mut out: Vec<XyTerm> = p.terms().map(|(&(x, y), c)| XyTerm { x, y, coeff: c.to_string() }).collect();
    out.sort_by(|a, b| (b.x + b.y).cmp(&(a.x + a.y)).then(b.x.cmp(&a.x)));
    out
}

/// A term of a polynomial in `(a1, a2)`.
#[derive(Debug, Serialize)]
pub struct ATerm {
    pub a1: u32,
    pub a2: u32,
    pub coeff: String,
}

fn a_terms(p: &BivarPoly) -> Vec<ATerm> {
    xy_terms(p).into_iter().map(|t| ATerm { a1: t.x, a2: t.y, coeff: t.coeff }).collect()
}

/// `coeff * t^exp`; `coeff` is an integer or a reduced fraction `p/q`.
#[derive(Debug, Serialize)]
pub struct UniTerm {
    pub exp: usize,
    pub coeff: String,
}

pub fn scaled_terms(p: &ScaledPoly) -> Vec<UniTerm> {
    p.coefficients()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(exp, c)| UniTerm { exp, coeff: c.to_string() })
        .collect()
}

fn uni_terms(p: &UniPoly) -> Vec<UniTerm> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(exp, c)| UniTerm { exp, coeff: c.to_string() })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct ColonReport {
    pub d1: u32,
    pub d2: u32,
    pub a: u32,
    pub regime: &'static str,
    pub q1: Vec<XyTerm>,
    pub q2: Vec<XyTerm>,
    pub degrees: Option<[u32; 2]>,
    pub degree_law_ok: bool,
}

impl ColonReport {
    pub fn text(&self, q1: &BivarPoly, q2: &BivarPoly) -> String {
        let mut s = format!("(x^{}, y^{}) : (x+y)^{}\nregime: {}\n", self.d1, self.d2, self.a, self.regime);
        match self.degrees {
            None => {
                let _ = writeln!(s, "unit ideal: (x+y)^{} lies in (x^{}, y^{})", self.a, self.d1, self.d2);
            }
            Some([e1, e2]) => {
                let _ = writeln!(s, "q1 = {q1}\nq2 = {q2}\ndegrees: {e1}, {e2}");
            }
        }
        let _ = writeln!(s, "degree law: {}", if self.degree_law_ok { "ok" } else { "VIOLATED" });
        s
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyCase {
    pub d1: u32,
    pub d2: u32,
    pub a: u32,
    pub ok: bool,
    /// First degree where the closed form and the oracle differ.
    pub differs_at: Option<u32>,
    pub injectivity_degree: i64,
    pub injectivity_ok: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub d1_max: u32,
    pub d2_max: u32,
    pub total: usize,
    pub failures: usize,
    pub first_counterexample: Option<[u32; 3]>,
    pub cases: Vec<VerifyCase>,
}

impl VerifyReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            let verdict = if c.ok { "PASS" } else { "FAIL" };
            let _ = write!(s, "{verdict} d1={} d2={} a={}", c.d1, c.d2, c.a);
            if let Some(d) = c.differs_at {
                let _ = write!(s, " (ideals differ in degree {d})");
            }
            if !c.injectivity_ok {
                let _ = write!(s, " (injectivity degree {} disagrees)", c.injectivity_degree);
            }
            s.push('\n');
        }
        let _ = writeln!(s, "{} cases, {} failures", self.total, self.failures);
        if let Some([d1, d2, a]) = self.first_counterexample {
            let _ = writeln!(s, "first counterexample: d1={d1} d2={d2} a={a}");
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct DetVerdictReport {
    pub holds: bool,
    /// `a3 = 2(a1 + a2)`: no system to solve.
    pub short_circuit: bool,
    pub determinant: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct DirectVerdictReport {
    pub holds: bool,
    pub failing_degrees: Vec<u32>,
}

#[derive(Debug, Serialize)]
pub struct WlpCmdReport {
    pub a1: u32,
    pub a2: u32,
    pub a3: u32,
    pub t: u32,
    pub method: &'static str,
    pub det: Option<DetVerdictReport>,
    pub direct: Option<DirectVerdictReport>,
    pub agree: Option<bool>,
}

fn holds_str(h: bool) -> &'static str {
    if h {
        "holds"
    } else {
        "fails"
    }
}

impl WlpCmdReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "(a1, a2, a3) = ({}, {}, {}), t = {}", self.a1, self.a2, self.a3, self.t);
        if let Some(d) = &self.det {
            let how = if d.short_circuit { " (a3 = 2(a1 + a2))" } else { "" };
            let _ = writeln!(s, "determinant: {}{how}", holds_str(d.holds));
        }
        if let Some(d) = &self.direct {
            let _ = write!(s, "direct rank: {}", holds_str(d.holds));
            if !d.failing_degrees.is_empty() {
                let _ = write!(s, " (degrees {:?})", d.failing_degrees);
            }
            s.push('\n');
        }
        if let Some(a) = self.agree {
            let _ = writeln!(s, "{}", if a { "agree" } else { "DISAGREE" });
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct DetPolyReport {
    pub a1: u32,
    pub a2: u32,
    pub a3: u32,
    pub parity: &'static str,
    pub degree: Option<usize>,
    pub degree_bound: u32,
    pub coefficients: Vec<UniTerm>,
    pub root_range: [i64; 2],
    pub identically_zero: bool,
    pub roots: Vec<i64>,
    pub held_out: Vec<i64>,
    pub verified: bool,
}

impl DetPolyReport {
    pub fn text(&self, p: &ScaledPoly) -> String {
        let mut s = format!("det for ({}, {}, {}), {} t\n", self.a1, self.a2, self.a3, self.parity);
        let poly = if p.is_integral() { p.numer.to_string() } else { format!("({}) / {}", p.numer, p.denom) };
        let _ = writeln!(s, "P(t) = {poly}");
        let deg = self.degree.map_or("-".to_string(), |d| d.to_string());
        let _ = writeln!(s, "degree {deg} (bound {})", self.degree_bound);
        let _ = writeln!(s, "held-out samples at t = {:?}: {}", self.held_out, if self.verified { "ok" } else { "FAILED" });
        let [lo, hi] = self.root_range;
        if self.identically_zero {
            let _ = writeln!(s, "identically zero: every {} t in [{lo}, {hi}] is a root", self.parity);
        } else {
            let _ = writeln!(s, "integer roots in [{lo}, {hi}]: {:?}", self.roots);
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct TripleReport {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub s: i64,
    pub class: &'static str,
}

impl From<&Triple> for TripleReport {
    fn from(t: &Triple) -> Self {
        Self { a1: t.a1, a2: t.a2, a3: t.a3, s: t.s(), class: Class::of(t).as_str() }
    }
}

#[derive(Debug, Serialize)]
pub struct PatternReport {
    pub c: i64,
    pub constant_matches: bool,
    pub multiples_ok: bool,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct DividedReport {
    pub scalar: String,
    pub s_roots: Vec<i64>,
    pub a1_minus_a2: bool,
}

#[derive(Debug, Serialize)]
pub struct RegimeOut {
    pub regime: String,
    pub method: &'static str,
    pub f: Vec<ATerm>,
    /// `F` in `a2` alone (fixed regimes).
    pub f_in_a2: Option<Vec<UniTerm>>,
    pub divided: DividedReport,
    pub pattern: Option<PatternReport>,
    pub admissible_s: Vec<i64>,
    pub solutions: Vec<TripleReport>,
}

fn regime_name(r: A1Regime) -> String {
    match r {
        A1Regime::Symbolic => "symbolic".into(),
        A1Regime::Fixed(c) => format!("a1={c}"),
    }
}

impl RegimeOut {
    fn new(r: &RegimeReport, a: u32) -> Self {
        let fixed = matches!(r.regime, A1Regime::Fixed(_));
        Self {
            regime: regime_name(r.regime),
            method: r.method.as_str(),
            f: a_terms(&r.f.poly),
            f_in_a2: fixed.then(|| uni_terms(&r.f.in_a2())),
            divided: DividedReport {
                scalar: r.f.divided.scalar.to_string(),
                s_roots: r.f.divided.s_roots.clone(),
                a1_minus_a2: r.f.divided.a1_minus_a2,
            },
            pattern: r.pattern.as_ref().map(|p| PatternReport {
                c: p.c,
                constant_matches: p.constant_matches,
                multiples_ok: p.multiples_ok,
                holds: p.holds(),
            }),
            admissible_s: if fixed { Vec::new() } else { r.admissible_s(a) },
            solutions: r.solutions.iter().map(TripleReport::from).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LevelReport {
    pub a: u32,
    pub max_s: i64,
    /// Every `a1 = a2` triple at this level is exceptional.
    pub a1_eq_a2_family: bool,
    pub pattern_holds: Option<bool>,
    pub solutions: Vec<TripleReport>,
    pub new_solutions: usize,
    pub regimes: Vec<RegimeOut>,
}

impl LevelReport {
    pub fn new(r: &ScanReport) -> Self {
        Self {
            a: r.a,
            max_s: r.max_s,
            a1_eq_a2_family: r.family,
            pattern_holds: r.pattern_holds(),
            solutions: r.solutions().iter().map(TripleReport::from).collect(),
            new_solutions: r.new_solutions().len(),
            regimes: r.regimes.iter().map(|g| RegimeOut::new(g, r.a)).collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!("level a = {} (direct scan bound S <= {})\n", self.a, self.max_s);
        let pattern = match self.pattern_holds {
            Some(true) => "holds",
            Some(false) => "FAILS",
            None => "n/a",
        };
        let _ = writeln!(s, "  pattern: {pattern}");
        let _ = writeln!(s, "  a1 = a2 family: {}", if self.a1_eq_a2_family { "yes" } else { "no" });
        for r in &self.regimes {
            let sols: Vec<String> = r.solutions.iter().map(triple_text).collect();
            let sols = if sols.is_empty() { "none".to_string() } else { sols.join(", ") };
            let _ = writeln!(s, "  {} [{}]: {sols}", r.regime, r.method);
        }
        let all: Vec<String> = self.solutions.iter().map(triple_text).collect();
        let all = if all.is_empty() { "none".to_string() } else { all.join(", ") };
        let _ = writeln!(s, "  exceptional: {all}");
        let _ = writeln!(s, "  new: {}", self.new_solutions);
        s
    }
}

fn triple_text(t: &TripleReport) -> String {
    format!("({},{},{}) {}", t.a1, t.a2, t.a3, t.class)
}

#[derive(Debug, Serialize)]
pub struct ScanOut {
    pub levels: Vec<LevelReport>,
}

#[derive(Debug, Serialize)]
pub struct InjectivityReport {
    pub a: u32,
    pub closed_form: i64,
    pub by_hilbert_function: Option<u32>,
}

#[derive(Debug, Serialize)]
pub struct HilbertReport {
    pub d1: u32,
    pub d2: u32,
    pub values: Vec<u32>,
    pub injectivity: Option<InjectivityReport>,
}

impl HilbertReport {
    pub fn text(&self) -> String {
        let mut s = format!("Hilbert function of k[x,y]/(x^{}, y^{})\n", self.d1, self.d2);
        for (deg, v) in self.values.iter().enumerate() {
            let _ = writeln!(s, "  {deg:>3}  {v}");
        }
        if let Some(i) = &self.injectivity {
            let by_hf = i.by_hilbert_function.map_or("-".to_string(), |d| d.to_string());
            let _ = writeln!(s, "first non-injective degree of (x+y)^{}: {} (Hilbert function drop: {by_hf})", i.a, i.closed_form);
        }
        s
    }
}
