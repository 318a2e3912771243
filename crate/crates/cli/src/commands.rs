use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use realrad::arith::{
    parse_poly_quadratic, parse_poly_rational, ParseError, Poly, QuadFieldElem, QuadraticField,
    Rational,
};
use realrad::classify::{
    analyze_sextic_case_study, classify_with_width, ClassifyError, Ground, RootStatusKind, Summary,
    Verdict,
};
use realrad::galois::{
    build_binomial, build_cyclotomic, galois_group_small_degree, parse_unit_subgroup, DatumJson,
    GaloisDatum, GaloisError,
};
use realrad::group::catalog::MAX_CATALOG_ORDER;
use realrad::group::oracle::{
    sweep_normal_closure, sweep_partition_frobenius21, sweep_partition_klein, sweep_scalar_modules,
    sweep_subnormal_preservation, OracleError, SweepReport,
};
use realrad::roots::{count_real_roots, isolate_real_roots};
use realrad::rre::{check_prime_degree_radical, find_rre_chain, RreVerdict};

use crate::args::{CaseStudy, Command, GaloisArgs, PolyArgs, SweepArgs};
use crate::text;

#[derive(Debug)]
pub enum CliError {
    /// Malformed input; exit code 2.
    Usage(String),
    /// Well-formed input the mathematics rejects or the caps exclude; exit
    /// code 1.
    Rejected { kind: &'static str, message: String },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Rejected { message, .. } => write!(f, "{message}"),
        }
    }
}

impl CliError {
    pub fn to_json(&self) -> Value {
        let (kind, message) = match self {
            CliError::Usage(m) => ("usage", m.as_str()),
            CliError::Rejected { kind, message } => (*kind, message.as_str()),
        };
        json!({ "error": { "kind": kind, "message": message } })
    }

    fn rejected(kind: &'static str, e: impl fmt::Display) -> Self {
        CliError::Rejected {
            kind,
            message: e.to_string(),
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        let kind = match e {
            ClassifyError::Reducible { .. } => "reducible",
            ClassifyError::Constant => "constant",
            ClassifyError::UnknownIrreducibility => "unsupported",
            _ => "failed",
        };
        CliError::rejected(kind, e)
    }
}

impl From<GaloisError> for CliError {
    fn from(e: GaloisError) -> Self {
        let kind = match e {
            GaloisError::ReducibleBinomial { .. } => "reducible",
            GaloisError::Unsupported(_) => "unsupported",
            _ => "invalid",
        };
        CliError::rejected(kind, e)
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::rejected("failed", e)
    }
}

pub struct Outcome {
    pub value: Value,
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn new(value: impl Serialize, text: String, code: u8) -> Self {
        Self {
            value: serde_json::to_value(value).expect("reports serialize"),
            text,
            code,
        }
    }
}

/// Wraps a report with the schema version and command name.
pub fn envelope(command: &str, value: Value) -> Value {
    let mut doc = json!({ "schema": crate::SCHEMA_VERSION, "command": command });
    if let (Value::Object(d), Value::Object(v)) = (&mut doc, value) {
        d.extend(v);
    }
    doc
}

pub fn run(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Analyze(a) => analyze(a),
        Command::Roots(a) => roots(a),
        Command::Galois(a) => galois(a),
        Command::Tower(a) => tower(a),
        Command::Cyclotomic { n, ground, field } => cyclotomic(*n, ground, field),
        Command::Binomial { p, a } => binomial(*p, a),
        Command::VerifyLemmas(a) => verify_lemmas(a),
        Command::CaseStudy { which } => case_study(*which),
    }
}

enum AnyPoly {
    Rational(Poly<Rational>),
    Quadratic(Poly<QuadFieldElem>),
}

fn parse_error(src: &str, e: &ParseError) -> CliError {
    let caret = " ".repeat(e.pos.min(src.len()));
    CliError::Usage(format!("{e}\n  {src}\n  {caret}^"))
}

fn parse_input(a: &PolyArgs) -> Result<AnyPoly, CliError> {
    match a.ground {
        None => parse_poly_rational(&a.polynomial)
            .map(AnyPoly::Rational)
            .map_err(|e| parse_error(&a.polynomial, &e)),
        Some(d) => {
            let field = QuadraticField::new(d).map_err(|_| {
                CliError::Usage(format!("--ground {d}: expected a squarefree integer >= 2"))
            })?;
            parse_poly_quadratic(&a.polynomial, field)
                .map(AnyPoly::Quadratic)
                .map_err(|e| parse_error(&a.polynomial, &e))
        }
    }
}

fn classify_any(a: &PolyArgs) -> Result<Verdict, CliError> {
    Ok(match parse_input(a)? {
        AnyPoly::Rational(f) => classify_with_width(&f, a.width)?,
        AnyPoly::Quadratic(f) => classify_with_width(&f, a.width)?,
    })
}

/// Exit code of a classification: 1 when some root could not be decided.
fn verdict_code(v: &Verdict) -> u8 {
    u8::from(v.summary == Summary::Unsupported)
}

fn analyze(a: &PolyArgs) -> Result<Outcome, CliError> {
    let v = classify_any(a)?;
    let text = text::verdict(&v);
    let code = verdict_code(&v);
    Ok(Outcome::new(v, text, code))
}

#[derive(Serialize)]
struct RootsReport {
    polynomial: String,
    ground_field: String,
    real_root_count: usize,
    squarefree_reduced: bool,
    width_exp: u32,
    intervals: Vec<realrad::interval::IntervalJson>,
}

fn roots_report<K: Ground>(f: &Poly<K>, width: u32) -> Result<RootsReport, CliError> {
    let count = count_real_roots(f, None, None).map_err(|e| CliError::rejected("invalid", e))?;
    let isolated = isolate_real_roots(f, width).map_err(|e| CliError::rejected("invalid", e))?;
    Ok(RootsReport {
        polynomial: K::render(f),
        ground_field: f.tag().to_string(),
        real_root_count: count.count,
        squarefree_reduced: count.squarefree_reduced,
        width_exp: width,
        intervals: isolated.iter().map(|r| r.to_json()).collect(),
    })
}

fn roots(a: &PolyArgs) -> Result<Outcome, CliError> {
    let r = match parse_input(a)? {
        AnyPoly::Rational(f) => roots_report(&f, a.width)?,
        AnyPoly::Quadratic(f) => roots_report(&f, a.width)?,
    };
    let mut t = format!(
        "{} over {}: {} distinct real root{}{}\n",
        r.polynomial,
        r.ground_field,
        r.real_root_count,
        if r.real_root_count == 1 { "" } else { "s" },
        if r.squarefree_reduced {
            " (repeated factors removed)"
        } else {
            ""
        }
    );
    for (i, iv) in r.intervals.iter().enumerate() {
        t.push_str(&format!(
            "  root {} in {} (exactly [{}, {}])\n",
            i + 1,
            iv.approx,
            iv.lo,
            iv.hi
        ));
    }
    Ok(Outcome::new(r, t, 0))
}

fn parse_u64(s: &str, what: &str) -> Result<u64, CliError> {
    s.parse().map_err(|_| {
        CliError::Usage(format!(
            "{what}: expected a non-negative integer, got {s:?}"
        ))
    })
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| CliError::Usage(format!("expected a rational such as 2 or -3/5, got {s:?}")))
}

fn unit_subgroup(n: u64, spec: &str) -> Result<Vec<u64>, CliError> {
    parse_unit_subgroup(n, spec).map_err(|e| match e {
        GaloisError::BadSubgroupSpec(m) => CliError::Usage(m),
        e => e.into(),
    })
}

#[derive(Serialize)]
struct DatumReport {
    datum: DatumJson,
    orders: Orders,
    field_degree: usize,
    quasireal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    radical_by_construction: Option<String>,
    verdict: RreVerdict,
}

#[derive(Serialize)]
struct Orders {
    #[serde(rename = "G")]
    g: usize,
    #[serde(rename = "U")]
    u: usize,
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "M")]
    m: usize,
}

fn datum_report(d: &GaloisDatum, verdict: RreVerdict) -> DatumReport {
    DatumReport {
        datum: d.to_json(),
        orders: Orders {
            g: d.g().order(),
            u: d.u().order(),
            n: d.n().order(),
            m: d.m().order(),
        },
        field_degree: d.field_degree(),
        quasireal: d.is_quasireal(),
        radical_by_construction: d.radical_by_construction().map(str::to_string),
        verdict,
    }
}

fn galois(a: &GaloisArgs) -> Result<Outcome, CliError> {
    if let Some(src) = &a.polynomial {
        let f = parse_poly_rational(src).map_err(|e| parse_error(src, &e))?;
        let g = galois_group_small_degree(&f)?;
        let t = text::galois_group(&f.to_string(), &g);
        return Ok(Outcome::new(g, t, 0));
    }
    let datum = if let Some(v) = &a.binomial {
        build_binomial(parse_u64(&v[0], "p")?, &parse_rational(&v[1])?)?
    } else if let Some(v) = &a.cyclotomic {
        let n = parse_u64(&v[0], "n")?;
        build_cyclotomic(n, &unit_subgroup(n, &v[1])?, &unit_subgroup(n, &v[2])?)?
    } else if let Some(path) = &a.datum {
        let src = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        GaloisDatum::from_json_str(&src)?
    } else {
        return Err(CliError::Usage("nothing to do".into()));
    };
    let r = datum_report(&datum, find_rre_chain(&datum));
    let t = text::datum(&r.datum, &datum, &r.verdict);
    Ok(Outcome::new(r, t, 0))
}

fn tower(a: &PolyArgs) -> Result<Outcome, CliError> {
    let v = classify_any(a)?;
    let built = v.real_roots.iter().filter(|r| r.tower.is_some()).count();
    let t = text::towers(&v);
    #[derive(Serialize)]
    struct TowerOutput<'a> {
        polynomial: &'a str,
        ground_field: &'a str,
        towers: Vec<Value>,
    }
    let towers = v
        .real_roots
        .iter()
        .enumerate()
        .filter_map(|(i, r)| {
            r.tower
                .as_ref()
                .map(|t| json!({ "root": i + 1, "interval": r.interval, "tower": t }))
        })
        .collect();
    let out = TowerOutput {
        polynomial: &v.polynomial,
        ground_field: &v.ground_field,
        towers,
    };
    Ok(Outcome::new(out, t, u8::from(built == 0)))
}

fn cyclotomic(n: u64, ground: &str, field: &str) -> Result<Outcome, CliError> {
    let (h1, h2) = (unit_subgroup(n, ground)?, unit_subgroup(n, field)?);
    let d = build_cyclotomic(n, &h1, &h2)?;
    let full = build_cyclotomic(n, &h1, &[1])?;
    #[derive(Serialize)]
    struct CyclotomicReport {
        field: DatumReport,
        cyclotomic_field: DatumReport,
    }
    let r = CyclotomicReport {
        field: datum_report(&d, find_rre_chain(&d)),
        cyclotomic_field: datum_report(&full, find_rre_chain(&full)),
    };
    let mut t = text::datum(&r.field.datum, &d, &r.field.verdict);
    t.push('\n');
    t.push_str(&text::datum(
        &r.cyclotomic_field.datum,
        &full,
        &r.cyclotomic_field.verdict,
    ));
    Ok(Outcome::new(r, t, 0))
}

fn binomial(p: u64, a: &str) -> Result<Outcome, CliError> {
    let d = build_binomial(p, &parse_rational(a)?)?;
    let prime_degree =
        check_prime_degree_radical(&d).map_err(|e| CliError::rejected("invalid", e))?;
    let chain = find_rre_chain(&d);
    if prime_degree.is_chain_found() != chain.is_chain_found() {
        return Err(CliError::rejected(
            "failed",
            "prime-degree check and chain search disagree",
        ));
    }
    #[derive(Serialize)]
    struct BinomialReport {
        #[serde(flatten)]
        datum: DatumReport,
        prime_degree_check: RreVerdict,
    }
    let r = BinomialReport {
        datum: datum_report(&d, chain),
        prime_degree_check: prime_degree,
    };
    let mut t = text::datum(&r.datum.datum, &d, &r.datum.verdict);
    t.push_str(&format!(
        "prime-degree check: {}\n",
        text::rre_verdict(&r.prime_degree_check)
    ));
    Ok(Outcome::new(r, t, 0))
}

fn verify_lemmas(a: &SweepArgs) -> Result<Outcome, CliError> {
    if a.max_order > MAX_CATALOG_ORDER {
        return Err(CliError::rejected(
            "unsupported",
            format!("--max-order is at most {MAX_CATALOG_ORDER}"),
        ));
    }
    type Job<'a> = Box<dyn Fn() -> Result<Vec<SweepReport>, OracleError> + Send + Sync + 'a>;
    let jobs: Vec<Job> = vec![
        Box::new(|| {
            Ok(vec![
                sweep_partition_klein()?,
                sweep_partition_frobenius21()?,
            ])
        }),
        Box::new(|| {
            let (p, s) = sweep_subnormal_preservation(a.max_order, 2)?;
            Ok(vec![p, s])
        }),
        Box::new(|| Ok(vec![sweep_scalar_modules(a.seed, a.module_trials)?])),
        Box::new(|| {
            Ok(vec![sweep_normal_closure(
                a.closure_max_order,
                a.seed,
                a.closure_trials,
            )?])
        }),
    ];
    let results: Vec<Result<Vec<SweepReport>, OracleError>> = if a.jobs <= 1 {
        jobs.iter().map(|j| j()).collect()
    } else {
        run_parallel(&jobs, a.jobs)
    };
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    let passed = reports.iter().all(SweepReport::passed);
    let t = text::sweeps(&reports);
    Ok(Outcome::new(
        json!({ "passed": passed, "sweeps": reports }),
        t,
        u8::from(!passed),
    ))
}

/// Runs the jobs on up to `workers` threads; results keep the job order.
fn run_parallel<T: Send>(jobs: &[Box<dyn Fn() -> T + Send + Sync + '_>], workers: usize) -> Vec<T> {
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots: Vec<std::sync::Mutex<Option<T>>> = jobs.iter().map(|_| Default::default()).collect();
    std::thread::scope(|s| {
        for _ in 0..workers.min(jobs.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                let Some(job) = jobs.get(i) else { break };
                *slots[i].lock().expect("no poisoned slot") = Some(job());
            });
        }
    });
    slots
        .into_iter()
        .map(|m| {
            m.into_inner()
                .expect("no poisoned slot")
                .expect("every job ran")
        })
        .collect()
}

fn case_study(which: CaseStudy) -> Result<Outcome, CliError> {
    match which {
        CaseStudy::Sextic => {
            let r = analyze_sextic_case_study()?;
            let t = text::sextic(&r);
            let code = u8::from(
                r.roots
                    .iter()
                    .any(|x| x.status == RootStatusKind::Unsupported),
            );
            Ok(Outcome::new(r, t, code))
        }
    }
}
