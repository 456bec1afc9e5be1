//! One function per subcommand; each renders its whole result before anything is written.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use symweight::bounds::{
    best_bounds, curve_samples, BestBounds, BoundResult, CombinedOracle, CurveAxis, CurveSample, ExhaustiveCccOracle,
    LiteratureEntry, LiteratureOracle, QMode,
};
use symweight::codes::{
    concat_construct, conjecture_check, conjecture_sweep, parse_code, uv_construct, Code, CodeFile, CodeFormat,
    ConjectureReport, RsCode, RsCswSubcode,
};
use symweight::compositions::{search_anticode, AnticodeStrategy, Composition, CompositionFamily};
use symweight::field::Field;
use symweight::spaces::{SpaceMode, SpaceRow, SpaceSpec};
use symweight::{Config, Count};

use crate::output::{self, Format};
use crate::{Cli, Command, CurveBound, Kind, Mode, Strategy};

#[derive(Debug)]
pub enum CliError {
    Lib(symweight::Error),
    Usage(String),
    Io(PathBuf, std::io::Error),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(symweight::Error::Verification(_) | symweight::Error::InconsistentBounds { .. })
            | CliError::Failed(_) => 1,
            CliError::Lib(symweight::Error::CapExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Failed(m) => write!(f, "{m}"),
        }
    }
}

impl From<symweight::Error> for CliError {
    fn from(e: symweight::Error) -> Self {
        CliError::Lib(e)
    }
}

type Res<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn space_mode(m: Mode) -> SpaceMode {
    match m {
        Mode::Exact => SpaceMode::Exact,
        Mode::Bounded => SpaceMode::Bounded,
    }
}

/// Kebab-case tag of a unit enum, as serialised.
fn tag<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|s| s.as_str().map(str::to_string))
        .unwrap_or_default()
}

pub fn run(cli: &Cli) -> Res<()> {
    let cfg = cli.global.config();
    let fmt = cli.global.format;
    let out = cli.global.output.as_deref();
    let text = match &cli.command {
        Command::Size { n, q, r, mode } => size(*n, *q, *r, *mode, fmt.unwrap_or(Format::Text), &cfg)?,
        Command::Bounds {
            n,
            q,
            d,
            r,
            mode,
            ccc_oracle,
            ccc_oracle_file,
            exhaustive_ccc,
            audit_exhaustive,
        } => {
            let oracle = build_oracle(ccc_oracle, ccc_oracle_file.as_deref(), *exhaustive_ccc, &cfg)?;
            let b = best_bounds(*n, *q, *d, *r, space_mode(*mode), &oracle, &cfg)?;
            if *audit_exhaustive {
                audit_exhaustive_result(&b)?;
            }
            bounds_report(&b, (*n, *q, *d, *r, *mode), fmt.unwrap_or(Format::Text))
        }
        Command::Curves {
            q,
            growing,
            delta,
            rho,
            grid,
            from,
            to,
            bounds,
        } => curves(
            *q,
            *growing,
            *delta,
            *rho,
            *grid,
            (*from, *to),
            bounds,
            fmt.unwrap_or(Format::Csv),
        )?,
        Command::Search { n, q, r, d, strategy } => {
            let s = match strategy {
                Strategy::Greedy => AnticodeStrategy::Greedy,
                Strategy::Exhaustive => AnticodeStrategy::Exhaustive,
            };
            let fam = search_anticode(*n, *q as usize, *r, *d, s, &cfg)?;
            family_report(&fam, *r, *d, fmt.unwrap_or(Format::Text))?
        }
        Command::Construct {
            kind,
            q,
            k,
            r,
            first,
            second,
            outer,
            inner,
        } => {
            let file = construct(*kind, (*q, *k, *r), [first, second, outer, inner], &cfg)?;
            let f = match fmt {
                Some(Format::Json) => CodeFormat::Json,
                Some(Format::Csv) => return Err(usage("code files are text or json")),
                _ => CodeFormat::Text,
            };
            file.render(f)
        }
        Command::Verify {
            code,
            expect_d,
            expect_r,
        } => verify(code, *expect_d, *expect_r, fmt.unwrap_or(Format::Text), &cfg)?,
        Command::Conjecture {
            q,
            k,
            r,
            sweep_max_q,
            max_degree,
        } => conjecture(*q, *k, *r, *sweep_max_q, *max_degree, fmt.unwrap_or(Format::Json), &cfg)?,
    };
    output::emit(out, &text).map_err(|e| CliError::Io(out.map_or_else(|| "<stdout>".into(), Path::to_path_buf), e))
}

fn size(n: u32, q: u32, r: Option<u32>, mode: Mode, fmt: Format, cfg: &Config) -> Res<String> {
    let rs: Vec<u32> = match r {
        Some(r) => vec![r],
        None => (n.div_ceil(q.max(1)).max(1)..=n).collect(),
    };
    let rows = rs
        .into_iter()
        .map(|r| SpaceSpec::new(n, q, r, space_mode(mode))?.row(cfg))
        .collect::<symweight::Result<Vec<SpaceRow>>>()?;
    Ok(match fmt {
        Format::Json => output::json(&serde_json::json!({ "rows": rows })),
        Format::Csv => output::csv(&rows),
        Format::Text => rows.iter().fold(String::new(), |mut s, row| {
            let rel = if row.mode == SpaceMode::Exact { "" } else { "<=" };
            let _ = writeln!(
                s,
                "|SW({},{},{rel}{})| = {}  rate {:.6}",
                row.n, row.q, row.r, row.size, row.rate
            );
            s
        }),
    })
}

/// One oracle value as written in a JSON oracle file.
#[derive(Deserialize)]
#[serde(untagged)]
enum OracleSpec {
    Short(String),
    Full {
        composition: String,
        value: NumOrString,
        distance: Option<u32>,
        source: Option<String>,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum NumOrString {
    Num(u64),
    Str(String),
}

fn build_oracle(flags: &[String], file: Option<&Path>, exhaustive: bool, cfg: &Config) -> Res<CombinedOracle> {
    let mut entries = flags
        .iter()
        .map(|s| s.parse::<LiteratureEntry>())
        .collect::<symweight::Result<Vec<_>>>()?;
    if let Some(path) = file {
        let specs: Vec<OracleSpec> =
            serde_json::from_str(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        for spec in specs {
            entries.push(match spec {
                OracleSpec::Short(s) => s.parse()?,
                OracleSpec::Full {
                    composition,
                    value,
                    distance,
                    source,
                } => {
                    let composition: Composition = composition.parse()?;
                    let value = match value {
                        NumOrString::Num(v) => Count::from(v),
                        NumOrString::Str(s) => s.parse().map_err(|_| usage(format!("`{s}` is not a count")))?,
                    };
                    let source = source.unwrap_or_else(|| format!("supplied value for {composition}"));
                    LiteratureEntry {
                        composition,
                        value,
                        distance,
                        source,
                    }
                }
            });
        }
    }
    let mut oracle = CombinedOracle::new().with(LiteratureOracle::new(entries));
    if exhaustive {
        oracle = oracle.with(ExhaustiveCccOracle::new(cfg.clone()));
    }
    Ok(oracle)
}

/// The sandwich: needs a completed clique search and every bound on the right side of it.
fn audit_exhaustive_result(b: &BestBounds) -> Res<()> {
    use symweight::bounds::{Direction, Provenance};
    let searched: Vec<&BoundResult> = b
        .all
        .iter()
        .filter(|x| x.provenance == Provenance::Exhaustive)
        .collect();
    if searched.is_empty() {
        let n = b.lower.inputs.n.unwrap_or_default();
        let q = b.lower.inputs.q.unwrap_or_default();
        return Err(CliError::Lib(symweight::Error::CapExceeded {
            what: "exhaustive code search space",
            size: format!("{q}^{n}"),
            cap: symweight::Config::default().exhaustive_word_cap,
        }));
    }
    let opt = searched
        .iter()
        .find(|x| x.direction == Direction::Exact)
        .and_then(|x| x.size_value())
        .ok_or_else(|| CliError::Failed("exhaustive search did not complete; raise --node-budget".into()))?;
    for x in &b.all {
        let Some(v) = x.size_value() else { continue };
        if (x.direction.bounds_below() && v > opt) || (x.direction.bounds_above() && v < opt) {
            return Err(CliError::Failed(format!(
                "{} {} bound {v} contradicts the optimum {opt}",
                x.provenance,
                tag(&x.direction)
            )));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct BoundRow {
    provenance: String,
    direction: String,
    kind: &'static str,
    value: String,
    n: u32,
    q: u32,
    d: u32,
    r: u32,
    mode: String,
    note: String,
}

fn bounds_report(b: &BestBounds, (n, q, d, r, mode): (u32, u32, u32, u32, Mode), fmt: Format) -> String {
    let mode = tag(&space_mode(mode));
    let row = |x: &BoundResult| BoundRow {
        provenance: x.provenance.to_string(),
        direction: tag(&x.direction),
        kind: if x.size_value().is_some() { "size" } else { "rate" },
        value: x.value.to_string(),
        n,
        q,
        d,
        r,
        mode: mode.clone(),
        note: x.note.clone().unwrap_or_default(),
    };
    match fmt {
        Format::Csv => output::csv(&b.all.iter().map(row).collect::<Vec<_>>()),
        Format::Json => output::json(&serde_json::json!({
            "n": n, "q": q, "d": d, "r": r, "mode": mode,
            "exact": b.is_exact(), "lower": b.lower, "upper": b.upper, "bounds": b.all,
        })),
        Format::Text => {
            let rel = if mode == "exact" { "" } else { "<=" };
            let mut s = format!("A_{q}^SW({n},{d},{rel}{r})\n");
            if b.is_exact() {
                let _ = writeln!(s, "  exact  {}  ({})", b.lower.value, b.lower.provenance);
            } else {
                let _ = writeln!(s, "  lower  {}  ({})", b.lower.value, b.lower.provenance);
                let _ = writeln!(s, "  upper  {}  ({})", b.upper.value, b.upper.provenance);
            }
            s.push_str("all bounds:\n");
            for x in &b.all {
                let _ = write!(
                    s,
                    "  {:<6} {:<22} {}",
                    tag(&x.direction),
                    x.provenance.to_string(),
                    x.value
                );
                if let Some(note) = &x.note {
                    let _ = write!(s, "  [{note}]");
                }
                s.push('\n');
            }
            s
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn curves(
    q: Option<u32>,
    growing: bool,
    delta: Option<f64>,
    rho: Option<f64>,
    grid: u32,
    (from, to): (f64, f64),
    bounds: &[CurveBound],
    fmt: Format,
) -> Res<String> {
    let q_mode = match (q, growing) {
        (Some(q), false) => QMode::Constant(q),
        (None, true) => QMode::Growing,
        _ => return Err(usage("give exactly one of --q and --growing")),
    };
    let axis = match (delta, rho) {
        (Some(delta), None) => CurveAxis::Rho { delta },
        (None, Some(rho)) => CurveAxis::Delta { rho },
        _ => return Err(usage("give exactly one of --delta and --rho")),
    };
    if !(from.is_finite() && to.is_finite() && from < to) {
        return Err(usage("need finite --from < --to"));
    }
    let points: Vec<f64> = (0..grid)
        .map(|i| from + (to - from) * i as f64 / (grid - 1) as f64)
        .collect();
    let samples = curve_samples(q_mode, axis, &points)?;
    let columns: Vec<(CurveBound, &str)> = [
        (CurveBound::GvExact, "gv_exact"),
        (CurveBound::GvBounded, "gv_bounded"),
        (CurveBound::Lp, "lp"),
        (CurveBound::LargeR, "large_r"),
        (CurveBound::Singleton, "singleton"),
    ]
    .into_iter()
    .filter(|(b, _)| bounds.is_empty() || bounds.contains(b))
    .collect();
    let pick = |s: &CurveSample, b: CurveBound| match b {
        CurveBound::GvExact => s.gv_exact,
        CurveBound::GvBounded => s.gv_bounded,
        CurveBound::Lp => s.lp,
        CurveBound::LargeR => s.large_r,
        CurveBound::Singleton => s.singleton,
    };
    Ok(match fmt {
        Format::Json => {
            let rows: Vec<serde_json::Value> = samples
                .iter()
                .map(|s| {
                    let mut m = serde_json::Map::new();
                    m.insert("rho".into(), s.rho.into());
                    m.insert("delta".into(), s.delta.into());
                    for &(b, name) in &columns {
                        m.insert(name.into(), pick(s, b).into());
                    }
                    m.into()
                })
                .collect();
            output::json(&serde_json::json!({ "samples": rows }))
        }
        Format::Csv | Format::Text => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let header = ["rho", "delta"].into_iter().chain(columns.iter().map(|c| c.1));
            w.write_record(header).expect("in-memory writer");
            for s in &samples {
                let cells = [Some(s.rho), Some(s.delta)]
                    .into_iter()
                    .chain(columns.iter().map(|&(b, _)| pick(s, b)))
                    .map(|v| v.map_or_else(String::new, |x| x.to_string()));
                w.write_record(cells).expect("in-memory writer");
            }
            String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
        }
    })
}

fn family_report(fam: &CompositionFamily, r: u32, d: u32, fmt: Format) -> Res<String> {
    Ok(match fmt {
        Format::Json => output::json(&serde_json::json!({
            "n": fam.n(), "q": fam.q(), "r": r, "d": d, "size": fam.len(),
            "min_dplus": fam.min_dplus(), "members": fam.members(),
        })),
        Format::Csv => {
            let rows: Vec<_> = fam.members().iter().map(|c| [c.to_string()]).collect();
            format!("composition\n{}", output::csv(&rows))
        }
        Format::Text => {
            let mut s = format!(
                "# {} compositions of {} into {} parts, weight {r}, pairwise d+ >= {d}\n",
                fam.len(),
                fam.n(),
                fam.q()
            );
            for c in fam.members() {
                let _ = writeln!(s, "{c}");
            }
            s
        }
    })
}

fn load_code(path: &Option<PathBuf>, flag: &str) -> Res<Code> {
    let path = path
        .as_deref()
        .ok_or_else(|| usage(format!("--{flag} is required for this kind")))?;
    Ok(parse_code(&read(path)?)?.to_code()?)
}

fn field_params(q: Option<u32>, k: Option<usize>) -> Res<(Field, usize)> {
    let q = q.ok_or_else(|| usage("--q is required for this kind"))?;
    let k = k.ok_or_else(|| usage("--k is required for this kind"))?;
    Ok((Field::from_order(q)?, k))
}

/// Builds and audits a code; the audit summary goes to stderr.
fn construct(
    kind: Kind,
    (q, k, r): (Option<u32>, Option<usize>, Option<usize>),
    [first, second, outer, inner]: [&Option<PathBuf>; 4],
    cfg: &Config,
) -> Res<CodeFile> {
    let (code, d, weight) = match kind {
        Kind::Rs => {
            let (field, k) = field_params(q, k)?;
            let rs = RsCode::new(&field, k)?;
            let dist = rs.weight_distribution(cfg)?;
            let min_weight = dist
                .b
                .iter()
                .enumerate()
                .skip(1)
                .find(|(_, c)| **c > Count::from(0u32))
                .map(|(w, _)| w);
            if min_weight != Some(rs.d()) {
                return Err(CliError::Lib(symweight::Error::Verification(format!(
                    "minimum weight {min_weight:?} differs from n-k+1 = {}",
                    rs.d()
                ))));
            }
            let code = rs.materialize(cfg)?;
            eprintln!(
                "audit: RS[{}, {k}] over GF({}), {} words, minimum distance {}",
                rs.n(),
                field.q(),
                code.len(),
                rs.d()
            );
            (code, Some(rs.d() as u32), None)
        }
        Kind::RsCsw => {
            let (field, k) = field_params(q, k)?;
            let r = r.ok_or_else(|| usage("--r is required for rs-csw"))?;
            let sub = RsCswSubcode::new(&field, k, r, cfg)?;
            let audit = sub.audit(cfg);
            eprintln!("audit: {}", serde_json::to_string(&audit).expect("plain data"));
            if !audit.passed() {
                return Err(CliError::Lib(symweight::Error::Verification(
                    "subcode audit failed".into(),
                )));
            }
            (sub.materialize(cfg)?, Some(sub.code().d() as u32), Some(r as u32))
        }
        Kind::Uv | Kind::Concat => {
            let built = if kind == Kind::Uv {
                uv_construct(&load_code(first, "first")?, &load_code(second, "second")?, cfg)?
            } else {
                concat_construct(&load_code(outer, "outer")?, &load_code(inner, "inner")?, cfg)?
            };
            eprintln!(
                "audit: {}",
                serde_json::to_string(&built.summary()).expect("plain data")
            );
            let d = built.min_distance.or(built.designed_distance);
            (built.code, d, Some(built.symbol_weight))
        }
    };
    Ok(CodeFile::from_code(&code, d, weight))
}

#[derive(Serialize)]
struct VerifyReport {
    n: usize,
    q: u32,
    size: usize,
    min_distance: Option<u32>,
    symbol_weight_min: Option<u32>,
    symbol_weight_max: Option<u32>,
    failures: Vec<String>,
    passed: bool,
}

fn verify(path: &Path, expect_d: Option<u32>, expect_r: Option<u32>, fmt: Format, cfg: &Config) -> Res<String> {
    let file = parse_code(&read(path)?)?;
    let code = file.to_code()?;
    let min_distance = code.min_distance_with(cfg.exec).ok();
    let range = code.symbol_weight_range();
    let shown = range.map_or("-".to_string(), |(a, b)| {
        if a == b {
            a.to_string()
        } else {
            format!("{a}..{b}")
        }
    });
    let mut failures = Vec::new();
    for (what, want) in [("header", file.d), ("expected", expect_d)] {
        if let (Some(want), Some(got)) = (want, min_distance) {
            if got < want {
                failures.push(format!("minimum distance {got} below the {what} {want}"));
            }
        }
    }
    for (what, want) in [("header", file.r), ("expected", expect_r)] {
        if let Some(want) = want {
            if range != Some((want, want)) {
                failures.push(format!("symbol weights {shown} differ from the {what} {want}"));
            }
        }
    }
    let report = VerifyReport {
        n: code.n(),
        q: code.q(),
        size: code.len(),
        min_distance,
        symbol_weight_min: range.map(|r| r.0),
        symbol_weight_max: range.map(|r| r.1),
        passed: failures.is_empty(),
        failures,
    };
    let text = match fmt {
        Format::Json => output::json(&report),
        Format::Csv => output::csv(&[serde_json::json!({
            "n": report.n, "q": report.q, "size": report.size,
            "min_distance": report.min_distance, "symbol_weight_min": report.symbol_weight_min,
            "symbol_weight_max": report.symbol_weight_max, "passed": report.passed,
        })]),
        Format::Text => {
            let mut s = format!(
                "n={} q={} words={} min_distance={} symbol_weight={}\n",
                report.n,
                report.q,
                report.size,
                report.min_distance.map_or("-".into(), |d| d.to_string()),
                shown,
            );
            for f in &report.failures {
                let _ = writeln!(s, "FAIL {f}");
            }
            s.push_str(if report.passed { "PASS\n" } else { "" });
            s
        }
    };
    if report.passed {
        Ok(text)
    } else {
        print!("{text}");
        Err(CliError::Failed(report.failures.join("; ")))
    }
}

fn conjecture(
    q: Option<u32>,
    k: Option<usize>,
    r: Option<usize>,
    sweep: Option<u32>,
    max_degree: Option<usize>,
    fmt: Format,
    cfg: &Config,
) -> Res<String> {
    let reports: Vec<ConjectureReport> = match (q, sweep) {
        (Some(q), None) => {
            let field = Field::from_order(q)?;
            let k = k.ok_or_else(|| usage("--k is required with --q"))?;
            let r = r.ok_or_else(|| usage("--r is required with --q"))?;
            vec![conjecture_check(&field, k, r, cfg)?]
        }
        (None, Some(max_q)) => conjecture_sweep(max_q, max_degree, cfg)?,
        _ => return Err(usage("give either --q --k --r or --sweep-max-q")),
    };
    let in_range_failures: usize = reports
        .iter()
        .filter(|r| r.in_conjectured_range)
        .map(|r| r.failures)
        .sum();
    Ok(match fmt {
        Format::Json | Format::Text => output::json(&serde_json::json!({
            "checked": reports.iter().map(|r| r.checked).sum::<usize>(),
            "failures": reports.iter().map(|r| r.failures).sum::<usize>(),
            "in_range_failures": in_range_failures,
            "reports": reports,
        })),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                q: u32,
                k: usize,
                r: usize,
                degree: usize,
                in_conjectured_range: bool,
                checked: usize,
                failures: usize,
            }
            output::csv(
                &reports
                    .iter()
                    .map(|x| Row {
                        q: x.q,
                        k: x.k,
                        r: x.r,
                        degree: x.degree,
                        in_conjectured_range: x.in_conjectured_range,
                        checked: x.checked,
                        failures: x.failures,
                    })
                    .collect::<Vec<_>>(),
            )
        }
    })
}
