//! The `rk` command line: argument parsing, text and JSON reports, exit codes.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rigged::catalan::{
    catalan_poly, macmahon_ehrhart, macmahon_hvector, narayana_bosonic, narayana_fermionic,
    narayana_maj, schroeder_poly,
};
use rigged::config::{enumerate_admissible, ConfigType};
use rigged::error::set_enumeration_cap;
use rigged::gt::{count_gt_points, stretched_gt_series};
use rigged::internal::{
    internal_fermionic, liskova, principal_specialization_character, stable_limit,
};
use rigged::kostka::{kostka_at_one_type, kostka_foulkes, parabolic_kostka};
use rigged::stretched::{
    fit_stretched, gt_generating_function_check, okounkov_certificate, okounkov_threshold,
    stretched_values, AtQ,
};
use rigged::tableaux::{charge_generating_function, lattice_paths_asc, lattice_words};
use rigged::verify::{run_suite, Suite};
use rigged::{Error, Partition, QPolynomial, RectangleSequence};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "rk", version, about = "Rigged configurations, Kostka polynomials and their relatives")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Bound on enumerated objects (overrides RK_CAP).
    #[arg(long, global = true, value_name = "N")]
    cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kostka–Foulkes polynomial K_{λμ}(q).
    Kostka(KostkaArgs),
    /// Parabolic Kostka polynomial K_{λR}(q) by the fermionic formula.
    Pkostka(PkostkaArgs),
    /// Admissible configurations of a type.
    Configs(ConfigsArgs),
    /// Rectangular q-Catalan number C(n,m|q).
    Catalan(CatalanArgs),
    /// Rectangular q-Narayana numbers N(n,m;k|q).
    Narayana(NarayanaArgs),
    /// Lattice points of the k-th dilate of the MacMahon polytope.
    Macmahon(MacmahonArgs),
    /// Rectangular Schröder polynomial C(n,m|1+t).
    Schroeder(CatalanArgs),
    /// Integer points of a Gelfand–Tsetlin polytope.
    GtCount(GtCountArgs),
    /// Checks the GT-polytope generating function for λ=(n,1^d).
    GtGf(GtGfArgs),
    /// Stretched parabolic Kostka values and their rational fit.
    Stretched(StretchedArgs),
    /// Okounkov log-concavity threshold from the closed forms.
    Okounkov(OkounkovArgs),
    /// Principal specialization of an internal product of Schur functions.
    Internal(InternalArgs),
    /// Liskova polynomials L^μ_{αβ}(q).
    Liskova(LiskovaArgs),
    /// Lattice words of a given weight grouped by a statistic.
    Words(WordsArgs),
    /// d-dimensional lattice paths counted by ascents.
    Paths(PathsArgs),
    /// Runs the acceptance criteria.
    Verify(VerifyArgs),
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn rects(s: &str) -> Result<RectangleSequence, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KostkaMethod {
    Fermionic,
    Charge,
    Gt,
}

#[derive(Args, Debug)]
struct KostkaArgs {
    #[arg(long, value_parser = partition)]
    lambda: Partition,
    #[arg(long, value_parser = partition)]
    mu: Partition,
    #[arg(long, value_enum, default_value = "fermionic")]
    method: KostkaMethod,
    /// Print the polynomial rather than its value at q = 1.
    #[arg(long)]
    q: bool,
    /// Print the coefficient list from the lowest degree.
    #[arg(long)]
    coeffs: bool,
}

#[derive(Args, Debug)]
struct PkostkaArgs {
    #[arg(long, value_parser = partition)]
    lambda: Partition,
    /// Rectangles as width^height tokens, e.g. 2^3,2^2,1.
    #[arg(long, value_parser = rects)]
    rect: RectangleSequence,
    #[arg(long, conflicts_with = "at_one")]
    q: bool,
    #[arg(long)]
    at_one: bool,
    /// List every configuration's contribution.
    #[arg(long)]
    decompose: bool,
    #[arg(long)]
    coeffs: bool,
}

#[derive(Args, Debug)]
struct ConfigsArgs {
    #[arg(long, value_parser = partition)]
    lambda: Partition,
    #[arg(long, value_parser = rects, required_unless_present = "mu", conflicts_with = "mu")]
    rect: Option<RectangleSequence>,
    #[arg(long, value_parser = partition)]
    mu: Option<Partition>,
    /// Print only the number of admissible configurations.
    #[arg(long)]
    count: bool,
}

#[derive(Args, Debug)]
struct CatalanArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    q: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NarayanaMethod {
    Maj,
    Bosonic,
    Fermionic,
}

#[derive(Args, Debug)]
struct NarayanaArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum, default_value = "maj")]
    method: NarayanaMethod,
    #[arg(long)]
    q: bool,
}

#[derive(Args, Debug)]
struct MacmahonArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: usize,
    /// Also fit the h-vector from this many Ehrhart values.
    #[arg(long, value_name = "WINDOW")]
    hvector: Option<usize>,
}

#[derive(Args, Debug)]
struct GtCountArgs {
    #[arg(long, value_parser = partition)]
    lambda: Partition,
    /// Content, in any order.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    mu: Vec<usize>,
    /// Also list K_{Nλ,Nμ} for N = 0..=NMAX.
    #[arg(long, value_name = "NMAX")]
    stretch: Option<usize>,
}

#[derive(Args, Debug)]
struct GtGfArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    /// Compare q-polynomials rather than values at q = 1.
    #[arg(long)]
    q: bool,
}

#[derive(Args, Debug)]
struct StretchedArgs {
    #[arg(long, value_parser = partition)]
    lambda: Partition,
    #[arg(long, value_parser = rects)]
    rect: RectangleSequence,
    #[arg(long, default_value_t = 12)]
    nmax: usize,
    /// Fit a numerator over (1-t)^POWER; the family's power when omitted.
    #[arg(long, value_name = "POWER", num_args = 0..=1, default_missing_value = "0")]
    fit: Option<usize>,
    #[arg(long)]
    q: bool,
}

#[derive(Args, Debug)]
struct OkounkovArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    power: u32,
    #[arg(long, default_value_t = 50)]
    window: u64,
    /// Also check the printed factored difference for N = 1..=40.
    #[arg(long)]
    certificate: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InternalMethod {
    Character,
    Fermionic,
    Both,
}

#[derive(Args, Debug)]
struct InternalArgs {
    #[arg(long, value_parser = partition)]
    alpha: Partition,
    #[arg(long, value_parser = partition)]
    beta: Partition,
    #[arg(long = "N", value_name = "N")]
    big_n: usize,
    #[arg(long, value_enum, default_value = "both")]
    method: InternalMethod,
    /// Also report the stable limit to this depth.
    #[arg(long, value_name = "DEPTH")]
    limit: Option<usize>,
}

#[derive(Args, Debug)]
struct LiskovaArgs {
    #[arg(long, value_parser = partition)]
    alpha: Partition,
    #[arg(long, value_parser = partition)]
    beta: Partition,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WordStat {
    Des,
    Maj,
}

#[derive(Args, Debug)]
struct WordsArgs {
    #[arg(long, value_parser = partition)]
    weight: Partition,
    #[arg(long, value_enum, default_value = "des")]
    group_by: WordStat,
}

#[derive(Args, Debug)]
struct PathsArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = suite, default_value = "fast")]
    suite: Suite,
}

/// A finished command: text lines, JSON body and exit code.
struct Report {
    text: Vec<String>,
    json: Value,
    code: i32,
}

impl Report {
    fn ok(text: Vec<String>, json: Value) -> Self {
        Report { text, json, code: EXIT_OK }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::EnumerationCapExceeded { .. } => EXIT_CAP,
        Error::FitFailure(_) | Error::NonIntegral(_) | Error::NoStabilization(_) => EXIT_VERIFY,
        _ => EXIT_INVALID,
    }
}

fn coeff_list(p: &QPolynomial) -> String {
    let c: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    format!("({})", c.join(","))
}

fn poly_json(p: &QPolynomial) -> Value {
    json!({
        "text": p.to_string(),
        "min_degree": p.min_degree(),
        "coeffs": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn poly_line(p: &QPolynomial, coeffs: bool) -> String {
    match (coeffs, p.min_degree()) {
        (true, Some(lo)) => format!("q^{lo} * {}", coeff_list(p)),
        _ => p.to_string(),
    }
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Parses `args` (program name first), runs the command and writes its report.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    if let Some(cap) = cli.cap {
        set_enumeration_cap(cap);
    }
    let result = dispatch(&cli.command, err);
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                let body = json!({"schema": 1, "error": e.to_string(), "exit_code": code});
                let _ = writeln!(out, "{body}");
            }
            let _ = writeln!(err, "error: {e}");
            return code;
        }
    };
    if cli.json {
        let mut body = report.json;
        if let Value::Object(map) = &mut body {
            map.insert("schema".into(), json!(1));
        }
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("serializable"));
    } else {
        for line in &report.text {
            let _ = writeln!(out, "{line}");
        }
    }
    report.code
}

fn dispatch(cmd: &Command, err: &mut dyn Write) -> Result<Report, Error> {
    match cmd {
        Command::Kostka(a) => kostka(a),
        Command::Pkostka(a) => pkostka(a, err),
        Command::Configs(a) => configs(a),
        Command::Catalan(a) => catalan(a),
        Command::Narayana(a) => narayana(a),
        Command::Macmahon(a) => macmahon(a),
        Command::Schroeder(a) => schroeder(a),
        Command::GtCount(a) => gt_count(a),
        Command::GtGf(a) => gt_gf(a),
        Command::Stretched(a) => stretched(a),
        Command::Okounkov(a) => okounkov(a),
        Command::Internal(a) => internal(a),
        Command::Liskova(a) => liskova_cmd(a),
        Command::Words(a) => words(a),
        Command::Paths(a) => paths(a),
        Command::Verify(a) => verify(a),
    }
}

fn kostka(a: &KostkaArgs) -> Result<Report, Error> {
    let poly = match a.method {
        KostkaMethod::Fermionic => Some(kostka_foulkes(&a.lambda, &a.mu)?.polynomial),
        KostkaMethod::Charge => Some(charge_generating_function(&a.lambda, &a.mu)?),
        KostkaMethod::Gt => None,
    };
    match poly {
        Some(p) => {
            let value = p.eval_one();
            let line = if a.q || a.coeffs { poly_line(&p, a.coeffs) } else { value.to_string() };
            Ok(Report::ok(
                vec![line],
                json!({"lambda": a.lambda, "mu": a.mu, "polynomial": poly_json(&p), "at_one": value.to_string()}),
            ))
        }
        None => {
            if a.q {
                return Err(Error::Unsupported("the gt method counts points at q = 1 only".into()));
            }
            let v = count_gt_points(&a.lambda, a.mu.parts())?;
            Ok(Report::ok(
                vec![v.to_string()],
                json!({"lambda": a.lambda, "mu": a.mu, "at_one": v.to_string()}),
            ))
        }
    }
}

fn pkostka(a: &PkostkaArgs, err: &mut dyn Write) -> Result<Report, Error> {
    if !a.rect.is_dominant() {
        let _ = writeln!(
            err,
            "warning: rectangle sequence {} is not dominant; the fermionic sum is computed as given",
            a.rect
        );
    }
    if a.at_one && !a.decompose {
        let ty = ConfigType::new(a.lambda.clone(), a.rect.clone())?;
        let v = kostka_at_one_type(&ty)?;
        return Ok(Report::ok(
            vec![v.to_string()],
            json!({"lambda": a.lambda, "rects": a.rect.to_string(), "at_one": v.to_string()}),
        ));
    }
    let res = parabolic_kostka(&a.lambda, &a.rect)?;
    let p = &res.polynomial;
    let mut text = vec![if a.at_one { p.eval_one().to_string() } else { poly_line(p, a.coeffs) }];
    let mut parts = Vec::new();
    if a.decompose {
        for (i, c) in res.contributions.iter().enumerate() {
            let levels: Vec<String> = c.configuration.levels().iter().map(ToString::to_string).collect();
            let factors: Vec<String> = c.factors.iter().map(|f| format!("[{} {}]", f.top, f.bottom)).collect();
            text.push(format!(
                "({}) levels {} charge {} factors {}",
                i + 1,
                levels.join(" | "),
                c.charge,
                if factors.is_empty() { "-".into() } else { factors.join("") }
            ));
            parts.push(json!({
                "levels": levels,
                "charge": c.charge,
                "factors": c.factors,
                "polynomial": poly_json(&c.polynomial()),
            }));
        }
    }
    Ok(Report::ok(
        text,
        json!({
            "lambda": a.lambda,
            "rects": a.rect.to_string(),
            "polynomial": poly_json(p),
            "at_one": p.eval_one().to_string(),
            "configurations": res.contributions.len(),
            "contributions": parts,
        }),
    ))
}

fn configs(a: &ConfigsArgs) -> Result<Report, Error> {
    let rects = match (&a.rect, &a.mu) {
        (Some(r), _) => r.clone(),
        (None, Some(mu)) => RectangleSequence::rows(mu),
        (None, None) => unreachable!("clap requires --rect or --mu"),
    };
    let all = enumerate_admissible(&a.lambda, &rects)?;
    let mut text = vec![format!("{} admissible configurations", all.len())];
    if !a.count {
        for c in &all {
            let levels: Vec<String> = c.levels().iter().map(ToString::to_string).collect();
            text.push(format!("{}  charge {}", levels.join(" | "), c.charge()));
        }
    }
    let reports: Vec<_> = if a.count { Vec::new() } else { all.iter().map(|c| c.report()).collect() };
    Ok(Report::ok(
        text,
        json!({"lambda": a.lambda, "rects": rects.to_string(), "count": all.len(), "configurations": reports}),
    ))
}

fn catalan(a: &CatalanArgs) -> Result<Report, Error> {
    let p = catalan_poly(a.n, a.m);
    let v = p.eval_one();
    let line = if a.q { p.to_string() } else { v.to_string() };
    Ok(Report::ok(
        vec![line],
        json!({"n": a.n, "m": a.m, "value": v.to_string(), "polynomial": poly_json(&p)}),
    ))
}

fn narayana(a: &NarayanaArgs) -> Result<Report, Error> {
    let by_k: BTreeMap<usize, QPolynomial> = match a.method {
        NarayanaMethod::Maj => narayana_maj(a.n, a.m)?.by_k,
        NarayanaMethod::Bosonic => {
            let top = (a.n - 1).saturating_mul(a.m.saturating_sub(1));
            (0..=top)
                .map(|k| Ok((k, narayana_bosonic(a.n, a.m, k)?)))
                .collect::<Result<_, Error>>()?
        }
        NarayanaMethod::Fermionic => {
            let shift = a.m * a.n * a.n.saturating_sub(1) / 2;
            narayana_fermionic(a.n, a.m)?
                .into_iter()
                .map(|(k, g)| (k, g.total.unshift(shift)))
                .collect()
        }
    };
    let text = by_k
        .iter()
        .map(|(k, p)| if a.q { format!("{k}: {p}") } else { format!("{k}: {}", p.eval_one()) })
        .collect();
    let map: BTreeMap<String, Value> = by_k
        .iter()
        .map(|(k, p)| (k.to_string(), json!({"at_one": p.eval_one().to_string(), "polynomial": poly_json(p)})))
        .collect();
    Ok(Report::ok(text, json!({"n": a.n, "m": a.m, "by_k": map})))
}

fn macmahon(a: &MacmahonArgs) -> Result<Report, Error> {
    let v = macmahon_ehrhart(a.n, a.m, a.k);
    let mut text = vec![v.to_string()];
    let mut body = json!({"n": a.n, "m": a.m, "k": a.k, "value": v.to_string()});
    if let Some(window) = a.hvector {
        let h = macmahon_hvector(a.n, a.m, window)?;
        text.push(format!("h-vector ({})", strings(&h).join(",")));
        body["hvector"] = json!(strings(&h));
    }
    Ok(Report::ok(text, body))
}

fn schroeder(a: &CatalanArgs) -> Result<Report, Error> {
    let p = schroeder_poly(a.n, a.m);
    Ok(Report::ok(
        vec![p.to_string().replace('q', "t"), format!("coefficients {}", coeff_list(&p))],
        json!({"n": a.n, "m": a.m, "polynomial": poly_json(&p)}),
    ))
}

fn gt_count(a: &GtCountArgs) -> Result<Report, Error> {
    let v = count_gt_points(&a.lambda, &a.mu)?;
    let mut text = vec![v.to_string()];
    let mut body = json!({"lambda": a.lambda, "mu": a.mu, "count": v.to_string()});
    if let Some(n_max) = a.stretch {
        let s = stretched_gt_series(&a.lambda, &a.mu, n_max)?;
        text.push(format!("stretched ({})", strings(&s).join(",")));
        body["stretched"] = json!(strings(&s));
    }
    Ok(Report::ok(text, body))
}

fn gt_gf(a: &GtGfArgs) -> Result<Report, Error> {
    let ok = gt_generating_function_check(a.n, a.d, a.nmax, a.q)?;
    Ok(Report {
        text: vec![format!("generating function check up to N = {}: {}", a.nmax, if ok { "pass" } else { "fail" })],
        json: json!({"n": a.n, "d": a.d, "nmax": a.nmax, "generic_q": a.q, "holds": ok}),
        code: if ok { EXIT_OK } else { EXIT_VERIFY },
    })
}

fn stretched(a: &StretchedArgs) -> Result<Report, Error> {
    let at = if a.q { AtQ::Generic } else { AtQ::One };
    let series = stretched_values(&a.lambda, &a.rect, a.nmax, at)?;
    let mut text = vec![format!("values ({})", strings(&series.values).join(","))];
    if let Some(ps) = &series.polynomials {
        for (n, p) in ps.iter().enumerate() {
            text.push(format!("N={n}: {p}"));
        }
    }
    let mut body = json!({"lambda": a.lambda, "rects": a.rect.to_string(), "series": series});
    if let Some(power) = a.fit {
        let gf = fit_stretched(&series, (power > 0).then_some(power))?;
        let num = gf.integer_numerator().expect("values at q = 1 are integers");
        text.push(format!(
            "numerator ({}) over (1-t)^{}",
            strings(&num).join(","),
            gf.denominator_exponents.len()
        ));
        body["fit"] = json!({"numerator": strings(&num), "power": gf.denominator_exponents.len()});
    }
    Ok(Report::ok(text, body))
}

fn okounkov(a: &OkounkovArgs) -> Result<Report, Error> {
    let t = okounkov_threshold(a.n, a.power, a.window)?;
    let mut text = vec![format!("threshold {}", t.threshold)];
    let mut code = if t.holds_on_window && t.fails_below { EXIT_OK } else { EXIT_VERIFY };
    let mut body = json!({
        "n": a.n,
        "power": a.power,
        "threshold": t.threshold,
        "window": t.window,
        "holds_on_window": t.holds_on_window,
        "fails_below": t.fails_below,
    });
    if a.certificate {
        let c = okounkov_certificate(a.n, 1..=40)?;
        text.push(format!(
            "factored difference holds for N = 1..40: {}{}",
            c.holds,
            c.observed_scale.as_ref().map(|s| format!(" (observed scale {s})")).unwrap_or_default()
        ));
        if !c.holds {
            code = EXIT_VERIFY;
        }
        body["certificate"] = json!(c);
    }
    Ok(Report { text, json: body, code })
}

fn internal(a: &InternalArgs) -> Result<Report, Error> {
    let mut text = Vec::new();
    let mut body = json!({"alpha": a.alpha, "beta": a.beta, "N": a.big_n});
    let mut code = EXIT_OK;
    let character = match a.method {
        InternalMethod::Character | InternalMethod::Both => {
            let p = principal_specialization_character(&a.alpha, &a.beta, a.big_n)?;
            text.push(format!("character: {p}"));
            body["character"] = poly_json(&p);
            Some(p)
        }
        InternalMethod::Fermionic => None,
    };
    if matches!(a.method, InternalMethod::Fermionic | InternalMethod::Both) {
        let f = internal_fermionic(&a.alpha, &a.beta, a.big_n)?;
        text.push(format!("fermionic: {} ({} configurations)", f.polynomial, f.contributions.len()));
        let charges: Vec<u64> = f.contributions.iter().map(|c| c.charge).collect();
        text.push(format!("charges {}", strings(&charges).join(",")));
        body["fermionic"] = poly_json(&f.polynomial);
        body["charges"] = json!(charges);
        if let Some(c) = &character {
            let agree = f.polynomial.equals_up_to_q_power(c);
            text.push(format!("agree up to a power of q: {agree}"));
            body["agree"] = json!(agree);
            if !agree {
                code = EXIT_VERIFY;
            }
        }
    }
    if let Some(depth) = a.limit {
        let l = stable_limit(&a.alpha, &a.beta, depth, 24)?;
        text.push(format!(
            "stable limit: q^{} ({}) times the hook polynomial inverse; series ({})",
            l.min_degree,
            strings(&l.numerator).join(","),
            strings(&l.series).join(",")
        ));
        body["limit"] = json!(l);
    }
    Ok(Report { text, json: body, code })
}

fn liskova_cmd(a: &LiskovaArgs) -> Result<Report, Error> {
    let l = liskova(&a.alpha, &a.beta)?;
    let text = l.iter().map(|(mu, p)| format!("{mu}: {p}")).collect();
    let map: BTreeMap<String, Value> = l.iter().map(|(mu, p)| (mu.to_string(), poly_json(p))).collect();
    Ok(Report::ok(text, json!({"alpha": a.alpha, "beta": a.beta, "by_mu": map})))
}

fn words(a: &WordsArgs) -> Result<Report, Error> {
    let ws = lattice_words(&a.weight)?;
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for w in &ws {
        let key = match a.group_by {
            WordStat::Des => w.des,
            WordStat::Maj => w.maj,
        };
        *counts.entry(key).or_default() += 1;
    }
    let text = counts.iter().map(|(k, c)| format!("{k}: {c}")).collect();
    let map: BTreeMap<String, u64> = counts.iter().map(|(k, c)| (k.to_string(), *c)).collect();
    Ok(Report::ok(text, json!({"weight": a.weight, "total": ws.len(), "counts": map})))
}

fn paths(a: &PathsArgs) -> Result<Report, Error> {
    let m = lattice_paths_asc(a.d, a.n)?;
    let text = m.iter().map(|(k, c)| format!("{k}: {c}")).collect();
    let map: BTreeMap<String, String> = m.iter().map(|(k, c)| (k.to_string(), c.to_string())).collect();
    Ok(Report::ok(text, json!({"d": a.d, "n": a.n, "counts": map})))
}

fn verify(a: &VerifyArgs) -> Result<Report, Error> {
    let reports = run_suite(a.suite);
    let failed = reports.iter().filter(|r| !r.passed).count();
    let mut text: Vec<String> = reports.iter().map(ToString::to_string).collect();
    text.push(format!("{}/{} criteria pass", reports.len() - failed, reports.len()));
    let code = if failed == 0 {
        EXIT_OK
    } else if reports.iter().all(|r| r.passed || r.capped) {
        EXIT_CAP
    } else {
        EXIT_VERIFY
    };
    Ok(Report {
        text,
        json: json!({"suite": a.suite, "criteria": reports, "failed": failed}),
        code,
    })
}
