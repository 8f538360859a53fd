use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ffcurve::ec::{Certificate, CurveK, Point, ReductionReport};
use ffcurve::family::{self, FamilyParams};
use ffcurve::ff::{RatField, RatFunc};
use ffcurve::gf::{parse_field, FieldCtx};
use ffcurve::nagao::{self, Method, NagaoRow};
use ffcurve::parse::{parse_elem, parse_poly, parse_ratfunc};
use ffcurve::upoly::count_monic_irreducibles;
use ffcurve::{selftest, Error};

#[derive(Parser)]
#[command(
    name = "ffcurve",
    version,
    about = "Elliptic curves y^2 = x^3 + Ax^2 + Bx over F_q(u)"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GlobalOpts {
    /// Base field: "p" or "p^m".
    #[arg(long, global = true)]
    field: Option<String>,
    /// Family coefficient c (element of the base field).
    #[arg(long, global = true)]
    c: Option<String>,
    /// Family coefficient d.
    #[arg(long, global = true)]
    d: Option<String>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for nagao and scan-u0.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Suppress progress logs.
    #[arg(long, global = true)]
    quiet: bool,
    /// key=value file supplying defaults for the options above.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MuMethod {
    Factor,
    Disc,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Exponent {
    #[value(name = "2p")]
    TwoP,
    #[value(name = "4p")]
    FourP,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WMode {
    Closed,
    Endglobal,
    Product,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CurveKind {
    /// y^2 = x^3 + t x^2 - t^3 x with Q = (-t, t^2).
    E,
    /// The same curve at h(t^2+u).
    Main,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum NagaoMethod {
    Tabulated,
    Direct,
}

#[derive(Args)]
struct CurveArgs {
    /// Use E_t: y^2 = x^3 + t x^2 - t^3 x.
    #[arg(long, conflicts_with_all = ["coef_a", "coef_b"])]
    t: Option<String>,
    /// Coefficient A of y^2 = x^3 + Ax^2 + Bx.
    #[arg(long, requires = "coef_b")]
    coef_a: Option<String>,
    #[arg(long, requires = "coef_a")]
    coef_b: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Describe the base field.
    FieldInfo,
    /// Möbius function of a polynomial in u.
    Mu {
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "both")]
        method: MuMethod,
    },
    /// μ(a g1^{2p} + b u g2^{2p}) or λ(a g1^{4p} + b u g2^{4p}), closed form and direct.
    Chowla {
        #[arg(long, value_enum, default_value = "2p")]
        exp: Exponent,
        #[arg(long, default_value = "1")]
        a: String,
        #[arg(long, default_value = "1")]
        b: String,
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
    },
    /// Reduction type and local root number at every bad place.
    Reduction {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Local root numbers and their product.
    Rootnumber {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Root number of E_{h(t)} three ways.
    FamilyW {
        #[arg(long)]
        t: String,
        #[arg(long, value_enum, default_value = "all")]
        mode: WMode,
    },
    /// Search for a place where [2^k]Q is non-integral.
    TorsionCert {
        #[arg(long, default_value = "u")]
        t: String,
        #[arg(long, value_enum, default_value = "e")]
        curve: CurveKind,
        /// Point x-coordinate (defaults to Q).
        #[arg(long, requires = "y")]
        x: Option<String>,
        #[arg(long, requires = "x")]
        y: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_doublings: usize,
    },
    /// Galois group of X^4 + aX^2 + b over the rational function field.
    Galois {
        #[arg(long, requires = "b", conflicts_with = "pi")]
        a: Option<String>,
        #[arg(long, requires = "a")]
        b: Option<String>,
        /// Use the quartic Π1 or Π2 of the family.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        pi: Option<u8>,
    },
    /// Find u0 where π1 and π2 are both irreducible and verify the specialized curves.
    ScanU0 {
        #[arg(long, default_value_t = 1)]
        min_deg: usize,
        #[arg(long, default_value_t = 8)]
        max_deg: usize,
    },
    /// Nagao sums for n = n-min..n-max.
    Nagao {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "tabulated")]
        method: NagaoMethod,
    },
    /// Run the small exhaustive oracle suites.
    Selftest,
}

struct RunConfig {
    field: FieldCtx,
    c: String,
    d: String,
    seed: u64,
    threads: usize,
    format: Format,
    out: Option<PathBuf>,
}

impl RunConfig {
    fn params(&self) -> Result<FamilyParams, Error> {
        FamilyParams::new(
            self.field.clone(),
            parse_elem(&self.field, &self.c)?,
            parse_elem(&self.field, &self.d)?,
        )
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => Failure::Usage(m),
            e => Failure::Domain(e.to_string()),
        }
    }
}

type Res<T> = Result<T, Failure>;

fn read_config(path: &PathBuf) -> Res<Vec<(String, String)>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Failure::Usage(format!("{}:{}: expected key=value", path.display(), i + 1))
        })?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

fn resolve(g: &GlobalOpts) -> Res<(RunConfig, bool)> {
    let mut field = g.field.clone();
    let mut c = g.c.clone();
    let mut d = g.d.clone();
    let mut seed = g.seed;
    let mut threads = g.threads;
    let mut format = g.format;
    let mut out = g.out.clone();
    let mut quiet = g.quiet;
    if let Some(path) = &g.config {
        for (k, v) in read_config(path)? {
            let bad = |what: &str| Failure::Usage(format!("config {k}: {what}"));
            match k.as_str() {
                "field" => field = field.or(Some(v)),
                "c" => c = c.or(Some(v)),
                "d" => d = d.or(Some(v)),
                "seed" => seed = seed.or(Some(v.parse().map_err(|_| bad("not an integer"))?)),
                "threads" => {
                    threads = threads.or(Some(v.parse().map_err(|_| bad("not an integer"))?))
                }
                "format" => {
                    let f = Format::from_str(&v, true)
                        .map_err(|_| bad("expected text, json or csv"))?;
                    format = format.or(Some(f));
                }
                "out" => out = out.or(Some(PathBuf::from(v))),
                "quiet" => quiet = quiet || v == "true" || v == "1",
                _ => return Err(Failure::Usage(format!("unknown config key '{k}'"))),
            }
        }
    }
    let field = parse_field(field.as_deref().unwrap_or("3"))?;
    let threads = threads.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    Ok((
        RunConfig {
            field,
            c: c.unwrap_or_else(|| "1".into()),
            d: d.unwrap_or_else(|| "1".into()),
            seed: seed.unwrap_or(0),
            threads,
            format: format.unwrap_or(Format::Text),
            out,
        },
        quiet,
    ))
}

struct Output {
    text: String,
    json: String,
    csv: Option<String>,
}

impl Output {
    fn new(text: String, json: Value) -> Output {
        Output {
            text,
            json: format!("{json}\n"),
            csv: None,
        }
    }
}

fn rf(cfg: &RunConfig, s: &str) -> Res<RatFunc> {
    Ok(parse_ratfunc(&cfg.field, s, "u")?)
}

fn build_curve(cfg: &RunConfig, args: &CurveArgs) -> Res<(CurveK, String)> {
    let k = RatField::new(cfg.field.clone(), "u");
    match (&args.t, &args.coef_a, &args.coef_b) {
        (Some(t), _, _) => {
            let t = rf(cfg, t)?;
            let desc = format!("E_t, t = {}", t.format("u"));
            Ok((family::curve_e(&k, &t)?, desc))
        }
        (None, Some(a), Some(b)) => {
            let (a, b) = (rf(cfg, a)?, rf(cfg, b)?);
            let desc = format!("A = {}, B = {}", a.format("u"), b.format("u"));
            Ok((CurveK::new(k, a, b)?, desc))
        }
        _ => Err(Failure::Usage(
            "give --t or both --coef-a and --coef-b".into(),
        )),
    }
}

fn report_json(r: &ReductionReport) -> Value {
    json!({
        "place": r.place.format("u"),
        "reduction": r.reduction.label(),
        "root_number": r.root_number,
        "ord_delta": r.ord_delta,
        "ord_c4": r.ord_c4,
        "ord_j": r.ord_j,
        "e": r.e,
    })
}

fn opt(v: Option<i64>) -> String {
    v.map_or("inf".into(), |x| x.to_string())
}

fn field_info(cfg: &RunConfig) -> Res<Output> {
    let f = &cfg.field;
    let modulus: Vec<u64> = f.modulus().to_vec();
    let chi = f.quad_char(f.embed_int(-1));
    let irr: Vec<u64> = (1..=4)
        .map(|n| count_monic_irreducibles(f.q(), n))
        .collect();
    let mut text = format!("GF({}) = GF({}^{})\n", f.q(), f.p(), f.m());
    if f.m() > 1 {
        let _ = writeln!(text, "modulus (ascending): {modulus:?}, generator a");
    }
    let _ = writeln!(text, "chi(-1) = {chi}");
    let _ = writeln!(text, "monic irreducibles of degree 1..4: {irr:?}");
    Ok(Output::new(
        text,
        json!({"p": f.p(), "m": f.m(), "q": f.q(), "modulus": modulus, "chi_minus_one": chi, "irreducible_counts": irr}),
    ))
}

fn mu(cfg: &RunConfig, poly: &str, method: MuMethod) -> Res<Output> {
    let g = parse_poly(&cfg.field, poly, "u")?;
    let by_factor = matches!(method, MuMethod::Factor | MuMethod::Both).then(|| g.moebius_factor());
    let by_disc = matches!(method, MuMethod::Disc | MuMethod::Both).then(|| g.moebius_disc());
    if let (Some(a), Some(b)) = (by_factor, by_disc) {
        if a != b {
            return Err(Failure::Domain(format!(
                "methods disagree: factor {a}, disc {b}"
            )));
        }
    }
    let factors: Vec<String> = if g.is_zero() {
        Vec::new()
    } else {
        g.factor(cfg.seed)
            .factors
            .iter()
            .map(|(h, e)| {
                if *e == 1 {
                    format!("({})", h.format("u"))
                } else {
                    format!("({})^{e}", h.format("u"))
                }
            })
            .collect()
    };
    let mut text = format!("mu({}) ", g.format("u"));
    if let Some(a) = by_factor {
        let _ = write!(text, "factor: {a} ");
    }
    if let Some(b) = by_disc {
        let _ = write!(text, "disc: {b}");
    }
    text.push('\n');
    let _ = writeln!(text, "factors: {}", factors.join(" "));
    let mut out = Output::new(
        text,
        json!({"poly": g.format("u"), "factor": by_factor, "disc": by_disc, "factors": factors}),
    );
    out.csv = Some(format!(
        "poly,factor,disc\n{},{},{}\n",
        g.format("u"),
        opt(by_factor.map(i64::from)),
        opt(by_disc.map(i64::from))
    ));
    Ok(out)
}

fn chowla(cfg: &RunConfig, exp: Exponent, a: &str, b: &str, g1: &str, g2: &str) -> Res<Output> {
    let f = &cfg.field;
    let (a, b) = (parse_elem(f, a)?, parse_elem(f, b)?);
    let (g1, g2) = (parse_poly(f, g1, "u")?, parse_poly(f, g2, "u")?);
    let (name, closed, direct, e) = match exp {
        Exponent::TwoP => (
            "mu",
            family::chowla_mu_closed_form(a, b, &g1, &g2)?,
            family::chowla_mu_direct(a, b, &g1, &g2),
            2 * f.p(),
        ),
        Exponent::FourP => (
            "lambda",
            family::chowla_liouville_4p(a, b, &g1, &g2)?,
            family::chowla_liouville_direct(a, b, &g1, &g2),
            4 * f.p(),
        ),
    };
    let poly = family::chowla_poly(a, b, &g1, &g2, e);
    if closed != direct {
        return Err(Failure::Domain(format!(
            "closed form {closed} != direct {direct}"
        )));
    }
    let text = format!(
        "{name}({}) = {closed} (closed form and direct agree)\n",
        poly.format("u")
    );
    Ok(Output::new(
        text,
        json!({"function": name, "poly": poly.format("u"), "closed_form": closed, "direct": direct}),
    ))
}

fn reduction(cfg: &RunConfig, args: &CurveArgs, with_product: bool) -> Res<Output> {
    let (e, desc) = build_curve(cfg, args)?;
    let bad = e.bad_places()?;
    let w: i8 = bad.iter().map(|r| r.root_number).product();
    let mut text = format!("{desc}\n");
    let mut json_lines = String::new();
    let mut csv = String::from("place,reduction,root_number,ord_delta,ord_c4,ord_j\n");
    for r in &bad {
        if with_product {
            let _ = writeln!(text, "{:<24} W = {:+}", r.place.format("u"), r.root_number);
            let _ = writeln!(
                json_lines,
                "{}",
                json!({"place": r.place.format("u"), "W": r.root_number})
            );
        } else {
            let _ = writeln!(
                text,
                "{:<24} {:<38} W = {:+}  ord(Δ) = {}  ord(c4) = {}  ord(j) = {}",
                r.place.format("u"),
                r.reduction.label(),
                r.root_number,
                r.ord_delta,
                opt(r.ord_c4),
                opt(r.ord_j)
            );
            let _ = writeln!(json_lines, "{}", report_json(r));
        }
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{}",
            r.place.format("u"),
            r.reduction.label(),
            r.root_number,
            r.ord_delta,
            opt(r.ord_c4),
            opt(r.ord_j)
        );
    }
    if with_product {
        let _ = writeln!(text, "global root number: {w:+}");
        let _ = writeln!(json_lines, "{}", json!({"product": w}));
    }
    Ok(Output {
        text,
        json: json_lines,
        csv: Some(csv),
    })
}

fn family_w(cfg: &RunConfig, t: &str, mode: WMode) -> Res<Output> {
    let pr = cfg.params()?;
    let t = rf(cfg, t)?;
    let mut vals: Vec<(&str, i8)> = Vec::new();
    if matches!(mode, WMode::Closed | WMode::All) {
        vals.push(("closed", family::closed_form_w(&t)));
    }
    if matches!(mode, WMode::Endglobal | WMode::All) {
        vals.push(("endglobal", family::endglobal_w(&pr, &t)));
    }
    if matches!(mode, WMode::Product | WMode::All) {
        vals.push(("product", family::product_w(&pr, &t)?));
    }
    if vals.windows(2).any(|w| w[0].1 != w[1].1) {
        return Err(Failure::Domain(format!("root numbers disagree: {vals:?}")));
    }
    let mut text = format!("W(E_h(t)), t = {}\n", t.format("u"));
    let mut obj = serde_json::Map::new();
    obj.insert("t".into(), json!(t.format("u")));
    for (k, v) in &vals {
        let _ = writeln!(text, "{k:<10} {v:+}");
        obj.insert((*k).into(), json!(v));
    }
    Ok(Output::new(text, Value::Object(obj)))
}

fn torsion_cert(
    cfg: &RunConfig,
    t: &str,
    kind: CurveKind,
    x: &Option<String>,
    y: &Option<String>,
    maxd: usize,
) -> Res<Output> {
    let k = RatField::new(cfg.field.clone(), "u");
    let t = rf(cfg, t)?;
    let (e, q) = match kind {
        CurveKind::E => (family::curve_e(&k, &t)?, family::point_q(&k, &t)),
        CurveKind::Main => family::mainfamily_curve(&cfg.params()?, &t)?,
    };
    let p = match (x, y) {
        (Some(x), Some(y)) => Point::Affine(rf(cfg, x)?, rf(cfg, y)?),
        _ => q,
    };
    let cert = e.infinite_order_certificate(&p, maxd)?;
    let (text, js) = match &cert {
        Certificate::InfiniteOrder { place, k } => (
            format!(
                "infinite order: [2^{k}]P is not integral at {}\n",
                place.format("u")
            ),
            json!({"result": "infinite_order", "place": place.format("u"), "k": k}),
        ),
        Certificate::Torsion { k } => (
            format!("torsion: [2^{k}]P = O\n"),
            json!({"result": "torsion", "k": k}),
        ),
        Certificate::Inconclusive => (
            format!("inconclusive after {maxd} doublings\n"),
            json!({"result": "inconclusive", "max_doublings": maxd}),
        ),
    };
    Ok(Output::new(text, js))
}

fn galois(cfg: &RunConfig, a: &Option<String>, b: &Option<String>, pi: Option<u8>) -> Res<Output> {
    let k = RatField::new(cfg.field.clone(), "u");
    let (a, b) = match (a, b, pi) {
        (Some(a), Some(b), None) => (rf(cfg, a)?, rf(cfg, b)?),
        (None, None, Some(j)) => family::pi12_coeffs(&cfg.params()?)[j as usize - 1].clone(),
        _ => return Err(Failure::Usage("give --a and --b, or --pi 1|2".into())),
    };
    let (g, subs) = family::biquadratic_galois(&k, &a, &b)?;
    let subs: Vec<String> = subs
        .iter()
        .map(|s| format!("sqrt({})", s.format("u")))
        .collect();
    let text = format!(
        "X^4 + ({})X^2 + ({}): {}\n{}",
        a.format("u"),
        b.format("u"),
        g.label(),
        if subs.is_empty() {
            String::new()
        } else {
            format!("quadratic subfields: {}\n", subs.join(", "))
        }
    );
    Ok(Output::new(
        text,
        json!({"a": a.format("u"), "b": b.format("u"), "group": g.label(), "quadratic_subfields": subs}),
    ))
}

fn scan(cfg: &RunConfig, lo: usize, hi: usize) -> Res<Output> {
    let pr = cfg.params()?;
    let rep = family::scan_u0(&pr, lo..=hi, cfg.threads)?;
    let freq = rep.frequency();
    let mut text = String::new();
    let mut csv = String::from("u0,pi1,pi2\n");
    let mut hits = Vec::new();
    for h in &rep.hits {
        let k0 = h.pis.kappa0.field();
        let (p1, p2) = (h.pis.pi1_monic.format("T"), h.pis.pi2_monic.format("T"));
        let _ = writeln!(
            text,
            "u0 = {}  ({k0})  pi1 = {p1}  pi2 = {p2}  verified",
            h.pis.u0.format("u")
        );
        let _ = writeln!(csv, "{},{p1},{p2}", h.pis.u0.format("u"));
        let bad: Vec<Value> = h
            .report
            .bad
            .iter()
            .map(|r| json!({"place": r.place.format("T"), "reduction": r.reduction.label(), "ord_j": r.ord_j}))
            .collect();
        hits.push(json!({
            "u0": h.pis.u0.format("u"),
            "kappa0": k0.to_string(),
            "u0_hat": k0.format_elem(h.pis.u0_hat),
            "pi1": p1,
            "pi2": p2,
            "bad_places": bad,
            "eu0_at_pi1": [h.report.eu0_at_pi1.0, h.report.eu0_at_pi1.1],
            "eu0_at_pi2": [h.report.eu0_at_pi2.0, h.report.eu0_at_pi2.1],
        }));
    }
    let stats: Vec<Value> = rep
        .per_degree
        .iter()
        .map(|s| json!({"degree": s.degree, "candidates": s.candidates, "hits": s.hits}))
        .collect();
    for s in &rep.per_degree {
        let _ = writeln!(
            text,
            "degree {}: {} of {} u0",
            s.degree, s.hits, s.candidates
        );
    }
    let _ = writeln!(text, "hit frequency {freq:.4} (heuristic 0.0625)");
    let mut out = Output::new(
        text,
        json!({"hits": hits, "per_degree": stats, "frequency": freq}),
    );
    out.csv = Some(csv);
    Ok(out)
}

fn nagao_cmd(cfg: &RunConfig, lo: usize, hi: usize, method: NagaoMethod) -> Res<Output> {
    let pr = cfg.params()?;
    let method = match method {
        NagaoMethod::Tabulated => Method::Tabulated,
        NagaoMethod::Direct => Method::Direct,
    };
    if hi < lo {
        return Err(Failure::Usage(format!("empty range n = {lo}..{hi}")));
    }
    let rows: Vec<NagaoRow> = (lo..=hi)
        .map(|n| nagao::nagao_row(&pr, n, method, cfg.threads))
        .collect::<Result<_, _>>()?;
    let mut text = format!(
        "{:>4} {:>3} {:>12} {:>16} {:>8}\n",
        "q", "n", "left", "right", "ratio"
    );
    let mut csv = format!("{}\n", NagaoRow::csv_header());
    for r in &rows {
        let _ = writeln!(
            text,
            "{:>4} {:>3} {:>12} {:>16} {:>8}",
            r.q,
            r.n,
            r.left,
            r.right_str(),
            r.ratio
        );
        let _ = writeln!(csv, "{}", r.csv_line());
    }
    let json = serde_json::to_value(&rows).map_err(|e| Failure::Domain(e.to_string()))?;
    let mut out = Output::new(text, json);
    out.csv = Some(csv);
    Ok(out)
}

fn selftest_cmd(cfg: &RunConfig) -> Res<Output> {
    let checks = selftest::run(cfg.seed);
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(
            text,
            "{} {} ({} cases){}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.cases,
            if c.detail.is_empty() {
                String::new()
            } else {
                format!(": {}", c.detail)
            }
        );
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let json = serde_json::to_value(&checks).map_err(|e| Failure::Domain(e.to_string()))?;
    let out = Output::new(text, json);
    if failed > 0 {
        emit(cfg, &out)?;
        return Err(Failure::Domain(format!("{failed} self-test(s) failed")));
    }
    Ok(out)
}

fn emit(cfg: &RunConfig, out: &Output) -> Res<()> {
    let body = match cfg.format {
        Format::Text => &out.text,
        Format::Json => &out.json,
        Format::Csv => out.csv.as_ref().ok_or_else(|| {
            Failure::Usage("csv output is not available for this subcommand".into())
        })?,
    };
    match &cfg.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure::Domain(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Res<()> {
    let (cfg, quiet) = resolve(&cli.global)?;
    env_logger::Builder::new()
        .filter_level(if quiet {
            log::LevelFilter::Error
        } else {
            log::LevelFilter::Info
        })
        .parse_default_env()
        .init();
    let out = match &cli.cmd {
        Cmd::FieldInfo => field_info(&cfg)?,
        Cmd::Mu { poly, method } => mu(&cfg, poly, *method)?,
        Cmd::Chowla { exp, a, b, g1, g2 } => chowla(&cfg, *exp, a, b, g1, g2)?,
        Cmd::Reduction { curve } => reduction(&cfg, curve, false)?,
        Cmd::Rootnumber { curve } => reduction(&cfg, curve, true)?,
        Cmd::FamilyW { t, mode } => family_w(&cfg, t, *mode)?,
        Cmd::TorsionCert {
            t,
            curve,
            x,
            y,
            max_doublings,
        } => torsion_cert(&cfg, t, *curve, x, y, *max_doublings)?,
        Cmd::Galois { a, b, pi } => galois(&cfg, a, b, *pi)?,
        Cmd::ScanU0 { min_deg, max_deg } => scan(&cfg, *min_deg, *max_deg)?,
        Cmd::Nagao {
            n_min,
            n_max,
            method,
        } => nagao_cmd(&cfg, *n_min, *n_max, *method)?,
        Cmd::Selftest => selftest_cmd(&cfg)?,
    };
    emit(&cfg, &out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
