//! The `sl3web` command line.
//!
//! Exit status is 0 on success, 1 when a verification finds a
//! counterexample, and 2 on bad arguments or payloads.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bijection::{classify_steps, grow, iota};
use crate::flows::{boundary_state, enumerate_flows, flow_to_colstrict, ClosedWeb};
use crate::foamword::{dot_placement, enumerate_cellular_basis, graded_dim, idempotent, orthogonality_check};
use crate::ladderweb::{c_of_s, enumerate_basis, LadderWeb, LtWord, SignString};
use crate::presets::preset;
use crate::tableaux::{parse_multitableau, Multipartition3, Multitableau};
use crate::verify::{run_check, sign_strings, Outcome, CHECKS};
use crate::Error;

const CSV_HELP: &str = "\
CSV columns:
  webs          signs, tableau, word, length, total_length
  webs --preset name, word, n, ell, boundary, non_elliptic
  flows         word, state, weight, tableau, moves
  bij iota      word, state, weight, multitableau, moves
  bij grow      word, n, ell
  foam basis    shape, top, bottom, top_web, bottom_web, degree
  foam dims     shape_a, shape_b, graded_dim, bracket, match
  foam idem     word, dots
  bracket       a single value, no header
  verify        check, cases, failures, status";

#[derive(Parser, Debug)]
#[command(name = "sl3web", version, about = "Exact combinatorics of sl3 ladder webs", after_help = CSV_HELP)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest number of boundary points for exhaustive runs.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_n: usize,
    /// Worker threads; all cores when absent.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Reserved; no command is randomised.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Basis webs of a sign string, or the layers of a preset.
    Webs(Source),
    /// Flows on one web or on every basis web of a sign string.
    Flows(Source),
    /// Between webs with flows and multitableaux.
    #[command(subcommand)]
    Bij(BijCommand),
    /// Basis foams, graded dimensions and idempotents.
    #[command(subcommand)]
    Foam(FoamCommand),
    /// Bracket of a closed web.
    Bracket(BracketArgs),
    /// Exhaustive checks: roundtrip, degree, unitriangular, gdf, cellular or all.
    Verify(VerifyArgs),
}

/// One web given by preset or word, or all basis webs of a sign string.
#[derive(Args, Debug, Clone)]
pub struct Source {
    #[arg(long, conflicts_with_all = ["preset", "word"])]
    pub signs: Option<String>,
    #[arg(long, conflicts_with = "word")]
    pub preset: Option<String>,
    /// Ladder word such as "F1 F2^2".
    #[arg(long, requires_all = ["n", "ell"])]
    pub word: Option<String>,
    /// Number of uprights.
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of full uprights at the bottom.
    #[arg(long)]
    pub ell: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum BijCommand {
    /// Fillings of every flow on the given webs.
    Iota(Source),
    /// Web and flow grown from a multitableau such as "(1 | - | 1/2)" or its JSON.
    Grow {
        #[arg(long)]
        tableau: String,
        /// Residue shift, the number of full strands at the bottom.
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum FoamCommand {
    Basis {
        #[arg(long)]
        signs: String,
    },
    /// Graded dimensions of idempotent pairs next to brackets of flow pairs.
    Dims {
        #[arg(long)]
        signs: String,
    },
    Idem {
        /// JSON list of three partitions, e.g. [[2,1],[1],[2,1]].
        #[arg(long)]
        shape: String,
        #[arg(long)]
        m: i64,
    },
}

#[derive(Args, Debug)]
pub struct BracketArgs {
    /// Preset closed by its own reflection, or the closed preset "circle".
    #[arg(long, conflicts_with_all = ["lower", "word"])]
    pub pair: Option<String>,
    /// A closed ladder word.
    #[arg(long, requires_all = ["n", "ell"], conflicts_with = "lower")]
    pub word: Option<String>,
    /// Bottom half of a pair; glued to the reflection of --upper.
    #[arg(long, requires_all = ["upper", "n", "ell"])]
    pub lower: Option<String>,
    #[arg(long)]
    pub upper: Option<String>,
    /// Number of uprights.
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of full uprights at the bottom.
    #[arg(long)]
    pub ell: Option<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of roundtrip, degree, unitriangular, gdf, cellular, or all.
    #[arg(default_value = "all")]
    pub check: String,
    /// Only this sign string instead of all up to --max-n.
    #[arg(long)]
    pub signs: Option<String>,
}

/// A report: a table, or a single value.
#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Table { columns: Vec<&'static str>, rows: Vec<Vec<Value>> },
    Scalar(Value),
}

impl Report {
    fn table(columns: &[&'static str]) -> Self {
        Report::Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<Value>) {
        if let Report::Table { rows, .. } = self {
            rows.push(row);
        }
    }

    pub fn render(&self, format: Format) -> String {
        let cell = |v: &Value| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        match (self, format) {
            (Report::Scalar(v), Format::Json) => format!("{v}\n"),
            (Report::Scalar(v), _) => format!("{}\n", cell(v)),
            (Report::Table { columns, rows }, Format::Json) => {
                let objs: Vec<Value> = rows
                    .iter()
                    .map(|r| Value::Object(columns.iter().map(|c| c.to_string()).zip(r.iter().cloned()).collect()))
                    .collect();
                format!("{}\n", serde_json::to_string_pretty(&objs).expect("values serialize"))
            }
            (Report::Table { columns, rows }, Format::Csv) => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(columns).expect("in-memory write");
                for r in rows {
                    w.write_record(r.iter().map(cell)).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf8 cells")
            }
            (Report::Table { columns, rows }, Format::Text) => {
                let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(cell).collect()).collect();
                let widths: Vec<usize> = (0..columns.len())
                    .map(|k| cells.iter().map(|r| r[k].chars().count()).chain([columns[k].len()]).max().unwrap_or(0))
                    .collect();
                let line = |items: Vec<&str>| {
                    let padded: Vec<String> =
                        items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
                    format!("{}\n", padded.join("  ").trim_end())
                };
                let mut out = line(columns.clone());
                for r in &cells {
                    out.push_str(&line(r.iter().map(String::as_str).collect()));
                }
                out
            }
        }
    }
}

fn parse_signs(s: &str) -> Result<SignString, Error> {
    let signs: SignString = s.parse()?;
    c_of_s(&signs)?;
    Ok(signs)
}

fn parse_word(s: &str) -> Result<LtWord, Error> {
    s.parse()
}

fn build(word: &str, n: usize, ell: usize) -> Result<LadderWeb, Error> {
    let w = parse_word(word)?;
    LadderWeb::build(&w, n, ell)?.ok_or_else(|| Error::Domain(format!("{w} vanishes on {n} strands")))
}

fn parse_shape(s: &str, m: i64) -> Result<Multipartition3, Error> {
    let parts: [Vec<usize>; 3] =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("shape payload: {e}")))?;
    Multipartition3::from_parts([&parts[0], &parts[1], &parts[2]], m)
}

fn parse_tableau(s: &str, m: i64) -> Result<Multitableau, Error> {
    if s.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(format!("tableau payload: {e}")))?;
        return Multitableau::from_json(&v);
    }
    parse_multitableau(s, m)
}

impl Source {
    /// The webs this source names, each with the sign string it sits on.
    fn webs(&self) -> Result<Vec<(String, LadderWeb)>, Error> {
        match (&self.signs, &self.preset, &self.word) {
            (Some(s), None, None) => {
                let signs = parse_signs(s)?;
                Ok(enumerate_basis(&signs)?.into_iter().map(|(_, w)| (signs.to_string(), w)).collect())
            }
            (None, Some(p), None) => {
                let w = preset(p)?.web();
                Ok(vec![(w.boundary().to_string(), w)])
            }
            (None, None, Some(word)) => {
                let w = build(word, self.n.unwrap_or_default(), self.ell.unwrap_or_default())?;
                Ok(vec![(w.boundary().to_string(), w)])
            }
            _ => Err(Error::Parse("give one of --signs, --preset or --word".into())),
        }
    }
}

fn moves_json(moves: &[u8]) -> Value {
    json!(moves.iter().map(|&m| crate::flows::colours(m).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn webs(src: &Source) -> Result<Report, Error> {
    if let Some(p) = &src.preset {
        let p = preset(p)?;
        let w = p.web();
        let mut r = Report::table(&["name", "word", "n", "ell", "boundary", "non_elliptic"]);
        r.push(vec![
            json!(p.name),
            json!(w.word.to_string()),
            json!(w.n),
            json!(w.ell),
            json!(w.boundary().to_string()),
            json!(w.is_non_elliptic()),
        ]);
        return Ok(r);
    }
    let Some(s) = &src.signs else {
        return Err(Error::Parse("webs needs --signs or --preset".into()));
    };
    let signs = parse_signs(s)?;
    let mut r = Report::table(&["signs", "tableau", "word", "length", "total_length"]);
    for (t, w) in enumerate_basis(&signs)? {
        r.push(vec![
            json!(signs.to_string()),
            json!(t.to_string()),
            json!(w.word.to_string()),
            json!(w.word.length()),
            json!(w.word.total_length()),
        ]);
    }
    Ok(r)
}

fn flows(src: &Source) -> Result<Report, Error> {
    let mut r = Report::table(&["word", "state", "weight", "tableau", "moves"]);
    for (_, w) in src.webs()? {
        for f in enumerate_flows(&w) {
            r.push(vec![
                json!(w.word.to_string()),
                json!(boundary_state(&f).to_string()),
                json!(f.weight),
                json!(flow_to_colstrict(&w, &f).to_string()),
                moves_json(&f.moves),
            ]);
        }
    }
    Ok(r)
}

fn bij(cmd: &BijCommand) -> Result<Report, Error> {
    match cmd {
        BijCommand::Iota(src) => {
            let mut r = Report::table(&["word", "state", "weight", "multitableau", "moves"]);
            for (_, w) in src.webs()? {
                for f in enumerate_flows(&w) {
                    let kinds: Vec<String> = classify_steps(&w, &f)?.iter().map(ToString::to_string).collect();
                    r.push(vec![
                        json!(w.word.to_string()),
                        json!(boundary_state(&f).to_string()),
                        json!(f.weight),
                        json!(iota(&w, &f)?.to_string()),
                        json!(kinds.join(" ")),
                    ]);
                }
            }
            Ok(r)
        }
        BijCommand::Grow { tableau, m, n } => {
            let t = parse_tableau(tableau, *m)?;
            let g = grow(&t, *n)?;
            let mut r = Report::table(&["word", "n", "ell"]);
            r.push(vec![json!(g.word.to_string()), json!(g.n), json!(g.ell)]);
            Ok(r)
        }
    }
}

fn foam(cmd: &FoamCommand) -> Result<Report, Error> {
    match cmd {
        FoamCommand::Basis { signs } => {
            let signs = parse_signs(signs)?;
            let mut r = Report::table(&["shape", "top", "bottom", "top_web", "bottom_web", "degree"]);
            for b in enumerate_cellular_basis(&signs)? {
                r.push(vec![
                    json!(b.shape.to_string()),
                    json!(b.top_tableau.to_string()),
                    json!(b.bottom_tableau.to_string()),
                    json!(b.top_web.to_string()),
                    json!(b.bottom_web.to_string()),
                    json!(b.degree()),
                ]);
            }
            Ok(r)
        }
        FoamCommand::Dims { signs } => {
            let signs = parse_signs(signs)?;
            let n = signs.len();
            let mut shapes: Vec<Multipartition3> = Vec::new();
            for (w, f, _) in crate::foamword::filled_flows(&signs)? {
                let s = crate::bijection::shape_of(&w, &f)?;
                if !shapes.iter().any(|x| orthogonality_check(x, &s)) {
                    shapes.push(s);
                }
            }
            let mut r = Report::table(&["shape_a", "shape_b", "graded_dim", "bracket", "match"]);
            for a in &shapes {
                for b in &shapes {
                    let dim = graded_dim(a, b, n)?;
                    let ea = crate::foamword::idempotent_web(a, n)?;
                    let eb = crate::foamword::idempotent_web(b, n)?;
                    let bracket = ClosedWeb::pair(ea, eb)?.bracket();
                    r.push(vec![
                        json!(a.to_string()),
                        json!(b.to_string()),
                        json!(dim.to_string()),
                        json!(bracket.to_string()),
                        json!(dim == bracket),
                    ]);
                }
            }
            Ok(r)
        }
        FoamCommand::Idem { shape, m } => {
            let shape = parse_shape(shape, *m)?;
            let mut r = Report::table(&["word", "dots"]);
            r.push(vec![json!(idempotent(&shape).to_string()), json!(dot_placement(&shape))]);
            Ok(r)
        }
    }
}

fn bracket(args: &BracketArgs) -> Result<Report, Error> {
    let closed = match (&args.pair, &args.word, &args.lower, &args.upper) {
        (Some(p), None, None, None) => preset(p)?.closed(),
        (None, Some(word), None, None) => {
            ClosedWeb::ladder(build(word, args.n.unwrap_or_default(), args.ell.unwrap_or_default())?)?
        }
        (None, None, Some(lower), Some(upper)) => {
            let (n, ell) = (args.n.unwrap_or_default(), args.ell.unwrap_or_default());
            ClosedWeb::pair(build(lower, n, ell)?, build(upper, n, ell)?)?
        }
        _ => return Err(Error::Parse("give --pair, --word, or --lower with --upper".into())),
    };
    Ok(Report::Scalar(json!(closed.bracket().to_string())))
}

fn verify(args: &VerifyArgs, max_n: usize) -> Result<(Report, Vec<Outcome>), Error> {
    let strings = match &args.signs {
        Some(s) => vec![parse_signs(s)?],
        None => sign_strings(max_n),
    };
    let names: Vec<&str> = if args.check == "all" { CHECKS.to_vec() } else { vec![args.check.as_str()] };
    let mut outcomes = Vec::new();
    for name in names {
        outcomes.push(run_check(name, &strings)?);
    }
    let mut r = Report::table(&["check", "cases", "failures", "status"]);
    for o in &outcomes {
        r.push(vec![
            json!(o.check),
            json!(o.cases),
            json!(o.failures.len()),
            json!(if o.passed() { "PASS" } else { "FAIL" }),
        ]);
    }
    Ok((r, outcomes))
}

/// Shortest failure first, so the dump is the smallest counterexample.
fn counterexample(outcomes: &[Outcome]) -> Option<Value> {
    outcomes
        .iter()
        .flat_map(|o| o.failures.iter().map(move |f| (o.check, f)))
        .min_by_key(|(_, f)| f.payload.to_string().len())
        .map(|(check, f)| json!({"check": check, "message": f.message, "payload": f.payload}))
}

/// Runs the command, returning its rendered output and exit status.
fn dispatch(cli: &Cli) -> Result<(String, i32), Error> {
    let report = match &cli.command {
        Command::Webs(src) => webs(src)?,
        Command::Flows(src) => flows(src)?,
        Command::Bij(cmd) => bij(cmd)?,
        Command::Foam(cmd) => foam(cmd)?,
        Command::Bracket(args) => bracket(args)?,
        Command::Verify(args) => {
            let (report, outcomes) = verify(args, cli.max_n)?;
            let mut text = report.render(cli.format);
            if let Some(dump) = counterexample(&outcomes) {
                text.push_str(&serde_json::to_string_pretty(&dump).expect("json"));
                text.push('\n');
                return Ok((text, 1));
            }
            if cli.format == Format::Text {
                text.push_str("all checks passed\n");
            }
            return Ok((text, 0));
        }
    };
    Ok((report.render(cli.format), 0))
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok((text, code)) => match out.write_all(text.as_bytes()) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: writing output: {e}");
                2
            }
        },
        Err(e @ Error::Invariant(_)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("sl3web").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn theta_bracket() {
        let (code, out, _) = call(&["bracket", "--pair", "theta"]);
        assert_eq!(code, 0);
        assert_eq!(out, "q^3 + 2*q + 2*q^-1 + q^-3\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["webs", "--signs", "+q"]).0, 2);
        assert_eq!(call(&["foam", "idem", "--shape", "[[2,1],[1]", "--m", "2"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
        let (code, out, _) = call(&["verify", "roundtrip", "--signs", "+-+-"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("PASS"));
    }

    #[test]
    fn formats() {
        let (_, csv, _) = call(&["--format", "csv", "webs", "--signs", "+-+-"]);
        assert_eq!(csv.lines().next(), Some("signs,tableau,word,length,total_length"));
        assert_eq!(csv.lines().count(), 3);
        let (_, js, _) = call(&["--format", "json", "flows", "--preset", "arc"]);
        let v: Value = serde_json::from_str(&js).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 3);
    }

    #[test]
    fn output_does_not_depend_on_jobs() {
        let one = call(&["--jobs", "1", "foam", "basis", "--signs", "+-+-"]);
        let four = call(&["--jobs", "4", "foam", "basis", "--signs", "+-+-"]);
        assert_eq!(one, four);
    }
}
