//! Command-line front end. `run` parses arguments, dispatches to the library and
//! returns the process exit code: 0 ok, 1 check failure, 2 usage or parse
//! error, 3 resource cap.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::presentation::DEFAULT_BUDGET;
use crate::algebra::{
    format_element, format_word, parse_element, AlgElement, AlgebraKind, Gen, Kind, Presentation,
};
use crate::doubles::{closed_form_action_sl2, ActionFamily, Doubles, TargetSide};
use crate::error::Error;
use crate::omodules::{ModuleVector, WeightModule, DEFAULT_DEPTH_CAP};
use crate::pairing::{PairingEngine, PairingSide, DEFAULT_HEIGHT_CAP};
use crate::rootdata::{DatumConfig, RootDatum, Weight};
use crate::verify::{run_suite, Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "qdouble",
    version,
    about = "Exact computations in two-parameter quantum groups and their Heisenberg doubles"
)]
struct Cli {
    /// Root datum by type name (A1, A2, B2, ...).
    #[arg(long, global = true, default_value = "A1")]
    datum: String,
    /// Truncation depth for modules.
    #[arg(long, global = true, default_value_t = 4)]
    depth: u32,
    /// Largest degree height for pairings and Gram matrices.
    #[arg(long, global = true)]
    height_cap: Option<u32>,
    /// Rewriting step budget.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// JSON root datum, `{"type": "A2"}` or `{"cartan": [[2,-1],[-1,2]], "sym": [1,1]}`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical form of an element.
    NormalForm(NormalFormArgs),
    /// Value of the skew pairing.
    Pair(PairArgs),
    /// Gram matrix, rank and radical in one degree.
    Gram(GramArgs),
    /// Action of a double element on the Heisenberg side.
    Act(ActArgs),
    /// Truncated H(lambda) reports.
    Verma(VermaArgs),
    /// Projector onto maximal vectors applied to a vector of H(lambda).
    Projector(ProjectorArgs),
    /// Runs verification suites.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum AlgebraChoice {
    Auto,
    Double,
    Heisenberg,
    UGeq,
    ULeq,
    BPlus,
    BMinus,
}

#[derive(Args, Debug)]
struct NormalFormArgs {
    expr: String,
    #[arg(long, value_enum, default_value_t = AlgebraChoice::Auto)]
    algebra: AlgebraChoice,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SideChoice {
    U,
    W,
}

#[derive(Args, Debug)]
struct GramArgs {
    /// Degree as a sum of simple roots, e.g. "2a1+a2".
    #[arg(long)]
    degree: String,
    #[arg(long, value_enum, default_value_t = SideChoice::W)]
    side: SideChoice,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Rep {
    Schrodinger,
    Diagonal,
}

#[derive(Args, Debug)]
struct ActArgs {
    #[arg(long)]
    actor: String,
    #[arg(long)]
    target: String,
    #[arg(long, value_enum, default_value_t = Rep::Schrodinger)]
    rep: Rep,
    /// Compare with the rank-one closed forms.
    #[arg(long)]
    oracle: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Report {
    Weights,
    Maximal,
    Projector,
    Decompose,
}

#[derive(Args, Debug)]
struct VermaArgs {
    /// Highest weight, e.g. "1/2 a1" or "[1, 0]".
    #[arg(long)]
    lambda: String,
    #[arg(long, value_enum, default_value_t = Report::Weights)]
    report: Report,
}

#[derive(Args, Debug)]
struct ProjectorArgs {
    #[arg(long)]
    lambda: String,
    /// Element of B- applied to the highest weight vector, e.g. "f1^2".
    #[arg(long, default_value = "1")]
    vector: String,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Failure modes of a command, each with its exit code.
enum Failure {
    Lib(Error),
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::StepBudgetExceeded(_)
        | Error::HeightCapExceeded { .. }
        | Error::DepthCapExceeded { .. } => EXIT_CAP,
        Error::Parse { .. }
        | Error::InvalidArgument(_)
        | Error::InvalidDatum(_)
        | Error::DimensionMismatch { .. }
        | Error::ForeignGenerator(_)
        | Error::NotInBminus(_)
        | Error::UnpairedGenerators(..)
        | Error::WrongSide
        | Error::InvalidRange(_)
        | Error::NoHopfData(_) => EXIT_USAGE,
        _ => EXIT_CHECK,
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            EXIT_CHECK
        }
    }
}

fn load_datum(cli: &Cli, err: &mut dyn Write) -> Result<RootDatum, Failure> {
    let Some(path) = &cli.config else {
        return Ok(RootDatum::from_type(&cli.datum)?);
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let cfg: DatumConfig = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let d = cfg.build()?;
    let _ = writeln!(
        err,
        "datum {} with Euler matrix {:?}",
        d.name(),
        d.euler_matrix()
    );
    Ok(d)
}

fn emit(cli: &Cli, out: &mut dyn Write, text: String, mut value: Value) -> Result<(), Failure> {
    let res = match cli.format {
        Format::Text => writeln!(out, "{text}"),
        Format::Json => {
            value["schema"] = json!(1);
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&value).expect("serializable")
            )
        }
    };
    res.map_err(|e| Failure::Usage(e.to_string()))
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let datum = load_datum(cli, err)?;
    match &cli.command {
        Command::NormalForm(a) => normal_form(cli, &datum, a, out),
        Command::Pair(a) => pair(cli, &datum, a, out),
        Command::Gram(a) => gram(cli, &datum, a, out),
        Command::Act(a) => act(cli, &datum, a, out),
        Command::Verma(a) => verma(cli, &datum, a, out),
        Command::Projector(a) => projector(cli, &datum, a, out),
        Command::Verify(a) => verify(cli, &datum, a, out),
    }
}

fn has_double_letters(x: &AlgElement) -> bool {
    x.letters().any(|g| {
        matches!(
            g.kind,
            Kind::E | Kind::F | Kind::K | Kind::KInv | Kind::Kp | Kind::KpInv
        )
    })
}

fn normal_form(
    cli: &Cli,
    datum: &RootDatum,
    a: &NormalFormArgs,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let x = parse_element(&a.expr)?;
    let kind = match a.algebra {
        AlgebraChoice::Auto if has_double_letters(&x) => AlgebraKind::Double,
        AlgebraChoice::Auto => AlgebraKind::Heisenberg,
        AlgebraChoice::Double => AlgebraKind::Double,
        AlgebraChoice::Heisenberg => AlgebraKind::Heisenberg,
        AlgebraChoice::UGeq => AlgebraKind::UGeq,
        AlgebraChoice::ULeq => AlgebraKind::ULeq,
        AlgebraChoice::BPlus => AlgebraKind::WPlus,
        AlgebraChoice::BMinus => AlgebraKind::WMinus,
    };
    let pres = Presentation::with_serre(datum, kind)?.with_budget(cli.budget);
    let nf = pres.normal_form(&x)?;
    let text = format_element(&nf);
    emit(
        cli,
        out,
        text.clone(),
        json!({"command": "normal-form", "datum": datum.name(), "algebra": kind.name(), "result": text}),
    )
}

fn height_of(x: &AlgElement) -> u32 {
    x.terms()
        .map(|(w, _)| w.iter().filter(|g| !g.is_torus()).count() as u32)
        .max()
        .unwrap_or(0)
}

fn pair(cli: &Cli, datum: &RootDatum, a: &PairArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let left = parse_element(&a.left)?;
    let right = parse_element(&a.right)?;
    let side = if has_double_letters(&left) || has_double_letters(&right) {
        PairingSide::U
    } else {
        PairingSide::W
    };
    let cap = cli.height_cap.unwrap_or(DEFAULT_HEIGHT_CAP);
    let height = height_of(&left).max(height_of(&right));
    if height > cap {
        return Err(Error::HeightCapExceeded { height, cap }.into());
    }
    let v = PairingEngine::new(datum, side).pair(&left, &right)?;
    let text = v.to_string();
    emit(
        cli,
        out,
        text.clone(),
        json!({"command": "pair", "datum": datum.name(), "side": format!("{side:?}"), "value": text}),
    )
}

fn gram(cli: &Cli, datum: &RootDatum, a: &GramArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let beta = Weight::parse(&a.degree, datum.rank())?
        .as_ints()
        .filter(|b| b.iter().all(|&x| x >= 0))
        .ok_or_else(|| {
            Failure::Usage(format!(
                "degree `{}` is not in the positive root cone",
                a.degree
            ))
        })?;
    let side = match a.side {
        SideChoice::U => PairingSide::U,
        SideChoice::W => PairingSide::W,
    };
    let cap = cli.height_cap.unwrap_or(DEFAULT_HEIGHT_CAP);
    let g = PairingEngine::new(datum, side).gram(&beta, cap)?;
    let rows: Vec<String> = g.rows.iter().map(|w| format_word(w)).collect();
    let cols: Vec<String> = g.cols.iter().map(|w| format_word(w)).collect();
    let matrix: Vec<Vec<String>> = g
        .matrix
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect();
    let radical: Vec<String> = g.radical_basis().iter().map(format_element).collect();
    let right_radical: Vec<String> = g.right_radical_basis().iter().map(format_element).collect();
    let mut text = format!(
        "degree {beta:?}, {} x {} words, rank {}\n",
        rows.len(),
        cols.len(),
        g.rank()
    );
    for (r, row) in rows.iter().zip(&matrix) {
        text.push_str(&format!("{r}: [{}]\n", row.join(", ")));
    }
    text.push_str(&format!(
        "radical (raising): {}\n",
        if radical.is_empty() {
            "0".into()
        } else {
            radical.join("; ")
        }
    ));
    text.push_str(&format!(
        "radical (lowering): {}",
        if right_radical.is_empty() {
            "0".into()
        } else {
            right_radical.join("; ")
        }
    ));
    let value = json!({
        "command": "gram",
        "datum": datum.name(),
        "side": format!("{side:?}"),
        "degree": beta,
        "rows": rows,
        "cols": cols,
        "matrix": matrix,
        "rank": g.rank(),
        "radical": radical,
        "right_radical": right_radical,
    });
    emit(cli, out, text, value)
}

/// `X^m` and `y^n` in rank one, if `actor` and `target` have that shape.
fn as_powers(actor: &AlgElement, target: &AlgElement) -> Option<(ActionFamily, u32, u32)> {
    fn power(x: &AlgElement) -> Option<(Option<Kind>, u32)> {
        let mut terms = x.terms();
        let (w, c) = terms.next()?;
        if terms.next().is_some() || !c.is_one() {
            return None;
        }
        let k = w.first().map(|g| g.kind);
        if w.iter().any(|g| Some(g.kind) != k || g.idx != 0) {
            return None;
        }
        Some((k, w.len() as u32))
    }
    let (ak, m) = power(actor)?;
    let (tk, n) = power(target)?;
    let family = match (ak, tk) {
        (Some(Kind::E) | None, Some(Kind::Ep)) if ak.is_some() || m == 0 => ActionFamily::EOnE,
        (Some(Kind::E), Some(Kind::Fl)) => ActionFamily::EOnF,
        (Some(Kind::F), Some(Kind::Ep)) => ActionFamily::FOnE,
        (Some(Kind::F) | None, Some(Kind::Fl)) => ActionFamily::FOnF,
        _ => return None,
    };
    Some((family, m, n))
}

fn act(cli: &Cli, datum: &RootDatum, a: &ActArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let actor = parse_element(&a.actor)?;
    let target = parse_element(&a.target)?;
    let d = Doubles::new(datum);
    let result = match a.rep {
        Rep::Schrodinger => {
            let plus = target
                .letters()
                .any(|g| matches!(g.kind, Kind::Ep | Kind::Wp | Kind::WpInv));
            let side = if plus {
                TargetSide::Plus
            } else {
                TargetSide::Minus
            };
            d.schrodinger_act(&actor, &target, side)?
        }
        Rep::Diagonal => d.double_act_on_heisenberg(&actor, &d.heis_from_element(&target)?)?,
    };
    let text = format_element(&result);
    let mut value = json!({"command": "act", "datum": datum.name(), "rep": format!("{:?}", a.rep).to_lowercase(), "result": text});
    let mut lines = vec![text.clone()];
    let mut mismatch = None;
    if a.oracle {
        let verdict = match (datum.rank(), a.rep, as_powers(&actor, &target)) {
            (1, Rep::Schrodinger, Some((family, m, n))) => {
                match closed_form_action_sl2(family, m, n) {
                    Ok((c, p)) => {
                        let tk = target.letters().next().expect("nonempty power").kind;
                        let expect = AlgElement::term(c, vec![Gen::new(tk, 0); p as usize]);
                        if expect == result {
                            "MATCH".to_string()
                        } else {
                            mismatch = Some(format_element(&expect));
                            "MISMATCH".to_string()
                        }
                    }
                    Err(Error::InvalidRange(_)) => "not applicable (m > n)".to_string(),
                    Err(e) => return Err(e.into()),
                }
            }
            _ => "not applicable".to_string(),
        };
        lines.push(format!("oracle: {verdict}"));
        value["oracle"] = json!(verdict);
        if let Some(expect) = &mismatch {
            lines.push(format!("closed form: {expect}"));
            value["closed_form"] = json!(expect);
        }
    }
    emit(cli, out, lines.join("\n"), value)?;
    match mismatch {
        Some(_) => Err(Failure::Check(
            "iterated action differs from the closed form".into(),
        )),
        None => Ok(()),
    }
}

fn build_verma(
    cli: &Cli,
    datum: &RootDatum,
    lambda: &str,
) -> Result<(Weight, WeightModule), Failure> {
    let lam = Weight::parse(lambda, datum.rank())?;
    let m = WeightModule::tensor_bminus_capped(
        datum,
        std::slice::from_ref(&lam),
        cli.depth,
        DEFAULT_DEPTH_CAP,
    )?;
    Ok((lam, m))
}

fn verma(cli: &Cli, datum: &RootDatum, a: &VermaArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let (lam, m) = build_verma(cli, datum, &a.lambda)?;
    let mut value = json!({
        "command": "verma",
        "datum": datum.name(),
        "lambda": lam.to_string(),
        "depth": cli.depth,
        "report": format!("{:?}", a.report).to_lowercase(),
    });
    let mut lines = vec![format!(
        "H({lam}) truncated at depth {}, dimension {}",
        cli.depth,
        m.dim()
    )];
    match a.report {
        Report::Weights => {
            let mut spaces = Vec::new();
            for (mu, idx) in m.weight_spaces().iter().rev() {
                lines.push(format!("{mu}: {}", idx.len()));
                spaces.push(json!({"weight": mu.to_string(), "dim": idx.len()}));
            }
            value["weights"] = json!(spaces);
        }
        Report::Maximal => {
            let mut found = Vec::new();
            for (mu, vs) in m.all_maximal_vectors()? {
                let texts: Vec<String> = vs.iter().map(|v| m.format_vector(v)).collect();
                lines.push(format!("{mu}: {}", texts.join("; ")));
                found.push(json!({"weight": mu.to_string(), "basis": texts}));
            }
            value["maximal"] = json!(found);
        }
        Report::Projector => {
            let mut blocks = Vec::new();
            for (mu, idx) in m.weight_spaces().iter().rev() {
                let mat = m.matrix_of(idx, idx, |v| m.projector(v))?;
                let rows: Vec<Vec<String>> = mat
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(|c| c.to_string()).collect())
                    .collect();
                let labels: Vec<String> = idx.iter().map(|&k| m.basis()[k].label.clone()).collect();
                lines.push(format!("{mu} [{}]: {:?}", labels.join(", "), rows));
                blocks.push(json!({"weight": mu.to_string(), "basis": labels, "matrix": rows}));
            }
            value["projector"] = json!(blocks);
        }
        Report::Decompose => {
            let rep = m.decompose()?;
            for (mu, k) in &rep.summands {
                lines.push(format!("summand {mu} x{k}"));
            }
            lines.push(format!(
                "semisimple on {} interior weights: {}",
                rep.interior(),
                rep.semisimple()
            ));
            value["summands"] = json!(rep
                .summands
                .iter()
                .map(|(w, k)| json!({"weight": w.to_string(), "multiplicity": k}))
                .collect::<Vec<_>>());
            value["semisimple"] = json!(rep.semisimple());
        }
    }
    emit(cli, out, lines.join("\n"), value)
}

fn projector(
    cli: &Cli,
    datum: &RootDatum,
    a: &ProjectorArgs,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let (lam, m) = build_verma(cli, datum, &a.lambda)?;
    let x = parse_element(&a.vector)?;
    let v = m.act(&x, &ModuleVector::basis(0))?;
    let p = m.projector(&v)?;
    let maximal = (0..datum.rank())
        .map(|i| {
            m.act_gen(Gen::new(Kind::Ep, i as u8), &p)
                .map(|y| y.is_zero())
        })
        .collect::<Result<Vec<bool>, Error>>()?
        .into_iter()
        .all(|b| b);
    let mut value = json!({
        "command": "projector",
        "datum": datum.name(),
        "lambda": lam.to_string(),
        "input": m.format_vector(&v),
        "result": m.format_vector(&p),
        "maximal": maximal,
    });
    let mut lines = vec![
        format!("P({}) = {}", m.format_vector(&v), m.format_vector(&p)),
        format!("maximal: {maximal}"),
    ];
    if datum.rank() == 1 {
        let agree = m.projector_sl2(&v)? == p;
        lines.push(format!("closed form agrees: {agree}"));
        value["closed_form_agrees"] = json!(agree);
        if !agree {
            emit(cli, out, lines.join("\n"), value)?;
            return Err(Failure::Check(
                "projector differs from its closed form".into(),
            ));
        }
    }
    emit(cli, out, lines.join("\n"), value)
}

fn verify(
    cli: &Cli,
    datum: &RootDatum,
    a: &VerifyArgs,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let suite: Suite = a
        .suite
        .parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let opts = VerifyOptions {
        depth: cli.depth,
        height_cap: cli.height_cap.unwrap_or(3),
        seed: a.seed,
    };
    let report = run_suite(datum, suite, &opts)?;
    let value = json!({
        "command": "verify",
        "suite": suite.name(),
        "datum": report.datum,
        "passed": report.passed(),
        "checks": report.checks,
    });
    emit(cli, out, report.table().trim_end().to_string(), value)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} failed checks",
            report.failures().count()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut all = vec!["qdouble"];
        all.extend_from_slice(args);
        let code = run(all, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn normal_forms() {
        assert_eq!(
            call(&["normal-form", "e1' f1"]),
            (0, "r^-1*s f1 e1' + 1\n".into(), String::new())
        );
        assert_eq!(call(&["normal-form", "1"]).1, "1\n");
        assert_eq!(
            call(&["normal-form", "E1 F1 - F1 E1"]).1,
            "(K1 - K1')/(r - s)\n"
        );
        assert_eq!(call(&["normal-form", "e1' +"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["normal-form", "e1' f1", "--budget", "0"]).0,
            EXIT_CAP
        );
    }

    #[test]
    fn json_carries_schema() {
        let (code, out, _) = call(&[
            "--format", "json", "pair", "--left", "e1' e1'", "--right", "f1 f1",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["value"], "1 + r^-1*s");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["verify", "--suite", "bogus"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["--depth", "11", "verma", "--lambda", "0"]).0,
            EXIT_CAP
        );
        assert_eq!(
            call(&["--height-cap", "2", "gram", "--degree", "3a1"]).0,
            EXIT_CAP
        );
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn act_with_oracle() {
        let (code, out, _) = call(&["act", "--actor", "E^2", "--target", "f^3", "--oracle"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("oracle: MATCH"));
        let (_, out, _) = call(&["act", "--actor", "E^3", "--target", "e'", "--oracle"]);
        assert!(out.contains("not applicable"));
    }
}
