mod json;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hispec::hodge::{
    monotonicity_scan, prop1_check, prop2_witness, theorem1_check, theorem2_check, theorem3_witness, Analysis,
    CheckReport, GeneratorTable, Mode, Setup,
};
use hispec::localalg::{condition_a, tjurina_number, MilnorAlgebra};
use hispec::newton::{convenientize, is_nondegenerate, NewtonPolyhedron, Verdict};
use hispec::polycore::{infer_variables, parse_polynomial};
use hispec::{Error, Polynomial, Rational, Spectrum, WeightSystem};

use crate::json::{rational, spectrum as spectrum_json};

#[derive(Parser)]
#[command(name = "hispec", version, about = "Exact invariants of isolated hypersurface singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Polynomial, e.g. "x^5+y^4+x^3*y^2".
    #[arg(conflicts_with = "file")]
    poly: Option<String>,
    /// Read the polynomial from a file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Variable names in order (default: sorted identifiers in the input).
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Weights w1,...,wn for the semi-weighted-homogeneous branch.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<String>>,
    /// Fixed truncation degree for the local algebra.
    #[arg(long)]
    trunc: Option<u32>,
    /// Fail with exit code 3 if V_HI needs operator products longer than this.
    #[arg(long)]
    max_p: Option<usize>,
    #[arg(long)]
    json: bool,
    /// Seed for randomized sub-procedures.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print timings to stderr.
    #[arg(long)]
    time: bool,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Thm1,
    Thm2,
    Thm3,
    Prop1,
    Prop2,
}

#[derive(Subcommand)]
enum Command {
    /// Steenbrink spectrum.
    Spectrum(Common),
    /// Hodge-ideal spectrum.
    HiSpectrum(Common),
    /// Tjurina subspectrum.
    TjSpectrum(Common),
    /// Milnor number and a monomial basis of the Milnor algebra.
    Milnor(Common),
    /// Tjurina number.
    Tjurina(Common),
    /// Newton polyhedron.
    Newton(Common),
    /// Non-degeneracy of the Newton boundary.
    Nondegenerate(Common),
    /// Add axis monomials to make f convenient.
    Convenientize {
        #[command(flatten)]
        common: Common,
        /// Lower bound for the added exponents.
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// gamma_f and epsilon_f.
    Epsilon(Common),
    /// Run one theorem or proposition check.
    Check {
        which: Which,
        #[command(flatten)]
        common: Common,
    },
    /// Look for alpha < alpha' with I_p(alpha' Z) not inside I_p(alpha Z) mod (df).
    ScanMonotonicity {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        p: usize,
        /// Window lo,hi restricting alpha to (lo, hi].
        #[arg(long, value_delimiter = ',', num_args = 2)]
        window: Option<Vec<String>>,
    },
    /// Full pipeline.
    Report(Common),
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonIsolated { .. }
            | Error::Unsupported(_)
            | Error::Degenerate(_)
            | Error::ZeroJacobian
            | Error::Inconsistent(_) => 2,
            Error::CapExceeded(_) => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

struct Input {
    text: String,
    vars: Vec<String>,
    f: Polynomial,
    weights: Option<WeightSystem>,
}

impl Input {
    fn load(c: &Common) -> CliResult<Self> {
        let text = match (&c.poly, &c.file) {
            (Some(p), None) => p.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?
                .trim()
                .to_string(),
            _ => return Err(usage("give the polynomial as an argument or with --file")),
        };
        let vars = match &c.vars {
            Some(v) => v.iter().map(|s| s.trim().to_string()).collect(),
            None => infer_variables(&text).map_err(Error::from)?,
        };
        let f = parse_polynomial(&text, &vars).map_err(Error::from)?;
        let weights = match &c.weights {
            Some(ws) => {
                let parsed: Vec<Rational> = ws
                    .iter()
                    .map(|w| w.parse::<Rational>().map_err(|e| usage(e.to_string())))
                    .collect::<CliResult<_>>()?;
                Some(WeightSystem::new(parsed)?)
            }
            None => None,
        };
        Ok(Input { text, vars, f, weights })
    }

    fn name(&self, f: &Polynomial) -> String {
        f.to_string_with(&self.vars)
    }
}

struct Output {
    json: bool,
    text: String,
    value: serde_json::Value,
}

impl Output {
    fn new(c: &Common, input: &Input) -> Self {
        let mut value = serde_json::Map::new();
        value.insert("input".into(), input.text.clone().into());
        value.insert("variables".into(), input.vars.clone().into());
        Output {
            json: c.json,
            text: String::new(),
            value: serde_json::Value::Object(value),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn set(&mut self, key: &str, v: impl Into<serde_json::Value>) {
        self.value.as_object_mut().unwrap().insert(key.into(), v.into());
    }

    fn render(&self) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(&self.value).unwrap();
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

struct Timer {
    on: bool,
    start: Instant,
}

impl Timer {
    fn lap(&self, what: &str) {
        if self.on {
            eprintln!("[time] {what}: {:.3}s", self.start.elapsed().as_secs_f64());
        }
    }
}

fn setup(input: &Input, c: &Common) -> CliResult<Setup> {
    Ok(Setup::with_truncation(&input.f, input.weights.as_ref(), c.trunc)?)
}

fn analysis(input: &Input, c: &Common, timer: &Timer) -> CliResult<Analysis> {
    let s = setup(input, c)?;
    timer.lap("milnor algebra");
    let an = Analysis::from_setup(s)?;
    timer.lap("spectra");
    if let Some(cap) = c.max_p {
        if an.hodge.p_max > cap {
            return Err(Error::CapExceeded(format!("V_HI needs p = {} > --max-p {cap}", an.hodge.p_max)).into());
        }
    }
    Ok(an)
}

fn spectrum_line(name: &str, sp: &Spectrum) -> String {
    format!("{name}: {sp} (total {})", sp.total())
}

fn check_json(r: &CheckReport) -> serde_json::Value {
    let notes: BTreeMap<&str, &str> = r.notes.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
    serde_json::json!({
        "applicable": r.applicable,
        "holds": r.holds,
        "notes": notes,
    })
}

fn check_text(r: &CheckReport) -> String {
    let verdict = match r.holds {
        None => "not applicable".to_string(),
        Some(true) => "holds".to_string(),
        Some(false) => "FAILS".to_string(),
    };
    let mut s = format!("{}: {verdict}", r.name);
    for (k, v) in &r.notes {
        let _ = write!(s, "; {k} = {v}");
    }
    s
}

fn run_check(which: Which, an: &Analysis) -> CliResult<CheckReport> {
    Ok(match which {
        Which::Thm1 => theorem1_check(an),
        Which::Thm2 => theorem2_check(an),
        Which::Thm3 => theorem3_witness(an).1,
        Which::Prop1 => prop1_check(an)?,
        Which::Prop2 => prop2_witness(an)?.1,
    })
}

fn parse_rational(s: &str) -> CliResult<Rational> {
    s.parse::<Rational>().map_err(|e| usage(e.to_string()))
}

fn dispatch(cmd: &Command) -> CliResult<(Common, String)> {
    let common = match cmd {
        Command::Spectrum(c)
        | Command::HiSpectrum(c)
        | Command::TjSpectrum(c)
        | Command::Milnor(c)
        | Command::Tjurina(c)
        | Command::Newton(c)
        | Command::Nondegenerate(c)
        | Command::Epsilon(c)
        | Command::Report(c) => c,
        Command::Convenientize { common, .. }
        | Command::Check { common, .. }
        | Command::ScanMonotonicity { common, .. } => common,
    };
    let timer = Timer {
        on: common.time,
        start: Instant::now(),
    };
    let input = Input::load(common)?;
    let mut out = Output::new(common, &input);
    match cmd {
        Command::Spectrum(c) => {
            let s = setup(&input, c)?;
            let sp = hispec::localalg::steenbrink_spectrum_of(&s.ma, &s.cond)?;
            out.line(spectrum_line("spectrum", &sp));
            out.set("mu", sp.total());
            out.set("spectrum", spectrum_json(&sp));
        }
        Command::HiSpectrum(c) | Command::TjSpectrum(c) => {
            let s = setup(&input, c)?;
            let table = GeneratorTable::new(&s);
            timer.lap("generators");
            let (key, mode) = match cmd {
                Command::HiSpectrum(_) => ("hi_spectrum", Mode::Jacobian),
                _ => ("tj_spectrum", Mode::JacobianAndF),
            };
            let v = hispec::hodge::v_hi_filtration_with(&s, &table, mode)?;
            if let Some(cap) = c.max_p {
                if v.p_max > cap {
                    return Err(Error::CapExceeded(format!("V_HI needs p = {} > --max-p {cap}", v.p_max)).into());
                }
            }
            out.line(spectrum_line(key, &v.graded));
            out.line(format!("p_max: {}", v.p_max));
            out.set(key, spectrum_json(&v.graded));
            out.set("p_max", v.p_max);
        }
        Command::Milnor(c) => {
            let ma = MilnorAlgebra::build(&input.f, None, c.trunc)?;
            let basis: Vec<String> = ma
                .basis_monomials()
                .into_iter()
                .map(|m| input.name(&Polynomial::monomial(m)))
                .collect();
            out.line(format!("mu: {}", ma.mu()));
            out.line(format!("truncation: {}", ma.truncation()));
            out.line(format!("basis: {}", basis.join(", ")));
            out.set("mu", ma.mu());
            out.set("truncation", ma.truncation());
            out.set("basis", basis);
        }
        Command::Tjurina(c) => {
            let ma = MilnorAlgebra::build(&input.f, None, c.trunc)?;
            let tau = tjurina_number(&ma)?;
            out.line(format!("mu: {}", ma.mu()));
            out.line(format!("tau: {tau}"));
            out.set("mu", ma.mu());
            out.set("tau", tau);
        }
        Command::Newton(_) => {
            let np = NewtonPolyhedron::new(&input.f)?;
            let verts: Vec<Vec<u32>> = np.vertices().iter().map(|m| m.exps().to_vec()).collect();
            out.line(format!("vertices: {verts:?}"));
            out.line(format!("convenient: {}", np.is_convenient()));
            let mut facets = Vec::new();
            for fc in np.facets() {
                let coeffs: Vec<String> = fc.coeffs.iter().map(|c| c.to_string()).collect();
                out.line(format!("facet: [{}] . nu >= {}", coeffs.join(", "), fc.constant));
                facets.push(serde_json::json!({
                    "coeffs": fc.coeffs.iter().map(rational).collect::<Vec<_>>(),
                    "constant": rational(&fc.constant),
                }));
            }
            let compact: Vec<Vec<Vec<u32>>> = np
                .compact_faces()
                .iter()
                .map(|f| f.points.iter().map(|m| m.exps().to_vec()).collect())
                .collect();
            out.line(format!("compact faces: {}", compact.len()));
            out.set("vertices", serde_json::json!(verts));
            out.set("convenient", np.is_convenient());
            out.set("facets", facets);
            out.set("compact_faces", serde_json::json!(compact));
        }
        Command::Nondegenerate(_) => match is_nondegenerate(&input.f) {
            Verdict::Yes => {
                out.line("non-degenerate: yes");
                out.set("nondegenerate", "yes");
            }
            Verdict::No(faces) => {
                out.line("non-degenerate: no");
                let np = NewtonPolyhedron::new(&input.f)?;
                let mut items = Vec::new();
                for face in &faces {
                    let pts: Vec<Vec<u32>> = face.points.iter().map(|m| m.exps().to_vec()).collect();
                    let verts: Vec<Vec<u32>> = face
                        .points
                        .iter()
                        .filter(|m| np.vertices().contains(m))
                        .map(|m| m.exps().to_vec())
                        .collect();
                    out.line(format!("degenerate face: conv{verts:?}, support points {pts:?}"));
                    items.push(serde_json::json!({"vertices": verts, "points": pts}));
                }
                out.set("nondegenerate", "no");
                out.set("degenerate_faces", items);
            }
            Verdict::Unknown(face, why) => {
                return Err(Error::CapExceeded(format!(
                    "face {:?}: {why}",
                    face.points.iter().map(|m| m.exps().to_vec()).collect::<Vec<_>>()
                ))
                .into())
            }
        },
        Command::Convenientize { m, .. } => {
            let conv = convenientize(&input.f, *m)?;
            let g = conv.build(&Rational::one());
            out.line(format!("added: {:?}", conv.added));
            out.line(format!("result: {}", input.name(&g)));
            out.set("added", serde_json::json!(conv.added));
            out.set("result", input.name(&g));
        }
        Command::Epsilon(c) => {
            let s = setup(&input, c)?;
            let sp = hispec::localalg::steenbrink_spectrum_of(&s.ma, &s.cond)?;
            let e = hispec::hodge::epsilon_of(&s, &sp)?;
            out.line(format!("gamma_f: {}", e.gamma));
            out.line(format!("epsilon_f: {}", e.epsilon));
            out.line(format!("alpha_max: {}", e.alpha_max));
            if let Some(g) = &e.gamma_newton {
                out.line(format!("gamma_f (Newton order): {g}"));
            }
            out.set("gamma_f", rational(&e.gamma));
            out.set("epsilon_f", rational(&e.epsilon));
            out.set("alpha_max", rational(&e.alpha_max));
        }
        Command::Check { which, common } => {
            let an = analysis(&input, common, &timer)?;
            let r = run_check(*which, &an)?;
            out.line(check_text(&r));
            out.set("check", r.name);
            out.set("result", check_json(&r));
        }
        Command::ScanMonotonicity { common, p, window } => {
            let window = match window {
                Some(w) => Some((parse_rational(&w[0])?, parse_rational(&w[1])?)),
                None => None,
            };
            let s = setup(&input, common)?;
            let table = GeneratorTable::new(&s);
            timer.lap("generators");
            let found = monotonicity_scan(&s, &table, *p, window)?;
            out.line(format!("violations: {}", found.len()));
            let mut items = Vec::new();
            for v in &found {
                out.line(format!(
                    "I_{p}({} Z) not inside I_{p}({} Z): operators {:?} on {}; witness {}",
                    v.alpha_hi,
                    v.alpha_lo,
                    v.key.seq,
                    input.name(&Polynomial::monomial(v.key.nu.clone())),
                    input.name(&v.witness)
                ));
                items.push(serde_json::json!({
                    "alpha_lo": rational(&v.alpha_lo),
                    "alpha_hi": rational(&v.alpha_hi),
                    "operators": v.key.seq,
                    "monomial": v.key.nu.exps(),
                    "witness": input.name(&v.witness),
                }));
            }
            out.set("p", *p);
            out.set("violations", items);
        }
        Command::Report(c) => {
            let an = analysis(&input, c, &timer)?;
            report(&an, c, &mut out)?;
        }
    }
    timer.lap("total");
    Ok((common.clone(), out.render()))
}

fn report(an: &Analysis, c: &Common, out: &mut Output) -> CliResult<()> {
    let e = &an.epsilon;
    let cond = match condition_a(an.setup.f(), an.setup.cond.weights())? {
        hispec::localalg::ConditionA::Swh(_) => "semi-weighted-homogeneous",
        hispec::localalg::ConditionA::Nondegenerate => "non-degenerate",
        hispec::localalg::ConditionA::Both(_) => "semi-weighted-homogeneous and non-degenerate",
    };
    out.line(format!("condition (A): {cond}"));
    out.line(format!("mu: {}", an.mu()));
    out.line(format!("tau: {}", an.tau));
    out.line(spectrum_line("spectrum", &an.steenbrink));
    out.line(spectrum_line("hi_spectrum", an.hi_spectrum()));
    out.line(spectrum_line("tj_spectrum", an.tj_spectrum()));
    out.line(format!("gamma_f: {}", e.gamma));
    out.line(format!("epsilon_f: {}", e.epsilon));
    out.line(format!(
        "gamma_f <= (n+1)/3: {}",
        e.within_observed_bound(an.setup.n())
    ));
    let checks = [
        theorem1_check(an),
        theorem2_check(an),
        theorem3_witness(an).1,
        prop1_check(an)?,
        prop2_witness(an)?.1,
    ];
    let mut cj = serde_json::Map::new();
    for r in &checks {
        out.line(check_text(r));
        cj.insert(r.name.into(), check_json(r));
    }
    out.set("condition_a", cond);
    out.set("mu", an.mu());
    out.set("tau", an.tau);
    out.set("spectrum", spectrum_json(&an.steenbrink));
    out.set("hi_spectrum", spectrum_json(an.hi_spectrum()));
    out.set("tj_spectrum", spectrum_json(an.tj_spectrum()));
    out.set("gamma_f", rational(&e.gamma));
    out.set("epsilon_f", rational(&e.epsilon));
    out.set("checks", serde_json::Value::Object(cj));
    out.set(
        "caps",
        serde_json::json!({
            "truncation": an.setup.ma.truncation(),
            "k_j": an.setup.ma.k_j(),
            "p_max": an.hodge.p_max,
            "max_p": c.max_p,
            "generators": an.table.len(),
            "seed": c.seed,
        }),
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match dispatch(&cli.command) {
        Ok((common, text)) => match &common.out {
            Some(path) => match std::fs::write(path, text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    ExitCode::from(1)
                }
            },
            None => {
                print!("{text}");
                ExitCode::SUCCESS
            }
        },
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
