mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use qutrit_braids::braid::AncillaTarget;
use qutrit_braids::presentation::DEFAULT_COSET_LIMIT;
use qutrit_braids::{
    closure, BraidSimulator, BraidWord, Catalog, ClosureMode, ClosureOptions, CyclotomicField, CyclotomicNumber,
    Error, ExactMatrix, Execution, FusionSpace, GroupPresentation, StateVector, Theory, Word,
};
use serde::Serialize;
use serde_json::{json, Value};

use verify::Suite;

/// Exact SU(2)_4 braid matrices and the qutrit gate groups they generate.
#[derive(Parser, Debug)]
#[command(name = "qbraid", version)]
struct Cli {
    /// Order n of the cyclotomic field Q(zeta_n); must be a multiple of 72.
    #[arg(long, global = true, env = "QBRAID_FIELD_ORDER", default_value_t = 72)]
    order: u32,

    #[command(flatten)]
    output: OutputArgs,

    /// Run every kernel on the current thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Emit human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Leave out the `timestamp` field so identical runs give identical bytes.
    #[arg(long, global = true)]
    no_timestamp: bool,

    /// Add floating-point approximations next to exact values.
    #[arg(long, global = true)]
    floats: bool,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the built-in identity, TQFT, presentation and closure checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Negate entry (0,0) of this catalog matrix before checking.
        #[arg(long, value_name = "NAME")]
        corrupt: Option<String>,
    },
    /// Close a set of catalog generators under multiplication.
    Closure {
        /// Comma-separated catalog names, e.g. G1t,G2t,FUMt.
        #[arg(long, default_value = "G1t,G2t,FUMt")]
        gens: String,
        /// `exact` or `pu` (modulo the scalar centre).
        #[arg(long, default_value = "exact")]
        mode: ClosureMode,
        #[arg(long, default_value_t = qutrit_braids::groups::DEFAULT_CAP)]
        cap: usize,
        /// Print only order and fingerprint, not every element.
        #[arg(long)]
        summary: bool,
    },
    /// Multiply out a braid word on a fusion space.
    Braid {
        /// Leaf charges, e.g. 2,2,1,1.
        #[arg(long, value_delimiter = ',', required = true)]
        leaves: Vec<u8>,
        #[arg(long, default_value_t = 0)]
        total: u8,
        /// Letters `s<i>:<+-1>` separated by commas; applied left to right.
        #[arg(long, allow_hyphen_values = true)]
        word: BraidWord,
        /// Input state: `e<k>` for the k-th basis vector or `;`-separated exact entries.
        #[arg(long)]
        state: Option<String>,
    },
    /// Search diagonal braids for the |+> or |-> ancilla after the 2211 middle braid.
    Ancilla {
        #[arg(long, default_value = "plus")]
        target: AncillaTarget,
    },
    /// Todd-Coxeter coset enumeration.
    CosetEnum {
        /// Presentation file with `gens:` and `rels:` sections; defaults to the built-in 648 presentation.
        #[arg(long, value_name = "FILE")]
        pres: Option<PathBuf>,
        /// Subgroup generator words, e.g. `--subgroup x6 --subgroup x18`.
        #[arg(long)]
        subgroup: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_COSET_LIMIT)]
        limit: usize,
    },
    /// F-, R-symbols, twists and dimensions of SU(2)_4.
    DumpTqft {
        /// Also run the pentagon/hexagon/ribbon checks.
        #[arg(long)]
        check: bool,
    },
    /// All named generators.
    Catalog {
        /// Restrict to these comma-separated names.
        #[arg(long)]
        names: Option<String>,
    },
}

/// What a command produced: JSON payload, text rendering and exit status.
struct Output {
    value: Value,
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => match emit(&cli, out.value, &out.text) {
            Ok(()) if out.ok => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, value: Value, text: &str) -> std::io::Result<()> {
    let rendered = if cli.output.pretty {
        text.to_string()
    } else {
        let mut envelope = serde_json::Map::new();
        envelope.insert("command".into(), json!(command_name(&cli.command)));
        envelope.insert("field_order".into(), json!(cli.order));
        if !cli.output.no_timestamp {
            let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
            envelope.insert("timestamp".into(), json!(secs));
        }
        envelope.insert("result".into(), value);
        let mut s = serde_json::to_string_pretty(&Value::Object(envelope)).map_err(std::io::Error::other)?;
        s.push('\n');
        s
    };
    match &cli.output.out {
        Some(path) => std::fs::write(path, rendered),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Closure { .. } => "closure",
        Command::Braid { .. } => "braid",
        Command::Ancilla { .. } => "ancilla",
        Command::CosetEnum { .. } => "coset-enum",
        Command::DumpTqft { .. } => "dump-tqft",
        Command::Catalog { .. } => "catalog",
    }
}

fn run(cli: &Cli) -> Result<Output, Box<dyn std::error::Error>> {
    let field = CyclotomicField::new(cli.order)?;
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    let floats = cli.output.floats;
    match &cli.command {
        Command::Verify { suite, corrupt } => {
            let mut catalog = Catalog::new(&field)?;
            if let Some(name) = corrupt {
                let m = catalog.get(name)?;
                let mut entries = m.entries().to_vec();
                entries[0] = -&entries[0];
                let bad = ExactMatrix::new(m.dim(), entries)?;
                catalog = catalog.with_override(name, bad)?;
            }
            let report = verify::run(*suite, &catalog, exec);
            let mut text = String::new();
            for c in &report.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                write!(text, "{mark}  {}/{}", c.suite, c.name)?;
                if let Some(d) = &c.detail {
                    write!(text, "  ({d})")?;
                }
                text.push('\n');
            }
            writeln!(text, "{} of {} checks passed", report.total - report.failed.len(), report.total)?;
            Ok(Output { ok: report.passed, value: serde_json::to_value(&report)?, text })
        }
        Command::Closure { gens, mode, cap, summary } => {
            let catalog = Catalog::new(&field)?;
            let g = closure(&catalog.resolve(gens)?, ClosureOptions::default().mode(*mode).cap(*cap).exec(exec))?;
            let fp = g.fingerprint();
            let mut text = format!("<{gens}> mode {mode}: order {}\n", g.order());
            writeln!(text, "centre order {}, {} classes, derived order {}", fp.center_order, fp.class_count, fp.derived_order)?;
            writeln!(text, "element orders {:?}", fp.order_histogram)?;
            let value = if *summary {
                json!({ "order": g.order(), "mode": g.mode(), "generators": g.generator_names(), "fingerprint": fp })
            } else {
                let mut v = serde_json::to_value(g.export())?;
                if floats {
                    let approx: Vec<Value> = g.elements().iter().map(|m| json!(m.to_complex_rows())).collect();
                    v["elements_f64"] = Value::Array(approx);
                }
                v
            };
            Ok(Output { ok: true, value, text })
        }
        Command::Braid { leaves, total, word, state } => {
            let sim = BraidSimulator::new(Theory::new(&field)?);
            let space = FusionSpace::from_values(leaves, *total)?;
            let (matrix, out_space) = sim.word_matrix(&space, word)?;
            let mut value = json!({
                "space": space_json(&space),
                "word": word,
                "matrix": matrix,
                "leaf_out": space_json(&out_space),
            });
            let mut text = format!("{space} --[{word}]--> {out_space}\n");
            writeln!(text, "{}", notation_rows(&matrix))?;
            if floats {
                value["matrix_f64"] = json!(matrix.to_complex_rows());
            }
            if let Some(state_text) = state {
                let v = parse_state(&field, state_text, space.dim())?;
                let (out, _) = sim.apply_word(&space, word, &v)?;
                writeln!(text, "state in  {}", notation_vec(&v))?;
                writeln!(text, "state out {}", notation_vec(&out))?;
                value["state_in"] = json!(v);
                value["state_out"] = json!(out);
                value["state_out_notation"] = json!(out.entries().iter().map(|c| c.phase_notation()).collect::<Vec<_>>());
            }
            Ok(Output { ok: true, value, text })
        }
        Command::Ancilla { target } => {
            let sim = BraidSimulator::new(Theory::new(&field)?);
            let o = sim.ancilla_protocol(*target)?;
            let mut text = format!("target {}, start |{}> in (2,2,1,1 -> 0)\n", format!("{:?}", o.target).to_lowercase(), o.start_label);
            writeln!(text, "after middle braid ({:?}): {}", o.middle_leaves, notation_vec(&o.after_middle_braid))?;
            writeln!(text, "equal moduli: {}", o.equal_moduli)?;
            let phases: Vec<&str> = o.reachable_relative_phases.iter().map(|p| p.notation.as_str()).collect();
            writeln!(text, "reachable relative phases: {}", phases.join(", "))?;
            writeln!(text, "certified: {} via [{}], state {} in {:?}", o.certified, o.word, notation_vec(&o.state), o.leaves)?;
            let mut value = serde_json::to_value(&o)?;
            let moduli: Vec<String> = o.after_middle_braid.entries().iter().map(|c| c.abs_squared().phase_notation()).collect();
            value["moduli_squared"] = json!(moduli);
            value["state_notation"] = json!(o.state.entries().iter().map(|c| c.phase_notation()).collect::<Vec<_>>());
            Ok(Output { ok: o.certified, value, text })
        }
        Command::CosetEnum { pres, subgroup, limit } => {
            let p = match pres {
                Some(path) => std::fs::read_to_string(path)?.parse::<GroupPresentation>()?,
                None => GroupPresentation::qutrit_648(),
            };
            let h: Vec<Word> = subgroup.iter().map(|w| p.parse_word(w)).collect::<Result<_, _>>()?;
            let r = p.todd_coxeter(&h, *limit)?;
            let text = format!("{p}index {} ({} cosets defined, peak {})\n", r.index, r.defined, r.max_active);
            let value = json!({
                "generators": p.generators(),
                "relators": p.relators().iter().map(|w| w.display(p.generators())).collect::<Vec<_>>(),
                "subgroup": h.iter().map(|w| w.display(p.generators())).collect::<Vec<_>>(),
                "index": r.index,
                "defined": r.defined,
                "max_active": r.max_active,
            });
            Ok(Output { ok: true, value, text })
        }
        Command::DumpTqft { check } => {
            let theory = Theory::new(&field)?;
            let dump = theory.dump();
            let mut value = serde_json::to_value(&dump)?;
            let mut text = format!("SU(2)_{} over Q(zeta_{})\n", dump.level, dump.field_order);
            writeln!(text, "A = {}, d = {}", dump.kauffman_variable.notation, dump.loop_value.notation)?;
            for (j, (d, t)) in dump.quantum_dimensions.iter().zip(&dump.twists).enumerate() {
                writeln!(text, "j={j}: d = {}, theta = {}", d.notation, t.notation)?;
            }
            for r in &dump.r_symbols {
                writeln!(text, "R{:?} = {}", r.labels, r.value.notation)?;
            }
            for f in &dump.f_symbols {
                writeln!(text, "F{:?} = {}", f.labels, f.value.notation)?;
            }
            if *check {
                let report = theory.consistency_check(exec)?;
                writeln!(text, "{report:?}")?;
                value["consistency"] = serde_json::to_value(report)?;
            }
            Ok(Output { ok: true, value, text })
        }
        Command::Catalog { names } => {
            let catalog = Catalog::new(&field)?;
            let selected: Vec<(String, ExactMatrix)> = match names {
                Some(n) => catalog.resolve(n)?,
                None => catalog.iter().map(|(n, m)| (n.to_string(), m.clone())).collect(),
            };
            let mut text = String::new();
            let mut entries = Vec::new();
            for (name, m) in &selected {
                writeln!(text, "{name} =\n{}\n", notation_rows(m))?;
                let mut e = json!({
                    "name": name,
                    "notation": m.rows().iter().map(|r| r.iter().map(|c| c.phase_notation()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "latex": m.to_latex(),
                    "matrix": m,
                });
                if floats {
                    e["matrix_f64"] = json!(m.to_complex_rows());
                }
                entries.push(e);
            }
            Ok(Output { ok: true, value: Value::Array(entries), text })
        }
    }
}

#[derive(Serialize)]
struct SpaceJson {
    leaves: Vec<u8>,
    total: u8,
    basis: Vec<Vec<u8>>,
}

fn space_json(s: &FusionSpace) -> SpaceJson {
    SpaceJson { leaves: s.leaves().iter().map(|c| c.value()).collect(), total: s.total().value(), basis: s.basis().to_vec() }
}

fn parse_state(field: &CyclotomicField, text: &str, dim: usize) -> Result<StateVector, Error> {
    if let Some(k) = text.strip_prefix('e') {
        if let Ok(k) = k.parse::<usize>() {
            if k >= dim {
                return Err(Error::Parse(format!("basis index {k} out of range for dimension {dim}")));
            }
            return Ok(StateVector::basis(field, dim, k));
        }
    }
    let entries = text
        .split(';')
        .map(|t| t.parse::<CyclotomicNumber>().and_then(|c| embed(field, &c)))
        .collect::<Result<Vec<_>, _>>()?;
    StateVector::new(entries)
}

/// Lifts a value written over a subfield, e.g. `1/2*zeta(4)^1`, into `field`.
fn embed(field: &CyclotomicField, c: &CyclotomicNumber) -> Result<CyclotomicNumber, Error> {
    if c.order() == field.order() {
        return Ok(c.clone());
    }
    let (r, k) = c
        .as_root_of_unity_multiple()
        .ok_or_else(|| Error::Parse(format!("state entry over Q(zeta_{}) must be r*zeta^k", c.order())))?;
    Ok(CyclotomicNumber::root_of_unity(field, k as i64, c.order())?.scale(&r))
}

fn notation_rows(m: &ExactMatrix) -> String {
    m.rows()
        .iter()
        .map(|r| format!("  [{}]", r.iter().map(|c| c.phase_notation()).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join("\n")
}

fn notation_vec(v: &StateVector) -> String {
    format!("({})", v.entries().iter().map(|c| c.phase_notation()).collect::<Vec<_>>().join(", "))
}
