use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matroid_forge::catalan::{catalan_matroid, circuits_closed_form, rank_closed_form, shifted_matroid, ShiftVector};
use matroid_forge::complexes::{
    enumerate_syt, first_row_sets, first_row_shift_vector, iset_family, mu_sets, recover_shift_vector, OrderIdeal,
    Partition, Poset, SetFamily, ShiftRecovery,
};
use matroid_forge::matroid::{check_basis_axioms, has_uniform_minor};
use matroid_forge::representation::{build_representation, non_representability_witness, vector_matroid};
use matroid_forge::tutte::{
    a_stat_count, b_stat_count, catalan_tutte_series, stat_histograms, tutte_catalan_direct, tutte_via_activities,
    tutte_via_corank_nullity, BivariatePolynomial, LinearOrder,
};
use matroid_forge::verify::{run_all, VerifyConfig};
use matroid_forge::{BasisFamily, ElementSet, Error, Limits};

/// Catalan matroids, shifted matroids and their Tutte polynomials.
#[derive(Parser)]
#[command(name = "matroid-forge", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Worker threads for the parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest number of subsets a 2^m sweep may visit.
    #[arg(long, default_value_t = 1 << 20, global = true)]
    max_subsets: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// The Catalan matroid C_n.
    #[command(subcommand)]
    Catalan(CatalanCmd),
    /// Shifted matroids SM(s).
    #[command(subcommand)]
    Shifted(ShiftedCmd),
    /// Integer matrix representing SM(s) and its vector matroid.
    Represent {
        #[arg(long, value_parser = parse_list)]
        s: List,
        /// Print the matrix itself.
        #[arg(long)]
        emit_matrix: bool,
        /// Compare the vector matroid with SM(s).
        #[arg(long)]
        verify: bool,
    },
    /// Search C_n for a uniform minor.
    Minor {
        #[arg(long)]
        n: usize,
        /// Target `k,l` for U(k,l).
        #[arg(long, value_parser = parse_list)]
        target: List,
        /// Report what the minor says about representability over GF(q).
        #[arg(long)]
        field_size: Option<u64>,
    },
    /// Standard Young tableaux of a shape.
    Syt {
        #[arg(long, value_parser = parse_list)]
        shape: List,
        /// First-row sets and the matching shift vector.
        #[arg(long, conflicts_with = "mu")]
        first_row: bool,
        /// Entry sets of the sub-shape mu.
        #[arg(long, value_parser = parse_list)]
        mu: Option<List>,
    },
    /// Posets and their I-set families.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Acceptance checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args)]
struct NArg {
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum CatalanCmd {
    /// Bases as Dyck up-step sets.
    Bases(NArg),
    /// Rank of a subset of [2n].
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
        set: List,
    },
    /// All flats.
    Flats(NArg),
    /// Circuits from the closed form.
    Circuits(NArg),
    /// Bonds: minimal sets meeting every basis.
    Bonds(NArg),
    /// Tutte polynomial by the chosen method.
    Tutte {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "direct")]
        method: TutteMethod,
    },
    /// Histograms of the statistics a and b against the closed form.
    Stats(NArg),
}

#[derive(Clone, Copy, ValueEnum)]
enum TutteMethod {
    Direct,
    Activities,
    Subsets,
    Series,
}

#[derive(Subcommand)]
enum ShiftedCmd {
    /// Bases of SM(s).
    Bases {
        #[arg(long, value_parser = parse_list)]
        s: List,
    },
    /// Reads a basis family and recovers its shift vector.
    Recover {
        #[arg(long)]
        bases_file: PathBuf,
    },
    /// Checks the basis axioms for SM(s) or for a family read from a file.
    CheckAxioms {
        #[arg(long, value_parser = parse_list, required_unless_present = "bases_file")]
        s: Option<List>,
        #[arg(long, conflicts_with = "s")]
        bases_file: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PosetCmd {
    Isets {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_parser = parse_list, default_value = "")]
        ideal: List,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    All {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
}

/// Comma-separated non-negative integers; the empty string is the empty list.
#[derive(Clone, Debug)]
struct List(Vec<usize>);

fn parse_list(raw: &str) -> Result<List, String> {
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| format!("{s:?} is not a non-negative integer")))
        .collect::<Result<_, _>>()
        .map(List)
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<Output, Failure>;

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

fn set_lines(sets: &[ElementSet]) -> String {
    sets.iter().fold(String::new(), |mut s, x| {
        let _ = writeln!(s, "{x}");
        s
    })
}

fn sets_output(sets: &[ElementSet]) -> Output {
    Output::new(set_lines(sets), json!(sets))
}

fn poly_output(p: &BivariatePolynomial) -> Output {
    Output::new(format!("{p}\n"), json!(p))
}

fn family_output(fam: &SetFamily) -> Output {
    Output::new(set_lines(fam.members()), json!(fam.members()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let raw = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// A basis family file: `{"m": 4, "bases": [[1,2], …]}`, or a bare list of
/// bases whose ground set is taken to be `1..=max element`.
fn read_family(path: &PathBuf) -> Result<BasisFamily, Failure> {
    let value: Value = read_json(path)?;
    if value.is_array() {
        let bases: Vec<Vec<usize>> =
            serde_json::from_value(value).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let m = bases.iter().flatten().copied().max().unwrap_or(0);
        let sets =
            bases.into_iter().map(|b| ElementSet::from_elements(m, b)).collect::<matroid_forge::Result<Vec<_>>>()?;
        Ok(BasisFamily::new(m, sets)?)
    } else {
        serde_json::from_value(value).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn shift(s: Vec<usize>) -> Result<ShiftVector, Failure> {
    Ok(ShiftVector::new(s)?)
}

fn partition(p: Vec<usize>) -> Result<Partition, Failure> {
    Ok(Partition::new(p)?)
}

fn catalan(cmd: CatalanCmd, l: &Limits) -> Outcome {
    match cmd {
        CatalanCmd::Bases(NArg { n }) => Ok(sets_output(catalan_matroid(n, l)?.bases())),
        CatalanCmd::Rank { n, set } => {
            let a = ElementSet::from_elements(2 * n, set.0)?;
            let r = rank_closed_form(n, a)?;
            Ok(Output::new(format!("{r}\n"), json!({ "set": a, "rank": r })))
        }
        CatalanCmd::Flats(NArg { n }) => Ok(sets_output(&catalan_matroid(n, l)?.flats(l)?)),
        CatalanCmd::Circuits(NArg { n }) => Ok(sets_output(&circuits_closed_form(n, l)?)),
        CatalanCmd::Bonds(NArg { n }) => Ok(sets_output(&catalan_matroid(n, l)?.bonds(l)?)),
        CatalanCmd::Tutte { n, method } => {
            let p = match method {
                TutteMethod::Direct => tutte_catalan_direct(n, l)?,
                TutteMethod::Activities => tutte_via_activities(&catalan_matroid(n, l)?, &LinearOrder::natural(2 * n))?,
                TutteMethod::Subsets => tutte_via_corank_nullity(&catalan_matroid(n, l)?, l)?,
                TutteMethod::Series => catalan_tutte_series(n, l)?.coefficient(n).clone(),
            };
            Ok(poly_output(&p))
        }
        CatalanCmd::Stats(NArg { n }) => {
            let (a, b) = stat_histograms(n, l)?;
            let mut text = String::from("k\ta(P)=k\tb(P)=k\tformula\n");
            let mut rows = Vec::new();
            let mut ok = true;
            for k in 1..=n {
                let formula = a_stat_count(n, k)?;
                ok &= num_bigint::BigInt::from(a[k]) == formula && b_stat_count(n, k)? == formula;
                let _ = writeln!(text, "{k}\t{}\t{}\t{formula}", a[k], b[k]);
                rows.push(json!({ "k": k, "a": a[k], "b": b[k], "formula": formula.to_string() }));
            }
            Ok(Output { text, json: json!({ "n": n, "rows": rows, "agree": ok }), ok })
        }
    }
}

fn shifted(cmd: ShiftedCmd, l: &Limits) -> Outcome {
    match cmd {
        ShiftedCmd::Bases { s } => Ok(sets_output(shifted_matroid(&shift(s.0)?, l)?.bases())),
        ShiftedCmd::Recover { bases_file } => {
            let f = read_family(&bases_file)?;
            Ok(match recover_shift_vector(&f, l)? {
                ShiftRecovery::Shifted(s) => {
                    Output::new(format!("shifted: SM{:?}\n", s.as_slice()), json!({ "shifted": true, "s": s }))
                }
                ShiftRecovery::NotShifted { candidate, discrepancy } => Output::new(
                    format!("not shifted: candidate SM{:?} differs at {discrepancy}\n", candidate.as_slice()),
                    json!({ "shifted": false, "candidate": candidate, "discrepancy": discrepancy }),
                ),
            })
        }
        ShiftedCmd::CheckAxioms { s, bases_file } => {
            let f = match (s, bases_file) {
                (Some(s), _) => shifted_matroid(&shift(s.0)?, l)?,
                (None, Some(path)) => read_family(&path)?,
                (None, None) => return Err(Failure::Usage("give --s or --bases-file".into())),
            };
            Ok(match check_basis_axioms(f.ground_size(), f.bases()) {
                Ok(()) => Output::new(
                    format!("ok: {} bases satisfy the basis axioms\n", f.num_bases()),
                    json!({ "valid": true, "bases": f.num_bases() }),
                ),
                Err(v) => Output {
                    text: format!("violation: {v}\n"),
                    json: json!({ "valid": false, "violation": v.to_string() }),
                    ok: false,
                },
            })
        }
    }
}

fn represent(s: Vec<usize>, emit_matrix: bool, verify: bool, l: &Limits) -> Outcome {
    let s = shift(s)?;
    let matrix = build_representation(&s, l)?;
    let vm = vector_matroid(&matrix, l)?;
    let mut text = String::new();
    let mut out = serde_json::Map::new();
    let mut ok = true;
    if emit_matrix {
        for row in matrix.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(text, "{}", cells.join(" "));
        }
        out.insert("matrix".into(), json!(matrix));
    }
    text.push_str(&set_lines(vm.bases()));
    out.insert("bases".into(), json!(vm.bases()));
    if verify {
        ok = vm == shifted_matroid(&s, l)?;
        let _ = writeln!(text, "vector matroid {} SM{:?}", if ok { "equals" } else { "differs from" }, s.as_slice());
        out.insert("verified".into(), json!(ok));
    }
    Ok(Output { text, json: Value::Object(out), ok })
}

fn minor(n: usize, target: Vec<usize>, field_size: Option<u64>, l: &Limits) -> Outcome {
    let [k, m] = target[..] else {
        return Err(Failure::Usage(format!("--target takes two numbers k,l, got {target:?}")));
    };
    if let Some(q) = field_size {
        if k != 2 || m != n {
            return Err(Failure::Usage("--field-size needs --target 2,N with N = n".into()));
        }
        let probe = non_representability_witness(n, q, l)?;
        let json = json!(probe);
        let text = match &json["refusal"] {
            Value::String(r) => format!("no conclusion: {r}\n"),
            _ => format!(
                "C_{n} / {} \\ {} = U(2,{n}); U(2,{n}) needs a field with at least {} elements, so C_{n} is not representable over GF({q})\n",
                json_set(&json["contract"]),
                json_set(&json["delete"]),
                n - 1
            ),
        };
        return Ok(Output::new(text, json));
    }
    let c = catalan_matroid(n, l)?;
    Ok(match has_uniform_minor(&c, k, m, l)? {
        Some(w) => Output::new(
            format!("C_{n} / {} \\ {} = U({k},{m})\n", w.contract, w.delete),
            json!({ "contract": w.contract, "delete": w.delete, "minor": format!("U({k},{m})") }),
        ),
        None => Output { text: format!("no U({k},{m}) minor\n"), json: Value::Null, ok: false },
    })
}

fn json_set(v: &Value) -> String {
    let items: Vec<String> = v.as_array().into_iter().flatten().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn syt(shape: Vec<usize>, first_row: bool, mu: Option<Vec<usize>>, l: &Limits) -> Outcome {
    let lambda = partition(shape)?;
    if first_row {
        let s = first_row_shift_vector(&lambda)?;
        let fam = first_row_sets(&lambda, l)?;
        let text = format!("SM{:?}\n{}", s.as_slice(), set_lines(fam.members()));
        return Ok(Output::new(text, json!({ "shift": s, "sets": fam.members() })));
    }
    if let Some(mu) = mu {
        return Ok(family_output(&mu_sets(&lambda, &partition(mu)?, l)?));
    }
    let tableaux = enumerate_syt(&lambda, l)?;
    let text = tableaux.iter().fold(String::new(), |mut s, t| {
        let rows: Vec<String> =
            t.rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
        let _ = writeln!(s, "{}", rows.join(" / "));
        s
    });
    let rows: Vec<&[Vec<usize>]> = tableaux.iter().map(|t| t.rows()).collect();
    Ok(Output::new(text, json!(rows)))
}

fn poset(cmd: PosetCmd, l: &Limits) -> Outcome {
    let PosetCmd::Isets { file, ideal } = cmd;
    let p: Poset = read_json(&file)?;
    let ideal = OrderIdeal::new(&p, ElementSet::from_elements(p.size(), ideal.0)?)?;
    Ok(family_output(&iset_family(&p, &ideal, l)?))
}

fn verify(cmd: VerifyCmd) -> Outcome {
    let VerifyCmd::All { max_n } = cmd;
    let reports = run_all(&VerifyConfig::capped(max_n));
    let text = reports.iter().fold(String::new(), |mut s, r| {
        let _ = writeln!(s, "{r}");
        s
    });
    let ok = reports.iter().all(|r| r.passed);
    Ok(Output { text, json: json!(reports), ok })
}

fn run(cli: Cli) -> Outcome {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(Failure::Usage("--threads must be positive".into()));
        }
        #[cfg(feature = "parallel")]
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let limits = Limits { max_subsets: cli.max_subsets, ..Limits::from_env()? };
    let l = &limits;
    match cli.command {
        Command::Catalan(cmd) => catalan(cmd, l),
        Command::Shifted(cmd) => shifted(cmd, l),
        Command::Represent { s, emit_matrix, verify } => represent(s.0, emit_matrix, verify, l),
        Command::Minor { n, target, field_size } => minor(n, target.0, field_size, l),
        Command::Syt { shape, first_row, mu } => syt(shape.0, first_row, mu.map(|m| m.0), l),
        Command::Poset(cmd) => poset(cmd, l),
        Command::Verify(cmd) => verify(cmd),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", out.json),
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource() { 3 } else { 2 })
        }
        Err(Failure::Usage(msg)) | Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
