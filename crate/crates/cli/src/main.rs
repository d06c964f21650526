use std::fmt::Display;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cellsym::exceptional;
use cellsym::f2_lattice::{covering_check, printed_arrows, validate_catalog};
use cellsym::family::{FamilyEntry, FamilyReport};
use cellsym::graphs::{export_dot, solve_left_cell_counts, validate_graph};
use cellsym::lifting::{enumerate_ap_r, lift_pair, lift_pair_r0};
use cellsym::symbols_b::{enumerate_sym, family_with_key, partition_families};
use cellsym::symbols_d::{
    double_prime_families, enumerate_sym_d, family_with_key_d, partition_families_d,
};
use cellsym::tableaux::{catalan_big, enumerate_apas_via_tableaux};
use cellsym::text::{format_entries, parse_entries};
use cellsym::verify::{run, Suite};
use cellsym::{CellGraph, DKind, ExactLeftCellCounts, Family, Limits};

#[derive(Parser)]
#[command(
    name = "cellsym",
    version,
    about = "Symbols, families and cell graphs for types B and D"
)]
struct Cli {
    /// Largest rank accepted by enumerations.
    #[arg(long, global = true, env = "CELLSYM_MAX_N", default_value_t = Limits::DEFAULT_MAX_N)]
    max_n: u32,
    /// Largest p accepted by the A_p machinery.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_P)]
    max_p: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the symbols of a given rank.
    Enum(EnumArgs),
    /// Split symbols into families with their special and antispecial members.
    Families(FamiliesArgs),
    /// Validate, export or solve an oriented cell graph.
    Graph(GraphArgs),
    /// Run the built-in checks.
    Verify(VerifyArgs),
    /// Lift the members of A_p(r) into A_p.
    Lift(LiftArgs),
    /// Antispecial members of A_p built from two-row tableaux.
    Tableaux(TableauxArgs),
    /// Printed subspace catalogs for the type-B lattice.
    Lattice(LatticeArgs),
    /// Exceptional family records.
    Exceptional(ExceptionalArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupType {
    B,
    D,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Prime,
    Doubleprime,
}

impl From<KindArg> for DKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Prime => DKind::Prime,
            KindArg::Doubleprime => DKind::DoublePrime,
        }
    }
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long = "type", value_enum)]
    group: GroupType,
    #[arg(long)]
    n: u32,
    /// Type D only; both kinds are listed when omitted.
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FamiliesArgs {
    #[arg(long = "type", value_enum)]
    group: GroupType,
    #[arg(long)]
    n: u32,
    /// Only the family with this sorted entry list, e.g. 0,1,2,3,4.
    #[arg(long)]
    key: Option<String>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    antispecial_only: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphAction {
    Validate,
    Dot,
    Solve,
}

#[derive(Args)]
struct GraphArgs {
    #[arg(value_enum)]
    action: GraphAction,
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    input: Option<std::path::PathBuf>,
    /// 1, 2, 3, 4, 5, 11, 17 or bp1..bp4.
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LiftArgs {
    #[arg(long)]
    p: u32,
    /// All of 0..=2p-1 when omitted.
    #[arg(long)]
    r: Option<u32>,
}

#[derive(Args)]
struct TableauxArgs {
    #[arg(long)]
    p: u32,
}

#[derive(Args)]
struct LatticeArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExceptionalArgs {
    /// Family size; the size table is printed when omitted.
    #[arg(long)]
    size: Option<usize>,
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn data(e: impl Display) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }

    fn usage(e: impl Display) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let limits = Limits::new(cli.max_n, cli.max_p);
    let result = match cli.command {
        Command::Enum(a) => cmd_enum(a, &limits),
        Command::Families(a) => cmd_families(a, &limits),
        Command::Graph(a) => cmd_graph(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Lift(a) => cmd_lift(a, &limits),
        Command::Tableaux(a) => cmd_tableaux(a, &limits),
        Command::Lattice(a) => cmd_lattice(a),
        Command::Exceptional(a) => cmd_exceptional(a),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn lines<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|s| format!("{s}\n")).collect()
}

fn json_lines<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|s| s.to_string()).collect();
    serde_json::to_string_pretty(&v).expect("strings serialize") + "\n"
}

fn cmd_enum(a: EnumArgs, limits: &Limits) -> Outcome {
    let out: Vec<String> = match a.group {
        GroupType::B => {
            if a.kind.is_some() {
                return Err(Failure::usage("--kind applies to type d only"));
            }
            enumerate_sym(a.n, limits)
                .map_err(Failure::data)?
                .iter()
                .map(|s| s.to_string())
                .collect()
        }
        GroupType::D => {
            let kinds = match a.kind {
                Some(k) => vec![k.into()],
                None => vec![DKind::Prime, DKind::DoublePrime],
            };
            let mut v = Vec::new();
            for k in kinds {
                for s in enumerate_sym_d(a.n, k, limits).map_err(Failure::data)? {
                    v.push(s.to_string());
                }
            }
            v
        }
    };
    Ok(if a.json { json_lines(out) } else { lines(out) })
}

fn entries<S: Display>(f: &Family<S>, kind: Option<&str>) -> FamilyEntry {
    FamilyEntry::from_family(f, kind)
}

fn cmd_families(a: FamiliesArgs, limits: &Limits) -> Outcome {
    let key = a
        .key
        .as_deref()
        .map(|k| {
            let mut v = parse_entries(&format!("({k})")).map_err(Failure::usage)?;
            v.sort_unstable();
            Ok::<_, Failure>(v)
        })
        .transpose()?;
    let (group_type, families) = match a.group {
        GroupType::B => {
            let fams = match &key {
                Some(k) => family_with_key(k, limits)
                    .map_err(Failure::data)?
                    .into_iter()
                    .collect(),
                None => partition_families(a.n, limits).map_err(Failure::data)?,
            };
            (
                None,
                fams.iter().map(|f| entries(f, None)).collect::<Vec<_>>(),
            )
        }
        GroupType::D => {
            let mut v = Vec::new();
            match &key {
                Some(k) => {
                    if let Some(f) = family_with_key_d(k, limits).map_err(Failure::data)? {
                        v.push(entries(&f, Some(DKind::Prime.as_str())));
                    }
                    for f in double_prime_families(a.n, limits).map_err(Failure::data)? {
                        if &f.key == k {
                            v.push(entries(&f, Some(DKind::DoublePrime.as_str())));
                        }
                    }
                }
                None => {
                    for f in partition_families_d(a.n, limits).map_err(Failure::data)? {
                        v.push(entries(&f, Some(DKind::Prime.as_str())));
                    }
                    for f in double_prime_families(a.n, limits).map_err(Failure::data)? {
                        v.push(entries(&f, Some(DKind::DoublePrime.as_str())));
                    }
                }
            }
            (Some("D".to_string()), v)
        }
    };
    if let Some(k) = &key {
        let rank = match a.group {
            GroupType::B => key_rank_b(k),
            GroupType::D => key_rank_d(k),
        };
        if families.is_empty() || rank != Some(a.n) {
            return Err(Failure::data(format!(
                "no family of rank {} has key {}",
                a.n,
                format_entries(k)
            )));
        }
    }
    let families: Vec<FamilyEntry> = if a.antispecial_only {
        families
            .into_iter()
            .map(|mut f| {
                f.members = f.antispecial.clone();
                f
            })
            .collect()
    } else {
        families
    };
    let report = FamilyReport {
        group_type,
        n: a.n,
        families,
    };
    if a.json {
        return Ok(report.to_json() + "\n");
    }
    let mut out = String::new();
    for f in &report.families {
        let kind = f
            .kind
            .as_deref()
            .map(|k| format!(" {k}"))
            .unwrap_or_default();
        out.push_str(&format!(
            "{}{kind} p={} members={} special={} antispecial={}\n",
            format_entries(&f.key),
            f.p,
            f.members.len(),
            f.special,
            f.antispecial.len()
        ));
        for s in &f.antispecial {
            out.push_str(&format!("  {s}\n"));
        }
    }
    Ok(out)
}

fn key_rank_b(key: &[u32]) -> Option<u32> {
    let m = (key.len().checked_sub(1)? / 2) as u64;
    let sum: u64 = key.iter().map(|&a| a as u64).sum();
    sum.checked_sub(m * m).map(|r| r as u32)
}

fn key_rank_d(key: &[u32]) -> Option<u32> {
    let m = (key.len() / 2) as u64;
    let sum: u64 = key.iter().map(|&a| a as u64).sum();
    (sum + m).checked_sub(m * m).map(|r| r as u32)
}

fn builtin_graph(key: &str) -> Result<CellGraph, Failure> {
    if let Some(p) = key.strip_prefix("bp") {
        let p: u32 = p
            .parse()
            .map_err(|_| Failure::usage(format!("unknown builtin graph {key:?}")))?;
        let catalog = validate_catalog(p).map_err(Failure::data)?;
        let arrows = printed_arrows(p).map_err(Failure::data)?;
        return catalog.cell_graph(arrows).map_err(Failure::data);
    }
    let size: usize = key
        .parse()
        .map_err(|_| Failure::usage(format!("unknown builtin graph {key:?}")))?;
    Ok(exceptional::lookup(size).map_err(Failure::data)?.graph)
}

fn cmd_graph(a: GraphArgs) -> Outcome {
    let g = match (&a.input, &a.builtin) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::data(format!("{}: {e}", path.display())))?;
            CellGraph::from_json(&text).map_err(Failure::data)?
        }
        (None, Some(key)) => builtin_graph(key)?,
        (None, None) => return Err(Failure::usage("one of --input or --builtin is required")),
    };
    let report = validate_graph(&g);
    match a.action {
        GraphAction::Validate => {
            let text = if a.json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else if report.is_ok() {
                format!(
                    "ok: {} vertices, {} arrows\n",
                    g.vertices.len(),
                    g.arrows.len()
                )
            } else {
                lines(report.violations.iter().map(|v| format!("{v:?}")))
            };
            if report.is_ok() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::data(format!(
                    "{} violation(s)",
                    report.violations.len()
                )))
            }
        }
        GraphAction::Dot => {
            if !report.is_ok() {
                return Err(Failure::data(format!("{:?}", report.violations)));
            }
            Ok(export_dot(&g))
        }
        GraphAction::Solve => {
            if !report.is_ok() {
                return Err(Failure::data(format!("{:?}", report.violations)));
            }
            let sol: ExactLeftCellCounts = solve_left_cell_counts(&g).map_err(Failure::data)?;
            if sol.nonpositive_warning {
                eprintln!("warning: some counts are not positive");
            }
            if a.json {
                let map: serde_json::Map<String, serde_json::Value> = g
                    .vertices
                    .iter()
                    .map(|v| {
                        let n = &sol.counts[&v.id];
                        let value = n
                            .to_string()
                            .parse::<serde_json::Number>()
                            .map(serde_json::Value::Number)
                            .unwrap_or_else(|_| serde_json::Value::String(n.to_string()));
                        (v.id.clone(), value)
                    })
                    .collect();
                Ok(serde_json::to_string_pretty(&map).expect("map serializes") + "\n")
            } else {
                let width = g
                    .vertices
                    .iter()
                    .map(|v| v.id.chars().count())
                    .max()
                    .unwrap_or(0);
                Ok(lines(g.vertices.iter().map(|v| {
                    format!("{:<width$}  {}", v.id, sol.counts[&v.id])
                })))
            }
        }
    }
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    let suite: Suite = a.suite.parse().map_err(Failure::usage)?;
    let results = run(suite);
    let text = if a.json {
        serde_json::to_string_pretty(&results).expect("results serialize") + "\n"
    } else {
        lines(results.iter().map(|c| {
            format!(
                "[{}] {}: {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )
        }))
    };
    let failed = results.iter().filter(|c| !c.pass).count();
    if failed == 0 {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::usage(format!(
            "{failed} of {} checks failed",
            results.len()
        )))
    }
}

fn cmd_lift(a: LiftArgs, limits: &Limits) -> Outcome {
    if a.p == 0 {
        return Err(Failure::data("p must be at least 1"));
    }
    let rs: Vec<u32> = match a.r {
        Some(r) => vec![r],
        None => (0..2 * a.p).collect(),
    };
    let mut out = String::new();
    let mut unlabeled = 0;
    for r in rs {
        let sources = enumerate_ap_r(a.p, r, limits).map_err(Failure::data)?;
        out.push_str(&format!("r={r}\n"));
        for s in &sources {
            if r == 0 {
                let v = lift_pair_r0(s, a.p).map_err(Failure::data)?;
                let verdict = |c: &cellsym::lifting::R0Candidate| match &c.validity {
                    Ok(_) => format!(
                        "{} [valid, rank {}]",
                        format_entries(&c.entries),
                        c.computed_rank
                    ),
                    Err(e) => format!("{} [invalid: {e}]", format_entries(&c.entries)),
                };
                out.push_str(&format!(
                    "{s} → {} | {} (target rank {})\n",
                    verdict(&v.primed),
                    verdict(&v.double_primed),
                    v.expected_rank
                ));
                continue;
            }
            match lift_pair(s, a.p, r) {
                Ok(pair) => out.push_str(&format!("{pair}\n")),
                Err(e) => {
                    unlabeled += 1;
                    out.push_str(&format!("{s} → unlabeled: {e}\n"));
                }
            }
        }
    }
    if unlabeled > 0 {
        eprintln!("warning: {unlabeled} source(s) admit no (s, s+1) labeling");
    }
    Ok(out)
}

fn cmd_tableaux(a: TableauxArgs, limits: &Limits) -> Outcome {
    let syms = enumerate_apas_via_tableaux(a.p, limits).map_err(Failure::data)?;
    let mut out = lines(syms.iter());
    out.push_str(&format!(
        "count {} (Cat_{} = {})\n",
        syms.len(),
        a.p + 1,
        catalan_big(a.p + 1)
    ));
    Ok(out)
}

fn cmd_lattice(a: LatticeArgs) -> Outcome {
    let catalog = validate_catalog(a.p).map_err(Failure::data)?;
    if a.json {
        return Ok(serde_json::to_string_pretty(&catalog).expect("catalog serializes") + "\n");
    }
    let mut out = String::new();
    for e in &catalog.entries {
        out.push_str(&format!("⟨{}⟩  {}\n", e.text, e.subspace));
    }
    for an in &catalog.anomalies {
        out.push_str(&format!("anomaly: {an:?}\n"));
    }
    let arrows = printed_arrows(a.p).unwrap_or(&[]);
    for v in covering_check(&catalog, arrows).map_err(Failure::data)? {
        out.push_str(&format!(
            "{} → {}: {}\n",
            v.from,
            v.to,
            if v.pass { "cover" } else { "not a cover" }
        ));
    }
    Ok(out)
}

fn cmd_exceptional(a: ExceptionalArgs) -> Outcome {
    match a.size {
        Some(size) => Ok(exceptional::lookup(size).map_err(Failure::data)?.to_json() + "\n"),
        None => {
            Ok(lines(exceptional::size_table().into_iter().map(
                |(size, count)| format!("|c|={size}  antispecial {count}"),
            )))
        }
    }
}
