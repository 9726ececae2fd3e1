//! Command-line front end: ingest distributions or samples, run solvers,
//! emit reports and diagrams.
//!
//! Exit codes: 0 on success, 1 for solver failures or reports carrying
//! nonnegativity violations, 2 for parse, io, and usage problems.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sid::atoms::{self, AtomSet, Method, SymmetryAudit};
use sid::blocks::{self, BlockReport, PositivityVerdict};
use sid::cases;
use sid::direct;
use sid::oracle;
use sid::shannon::{self, Bits};
use sid::{Error, JointTable, Result, SampleSet};

#[derive(Parser)]
#[command(
    name = "sid",
    version,
    about = "System information decomposition for discrete three-variable systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a three-variable table into information atoms
    Decompose(DecomposeArgs),
    /// Compute Shannon measures over named variable sets
    Shannon(ShannonArgs),
    /// Render the support-block structure for an anchor variable
    Blocks(BlocksArgs),
    /// Render the atom decomposition as an SVG diagram
    Venn(VennArgs),
    /// Emit a built-in case study
    Cases(CasesArgs),
}

#[derive(Args)]
struct InputArgs {
    /// JSON distribution or CSV sample file (stdin when omitted)
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Use built-in case study N instead of reading input
    #[arg(long, value_name = "N", conflicts_with = "input")]
    case: Option<u32>,
    /// Regroup variables first, e.g. "X1=a,b,c,d;X2=a,b,e,f;X3=c,d,e,f"
    #[arg(long, value_name = "SPEC")]
    group: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Try the direct method, fall back to the oracle, cross-check the formula
    Auto,
    Direct,
    Oracle,
    /// Pointwise synergy formula plus the co-information identity
    Formula,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write the report to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ShannonArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Joint entropy over a variable set
    #[arg(long, value_name = "VAR", num_args = 1..)]
    entropy: Option<Vec<String>>,
    /// Mutual information between two variables
    #[arg(long, value_name = "VAR", num_args = 2)]
    mi: Option<Vec<String>>,
    /// Conditional mutual information: A B GIVEN
    #[arg(long, value_name = "VAR", num_args = 3)]
    cmi: Option<Vec<String>>,
    /// Total correlation over a variable set
    #[arg(long, value_name = "VAR", num_args = 1..)]
    tc: Option<Vec<String>>,
    /// Co-information of three variables
    #[arg(long, value_name = "VAR", num_args = 3)]
    coi: Option<Vec<String>>,
    /// External information of one variable (repeatable)
    #[arg(long, value_name = "VAR")]
    ext: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BlocksArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Anchor variable
    #[arg(long, value_name = "VAR")]
    anchor: String,
    /// Anchor value; every observed value when omitted
    #[arg(long, value_name = "SYMBOL")]
    value: Option<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VennArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output SVG path (stdout when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitArg {
    /// JSON distribution
    Dist,
    /// CSV of the 64 outcome rows
    Samples,
    /// Text table with block markings
    Table,
}

#[derive(Args)]
struct CasesArgs {
    /// Case number (1 through 4)
    #[arg(long, value_name = "N")]
    case: u32,
    #[arg(long, value_enum, default_value_t = EmitArg::Dist)]
    emit: EmitArg,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) | Error::Io(_) => 2,
                _ => 1,
            })
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Decompose(args) => run_decompose(args),
        Command::Shannon(args) => run_shannon(args),
        Command::Blocks(args) => run_blocks(args),
        Command::Venn(args) => run_venn(args),
        Command::Cases(args) => run_cases(args),
    }
}

/// Tolerance in bits: SID_TOLERANCE when set, the library default otherwise.
fn tolerance() -> Result<f64> {
    match std::env::var("SID_TOLERANCE") {
        Ok(raw) => {
            let value: f64 = raw.trim().parse().map_err(|_| {
                Error::Parse(format!("SID_TOLERANCE must be a number, got {raw:?}"))
            })?;
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::Parse(format!(
                    "SID_TOLERANCE must be a positive number, got {raw:?}"
                )));
            }
            Ok(value)
        }
        Err(_) => Ok(sid::DEFAULT_TOLERANCE),
    }
}

fn load_table(input: &InputArgs) -> Result<JointTable> {
    let table = if let Some(n) = input.case {
        cases::generate_case(n)?
    } else {
        let text = match &input.input {
            Some(path) => fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
            None => {
                let mut buffer = String::new();
                io::stdin()
                    .read_to_string(&mut buffer)
                    .map_err(|e| Error::Io(e.to_string()))?;
                buffer
            }
        };
        parse_table(&text)?
    };
    match &input.group {
        Some(spec) => apply_group(&table, spec),
        None => Ok(table),
    }
}

/// JSON distributions start with '{'; everything else is CSV samples.
fn parse_table(text: &str) -> Result<JointTable> {
    if text.trim_start().starts_with('{') {
        JointTable::from_json(text)
    } else {
        JointTable::from_samples(&SampleSet::from_csv(text)?)
    }
}

/// Parses "NAME=c1,c2;NAME=c3,c4", drops unmentioned variables, and groups.
fn apply_group(table: &JointTable, spec: &str) -> Result<JointTable> {
    let mut blocks: Vec<(String, Vec<String>)> = Vec::new();
    for part in spec.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, components) = part.split_once('=').ok_or_else(|| {
            Error::Parse(format!(
                "group block {part:?} must look like NAME=comp1,comp2"
            ))
        })?;
        let components: Vec<String> = components
            .split(',')
            .map(|c| c.trim().to_string())
            .filter(|c| !c.is_empty())
            .collect();
        if components.is_empty() {
            return Err(Error::Parse(format!(
                "group block {name:?} has no components"
            )));
        }
        blocks.push((name.trim().to_string(), components));
    }
    if blocks.is_empty() {
        return Err(Error::Parse("empty group spec".to_string()));
    }
    let mentioned: BTreeSet<&str> = blocks
        .iter()
        .flat_map(|(_, components)| components.iter().map(|c| c.as_str()))
        .collect();
    let all: Vec<&str> = table.variable_names();
    let reduced = if all.iter().all(|name| mentioned.contains(name)) {
        table.clone()
    } else {
        let keep: Vec<&str> = mentioned.iter().copied().collect();
        table.marginalize(&keep)?
    };
    let borrowed: Vec<(&str, Vec<&str>)> = blocks
        .iter()
        .map(|(name, components)| {
            (
                name.as_str(),
                components.iter().map(|c| c.as_str()).collect(),
            )
        })
        .collect();
    reduced.group(&borrowed)
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = io::stdout();
            stdout
                .write_all(content.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Error::Io(e.to_string()))
        }
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization is infallible")
}

fn solve(table: &JointTable, method: MethodArg, tol: f64) -> Result<AtomSet> {
    match method {
        MethodArg::Auto => {
            let atoms = match direct::try_direct_with_tolerance(table, tol)? {
                Some(atoms) => atoms,
                None => oracle::solve_atoms_with_tolerance(table, tol)?,
            };
            cross_check_formula(table, atoms, tol)
        }
        MethodArg::Direct => {
            direct::try_direct_with_tolerance(table, tol)?.ok_or(Error::DirectNotApplicable)
        }
        MethodArg::Oracle => oracle::solve_atoms_with_tolerance(table, tol),
        MethodArg::Formula => {
            let names = table.variable_names();
            if names.len() != 3 {
                return Err(Error::NotThreeVariables { got: names.len() });
            }
            let syn = blocks::synergy_formula(table, names[0])?;
            let coi = shannon::co_information(table, names[0], names[1], names[2])?;
            // red - syn = co-information, so the formula's synergy fixes red.
            let mut atoms = atoms::atoms_from_redundancy_with_tolerance(table, syn + coi, tol)?;
            atoms.method = Method::Blocks;
            Ok(atoms)
        }
    }
}

/// The pointwise formula must reproduce the solver's synergy.
fn cross_check_formula(table: &JointTable, atoms: AtomSet, tol: f64) -> Result<AtomSet> {
    let formula_syn = blocks::synergy_formula(table, table.variable_names()[0])?;
    if (formula_syn - atoms.syn).abs() > tol {
        return Err(Error::SynergyInconsistent {
            spread: (formula_syn - atoms.syn).abs(),
            values: vec![atoms.syn, formula_syn],
        });
    }
    Ok(atoms)
}

fn run_decompose(args: DecomposeArgs) -> Result<u8> {
    let tol = tolerance()?;
    let table = load_table(&args.input)?;
    let atoms = solve(&table, args.method, tol)?;
    let audit = atoms::audit_symmetry(&table, |t, target| {
        let sources: Vec<&str> = t
            .variable_names()
            .into_iter()
            .filter(|name| *name != target)
            .collect();
        oracle::redundancy(t, target, &sources)
    })?;
    let mut verdicts = Vec::new();
    for name in table.variable_names() {
        verdicts.push(blocks::positivity(&table, name)?);
    }
    let content = match args.format {
        FormatArg::Json => format!(
            "{}\n",
            atoms::to_full_report_json(&table, &atoms, &audit, &verdicts)?
        ),
        FormatArg::Text => render_decompose_text(&table, &atoms, &audit, &verdicts),
    };
    write_output(&args.out, &content)?;
    Ok(if atoms.violations.is_empty() { 0 } else { 1 })
}

fn render_decompose_text(
    table: &JointTable,
    atoms: &AtomSet,
    audit: &SymmetryAudit,
    verdicts: &[PositivityVerdict],
) -> String {
    let fmt = atoms::format_bits;
    let names = table.variable_names();
    let mut out = String::new();
    out.push_str(&format!(
        "system information decomposition (method: {})\n\n",
        atoms.method.label()
    ));
    out.push_str("atoms [bits]\n");
    out.push_str(&format!("  red              {}\n", fmt(atoms.red)));
    for ((a, b), value) in atoms.un.iter() {
        out.push_str(&format!("  un({a},{b})        {}\n", fmt(value)));
    }
    out.push_str(&format!("  syn              {}\n", fmt(atoms.syn)));
    for name in &names {
        out.push_str(&format!(
            "  ext({name})          {}\n",
            fmt(atoms.ext[*name])
        ));
    }
    let residuals = atoms::residuals(table, atoms).expect("atom set matches table");
    out.push_str("\nidentity residuals\n");
    out.push_str(&format!("  joint entropy      {}\n", fmt(residuals.joint)));
    out.push_str(&format!("  total correlation  {}\n", fmt(residuals.tc)));
    out.push_str(&format!("  co-information     {}\n", fmt(residuals.coi)));
    out.push_str("\nsymmetry audit\n");
    for name in &names {
        out.push_str(&format!(
            "  red (target {name})   {}\n",
            fmt(audit.per_target_red[*name])
        ));
    }
    out.push_str(&format!(
        "  red discrepancy    {}\n  syn discrepancy    {}\n",
        fmt(audit.red_discrepancy),
        fmt(audit.syn_discrepancy)
    ));
    out.push_str("\nblock positivity\n");
    for verdict in verdicts {
        out.push_str(&format!("  {}\n", positivity_line(&names, verdict)));
    }
    if atoms.violations.is_empty() {
        out.push_str("\nviolations: none\n");
    } else {
        out.push_str("\nviolations\n");
        for violation in &atoms.violations {
            out.push_str(&format!("  {}  {}\n", violation.atom, fmt(violation.value)));
        }
    }
    out
}

fn positivity_line(names: &[&str], verdict: &PositivityVerdict) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut parts = vec![format!(
        "anchor {}: syn {}",
        verdict.anchor,
        yn(verdict.syn_positive)
    )];
    for name in names {
        if *name == verdict.anchor {
            continue;
        }
        parts.push(format!(
            "un({},{}) {}",
            verdict.anchor,
            name,
            yn(verdict.un_positive[*name])
        ));
    }
    parts.join(" | ")
}

fn run_shannon(args: ShannonArgs) -> Result<u8> {
    let table = load_table(&args.input)?;
    let mut rows: Vec<(&'static str, Vec<String>, Bits)> = Vec::new();
    let requested = args.entropy.is_some()
        || args.mi.is_some()
        || args.cmi.is_some()
        || args.tc.is_some()
        || args.coi.is_some()
        || args.ext.is_some();
    let as_refs = |v: &[String]| -> Vec<String> { v.to_vec() };
    if let Some(over) = &args.entropy {
        let refs: Vec<&str> = over.iter().map(|s| s.as_str()).collect();
        rows.push(("entropy", as_refs(over), shannon::entropy(&table, &refs)?));
    }
    if let Some(pairs) = &args.mi {
        for pair in pairs.chunks(2) {
            rows.push((
                "mi",
                pair.to_vec(),
                shannon::mutual_information(&table, &[&pair[0]], &[&pair[1]])?,
            ));
        }
    }
    if let Some(triples) = &args.cmi {
        for triple in triples.chunks(3) {
            rows.push((
                "cmi",
                triple.to_vec(),
                shannon::conditional_mutual_information(
                    &table,
                    &[&triple[0]],
                    &[&triple[1]],
                    &[&triple[2]],
                )?,
            ));
        }
    }
    if let Some(over) = &args.tc {
        let refs: Vec<&str> = over.iter().map(|s| s.as_str()).collect();
        rows.push((
            "tc",
            as_refs(over),
            shannon::total_correlation(&table, &refs)?,
        ));
    }
    if let Some(triples) = &args.coi {
        for triple in triples.chunks(3) {
            rows.push((
                "coi",
                triple.to_vec(),
                shannon::co_information(&table, &triple[0], &triple[1], &triple[2])?,
            ));
        }
    }
    if let Some(vars) = &args.ext {
        for var in vars {
            rows.push((
                "ext",
                vec![var.clone()],
                shannon::external_information(&table, var)?,
            ));
        }
    }
    if !requested {
        rows = standard_report(&table)?;
    }
    let content = match args.format {
        FormatArg::Json => {
            let body = rows
                .iter()
                .map(|(measure, measure_args, bits)| {
                    format!(
                        "{{\"measure\":{},\"args\":[{}],\"bits\":{}}}",
                        json_string(measure),
                        measure_args
                            .iter()
                            .map(|a| json_string(a))
                            .collect::<Vec<_>>()
                            .join(","),
                        atoms::format_bits(*bits)
                    )
                })
                .collect::<Vec<_>>()
                .join(",");
            format!("[{body}]\n")
        }
        FormatArg::Text => {
            let mut out = String::new();
            for (measure, measure_args, bits) in &rows {
                out.push_str(&format!(
                    "{} = {}\n",
                    measure_label(measure, measure_args),
                    atoms::format_bits(*bits)
                ));
            }
            out
        }
    };
    write_output(&args.out, &content)?;
    Ok(0)
}

fn measure_label(measure: &str, args: &[String]) -> String {
    match measure {
        "entropy" => format!("H({})", args.join(",")),
        "mi" => format!("I({};{})", args[0], args[1]),
        "cmi" => format!("I({};{}|{})", args[0], args[1], args[2]),
        "tc" => format!("TC({})", args.join(",")),
        "coi" => format!("CoI({})", args.join(",")),
        "ext" => format!("Ext({})", args[0]),
        _ => unreachable!("unknown measure kind"),
    }
}

/// Everything worth knowing about a table when no measure was requested.
fn standard_report(table: &JointTable) -> Result<Vec<(&'static str, Vec<String>, Bits)>> {
    let names: Vec<String> = table
        .variable_names()
        .into_iter()
        .map(str::to_string)
        .collect();
    let mut rows: Vec<(&'static str, Vec<String>, Bits)> = Vec::new();
    for name in &names {
        rows.push((
            "entropy",
            vec![name.clone()],
            shannon::entropy(table, &[name])?,
        ));
    }
    if names.len() == 3 {
        for i in 0..3 {
            for j in (i + 1)..3 {
                rows.push((
                    "entropy",
                    vec![names[i].clone(), names[j].clone()],
                    shannon::entropy(table, &[&names[i], &names[j]])?,
                ));
            }
        }
    }
    let all: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    rows.push(("entropy", names.clone(), shannon::entropy(table, &all)?));
    if names.len() == 3 {
        for i in 0..3 {
            for j in (i + 1)..3 {
                rows.push((
                    "mi",
                    vec![names[i].clone(), names[j].clone()],
                    shannon::mutual_information(table, &[&names[i]], &[&names[j]])?,
                ));
            }
        }
        for i in 0..3 {
            for j in (i + 1)..3 {
                let k = 3 - i - j;
                rows.push((
                    "cmi",
                    vec![names[i].clone(), names[j].clone(), names[k].clone()],
                    shannon::conditional_mutual_information(
                        table,
                        &[&names[i]],
                        &[&names[j]],
                        &[&names[k]],
                    )?,
                ));
            }
        }
    }
    if names.len() >= 2 {
        rows.push((
            "tc",
            names.clone(),
            shannon::total_correlation(table, &all)?,
        ));
    }
    if names.len() == 3 {
        rows.push((
            "coi",
            names.clone(),
            shannon::co_information(table, &names[0], &names[1], &names[2])?,
        ));
        for name in &names {
            rows.push((
                "ext",
                vec![name.clone()],
                shannon::external_information(table, name)?,
            ));
        }
    }
    Ok(rows)
}

fn run_blocks(args: BlocksArgs) -> Result<u8> {
    let table = load_table(&args.input)?;
    let values: Vec<String> = match &args.value {
        Some(value) => vec![value.clone()],
        None => {
            let marginal = table.marginalize(&[args.anchor.as_str()])?;
            marginal.support().map(|(o, _)| o[0].to_string()).collect()
        }
    };
    let mut reports = Vec::new();
    for value in &values {
        reports.push(blocks::classify_blocks(&table, &args.anchor, value)?);
    }
    let verdict = blocks::positivity(&table, &args.anchor)?;
    let content = match args.format {
        FormatArg::Json => {
            let body = reports
                .iter()
                .map(BlockReport::to_json)
                .collect::<Vec<_>>()
                .join(",");
            let names = table.variable_names();
            let un = names
                .iter()
                .filter(|n| **n != verdict.anchor)
                .map(|n| format!("{}:{}", json_string(n), verdict.un_positive[*n]))
                .collect::<Vec<_>>()
                .join(",");
            format!(
                "{{\"anchor\":{},\"reports\":[{body}],\"positivity\":{{\"syn\":{},\"un\":{{{un}}}}}}}\n",
                json_string(&args.anchor),
                verdict.syn_positive
            )
        }
        FormatArg::Text => {
            let mut out = String::new();
            for report in &reports {
                out.push_str(&format!(
                    "anchor {} = {}\n",
                    report.anchor_variable, report.anchor_value
                ));
                out.push_str(&render_marked_table(&table, report));
                out.push('\n');
            }
            out.push_str(&format!(
                "{}\n",
                positivity_line(&table.variable_names(), &verdict)
            ));
            out
        }
    };
    write_output(&args.out, &content)?;
    Ok(0)
}

/// One row per support outcome with its probability and block class.
fn render_marked_table(table: &JointTable, report: &BlockReport) -> String {
    let names = table.variable_names();
    let mut classes: BTreeMap<Vec<String>, String> = BTreeMap::new();
    let mut tag = |outcomes: &[Vec<String>], class: String| {
        for outcome in outcomes {
            classes.insert(outcome.clone(), class.clone());
        }
    };
    tag(&report.yellow, "yellow".to_string());
    tag(&report.syn_blocks, "syn".to_string());
    for (variable, outcomes) in &report.unique_blocks {
        tag(outcomes, format!("unique:{variable}"));
    }
    tag(&report.plain, "plain".to_string());
    let rows: Vec<(Vec<String>, f64)> = table
        .support()
        .map(|(outcome, p)| (outcome.into_iter().map(str::to_string).collect(), p))
        .collect();
    let mut widths: Vec<usize> = names.iter().map(|n| n.len()).collect();
    for (outcome, _) in &rows {
        for (i, symbol) in outcome.iter().enumerate() {
            widths[i] = widths[i].max(symbol.len());
        }
    }
    let p_width = "0.000000000".len();
    let mut out = String::new();
    out.push_str("  ");
    for (name, &width) in names.iter().zip(&widths) {
        out.push_str(&format!("{name:<width$}  "));
    }
    out.push_str(&format!("{:<p_width$}  class\n", "p"));
    for (outcome, p) in &rows {
        out.push_str("  ");
        for (symbol, &width) in outcome.iter().zip(&widths) {
            out.push_str(&format!("{symbol:<width$}  "));
        }
        out.push_str(&format!(
            "{}  {}\n",
            atoms::format_bits(*p),
            classes[outcome]
        ));
    }
    out
}

fn run_venn(args: VennArgs) -> Result<u8> {
    let tol = tolerance()?;
    let table = load_table(&args.input)?;
    let atoms = solve(&table, MethodArg::Auto, tol)?;
    write_output(&args.out, &venn_svg(&table, &atoms))?;
    Ok(0)
}

fn run_cases(args: CasesArgs) -> Result<u8> {
    let table = cases::generate_case(args.case)?;
    let content = match args.emit {
        EmitArg::Dist => format!("{}\n", table.to_json()),
        EmitArg::Samples => table.support_rows().to_csv()?,
        EmitArg::Table => {
            let anchor = table.variables()[0].name.clone();
            let marginal = table.marginalize(&[anchor.as_str()])?;
            let value = marginal
                .support()
                .map(|(o, _)| o[0].to_string())
                .next()
                .expect("case tables are nonempty");
            let report = blocks::classify_blocks(&table, &anchor, &value)?;
            format!(
                "case {}, anchor {anchor} = {value}\n{}",
                args.case,
                render_marked_table(&table, &report)
            )
        }
    };
    write_output(&args.out, &content)?;
    Ok(0)
}

fn venn_svg(table: &JointTable, atoms: &AtomSet) -> String {
    let names = table.variable_names();
    let fmt = |x: f64| format!("{x:.3}");
    // Circle centers and radius; the centroid is the reference for pushing
    // labels inward or outward.
    let centers: [(f64, f64); 3] = [(200.0, 170.0), (320.0, 170.0), (260.0, 274.0)];
    let radius = 120.0;
    let centroid = (260.0, 204.7);
    let colors = ["#d4a72c", "#3f8fa8", "#b0604f"];
    let strokes = ["#7a6012", "#1f5a66", "#6e3a2f"];
    let mut out = String::new();
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"470\" \
         viewBox=\"0 0 520 470\" font-family=\"Helvetica, Arial, sans-serif\">\n",
    );
    out.push_str(
        "  <!-- Region areas are schematic, not proportional to atom values.\n\
         \x20      The synergy value labels all three circle-private regions: it is\n\
         \x20      one shared atom, counted twice in the joint-entropy identity. -->\n",
    );
    out.push_str("  <rect width=\"520\" height=\"470\" fill=\"#ffffff\"/>\n");
    out.push_str(&format!(
        "  <text x=\"16\" y=\"24\" font-size=\"14\" fill=\"#333333\">information atoms [bits], method {}, schematic regions</text>\n",
        atoms.method.label()
    ));
    for (i, (cx, cy)) in centers.iter().enumerate() {
        out.push_str(&format!(
            "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"{radius}\" fill=\"{}\" fill-opacity=\"0.30\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
            colors[i], strokes[i]
        ));
    }
    let label = |out: &mut String, x: f64, y: f64, caption: &str, value: &str| {
        out.push_str(&format!(
            "  <text x=\"{x}\" y=\"{}\" font-size=\"11\" fill=\"#555555\" text-anchor=\"middle\">{caption}</text>\n",
            y - 8.0
        ));
        out.push_str(&format!(
            "  <text x=\"{x}\" y=\"{}\" font-size=\"15\" font-family=\"monospace\" text-anchor=\"middle\">{value}</text>\n",
            y + 10.0
        ));
    };
    // Center: merged redundancy.
    label(&mut out, 260.0, 206.0, "red", &fmt(atoms.red));
    // Pairwise lenses: unique information.
    let lens_positions = [(260.0, 128.0), (206.0, 238.0), (314.0, 238.0)];
    let lens_pairs = [(0, 1), (0, 2), (1, 2)];
    for ((x, y), (i, j)) in lens_positions.iter().zip(lens_pairs) {
        let value = atoms.un.get(names[i], names[j]).expect("all pairs present");
        label(
            &mut out,
            *x,
            *y,
            &format!("un {}•{}", names[i], names[j]),
            &fmt(value),
        );
    }
    // Circle-private regions: the shared synergy value, once per circle.
    for (cx, cy) in centers {
        let dx = cx - centroid.0;
        let dy = cy - centroid.1;
        let len = (dx * dx + dy * dy).sqrt();
        let x = cx + dx / len * 64.0;
        let y = cy + dy / len * 64.0;
        label(&mut out, x, y, "syn", &fmt(atoms.syn));
    }
    // Outer crescents: variable name and its external information.
    for (i, (cx, cy)) in centers.iter().enumerate() {
        let dx = cx - centroid.0;
        let dy = cy - centroid.1;
        let len = (dx * dx + dy * dy).sqrt();
        let x = cx + dx / len * (radius + 30.0);
        let y = cy + dy / len * (radius + 30.0);
        out.push_str(&format!(
            "  <text x=\"{x}\" y=\"{}\" font-size=\"13\" font-weight=\"bold\" text-anchor=\"middle\">{}</text>\n",
            y - 6.0,
            names[i]
        ));
        out.push_str(&format!(
            "  <text x=\"{x}\" y=\"{}\" font-size=\"12\" font-family=\"monospace\" text-anchor=\"middle\">ext {}</text>\n",
            y + 12.0,
            fmt(atoms.ext[names[i]])
        ));
    }
    out.push_str("</svg>\n");
    out
}
