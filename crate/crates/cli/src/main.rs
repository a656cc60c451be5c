//! `springerkit` — command-line front end for the exact nilpotent-orbit
//! toolkit.
//!
//! Exit codes: `0` success / verification passed, `1` a verification ran
//! and found a counterexample (or a queried predicate is false), `2`
//! usage error (bad flags, malformed or out-of-contract input).
//!
//! Every subcommand prints plain text by default and a JSON document with
//! `--json`; all arithmetic is exact. Finite-field checks are reported as
//! "verified over F_q", never as proofs.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use springerkit::flags::{
    collect_isotropic_flags, collect_xstable_flags, domino_fiber_census, sp6_suite,
    split_containment_suite, syt_fiber_census,
};
use springerkit::g2::{
    classify_grid, classify_random, jacobian_rank, minimal_orbit_polys, orbit_dimension_label,
    orbit_rank, smooth_component_polys, ClassificationReport, G2Nilpotent,
};
use springerkit::linalg::{Matrix, PrimeField, Rationals, Subspace};
use springerkit::models::{
    column_split, form_orbit_dim_formula, gl_orbit_dim_formula, induced_orbit_sample,
    skew_adjoint_model, split_by_columns, standard_nilpotent, LeviBlock, LeviData,
};
use springerkit::partitions::{parse_partition, partitions_of};
use springerkit::tableaux::{
    canonical_admissible, enumerate_domino, enumerate_standard, parse_domino,
    predicted_component_count, standard_count,
};
use springerkit::{DominoTableau, Error, FormKind, Partition};
use std::process::ExitCode;

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "springerkit",
    version,
    about = "Exact combinatorics and linear algebra for nilpotent orbits and Springer fibers"
)]
struct Cli {
    /// Emit a JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Emit plain text (the default; kept for explicitness).
    #[arg(long, global = true, conflicts_with = "json")]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Partition combinatorics: duals and admissibility.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Standard Young tableaux.
    #[command(subcommand)]
    Syt(SytCmd),
    /// Domino tableaux: enumeration, concatenation, canonical construction.
    #[command(subcommand)]
    Domino(DominoCmd),
    /// Nilpotent matrix models and orbit dimensions.
    #[command(subcommand)]
    Model(ModelCmd),
    /// Flag enumeration over small prime fields.
    #[command(subcommand)]
    Flags(FlagsCmd),
    /// Finite verification suites (exit 1 on any counterexample).
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// The 14-dimensional exceptional Lie algebra: ranks and Jacobians.
    #[command(subcommand)]
    G2(G2Cmd),
    /// Smooth-orbital-variety verdicts for exceptional groups.
    #[command(subcommand)]
    Orbits(OrbitsCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Orthogonal,
    Symplectic,
}

impl From<FormArg> for FormKind {
    fn from(f: FormArg) -> FormKind {
        match f {
            FormArg::Orthogonal => FormKind::Orthogonal,
            FormArg::Symplectic => FormKind::Symplectic,
        }
    }
}

#[derive(Subcommand)]
enum PartitionCmd {
    /// Transpose the Young diagram.
    Dual(PartsArg),
    /// Does the partition satisfy the parity condition for the form kind?
    Admissible(PartsFormArg),
}

#[derive(Args)]
struct PartsArg {
    /// Partition as comma-separated weakly decreasing parts, e.g. 3,2,2.
    #[arg(long)]
    parts: String,
}

#[derive(Args)]
struct PartsFormArg {
    /// Partition as comma-separated weakly decreasing parts.
    #[arg(long)]
    parts: String,
    /// Bilinear form kind.
    #[arg(long, value_enum)]
    form: FormArg,
}

#[derive(Subcommand)]
enum SytCmd {
    /// List all standard Young tableaux of a shape.
    Enum(ShapeArg),
}

#[derive(Args)]
struct ShapeArg {
    /// Shape as comma-separated weakly decreasing parts.
    #[arg(long)]
    shape: String,
}

#[derive(Subcommand)]
enum DominoCmd {
    /// List all domino tableaux of a shape, optionally only the admissible ones.
    Enum(DominoEnumArgs),
    /// Is the tableau admissible for the form kind (every prefix shape passes)?
    Admissible(RowsFormArg),
    /// Column-wise concatenation of two domino tableaux.
    Concat(ConcatArgs),
    /// The canonical admissible domino tableau of an admissible shape.
    Construct(ShapeFormArg),
    /// Refine a domino tableau to a standard Young tableau.
    Refine(RowsArg),
    /// Predicted number of components of the attached orbital variety.
    CountPrediction(ShapeFormArg),
}

#[derive(Args)]
struct DominoEnumArgs {
    #[arg(long)]
    shape: String,
    /// Keep only tableaux admissible for this form kind.
    #[arg(long, value_enum)]
    form: Option<FormArg>,
}

#[derive(Args)]
struct RowsArg {
    /// Tableau rows: entries comma-separated, rows semicolon-separated,
    /// e.g. "1,1;2,2;3;3".
    #[arg(long)]
    rows: String,
}

#[derive(Args)]
struct RowsFormArg {
    /// Tableau rows, e.g. "1,1;2,2;3;3".
    #[arg(long)]
    rows: String,
    #[arg(long, value_enum)]
    form: FormArg,
}

#[derive(Args)]
struct ConcatArgs {
    /// Left tableau rows, e.g. "0,1,1;2,3,5;2,3,5;4,6,6;4".
    #[arg(long)]
    left: String,
    /// Right tableau rows, e.g. "1,1;2,2;3;3".
    #[arg(long)]
    right: String,
}

#[derive(Args)]
struct ShapeFormArg {
    #[arg(long)]
    shape: String,
    #[arg(long, value_enum)]
    form: FormArg,
}

#[derive(Subcommand)]
enum ModelCmd {
    /// Nilpotent matrix of the given type, skew-adjoint for an explicit form.
    Skew(ShapeFormArg),
    /// Orbit dimensions from the closed formulas.
    OrbitDim(OrbitDimArgs),
    /// Randomized induced-orbit sampling for a Levi block composition.
    Induce(InduceArgs),
    /// Column split of a Jordan type, verified on explicit subquotients.
    Split(SplitArgs),
}

#[derive(Args)]
struct OrbitDimArgs {
    #[arg(long)]
    shape: String,
    /// Also compute the form-preserving orbit dimension for this kind.
    #[arg(long, value_enum)]
    form: Option<FormArg>,
}

#[derive(Args)]
struct InduceArgs {
    /// Diagonal block sizes, e.g. 2,1,2.
    #[arg(long)]
    blocks: String,
    /// Per-block nilpotent orbits, '/'-separated partitions, e.g. "2/1/1,1".
    /// Default: the trivial (zero) orbit in every block.
    #[arg(long)]
    orbits: Option<String>,
    #[arg(long, default_value_t = 32)]
    trials: u32,
    #[arg(long, default_value_t = 2026)]
    seed: u64,
}

#[derive(Args)]
struct SplitArgs {
    #[arg(long)]
    shape: String,
    /// Number of leading columns in the left factor.
    #[arg(long)]
    l1: usize,
}

#[derive(Subcommand)]
enum FlagsCmd {
    /// Count (and optionally list) the x-stable flags over F_q.
    Enum(FlagsEnumArgs),
    /// Group the flags by their tableau label (fiber census).
    Label(FlagsLabelArgs),
}

#[derive(Args)]
struct FlagsEnumArgs {
    #[arg(long)]
    shape: String,
    #[arg(long, default_value_t = 3)]
    q: u64,
    /// Restrict to isotropic flags for a skew-adjoint model of this kind.
    #[arg(long, value_enum)]
    form: Option<FormArg>,
    /// Print every flag (one line each), not only the count.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct FlagsLabelArgs {
    #[arg(long)]
    shape: String,
    #[arg(long, default_value_t = 3)]
    q: u64,
    /// Domino labels of isotropic flags instead of one-box labels of all flags.
    #[arg(long, value_enum)]
    form: Option<FormArg>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// The six-dimensional symplectic worked example over F_q.
    #[command(name = "section6")]
    Section6(QArg),
    /// Split-containment checks for a column split of a Jordan type.
    #[command(name = "lemma2")]
    Lemma2(Lemma2Args),
    /// Partition identities swept over all partitions of n <= max-n.
    PartitionProps(PartitionPropsArgs),
}

#[derive(Args)]
struct QArg {
    #[arg(long, default_value_t = 3)]
    q: u64,
}

#[derive(Args)]
struct Lemma2Args {
    #[arg(long)]
    shape: String,
    #[arg(long)]
    l1: usize,
    #[arg(long, default_value_t = 3)]
    q: u64,
}

#[derive(Args)]
struct PartitionPropsArgs {
    #[arg(long, default_value_t = 10)]
    max_n: u32,
}

#[derive(Subcommand)]
enum G2Cmd {
    /// Rank of the adjoint matrix at a point (0, 6, 8, 10 or 12).
    Rank(XArg),
    /// Classify grid or random points: rank vs. polynomial membership.
    Classify(ClassifyArgs),
    /// Jacobian rank of a variety's defining equations at a point.
    Jacobian(JacobianArgs),
}

#[derive(Args)]
struct XArg {
    /// Six comma-separated rational coefficients, e.g. 0,0,0,0,0,1.
    #[arg(long)]
    x: String,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Sweep the integer grid {-radius..radius}^6.
    #[arg(long, default_value_t = 1)]
    grid: i64,
    /// Sample this many random rational points instead of the grid.
    #[arg(long)]
    points: Option<u64>,
    #[arg(long, default_value_t = 2026)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarietyArg {
    /// The minimal-orbit closure (four quadratic equations).
    Min,
    /// The two-equation component through the minimal orbit.
    Tilde,
}

#[derive(Args)]
struct JacobianArgs {
    /// Six comma-separated rational coefficients.
    #[arg(long)]
    x: String,
    #[arg(long, value_enum)]
    variety: VarietyArg,
}

#[derive(Subcommand)]
enum OrbitsCmd {
    /// Is a smooth orbital variety guaranteed for this nilpotent orbit?
    Verdict(VerdictArgs),
}

#[derive(Args)]
struct VerdictArgs {
    /// Exceptional group: G2, F4, E6, E7 or E8.
    #[arg(long = "type", value_name = "GROUP")]
    group: String,
    /// Orbit label, e.g. "A3+A1" or "(3A1)'". Omit to print the whole table.
    #[arg(long)]
    orbit: Option<String>,
}

// ---------------------------------------------------------------------------
// output plumbing
// ---------------------------------------------------------------------------

struct Out {
    json: bool,
}

impl Out {
    /// Prints either the plain-text lines or the JSON document.
    fn emit(&self, text: &str, value: Value) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        } else {
            println!("{text}");
        }
    }
}

fn parse_rows(s: &str) -> Result<DominoTableau, Error> {
    parse_domino(s)
}

fn matrix_strings(m: &Matrix<Rationals>) -> Vec<Vec<String>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m.get(i, j).to_string()).collect())
        .collect()
}

/// Transpose computed the pedestrian way — for each column index, count the
/// rows long enough to reach it — used as an independent cross-check.
fn dual_by_row_counting(shape: &Partition) -> Vec<u32> {
    let mut cols = Vec::new();
    let mut j = 1;
    loop {
        let c = shape.parts().iter().filter(|&&p| p >= j).count() as u32;
        if c == 0 {
            break;
        }
        cols.push(c);
        j += 1;
    }
    cols
}

fn classify_text(r: &ClassificationReport) -> String {
    let mut lines = vec![
        format!("source: {}", r.source),
        format!("points: {}", r.points),
    ];
    for (rank, count) in &r.rank_histogram {
        lines.push(format!("rank {rank}: {count} points"));
    }
    lines.push(format!("failures: {}", r.failures.len()));
    lines.push(if r.passed() {
        "all membership/rank equivalences hold".to_string()
    } else {
        format!("FAILED at {:?}", r.failures.first())
    });
    lines.join("\n")
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Out { json: cli.json };
    match run(cli.command, &out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cmd: Command, out: &Out) -> Result<u8, Error> {
    match cmd {
        Command::Partition(c) => run_partition(c, out),
        Command::Syt(c) => run_syt(c, out),
        Command::Domino(c) => run_domino(c, out),
        Command::Model(c) => run_model(c, out),
        Command::Flags(c) => run_flags(c, out),
        Command::Verify(c) => run_verify(c, out),
        Command::G2(c) => run_g2(c, out),
        Command::Orbits(c) => run_orbits(c, out),
    }
}

fn run_partition(cmd: PartitionCmd, out: &Out) -> Result<u8, Error> {
    match cmd {
        PartitionCmd::Dual(a) => {
            let p = parse_partition(&a.parts)?;
            let d = p.dual();
            out.emit(
                &d.to_string(),
                json!({"parts": p.parts(), "dual": d.parts()}),
            );
            Ok(EXIT_PASS)
        }
        PartitionCmd::Admissible(a) => {
            let p = parse_partition(&a.parts)?;
            let kind: FormKind = a.form.into();
            let ok = p.is_admissible(kind);
            out.emit(
                if ok { "true" } else { "false" },
                json!({"parts": p.parts(), "form": kind.as_str(), "admissible": ok}),
            );
            Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

fn run_syt(cmd: SytCmd, out: &Out) -> Result<u8, Error> {
    match cmd {
        SytCmd::Enum(a) => {
            let shape = parse_partition(&a.shape)?;
            let list = enumerate_standard(&shape);
            let texts: Vec<String> = list.iter().map(|t| t.to_string()).collect();
            let mut lines = texts.clone();
            lines.push(format!("count: {} (hook formula: {})", list.len(), standard_count(&shape)));
            out.emit(
                &lines.join("\n"),
                json!({"shape": shape.parts(), "count": list.len(), "tableaux": texts}),
            );
            Ok(EXIT_PASS)
        }
    }
}

fn run_domino(cmd: DominoCmd, out: &Out) -> Result<u8, Error> {
    match cmd {
        DominoCmd::Enum(a) => {
            let shape = parse_partition(&a.shape)?;
            let kind = a.form.map(FormKind::from);
            let list = enumerate_domino(&shape, kind);
            let texts: Vec<String> = list.iter().map(|t| t.to_string()).collect();
            let mut lines = texts.clone();
            lines.push(format!("count: {}", list.len()));
            out.emit(
                &lines.join("\n"),
                json!({
                    "shape": shape.parts(),
                    "form": kind.map(FormKind::as_str),
                    "count": list.len(),
                    "tableaux": texts,
                }),
            );
            Ok(EXIT_PASS)
        }
        DominoCmd::Admissible(a) => {
            let t = parse_rows(&a.rows)?;
            let kind: FormKind = a.form.into();
            let ok = t.is_admissible(kind);
            out.emit(
                if ok { "true" } else { "false" },
                json!({"rows": t.to_string(), "form": kind.as_str(), "admissible": ok}),
            );
            Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
        }
        DominoCmd::Concat(a) => {
            let left = parse_rows(&a.left)?;
            let right = parse_rows(&a.right)?;
            let joined = left.concat(&right)?;
            out.emit(
                &format!("{}\n{}", joined, joined.to_ascii()),
                json!({
                    "left": left.to_string(),
                    "right": right.to_string(),
                    "result": joined.to_string(),
                }),
            );
            Ok(EXIT_PASS)
        }
        DominoCmd::Construct(a) => {
            let shape = parse_partition(&a.shape)?;
            let kind: FormKind = a.form.into();
            let t = canonical_admissible(&shape, kind)?;
            out.emit(
                &format!("{}\n{}", t, t.to_ascii()),
                json!({
                    "shape": shape.parts(),
                    "form": kind.as_str(),
                    "rows": t.row_strings(),
                    "tableau": t.to_string(),
                }),
            );
            Ok(EXIT_PASS)
        }
        DominoCmd::Refine(a) => {
            let t = parse_rows(&a.rows)?;
            let s = t.refine_to_standard();
            out.emit(
                &s.to_string(),
                json!({"domino": t.to_string(), "standard": s.to_string()}),
            );
            Ok(EXIT_PASS)
        }
        DominoCmd::CountPrediction(a) => {
            let shape = parse_partition(&a.shape)?;
            let kind: FormKind = a.form.into();
            let p = predicted_component_count(&shape, kind)?;
            out.emit(
                &format!("components: {} ({})", p.count, p.reason),
                json!({
                    "shape": shape.parts(),
                    "form": kind.as_str(),
                    "count": p.count,
                    "reason": p.reason,
                }),
            );
            Ok(EXIT_PASS)
        }
    }
}

fn run_model(cmd: ModelCmd, out: &Out) -> Result<u8, Error> {
    match cmd {
        ModelCmd::Skew(a) => {
            let shape = parse_partition(&a.shape)?;
            let kind: FormKind = a.form.into();
            let model = skew_adjoint_model(Rationals, &shape, kind)?;
            let gram = model.gram.as_ref().expect("skew model carries a form");
            out.emit(
                &format!(
                    "jordan type: {}\nx =\n{}\ngram =\n{}",
                    model.jordan,
                    model.x.to_ascii(),
                    gram.to_ascii()
                ),
                json!({
                    "shape": shape.parts(),
                    "form": kind.as_str(),
                    "x": matrix_strings(&model.x),
                    "gram": matrix_strings(gram),
                }),
            );
            Ok(EXIT_PASS)
        }
        ModelCmd::OrbitDim(a) => {
            let shape = parse_partition(&a.shape)?;
            let gl = gl_orbit_dim_formula(&shape);
            let mut lines = vec![format!("gl orbit dimension: {gl}")];
            let mut doc = json!({"shape": shape.parts(), "gl_dim": gl});
            if let Some(f) = a.form {
                let kind: FormKind = f.into();
                let fd = form_orbit_dim_formula(&shape, kind)?;
                lines.push(format!("{} orbit dimension: {fd}", kind.as_str()));
                doc["form"] = json!(kind.as_str());
                doc["form_dim"] = json!(fd);
            }
            out.emit(&lines.join("\n"), doc);
            Ok(EXIT_PASS)
        }
        ModelCmd::Induce(a) => {
            let sizes: Vec<u32> = parse_partition_list(&a.blocks)?;
            let orbits: Vec<Partition> = match &a.orbits {
                None => sizes
                    .iter()
                    .map(|&s| Partition::new(vec![1; s as usize]).expect("trivial orbit"))
                    .collect(),
                Some(text) => text
                    .split('/')
                    .map(parse_partition)
                    .collect::<Result<_, _>>()?,
            };
            if orbits.len() != sizes.len() {
                return Err(Error::Model(format!(
                    "{} orbits given for {} blocks",
                    orbits.len(),
                    sizes.len()
                )));
            }
            let blocks = sizes
                .into_iter()
                .zip(orbits)
                .map(|(size, orbit)| LeviBlock { size, orbit })
                .collect();
            let levi = LeviData::new(blocks)?;
            let sample = induced_orbit_sample(&levi, a.trials, a.seed);
            out.emit(
                &format!(
                    "induced type: {}\nexpected dim {} / observed dim {} ({} trials, seed {})\n{}",
                    sample.jordan,
                    sample.expected_dim,
                    sample.observed_dim,
                    sample.trials,
                    sample.seed,
                    if sample.dim_matches { "dimensions match" } else { "DIMENSION MISMATCH" }
                ),
                serde_json::to_value(&sample).expect("serializable"),
            );
            Ok(if sample.dim_matches { EXIT_PASS } else { EXIT_FAIL })
        }
        ModelCmd::Split(a) => {
            let shape = parse_partition(&a.shape)?;
            let (left, right) = column_split(&shape, a.l1);
            // Verify on the standard model with the two canonical x-stable
            // witnesses M = 0 and M = im(x^l1).
            let model = standard_nilpotent(Rationals, &shape);
            let n = shape.size() as usize;
            let full = Subspace::full(Rationals, n);
            let image = full.image_under(&model.x.pow(a.l1));
            let mut ok = true;
            for m in [Subspace::zero(Rationals, n), image] {
                let (u, l) = split_by_columns(&model, a.l1, &m)?;
                ok &= u == left && l == right;
            }
            out.emit(
                &format!(
                    "left (columns 0..{}): {}\nright: {}\nsubquotient check: {}",
                    a.l1,
                    left,
                    right,
                    if ok { "matches" } else { "MISMATCH" }
                ),
                json!({
                    "shape": shape.parts(),
                    "l1": a.l1,
                    "left": left.parts(),
                    "right": right.parts(),
                    "verified": ok,
                }),
            );
            Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

fn parse_partition_list(s: &str) -> Result<Vec<u32>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad block size '{t}'")))
        })
        .collect()
}

fn run_flags(cmd: FlagsCmd, out: &Out) -> Result<u8, Error> {
    match cmd {
        FlagsCmd::Enum(a) => {
            let shape = parse_partition(&a.shape)?;
            let field = PrimeField::new(a.q)?;
            let (flags, label) = match a.form {
                None => {
                    let model = standard_nilpotent(field, &shape);
                    (collect_xstable_flags(&model.x)?, "x-stable")
                }
                Some(f) => {
                    let model = skew_adjoint_model(field, &shape, f.into())?;
                    (collect_isotropic_flags(&model)?, "isotropic x-stable")
                }
            };
            let mut lines = Vec::new();
            if a.list {
                lines.extend(flags.iter().map(|f| f.render()));
            }
            lines.push(format!("{} {label} flags over F_{}", flags.len(), a.q));
            let rendered: Option<Vec<String>> =
                a.list.then(|| flags.iter().map(|f| f.render()).collect());
            out.emit(
                &lines.join("\n"),
                json!({
                    "shape": shape.parts(),
                    "q": a.q,
                    "kind": label,
                    "count": flags.len(),
                    "flags": rendered,
                }),
            );
            Ok(EXIT_PASS)
        }
        FlagsCmd::Label(a) => {
            let shape = parse_partition(&a.shape)?;
            let census = match a.form {
                None => syt_fiber_census(&shape, a.q)?,
                Some(f) => domino_fiber_census(&shape, f.into(), a.q)?,
            };
            let mut lines: Vec<String> = census
                .fibers
                .iter()
                .map(|(label, count)| format!("{label}  x{count}"))
                .collect();
            if census.unlabeled > 0 {
                lines.push(format!("(no domino label)  x{}", census.unlabeled));
            }
            lines.push(format!("total: {} flags over F_{}", census.total, census.q));
            out.emit(
                &lines.join("\n"),
                serde_json::to_value(&census).expect("serializable"),
            );
            Ok(EXIT_PASS)
        }
    }
}

fn run_verify(cmd: VerifyCmd, out: &Out) -> Result<u8, Error> {
    match cmd {
        VerifyCmd::Section6(a) => {
            let report = sp6_suite(a.q)?;
            let mut lines = Vec::new();
            for assertion in &report.assertions {
                lines.push(format!(
                    "[{}] {} {}",
                    if assertion.pass { "PASS" } else { "FAIL" },
                    assertion.name,
                    if assertion.detail.is_empty() {
                        String::new()
                    } else {
                        format!("({})", assertion.detail)
                    }
                ));
            }
            lines.push(format!(
                "verified over F_{}: {} isotropic flags, {} outside the labelled locus",
                report.q, report.flag_count, report.unlabeled
            ));
            let pass = report.passed();
            out.emit(
                &lines.join("\n"),
                serde_json::to_value(&report).expect("serializable"),
            );
            Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
        }
        VerifyCmd::Lemma2(a) => {
            let shape = parse_partition(&a.shape)?;
            let report = split_containment_suite(&shape, a.l1, a.q)?;
            let mut lines = vec![format!(
                "tail block d({}, {}); {} left labels; {} flags checked, {} labeled",
                report.tail_block.0,
                report.tail_block.1,
                report.left_labels,
                report.flags_checked,
                report.labeled_flags
            )];
            for (label, count) in &report.per_label {
                lines.push(format!("{label}  x{count}"));
            }
            lines.push(match &report.counterexample {
                None => format!(
                    "verified over F_{}: containment identities hold on every labeled flag",
                    report.q
                ),
                Some(c) => format!("COUNTEREXAMPLE: {c}"),
            });
            let pass = report.passed();
            out.emit(
                &lines.join("\n"),
                serde_json::to_value(&report).expect("serializable"),
            );
            Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
        }
        VerifyCmd::PartitionProps(a) => {
            let mut checked = 0u64;
            let mut failure: Option<String> = None;
            'outer: for n in 0..=a.max_n {
                for shape in partitions_of(n) {
                    checked += 1;
                    if shape.dual().dual() != shape {
                        failure = Some(format!("dual involution fails on {shape}"));
                        break 'outer;
                    }
                    if shape.dual().parts() != dual_by_row_counting(&shape) {
                        failure = Some(format!("dual disagrees with row counting on {shape}"));
                        break 'outer;
                    }
                    let springer: u64 = shape.springer_fiber_dimension();
                    let oracle: u64 = dual_by_row_counting(&shape)
                        .iter()
                        .map(|&c| (c as u64) * (c as u64 - 1) / 2)
                        .sum();
                    if springer != oracle {
                        failure = Some(format!("springer dimension mismatch on {shape}"));
                        break 'outer;
                    }
                    if !gl_orbit_dim_formula(&shape).is_multiple_of(2) {
                        failure = Some(format!("odd gl orbit dimension on {shape}"));
                        break 'outer;
                    }
                    for kind in [FormKind::Orthogonal, FormKind::Symplectic] {
                        if shape.is_admissible(kind) {
                            let t = canonical_admissible(&shape, kind)?;
                            if !t.is_admissible(kind) || t.shape() != &shape {
                                failure =
                                    Some(format!("canonical tableau broken on {shape} {kind}"));
                                break 'outer;
                            }
                            if form_orbit_dim_formula(&shape, kind)? % 2 != 0 {
                                failure =
                                    Some(format!("odd form orbit dimension on {shape} {kind}"));
                                break 'outer;
                            }
                        }
                    }
                }
            }
            let pass = failure.is_none();
            out.emit(
                &format!(
                    "checked {} partitions of n <= {}: {}",
                    checked,
                    a.max_n,
                    failure.clone().unwrap_or_else(|| "all properties hold".into())
                ),
                json!({
                    "max_n": a.max_n,
                    "checked": checked,
                    "pass": pass,
                    "counterexample": failure,
                }),
            );
            Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

fn run_g2(cmd: G2Cmd, out: &Out) -> Result<u8, Error> {
    match cmd {
        G2Cmd::Rank(a) => {
            let x = G2Nilpotent::parse(&a.x)?;
            let rank = orbit_rank(&x);
            out.emit(
                &format!("rank: {rank}\norbit: {}", orbit_dimension_label(rank)),
                json!({
                    "x": x.render(),
                    "rank": rank,
                    "orbit": orbit_dimension_label(rank),
                }),
            );
            Ok(EXIT_PASS)
        }
        G2Cmd::Classify(a) => {
            let report = match a.points {
                Some(p) => classify_random(p, a.seed)?,
                None => classify_grid(a.grid)?,
            };
            let pass = report.passed();
            out.emit(
                &classify_text(&report),
                serde_json::to_value(&report).expect("serializable"),
            );
            Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
        }
        G2Cmd::Jacobian(a) => {
            let x = G2Nilpotent::parse(&a.x)?;
            let (polys, name) = match a.variety {
                VarietyArg::Min => (minimal_orbit_polys(), "minimal-orbit closure"),
                VarietyArg::Tilde => (smooth_component_polys(), "two-equation component"),
            };
            let rank = jacobian_rank(polys, &x)?;
            out.emit(
                &format!("jacobian rank: {rank} ({name}, {} equations)", polys.len()),
                json!({
                    "x": x.render(),
                    "variety": name,
                    "equations": polys.len(),
                    "jacobian_rank": rank,
                }),
            );
            Ok(EXIT_PASS)
        }
    }
}

fn run_orbits(cmd: OrbitsCmd, out: &Out) -> Result<u8, Error> {
    match cmd {
        OrbitsCmd::Verdict(a) => {
            let group: springerkit::exceptional::ExcType = a.group.parse()?;
            match a.orbit {
                Some(orbit) => {
                    let record = springerkit::exceptional::smooth_ov_verdict(group, &orbit)?;
                    out.emit(
                        &format!(
                            "{} {}: {:?} ({})",
                            record.group, record.label, record.verdict, record.source
                        ),
                        serde_json::to_value(&record).expect("serializable"),
                    );
                    Ok(EXIT_PASS)
                }
                None => {
                    let labels = springerkit::exceptional::orbit_labels(group);
                    let records: Vec<_> = labels
                        .iter()
                        .map(|l| springerkit::exceptional::smooth_ov_verdict(group, l))
                        .collect::<Result<Vec<_>, _>>()?;
                    let lines: Vec<String> = records
                        .iter()
                        .map(|r| format!("{}  {:?} ({})", r.label, r.verdict, r.source))
                        .collect();
                    out.emit(
                        &lines.join("\n"),
                        serde_json::to_value(&records).expect("serializable"),
                    );
                    Ok(EXIT_PASS)
                }
            }
        }
    }
}
