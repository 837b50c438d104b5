//! Command-line interface for flock construction, classification, braid
//! closure colorings, homology, and cocycle invariants.
//!
//! Exit codes: 0 on success, 2 on any validation error (the witness or cause
//! is printed to stderr).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use flock_core::braid::{BraidWord, ClosedBraidDiagram};
use flock_core::cochain::{check_1cocycle, check_2cocycle, cocycle_space_1};
use flock_core::coloring::{self, ActionSpec};
use flock_core::homology::{boundary_matrix, homology_groups};
use flock_core::invariant;
use flock_core::matrix::smith_normal_form;
use flock_core::ternary::TernaryTable;
use flock_cli::{catalog_gen, formats};

#[derive(Parser)]
#[command(name = "flock", version, about = "Knot-theoretic flocks and their link invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the axiom battery on a flock or ternary table
    Check(CheckArgs),
    /// Enumerate flock isomorphism classes from a group catalog
    Classify(ClassifyArgs),
    /// Print the region complex of a braid closure
    Diagram(DiagramArgs),
    /// Count (or dump) the colorings of a braid closure
    Color(ColorArgs),
    /// Orbit structure of a group action on the coloring set
    Orbits(OrbitsArgs),
    /// Verify cocycle conditions or search for cocycles
    #[command(subcommand)]
    Cocycle(CocycleCommand),
    /// Boundary matrices and homology of the flock complex
    Homology(HomologyArgs),
    /// The cocycle invariant of one braid closure
    Invariant(InvariantArgs),
    /// Invariants for a list of braid words, with a distinctness summary
    Batch(BatchArgs),
    /// Write the builtin group catalog as a directory of group files
    MakeCatalog(MakeCatalogArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Flock file (group + b, or explicit ternary table)
    #[arg(long)]
    flock: PathBuf,
    /// Run the n^5 associativity scans even for order > 16
    #[arg(long)]
    force_large: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Comma-separated list of orders, e.g. 6,8,12
    #[arg(long, value_delimiter = ',')]
    orders: Vec<usize>,
    /// Catalog directory (manifest.txt plus group files)
    #[arg(long)]
    catalog: PathBuf,
    /// Also write the rows as CSV to this path
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct DiagramArgs {
    /// Braid word, e.g. "1 1 -2"; g > 0 is a positive generator
    #[arg(long)]
    braid: String,
    /// Number of strands (default: max letter + 1)
    #[arg(long)]
    strands: Option<usize>,
    /// Also print one machine-readable line per crossing
    #[arg(long)]
    dump: bool,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long)]
    braid: String,
    #[arg(long)]
    strands: Option<usize>,
    #[arg(long)]
    flock: PathBuf,
    /// Print each coloring as its top-gap tuple
    #[arg(long)]
    dump: bool,
}

#[derive(Args)]
struct OrbitsArgs {
    #[arg(long)]
    braid: String,
    #[arg(long)]
    strands: Option<usize>,
    #[arg(long)]
    flock: PathBuf,
    /// Action kind: central, conj, or two-sided
    #[arg(long)]
    action: String,
    /// Generators of the acting subgroup (1-based, comma-separated), for conj
    #[arg(long, value_delimiter = ',')]
    subgroup: Vec<usize>,
    /// Generators of the left subgroup H, for two-sided
    #[arg(long, value_delimiter = ',')]
    left: Vec<usize>,
    /// Generators of the right subgroup S, for two-sided
    #[arg(long, value_delimiter = ',')]
    right: Vec<usize>,
}

#[derive(Subcommand)]
enum CocycleCommand {
    /// Check the 1- or 2-cocycle conditions for a cochain file
    Verify(CocycleVerifyArgs),
    /// Compute an echelon basis of the 1-cocycle space mod p
    Search(CocycleSearchArgs),
}

#[derive(Args)]
struct CocycleVerifyArgs {
    #[arg(long)]
    flock: PathBuf,
    #[arg(long)]
    cocycle: PathBuf,
}

#[derive(Args)]
struct CocycleSearchArgs {
    #[arg(long)]
    flock: PathBuf,
    #[arg(long)]
    modulus: u32,
    /// Directory for the basis files (basis_000.cocycle1, ...)
    #[arg(long)]
    out: PathBuf,
    /// Cell budget for the linear system
    #[arg(long, default_value_t = 1 << 28)]
    budget: u128,
}

#[derive(Args)]
struct HomologyArgs {
    #[arg(long)]
    flock: PathBuf,
    /// Chain degree n
    #[arg(long)]
    degree: isize,
    /// Work in the quotient by the degenerate subcomplex
    #[arg(long)]
    normalized: bool,
    /// Print the boundary matrix elementary divisors instead of homology
    #[arg(long)]
    matrix_only: bool,
    /// Matrix cell budget
    #[arg(long, default_value_t = 1 << 22)]
    budget: u128,
}

#[derive(Args)]
struct InvariantArgs {
    #[arg(long)]
    braid: String,
    #[arg(long)]
    strands: Option<usize>,
    #[arg(long)]
    flock: PathBuf,
    #[arg(long)]
    cocycle: PathBuf,
    /// Refine by an action: central, conj, or two-sided
    #[arg(long)]
    action: Option<String>,
    #[arg(long, value_delimiter = ',')]
    subgroup: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    left: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    right: Vec<usize>,
}

#[derive(Args)]
struct BatchArgs {
    /// Braid list file, one word per line
    #[arg(long)]
    braids: PathBuf,
    #[arg(long)]
    flock: PathBuf,
    #[arg(long)]
    cocycle: PathBuf,
    /// Write rows as CSV: braid, p, c0..c_{p-1}
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct MakeCatalogArgs {
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Check(args) => check(args),
        Command::Classify(args) => classify(args),
        Command::Diagram(args) => diagram(args),
        Command::Color(args) => color(args),
        Command::Orbits(args) => orbits(args),
        Command::Cocycle(CocycleCommand::Verify(args)) => cocycle_verify(args),
        Command::Cocycle(CocycleCommand::Search(args)) => cocycle_search(args),
        Command::Homology(args) => homology(args),
        Command::Invariant(args) => invariant_cmd(args),
        Command::Batch(args) => batch(args),
        Command::MakeCatalog(args) => {
            let cat = catalog_gen::write_catalog(&args.out).map_err(|e| e.to_string())?;
            println!("wrote {} groups to {}", cat.entries.len(), args.out.display());
            Ok(())
        }
    }
}

fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord, String> {
    let word = BraidWord::parse(text).or_else(|e| match strands {
        // words without letters need the strand count from the flag
        Some(n) if matches!(e, flock_core::braid::BraidError::EmptyTokens) => {
            BraidWord::new(n, vec![])
        }
        _ => Err(e),
    });
    let mut word = word.map_err(|e| e.to_string())?;
    if let Some(n) = strands {
        if n < word.strands {
            return Err(format!(
                "strands={n} too small for the letters (need {})",
                word.strands
            ));
        }
        word.strands = n;
    }
    Ok(word)
}

fn check(args: CheckArgs) -> Result<(), String> {
    let t = formats::load_flock(&args.flock).map_err(|e| e.to_string())?;
    let n = t.order();
    let quintuple_scan = n <= 16 || args.force_large;
    let mut all_ok = true;
    let mut report = |name: &str, witness: Option<flock_core::ternary::Witness>| match witness {
        None => println!("{name}: ok"),
        Some(w) => {
            all_ok = false;
            println!("{name}: FAIL ({w})");
        }
    };
    report("quasigroup", t.quasigroup_witness());
    if quintuple_scan {
        report("para-associativity", t.para_associative_witness());
        match t.associative_witness() {
            None => println!("associativity: holds"),
            Some(_) => println!("associativity: does not hold (not required)"),
        }
    } else {
        println!("para-associativity: skipped (order {n} > 16; use --force-large)");
    }
    report("left nesting", t.left_nesting_witness());
    report("right nesting", t.right_nesting_witness());
    report("recovery equations", t.recovery_witness());
    report("all elements special", t.all_special_witness());
    println!("idempotent: {}", t.is_idempotent());
    println!("heap: {}", t.is_heap());
    println!("semi-commutative: {}", t.is_semi_commutative());
    println!("colorable: {}", t.is_colorable());
    if all_ok {
        Ok(())
    } else {
        Err("axiom battery failed".into())
    }
}

fn classify(args: ClassifyArgs) -> Result<(), String> {
    let catalog = formats::load_catalog(&args.catalog).map_err(|e| e.to_string())?;
    catalog.validate().map_err(|e| e.to_string())?;
    let rows =
        flock_core::classify::count_table(&catalog, &args.orders).map_err(|e| e.to_string())?;
    println!("{:>6} {:>6} {:>11}", "order", "all", "idempotent");
    for (order, all, idem) in &rows {
        println!("{order:>6} {all:>6} {idem:>11}");
    }
    if let Some(csv) = &args.csv {
        let mut out = String::from("order,all,idempotent\n");
        for (order, all, idem) in &rows {
            out.push_str(&format!("{order},{all},{idem}\n"));
        }
        std::fs::write(csv, out).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn diagram(args: DiagramArgs) -> Result<(), String> {
    let word = parse_braid(&args.braid, args.strands)?;
    let d = ClosedBraidDiagram::close(word);
    println!(
        "strands {}  crossings {}  regions {}  components {}  unbounded {}",
        d.word.strands,
        d.crossing_count(),
        d.regions,
        d.components,
        d.unbounded + 1
    );
    for (i, r) in d.crossing_records().iter().enumerate() {
        println!(
            "crossing {}: sign {:+} around (l {}, a {}, r {}, b {}) roles (s {}, m {}, t {})",
            i + 1,
            r.sign,
            r.around[0] + 1,
            r.around[1] + 1,
            r.around[2] + 1,
            r.around[3] + 1,
            r.roles[0] + 1,
            r.roles[1] + 1,
            r.roles[2] + 1,
        );
    }
    if args.dump {
        for r in d.crossing_records() {
            println!(
                "{} {} {} {} {} {} {} {}",
                r.sign,
                r.around[0] + 1,
                r.around[1] + 1,
                r.around[2] + 1,
                r.around[3] + 1,
                r.roles[0] + 1,
                r.roles[1] + 1,
                r.roles[2] + 1
            );
        }
    }
    Ok(())
}

fn color(args: ColorArgs) -> Result<(), String> {
    let word = parse_braid(&args.braid, args.strands)?;
    let t = formats::load_flock(&args.flock).map_err(|e| e.to_string())?;
    let d = ClosedBraidDiagram::close(word);
    let gaps = d.word.strands + 1;
    let top: Vec<usize> = d.top_raw().to_vec();
    let mut count = 0u64;
    coloring::for_each_coloring(&d, &t, |raw| {
        if args.dump {
            let tuple: Vec<String> = (0..gaps).map(|j| (raw[top[j]] + 1).to_string()).collect();
            println!("{}", tuple.join(" "));
        }
        count += 1;
    })
    .map_err(|e| e.to_string())?;
    println!("{count} colorings");
    Ok(())
}

fn build_action(
    kind: &str,
    table: &TernaryTable,
    diagram: &ClosedBraidDiagram,
    subgroup: &[usize],
    left: &[usize],
    right: &[usize],
) -> Result<ActionSpec, String> {
    let closure = |gens: &[usize]| -> Result<Vec<usize>, String> {
        let spec = table
            .flock_spec()
            .ok_or("action needs a flock built from a group")?;
        let g = &spec.group;
        for &x in gens {
            if x == 0 || x > g.order() {
                return Err(format!("element {x} out of range 1..={}", g.order()));
            }
        }
        let gens0: Vec<usize> = gens.iter().map(|&x| x - 1).collect();
        Ok(g.subgroup_closure(&gens0))
    };
    match kind {
        "conj" => Ok(ActionSpec::Conjugation {
            elements: closure(subgroup)?,
        }),
        "two-sided" => Ok(ActionSpec::TwoSided {
            left: closure(left)?,
            right: closure(right)?,
        }),
        "central" => {
            let acting = coloring::central_colorings(diagram, table).map_err(|e| e.to_string())?;
            Ok(ActionSpec::CentralColorings { acting })
        }
        other => Err(format!("unknown action {other:?} (central, conj, two-sided)")),
    }
}

fn orbits(args: OrbitsArgs) -> Result<(), String> {
    let word = parse_braid(&args.braid, args.strands)?;
    let t = formats::load_flock(&args.flock).map_err(|e| e.to_string())?;
    let d = ClosedBraidDiagram::close(word);
    let action = build_action(&args.action, &t, &d, &args.subgroup, &args.left, &args.right)?;
    let cols = coloring::enumerate_colorings(&d, &t).map_err(|e| e.to_string())?;
    let partition = coloring::orbit_partition(&d, &t, &cols, &action).map_err(|e| e.to_string())?;
    println!("{} colorings, {} orbits", cols.len(), partition.orbits.len());
    for (size, count) in partition.size_histogram() {
        println!("orbit size {size}: {count}");
    }
    Ok(())
}

fn cocycle_verify(args: CocycleVerifyArgs) -> Result<(), String> {
    let t = formats::load_flock(&args.flock).map_err(|e| e.to_string())?;
    let spec = t
        .flock_spec()
        .ok_or("cocycle conditions need a flock built from a group")?;
    let f = formats::load_cochain(&args.cocycle).map_err(|e| e.to_string())?;
    let witness = match f.arity {
        3 => check_1cocycle(spec, &f).map_err(|e| e.to_string())?,
        4 => check_2cocycle(spec, &f).map_err(|e| e.to_string())?,
        a => return Err(format!("unsupported arity {a}")),
    };
    match witness {
        None => {
            println!("cocycle conditions hold");
            Ok(())
        }
        Some(w) => Err(format!("{w}")),
    }
}

fn cocycle_search(args: CocycleSearchArgs) -> Result<(), String> {
    let t = formats::load_flock(&args.flock).map_err(|e| e.to_string())?;
    let spec = t
        .flock_spec()
        .ok_or("cocycle search needs a flock built from a group")?;
    let basis = cocycle_space_1(spec, args.modulus, args.budget).map_err(|e| e.to_string())?;
    std::fs::create_dir_all(&args.out).map_err(|e| e.to_string())?;
    for (i, f) in basis.iter().enumerate() {
        let path = args.out.join(format!("basis_{i:03}.cocycle1"));
        formats::write_cochain(&path, f).map_err(|e| e.to_string())?;
    }
    println!(
        "cocycle space dimension {} (mod {}), basis written to {}",
        basis.len(),
        args.modulus,
        args.out.display()
    );
    Ok(())
}

fn homology(args: HomologyArgs) -> Result<(), String> {
    let t = formats::load_flock(&args.flock).map_err(|e| e.to_string())?;
    let spec = t
        .flock_spec()
        .ok_or("homology needs a flock built from a group")?;
    if args.matrix_only {
        let m = boundary_matrix(spec, args.degree, args.normalized, args.budget)
            .map_err(|e| e.to_string())?;
        let (divisors, rank) = smith_normal_form(&m).map_err(|e| e.to_string())?;
        println!(
            "boundary matrix {}x{}, rank {rank}, divisors {divisors:?}",
            m.rows, m.cols
        );
    } else {
        let (betti, torsion) = homology_groups(spec, args.degree, args.normalized, args.budget)
            .map_err(|e| e.to_string())?;
        let tors: Vec<String> = torsion.iter().map(|d| format!("Z/{d}")).collect();
        if tors.is_empty() {
            println!("H_{} = Z^{betti}", args.degree);
        } else {
            println!("H_{} = Z^{betti} + {}", args.degree, tors.join(" + "));
        }
    }
    Ok(())
}

fn invariant_cmd(args: InvariantArgs) -> Result<(), String> {
    let word = parse_braid(&args.braid, args.strands)?;
    let t = formats::load_flock(&args.flock).map_err(|e| e.to_string())?;
    let f = formats::load_cochain(&args.cocycle).map_err(|e| e.to_string())?;
    if let Some(spec) = t.flock_spec() {
        if f.arity == 3 {
            if let Some(w) = check_1cocycle(spec, &f).map_err(|e| e.to_string())? {
                return Err(format!("cochain is not a cocycle: {w}"));
            }
        }
    }
    let d = ClosedBraidDiagram::close(word);
    match &args.action {
        None => {
            let psi = invariant::cocycle_invariant(&d, &t, &f).map_err(|e| e.to_string())?;
            println!("{psi}");
        }
        Some(kind) => {
            let action = build_action(kind, &t, &d, &args.subgroup, &args.left, &args.right)?;
            let refined =
                invariant::refined_invariant(&d, &t, &f, &action).map_err(|e| e.to_string())?;
            println!("{}", refined.expand());
            println!("{refined}");
        }
    }
    Ok(())
}

fn batch(args: BatchArgs) -> Result<(), String> {
    let words = formats::load_braids(&args.braids).map_err(|e| e.to_string())?;
    let t = formats::load_flock(&args.flock).map_err(|e| e.to_string())?;
    let f = formats::load_cochain(&args.cocycle).map_err(|e| e.to_string())?;
    if let Some(spec) = t.flock_spec() {
        if f.arity == 3 {
            if let Some(w) = check_1cocycle(spec, &f).map_err(|e| e.to_string())? {
                return Err(format!("cochain is not a cocycle: {w}"));
            }
        }
    }
    let report = invariant::batch_invariants(&words, &t, &f).map_err(|e| e.to_string())?;
    for (word, psi) in &report.rows {
        println!("{word:<32} {psi}");
    }
    println!(
        "{} braids, {} distinct polynomials, {} distinct coloring counts",
        report.rows.len(),
        report.distinct_polynomials,
        report.distinct_coloring_counts
    );
    if let Some(csv) = &args.csv {
        let p = f.modulus;
        let mut out = String::from("braid,p");
        for a in 0..p {
            out.push_str(&format!(",c{a}"));
        }
        out.push('\n');
        for (word, psi) in &report.rows {
            out.push_str(&format!("\"{word}\",{p}"));
            for c in &psi.coefficients {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        std::fs::write(csv, out).map_err(|e| e.to_string())?;
    }
    Ok(())
}
