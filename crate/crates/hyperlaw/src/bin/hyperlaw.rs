//! Command-line surface of the workbench. The only place with I/O: file
//! formats in, reports (human text or stable JSON) out.
//!
//! Exit codes: 0 success; 1 when `--fail-on-counterexample` is set and a
//! counterexample verdict was produced; 2 on usage, parse, or validation
//! errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hyperlaw::enumeration::{
    enumerate_stream, gen_coset, gen_union, hunt_converse, EnumerationMode, EnumerationQuery,
    HuntOutcome,
};
use hyperlaw::format::{parse, serialize_compact, serialize_json, TableDocument};
use hyperlaw::ideals::{enumerate_ideals, IdealKind};
use hyperlaw::laws::LawId;
use hyperlaw::report::{CertificateEntry, LawEntry, StructureReport, TheoremEntry};
use hyperlaw::table::HyperTable;
use hyperlaw::theorems::{
    check_converse, run_all, run_theorem, TheoremId, TheoremOptions, TheoremOutcome, TheoremVerdict,
};

#[derive(Parser)]
#[command(
    name = "hyperlaw",
    version,
    about = "Verification and enumeration workbench for finite LA-semihypergroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a table: laws, identities, intra-regularity, hyperideal counts
    Check {
        file: PathBuf,
        /// Machine-readable report (byte-stable for equal inputs)
        #[arg(long)]
        json: bool,
        /// Append the theorem verdict section
        #[arg(long)]
        theorems: bool,
        /// T9: read the premise as the per-element disjunction
        #[arg(long)]
        strict_t9: bool,
        /// T14: read e = a'∘a as membership instead of set equality
        #[arg(long)]
        membership_t14: bool,
        /// Exit 1 if any theorem verdict is a counterexample
        #[arg(long)]
        fail_on_counterexample: bool,
    },
    /// List the hyperideals of a table
    Ideals {
        file: PathBuf,
        /// Hyperideal kind to enumerate
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// Enumerate every kind
        #[arg(long)]
        all_kinds: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run theorem checks (or converse checks) against a table
    Verify {
        file: PathBuf,
        /// `all` or a theorem id such as `T10`
        #[arg(long)]
        theorem: String,
        /// Check the converse direction (T10/T11 only)
        #[arg(long)]
        converse: bool,
        #[arg(long)]
        strict_t9: bool,
        #[arg(long)]
        membership_t14: bool,
        #[arg(long)]
        fail_on_counterexample: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate LA-semihypergroups of a given order
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Extra filters: laws or structure flags (repeatable)
        #[arg(long = "filter", value_enum)]
        filters: Vec<FilterArg>,
        /// Draw this many random tables instead of the exhaustive scan
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit only canonical representatives
        #[arg(long)]
        canonical: bool,
        /// Print only the number of matching tables
        #[arg(long)]
        count_only: bool,
        #[arg(long, env = "HYPERLAW_JOBS", default_value_t = 1)]
        jobs: usize,
        /// One JSON table document per line
        #[arg(long)]
        json: bool,
    },
    /// Random search for tables witnessing a converse failure
    Hunt {
        /// `T10-converse` or `T11-converse`
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        order: usize,
        /// Number of candidate structures to draw
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Generate a table from a modular family
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Difference-coset hyperoperation on Z_n: x∘y = (y−x) + kZ_n
    Coset(GenArgs),
    /// Union hyperoperation on Z_n: x∘y = {x,y} ∪ kZ_n
    Union(GenArgs),
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Write to a file instead of standard output
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Emit the JSON document format
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Sub,
    Left,
    Right,
    TwoSided,
    Bi,
    GeneralizedBi,
    Interior,
    Quasi,
    OneTwo,
    Semiprime,
    Idempotent,
}

impl KindArg {
    fn kind(self) -> IdealKind {
        match self {
            KindArg::Sub => IdealKind::Sub,
            KindArg::Left => IdealKind::Left,
            KindArg::Right => IdealKind::Right,
            KindArg::TwoSided => IdealKind::TwoSided,
            KindArg::Bi => IdealKind::Bi,
            KindArg::GeneralizedBi => IdealKind::GeneralizedBi,
            KindArg::Interior => IdealKind::Interior,
            KindArg::Quasi => IdealKind::Quasi,
            KindArg::OneTwo => IdealKind::OneTwo,
            KindArg::Semiprime => IdealKind::Semiprime,
            KindArg::Idempotent => IdealKind::Idempotent,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    /// Require a pure left identity
    PureLeftIdentity,
    /// Require a left identity
    LeftIdentity,
    /// Keep only intra-regular tables
    IntraRegular,
    /// Keep only tables that are NOT intra-regular
    NotIntraRegular,
    Medial,
    Paramedial,
    Associative,
    Commutative,
    LeftExchange,
    SemihypergroupCriterion,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load(file: &PathBuf) -> Result<HyperTable, String> {
    let text =
        fs::read_to_string(file).map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn exit_for(counterexamples: bool, fail_flag: bool) -> ExitCode {
    if counterexamples && fail_flag {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Check {
            file,
            json,
            theorems,
            strict_t9,
            membership_t14,
            fail_on_counterexample,
        } => {
            let t = load(&file)?;
            let opts = TheoremOptions {
                strict_t9,
                membership_t14,
            };
            let mut report = StructureReport::build(&t);
            let mut skipped_theorems = None;
            if theorems {
                match report.clone().with_theorems(&t, opts) {
                    Ok(with) => report = with,
                    Err(e) => skipped_theorems = Some(e.to_string()),
                }
            }
            let found = report
                .theorems
                .as_ref()
                .is_some_and(|entries| entries.iter().any(|e| e.outcome == "counterexample"));
            if json {
                println!("{}", report.to_json());
            } else {
                print_check(&file, &report, skipped_theorems.as_deref());
            }
            Ok(exit_for(found, fail_on_counterexample))
        }

        Command::Ideals {
            file,
            kind,
            all_kinds,
            json,
        } => {
            let t = load(&file)?;
            let kinds: Vec<IdealKind> = if all_kinds {
                IdealKind::ALL.to_vec()
            } else if let Some(k) = kind {
                vec![k.kind()]
            } else {
                return Err("pass --kind <KIND> or --all-kinds".to_string());
            };
            let mut sections = Vec::new();
            for k in kinds {
                let ideals = enumerate_ideals(&t, k).map_err(|e| e.to_string())?;
                sections.push((k, ideals));
            }
            if json {
                let doc = serde_json::json!({
                    "order": t.order(),
                    "elements": t.labels(),
                    "kinds": sections
                        .iter()
                        .map(|(k, ideals)| {
                            serde_json::json!({
                                "kind": k.name(),
                                "count": ideals.len(),
                                "ideals": ideals
                                    .iter()
                                    .map(|&m| m.iter().map(|i| t.label(i)).collect::<Vec<_>>())
                                    .collect::<Vec<_>>(),
                            })
                        })
                        .collect::<Vec<_>>(),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("valid json")
                );
            } else {
                for (k, ideals) in &sections {
                    let rendered: Vec<String> = ideals.iter().map(|&m| t.format_mask(m)).collect();
                    println!("{} ({}): {}", k.name(), ideals.len(), rendered.join(", "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            file,
            theorem,
            converse,
            strict_t9,
            membership_t14,
            fail_on_counterexample,
            json,
        } => {
            let t = load(&file)?;
            let opts = TheoremOptions {
                strict_t9,
                membership_t14,
            };
            let verdicts: Vec<TheoremVerdict> = if converse {
                let ids: Vec<TheoremId> = if theorem == "all" {
                    vec![TheoremId::T10, TheoremId::T11]
                } else {
                    vec![parse_theorem_id(&theorem)?]
                };
                ids.into_iter()
                    .map(|id| check_converse(&t, id, opts).map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?
            } else if theorem == "all" {
                run_all(&t, opts).map_err(|e| e.to_string())?
            } else {
                vec![run_theorem(&t, parse_theorem_id(&theorem)?, opts)
                    .map_err(|e| e.to_string())?]
            };
            let found = verdicts.iter().any(|v| v.outcome.is_counterexample());
            if json {
                let entries: Vec<TheoremEntry> = verdicts.iter().map(TheoremEntry::new).collect();
                let doc = serde_json::json!({
                    "converse": converse,
                    "verdicts": entries,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("valid json")
                );
            } else {
                for v in &verdicts {
                    println!("{}", describe_verdict(&t, v, converse));
                }
            }
            Ok(exit_for(found, fail_on_counterexample))
        }

        Command::Enumerate {
            order,
            filters,
            sample,
            seed,
            canonical,
            count_only,
            jobs,
            json,
        } => {
            let mut q = EnumerationQuery::exhaustive(order);
            q.jobs = jobs;
            q.canonical_only = canonical;
            if let Some(count) = sample {
                q.mode = EnumerationMode::Sample { count, seed };
            }
            for f in filters {
                apply_filter(&mut q, f);
            }
            let mut emitted = 0u64;
            let summary = enumerate_stream(&q, |t| {
                emitted += 1;
                if count_only {
                    return;
                }
                if json {
                    let doc = TableDocument::from_table(t);
                    println!(
                        "{}",
                        serde_json::to_string(&doc).expect("document serializes")
                    );
                } else {
                    println!("{}", serialize_compact(t));
                }
            })
            .map_err(|e| e.to_string())?;
            if count_only {
                println!("{emitted}");
            }
            eprintln!(
                "nodes={} law-ok={} emitted={}",
                summary.nodes, summary.law_ok, summary.emitted
            );
            Ok(ExitCode::SUCCESS)
        }

        Command::Hunt {
            theorem,
            order,
            budget,
            seed,
            json,
        } => {
            let id = match theorem.as_str() {
                "T10-converse" => TheoremId::T10,
                "T11-converse" => TheoremId::T11,
                other => {
                    return Err(format!(
                        "unknown hunt target {other:?}; use T10-converse or T11-converse"
                    ))
                }
            };
            let outcome = hunt_converse(id, order, budget, seed).map_err(|e| e.to_string())?;
            print_hunt(&outcome, json);
            Ok(ExitCode::SUCCESS)
        }

        Command::Gen { family } => {
            let (args, t) = match family {
                GenFamily::Coset(args) => {
                    let t = gen_coset(args.n, args.k).map_err(|e| e.to_string())?;
                    (args, t)
                }
                GenFamily::Union(args) => {
                    let t = gen_union(args.n, args.k).map_err(|e| e.to_string())?;
                    (args, t)
                }
            };
            let rendered = if args.json {
                let mut s = serialize_json(&t);
                s.push('\n');
                s
            } else {
                serialize_compact(&t)
            };
            match &args.output {
                Some(path) => fs::write(path, rendered)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => print!("{rendered}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_theorem_id(s: &str) -> Result<TheoremId, String> {
    TheoremId::parse(s).ok_or_else(|| format!("unknown theorem id {s:?}; expected T1..T25c"))
}

fn apply_filter(q: &mut EnumerationQuery, f: FilterArg) {
    let mut require_law = |law: LawId| {
        if !q.laws.contains(&law) {
            q.laws.push(law);
        }
    };
    match f {
        FilterArg::PureLeftIdentity => q.require_pure_left_identity = true,
        FilterArg::LeftIdentity => q.require_left_identity = true,
        FilterArg::IntraRegular => q.intra_regular = Some(true),
        FilterArg::NotIntraRegular => q.intra_regular = Some(false),
        FilterArg::Medial => require_law(LawId::Medial),
        FilterArg::Paramedial => require_law(LawId::Paramedial),
        FilterArg::Associative => require_law(LawId::Associative),
        FilterArg::Commutative => require_law(LawId::Commutative),
        FilterArg::LeftExchange => require_law(LawId::LeftExchange),
        FilterArg::SemihypergroupCriterion => require_law(LawId::SemihypergroupCriterion),
    }
}

fn print_check(file: &Path, report: &StructureReport, skipped_theorems: Option<&str>) {
    println!(
        "{}: order {}, elements {}",
        file.display(),
        report.order,
        report.elements.join(",")
    );
    println!("laws:");
    let law_line = |name: &str, entry: &LawEntry| {
        if entry.holds {
            println!("  {name}: holds");
        } else {
            let w = entry.witness.as_ref().expect("failing law has witness");
            println!(
                "  {name}: fails at ({}) with {{{}}} != {{{}}}",
                w.elements.join(","),
                w.lhs.join(","),
                w.rhs.join(",")
            );
        }
    };
    law_line("left-invertive", &report.laws.left_invertive);
    law_line("medial", &report.laws.medial);
    law_line("paramedial", &report.laws.paramedial);
    law_line("associative", &report.laws.associative);
    law_line("commutative", &report.laws.commutative);
    law_line("left-exchange", &report.laws.left_exchange);
    law_line(
        "semihypergroup-criterion",
        &report.laws.semihypergroup_criterion,
    );
    let ids = &report.identities;
    println!(
        "identities: pure left identity: {}; left identities: [{}]; zero: {}",
        ids.pure_left_identity.as_deref().unwrap_or("none"),
        ids.left_identities.join(","),
        ids.zero.as_deref().unwrap_or("none")
    );
    match &report.intra_regular.failing_element {
        None => println!("intra-regular: yes"),
        Some(e) => println!("intra-regular: no (failing element {e})"),
    }
    if let Some(inv) = &report.invertibility {
        println!(
            "invertibility (identity {}): left={} right={} pure-left={} pure-right={}",
            inv.identity,
            inv.left_invertible,
            inv.right_invertible,
            inv.pure_left_invertible,
            inv.pure_right_invertible
        );
    }
    if let Some(c) = &report.ideal_counts {
        println!(
            "hyperideal counts: sub={} left={} right={} two-sided={} bi={} generalized-bi={} \
             interior={} quasi={} one-two={} semiprime={} idempotent={}",
            c.sub,
            c.left,
            c.right,
            c.two_sided,
            c.bi,
            c.generalized_bi,
            c.interior,
            c.quasi,
            c.one_two,
            c.semiprime,
            c.idempotent
        );
    }
    if let Some(reason) = skipped_theorems {
        println!("theorems: skipped ({reason})");
    } else if let Some(entries) = &report.theorems {
        println!("theorems:");
        for e in entries {
            match e.outcome.as_str() {
                "holds" => println!("  {}: holds", e.id),
                "vacuous" => {
                    println!(
                        "  {}: vacuous ({})",
                        e.id,
                        e.reason.as_deref().unwrap_or("")
                    )
                }
                _ => println!(
                    "  {}: counterexample ({})",
                    e.id,
                    e.certificate
                        .as_ref()
                        .map(|c| c.equation.as_str())
                        .unwrap_or("")
                ),
            }
        }
    }
}

fn describe_verdict(t: &HyperTable, v: &TheoremVerdict, converse: bool) -> String {
    let id = if converse {
        format!("{}-converse", v.id.name())
    } else {
        v.id.name().to_string()
    };
    let mut line = match &v.outcome {
        TheoremOutcome::Holds => format!("{id}: holds"),
        TheoremOutcome::Vacuous { reason } => format!("{id}: vacuous ({reason})"),
        TheoremOutcome::Counterexample(cert) => {
            let mut parts = vec![cert.equation.clone()];
            if let Some(d) = cert.direction {
                parts.push(format!("direction {}", d.name()));
            }
            if !cert.subsets.is_empty() {
                let subsets: Vec<String> = cert.subsets.iter().map(|&s| t.format_mask(s)).collect();
                parts.push(format!("subsets {}", subsets.join(", ")));
            }
            if !cert.elements.is_empty() {
                let elems: Vec<&str> = cert.elements.iter().map(|&i| t.label(i)).collect();
                parts.push(format!("elements {}", elems.join(",")));
            }
            if let (Some(l), Some(r)) = (cert.lhs, cert.rhs) {
                parts.push(format!("{} != {}", t.format_mask(l), t.format_mask(r)));
            }
            format!("{id}: counterexample — {}", parts.join("; "))
        }
    };
    for note in &v.notes {
        line.push_str(&format!("\n  note: {note}"));
    }
    line
}

fn print_hunt(outcome: &HuntOutcome, json: bool) {
    if json {
        let doc = serde_json::json!({
            "found": outcome.table.is_some(),
            "candidates": outcome.candidates,
            "distinct": outcome.distinct,
            "table": outcome.table.as_ref().map(TableDocument::from_table),
            "certificate": outcome.certificate.as_deref().map(CertificateEntry::new),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("valid json")
        );
        return;
    }
    match &outcome.table {
        Some(t) => {
            println!(
                "counterexample found after {} candidates ({} distinct up to isomorphism):",
                outcome.candidates, outcome.distinct
            );
            print!("{}", serialize_compact(t));
            if let Some(cert) = &outcome.certificate {
                let subsets: Vec<String> = cert.subsets.iter().map(|&s| t.format_mask(s)).collect();
                println!("equation witnesses: {}", subsets.join(", "));
            }
        }
        None => println!(
            "budget exhausted after {} candidates ({} distinct); no counterexample found",
            outcome.candidates, outcome.distinct
        ),
    }
}
