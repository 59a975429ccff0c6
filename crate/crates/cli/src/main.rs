//! Command-line driver: enumerate extended form class groups, multiply and
//! invert classes, test equivalences, project between levels, sweep the
//! order oracles, and emit Galois action data or ring-class quotients.
//!
//! Exit codes: 0 on success, 2 on validation errors (the message names the
//! violated precondition), 1 on internal assertion failures such as an
//! oracle mismatch.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use formclass::classgroup::{order_via_pairs, order_via_units};
use formclass::forms::{
    gamma0_equivalent, gamma1_equivalent, parse_triple, t_equivalent,
};
use formclass::galois::action_datum;
use formclass::quadfield::is_fundamental;
use formclass::{ClassGroup, Error, Field, BQF};

#[derive(Parser)]
#[command(name = "formclass", version, about = "Extended form class groups of imaginary quadratic fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the classes of C_N(d_K), optionally as JSON or with the table
    Enumerate {
        #[arg(long, allow_hyphen_values = true)]
        dk: i64,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        table: bool,
    },
    /// Invariant factors of C_N(d_K)
    Structure {
        #[arg(long, allow_hyphen_values = true)]
        dk: i64,
        #[arg(long)]
        level: u32,
    },
    /// Product of two classes given by representative forms
    Multiply {
        #[arg(long, allow_hyphen_values = true)]
        dk: i64,
        #[arg(long)]
        level: u32,
        #[arg(long = "form", allow_hyphen_values = true)]
        forms: Vec<String>,
    },
    /// Inverse of a class given by a representative form
    Invert {
        #[arg(long, allow_hyphen_values = true)]
        dk: i64,
        #[arg(long)]
        level: u32,
        #[arg(long = "form", allow_hyphen_values = true)]
        form: String,
    },
    /// Equivalence of two forms at the level (default: unitriangular mod N
    /// up to sign; --gamma0 for upper triangular; --t for translations)
    Equivalent {
        #[arg(long, allow_hyphen_values = true)]
        dk: i64,
        #[arg(long)]
        level: u32,
        #[arg(long = "form", allow_hyphen_values = true)]
        forms: Vec<String>,
        #[arg(long, conflicts_with = "t")]
        gamma0: bool,
        #[arg(long)]
        t: bool,
    },
    /// Project a class to a divisor level
    Project {
        #[arg(long, allow_hyphen_values = true)]
        dk: i64,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        to: u32,
        #[arg(long = "form", allow_hyphen_values = true)]
        form: String,
    },
    /// Sweep the order oracles over discriminant and level ranges;
    /// any mismatch fails with exit code 1
    Orders {
        #[arg(long = "dk-range", allow_hyphen_values = true)]
        dk_range: String,
        #[arg(long = "level-range")]
        level_range: String,
    },
    /// Galois action data (matrix mod N and class point) for every class
    Galois {
        #[arg(long, allow_hyphen_values = true)]
        dk: i64,
        #[arg(long)]
        level: u32,
    },
    /// Ring-class quotient of C_N(d_K) by the upper-triangular relation
    Ringclass {
        #[arg(long, allow_hyphen_values = true)]
        dk: i64,
        #[arg(long)]
        level: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn class_group(dk: i64, level: u32) -> Result<(Field, ClassGroup), Error> {
    let f = Field::new(dk)?;
    let g = ClassGroup::enumerate(&f, level)?;
    Ok((f, g))
}

fn parse_form(f: &Field, level: u32, s: &str) -> Result<BQF, Error> {
    let (a, b, c) = parse_triple(s)?;
    let q = BQF::new(f, a, b, c)?;
    q.require_level(level)?;
    Ok(q)
}

fn two_forms(f: &Field, level: u32, forms: &[String]) -> Result<(BQF, BQF), Error> {
    if forms.len() != 2 {
        return Err(Error::FormParse(format!(
            "expected exactly two --form arguments, got {}",
            forms.len()
        )));
    }
    Ok((
        parse_form(f, level, &forms[0])?,
        parse_form(f, level, &forms[1])?,
    ))
}

fn structure_string(factors: &[u64]) -> String {
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

fn print_class(g: &ClassGroup, k: usize) {
    let r = g.rep(k);
    let (a, b, c) = r.form().coeffs();
    println!(
        "[{}] ({}, {}, {})  {}  i={} pair=({}, {})",
        k,
        a,
        b,
        c,
        r.form(),
        r.reduced_index(),
        r.pair().u,
        r.pair().v
    );
}

fn run(cmd: Command) -> Result<(), Error> {
    match cmd {
        Command::Enumerate { dk, level, json, table } => {
            let (_, g) = class_group(dk, level)?;
            if json {
                let doc = serde_json::to_string_pretty(&g.to_json(table))
                    .expect("class group serializes");
                println!("{doc}");
            } else {
                println!(
                    "C_{}({}): {} classes, structure {}",
                    level,
                    dk,
                    g.len(),
                    structure_string(&g.group_structure())
                );
                for k in 0..g.len() {
                    print_class(&g, k);
                }
                if table {
                    println!("table:");
                    for row in g.table() {
                        println!(
                            "  {}",
                            row.iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        );
                    }
                }
            }
        }
        Command::Structure { dk, level } => {
            let (_, g) = class_group(dk, level)?;
            println!("{}", structure_string(&g.group_structure()));
        }
        Command::Multiply { dk, level, forms } => {
            let (f, g) = class_group(dk, level)?;
            let (q1, q2) = two_forms(&f, level, &forms)?;
            let k = g.compose_forms(&q1, &q2)?;
            print_class(&g, k);
        }
        Command::Invert { dk, level, form } => {
            let (f, g) = class_group(dk, level)?;
            let q = parse_form(&f, level, &form)?;
            let k = g.inverse(g.class_index(&q)?)?;
            print_class(&g, k);
        }
        Command::Equivalent { dk, level, forms, gamma0, t } => {
            let f = Field::new(dk)?;
            let (q1, q2) = two_forms(&f, level, &forms)?;
            let verdict = if t {
                t_equivalent(&q1, &q2)
            } else if gamma0 {
                gamma0_equivalent(level, &q1, &q2)?
            } else {
                gamma1_equivalent(level, &q1, &q2)?
            };
            println!("{verdict}");
        }
        Command::Project { dk, level, to, form } => {
            let (f, g) = class_group(dk, level)?;
            let target = ClassGroup::enumerate(&f, to)?;
            let q = parse_form(&f, level, &form)?;
            let k = g.project(g.class_index(&q)?, &target)?;
            print_class(&target, k);
        }
        Command::Orders { dk_range, level_range } => {
            let (dlo, dhi) = parse_range_i64(&dk_range)?;
            let (nlo, nhi) = parse_range_u32(&level_range)?;
            let mut checked = 0u32;
            let mut mismatches = Vec::new();
            for d in dlo..=dhi {
                if d >= -4 || !is_fundamental(d) {
                    continue;
                }
                let f = Field::new(d)?;
                for n in nlo..=nhi.max(nlo) {
                    let g = ClassGroup::enumerate(&f, n)?;
                    let by_enum = g.len() as u64;
                    let by_pairs = order_via_pairs(&f, n)?;
                    let by_units = order_via_units(&f, n)?;
                    let ok = by_enum == by_pairs && by_pairs == by_units;
                    println!(
                        "d={d} N={n} enumerate={by_enum} pairs={by_pairs} units={by_units} {}",
                        if ok { "ok" } else { "MISMATCH" }
                    );
                    if !ok {
                        mismatches.push((d, n));
                    }
                    checked += 1;
                }
            }
            println!("checked {checked} groups, {} mismatches", mismatches.len());
            if !mismatches.is_empty() {
                return Err(Error::Internal(format!(
                    "order oracle mismatch at {mismatches:?}"
                )));
            }
        }
        Command::Galois { dk, level } => {
            let (_, g) = class_group(dk, level)?;
            let data: Vec<_> = g.reps().iter().map(action_datum).collect();
            for d in &data {
                println!("{}", d.to_json());
            }
            // separation statistics are informational only
            let mut matrices: Vec<[u64; 4]> = data.iter().map(|d| d.matrix).collect();
            matrices.sort_unstable();
            matrices.dedup();
            let mut pairs: Vec<String> = data
                .iter()
                .map(|d| format!("{:?}|{}", d.matrix, d.omega))
                .collect();
            pairs.sort();
            pairs.dedup();
            eprintln!(
                "classes: {}, distinct matrices: {}, distinct (matrix, omega) pairs: {}",
                g.len(),
                matrices.len(),
                pairs.len()
            );
        }
        Command::Ringclass { dk, level } => {
            let (_, g) = class_group(dk, level)?;
            let q = g.ring_class_quotient()?;
            println!(
                "ring class group at conductor {}: {} classes, structure {}",
                level,
                q.order(),
                structure_string(&q.invariant_factors())
            );
            for (ci, members) in q.classes.iter().enumerate() {
                let forms: Vec<String> = members
                    .iter()
                    .map(|&k| format!("({}, {}, {})", g.rep(k).form().a(), g.rep(k).form().b(), g.rep(k).form().c()))
                    .collect();
                println!("[{}] {}", ci, forms.join(" "));
            }
        }
    }
    Ok(())
}

fn parse_range_i64(s: &str) -> Result<(i64, i64), Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() == 2 {
        if let (Ok(a), Ok(b)) = (parts[0].parse(), parts[1].parse()) {
            return Ok((a, b));
        }
    }
    Err(Error::FormParse(format!("range {s:?}, expected A,B")))
}

fn parse_range_u32(s: &str) -> Result<(u32, u32), Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() == 2 {
        if let (Ok(a), Ok(b)) = (parts[0].parse(), parts[1].parse()) {
            return Ok((a, b));
        }
    }
    Err(Error::FormParse(format!("range {s:?}, expected lo,hi")))
}
