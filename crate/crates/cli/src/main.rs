//! tetrabox: exact computations in the three-point sl2 loop algebra.

mod parse;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use tetrabox_core::loop_alg::{
    decompose_nine, is_like, GeneratorId, LoopElem, GRID_COLS, GRID_ROWS,
};
use tetrabox_core::onsager::{coords, Basis};
use tetrabox_core::report::Report;
use tetrabox_core::verify::{run_suite, SUITES};

use parse::Value;

#[derive(Parser)]
#[command(name = "tetrabox", version, about = "Exact arithmetic in the three-point sl2 loop algebra realization of the tetrahedron algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Ab,
    Xyz,
    Delta,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Ab => Basis::Ab,
            BasisArg::Xyz => Basis::Xyz,
            BasisArg::Delta => Basis::Delta,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Lie bracket of two loop elements
    Bracket {
        lhs: String,
        rhs: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Apply the order-3 automorphism
    Prime {
        expr: String,
        /// number of applications
        #[arg(long, default_value = "1")]
        prime: u8,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Nine-way grid decomposition (rows X12/X23/X31, columns O/O'/O'')
    Decompose {
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Coordinates in a basis of a (primed) Onsager subalgebra
    Coords {
        expr: String,
        #[arg(long, value_enum, default_value = "ab")]
        basis: BasisArg,
        /// prime level of the subalgebra (0, 1, or 2)
        #[arg(long, default_value = "0")]
        prime: u8,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Test whether an element is x_ij-like (in the span of one generator)
    Like {
        /// generator name, e.g. x12 or x03
        generator: String,
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// index depth for sequence and table sweeps
        #[arg(long, default_value = "16")]
        max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn read_expr(arg: &str) -> Result<String, String> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        Ok(buf.trim().to_string())
    } else {
        Ok(arg.to_string())
    }
}

fn parse_arg(arg: &str) -> Result<Value, ExitCode> {
    let text = read_expr(arg).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })?;
    parse::parse(&text).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn parse_loop_arg(arg: &str) -> Result<LoopElem, ExitCode> {
    parse_arg(arg)?.into_loop().map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn loop_json(u: &LoopElem) -> serde_json::Value {
    json!({
        "f": u.f.to_string(),
        "g": u.g.to_string(),
        "h": u.h.to_string(),
    })
}

fn print_loop(u: &LoopElem, format: Format) {
    match format {
        Format::Text => println!("{u}"),
        Format::Json => println!("{}", loop_json(u)),
    }
}

fn print_report(rep: &Report, format: Format) {
    match format {
        Format::Text => {
            for c in &rep.checks {
                if !c.pass {
                    println!("FAIL {}: {} != {}", c.name, c.lhs, c.rhs);
                }
            }
            let failed = rep.failures().count();
            println!(
                "{} checks, {} failed: {}",
                rep.checks.len(),
                failed,
                if failed == 0 { "PASS" } else { "FAIL" }
            );
        }
        Format::Json => println!("{}", serde_json::to_string(rep).expect("report serializes")),
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Bracket { lhs, rhs, format } => {
            let (u, v) = match (parse_loop_arg(&lhs), parse_loop_arg(&rhs)) {
                (Ok(u), Ok(v)) => (u, v),
                (Err(c), _) | (_, Err(c)) => return c,
            };
            print_loop(&tetrabox_core::loop_alg::bracket(&u, &v), format);
            ExitCode::SUCCESS
        }
        Command::Prime { expr, prime, format } => {
            let v = match parse_arg(&expr) {
                Ok(v) => v,
                Err(c) => return c,
            };
            match v {
                Value::Scalar(a) => {
                    let r = a.prime(prime as u32);
                    match format {
                        Format::Text => println!("{r}"),
                        Format::Json => println!("{}", json!({ "scalar": r.to_string() })),
                    }
                }
                Value::Loop(u) => print_loop(&u.prime(prime as u32), format),
            }
            ExitCode::SUCCESS
        }
        Command::Decompose { expr, format } => {
            let u = match parse_loop_arg(&expr) {
                Ok(u) => u,
                Err(c) => return c,
            };
            let grid = decompose_nine(&u);
            match format {
                Format::Text => {
                    for (r, row) in GRID_ROWS.iter().enumerate() {
                        for (c, col) in GRID_COLS.iter().enumerate() {
                            println!("{row} | {col:3} : {}", grid.entries[r][c]);
                        }
                    }
                }
                Format::Json => {
                    let mut rows = serde_json::Map::new();
                    for (r, row) in GRID_ROWS.iter().enumerate() {
                        let mut cols = serde_json::Map::new();
                        for (c, col) in GRID_COLS.iter().enumerate() {
                            cols.insert(col.to_string(), loop_json(&grid.entries[r][c]));
                        }
                        rows.insert(row.to_string(), cols.into());
                    }
                    println!("{}", serde_json::Value::from(rows));
                }
            }
            ExitCode::SUCCESS
        }
        Command::Coords { expr, basis, prime, format } => {
            if prime > 2 {
                eprintln!("error: --prime must be 0, 1, or 2");
                return ExitCode::from(2);
            }
            let u = match parse_loop_arg(&expr) {
                Ok(u) => u,
                Err(c) => return c,
            };
            match coords(&u, basis.into(), prime) {
                Ok(c) => {
                    match format {
                        Format::Text => println!("{c}"),
                        Format::Json => {
                            println!("{}", serde_json::to_string(&c).expect("coords serialize"))
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Like { generator, expr, format } => {
            let id = match parse_generator(&generator) {
                Some(id) => id,
                None => {
                    eprintln!("error: unknown generator '{generator}' (expected e.g. x12, x03)");
                    return ExitCode::from(2);
                }
            };
            let u = match parse_loop_arg(&expr) {
                Ok(u) => u,
                Err(c) => return c,
            };
            let ok = is_like(id, &u);
            match format {
                Format::Text => println!("{ok}"),
                Format::Json => println!("{}", json!({ "generator": id.to_string(), "like": ok })),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Verify { suite, max, format } => match run_suite(&suite, max) {
            Some(rep) => {
                print_report(&rep, format);
                if rep.all_pass() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            None => {
                eprintln!("error: unknown suite '{suite}' (expected one of {})", SUITES.join(", "));
                ExitCode::from(2)
            }
        },
    }
}

fn parse_generator(name: &str) -> Option<GeneratorId> {
    let digits = name.strip_prefix('x')?;
    let d: Vec<u32> = digits.chars().filter_map(|c| c.to_digit(10)).collect();
    if digits.len() != 2 || d.len() != 2 {
        return None;
    }
    GeneratorId::new(d[0] as u8, d[1] as u8).ok()
}

fn main() -> ExitCode {
    run(Cli::parse())
}
