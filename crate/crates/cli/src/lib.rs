//! Command-line front end for `ncpart`.
//!
//! [`run`] takes the argument vector and explicit streams so the whole
//! surface can be driven from tests without spawning a process.

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::{self, BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncpart::oracle::InverseTable;
use ncpart::{PartitionChain, SetPartition};

pub mod render;
pub mod verify;

/// Exit status for a clean run.
pub const EXIT_OK: i32 = 0;
/// Exit status for bad flags, parameters or input lines.
pub const EXIT_USAGE: i32 = 1;
/// Exit status when `verify` finds a mismatch.
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ncpart", version, about = "Enumerate and count non-crossing set partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the number of objects in a family.
    Count {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        params: Params,
    },
    /// Print every object of a family, one per line, in lexicographic order.
    Enumerate {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Print rows 0..=n of the box-count triangle.
    Triangle {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        n: usize,
    },
    /// Map objects read from stdin, one per line.
    Biject {
        #[arg(value_enum)]
        direction: Direction,
        #[arg(short)]
        m: Option<usize>,
        #[arg(short)]
        p: Option<usize>,
        #[arg(short)]
        q: Option<usize>,
        /// Invert through a table built from the forward map (fold, tuple2mult).
        #[arg(long)]
        lookup: bool,
    },
    /// Convert between planar p-partitions and full p-ary trees on stdin.
    Tree {
        #[arg(long, conflicts_with = "to_partition", required_unless_present = "to_partition")]
        to_tree: bool,
        #[arg(long)]
        to_partition: bool,
        #[arg(short)]
        p: usize,
        /// Print trees as indented outlines instead of preorder strings.
        #[arg(long, requires = "to_tree")]
        indent: bool,
    },
    /// Draw the arc diagram of a partition or a chain (read from stdin if omitted).
    Render {
        object: Option<String>,
        #[arg(long, value_enum, default_value_t = RenderFormat::Text)]
        format: RenderFormat,
        /// Draw the comb partition I_R below the line; needs the period -m.
        #[arg(long, value_name = "R", requires = "m")]
        comb: Option<usize>,
        #[arg(short)]
        m: Option<usize>,
    },
    /// Run the identity suite on every case up to the given ground-set size.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_points: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Nc,
    Ncp,
    Multiple,
    Chains,
    Double,
    Mtuple,
}

#[derive(Debug, Clone, Copy, Args)]
struct Params {
    #[arg(short)]
    p: Option<usize>,
    #[arg(short)]
    q: Option<usize>,
    #[arg(short)]
    m: Option<usize>,
    #[arg(short)]
    n: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Text,
    #[value(alias = "json-lines", alias = "jsonl")]
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Text,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Split,
    Merge,
    Unfold,
    Fold,
    #[value(name = "mult2tuple")]
    MultToTuple,
    #[value(name = "tuple2mult")]
    TupleToMult,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<ncpart::Error> for Failure {
    fn from(e: ncpart::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one invocation. `args` includes the program name. Returns the exit
/// status; diagnostics go to `stderr`.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = if color { e.render().ansi().to_string() } else { e.render().to_string() };
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let outcome = dispatch(cli.command, stdin, stdout, color).and_then(|code| {
        stdout.flush()?;
        Ok(code)
    });
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "ncpart: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "ncpart: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write, color: bool) -> Outcome {
    match command {
        Command::Count { family, params } => {
            let count = match Source::new(family, params)? {
                Source::Partitions(it) => it.count(),
                Source::Chains(it) => it.count(),
            };
            writeln!(out, "{count}")?;
        }
        Command::Enumerate { family, params, format } => enumerate(family, params, format, out)?,
        Command::Triangle { p, n } => {
            let tri = ncpart::Triangle::build(p, n)?;
            for row in tri.rows() {
                let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
        Command::Biject { direction, m, p, q, lookup } => biject(direction, m, p, q, lookup, stdin, out)?,
        Command::Tree { to_tree, p, indent, .. } => {
            if p == 0 {
                return Err(Failure::Usage("-p must be at least 1".into()));
            }
            map_lines(stdin, out, |line| {
                if to_tree {
                    let tree = ncpart::tree_of_partition(&line.parse()?, p)?;
                    Ok(if indent { tree.render_text().trim_end().to_string() } else { tree.serialize() })
                } else {
                    Ok(ncpart::partition_of_tree(&ncpart::PTree::parse(line, p)?).to_string())
                }
            })?;
        }
        Command::Render { object, format, comb, m } => {
            let text = match object {
                Some(s) => s,
                None => {
                    let mut line = String::new();
                    stdin.read_line(&mut line)?;
                    line
                }
            };
            let diagram = render::Diagram::from_input(text.trim(), comb.zip(m))?;
            match format {
                RenderFormat::Text => write!(out, "{}", diagram.to_text(color))?,
                RenderFormat::Svg => write!(out, "{}", diagram.to_svg())?,
            }
        }
        Command::Verify { max_points } => {
            let report = verify::verify_all(max_points);
            write!(out, "{}", report.table(color))?;
            return Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY });
        }
    }
    Ok(EXIT_OK)
}

enum Source {
    Partitions(ncpart::enumerate::NcPartitions),
    Chains(ncpart::enumerate::Chains),
}

impl Source {
    fn new(family: Family, params: Params) -> Result<Source, Failure> {
        let (needed, forbidden): (&[char], &[char]) = match family {
            Family::Nc => (&['n'], &['p', 'q', 'm']),
            Family::Ncp | Family::Multiple => (&['p', 'n'], &['q', 'm']),
            Family::Chains => (&['n', 'm'], &['p', 'q']),
            Family::Double => (&['q', 'n'], &['p', 'm']),
            Family::Mtuple => (&['m', 'p', 'n'], &['q']),
        };
        let get = |c: char| match c {
            'p' => params.p,
            'q' => params.q,
            'm' => params.m,
            _ => params.n,
        };
        let name = family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        for &c in needed {
            if get(c).is_none() {
                return Err(Failure::Usage(format!("family {name} needs -{c}")));
            }
        }
        for &c in forbidden {
            if get(c).is_some() {
                return Err(Failure::Usage(format!("family {name} does not take -{c}")));
            }
        }
        let v = |c: char| get(c).unwrap_or(0);
        Ok(match family {
            Family::Nc => Source::Partitions(ncpart::enum_nc(v('n'))),
            Family::Ncp => Source::Partitions(ncpart::enum_nc_p(v('p'), v('n'))?),
            Family::Multiple => Source::Partitions(ncpart::enum_multiple(v('p'), v('n'))?),
            Family::Chains => Source::Chains(ncpart::enum_chains(v('n'), v('m'))?),
            Family::Double => Source::Chains(ncpart::enum_double(v('q'), v('n'))?),
            Family::Mtuple => Source::Chains(ncpart::enum_mtuple_p(v('m'), v('p'), v('n'))?),
        })
    }
}

fn blocks_json(p: &SetPartition) -> serde_json::Value {
    serde_json::Value::from(p.blocks().to_vec())
}

fn enumerate(family: Family, params: Params, format: ListFormat, out: &mut dyn Write) -> Result<(), Failure> {
    let name = family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    match (Source::new(family, params)?, format) {
        (Source::Partitions(it), ListFormat::Text) => {
            for p in it {
                writeln!(out, "{p}")?;
            }
        }
        (Source::Chains(it), ListFormat::Text) => {
            for c in it {
                writeln!(out, "{c}")?;
            }
        }
        (Source::Partitions(it), ListFormat::Json) => {
            for p in it {
                let v = serde_json::json!({ "family": name, "n": p.n(), "blocks": blocks_json(&p) });
                writeln!(out, "{v}")?;
            }
        }
        (Source::Chains(it), ListFormat::Json) => {
            for c in it {
                let parts: Vec<serde_json::Value> = c.parts().iter().map(blocks_json).collect();
                let v = serde_json::json!({
                    "family": name,
                    "n": c.n(),
                    "blocks": blocks_json(c.finest()),
                    "parts": parts,
                });
                writeln!(out, "{v}")?;
            }
        }
    }
    Ok(())
}

fn map_lines<F>(input: &mut dyn BufRead, out: &mut dyn Write, mut f: F) -> Result<(), Failure>
where
    F: FnMut(&str) -> ncpart::Result<String>,
{
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        match f(line.trim()) {
            Ok(s) => writeln!(out, "{s}")?,
            Err(e) => return Err(Failure::Usage(format!("line {}: {e}", i + 1))),
        }
    }
    Ok(())
}

fn require(flag: char, v: Option<usize>, direction: &str) -> Result<usize, Failure> {
    match v {
        Some(0) => Err(Failure::Usage(format!("-{flag} must be at least 1"))),
        Some(x) => Ok(x),
        None => Err(Failure::Usage(format!("{direction} needs -{flag}"))),
    }
}

fn biject(
    direction: Direction,
    m: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    lookup: bool,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    if lookup && !matches!(direction, Direction::Fold | Direction::TupleToMult) {
        return Err(Failure::Usage("--lookup applies only to fold and tuple2mult".into()));
    }
    let name = direction.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    // tables keyed by the ground-set size of the incoming chain
    let mut tables: HashMap<usize, InverseTable> = HashMap::new();
    let mut via_table = |chain: &PartitionChain, build: &dyn Fn(usize) -> ncpart::Result<InverseTable>, unit: usize| {
        if !chain.n().is_multiple_of(unit) {
            return Err(ncpart::Error::NotDivisible { n: chain.n(), k: unit });
        }
        let size = chain.n() / unit;
        if let std::collections::hash_map::Entry::Vacant(e) = tables.entry(size) {
            e.insert(build(size)?);
        }
        tables[&size]
            .get(chain)
            .map(|x| x.to_string())
            .ok_or_else(|| ncpart::Error::NotInDomain(format!("{chain} is not in the image")))
    };
    match direction {
        Direction::Split => map_lines(stdin, out, |l| Ok(ncpart::split_even(&l.parse()?)?.to_string())),
        Direction::Merge => {
            let q = require('q', q, &name)?;
            map_lines(stdin, out, |l| Ok(ncpart::merge_even(&l.parse()?, q)?.to_string()))
        }
        Direction::Unfold => {
            let m = require('m', m, &name)?;
            map_lines(stdin, out, |l| Ok(ncpart::unfold_m(&l.parse()?, m)?.to_string()))
        }
        Direction::Fold => {
            let m = require('m', m, &name)?;
            let p = require('p', p, &name)?;
            map_lines(stdin, out, |l| {
                let chain: PartitionChain = l.parse()?;
                if lookup {
                    via_table(&chain, &|n| InverseTable::for_unfold(m, p, n), p)
                } else {
                    Ok(ncpart::fold_m(&chain, m, p)?.to_string())
                }
            })
        }
        Direction::MultToTuple => {
            let p = require('p', p, &name)?;
            map_lines(stdin, out, |l| Ok(ncpart::multiple_to_tuple(&l.parse()?, p)?.to_string()))
        }
        Direction::TupleToMult => {
            let p = require('p', p, &name)?;
            map_lines(stdin, out, |l| {
                let chain: PartitionChain = l.parse()?;
                if lookup {
                    via_table(&chain, &|n| InverseTable::for_multiples(p, n), 1)
                } else {
                    Ok(ncpart::tuple_to_multiple(&chain, p)?.to_string())
                }
            })
        }
    }
}
