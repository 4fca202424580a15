//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 verification failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bench::{run_bench, write_csv, Algo, BenchConfig};
use crate::detector::{detect_first_z, DetectOutcome};
use crate::gen::{random_string, SplitMix64};
use crate::graph::{build_path_graph, to_dot, to_json};
use crate::model::{Alphabet, LabeledString, Symbol};
use crate::oracle::{normal_form_naive, Strategy};
use crate::reducer::Reducer;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "zreduce", version, about = "Z-normal forms and minimum path graphs of walks")]
pub struct Cli {
    /// Re-check reducer invariants against slow oracles (also Z_DEBUG_VALIDATE=1).
    #[arg(long, global = true)]
    pub debug_validate: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Z-normal form of each input line.
    Reduce {
        #[command(flatten)]
        io: IoArgs,
        /// Feed letters as they are read instead of buffering each line.
        #[arg(long)]
        stream: bool,
    },
    /// Print `Z p1 p2` for the first Z-shape of each line, or `IRREDUCIBLE`.
    Detect {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Print the minimum path graph of each input line.
    Graph {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Differential test of the reducer against the naive normalizer.
    Verify(VerifyArgs),
    /// Time the reducer and the contrast algorithms; writes CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct IoArgs {
    /// Input file, or `-` for standard input.
    #[arg(default_value = "-")]
    pub input: String,
    /// Output file, or `-` for standard output.
    #[arg(short, long, default_value = "-")]
    pub output: String,
    /// Split lines into multi-character labels at this delimiter.
    #[arg(long)]
    pub delimiter: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Check every string up to this length over `--alphabet`.
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Letters to enumerate, one per character.
    #[arg(long, default_value = "ab")]
    pub alphabet: String,
    /// Number of random strings to check.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Longest random string.
    #[arg(long, default_value_t = 64)]
    pub random_max_len: usize,
    #[arg(short, long, default_value = "-")]
    pub output: String,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Algorithms: reducer, naive_oracle, detect_and_contract.
    #[arg(long = "algo", value_delimiter = ',', default_value = "reducer")]
    pub algos: Vec<String>,
    /// Random-string lengths.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Vec<usize>,
    /// Alphabet sizes for random strings.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub sigmas: Vec<usize>,
    /// Adversarial family members `m`.
    #[arg(long, value_delimiter = ',')]
    pub adversarial: Vec<u32>,
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 4096)]
    pub naive_cap: usize,
    #[arg(short, long, default_value = "-")]
    pub output: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) => EXIT_INPUT,
            CliError::Verification(_) => EXIT_VERIFY,
        }
    }
}

fn io_err(e: io::Error) -> CliError {
    CliError::Input(format!("i/o error: {e}"))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let validate = cli.debug_validate || std::env::var("Z_DEBUG_VALIDATE").is_ok_and(|v| v == "1");
    match execute(cli.command, validate, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: Command, validate: bool, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Reduce { io, stream } => with_io(&io.input, &io.output, stdin, stdout, |r, w| {
            if stream {
                reduce_stream(r, w, io.delimiter.as_deref(), validate)
            } else {
                per_line(r, w, io.delimiter.as_deref(), |alpha, line, out| {
                    let nf = reduce_line(line, validate)?;
                    writeln!(out, "{}", decode(alpha, &nf, io.delimiter.as_deref())).map_err(io_err)
                })
            }
        }),
        Command::Detect { io } => with_io(&io.input, &io.output, stdin, stdout, |r, w| {
            per_line(r, w, io.delimiter.as_deref(), |_, line, out| {
                let outcome = detect_first_z(line).map_err(|e| CliError::Input(e.to_string()))?;
                match outcome {
                    DetectOutcome::Found(occ) => writeln!(out, "Z {} {}", occ.p1, occ.p2),
                    DetectOutcome::Irreducible(_) => writeln!(out, "IRREDUCIBLE"),
                }
                .map_err(io_err)
            })
        }),
        Command::Graph { io, format } => with_io(&io.input, &io.output, stdin, stdout, |r, w| {
            per_line(r, w, io.delimiter.as_deref(), |alpha, line, out| {
                let g = build_path_graph(&reduce_line(line, validate)?);
                let text = match format {
                    GraphFormat::Dot => to_dot(&g, alpha),
                    GraphFormat::Json => to_json(&g, alpha).map(|s| s + "\n"),
                }
                .map_err(|e| CliError::Input(e.to_string()))?;
                out.write_all(text.as_bytes()).map_err(io_err)
            })
        }),
        Command::Verify(args) => {
            let mut out = open_output(&args.output, stdout)?;
            let report = verify(&args, |w| {
                let mut red = Reducer::new().with_validation(validate);
                red.feed_all(w.symbols()).and_then(|_| red.finish()).map_err(|e| e.to_string())
            })?;
            let result = write_report(&mut out, &args, &report);
            out.flush().map_err(io_err)?;
            result
        }
        Command::Bench(args) => {
            let cfg = bench_config(&args)?;
            let records = run_bench(&cfg);
            let mut out = open_output(&args.output, stdout)?;
            write_csv(&mut out, &records).map_err(|e| CliError::Input(e.to_string()))?;
            out.flush().map_err(io_err)
        }
    }
}

fn reduce_line(line: &LabeledString, validate: bool) -> Result<LabeledString, CliError> {
    let mut red = Reducer::new().with_validation(validate);
    red.feed_all(line.symbols())
        .and_then(|_| red.finish())
        .map_err(|e| CliError::Verification(e.to_string()))
}

fn decode(alpha: &Alphabet, w: &LabeledString, delimiter: Option<&str>) -> String {
    let res = match delimiter {
        Some(d) => alpha.decode_joined(w, d),
        None => alpha.decode(w),
    };
    res.expect("every output letter came from the input")
}

fn open_output<'a>(path: &str, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>, CliError> {
    if path == "-" {
        Ok(Box::new(BufWriter::new(stdout)))
    } else {
        let f = File::create(PathBuf::from(path)).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
        Ok(Box::new(BufWriter::new(f)))
    }
}

fn with_io<F>(
    input: &str,
    output: &str,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    body: F,
) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn BufRead, &mut dyn Write) -> Result<(), CliError>,
{
    let mut file_reader;
    let reader: &mut dyn BufRead = if input == "-" {
        stdin
    } else {
        let f = File::open(input).map_err(|e| CliError::Input(format!("{input}: {e}")))?;
        file_reader = BufReader::new(f);
        &mut file_reader
    };
    let mut out = open_output(output, stdout)?;
    let result = body(reader, &mut out);
    out.flush().map_err(io_err)?;
    result
}

/// Decodes each line into letters sharing one alphabet and hands it to `f`.
fn per_line<F>(input: &mut dyn BufRead, out: &mut dyn Write, delimiter: Option<&str>, mut f: F) -> Result<(), CliError>
where
    F: FnMut(&Alphabet, &LabeledString, &mut dyn Write) -> Result<(), CliError>,
{
    let mut alpha = Alphabet::new();
    let mut buf = Vec::new();
    let mut line_no = 0;
    loop {
        buf.clear();
        if input.read_until(b'\n', &mut buf).map_err(io_err)? == 0 {
            return Ok(());
        }
        line_no += 1;
        let text = std::str::from_utf8(&buf)
            .map_err(|_| CliError::Input(format!("line {line_no}: invalid UTF-8")))?;
        let text = strip_eol(text);
        let w = match delimiter {
            Some(d) => alpha.encode_tokens(text, d),
            None => alpha.encode_chars(text),
        };
        f(&alpha, &w, out)?;
    }
}

fn strip_eol(s: &str) -> &str {
    let s = s.strip_suffix('\n').unwrap_or(s);
    s.strip_suffix('\r').unwrap_or(s)
}

/// Feeds letters to the reducer as they are decoded; memory is the working string plus one label.
fn reduce_stream(
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    delimiter: Option<&str>,
    validate: bool,
) -> Result<(), CliError> {
    let mut alpha = Alphabet::new();
    let mut red = Reducer::new().with_validation(validate);
    let mut line_no = 1;
    let mut pending: Vec<u8> = Vec::with_capacity(4);
    let mut token = String::new();
    let mut any = false;
    let feed = |alpha: &mut Alphabet, red: &mut Reducer, label: &str| -> Result<(), CliError> {
        let sym: Symbol = alpha.register(label);
        red.feed(sym).map_err(|e| CliError::Verification(e.to_string()))
    };
    for byte in input.bytes() {
        let byte = byte.map_err(io_err)?;
        any = true;
        pending.push(byte);
        let ch = match std::str::from_utf8(&pending) {
            Ok(s) => s.chars().next().expect("non-empty"),
            Err(e) if e.error_len().is_none() => continue,
            Err(_) => return Err(CliError::Input(format!("line {line_no}: invalid UTF-8"))),
        };
        pending.clear();
        if ch == '\n' {
            if token.ends_with('\r') {
                token.pop();
            }
            if let Some(d) = delimiter {
                if !token.is_empty() {
                    feed(&mut alpha, &mut red, &token)?;
                }
                token.clear();
                let nf = red.finish().map_err(|e| CliError::Verification(e.to_string()))?;
                writeln!(out, "{}", alpha.decode_joined(&nf, d).expect("registered")).map_err(io_err)?;
            } else {
                token.clear();
                let nf = red.finish().map_err(|e| CliError::Verification(e.to_string()))?;
                writeln!(out, "{}", alpha.decode(&nf).expect("registered")).map_err(io_err)?;
            }
            red = Reducer::new().with_validation(validate);
            line_no += 1;
            any = false;
            continue;
        }
        match delimiter {
            Some(d) => {
                token.push(ch);
                if token.ends_with(d) {
                    token.truncate(token.len() - d.len());
                    if !token.is_empty() {
                        feed(&mut alpha, &mut red, &token)?;
                    }
                    token.clear();
                }
            }
            None => {
                // hold back a CR until we know whether it ends the line
                if token == "\r" {
                    feed(&mut alpha, &mut red, "\r")?;
                    token.clear();
                }
                if ch == '\r' {
                    token.push(ch);
                } else {
                    feed(&mut alpha, &mut red, ch.encode_utf8(&mut [0; 4]))?;
                }
            }
        }
    }
    if !pending.is_empty() {
        return Err(CliError::Input(format!("line {line_no}: invalid UTF-8")));
    }
    if any {
        if token == "\r" {
            feed(&mut alpha, &mut red, "\r")?;
        } else if delimiter.is_some() && !token.is_empty() {
            feed(&mut alpha, &mut red, &token)?;
        }
        let nf = red.finish().map_err(|e| CliError::Verification(e.to_string()))?;
        writeln!(out, "{}", decode(&alpha, &nf, delimiter)).map_err(io_err)?;
    }
    Ok(())
}

/// Outcome of a differential run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyReport {
    Pass { checked: usize },
    Fail { witness: LabeledString, got: Result<LabeledString, String>, expected: LabeledString },
}

fn expected_form(w: &LabeledString) -> Result<LabeledString, LabeledString> {
    let nf = normal_form_naive(w, Strategy::Leftmost);
    for s in [Strategy::ShortestThenLeftmost, Strategy::Random(w.len() as u64)] {
        if normal_form_naive(w, s) != nf {
            return Err(nf);
        }
    }
    Ok(nf)
}

/// Checks `reduce` against the naive normalizer on every string up to
/// `max_len` and on `random` seeded strings; failures are shrunk by trimming.
pub fn verify<F>(args: &VerifyArgs, reduce: F) -> Result<VerifyReport, CliError>
where
    F: Fn(&LabeledString) -> Result<LabeledString, String>,
{
    let sigma = args.alphabet.chars().count();
    if sigma == 0 {
        return Err(CliError::Usage("--alphabet must not be empty".into()));
    }
    let fails = |w: &LabeledString| match expected_form(w) {
        Ok(nf) => reduce(w).as_ref() != Ok(&nf),
        Err(_) => true,
    };
    let max_len = match (args.max_len, args.random) {
        (None, 0) => Some(10),
        (m, _) => m,
    };
    let mut checked = 0;
    let mut check = |w: LabeledString| -> Option<VerifyReport> {
        checked += 1;
        if !fails(&w) {
            return None;
        }
        let witness = shrink(w, &fails);
        let expected = normal_form_naive(&witness, Strategy::Leftmost);
        Some(VerifyReport::Fail { got: reduce(&witness), witness, expected })
    };
    if let Some(max_len) = max_len {
        for len in 0..=max_len {
            let total = (sigma as u128).pow(len as u32);
            for mut code in 0..total {
                let w: LabeledString = (0..len)
                    .map(|_| {
                        let d = (code % sigma as u128) as u32;
                        code /= sigma as u128;
                        Symbol(Symbol::FIRST_USER + d)
                    })
                    .collect();
                if let Some(r) = check(w) {
                    return Ok(r);
                }
            }
        }
    }
    let mut rng = SplitMix64::new(args.seed);
    for _ in 0..args.random {
        let n = rng.below(args.random_max_len as u64 + 1) as usize;
        let w = random_string(n, sigma, rng.next_u64()).expect("sigma is positive");
        if let Some(r) = check(w) {
            return Ok(r);
        }
    }
    Ok(VerifyReport::Pass { checked })
}

/// Trims letters from either end while the failure persists.
fn shrink(mut w: LabeledString, fails: &dyn Fn(&LabeledString) -> bool) -> LabeledString {
    loop {
        let n = w.len();
        if n == 0 {
            return w;
        }
        let front = w.slice(2, n);
        if fails(&front) {
            w = front;
            continue;
        }
        let back = w.slice(1, n - 1);
        if fails(&back) {
            w = back;
            continue;
        }
        return w;
    }
}

fn write_report(out: &mut dyn Write, args: &VerifyArgs, report: &VerifyReport) -> Result<(), CliError> {
    let names: Vec<String> = args.alphabet.chars().map(String::from).collect();
    let alpha = Alphabet::with_names(names);
    let show = |w: &LabeledString| alpha.decode(w).unwrap_or_else(|_| w.to_string());
    match report {
        VerifyReport::Pass { checked } => {
            writeln!(out, "PASS {checked} strings").map_err(io_err)?;
            Ok(())
        }
        VerifyReport::Fail { witness, got, expected } => {
            let got = match got {
                Ok(g) => show(g),
                Err(e) => format!("error: {e}"),
            };
            writeln!(out, "FAIL witness={:?} got={:?} expected={:?}", show(witness), got, show(expected))
                .map_err(io_err)?;
            Err(CliError::Verification(format!("reducer disagrees on {:?}", show(witness))))
        }
    }
}

fn bench_config(args: &BenchArgs) -> Result<BenchConfig, CliError> {
    let algos = args
        .algos
        .iter()
        .map(|a| Algo::parse(a).ok_or_else(|| CliError::Usage(format!("unknown algorithm {a:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if args.sigmas.contains(&0) {
        return Err(CliError::Usage("alphabet sizes must be positive".into()));
    }
    Ok(BenchConfig {
        algos,
        sizes: args.sizes.clone(),
        sigmas: args.sigmas.clone(),
        adversarial: args.adversarial.clone(),
        reps: args.reps,
        seed_base: args.seed,
        naive_cap: args.naive_cap,
    })
}
