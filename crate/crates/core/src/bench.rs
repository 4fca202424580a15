//! Timing and counter harness.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use crate::baseline::detect_and_contract_counted;
use crate::gen::{adversarial, random_string};
use crate::model::LabeledString;
use crate::oracle::{normal_form_naive_counted, Strategy};
use crate::reducer::reduce_with_counters;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algo {
    Reducer,
    NaiveOracle,
    DetectAndContract,
}

impl Algo {
    pub const ALL: [Algo; 3] = [Algo::Reducer, Algo::NaiveOracle, Algo::DetectAndContract];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Reducer => "reducer",
            Algo::NaiveOracle => "naive_oracle",
            Algo::DetectAndContract => "detect_and_contract",
        }
    }

    pub fn parse(s: &str) -> Option<Algo> {
        Self::ALL.into_iter().find(|a| a.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub algos: Vec<Algo>,
    /// Random-string lengths, crossed with `sigmas`.
    pub sizes: Vec<usize>,
    pub sigmas: Vec<usize>,
    /// Adversarial family members `T_m`.
    pub adversarial: Vec<u32>,
    pub reps: usize,
    /// Repetition `i` of a random configuration uses seed `seed_base + i`.
    pub seed_base: u64,
    /// The naive oracle is skipped on inputs longer than this.
    pub naive_cap: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            algos: Vec::new(),
            sizes: Vec::new(),
            sigmas: Vec::new(),
            adversarial: Vec::new(),
            reps: 1,
            seed_base: 0,
            naive_cap: 4096,
        }
    }
}

/// One run. A skipped run leaves the measurements empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub algo: Algo,
    pub n: usize,
    /// Alphabet size, or `adversarial`.
    pub sigma: String,
    pub seed: u64,
    pub time_ns: Option<u64>,
    pub comparisons: Option<u64>,
    pub appends: Option<u64>,
    pub contractions: Option<u64>,
}

impl BenchRecord {
    pub fn skipped(&self) -> bool {
        self.time_ns.is_none()
    }
}

struct Measured {
    time_ns: u64,
    comparisons: u64,
    appends: u64,
    contractions: u64,
}

fn measure(algo: Algo, t: &LabeledString) -> Measured {
    let start = Instant::now();
    let (comparisons, appends, contractions) = match algo {
        Algo::Reducer => {
            let (_, c) = reduce_with_counters(t).expect("generated inputs hold no sentinels");
            (c.comparisons, c.appends, c.contractions)
        }
        Algo::DetectAndContract => {
            let (_, c) = detect_and_contract_counted(t).expect("generated inputs hold no sentinels");
            (c.comparisons, c.appends, c.contractions)
        }
        Algo::NaiveOracle => {
            let (_, s) = normal_form_naive_counted(t, Strategy::Leftmost);
            (s.comparisons, t.len() as u64, s.contractions)
        }
    };
    Measured {
        time_ns: start.elapsed().as_nanos() as u64,
        comparisons,
        appends,
        contractions,
    }
}

fn run_case(
    cfg: &BenchConfig,
    algo: Algo,
    sigma: &str,
    inputs: &[(u64, LabeledString)],
    out: &mut Vec<BenchRecord>,
) {
    let skip = algo == Algo::NaiveOracle && inputs.iter().any(|(_, t)| t.len() > cfg.naive_cap);
    if !skip {
        if let Some((_, warm)) = inputs.first() {
            measure(algo, warm);
        }
    }
    for (seed, t) in inputs {
        let mut rec = BenchRecord {
            algo,
            n: t.len(),
            sigma: sigma.to_string(),
            seed: *seed,
            time_ns: None,
            comparisons: None,
            appends: None,
            contractions: None,
        };
        if !skip {
            let m = measure(algo, t);
            rec.time_ns = Some(m.time_ns);
            rec.comparisons = Some(m.comparisons);
            rec.appends = Some(m.appends);
            rec.contractions = Some(m.contractions);
        }
        out.push(rec);
    }
}

/// Runs every configuration `reps` times, sequentially, after one discarded warm-up.
pub fn run_bench(cfg: &BenchConfig) -> Vec<BenchRecord> {
    let mut out = Vec::new();
    for &algo in &cfg.algos {
        for &n in &cfg.sizes {
            for &sigma in &cfg.sigmas {
                let inputs: Vec<(u64, LabeledString)> = (0..cfg.reps as u64)
                    .map(|i| {
                        let seed = cfg.seed_base + i;
                        (seed, random_string(n, sigma.max(1), seed).expect("sigma is positive"))
                    })
                    .collect();
                run_case(cfg, algo, &sigma.to_string(), &inputs, &mut out);
            }
        }
        for &m in &cfg.adversarial {
            let text = adversarial(m).text;
            let inputs: Vec<(u64, LabeledString)> =
                (0..cfg.reps as u64).map(|_| (m as u64, text.clone())).collect();
            run_case(cfg, algo, "adversarial", &inputs, &mut out);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchSummary {
    pub algo: Algo,
    pub n: usize,
    pub sigma: String,
    pub runs: usize,
    pub median_time_ns: u64,
}

/// Median wall time per `(algo, n, sigma)`, in first-appearance order; skipped runs are ignored.
pub fn summarize(records: &[BenchRecord]) -> Vec<BenchSummary> {
    let mut groups: Vec<(Algo, usize, String, Vec<u64>)> = Vec::new();
    for r in records {
        let Some(t) = r.time_ns else { continue };
        match groups.iter_mut().find(|g| g.0 == r.algo && g.1 == r.n && g.2 == r.sigma) {
            Some(g) => g.3.push(t),
            None => groups.push((r.algo, r.n, r.sigma.clone(), vec![t])),
        }
    }
    groups
        .into_iter()
        .map(|(algo, n, sigma, mut times)| {
            times.sort_unstable();
            BenchSummary { algo, n, sigma, runs: times.len(), median_time_ns: times[times.len() / 2] }
        })
        .collect()
}

/// CSV with header `algo,n,sigma,seed,time_ns,comparisons,appends,contractions` and LF endings.
pub fn write_csv<W: Write>(out: W, records: &[BenchRecord]) -> csv::Result<()> {
    let mut wtr = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    wtr.write_record(["algo", "n", "sigma", "seed", "time_ns", "comparisons", "appends", "contractions"])?;
    for r in records {
        wtr.serialize(r)?;
    }
    wtr.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_gives_no_records() {
        assert!(run_bench(&BenchConfig::default()).is_empty());
    }

    #[test]
    fn record_count_and_determinism() {
        let cfg = BenchConfig {
            algos: vec![Algo::Reducer, Algo::DetectAndContract],
            sizes: vec![100, 200],
            sigmas: vec![2, 6],
            adversarial: vec![3],
            reps: 3,
            seed_base: 10,
            ..BenchConfig::default()
        };
        let a = run_bench(&cfg);
        assert_eq!(a.len(), 2 * (2 * 2 + 1) * 3);
        let b = run_bench(&cfg);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!((x.n, &x.sigma, x.seed, x.comparisons), (y.n, &y.sigma, y.seed, y.comparisons));
        }
        assert!(a.iter().all(|r| !r.skipped()));
        let summary = summarize(&a);
        assert_eq!(summary.len(), 2 * 5);
        assert!(summary.iter().all(|s| s.runs == 3));
    }

    #[test]
    fn naive_is_skipped_above_cap() {
        let cfg = BenchConfig {
            algos: vec![Algo::NaiveOracle],
            sizes: vec![8, 20],
            sigmas: vec![2],
            naive_cap: 10,
            ..BenchConfig::default()
        };
        let recs = run_bench(&cfg);
        assert!(!recs[0].skipped());
        assert!(recs[1].skipped());
    }

    #[test]
    fn csv_layout() {
        let recs = vec![
            BenchRecord {
                algo: Algo::Reducer,
                n: 5,
                sigma: "2".into(),
                seed: 1,
                time_ns: Some(100),
                comparisons: Some(9),
                appends: Some(7),
                contractions: Some(1),
            },
            BenchRecord {
                algo: Algo::NaiveOracle,
                n: 9000,
                sigma: "adversarial".into(),
                seed: 3,
                time_ns: None,
                comparisons: None,
                appends: None,
                contractions: None,
            },
        ];
        let mut buf = Vec::new();
        write_csv(&mut buf, &recs).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "algo,n,sigma,seed,time_ns,comparisons,appends,contractions\n\
             reducer,5,2,1,100,9,7,1\n\
             naive_oracle,9000,adversarial,3,,,,\n"
        );
    }

    #[test]
    fn algo_names_round_trip() {
        for a in Algo::ALL {
            assert_eq!(Algo::parse(a.name()), Some(a));
        }
        assert_eq!(Algo::parse("fast"), None);
    }
}
