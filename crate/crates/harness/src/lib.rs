//! Batch driver: expands parameter sweeps, verifies them on a worker pool and
//! writes deterministic JSONL or CSV reports.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use clap::{Parser, Subcommand, ValueEnum};
use qcong_core::{is_prime, ClaimId, ClaimKind, ClaimParams, CyclotomicCache, Status, Verifier};
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DSpec {
    All,
    List(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub claims: Vec<ClaimId>,
    pub n_range: (i64, i64),
    pub d_spec: DSpec,
    pub p_list: Vec<i64>,
    pub a_list: Vec<i64>,
    pub m_list: Vec<i64>,
    pub modulus_power: Option<i64>,
    pub jobs: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub fail_fast: bool,
    pub cache_path: Option<PathBuf>,
    /// Record wall-clock times; off by default so reports are reproducible.
    pub timings: bool,
}

#[derive(Parser, Debug)]
#[command(name = "qcong", about = "Verify central q-binomial identities and congruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification sweep.
    Verify(VerifyArgs),
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    /// Claim id, comma-separated ids, or `all`.
    #[arg(long)]
    claim: String,
    /// Inclusive range `A..B` (or a single value) for q-side `n`.
    #[arg(long, default_value = "1..12")]
    n: String,
    /// `all` or a comma-separated list.
    #[arg(long, default_value = "all")]
    d: String,
    #[arg(long, default_value = "3,5,7")]
    p: String,
    #[arg(long, default_value = "1")]
    a: String,
    /// Nonzero values of `m`; ranges `A..B` allowed, zero is dropped.
    #[arg(long, default_value = "-6..6")]
    m: String,
    #[arg(long = "modulus-power")]
    modulus_power: Option<i64>,
    /// Worker count; defaults to QCONG_JOBS, then the number of CPUs.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long = "fail-fast")]
    fail_fast: bool,
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Write measured `elapsed_ms` instead of 0.
    #[arg(long)]
    timings: bool,
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn parse_int(s: &str) -> Result<i64, UsageError> {
    s.trim().parse::<i64>().map_err(|_| usage(format!("not an integer: {s:?}")))
}

fn parse_range(s: &str) -> Result<(i64, i64), UsageError> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse_int(a)?, parse_int(b.trim_start_matches('='))?),
        None => {
            let v = parse_int(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(usage(format!("empty range {s}")));
    }
    Ok((lo, hi))
}

/// Comma-separated integers and inclusive `A..B` ranges.
fn parse_list(s: &str) -> Result<Vec<i64>, UsageError> {
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (lo, hi) = parse_range(part)?;
        if hi - lo > 1_000_000 {
            return Err(usage(format!("range too large: {part}")));
        }
        out.extend(lo..=hi);
    }
    if out.is_empty() {
        return Err(usage(format!("empty list {s:?}")));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn default_jobs() -> usize {
    std::env::var("QCONG_JOBS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&j| j >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Parses arguments without the program name, e.g. `["verify", "--claim", "all"]`.
pub fn parse_cli<I, T>(args: I) -> Result<SuiteConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("qcong")).chain(args.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv)?;
    let Command::Verify(v) = cli.command;
    config_from(v).map_err(|e| clap::Error::raw(clap::error::ErrorKind::ValueValidation, format!("{e}\n")))
}

fn config_from(v: VerifyArgs) -> Result<SuiteConfig, UsageError> {
    let claims = if v.claim == "all" {
        ClaimId::ALL.to_vec()
    } else {
        let mut c = v
            .claim
            .split(',')
            .map(|s| s.trim().parse::<ClaimId>().map_err(|_| usage(format!("unknown claim {s}"))))
            .collect::<Result<Vec<_>, _>>()?;
        c.sort();
        c.dedup();
        c
    };
    let n_range = parse_range(&v.n)?;
    let d_spec = if v.d == "all" { DSpec::All } else { DSpec::List(parse_list(&v.d)?) };
    let p_list = parse_list(&v.p)?;
    if let Some(bad) = p_list.iter().find(|&&p| p < 3 || !is_prime(p as u64)) {
        return Err(usage(format!("p = {bad} is not an odd prime")));
    }
    let a_list = parse_list(&v.a)?;
    if a_list.iter().any(|&a| a < 1) {
        return Err(usage("a must be positive"));
    }
    let m_list: Vec<i64> = parse_list(&v.m)?.into_iter().filter(|&m| m != 0).collect();
    if m_list.is_empty() {
        return Err(usage("m list has no nonzero value"));
    }
    if let Some(e) = v.modulus_power {
        if e < 1 {
            return Err(usage("modulus power must be at least 1"));
        }
    }
    let jobs = v.jobs.unwrap_or_else(default_jobs);
    if jobs < 1 {
        return Err(usage("jobs must be at least 1"));
    }
    Ok(SuiteConfig {
        claims,
        n_range,
        d_spec,
        p_list,
        a_list,
        m_list,
        modulus_power: v.modulus_power,
        jobs,
        format: v.format,
        out: v.out,
        fail_fast: v.fail_fast,
        cache_path: v.cache,
        timings: v.timings,
    })
}

impl SuiteConfig {
    /// A single-claim q-side sweep with everything else at its default.
    pub fn for_claims(claims: &[ClaimId], n_range: (i64, i64)) -> Self {
        Self {
            claims: claims.to_vec(),
            n_range,
            d_spec: DSpec::All,
            p_list: vec![3, 5, 7],
            a_list: vec![1],
            m_list: (-6..=6).filter(|&m| m != 0).collect(),
            modulus_power: None,
            jobs: 1,
            format: Format::Jsonl,
            out: None,
            fail_fast: false,
            cache_path: None,
            timings: false,
        }
    }

    fn ds(&self, lo: i64, hi: i64) -> Vec<i64> {
        match &self.d_spec {
            DSpec::All => (lo..=hi).collect(),
            DSpec::List(l) => l.iter().copied().filter(|d| (lo..=hi).contains(d)).collect(),
        }
    }

    fn ns(&self, min: i64) -> std::ops::RangeInclusive<i64> {
        self.n_range.0.max(min)..=self.n_range.1
    }
}

/// Expands the configuration into work items, already filtered to each claim's domain.
pub fn build_sweep(config: &SuiteConfig) -> Vec<(ClaimId, ClaimParams)> {
    let mut items = Vec::new();
    for &claim in &config.claims {
        match claim.kind() {
            ClaimKind::Identity | ClaimKind::QCongruence | ClaimKind::Recurrence => {
                let qc = claim.kind() == ClaimKind::QCongruence;
                for n in config.ns(claim.min_n()) {
                    let (lo, hi) = claim.d_range_q(n).unwrap();
                    for d in config.ds(lo, hi) {
                        let mut params = ClaimParams::nd(n, d);
                        if qc {
                            let e = match claim {
                                ClaimId::QcLp => 2,
                                _ => config.modulus_power.unwrap_or(1),
                            };
                            params = params.with_e(e);
                        }
                        items.push((claim, params));
                    }
                }
            }
            ClaimKind::PCongruence => {
                for &p in &config.p_list {
                    for &a in &config.a_list {
                        let Some(big_n) = p.checked_pow(a as u32).filter(|&x| x <= 100_000) else {
                            continue;
                        };
                        let (lo, hi) = claim.d_range_p(big_n).unwrap();
                        for d in config.ds(lo, hi) {
                            let base = ClaimParams::pside(p, a, d);
                            if claim.uses_m() {
                                for &m in config.m_list.iter().filter(|&&m| m % p != 0) {
                                    items.push((claim, base.clone().with_m(m)));
                                }
                            } else {
                                items.push((claim, base));
                            }
                        }
                    }
                }
            }
            ClaimKind::Lemma => {
                for n in config.ns(2) {
                    lemma_items(config, claim, n, &mut items);
                }
            }
        }
    }
    items.sort();
    items.dedup();
    items
}

fn lemma_items(config: &SuiteConfig, claim: ClaimId, n: i64, items: &mut Vec<(ClaimId, ClaimParams)>) {
    let with = |a: Option<i64>, k: i64| ClaimParams { n: Some(n), a, k: Some(k), ..Default::default() };
    match claim {
        ClaimId::LemQLucas => {
            for a in 0..=2 {
                for c in 0..=a {
                    for b in 0..n {
                        for d in config.ds(0, n - 1) {
                            items.push((claim, ClaimParams::qlucas(n, a, b, c, d)));
                        }
                    }
                }
            }
        }
        ClaimId::LemAn => {
            for a in 1..=3 {
                for k in 0..=a * n {
                    items.push((claim, with(Some(a), k)));
                }
            }
        }
        ClaimId::Lem2N1 => {
            for k in 0..=2 * n + 1 {
                items.push((claim, with(None, k)));
            }
        }
        _ => unreachable!(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRecord {
    pub claim: ClaimId,
    pub params: ClaimParams,
    pub status: Status,
    pub witness: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Summary {
    pub fn of(records: &[ReportRecord]) -> Self {
        let mut s = Summary::default();
        for r in records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skip => s.skip += 1,
            }
        }
        s
    }
}

/// Rough cost used only to schedule expensive items first.
fn cost(claim: ClaimId, params: &ClaimParams) -> i64 {
    let n = params.n.or(params.p.map(|p| p.pow(params.a.unwrap_or(1) as u32))).unwrap_or(0);
    match claim.kind() {
        ClaimKind::Identity | ClaimKind::Recurrence => n * n * n,
        ClaimKind::QCongruence if params.e.unwrap_or(1) > 1 => n * n * n,
        _ => n,
    }
}

pub fn run_suite(config: &SuiteConfig) -> (Vec<ReportRecord>, Summary) {
    run_suite_with(config, &Verifier::default())
}

pub fn run_suite_with(config: &SuiteConfig, verifier: &Verifier) -> (Vec<ReportRecord>, Summary) {
    let items = build_sweep(config);
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(cost(items[i].0, &items[i].1)));
    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let done: Mutex<Vec<ReportRecord>> = Mutex::new(Vec::with_capacity(items.len()));
    let jobs = config.jobs.max(1).min(items.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                if config.fail_fast && stop.load(Ordering::SeqCst) {
                    break;
                }
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(&idx) = order.get(i) else { break };
                let (claim, params) = &items[idx];
                let r = verifier.verify(*claim, params);
                if r.status == Status::Fail {
                    stop.store(true, Ordering::SeqCst);
                }
                let record = ReportRecord {
                    claim: r.claim,
                    params: r.params,
                    status: r.status,
                    witness: r.witness.map(|w| w.to_string()).unwrap_or_default(),
                    elapsed_ms: if config.timings { r.elapsed.as_millis() as u64 } else { 0 },
                };
                done.lock().unwrap().push(record);
            });
        }
    });
    let mut records = done.into_inner().unwrap();
    records.sort_by(|a, b| (a.claim, &a.params).cmp(&(b.claim, &b.params)));
    let summary = Summary::of(&records);
    (records, summary)
}

fn params_json(p: &ClaimParams) -> serde_json::Value {
    let mut m = serde_json::Map::new();
    for (k, v) in p.pairs() {
        m.insert(k.to_string(), v.into());
    }
    serde_json::Value::Object(m)
}

pub fn write_report(records: &[ReportRecord], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Jsonl => {
            for r in records {
                let v = serde_json::json!({
                    "claim": r.claim.as_str(),
                    "params": params_json(&r.params),
                    "status": r.status.as_str(),
                    "witness": r.witness,
                    "elapsed_ms": r.elapsed_ms,
                });
                writeln!(out, "{v}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
            w.write_record(["claim", "params", "status", "witness", "elapsed_ms"])?;
            for r in records {
                w.write_record([
                    r.claim.as_str(),
                    &r.params.to_string(),
                    r.status.as_str(),
                    &r.witness,
                    &r.elapsed_ms.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    checksum: u32,
    entries: BTreeMap<String, Vec<i64>>,
}

/// 32-bit FNV-1a.
pub fn fnv1a32(bytes: &[u8]) -> u32 {
    let mut h: u32 = 0x811c_9dc5;
    for &b in bytes {
        h ^= b as u32;
        h = h.wrapping_mul(0x0100_0193);
    }
    h
}

fn entries_payload(entries: &BTreeMap<String, Vec<i64>>) -> String {
    serde_json::to_string(entries).expect("serializable")
}

fn keyed(snapshot: BTreeMap<u64, Vec<i64>>) -> BTreeMap<String, Vec<i64>> {
    snapshot.into_iter().map(|(k, v)| (format!("{k}"), v)).collect()
}

/// Loads a cache file. Missing, corrupted or inconsistent files yield an empty cache.
pub fn load_cache(path: &Path) -> (CyclotomicCache, bool) {
    let Ok(text) = fs::read_to_string(path) else {
        return (CyclotomicCache::new(), false);
    };
    let parsed: Option<CacheFile> = serde_json::from_str(&text).ok();
    let Some(file) = parsed.filter(|f| f.version == 1 && fnv1a32(entries_payload(&f.entries).as_bytes()) == f.checksum) else {
        return (CyclotomicCache::new(), false);
    };
    let mut entries = BTreeMap::new();
    for (k, v) in file.entries {
        match k.parse::<u64>() {
            Ok(n) => {
                entries.insert(n, v);
            }
            Err(_) => return (CyclotomicCache::new(), false),
        }
    }
    let (cache, ok) = CyclotomicCache::with_entries(entries);
    if ok {
        (cache, true)
    } else {
        (CyclotomicCache::new(), false)
    }
}

pub fn save_cache(path: &Path, cache: &CyclotomicCache) -> io::Result<()> {
    let entries = keyed(cache.snapshot());
    let checksum = fnv1a32(entries_payload(&entries).as_bytes());
    let file = CacheFile { version: 1, checksum, entries };
    let text = serde_json::to_string(&file).map_err(io::Error::other)?;
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}

/// Whole CLI run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match parse_cli(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let cache = match &config.cache_path {
        Some(path) => {
            let (cache, ok) = load_cache(path);
            if !ok && path.exists() {
                eprintln!("warning: cache {} is unreadable or corrupted; rebuilding", path.display());
            }
            cache
        }
        None => CyclotomicCache::new(),
    };
    let verifier = Verifier::new(Arc::new(cache));
    let (records, summary) = run_suite_with(&config, &verifier);
    let written = match &config.out {
        Some(path) => fs::File::create(path).and_then(|f| {
            let mut w = io::BufWriter::new(f);
            write_report(&records, config.format, &mut w)?;
            w.flush()
        }),
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write_report(&records, config.format, &mut lock).and_then(|_| lock.flush())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return EXIT_IO;
    }
    if let Some(path) = &config.cache_path {
        if let Err(e) = save_cache(path, verifier.cache()) {
            eprintln!("error: cannot write cache {}: {e}", path.display());
            return EXIT_IO;
        }
    }
    eprintln!("PASS {}  FAIL {}  SKIP {}", summary.pass, summary.fail, summary.skip);
    if summary.fail > 0 {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn parses_examples() {
        let c = parse_cli(args("verify --claim QC-C12-1 --n 2..10 --d all")).unwrap();
        assert_eq!(c.claims, vec![ClaimId::QcC12_1]);
        assert_eq!(c.n_range, (2, 10));
        let c = parse_cli(args("verify --claim PC-C13-4 --p 3,5 --a 1,2 --d all")).unwrap();
        assert_eq!((c.p_list, c.a_list), (vec![3, 5], vec![1, 2]));
        assert!(parse_cli(args("verify --claim all --n 2..0")).is_err());
        assert!(parse_cli(args("verify --claim all --bogus")).is_err());
        assert!(parse_cli(args("verify --claim all --p 9")).is_err());
    }

    #[test]
    fn fnv_reference_values() {
        assert_eq!(fnv1a32(b""), 0x811c9dc5);
        assert_eq!(fnv1a32(b"a"), 0xe40c292c);
        assert_eq!(fnv1a32(b"foobar"), 0xbf9cf968);
    }

    #[test]
    fn sweep_counts() {
        let c = SuiteConfig::for_claims(&[ClaimId::QcC12_1], (2, 6));
        assert_eq!(build_sweep(&c).len(), 20);
        let c = SuiteConfig::for_claims(&[ClaimId::QcC12_1], (1, 1));
        assert!(build_sweep(&c).is_empty());
    }
}
