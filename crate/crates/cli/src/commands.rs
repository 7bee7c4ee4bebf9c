use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use topocount::enumerate::MAX_ENUMERATION_N;
use topocount::fixtures::reference_table;
use topocount::report::Document;
use topocount::verify::{injectivity_over, MAX_SPLIT_TOTAL};
use topocount::{
    bound_range, canonical_key, count_automorphisms, enumerate_labeled, ingest_bfile,
    naive_enumerate_labeled, phi, reports_to_csv, verify_inequalities, BigBoundReport,
    BigCountRecord, BigSeedTable, CanonicalKey, CountSequence, EnumerateError, InequalityReport,
    InjectivityReport, Topology, VerifyError,
};

use crate::render::{csv, table};
use crate::{cache, CliError, Format, Outcome, RunConfig};

fn classes(cfg: &RunConfig, n: usize) -> Result<cache::Classes, CliError> {
    if n > MAX_ENUMERATION_N {
        return Err(EnumerateError::TooLarge {
            n,
            max: MAX_ENUMERATION_N,
        }
        .into());
    }
    cache::load(n, cfg.cache_dir.as_deref(), cfg.enumerate_options())
}

/// Renders `rows` in the configured format, or `json` for machine output.
fn emit<T: Serialize>(
    cfg: &RunConfig,
    kind: &str,
    body: &T,
    headers: &[&str],
    rows: &[Vec<String>],
) -> String {
    match cfg.format {
        Format::Json => Document::new(kind, body).to_json() + "\n",
        Format::Csv => csv(headers, rows),
        Format::Table => table(headers, rows),
    }
}

const COUNT_HEADERS: [&str; 5] = ["n", "labeled", "unlabeled", "labeled_t0", "unlabeled_t0"];

fn count_row(r: &BigCountRecord) -> Vec<String> {
    vec![
        r.n.to_string(),
        r.labeled.to_string(),
        r.unlabeled.to_string(),
        r.labeled_t0.to_string(),
        r.unlabeled_t0.to_string(),
    ]
}

pub fn count(cfg: &RunConfig, n: usize) -> Result<Outcome, CliError> {
    let c = classes(cfg, n)?;
    let rows = vec![count_row(&c.record)];
    Ok(Outcome::ok(emit(
        cfg,
        "count",
        &c.record,
        &COUNT_HEADERS,
        &rows,
    )))
}

#[derive(Serialize)]
struct RepsBody {
    n: usize,
    count: usize,
    representatives: Vec<String>,
}

pub fn reps(cfg: &RunConfig, n: usize) -> Result<Outcome, CliError> {
    let c = classes(cfg, n)?;
    let lines: Vec<String> = c.reps.iter().map(Topology::to_string).collect();
    let output = match cfg.format {
        Format::Table => lines.iter().map(|l| format!("{l}\n")).collect(),
        _ => {
            let rows: Vec<Vec<String>> = c
                .reps
                .iter()
                .zip(&lines)
                .enumerate()
                .map(|(i, (t, line))| {
                    vec![
                        i.to_string(),
                        line.clone(),
                        t.is_t0().to_string(),
                        count_automorphisms(t).to_string(),
                    ]
                })
                .collect();
            let body = RepsBody {
                n,
                count: lines.len(),
                representatives: lines,
            };
            emit(
                cfg,
                "reps",
                &body,
                &["index", "topology", "t0", "automorphisms"],
                &rows,
            )
        }
    };
    Ok(Outcome::ok(output))
}

/// Topology text lines from a file; blank lines and `#` comments are skipped.
fn read_topologies(path: &Path) -> Result<Vec<Topology>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| {
            l.trim().parse().map_err(|e| CliError::Parse {
                path: path.to_path_buf(),
                reason: format!("line {}: {e}", i + 1),
            })
        })
        .collect()
}

#[derive(Serialize)]
struct WsumRow {
    left: String,
    right: String,
    /// `w-sum` on disjoint grounds, `phi` after relabeling otherwise.
    operation: &'static str,
    result: String,
    t0: bool,
}

pub fn wsum(cfg: &RunConfig, file1: &Path, file2: &Path) -> Result<Outcome, CliError> {
    let lefts = read_topologies(file1)?;
    let rights = read_topologies(file2)?;
    let mut out = Vec::new();
    for a in &lefts {
        for b in &rights {
            let (operation, result) = if a.ground().is_disjoint(b.ground()) {
                ("w-sum", a.w_sum(b).map_err(VerifyError::from)?)
            } else {
                ("phi", phi(a, b)?)
            };
            out.push(WsumRow {
                left: a.to_string(),
                right: b.to_string(),
                operation,
                t0: result.is_t0(),
                result: result.to_string(),
            });
        }
    }
    let output = match cfg.format {
        Format::Table => out.iter().map(|r| format!("{}\n", r.result)).collect(),
        _ => {
            let rows: Vec<Vec<String>> = out
                .iter()
                .map(|r| {
                    vec![
                        r.left.clone(),
                        r.right.clone(),
                        r.operation.to_string(),
                        r.result.clone(),
                        r.t0.to_string(),
                    ]
                })
                .collect();
            emit(
                cfg,
                "wsum",
                &out,
                &["left", "right", "operation", "result", "t0"],
                &rows,
            )
        }
    };
    Ok(Outcome::ok(output))
}

#[derive(Serialize)]
struct VerifyBody {
    n: usize,
    m: usize,
    injectivity: InjectivityReport,
    injectivity_t0: InjectivityReport,
    inequalities: InequalityReport<topocount::BigCount>,
    holds: bool,
}

fn injectivity_row(name: &str, r: &InjectivityReport) -> Vec<String> {
    vec![
        name.into(),
        String::new(),
        r.distinct_images.to_string(),
        r.pairs_tested.to_string(),
        r.holds().to_string(),
    ]
}

pub fn verify(cfg: &RunConfig, n: usize, m: usize) -> Result<Outcome, CliError> {
    let total = n + m;
    if total > MAX_SPLIT_TOTAL {
        return Err(VerifyError::TooLarge {
            total,
            max: MAX_SPLIT_TOTAL,
        }
        .into());
    }
    let all = (0..=total)
        .map(|k| classes(cfg, k).map(|c| (k, c)))
        .collect::<Result<BTreeMap<_, _>, _>>()?;
    let (left, right) = (&all[&n], &all[&m]);
    let injectivity = injectivity_over(n, m, false, &left.reps, &right.reps)?;
    let injectivity_t0 = injectivity_over(n, m, true, &left.t0_reps(), &right.t0_reps())?;
    let records: BTreeMap<usize, BigCountRecord> =
        all.iter().map(|(&k, c)| (k, c.record.clone())).collect();
    let inequalities = verify_inequalities(&records, n, m)?;

    let mut rows = vec![
        injectivity_row("injectivity", &injectivity),
        injectivity_row("injectivity-t0", &injectivity_t0),
    ];
    for c in &inequalities.checks {
        rows.push(vec![
            "product".into(),
            c.sequence.to_string(),
            c.total.to_string(),
            c.product.to_string(),
            c.product_holds.to_string(),
        ]);
        rows.push(vec![
            "max-split".into(),
            c.sequence.to_string(),
            c.total.to_string(),
            c.max_split_product.to_string(),
            c.max_split_holds.to_string(),
        ]);
    }
    let holds = injectivity.holds() && injectivity_t0.holds() && inequalities.holds();
    let body = VerifyBody {
        n,
        m,
        injectivity,
        injectivity_t0,
        inequalities,
        holds,
    };
    let headers = ["check", "sequence", "value", "bound", "holds"];
    Ok(Outcome {
        output: emit(cfg, "verify", &body, &headers, &rows),
        passed: holds,
    })
}

/// A built-in sequence by symbol or catalog id, else a b-file path.
fn seed_table(seq: &str) -> Result<BigSeedTable, CliError> {
    if let Ok(s) = seq.parse::<CountSequence>() {
        return Ok(reference_table(s));
    }
    let path = PathBuf::from(seq);
    let text = fs::read_to_string(&path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let id = path
        .file_stem()
        .map_or_else(|| seq.to_string(), |s| s.to_string_lossy().into_owned());
    ingest_bfile(&text, &id).map_err(|e| CliError::Parse {
        path,
        reason: e.to_string(),
    })
}

#[derive(Serialize)]
struct BoundsBody<'a> {
    sequence: &'a str,
    from: usize,
    to: usize,
    rows: &'a [BigBoundReport],
}

pub fn bounds(cfg: &RunConfig, seq: &str, from: usize, to: usize) -> Result<Outcome, CliError> {
    let table_ = seed_table(seq)?;
    let reports = bound_range(&table_, from, to)?;
    let output = match cfg.format {
        Format::Csv => reports_to_csv(&reports),
        Format::Json => {
            let body = BoundsBody {
                sequence: table_.sequence_id(),
                from,
                to,
                rows: &reports,
            };
            Document::new("bounds", &body).to_json() + "\n"
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.bound.to_string(),
                        format!("{}+{}", r.split.0, r.split.1),
                        r.source.to_string(),
                        r.exact
                            .as_ref()
                            .map_or_else(String::new, ToString::to_string),
                    ]
                })
                .collect();
            table(&["n", "bound", "split", "source", "exact"], &rows)
        }
    };
    Ok(Outcome::ok(output))
}

#[derive(Serialize)]
struct OracleBody {
    n: usize,
    labeled: usize,
    naive_labeled: usize,
    classes: usize,
    agree: bool,
    first_divergence: Option<CanonicalKey>,
}

fn sorted_keys(ts: impl Iterator<Item = Topology>) -> Vec<CanonicalKey> {
    let mut keys: Vec<CanonicalKey> = ts.map(|t| canonical_key(&t)).collect();
    keys.sort();
    keys
}

pub fn oracle_check(cfg: &RunConfig, n: usize) -> Result<Outcome, CliError> {
    let naive = sorted_keys(naive_enumerate_labeled(n)?);
    let fast = sorted_keys(enumerate_labeled(n)?);
    let first_divergence = fast
        .iter()
        .zip(&naive)
        .find(|(a, b)| a != b)
        .map(|(a, b)| a.min(b).clone())
        .or_else(|| match fast.len().cmp(&naive.len()) {
            std::cmp::Ordering::Greater => Some(fast[naive.len()].clone()),
            std::cmp::Ordering::Less => Some(naive[fast.len()].clone()),
            std::cmp::Ordering::Equal => None,
        });
    let mut classes = fast.clone();
    classes.dedup();
    let body = OracleBody {
        n,
        labeled: fast.len(),
        naive_labeled: naive.len(),
        classes: classes.len(),
        agree: first_divergence.is_none(),
        first_divergence,
    };
    let rows = vec![vec![
        n.to_string(),
        body.labeled.to_string(),
        body.naive_labeled.to_string(),
        body.classes.to_string(),
        body.agree.to_string(),
        body.first_divergence
            .as_ref()
            .map_or_else(String::new, ToString::to_string),
    ]];
    let headers = [
        "n",
        "labeled",
        "naive_labeled",
        "classes",
        "agree",
        "first_divergence",
    ];
    Ok(Outcome {
        output: emit(cfg, "oracle-check", &body, &headers, &rows),
        passed: body.agree,
    })
}
