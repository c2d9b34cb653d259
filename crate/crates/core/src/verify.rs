//! Batch drivers behind the command line: sweeps, single traces, enumeration.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::binf::BInfElement;
use crate::cartan::{CartanData, Weight, Word};
use crate::error::Error;
use crate::highest_weight::{HighestWeightCrystal, LambdaElement, WeightJson};
use crate::theorem::{LusztigMismatch, TheoremTrace};

pub const SCHEMA_VERSION: u32 = 1;

/// Reads `--cartan`: a preset name, a path to a JSON file, or inline JSON.
pub fn load_cartan(spec: &str) -> Result<CartanData, Error> {
    if let Ok(c) = CartanData::preset(spec) {
        return Ok(c);
    }
    if spec.trim_start().starts_with('{') {
        return CartanData::from_json(spec);
    }
    match std::fs::read_to_string(spec) {
        Ok(text) => CartanData::from_json(&text),
        Err(_) => Err(Error::UnknownPreset(spec.to_string())),
    }
}

/// Parses a comma separated list of integers; the empty string is the empty list.
pub fn parse_csv(text: &str) -> Result<Vec<i64>, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
        .collect()
}

fn lambda_weight(cartan: &CartanData, coords: &[i64]) -> Result<Weight, Error> {
    if coords.len() != cartan.rank() {
        return Err(Error::RankMismatch { expected: cartan.rank(), got: coords.len() });
    }
    let w = Weight::dominant(coords.to_vec());
    if !w.is_dominant_reference() {
        return Err(Error::NotDominant(coords.to_vec()));
    }
    Ok(w)
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub cartan_label: String,
    pub cartan: CartanData,
    pub lambdas: Vec<Vec<i64>>,
    /// Depth cap for `B(lambda)`; `None` means the full crystal (finite type only).
    pub depth: Option<usize>,
    /// Longest reduced word swept; `None` means the longest element (finite type only).
    pub max_word_len: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    Eq1,
    Eq2,
    Eq3,
    Applicability,
    PhiConsistency,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseInput {
    pub lambda: Vec<i64>,
    pub b_word: Vec<usize>,
    pub word: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Failure {
    pub case: CaseInput,
    pub kind: FailureKind,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigEcho {
    pub cartan: String,
    pub gcm: Vec<Vec<i64>>,
    pub lambdas: Vec<Vec<i64>>,
    pub depth: Option<usize>,
    pub max_word_len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumerationSummary {
    pub lambda: Vec<i64>,
    pub count: usize,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub schema: u32,
    pub config: ConfigEcho,
    pub cases: usize,
    pub words: usize,
    pub failures: Vec<Failure>,
    pub enumerations: Vec<EnumerationSummary>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn count(&self, kind: FailureKind) -> usize {
        self.failures.iter().filter(|f| f.kind == kind).count()
    }
}

fn one_based(letters: &[usize]) -> Vec<usize> {
    letters.iter().map(|i| i + 1).collect()
}

fn case_input(lambda: &Weight, b: &BInfElement, word: &Word) -> CaseInput {
    CaseInput {
        lambda: lambda.dominant.clone(),
        b_word: one_based(b.lowering_word()),
        word: word.to_one_based(),
    }
}

/// Every check that applies to one trace, as failure records.
pub fn trace_findings(hw: &HighestWeightCrystal<'_>, trace: &TheoremTrace) -> Vec<(FailureKind, String)> {
    let mut out = Vec::new();
    match &trace.rhs {
        Err(app) => out.push((
            FailureKind::Applicability,
            format!("step {}: needs e* power {}, eps* is {}", app.k, app.needed, app.available),
        )),
        Ok(rhs) if rhs != trace.lhs() => out.push((
            FailureKind::Eq1,
            format!("lhs {} != rhs {}", trace.lhs(), rhs),
        )),
        Ok(_) => {}
    }
    if let Err(m) = hw.vertices(trace) {
        out.push((
            FailureKind::Eq2,
            format!(
                "vertex {}: crystal side {} vs reflection side {}",
                m.k, m.from_crystal.root, m.from_reflections.root
            ),
        ));
    }
    match hw.lusztig_params(trace) {
        Err(LusztigMismatch::Disagree { k, formula, system }) => out.push((
            FailureKind::Eq3,
            format!("n_{k}: formula {formula}, system {system}"),
        )),
        Err(LusztigMismatch::Inconsistent { k, difference, beta }) => out.push((
            FailureKind::Eq3,
            format!("step {k}: {difference} is not a multiple of {beta}"),
        )),
        Ok(n) => {
            if hw.cartan().is_longest_word(&trace.word) && n.iter().any(|&v| v < 0) {
                out.push((FailureKind::Eq3, format!("negative parameter on a longest word: {n:?}")));
            }
        }
    }
    out
}

fn check_case(hw: &HighestWeightCrystal<'_>, x: &LambdaElement, word: &Word) -> Vec<Failure> {
    let case = || case_input(hw.lambda(), x.b(), word);
    let findings = match hw.run_recursion(x.b(), word) {
        Ok(trace) => trace_findings(hw, &trace),
        Err(e @ Error::PhiInconsistency { .. }) => vec![(FailureKind::PhiConsistency, e.to_string())],
        Err(e) => vec![(FailureKind::Eq1, e.to_string())],
    };
    findings
        .into_iter()
        .map(|(kind, detail)| Failure { case: case(), kind, detail })
        .collect()
}

fn check_phi(hw: &HighestWeightCrystal<'_>, x: &LambdaElement) -> Vec<Failure> {
    (0..hw.cartan().rank())
        .filter_map(|i| hw.phi(i, x).err())
        .map(|e| Failure {
            case: CaseInput {
                lambda: hw.lambda().dominant.clone(),
                b_word: one_based(x.b().lowering_word()),
                word: Vec::new(),
            },
            kind: FailureKind::PhiConsistency,
            detail: e.to_string(),
        })
        .collect()
}

/// Runs the full sweep: every member of every `B(lambda)` against every
/// nonempty reduced word up to the length cap.
pub fn run_verify(config: &VerifyConfig) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let cartan = &config.cartan;
    let finite = cartan.positive_root_count();
    let depth = match (config.depth, finite) {
        (Some(d), _) => d,
        (None, Some(_)) => usize::MAX,
        (None, None) => {
            return Err(Error::Parse("--depth is required for non-finite types".into()))
        }
    };
    let max_word_len = match (config.max_word_len, finite) {
        (Some(l), _) => l,
        (None, Some(n)) => n,
        (None, None) => {
            return Err(Error::Parse("--max-word-len is required for non-finite types".into()))
        }
    };
    if config.lambdas.is_empty() {
        return Err(Error::Parse("at least one --lambda is required".into()));
    }
    let crystals = config
        .lambdas
        .iter()
        .map(|l| HighestWeightCrystal::new(cartan, lambda_weight(cartan, l)?))
        .collect::<Result<Vec<_>, _>>()?;
    let words = cartan.reduced_words(max_word_len);

    let mut cases = 0;
    let mut failures = Vec::new();
    let mut enumerations = Vec::new();
    for hw in &crystals {
        let en = hw.enumerate(depth);
        let members: Vec<&LambdaElement> = en.iter().collect();
        enumerations.push(EnumerationSummary {
            lambda: hw.lambda().dominant.clone(),
            count: members.len(),
            complete: en.complete,
        });
        failures.extend(members.par_iter().flat_map_iter(|x| check_phi(hw, x)).collect::<Vec<_>>());
        let pairs: Vec<(&LambdaElement, &Word)> = words
            .iter()
            .flat_map(|w| members.iter().map(move |x| (*x, w)))
            .collect();
        cases += pairs.len();
        failures.extend(
            pairs
                .par_iter()
                .flat_map_iter(|(x, w)| check_case(hw, x, w))
                .collect::<Vec<_>>(),
        );
    }

    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        config: ConfigEcho {
            cartan: config.cartan_label.clone(),
            gcm: cartan.gcm().to_vec(),
            lambdas: config.lambdas.clone(),
            depth: config.depth,
            max_word_len,
        },
        cases,
        words: words.len(),
        failures,
        enumerations,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Full trace of one run as JSON. Fails if `b` is not in `B(lambda)`.
pub fn trace_json(
    cartan: &CartanData,
    lambda: &[i64],
    b_word: &[i64],
    word: &[i64],
    verbose: bool,
) -> Result<Value, Error> {
    let hw = HighestWeightCrystal::new(cartan, lambda_weight(cartan, lambda)?)?;
    let b = hw.binf().from_one_based(b_word)?;
    let word = Word::from_one_based(word, cartan.rank())?;
    let trace = hw.run_recursion(&b, &word)?;
    let elem = |e: &BInfElement| if verbose { e.to_verbose_json() } else { json!(e) };
    let vertices = hw
        .vertices(&trace)
        .ok()
        .map(|v| v.iter().map(WeightJson::from).collect::<Vec<_>>());
    let n = hw.lusztig_params(&trace).ok();
    let findings: Vec<Value> = trace_findings(&hw, &trace)
        .into_iter()
        .map(|(kind, detail)| json!({ "kind": kind, "detail": detail }))
        .collect();
    Ok(json!({
        "schema": SCHEMA_VERSION,
        "gcm": cartan.gcm(),
        "lambda": lambda,
        "b": elem(&b),
        "word": word.to_one_based(),
        "c": trace.c_seq,
        "d": trace.d_seq,
        "n": n,
        "b_seq": trace.b_seq.iter().map(elem).collect::<Vec<_>>(),
        "cascade": trace.cascade.iter().map(elem).collect::<Vec<_>>(),
        "lhs": elem(trace.lhs()),
        "rhs": trace.rhs.as_ref().ok().map(elem),
        "eq1": trace.verify_eq1(),
        "vertices": vertices,
        "findings": findings,
    }))
}

/// JSON lines for the members of `B(lambda)` up to `depth`, then a summary line.
pub fn enumerate_lines(cartan: &CartanData, lambda: &[i64], depth: Option<usize>) -> Result<Vec<String>, Error> {
    let hw = HighestWeightCrystal::new(cartan, lambda_weight(cartan, lambda)?)?;
    let depth = match depth {
        Some(d) => d,
        None if cartan.is_finite_type() => usize::MAX,
        None => return Err(Error::Parse("--depth is required for non-finite types".into())),
    };
    let en = hw.enumerate(depth);
    let mut lines: Vec<String> = en
        .iter()
        .map(|x| serde_json::to_string(&hw.line(x)).expect("serializable"))
        .collect();
    lines.push(json!({ "summary": { "count": en.len(), "complete": en.complete } }).to_string());
    Ok(lines)
}
