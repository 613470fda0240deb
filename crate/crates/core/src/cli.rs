//! Command implementations behind the `fuzzy-sns` binary, plus the scenario
//! file format.
//!
//! Commands write to caller-supplied streams and return the process exit
//! code: 0 on success, 1 on validation or usage failure, 2 when input does
//! not parse.
//!
//! A scenario is a TOML document:
//!
//! ```toml
//! [options]
//! remainder_mode = "correlated"
//! clamp_negative = false
//!
//! [[entities]]
//! id = "units"
//! kind = "triangular"
//! value = "(4; 7; 9)"
//!
//! [[entities]]
//! id = "threes"
//! kind = "crisp"
//! value = 10
//!
//! [[steps]]
//! form = "L"
//! operands = ["units"]
//! images = ["threes"]
//! radix = [3]
//! rates = [2]
//! ```

use std::fmt;
use std::io::Write;
use std::ops::Range;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::carry::{common_carry_dfn, common_carry_tri};
use crate::error::Error;
use crate::fuznum::{DiscreteFuzzyNumber, Family, FuzzyScalar, TriangularFuzzyNumber};
use crate::operator::{Form, OperatorSpec, Options, RemainderMode, TransformResult};
use crate::oracle::equivalence_suite;
use crate::sns_graph::{run, validate, Multeity, Scenario, Trace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

/// Largest support the randomized oracle check draws.
pub const ORACLE_MAX_SUPPORT: usize = 15;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Parse { input: other.into(), reason: "format must be text, json or csv".into() }),
        }
    }
}

/// Which family `carry` parses its literals in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CarryFamily {
    Tri,
    Dfn,
}

impl FromStr for CarryFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "tri" | "triangular" => Ok(CarryFamily::Tri),
            "dfn" | "discrete" => Ok(CarryFamily::Dfn),
            other => Err(Error::Parse { input: other.into(), reason: "family must be tri or dfn".into() }),
        }
    }
}

/// Command-line settings that take precedence over a scenario's options.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub remainder_mode: Option<RemainderMode>,
    pub clamp_negative: bool,
}

impl Overrides {
    pub fn apply(&self, options: &mut Options) {
        if let Some(mode) = self.remainder_mode {
            options.remainder_mode = mode;
        }
        if self.clamp_negative {
            options.clamp_negative = true;
        }
    }
}

/// A scenario that failed to parse. Line and column count from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    fn at(src: &str, span: Option<Range<usize>>, message: impl Into<String>) -> Self {
        let offset = span.map_or(0, |s| s.start.min(src.len()));
        let before = &src[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError { line, column, message: message.into() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
enum Kind {
    Crisp,
    Discrete,
    Triangular,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Crisp => "crisp",
            Kind::Discrete => "discrete",
            Kind::Triangular => "triangular",
        })
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum RawValue {
    Int(i64),
    Str(String),
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields, default)]
struct RawOptions {
    remainder_mode: RemainderMode,
    clamp_negative: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntity {
    id: Spanned<String>,
    kind: Kind,
    value: Spanned<RawValue>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStep {
    form: Form,
    operands: Vec<String>,
    images: Vec<String>,
    radix: Vec<Spanned<RawValue>>,
    rates: Vec<Spanned<RawValue>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    #[serde(default)]
    options: RawOptions,
    #[serde(default)]
    entities: Vec<RawEntity>,
    #[serde(default)]
    steps: Vec<RawStep>,
}

#[derive(Serialize)]
struct OutOptions {
    remainder_mode: RemainderMode,
    clamp_negative: bool,
}

#[derive(Serialize)]
struct OutEntity<'a> {
    id: &'a str,
    kind: Kind,
    value: RawValue,
}

#[derive(Serialize)]
struct OutStep<'a> {
    form: Form,
    operands: &'a [String],
    images: &'a [String],
    radix: Vec<RawValue>,
    rates: Vec<RawValue>,
}

#[derive(Serialize)]
struct OutScenario<'a> {
    options: OutOptions,
    entities: Vec<OutEntity<'a>>,
    steps: Vec<OutStep<'a>>,
}

/// Parse a scenario document. Structural checks that need the whole
/// scenario (unknown ids, valences) are left to [`validate`].
pub fn parse_scenario(src: &str) -> Result<Scenario, ParseError> {
    let raw: RawScenario = toml::from_str(src).map_err(|e| ParseError::at(src, e.span(), e.message()))?;

    let scalar = |v: &Spanned<RawValue>| -> Result<FuzzyScalar, ParseError> {
        match v.get_ref() {
            RawValue::Int(i) => u64::try_from(*i)
                .map(FuzzyScalar::Crisp)
                .map_err(|_| ParseError::at(src, Some(v.span()), format!("{i} is not a natural number"))),
            RawValue::Str(s) => s.parse().map_err(|e: Error| ParseError::at(src, Some(v.span()), e.to_string())),
        }
    };

    let mut entries = Vec::with_capacity(raw.entities.len());
    for e in &raw.entities {
        let value = scalar(&e.value)?;
        let found = match value.family() {
            Family::Crisp => Kind::Crisp,
            Family::Discrete => Kind::Discrete,
            Family::Triangular => Kind::Triangular,
        };
        if found != e.kind {
            return Err(ParseError::at(
                src,
                Some(e.value.span()),
                format!("entity `{}` is declared {} but its value is {found}", e.id.get_ref(), e.kind),
            ));
        }
        entries.push((e.id.get_ref().clone(), value, e.id.span()));
    }
    let mut ids = std::collections::HashSet::new();
    for (id, _, span) in &entries {
        if id.is_empty() || !ids.insert(id.as_str()) {
            let what =
                if id.is_empty() { "empty entity id".to_string() } else { format!("entity `{id}` is declared twice") };
            return Err(ParseError::at(src, Some(span.clone()), what));
        }
    }
    let initial = Multeity::new(entries.into_iter().map(|(id, v, _)| (id, v))).expect("ids checked above");

    let steps = raw
        .steps
        .into_iter()
        .map(|s| {
            Ok(OperatorSpec {
                form: s.form,
                operands: s.operands,
                images: s.images,
                radices: s.radix.iter().map(scalar).collect::<Result<_, _>>()?,
                rates: s.rates.iter().map(scalar).collect::<Result<_, _>>()?,
            })
        })
        .collect::<Result<Vec<_>, ParseError>>()?;

    Ok(Scenario {
        initial,
        steps,
        options: Options { remainder_mode: raw.options.remainder_mode, clamp_negative: raw.options.clamp_negative },
    })
}

fn raw_value(x: &FuzzyScalar) -> RawValue {
    match x {
        FuzzyScalar::Crisp(v) => i64::try_from(*v).map_or_else(|_| RawValue::Str(v.to_string()), RawValue::Int),
        other => RawValue::Str(other.to_string()),
    }
}

/// Serialize a scenario in the format [`parse_scenario`] reads.
pub fn scenario_to_toml(s: &Scenario) -> String {
    let doc = OutScenario {
        options: OutOptions { remainder_mode: s.options.remainder_mode, clamp_negative: s.options.clamp_negative },
        entities: s
            .initial
            .iter()
            .map(|(id, v)| OutEntity {
                id,
                kind: match v.family() {
                    Family::Crisp => Kind::Crisp,
                    Family::Discrete => Kind::Discrete,
                    Family::Triangular => Kind::Triangular,
                },
                value: raw_value(v),
            })
            .collect(),
        steps: s
            .steps
            .iter()
            .map(|st| OutStep {
                form: st.form,
                operands: &st.operands,
                images: &st.images,
                radix: st.radices.iter().map(raw_value).collect(),
                rates: st.rates.iter().map(raw_value).collect(),
            })
            .collect(),
    };
    toml::to_string(&doc).expect("scenario documents always serialize")
}

fn labelled(out: &mut Vec<String>, label: &str, values: &indexmap::IndexMap<String, FuzzyScalar>) {
    if values.len() == 1 {
        let v = values.values().next().expect("one value");
        out.push(format!("{label}={v}"));
    } else {
        out.extend(values.iter().map(|(id, v)| format!("{label}[{id}]={v}")));
    }
}

/// One line with every quantity of a step, e.g. `p=2 rem=1 q=4 N'_j=14`.
/// Quantities are indexed by entity id when the operator has several.
pub fn format_result(r: &TransformResult) -> String {
    let mut parts = Vec::new();
    labelled(&mut parts, "p", &r.partial_carries);
    if let Some(c) = &r.common_carry {
        parts.push(format!("p.={c}"));
    }
    labelled(&mut parts, "rem", &r.remainders);
    labelled(&mut parts, "q", &r.transformants);
    labelled(&mut parts, "N'_j", &r.new_image_cardinals);
    parts.join(" ")
}

fn write_text(trace: &Trace, scenario: &Scenario, out: &mut dyn Write) -> std::io::Result<()> {
    for (entry, spec) in trace.entries.iter().zip(&scenario.steps) {
        writeln!(out, "step {}: {} {} -> {}", entry.step, entry.form, spec.operands.join(","), spec.images.join(","))?;
        writeln!(out, "{}", format_result(&entry.result))?;
    }
    let fin: Vec<String> = trace.final_state.iter().map(|(id, v)| format!("{id}={v}")).collect();
    writeln!(out, "final: {}", fin.join(" "))
}

fn write_csv(trace: &Trace, out: &mut dyn Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["step", "form", "quantity", "entity", "value"])?;
    for e in &trace.entries {
        let (step, form) = (e.step.to_string(), e.form.to_string());
        let mut row = |quantity: &str, entity: &str, value: &FuzzyScalar| {
            w.write_record([step.as_str(), form.as_str(), quantity, entity, &value.to_string()])
        };
        for (id, v) in &e.result.partial_carries {
            row("partial_carry", id, v)?;
        }
        if let Some(c) = &e.result.common_carry {
            row("common_carry", "", c)?;
        }
        for (id, v) in &e.result.remainders {
            row("remainder", id, v)?;
        }
        for (id, v) in &e.result.transformants {
            row("transformant", id, v)?;
        }
        for (id, v) in &e.result.new_image_cardinals {
            row("image", id, v)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// `eval`: run a scenario file and print its trace.
pub fn cmd_eval(
    path: &Path,
    format: OutputFormat,
    overrides: Overrides,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let src = match std::fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return EXIT_PARSE;
        }
    };
    let mut scenario = match parse_scenario(&src) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {}:{}:{}: {}", path.display(), e.line, e.column, e.message);
            return EXIT_PARSE;
        }
    };
    overrides.apply(&mut scenario.options);
    eval_scenario(&scenario, format, out, err)
}

/// The part of `eval` after parsing.
pub fn eval_scenario(scenario: &Scenario, format: OutputFormat, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let diagnostics = validate(scenario);
    if !diagnostics.is_empty() {
        for d in diagnostics {
            let _ = writeln!(err, "error: {d}");
        }
        return EXIT_INVALID;
    }
    let trace = match run(scenario) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INVALID;
        }
    };
    for w in &trace.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let written = match format {
        OutputFormat::Text => write_text(&trace, scenario, out).map_err(|e| e.to_string()),
        OutputFormat::Json => serde_json::to_writer_pretty(&mut *out, &trace)
            .map_err(|e| e.to_string())
            .and_then(|()| writeln!(out).map_err(|e| e.to_string())),
        OutputFormat::Csv => write_csv(&trace, out).map_err(|e| e.to_string()),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

/// `carry`: form the common carry of one or more partial carries.
pub fn cmd_carry(family: CarryFamily, literals: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if literals.is_empty() {
        let _ = writeln!(err, "error: at least one partial carry is required");
        return EXIT_PARSE;
    }
    let formed = match family {
        CarryFamily::Tri => literals
            .iter()
            .map(|l| l.parse::<TriangularFuzzyNumber>())
            .collect::<Result<Vec<_>, _>>()
            .and_then(|ps| common_carry_tri(&ps))
            .map(|c| c.to_string()),
        CarryFamily::Dfn => literals
            .iter()
            .map(|l| l.parse::<DiscreteFuzzyNumber>())
            .collect::<Result<Vec<_>, _>>()
            .and_then(|ps| common_carry_dfn(&ps))
            .map(|c| c.to_string()),
    };
    match formed {
        Ok(c) => {
            let _ = writeln!(out, "{c}");
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_PARSE
        }
    }
}

/// `table`: sample the membership function of a triangular literal at
/// `resolution` evenly spaced points from lower to upper bound inclusive.
pub fn cmd_table(literal: &str, resolution: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let t: TriangularFuzzyNumber = match literal.parse() {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_PARSE;
        }
    };
    if resolution < 2 {
        let _ = writeln!(err, "error: resolution must be at least 2");
        return EXIT_INVALID;
    }
    let span = (t.upper() - t.lower()) as f64;
    let last = (resolution - 1) as f64;
    let mut w = csv::Writer::from_writer(out);
    let rows = std::iter::once(w.write_record(["x", "mu"])).chain((0..resolution).map(|k| {
        let x = if k + 1 == resolution { t.upper() as f64 } else { t.lower() as f64 + span * k as f64 / last };
        w.write_record([x.to_string(), t.membership(x).to_string()])
    }));
    match rows.collect::<csv::Result<Vec<()>>>().and_then(|_| w.flush().map_err(Into::into)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

/// `oracle-check`: the randomized oracle-equivalence suite.
pub fn cmd_oracle_check(seed: u64, cases: u64, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if cases == 0 {
        let _ = writeln!(err, "error: cases must be at least 1");
        return EXIT_INVALID;
    }
    let report = equivalence_suite(seed, cases, ORACLE_MAX_SUPPORT);
    let _ = writeln!(out, "{report}");
    for f in report.failures.iter().take(10) {
        let _ = writeln!(err, "mismatch: {f}");
    }
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_INVALID
    }
}
