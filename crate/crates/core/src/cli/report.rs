//! JSON encodings for CLI reports.
//!
//! Every report is an object `{"schema": 1, "command": ..., "input": ...,
//! "result": ...}`. Object keys are sorted, fractions are `"c/d"` strings and
//! summand lists follow ascending slope order. See `docs/json-schema.md`.

use serde_json::{json, Value};

use crate::admissibility::WaReport;
use crate::classifier::{BadWitness, GoodPattern, PatternKind, SweepReport, Verdict};
use crate::exactnum::{ConvexPolygon, ExtCount, Fraction};
use crate::slopecalc::{SimpleSummand, SlopeType};

pub const SCHEMA_VERSION: u64 = 1;

pub fn fraction(f: Fraction) -> Value {
    Value::String(f.to_string())
}

pub fn ext_count(n: ExtCount) -> Value {
    match n {
        ExtCount::Finite(k) => json!(k),
        ExtCount::Infinity => json!("infinity"),
    }
}

pub fn summand(s: SimpleSummand, copies: u64) -> Value {
    json!({
        "c": s.c(),
        "d": s.d(),
        "copies": copies,
        "slope": fraction(s.slope()),
    })
}

pub fn slope_type(t: &SlopeType) -> Value {
    json!({
        "spec": t.to_spec(),
        "rank": t.rank(),
        "degree": t.degree(),
        "summands": t.summands().map(|(s, k)| summand(s, k)).collect::<Vec<_>>(),
    })
}

pub fn polygon(p: &ConvexPolygon) -> Value {
    Value::Array(
        p.breakpoints()
            .iter()
            .map(|&(x, y)| json!([x, fraction(y)]))
            .collect(),
    )
}

pub fn pattern(p: &GoodPattern) -> Value {
    let kind = match p.kind {
        PatternKind::A => "A",
        PatternKind::B => "B",
        PatternKind::C => "C",
    };
    json!({ "kind": kind, "h1": p.h1, "h": p.h, "h0": p.h0 })
}

pub fn witness(w: &BadWitness) -> Value {
    json!({
        "kind": w.tag(),
        "params": w.params(),
        "summands": slope_type(&w.summands()),
    })
}

pub fn verdict(v: &Verdict) -> Value {
    json!({
        "equal": v.equal,
        "pattern": v.pattern.as_ref().map_or(Value::Null, pattern),
        "witness": v.witness.as_ref().map_or(Value::Null, witness),
    })
}

pub fn wa_report(r: &WaReport) -> Value {
    json!({
        "weakly_admissible": r.is_weakly_admissible(),
        "t_n": r.t_n,
        "t_h": r.t_h,
        "subs": r.subs.iter().map(|s| json!({
            "selection": s.selection.counts(),
            "rank": s.rank,
            "t_n": s.t_n,
            "bound": s.bound,
            "holds": s.holds(),
        })).collect::<Vec<_>>(),
    })
}

pub fn sweep(r: &SweepReport) -> Value {
    json!({
        "max_rank": r.max_rank,
        "checked": r.checked,
        "equal": r.equal,
        "violations": r.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub fn envelope(command: &str, input: Value, result: Value) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "command": command,
        "input": input,
        "result": result,
    })
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}
