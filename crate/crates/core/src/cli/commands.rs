use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use super::{cached_family_poly, Command, Emit, GlobalArgs, Output, SCHEMA_VERSION};
use crate::analysis::{isolate_rat, theorem_zeros_report, RatPoly};
use crate::catalog::{gamma_substitute, gamma_table_cached, run_checks, CheckId, CheckOptions, GammaSpec};
use crate::enumerate::{count_family, enumerate_family, tree_to_code, Family, Object, StirlingVariant, DEFAULT_CAP};
use crate::error::{Result, SpkError};
use crate::grammar::builtin;
use crate::polynomial::{Polynomial, Var};
use crate::stats::{code_stats, perm_stats, qzero_stats, signed_stats, word_stats};

fn doc(command: &str, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    if let Value::Object(rest) = body {
        m.extend(rest);
    }
    Value::Object(m)
}

fn ok(text: String, json: Value) -> Result<Output> {
    Ok(Output { text, json, code: 0, notes: String::new() })
}

pub(crate) fn run(cmd: &Command, global: &GlobalArgs) -> Result<Output> {
    match cmd {
        Command::Enumerate { family, n, emit } => enumerate(*family, *n, *emit),
        Command::Stats { family, n } => stats(*family, *n),
        Command::Poly { family, n, var_map } => {
            let mut p = cached_family_poly(global.cache_dir.as_deref(), *family, *n)?;
            if let Some(m) = var_map {
                p = p.substitute(&parse_var_map(m)?)?;
            }
            let body = json!({
                "family": family.as_str(),
                "n": n,
                "var_map": var_map,
                "polynomial": p.to_string(),
            });
            ok(format!("{p}\n"), doc("poly", body))
        }
        Command::Gamma { n, family } => {
            let table = gamma_table_cached(*n)?;
            if let Some(spec) = family {
                let p = gamma_substitute(&table, &GammaSpec::builtin(*spec))?;
                let body = json!({ "n": n, "spec": spec.as_str(), "polynomial": p.to_string() });
                return ok(format!("{p}\n"), doc("gamma", body));
            }
            let text: String = table
                .rows()
                .into_iter()
                .map(|((i, j, k), g)| format!("({i},{j},{k}):{g}\n"))
                .collect();
            ok(text, doc("gamma", table.to_json()))
        }
        Command::Grammar { family, power, seed_word } => {
            let seed = match seed_word {
                Some(s) => s.parse::<Polynomial>()?,
                None => family.seed(),
            };
            let p = builtin(*family).derive_iter(&seed, *power)?;
            let body = json!({
                "grammar": family.as_str(),
                "seed": seed.to_string(),
                "power": power,
                "polynomial": p.to_string(),
            });
            ok(format!("{p}\n"), doc("grammar", body))
        }
        Command::Verify { checks, all, n_max, deep, out } => {
            let ids: Vec<CheckId> = if *all {
                CheckId::ALL.to_vec()
            } else if checks.is_empty() {
                return Err(SpkError::OutOfRange("pass --check ID or --all".into()));
            } else {
                checks.clone()
            };
            let opts = CheckOptions { deep: *deep, ..CheckOptions::default() };
            let rows = run_checks(&ids, n_max.unwrap_or(usize::MAX), &opts);
            let failed = rows.iter().filter(|r| !r.passed).count();
            let summary = json!({ "rows": rows.len(), "passed": rows.len() - failed, "failed": failed });
            let report = |millis: bool| {
                let rows: Vec<Value> = rows.iter().map(|r| r.to_json(millis)).collect();
                doc("verify", json!({ "n_max": n_max, "deep": deep, "rows": rows, "summary": summary }))
            };
            if let Some(path) = out {
                std::fs::write(path, serde_json::to_string_pretty(&report(true)).unwrap() + "\n")?;
            }
            let mut text: String = rows.iter().map(|r| format!("{r}\n")).collect();
            text += &format!("summary: {} rows, {} passed, {failed} failed\n", rows.len(), rows.len() - failed);
            let mut notes = String::new();
            for r in rows.iter().filter(|r| !r.passed) {
                if let Some(c) = &r.counterexample {
                    notes += &format!("{} n={}: counterexample {c}\n", r.check.as_str(), r.n);
                }
            }
            Ok(Output { text, json: report(false), code: i32::from(failed > 0), notes })
        }
        Command::Zeros { family, n, theorem, n_max } => {
            if *theorem {
                let r = theorem_zeros_report(*n_max)?;
                let failed = r.items.iter().filter(|i| !i.passed).count();
                let text = format!(
                    "{r}summary: {} items, {} passed, {failed} failed\n",
                    r.items.len(),
                    r.items.len() - failed
                );
                let items: Vec<Value> = r.items.iter().map(|i| i.to_json()).collect();
                let body = json!({
                    "n_max": n_max,
                    "items": items,
                    "summary": { "items": r.items.len(), "passed": r.items.len() - failed, "failed": failed },
                });
                return Ok(Output { text, json: doc("zeros", body), code: i32::from(failed > 0), notes: String::new() });
            }
            let (family, n) = (family.expect("required by clap"), n.expect("required by clap"));
            let p = cached_family_poly(global.cache_dir.as_deref(), family, n)?;
            let report = isolate_rat(&format!("{family}_{n}"), &RatPoly::from_polynomial(&p)?)?;
            ok(report.to_string(), doc("zeros", report.to_json()))
        }
    }
}

fn parse_var_map(s: &str) -> Result<BTreeMap<Var, Polynomial>> {
    s.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            let (k, v) = part.split_once('=').ok_or_else(|| SpkError::Parse {
                pos: 0,
                msg: format!("expected k=v in `{part}`"),
            })?;
            Ok((Var::new(k.trim())?, v.trim().parse::<Polynomial>()?))
        })
        .collect()
}

/// Statistics of one object as a JSON record.
pub(crate) fn object_stats(o: &Object) -> Value {
    let v = match o {
        Object::Word(w) if w.variant() == StirlingVariant::SingleOne => serde_json::to_value(qzero_stats(w)),
        Object::Word(w) => serde_json::to_value(word_stats(w)),
        Object::Signed(p) => serde_json::to_value(signed_stats(p)),
        Object::Perm(p) => serde_json::to_value(perm_stats(p)),
        Object::Code(c) => serde_json::to_value(code_stats(c)),
        Object::Tree(t) => serde_json::to_value(code_stats(&tree_to_code(t))),
    };
    v.expect("stat records serialize")
}

fn pairs_text(v: &Value) -> String {
    v.as_object()
        .map(|m| m.iter().map(|(k, x)| format!("{k}={x}")).collect::<Vec<_>>().join(" "))
        .unwrap_or_default()
}

fn enumerate(family: Family, n: usize, emit: Emit) -> Result<Output> {
    let objects = enumerate_family(family, n, DEFAULT_CAP)?;
    let head = json!({ "family": family.as_str(), "n": n });
    match emit {
        Emit::Count => {
            let c = objects.count();
            let closed = count_family(family, n);
            if closed != c.into() {
                return Err(SpkError::Invariant(format!("{family} at n={n}: streamed {c}, closed form {closed}")));
            }
            let mut body = head;
            body["count"] = json!(c);
            ok(format!("{c}\n"), doc("enumerate", body))
        }
        Emit::Objects => {
            let mut text = String::new();
            let mut list = Vec::new();
            for o in objects {
                text += &format!("{o}\n");
                list.push(o.to_json());
            }
            let mut body = head;
            body["objects"] = Value::Array(list);
            ok(text, doc("enumerate", body))
        }
        Emit::Stats => {
            let mut text = String::new();
            let mut list = Vec::new();
            for o in objects {
                let s = object_stats(&o);
                text += &format!("{o}  {}\n", pairs_text(&s));
                list.push(json!({ "object": o.to_json(), "stats": s }));
            }
            let mut body = head;
            body["objects"] = Value::Array(list);
            ok(text, doc("enumerate", body))
        }
    }
}

fn stats(family: Family, n: usize) -> Result<Output> {
    let mut dists: Vec<(String, BTreeMap<u64, u64>)> = Vec::new();
    let mut text = String::new();
    let mut list = Vec::new();
    for o in enumerate_family(family, n, DEFAULT_CAP)? {
        let s = object_stats(&o);
        text += &format!("{o}  {}\n", pairs_text(&s));
        if let Value::Object(m) = &s {
            for (k, v) in m {
                let Some(x) = v.as_u64() else { continue };
                let slot = match dists.iter().position(|(name, _)| name == k) {
                    Some(i) => i,
                    None => {
                        dists.push((k.clone(), BTreeMap::new()));
                        dists.len() - 1
                    }
                };
                *dists[slot].1.entry(x).or_default() += 1;
            }
        }
        list.push(json!({ "object": o.to_json(), "stats": s }));
    }
    text += &format!("{family} n={n}: {} objects\n", list.len());
    let mut table = Map::new();
    for (name, d) in &dists {
        let cells: Vec<String> = d.iter().map(|(v, c)| format!("{v}:{c}")).collect();
        text += &format!("{name}: {}\n", cells.join(" "));
        let m: Map<String, Value> = d.iter().map(|(v, c)| (v.to_string(), json!(c))).collect();
        table.insert(name.clone(), Value::Object(m));
    }
    let body = json!({
        "family": family.as_str(),
        "n": n,
        "total": list.len(),
        "objects": list,
        "distributions": table,
    });
    ok(text, doc("stats", body))
}
