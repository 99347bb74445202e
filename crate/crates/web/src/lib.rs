//! Browser bindings. Every export takes plain numbers and strings and returns
//! a JSON string; big integers are decimal strings.

use qpartitions::combinatorics::{series_counts, Family};
use qpartitions::theta::SeriesName;
use qpartitions::verification::{check_congruence, CongruenceSpec, Target};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest precision the page may request; keeps the tab responsive.
pub const MAX_PRECISION: usize = 3000;
/// Largest size for residue tables.
pub const MAX_TABLE_SIZE: usize = 200;

fn opt(v: u32) -> Option<usize> {
    (v != 0).then_some(v as usize)
}

fn cap(what: &str, value: usize, max: usize) -> Result<(), String> {
    if value > max {
        return Err(format!("{what} {value} is above the demo limit {max}"));
    }
    Ok(())
}

fn family(name: &str, t: u32, h: i32) -> Result<Family, String> {
    match name {
        "V" | "v" => Ok(Family::V {
            t: t as usize,
            h: h as i64,
        }),
        "W2" | "w2" => Ok(Family::W2),
        other => Err(format!("unknown family `{other}`")),
    }
}

#[derive(Serialize)]
struct Expansion {
    series: String,
    coefficients: Vec<String>,
}

/// Coefficients of a named series. `t` and `k` are 0 when unused.
pub fn expand_json(name: &str, t: u32, k: u32, precision: usize) -> Result<String, String> {
    cap("precision", precision, MAX_PRECISION)?;
    let series = SeriesName::parse(name, opt(t), opt(k)).map_err(|e| e.to_string())?;
    let s = series.build(precision).map_err(|e| e.to_string())?;
    serde_json::to_string(&Expansion {
        series: series.to_string(),
        coefficients: s.to_decimal_strings(),
    })
    .map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct ResidueRow {
    n: usize,
    classes: Vec<String>,
    equal: bool,
}

/// For each size `0..=n_max`, the weighted counts of the statistic in each
/// residue class mod `modulus`.
pub fn residues_json(family_name: &str, t: u32, h: i32, n_max: usize, modulus: usize) -> Result<String, String> {
    cap("size", n_max, MAX_TABLE_SIZE)?;
    if modulus < 1 {
        return Err("modulus must be at least 1".into());
    }
    let fam = family(family_name, t, h)?;
    let gf = series_counts(fam, n_max + 1).map_err(|e| e.to_string())?;
    let rows: Vec<ResidueRow> = gf
        .residue_buckets(modulus)
        .iter()
        .fold(vec![Vec::new(); n_max + 1], |mut acc, bucket| {
            for (n, c) in bucket.coeffs().iter().enumerate() {
                acc[n].push(c.clone());
            }
            acc
        })
        .into_iter()
        .enumerate()
        .map(|(n, classes)| ResidueRow {
            n,
            equal: classes.windows(2).all(|w| w[0] == w[1]),
            classes: classes.iter().map(ToString::to_string).collect(),
        })
        .collect();
    serde_json::to_string(&rows).map_err(|e| e.to_string())
}

/// Checks `name(a*n + b)` against `modulus` (0 means "is zero") for
/// `n <= n_max`; returns the report.
#[allow(clippy::too_many_arguments)]
pub fn congruence_json(
    name: &str,
    t: u32,
    k: u32,
    a: usize,
    b: usize,
    modulus: u32,
    n_max: usize,
    precision: usize,
) -> Result<String, String> {
    cap("precision", precision, MAX_PRECISION)?;
    let source = SeriesName::parse(name, opt(t), opt(k)).map_err(|e| e.to_string())?;
    let target = match modulus {
        0 => Target::Zero,
        m => Target::Modulus(u64::from(m)),
    };
    let spec = CongruenceSpec::new("demo", "user supplied", source, (a, b), target, n_max);
    let report = check_congruence(&spec, precision).map_err(|e| e.to_string())?;
    serde_json::to_string(&report.without_timing()).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = expandSeries)]
pub fn expand_series(name: &str, t: u32, k: u32, precision: usize) -> Result<String, JsError> {
    expand_json(name, t, k, precision).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = residueTable)]
pub fn residue_table(family: &str, t: u32, h: i32, n_max: usize, modulus: usize) -> Result<String, JsError> {
    residues_json(family, t, h, n_max, modulus).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = checkCongruence)]
#[allow(clippy::too_many_arguments)]
pub fn check_congruence_js(
    name: &str,
    t: u32,
    k: u32,
    a: usize,
    b: usize,
    modulus: u32,
    n_max: usize,
    precision: usize,
) -> Result<String, JsError> {
    congruence_json(name, t, k, a, b, modulus, n_max, precision).map_err(|e| JsError::new(&e))
}
