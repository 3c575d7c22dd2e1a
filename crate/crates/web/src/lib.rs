//! wasm-bindgen bindings behind the static demo page in `www/`.
//!
//! Each export takes plain numbers/strings and returns a JSON string; exact
//! values are rendered as `a/b` (or `a/b*pi^e`) so the page never sees floats.

use serde_json::{json, Value};
use vndim_core::fuchsian::{covolume_real, formal_dimension_real, h2_heuristic, vn_dimension_real};
use vndim_core::padic::{dimension_spectrum, formal_dimension_padic, inducing_datum, SpectrumFamily};
use vndim_core::{FuchsianSignature, PadicField, RealWeight, RepLabel, Result, VnDimError};
use wasm_bindgen::prelude::*;

fn error_message(e: VnDimError) -> String {
    format!("{}: {e}", e.name())
}

pub fn real_dimension_json(signature: &str, k: i64, h2: &str) -> Result<Value> {
    let sig: FuchsianSignature = signature.parse()?;
    let weight = RealWeight::new(k)?;
    let h2_trivial = match h2 {
        "auto" => h2_heuristic(&sig),
        "trivial" => true,
        "nontrivial" => false,
        other => return Err(VnDimError::InvalidArgument(format!("unknown h2 mode {other:?}"))),
    };
    let value = vn_dimension_real(&sig, weight, h2_trivial)?;
    Ok(json!({
        "signature": sig.to_string(),
        "k": weight.get(),
        "h2_trivial": h2_trivial,
        "covolume": covolume_real(&sig)?.to_string(),
        "formal_dimension": formal_dimension_real(weight).to_string(),
        "vn_dimension": value.to_string(),
        "approx": vndim_core::ExactScalar::from_rational(value.clone(), 0).approx(),
    }))
}

pub fn spectrum_json(q: u64, rank: u64, max_k: u32) -> Result<Value> {
    let field = PadicField::new(q)?;
    let entries = dimension_spectrum(&field, rank, max_k)?;
    let entries: Vec<Value> = entries
        .into_iter()
        .map(|e| {
            let (family, k) = match e.family {
                SpectrumFamily::Steinberg => ("steinberg", None),
                SpectrumFamily::Unramified { k } => ("unramified", Some(k)),
                SpectrumFamily::Ramified { k } => ("ramified", Some(k)),
            };
            json!({"value": e.value.to_string(), "family": family, "k": k, "label": e.label.to_string()})
        })
        .collect();
    Ok(json!({"q": q, "rank": rank, "max_k": max_k, "entries": entries}))
}

pub fn table_json(q: u64, max_i: u32) -> Result<Value> {
    let field = PadicField::new(q)?;
    if max_i == 0 || max_i > 12 {
        return Err(VnDimError::InvalidArgument("max_i must be between 1 and 12".into()));
    }
    let mut rows = vec![json!({
        "label": "steinberg",
        "formal_dimension": formal_dimension_padic(&field, RepLabel::Steinberg)?.to_string(),
    })];
    let mut labels = vec![RepLabel::DepthZeroSupercuspidal];
    for i in 1..=max_i {
        labels.push(RepLabel::UnramifiedSupercuspidal { level: 2 * i });
        labels.push(RepLabel::UnramifiedSupercuspidal { level: 2 * i - 1 });
        labels.push(RepLabel::RamifiedSupercuspidal { level: 2 * i - 1 });
    }
    for label in labels {
        let datum = inducing_datum(&field, label)?;
        rows.push(json!({
            "label": label.to_string(),
            "ramified": datum.ramified,
            "dim_lambda": datum.dim_lambda.to_string(),
            "vol_j_mod_z": datum.vol_j_mod_z.to_string(),
            "formal_dimension": datum.formal_dim.to_string(),
        }));
    }
    Ok(json!({"q": q, "rows": rows}))
}

fn export(result: Result<Value>) -> std::result::Result<String, JsValue> {
    result
        .map(|v| v.to_string())
        .map_err(|e| JsValue::from_str(&error_message(e)))
}

/// `covol(Γ) · d_k` for a signature like `g=0;m=2,7;h=1`.
/// `h2` is `"auto"`, `"trivial"` or `"nontrivial"`.
#[wasm_bindgen(js_name = realDimension)]
pub fn real_dimension(signature: &str, k: i32, h2: &str) -> std::result::Result<String, JsValue> {
    export(real_dimension_json(signature, k as i64, h2))
}

#[wasm_bindgen(js_name = padicSpectrum)]
pub fn padic_spectrum(q: u32, rank: u32, max_k: u32) -> std::result::Result<String, JsValue> {
    export(spectrum_json(q as u64, rank as u64, max_k))
}

#[wasm_bindgen(js_name = formalDimensionTable)]
pub fn formal_dimension_table(q: u32, max_i: u32) -> std::result::Result<String, JsValue> {
    export(table_json(q as u64, max_i))
}
