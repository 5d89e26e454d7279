//! Browser bindings for the talentgraph demo page in `www/`.

pub mod demo;

use wasm_bindgen::prelude::*;

fn js_err(e: String) -> JsValue {
    JsValue::from_str(&e)
}

#[wasm_bindgen(js_name = sampleLexicon)]
pub fn sample_lexicon() -> String {
    demo::SAMPLE_LEXICON.to_string()
}

#[wasm_bindgen(js_name = sampleGazetteer)]
pub fn sample_gazetteer() -> String {
    demo::SAMPLE_GAZETTEER.to_string()
}

/// Sample resumes as a JSON array of strings.
#[wasm_bindgen(js_name = sampleResumes)]
pub fn sample_resumes() -> String {
    serde_json::to_string(&demo::SAMPLE_RESUMES).expect("strings serialize")
}

/// Parsed record and diagnostics as JSON.
#[wasm_bindgen(js_name = parseResume)]
pub fn parse_resume(text: &str, lexicon: &str) -> Result<String, JsValue> {
    demo::parse(text, lexicon).map_err(js_err)
}

/// `request` is JSON: `{resumes, query, lexicon, gazetteer, lambda?, cap?}`.
#[wasm_bindgen]
pub fn rank(request: &str) -> Result<String, JsValue> {
    demo::rank(request).map_err(js_err)
}

#[wasm_bindgen(js_name = scoreDescription)]
pub fn score_description(details: &str, lexicon: &str, gazetteer: &str) -> Result<String, JsValue> {
    demo::score(details, lexicon, gazetteer).map_err(js_err)
}
