use serde::Serialize;

use ultrafield::rational::fmt_rational;
use ultrafield::{GPoly, Hyper, MagnitudeClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Human,
    Json,
}

/// `(w + 1)/w   [appreciable, st=1]`
pub fn format_human(x: &Hyper) -> String {
    let class = x.classify();
    match x.standard_part() {
        Ok(st) => format!("{x}   [{}, st={}]", class.as_str(), fmt_rational(&st)),
        Err(_) => format!("{x}   [{}]", class.as_str()),
    }
}

/// Serializable view of an element; field order is fixed by declaration.
#[derive(Debug, Clone, Serialize)]
pub struct HyperJson {
    pub num: Vec<[String; 2]>,
    pub den: Vec<[String; 2]>,
    pub class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub st: Option<String>,
}

fn terms(p: &GPoly) -> Vec<[String; 2]> {
    p.terms()
        .iter()
        .map(|t| [fmt_rational(&t.exp), fmt_rational(&t.coef)])
        .collect()
}

impl HyperJson {
    pub fn new(x: &Hyper) -> Self {
        let class = x.classify();
        Self {
            num: terms(x.num()),
            den: terms(x.den()),
            class: class.as_str(),
            st: match class {
                MagnitudeClass::InfinitelyLarge => None,
                _ => x.standard_part().ok().map(|r| fmt_rational(&r)),
            },
        }
    }
}

pub fn format_json(x: &Hyper) -> String {
    serde_json::to_string(&HyperJson::new(x)).expect("plain data serializes")
}

pub fn format(x: &Hyper, mode: Mode) -> String {
    match mode {
        Mode::Human => format_human(x),
        Mode::Json => format_json(x),
    }
}
