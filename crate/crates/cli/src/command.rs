//! One [`Command`] per library operation. The clap front end and the REPL
//! both build commands from a name plus argument words, so arity is
//! checked in one place.

use serde_json::{json, Value};
use thiserror::Error;

use ultrafield::filters::{
    enumerate_filters, filter_to_ideal, ideal_to_filter, incomparable_witness, quotient_is_field,
    rp_leq, Family, FiniteFilter, FiniteVector,
};
use ultrafield::limits::{cauchy_index, epsilon_index, ns_limit, LimitResult};
use ultrafield::monads::{decompose, same_galaxy, same_monad};
use ultrafield::rational::fmt_rational;
use ultrafield::similarity::{cases_table, interval_case, translated_reciprocal, IntervalCase};
use ultrafield::worlds::{step_situation, ww_contains, ww_map_to_unit, ww_relation, World};
use ultrafield::{Error, Hyper, Rational};

use crate::format::{format, HyperJson, Mode};
use crate::parse::{eval, parse, EvalError, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Domain(#[from] Error),
}

impl CliError {
    /// 1 for usage and syntax problems, 2 for mathematical domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::Eval(_) | CliError::Domain(_) => 2,
        }
    }
}

pub fn read_expr(text: &str) -> Result<Hyper, CliError> {
    Ok(eval(&parse(text)?)?)
}

/// An expression whose value must be a standard rational.
pub fn read_rational(text: &str) -> Result<Rational, CliError> {
    let x = read_expr(text)?;
    match (x.num().is_constant(), x.den().is_constant()) {
        (true, true) => Ok(x.standard_part()?),
        _ => Err(CliError::Usage(format!("expected a rational, got {x}"))),
    }
}

fn read_family(text: &str) -> Result<Family, CliError> {
    text.parse::<Family>()
        .map_err(|e| CliError::Usage(e.to_string()))
}

#[derive(Debug, Clone)]
pub enum Command {
    Eval(Hyper),
    Classify(Hyper),
    St(Hyper),
    Decompose(Hyper),
    Monad(Hyper, Hyper),
    Gal(Hyper, Hyper),
    WwRel(World, World),
    WwMember(World, Hyper),
    WwSituation(Hyper, Hyper),
    WwMap(World, Hyper),
    Cases(Hyper, Hyper),
    CasesTable,
    Limit(Hyper),
    EpsIndex(Hyper, Rational, Rational),
    CauchyIndex(Hyper, Rational),
    Selfsim(Hyper, Hyper, Hyper),
    FiltersEnum(usize),
    FiltersCheck(Family),
    FiltersQuotient(Family),
}

/// `(name, arity, usage)` for every command word.
pub const COMMANDS: &[(&str, usize, &str)] = &[
    ("eval", 1, "eval <x>"),
    ("classify", 1, "classify <x>"),
    ("st", 1, "st <x>"),
    ("decompose", 1, "decompose <x>"),
    ("monad", 2, "monad <x> <y>"),
    ("gal", 2, "gal <x> <y>"),
    ("ww-rel", 4, "ww-rel <t> <u> <s> <v>"),
    ("ww-member", 3, "ww-member <t> <u> <s>"),
    ("ww-situation", 2, "ww-situation <u> <v>"),
    ("ww-map", 3, "ww-map <t> <u> <s>"),
    ("cases", 2, "cases <t0> <u>"),
    ("cases-table", 0, "cases-table"),
    ("limit", 1, "limit <x>"),
    ("eps-index", 3, "eps-index <x> <L> <eps>"),
    ("cauchy-index", 2, "cauchy-index <x> <eps>"),
    ("selfsim", 3, "selfsim <t> <t0> <u>"),
    ("filters-enum", 1, "filters-enum <N>"),
    ("filters-check", 1, "filters-check <family>"),
    ("filters-quotient", 1, "filters-quotient <family>"),
];

fn world(t: &str, u: &str) -> Result<World, CliError> {
    Ok(World::new(read_expr(t)?, read_expr(u)?)?)
}

impl Command {
    pub fn build(name: &str, args: &[&str]) -> Result<Self, CliError> {
        let &(_, arity, usage) = COMMANDS
            .iter()
            .find(|(n, _, _)| *n == name)
            .ok_or_else(|| CliError::Usage(format!("unknown command {name:?}")))?;
        if args.len() != arity {
            return Err(CliError::Usage(format!("usage: {usage}")));
        }
        let x = |i: usize| read_expr(args[i]);
        Ok(match name {
            "eval" => Command::Eval(x(0)?),
            "classify" => Command::Classify(x(0)?),
            "st" => Command::St(x(0)?),
            "decompose" => Command::Decompose(x(0)?),
            "monad" => Command::Monad(x(0)?, x(1)?),
            "gal" => Command::Gal(x(0)?, x(1)?),
            "ww-rel" => Command::WwRel(world(args[0], args[1])?, world(args[2], args[3])?),
            "ww-member" => Command::WwMember(world(args[0], args[1])?, x(2)?),
            "ww-situation" => Command::WwSituation(x(0)?, x(1)?),
            "ww-map" => Command::WwMap(world(args[0], args[1])?, x(2)?),
            "cases" => Command::Cases(x(0)?, x(1)?),
            "cases-table" => Command::CasesTable,
            "limit" => Command::Limit(x(0)?),
            "eps-index" => {
                Command::EpsIndex(x(0)?, read_rational(args[1])?, read_rational(args[2])?)
            }
            "cauchy-index" => Command::CauchyIndex(x(0)?, read_rational(args[1])?),
            "selfsim" => Command::Selfsim(x(0)?, x(1)?, x(2)?),
            "filters-enum" => Command::FiltersEnum(args[0].trim().parse().map_err(|_| {
                CliError::Usage(format!("expected a natural number, got {:?}", args[0]))
            })?),
            "filters-check" => Command::FiltersCheck(read_family(args[0])?),
            "filters-quotient" => Command::FiltersQuotient(read_family(args[0])?),
            _ => unreachable!("listed in COMMANDS"),
        })
    }

    pub fn run(&self, mode: Mode) -> Result<String, CliError> {
        let json = mode == Mode::Json;
        let render = |v: Value, human: String| if json { v.to_string() } else { human };
        Ok(match self {
            Command::Eval(x) => format(x, mode),
            Command::Classify(x) => {
                let c = x.classify().as_str();
                render(json!({ "class": c }), c.to_string())
            }
            Command::St(x) => {
                let st = fmt_rational(&x.standard_part()?);
                render(json!({ "st": st }), st)
            }
            Command::Decompose(x) => {
                let d = decompose(x)?;
                let st = fmt_rational(&d.standard_part);
                if json {
                    json!({
                        "infinite_part": HyperJson::new(&d.infinite_part),
                        "standard_part": st,
                        "infinitesimal_part": HyperJson::new(&d.infinitesimal_part),
                    })
                    .to_string()
                } else {
                    format!(
                        "infinite:      {}\nstandard:      {st}\ninfinitesimal: {}",
                        d.infinite_part, d.infinitesimal_part
                    )
                }
            }
            Command::Monad(x, y) => boolean(json, "same_monad", same_monad(x, y)),
            Command::Gal(x, y) => boolean(json, "same_galaxy", same_galaxy(x, y)),
            Command::WwRel(a, b) => {
                let r = ww_relation(a, b).as_str();
                render(json!({ "relation": r }), r.to_string())
            }
            Command::WwMember(w, s) => boolean(json, "member", ww_contains(w, s)),
            Command::WwSituation(u, v) => {
                let i = step_situation(u, v)?.index();
                render(json!({ "situation": i }), i.to_string())
            }
            Command::WwMap(w, s) => format(&ww_map_to_unit(w, s)?, mode),
            Command::Cases(t0, u) => {
                let case = interval_case(t0, u)?;
                render(case_json(t0, u, &case), case_human(&case))
            }
            Command::CasesTable => {
                let rows = cases_table();
                if json {
                    Value::Array(rows.iter().map(|(t0, u, c)| case_json(t0, u, c)).collect())
                        .to_string()
                } else {
                    cases_table_human(&rows)
                }
            }
            Command::Limit(x) => {
                let (kind, value) = match ns_limit(x)? {
                    LimitResult::Converges(l) => ("converges", Some(fmt_rational(&l))),
                    LimitResult::DivergesPlus => ("diverges+", None),
                    LimitResult::DivergesMinus => ("diverges-", None),
                };
                let human = match &value {
                    Some(l) => format!("converges to {l}"),
                    None if kind == "diverges+" => "diverges to +infinity".into(),
                    None => "diverges to -infinity".into(),
                };
                render(json!({ "result": kind, "limit": value }), human)
            }
            Command::EpsIndex(x, l, eps) => {
                let m = epsilon_index(x, l, eps)?;
                render(json!({ "index": m }), m.to_string())
            }
            Command::CauchyIndex(x, eps) => {
                let k = cauchy_index(x, eps)?;
                render(json!({ "index": k }), k.to_string())
            }
            Command::Selfsim(t, t0, u) => format(&translated_reciprocal(t, t0, u)?, mode),
            Command::FiltersEnum(n) => filters_enum(*n, json)?,
            Command::FiltersCheck(family) => filters_check(family, json)?,
            Command::FiltersQuotient(family) => {
                let filter = FiniteFilter::try_from(family.clone())?;
                let field = quotient_is_field(&filter);
                boolean(json, "quotient_is_field", field)
            }
        })
    }
}

fn boolean(json: bool, key: &str, value: bool) -> String {
    if json {
        json!({ key: value }).to_string()
    } else {
        value.to_string()
    }
}

fn case_json(t0: &Hyper, u: &Hyper, c: &IntervalCase) -> Value {
    json!({
        "t0": t0.to_string(),
        "u": u.to_string(),
        "case": c.case_id,
        "outcome": c.outcome_id,
        "subset_of_gal0": c.subset_of_gal0,
        "contains_gal0_minus_center": c.contains_gal0_minus_center,
        "disjoint_from_gal0": c.disjoint_from_gal0,
        "intersects_gal0": c.intersects_gal0,
        "subset_of_monad_center": c.subset_of_monad_center,
        "length_class": c.length_class.as_str(),
    })
}

fn case_human(c: &IntervalCase) -> String {
    format!(
        "case {} (outcome {})\n\
         subset_of_gal0: {}\n\
         contains_gal0_minus_center: {}\n\
         disjoint_from_gal0: {}\n\
         intersects_gal0: {}\n\
         subset_of_monad_center: {}\n\
         length: {}",
        c.case_id,
        c.outcome_id,
        c.subset_of_gal0,
        c.contains_gal0_minus_center,
        c.disjoint_from_gal0,
        c.intersects_gal0,
        c.subset_of_monad_center,
        c.length_class.as_str()
    )
}

fn cases_table_human(rows: &[(Hyper, Hyper, IntervalCase)]) -> String {
    let mark = |b: bool| if b { "yes" } else { "-" };
    let mut out = format!(
        "{:<5} {:<5} {:>4} {:>7}  {:<8} {:<10} {:<8} {:<10} {:<8} {}",
        "t0",
        "u",
        "case",
        "outcome",
        "in-gal0",
        "gal0-t0",
        "disjoint",
        "intersects",
        "in-monad",
        "length"
    );
    for (t0, u, c) in rows {
        out.push_str(&format!(
            "\n{:<5} {:<5} {:>4} {:>7}  {:<8} {:<10} {:<8} {:<10} {:<8} {}",
            t0.to_string(),
            u.to_string(),
            c.case_id,
            c.outcome_id,
            mark(c.subset_of_gal0),
            mark(c.contains_gal0_minus_center),
            mark(c.disjoint_from_gal0),
            mark(c.intersects_gal0),
            mark(c.subset_of_monad_center),
            c.length_class.as_str()
        ));
    }
    out
}

fn vector_text(v: &FiniteVector) -> String {
    let items: Vec<String> = v.values().iter().map(fmt_rational).collect();
    format!("({})", items.join(","))
}

fn filters_enum(n: usize, json: bool) -> Result<String, CliError> {
    let filters = enumerate_filters(n)?;
    let ultra = filters.iter().filter(|f| f.is_ultrafilter()).count();
    if json {
        let items: Vec<Value> = filters
            .iter()
            .map(|f| json!({ "family": f.family().to_string(), "ultrafilter": f.is_ultrafilter() }))
            .collect();
        return Ok(json!({ "universe": n, "filters": items, "ultrafilters": ultra }).to_string());
    }
    let mut out = String::new();
    for f in &filters {
        let tag = if f.is_ultrafilter() { "  [ultra]" } else { "" };
        out.push_str(&format!("{}{tag}\n", f.family()));
    }
    out.push_str(&format!("{} filters, {ultra} ultrafilters", filters.len()));
    Ok(out)
}

fn filters_check(family: &Family, json: bool) -> Result<String, CliError> {
    let is_filter = family.is_filter();
    let filter = FiniteFilter::try_from(family.clone()).ok();
    let ultra = filter.as_ref().is_some_and(FiniteFilter::is_ultrafilter);
    let field = filter.as_ref().map(quotient_is_field);
    let ideal_round_trip = match &filter {
        Some(f) => Some(ideal_to_filter(&filter_to_ideal(f))? == *f),
        None => None,
    };
    let witness = match &filter {
        Some(f) if !ultra => {
            let (x, y) = incomparable_witness(f)?;
            debug_assert!(!rp_leq(f, &x, &y)? && !rp_leq(f, &y, &x)?);
            Some((vector_text(&x), vector_text(&y)))
        }
        _ => None,
    };
    if json {
        return Ok(json!({
            "universe": family.universe(),
            "filter": is_filter,
            "ultrafilter": ultra,
            "quotient_is_field": field,
            "ideal_round_trip": ideal_round_trip,
            "incomparable": witness.as_ref().map(|(x, y)| [x, y]),
        })
        .to_string());
    }
    let mut out = format!(
        "universe: {}\nfilter: {is_filter}\nultrafilter: {ultra}",
        family.universe()
    );
    if let Some(field) = field {
        out.push_str(&format!("\nquotient_is_field: {field}"));
    }
    if let Some(rt) = ideal_round_trip {
        out.push_str(&format!("\nideal_round_trip: {rt}"));
    }
    if let Some((x, y)) = witness {
        out.push_str(&format!("\nincomparable: {x} {y}"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str, args: &[&str]) -> Result<String, CliError> {
        Command::build(name, args)?.run(Mode::Human)
    }

    #[test]
    fn arity_and_names() {
        assert_eq!(run("eval", &[]).unwrap_err().exit_code(), 1);
        assert_eq!(run("nope", &["w"]).unwrap_err().exit_code(), 1);
        assert_eq!(run("eval", &["w +"]).unwrap_err().exit_code(), 1);
        assert_eq!(run("eval", &["1/(w-w)"]).unwrap_err().exit_code(), 2);
        assert_eq!(run("st", &["w"]).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn outputs() {
        assert_eq!(
            run("eval", &["1 + eps"]).unwrap(),
            "(w + 1)/w   [appreciable, st=1]"
        );
        assert_eq!(run("classify", &["1000000*eps"]).unwrap(), "infinitesimal");
        assert_eq!(run("st", &["(2*w^2+w)/(w^2-1)"]).unwrap(), "2");
        assert_eq!(run("limit", &["w/(w+1)"]).unwrap(), "converges to 1");
        assert_eq!(run("eps-index", &["w/(w+1)", "1", "1/100"]).unwrap(), "99");
        assert_eq!(run("cauchy-index", &["w/(w+1)", "1/100"]).unwrap(), "99");
        assert_eq!(run("monad", &["1", "1+eps"]).unwrap(), "true");
        assert_eq!(run("gal", &["w", "1"]).unwrap(), "false");
        assert_eq!(run("ww-member", &["0", "1", "w"]).unwrap(), "false");
        assert_eq!(
            run("ww-rel", &["0", "1", "0", "eps"]).unwrap(),
            "second-inside-first"
        );
        assert_eq!(
            run("selfsim", &["w", "0", "1"]).unwrap(),
            "1/w   [infinitesimal, st=0]"
        );
        assert!(run("filters-enum", &["3"])
            .unwrap()
            .ends_with("7 filters, 3 ultrafilters"));
        assert_eq!(
            run("filters-quotient", &["{0},{0,1},{0,2},{0,1,2}"]).unwrap(),
            "true"
        );
        assert!(run("eps-index", &["w/(w+1)", "w", "1/100"]).is_err());
    }

    #[test]
    fn decompose_output() {
        let out = run("decompose", &["(2*w^2+w)/(w^2-1)"]).unwrap();
        assert_eq!(
            out,
            "infinite:      0\nstandard:      2\ninfinitesimal: (w + 2)/(w^2 - 1)"
        );
    }

    #[test]
    fn check_reports_witness() {
        let out = run("filters-check", &["{0,1},{0,1,2}"]).unwrap();
        assert!(out.contains("ultrafilter: false"), "{out}");
        assert!(out.contains("quotient_is_field: false"), "{out}");
        assert!(out.contains("incomparable: (1,0,0) (0,1,1)"), "{out}");
    }
}
