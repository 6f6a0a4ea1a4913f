//! Implementations behind the `statidx` subcommands. Each returns the
//! rendered output; the binary only parses arguments, prints, and maps
//! errors to exit codes.

use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::closed_forms::closed_forms;
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{parse_edge_list, transmission_profile};
use crate::indices::{complement_bounds, index_bundle};
use crate::report;
use crate::verify::{
    default_grid, grid_report, random_corpus, verify_corpus, verify_grid, verify_identities, Mode,
    VerificationReport,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

/// An inclusive parameter range written `a..b`, or a single value `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamRange(pub RangeInclusive<u32>);

impl FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid integer {t:?}"))
        };
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                let (a, b) = (parse(a)?, parse(b)?);
                if a > b {
                    return Err(format!("empty range {s:?}"));
                }
                Ok(ParamRange(a..=b))
            }
            None => {
                let a = parse(s)?;
                Ok(ParamRange(a..=a))
            }
        }
    }
}

impl ParamRange {
    pub fn is_single(&self) -> bool {
        self.0.start() == self.0.end()
    }
}

/// Family parameters as given on the command line.
#[derive(Debug, Clone, Default)]
pub struct FamilyParams {
    pub n: Option<ParamRange>,
    pub p: Option<ParamRange>,
    pub q: Option<ParamRange>,
    pub k: Option<ParamRange>,
    pub t: Option<ParamRange>,
}

impl FamilyParams {
    fn all_single(&self) -> bool {
        [&self.n, &self.p, &self.q, &self.k, &self.t]
            .into_iter()
            .flatten()
            .all(ParamRange::is_single)
    }
}

fn required<'a>(family: &str, name: &str, value: &'a Option<ParamRange>) -> Result<&'a ParamRange> {
    value
        .as_ref()
        .ok_or_else(|| Error::InvalidFamily(format!("{family} needs --{name}")))
}

/// Expands a family name and parameter ranges into specs. When every
/// parameter is a single value an invalid spec is an error; otherwise
/// invalid combinations in the product are skipped.
pub fn family_specs(family: &str, params: &FamilyParams) -> Result<Vec<FamilySpec>> {
    let pairs =
        |a: &ParamRange, b: &ParamRange, make: fn(u32, u32) -> FamilySpec| -> Vec<FamilySpec> {
            a.0.clone()
                .flat_map(|x| b.0.clone().map(move |y| make(x, y)))
                .collect()
        };
    let singles = |a: &ParamRange, make: fn(u32) -> FamilySpec| -> Vec<FamilySpec> {
        a.0.clone().map(make).collect()
    };
    let specs = match family {
        "hypercube" => singles(required(family, "n", &params.n)?, |n| {
            FamilySpec::Hypercube { n }
        }),
        "path" => singles(required(family, "n", &params.n)?, |n| FamilySpec::Path {
            n,
        }),
        "cycle" => singles(required(family, "n", &params.n)?, |n| FamilySpec::Cycle {
            n,
        }),
        "complete" => singles(required(family, "n", &params.n)?, |n| {
            FamilySpec::Complete { n }
        }),
        "kneser" => pairs(
            required(family, "p", &params.p)?,
            required(family, "k", &params.k)?,
            |p, k| FamilySpec::Kneser { p, k },
        ),
        "intersection" => pairs(
            required(family, "p", &params.p)?,
            required(family, "t", &params.t)?,
            |p, t| FamilySpec::Intersection { p, t },
        ),
        "nanotorus" => pairs(
            required(family, "p", &params.p)?,
            required(family, "q", &params.q)?,
            |p, q| FamilySpec::Nanotorus { p, q },
        ),
        other => return Err(Error::InvalidFamily(format!("unknown family {other:?}"))),
    };
    if params.all_single() {
        for spec in &specs {
            spec.validate()?;
        }
        Ok(specs)
    } else {
        Ok(specs.into_iter().filter(|s| s.validate().is_ok()).collect())
    }
}

pub fn single_spec(family: &str, params: &FamilyParams) -> Result<FamilySpec> {
    if !params.all_single() {
        return Err(Error::InvalidFamily(
            "ranges are only accepted by `verify`".into(),
        ));
    }
    let specs = family_specs(family, params)?;
    Ok(specs[0])
}

/// Full index bundle of an edge-list graph.
pub fn compute(text: &str, json: bool) -> Result<String> {
    let g = parse_edge_list(text)?;
    let tp = transmission_profile(&g)?;
    let bundle = index_bundle(&g, &tp)?;
    Ok(if json {
        report::compute_json(&g, &tp, &bundle)
    } else {
        report::compute_text(&g, &tp, &bundle)
    })
}

/// Canonical edge list of a generated family graph.
pub fn generate(spec: &FamilySpec, cap: usize) -> Result<String> {
    Ok(spec.generate_with_cap(cap)?.to_edge_list())
}

/// Closed-form report. Kneser graphs have their Wiener index computed by
/// BFS on the generated graph first.
pub fn closed_form(spec: &FamilySpec, as_printed: bool, json: bool, cap: usize) -> Result<String> {
    let wiener = match spec {
        FamilySpec::Kneser { .. } => {
            let g = spec.generate_with_cap(cap)?;
            Some(transmission_profile(&g)?.wiener.into())
        }
        _ => None,
    };
    let r = closed_forms(spec, wiener.as_ref())?;
    Ok(if json {
        report::closed_form_json(&r, as_printed)
    } else {
        report::closed_form_text(&r, as_printed)
    })
}

pub fn bounds(text: &str, json: bool) -> Result<String> {
    let g = parse_edge_list(text)?;
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    let b = complement_bounds(&g)?;
    Ok(if json {
        report::bounds_json(&b)
    } else {
        report::bounds_text(&b)
    })
}

/// Rendered report plus the exit code it implies.
pub struct Verdict {
    pub output: String,
    pub exit_code: u8,
}

fn verdict(r: &VerificationReport, json: bool) -> Verdict {
    Verdict {
        output: if json {
            report::verification_json(r)
        } else {
            report::verification_text(r)
        },
        exit_code: if r.is_clean() { EXIT_OK } else { EXIT_MISMATCH },
    }
}

pub fn identities(label: &str, text: &str, json: bool) -> Result<Verdict> {
    let g = parse_edge_list(text)?;
    let r = verify_identities(label, &g)?;
    Ok(verdict(&r, json))
}

/// What `verify` should run.
#[derive(Debug, Clone)]
pub enum VerifyTarget {
    /// One family over parameter ranges.
    Family(String, FamilyParams),
    /// The default parameter grid of all four families.
    Grid,
    /// Identity suites over a seeded random corpus.
    Corpus { count: usize, seed: u64 },
}

pub fn verify(target: &VerifyTarget, mode: Mode, json: bool, cap: usize) -> Result<Verdict> {
    let report = match target {
        VerifyTarget::Corpus { count, seed } => {
            verify_corpus(&random_corpus(*count, *seed, 0.2, 0.9)?)?
        }
        VerifyTarget::Grid => run_grid(&default_grid(), mode, cap),
        VerifyTarget::Family(name, params) => {
            let specs = family_specs(name, params)?;
            if specs.is_empty() {
                return Err(Error::InvalidFamily(
                    "no valid parameter combination in range".into(),
                ));
            }
            run_grid(&specs, mode, cap)
        }
    };
    Ok(verdict(&report, json))
}

fn run_grid(specs: &[FamilySpec], mode: Mode, cap: usize) -> VerificationReport {
    grid_report(verify_grid(specs, mode, cap), mode)
}
