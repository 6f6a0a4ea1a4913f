//! Closed-form index values for the generated families.
//!
//! Each report carries two evaluations per index: `corrected`, derived from
//! the family's order, size and transmission through the
//! transmission-regular identities, and `as_printed`, a literal evaluation
//! of the published expression. They are allowed to disagree; the
//! disagreement is recorded as data (`erratum`), not raised as an error.

use num_bigint::BigInt;

use crate::arith::{binomial_int, exact_div, halve};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::indices::{transmission_regular_indices, StatusValues};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormValue {
    pub corrected: BigInt,
    pub as_printed: Option<BigInt>,
    pub erratum: bool,
}

impl ClosedFormValue {
    fn new(corrected: BigInt, as_printed: Option<BigInt>) -> Self {
        let erratum = as_printed.as_ref().is_some_and(|p| *p != corrected);
        ClosedFormValue {
            corrected,
            as_printed,
            erratum,
        }
    }

    fn exact(value: BigInt) -> Self {
        Self::new(value, None)
    }

    /// The printed value where one exists, otherwise the corrected one.
    pub fn printed_or_corrected(&self) -> &BigInt {
        self.as_printed.as_ref().unwrap_or(&self.corrected)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexName {
    Sigma,
    Wiener,
    S1,
    S2,
    S1Co,
    S2Co,
}

impl IndexName {
    pub const ALL: [IndexName; 6] = [
        IndexName::Sigma,
        IndexName::Wiener,
        IndexName::S1,
        IndexName::S2,
        IndexName::S1Co,
        IndexName::S2Co,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IndexName::Sigma => "sigma",
            IndexName::Wiener => "wiener",
            IndexName::S1 => "s1",
            IndexName::S2 => "s2",
            IndexName::S1Co => "s1_co",
            IndexName::S2Co => "s2_co",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormReport {
    pub family: FamilySpec,
    pub n: BigInt,
    pub m: BigInt,
    pub degree: BigInt,
    pub sigma: ClosedFormValue,
    pub wiener: ClosedFormValue,
    pub s1: ClosedFormValue,
    pub s2: ClosedFormValue,
    pub s1_co: ClosedFormValue,
    pub s2_co: ClosedFormValue,
}

impl ClosedFormReport {
    pub fn get(&self, index: IndexName) -> &ClosedFormValue {
        match index {
            IndexName::Sigma => &self.sigma,
            IndexName::Wiener => &self.wiener,
            IndexName::S1 => &self.s1,
            IndexName::S2 => &self.s2,
            IndexName::S1Co => &self.s1_co,
            IndexName::S2Co => &self.s2_co,
        }
    }

    pub fn errata(&self) -> impl Iterator<Item = IndexName> + '_ {
        IndexName::ALL.into_iter().filter(|&i| self.get(i).erratum)
    }
}

fn big<T: Into<BigInt>>(x: T) -> BigInt {
    x.into()
}

fn to_u64(x: &BigInt, what: &'static str) -> Result<u64> {
    u64::try_from(x).map_err(|_| Error::Overflow(what))
}

/// Builds the report for a transmission-regular family of order `n`, size
/// `m`, degree `d` and transmission `k`, attaching printed values for the
/// four indices.
fn regular_report(
    family: FamilySpec,
    n: BigInt,
    d: BigInt,
    k: BigInt,
    wiener_printed: Option<BigInt>,
    printed: [Option<BigInt>; 4],
) -> Result<ClosedFormReport> {
    let m = halve(&(&n * &d), "edge count n·d/2")?;
    let wiener = halve(&(&n * &k), "Wiener index n·k/2")?;
    let corrected = transmission_regular_indices(
        to_u64(&n, "vertex count")?,
        to_u64(&m, "edge count")?,
        to_u64(&k, "transmission")?,
    )?;
    check_coindex_identities(&n, &k, &wiener, &corrected)?;

    let [s1, s2, s1_co, s2_co] = printed;
    Ok(ClosedFormReport {
        family,
        n,
        m,
        degree: d,
        sigma: ClosedFormValue::exact(k),
        wiener: ClosedFormValue::new(wiener, wiener_printed),
        s1: ClosedFormValue::new(corrected.s1, s1),
        s2: ClosedFormValue::new(corrected.s2, s2),
        s1_co: ClosedFormValue::new(corrected.s1_co, s1_co),
        s2_co: ClosedFormValue::new(corrected.s2_co, s2_co),
    })
}

/// Corrected values must satisfy `S̄1 = 2(n−1)W − S1` and
/// `S̄2 = 2W² − ½nk² − S2`.
fn check_coindex_identities(n: &BigInt, k: &BigInt, w: &BigInt, v: &StatusValues) -> Result<()> {
    let s1_co = big(2) * (n - 1) * w - &v.s1;
    let s2_co = big(2) * w * w - halve(&(n * k * k), "½Σσ²")? - &v.s2;
    if s1_co != v.s1_co || s2_co != v.s2_co {
        return Err(Error::Precondition(format!(
            "corrected co-indices ({}, {}) violate the Wiener identities ({s1_co}, {s2_co})",
            v.s1_co, v.s2_co
        )));
    }
    Ok(())
}

/// Uniform intersection graph of the `t`-subsets of a `p`-set.
pub fn intersection_closed_forms(p: u32, t: u32) -> Result<ClosedFormReport> {
    let family = FamilySpec::Intersection { p, t };
    family.validate()?;
    let n = binomial_int(p.into(), t.into());
    let one = big(1);
    let half_n = |x: BigInt| halve(&(&n * x), "½·C(p,t)·…");
    let pairs = binomial_int(to_u64(&n, "vertex count")?, 2);

    let (d, k, printed) = if p >= 2 * t {
        let b = binomial_int((p - t).into(), t.into());
        let d = &n - &b - &one;
        let k = &n + &b - &one;
        let printed = [
            Some(&n * &d * &k),
            Some(half_n(&d * &k * &k)?),
            Some(&b * &n * &k),
            Some((&pairs - half_n(d.clone())?) * &k * &k),
        ];
        (d, k, printed)
    } else {
        let d = &n - &one;
        let k = &n - &one;
        let printed = [
            Some(&n * &d * &d),
            Some(half_n(&d * &d * &d)?),
            Some(big(2) * &pairs * &d - &n * &d * &d),
            Some((&pairs - half_n(d.clone())?) * &d * &d),
        ];
        (d, k, printed)
    };
    let wiener_printed = half_n(k.clone())?;
    regular_report(family, n.clone(), d, k, Some(wiener_printed), printed)
}

/// Hypercube `Q_n` with `2^n` vertices, degree `n` and transmission `n·2^(n−1)`.
pub fn hypercube_closed_forms(n: u32) -> Result<ClosedFormReport> {
    let family = FamilySpec::Hypercube { n };
    family.validate()?;
    let dim = big(n);
    let pow = |e: u32| big(1) << e;
    let order = pow(n);
    let k = &dim * pow(n - 1);

    let nn = &dim * &dim;
    let printed = [
        Some(&nn * pow(2 * n - 1)),
        Some(&nn * &dim * pow(3 * n - 3)),
        Some(big(2) * &nn * pow(n - 1) * (big(2) * &dim - 5)),
        Some(&nn * pow(2 * n - 2) * (&dim * (big(2) * &dim - 1) - 1)),
    ];
    regular_report(family, order, dim, k, None, printed)
}

/// Kneser graph `KG(p,k)` given its Wiener index, which has no closed form
/// here and is supplied by the caller (normally from BFS on the generated
/// graph).
pub fn kneser_closed_forms(p: u32, k: u32, wiener: &BigInt) -> Result<ClosedFormReport> {
    let family = FamilySpec::Kneser { p, k };
    family.validate()?;
    let n = binomial_int(p.into(), k.into());
    let d = binomial_int((p - k).into(), k.into());
    let w = wiener.clone();
    let two_w = big(2) * &w;
    let sigma = exact_div(&two_w, &n, "Kneser transmission 2W/C(p,k)")?;
    let two_w_sq_over_n = exact_div(&(&two_w * &w), &n, "2W²/C(p,k)")?;

    let printed = [
        Some(&two_w * &d),
        Some(&d * &two_w_sq_over_n),
        Some(&two_w * (&n - &d - 1)),
        Some(big(2) * &w * &w - &w - &d * &two_w_sq_over_n),
    ];
    let report = regular_report(family, n, d, sigma, None, printed)?;
    if report.wiener.corrected != w {
        return Err(Error::NonIntegral(format!(
            "Wiener index {w} inconsistent with KG({p},{k})"
        )));
    }
    Ok(report)
}

/// Achiral polyhex nanotorus `T[p,q]`, two branches on `q < p`.
pub fn nanotorus_closed_forms(p: u32, q: u32) -> Result<ClosedFormReport> {
    if p < 2 || q < 2 || !p.is_multiple_of(2) || !q.is_multiple_of(2) {
        return Err(Error::InvalidFamily(format!(
            "nanotorus closed forms need even p, q ≥ 2, got p={p}, q={q}"
        )));
    }
    let family = FamilySpec::Nanotorus { p, q };
    let (pb, qb) = (big(p), big(q));
    let pq = &pb * &qb;
    let ctx = "nanotorus closed form";

    // (scale, polynomial) with σ = scale·poly/12 in both branches
    let (scale, poly, weight) = if q < p {
        let poly = big(6) * &pb * &pb + &qb * &qb - 4;
        (qb.clone(), poly, &pb * &qb * &qb)
    } else {
        let poly = big(3) * &qb * &qb + big(3) * &pb * &qb + &pb * &pb - 4;
        (pb.clone(), poly, &pb * &pb * &qb)
    };
    // weight is p·q² (resp. p²·q); the S2 prefactors use p·q³ (resp. p³·q)
    let weight_cubed = &weight * &scale;
    let sigma = exact_div(&(&scale * &poly), &big(12), ctx)?;
    let wiener_printed = exact_div(&(&weight * &poly), &big(24), ctx)?;
    let printed = [
        Some(exact_div(&(&weight * &poly), &big(4), ctx)?),
        Some(exact_div(&(&weight_cubed * &poly * &poly), &big(96), ctx)?),
        Some(exact_div(&(&weight * (&pq - 4) * &poly), &big(12), ctx)?),
        Some(exact_div(
            &(&weight_cubed * (&pq - 4) * &poly * &poly),
            &big(288),
            ctx,
        )?),
    ];
    regular_report(family, pq, big(3), sigma, Some(wiener_printed), printed)
}

pub fn cycle_closed_forms(n: u32) -> Result<ClosedFormReport> {
    let family = FamilySpec::Cycle { n };
    family.validate()?;
    let k = big(n) * big(n) / 4;
    regular_report(family, big(n), big(2), k, None, [None, None, None, None])
}

pub fn complete_closed_forms(n: u32) -> Result<ClosedFormReport> {
    let family = FamilySpec::Complete { n };
    family.validate()?;
    if n < 2 {
        return Err(Error::NoClosedForm("complete graph on one vertex".into()));
    }
    let d = big(n - 1);
    regular_report(family, big(n), d.clone(), d, None, [None, None, None, None])
}

/// Dispatches on the family. Kneser graphs need their Wiener index.
pub fn closed_forms(spec: &FamilySpec, wiener: Option<&BigInt>) -> Result<ClosedFormReport> {
    match *spec {
        FamilySpec::Hypercube { n } => hypercube_closed_forms(n),
        FamilySpec::Intersection { p, t } => intersection_closed_forms(p, t),
        FamilySpec::Nanotorus { p, q } => nanotorus_closed_forms(p, q),
        FamilySpec::Kneser { p, k } => match wiener {
            Some(w) => kneser_closed_forms(p, k, w),
            None => Err(Error::Precondition(
                "Kneser closed forms need the Wiener index of the graph".into(),
            )),
        },
        FamilySpec::Cycle { n } => cycle_closed_forms(n),
        FamilySpec::Complete { n } => complete_closed_forms(n),
        FamilySpec::Path { .. } => Err(Error::NoClosedForm(spec.to_string())),
    }
}
