//! Status connectivity indices, status co-indices and Zagreb (co-)indices,
//! together with the identities and shortcuts that relate them.
//!
//! Every sum here is exact. Edge and pair enumerations accumulate in checked
//! `u128` and are returned as [`BigInt`]; closed-form identities are
//! evaluated directly in [`BigInt`]. Halving always happens after the even
//! quantity has been formed, and fails loudly if it is odd.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{binomial_int, checked_add_u128, checked_mul_u128, halve};
use crate::error::{Error, Result};
use crate::graph::{transmission_profile, Graph, TransmissionProfile};

/// The four transmission-based indices of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatusValues {
    pub s1: BigInt,
    pub s2: BigInt,
    pub s1_co: BigInt,
    pub s2_co: BigInt,
}

impl StatusValues {
    pub fn from_u128(s1: u128, s2: u128, s1_co: u128, s2_co: u128) -> Self {
        StatusValues {
            s1: s1.into(),
            s2: s2.into(),
            s1_co: s1_co.into(),
            s2_co: s2_co.into(),
        }
    }
}

/// Every index of a connected graph, computed from the defining sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexBundle {
    pub s1: BigInt,
    pub s2: BigInt,
    pub s1_co: BigInt,
    pub s2_co: BigInt,
    pub m1: BigInt,
    pub m2: BigInt,
    pub m1_co: BigInt,
    pub m2_co: BigInt,
    pub wiener: BigInt,
}

impl IndexBundle {
    pub fn status(&self) -> StatusValues {
        StatusValues {
            s1: self.s1.clone(),
            s2: self.s2.clone(),
            s1_co: self.s1_co.clone(),
            s2_co: self.s2_co.clone(),
        }
    }
}

fn check_profile(g: &Graph, tp: &TransmissionProfile) -> Result<()> {
    if tp.n() != g.n() {
        return Err(Error::Precondition(format!(
            "transmission profile has {} vertices, graph has {}",
            tp.n(),
            g.n()
        )));
    }
    Ok(())
}

fn pair_sums<I>(pairs: I, weight: &[u64]) -> Result<(u128, u128)>
where
    I: Iterator<Item = (usize, usize)>,
{
    let mut sum = 0u128;
    let mut product = 0u128;
    for (u, v) in pairs {
        let (a, b) = (u128::from(weight[u]), u128::from(weight[v]));
        sum = checked_add_u128(sum, a + b, "pair sum")?;
        product = checked_add_u128(
            product,
            checked_mul_u128(a, b, "pair product")?,
            "pair product",
        )?;
    }
    Ok((sum, product))
}

/// `S1 = Σ_{uv∈E} σ(u)+σ(v)` and `S2 = Σ_{uv∈E} σ(u)σ(v)`.
pub fn status_indices(g: &Graph, tp: &TransmissionProfile) -> Result<(BigInt, BigInt)> {
    check_profile(g, tp)?;
    let (s1, s2) = pair_sums(g.edges(), &tp.sigma)?;
    Ok((s1.into(), s2.into()))
}

/// Co-indices by enumerating every non-adjacent pair. This is the
/// brute-force reference for [`status_coindices_identity`].
pub fn status_coindices_direct(g: &Graph, tp: &TransmissionProfile) -> Result<(BigInt, BigInt)> {
    check_profile(g, tp)?;
    let (s1, s2) = pair_sums(g.non_edges(), &tp.sigma)?;
    Ok((s1.into(), s2.into()))
}

/// Co-indices from the Wiener index and the edge indices:
/// `S̄1 = 2(n−1)W − S1`, `S̄2 = ½[(Σσ)² − Σσ²] − S2`.
pub fn status_coindices_identity(
    tp: &TransmissionProfile,
    s1: &BigInt,
    s2: &BigInt,
) -> Result<(BigInt, BigInt)> {
    let n = BigInt::from(tp.n());
    let w = BigInt::from(tp.wiener);
    let s1_co = BigInt::from(2) * (n - 1) * &w - s1;

    let total = BigInt::from(tp.sigma_total());
    let squares: BigInt = tp.sigma.iter().map(|&s| BigInt::from(s) * s).sum();
    let pair_products = halve(
        &(&total * &total - squares),
        "sum of transmission pair products",
    )?;
    let s2_co = pair_products - s2;
    Ok((s1_co, s2_co))
}

/// First and second Zagreb indices (degree sums/products over edges).
pub fn zagreb_indices(g: &Graph) -> Result<(BigInt, BigInt)> {
    let degrees = degrees_u64(g);
    let (m1, m2) = pair_sums(g.edges(), &degrees)?;
    Ok((m1.into(), m2.into()))
}

/// Zagreb co-indices (degree sums/products over non-adjacent pairs).
pub fn zagreb_coindices(g: &Graph) -> Result<(BigInt, BigInt)> {
    let degrees = degrees_u64(g);
    let (m1, m2) = pair_sums(g.non_edges(), &degrees)?;
    Ok((m1.into(), m2.into()))
}

fn degrees_u64(g: &Graph) -> Vec<u64> {
    g.degrees().into_iter().map(|d| d as u64).collect()
}

/// Computes the transmission profile and every index from definitions.
pub fn compute_indices(g: &Graph) -> Result<(TransmissionProfile, IndexBundle)> {
    let tp = transmission_profile(g)?;
    let bundle = index_bundle(g, &tp)?;
    Ok((tp, bundle))
}

pub fn index_bundle(g: &Graph, tp: &TransmissionProfile) -> Result<IndexBundle> {
    let (s1, s2) = status_indices(g, tp)?;
    let (s1_co, s2_co) = status_coindices_direct(g, tp)?;
    let (m1, m2) = zagreb_indices(g)?;
    let (m1_co, m2_co) = zagreb_coindices(g)?;
    Ok(IndexBundle {
        s1,
        s2,
        s1_co,
        s2_co,
        m1,
        m2,
        m1_co,
        m2_co,
        wiener: tp.wiener.into(),
    })
}

/// The four co-index expressions that hold for graphs of diameter at most 2:
/// two in terms of `n, m, M1, M2`, two in terms of `n, m, M̄1, M̄2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diam2Formulas {
    pub s1_co_from_zagreb: BigInt,
    pub s2_co_from_zagreb: BigInt,
    pub s1_co_from_cozagreb: BigInt,
    pub s2_co_from_cozagreb: BigInt,
}

pub fn diam2_coindex_formulas(g: &Graph) -> Result<Diam2Formulas> {
    let tp = transmission_profile(g)?;
    if tp.diameter > 2 {
        return Err(Error::Precondition(format!(
            "diameter is {}, formulas need diameter ≤ 2",
            tp.diameter
        )));
    }
    let n = BigInt::from(g.n());
    let m = BigInt::from(g.m());
    let (m1, m2) = zagreb_indices(g)?;
    let (m1_co, m2_co) = zagreb_coindices(g)?;
    let two = BigInt::from(2);
    let n1 = &n - 1;
    let n1_sq = &n1 * &n1;

    let s1_co_from_zagreb = &two * &n * &n1_sq - BigInt::from(6) * &m * &n1 + &m1;
    // (n−1)²[2n(n−1) − 8m] + 2m² + (2n − 5/2)M1 − M2, doubled to clear the 5/2
    let doubled = &two * &n1_sq * (&two * &n * &n1 - BigInt::from(8) * &m)
        + BigInt::from(4) * &m * &m
        + (BigInt::from(4) * &n - 5) * &m1
        - &two * &m2;
    let s2_co_from_zagreb = halve(&doubled, "diameter-2 second co-index")?;

    let free_pairs = &n * &n1 - &two * &m;
    let s1_co_from_cozagreb = &two * &n1 * &free_pairs - &m1_co;
    let s2_co_from_cozagreb = &two * &n1_sq * &free_pairs - &two * &n1 * &m1_co + &m2_co;

    Ok(Diam2Formulas {
        s1_co_from_zagreb,
        s2_co_from_zagreb,
        s1_co_from_cozagreb,
        s2_co_from_cozagreb,
    })
}

/// Lower bounds on the status indices of the complement, and the actual values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub s1_lower: BigInt,
    pub s2_lower: BigInt,
    pub s1_actual: BigInt,
    pub s2_actual: BigInt,
    /// Both bounds are attained.
    pub equality: bool,
    pub complement_diameter: u32,
}

/// Bounds `S1(Ḡ) ≥ (n−1)[n(n−1)−2m] + M̄1(G)` and
/// `S2(Ḡ) ≥ (n−1)²[n(n−1)/2 − m] + (n−1)M̄1(G) + M̄2(G)`, evaluated from `g`
/// and compared with the indices of the complement.
pub fn complement_bounds(g: &Graph) -> Result<BoundsReport> {
    let co = g.complement();
    let tp = transmission_profile(&co)?;
    let (s1_actual, s2_actual) = status_indices(&co, &tp)?;

    let n = BigInt::from(g.n());
    let m = BigInt::from(g.m());
    let n1 = &n - 1;
    let (m1_co, m2_co) = zagreb_coindices(g)?;
    let non_edges = halve(&(&n * &n1), "pair count")? - &m;

    let s1_lower = &n1 * (&n * &n1 - BigInt::from(2) * &m) + &m1_co;
    let s2_lower = &n1 * &n1 * &non_edges + &n1 * &m1_co + &m2_co;
    let equality = s1_actual == s1_lower && s2_actual == s2_lower;
    Ok(BoundsReport {
        s1_lower,
        s2_lower,
        s1_actual,
        s2_actual,
        equality,
        complement_diameter: tp.diameter,
    })
}

/// Indices of a connected `k`-transmission-regular graph with `n` vertices
/// and `m` edges: `S1 = 2mk`, `S2 = mk²`, `S̄1 = 2·C(n,2)·k − 2mk`,
/// `S̄2 = (C(n,2) − m)k²`.
pub fn transmission_regular_indices(n: u64, m: u64, k: u64) -> Result<StatusValues> {
    let pairs = binomial_int(n, 2);
    let m_big = BigInt::from(m);
    if k == 0 || m == 0 || m_big > pairs {
        return Err(Error::Precondition(format!(
            "need k > 0 and 0 < m ≤ C(n,2); got n={n}, m={m}, k={k}"
        )));
    }
    let k = BigInt::from(k);
    let k_sq = &k * &k;
    Ok(StatusValues {
        s1: BigInt::from(2) * &m_big * &k,
        s2: &m_big * &k_sq,
        s1_co: BigInt::from(2) * &pairs * &k - BigInt::from(2) * &m_big * &k,
        s2_co: (&pairs - &m_big) * &k_sq,
    })
}

/// Indices of a vertex-transitive graph of order `n`, degree `d` and
/// transmission `k`: `S1 = ndk`, `S2 = ½ndk²`, `S̄1 = 2·C(n,2)·k − ndk`,
/// `S̄2 = (C(n,2) − nd/2)k²`.
pub fn vertex_transitive_indices(n: u64, d: u64, k: u64) -> Result<StatusValues> {
    let (nb, db, kb) = (BigInt::from(n), BigInt::from(d), BigInt::from(k));
    let pairs = binomial_int(n, 2);
    let ndk = &nb * &db * &kb;
    let half_nd = halve(&(&nb * &db), "edge count n·d/2")?;
    Ok(StatusValues {
        s2: halve(&(&ndk * &kb), "½ndk²")?,
        s1_co: BigInt::from(2) * &pairs * &kb - &ndk,
        s2_co: (pairs - half_nd) * &kb * &kb,
        s1: ndk,
    })
}

/// A partition of the vertex set whose blocks have constant degree and
/// constant transmission. True automorphism orbits always qualify; the
/// converse is not checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    blocks: Vec<Vec<usize>>,
}

/// Per-block data consumed by the orbit formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitBlock {
    pub size: u64,
    pub degree: u64,
    pub transmission: u64,
}

impl OrbitPartition {
    pub fn new(blocks: Vec<Vec<usize>>, g: &Graph, tp: &TransmissionProfile) -> Result<Self> {
        check_profile(g, tp)?;
        let n = g.n();
        let mut seen = BTreeSet::new();
        for (i, block) in blocks.iter().enumerate() {
            let Some(&first) = block.first() else {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            };
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if !seen.insert(v) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
                if g.degree(v) != g.degree(first) {
                    return Err(Error::InvalidPartition(format!(
                        "block {i}: degree of {v} differs from degree of {first}"
                    )));
                }
                if tp.sigma[v] != tp.sigma[first] {
                    return Err(Error::InvalidPartition(format!(
                        "block {i}: transmission of {v} differs from transmission of {first}"
                    )));
                }
            }
        }
        if seen.len() != n {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {} of {n} vertices",
                seen.len()
            )));
        }
        Ok(OrbitPartition { blocks })
    }

    /// The partition with all vertices in one block.
    pub fn single(g: &Graph, tp: &TransmissionProfile) -> Result<Self> {
        Self::new(vec![(0..g.n()).collect()], g, tp)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn summary(&self, g: &Graph, tp: &TransmissionProfile) -> Vec<OrbitBlock> {
        self.blocks
            .iter()
            .map(|b| OrbitBlock {
                size: b.len() as u64,
                degree: g.degree(b[0]) as u64,
                transmission: tp.sigma[b[0]],
            })
            .collect()
    }
}

/// `S1 = Σ|V_i|·d_i·k_i` and `S̄1 = Σ|V_i|·k_i·(n−1−d_i)` over the blocks.
pub fn orbit_indices(
    g: &Graph,
    tp: &TransmissionProfile,
    op: &OrbitPartition,
) -> Result<(BigInt, BigInt)> {
    check_profile(g, tp)?;
    let n1 = BigInt::from(g.n()) - 1;
    let mut s1 = BigInt::zero();
    let mut s1_co = BigInt::zero();
    for block in op.summary(g, tp) {
        let weight = BigInt::from(block.size) * block.transmission;
        s1 += &weight * block.degree;
        s1_co += &weight * (&n1 - block.degree);
    }
    debug_assert!(!s1_co.is_negative());
    Ok((s1, s1_co))
}

/// `S2 = ½ndk²` for a single-block partition; other orbit data does not
/// determine `S2`.
pub fn orbit_s2(g: &Graph, tp: &TransmissionProfile, op: &OrbitPartition) -> Result<BigInt> {
    let [block] = &op.summary(g, tp)[..] else {
        return Err(Error::Precondition(
            "S2 from orbit data needs a single (vertex-transitive) block".into(),
        ));
    };
    let value = BigInt::from(block.size) * block.degree * block.transmission * block.transmission;
    halve(&value, "½ndk²")
}
