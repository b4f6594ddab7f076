//! Loop weights (Drinfeld data) with spectral parameters in `q^Z`.
//!
//! A factor `(i, m)` encodes `omega_{i, q^m}`.  The subset `P^+_Z(1)` consists
//! of loop weights with strictly increasing nodes whose consecutive exponent
//! differences are `+-(gap + 2)` with strictly alternating signs; these index
//! the prime irreducible representations studied here.  The quiver
//! correspondence realizes each of them from a height function on the `A_n`
//! path.

use serde::{Deserialize, Serialize};

use crate::cartan::{RankContext, Weight};
use crate::{Error, Result};

/// A multiset of `(node, exponent)` factors, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LoopWeight {
    factors: Vec<(usize, i64)>,
}

impl LoopWeight {
    pub fn new(mut factors: Vec<(usize, i64)>) -> Self {
        factors.sort();
        LoopWeight { factors }
    }

    pub fn empty() -> Self {
        LoopWeight { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[(usize, i64)] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product in the monoid `P^+_Z` (multiset union).
    pub fn mul(&self, other: &LoopWeight) -> LoopWeight {
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().copied());
        LoopWeight::new(f)
    }

    /// Shift every exponent by `s` (multiplication of all spectral parameters
    /// by `q^s`).
    pub fn shift(&self, s: i64) -> LoopWeight {
        LoopWeight { factors: self.factors.iter().map(|&(i, m)| (i, m + s)).collect() }
    }

    /// Negate every exponent (swap the two orientations of Def-style chains).
    pub fn reflect_exponents(&self) -> LoopWeight {
        LoopWeight::new(self.factors.iter().map(|&(i, m)| (i, -m)).collect())
    }

    /// Shift so the first factor has exponent 0.
    pub fn normalize(&self) -> LoopWeight {
        match self.factors.first() {
            None => self.clone(),
            Some(&(_, m)) => self.shift(-m),
        }
    }
}

/// `wt pi`: coordinate `i` counts the factors at node `i`.
pub fn weight_of(ctx: &RankContext, pi: &LoopWeight) -> Result<Weight> {
    let mut coords = vec![0i64; ctx.rank()];
    for &(i, _) in pi.factors() {
        if i < 1 || i > ctx.rank() {
            return Err(Error::IndexOutOfRange(format!("node {i} at rank {}", ctx.rank())));
        }
        coords[i - 1] += 1;
    }
    Ok(Weight::new(coords))
}

/// Membership in `P^+_Z(1)`: distinct increasing nodes, consecutive exponent
/// differences `+-(i_{j+1} - i_j + 2)` with strictly alternating signs.
pub fn in_p1(pi: &LoopWeight) -> bool {
    let f = pi.factors();
    for w in f.windows(2) {
        if w[0].0 >= w[1].0 {
            return false;
        }
    }
    let mut prev_sign = 0i64;
    for w in f.windows(2) {
        let gap = (w[1].0 - w[0].0) as i64 + 2;
        let diff = w[1].1 - w[0].1;
        let sign = if diff == gap {
            1
        } else if diff == -gap {
            -1
        } else {
            return false;
        };
        if sign == prev_sign {
            return false;
        }
        prev_sign = sign;
    }
    true
}

/// Split `pi` into its odd- and even-indexed factors (by node order).
pub fn oe_split(pi: &LoopWeight) -> Result<(LoopWeight, LoopWeight)> {
    if !in_p1(pi) {
        return Err(Error::LoopWeightNotInP1);
    }
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for (pos, &f) in pi.factors().iter().enumerate() {
        if pos % 2 == 0 {
            odd.push(f);
        } else {
            even.push(f);
        }
    }
    Ok((LoopWeight::new(odd), LoopWeight::new(even)))
}

/// Is the ordered pair `omega_{jr, q^br} (x) omega_{js, q^bs}` free of a
/// singular ratio?  Singular ratios are `q^{2p+2-js-jr}` for integers `p`
/// with `max{jr, js} < p+1 <= min{jr+js, n+1}`.
pub fn is_pair_nonsingular(ctx: &RankContext, jr: usize, br: i64, js: usize, bs: i64) -> bool {
    let lo = jr.max(js) as i64; // p+1 > lo
    let hi = (jr + js).min(ctx.rank() + 1) as i64; // p+1 <= hi
    for p1 in (lo + 1)..=hi {
        if br - bs == 2 * p1 - (js as i64) - (jr as i64) {
            return false;
        }
    }
    true
}

/// All ordered pairs nonsingular: the full tensor product is irreducible.
pub fn tensor_irreducible(ctx: &RankContext, list: &[(usize, i64)]) -> bool {
    for r in 0..list.len() {
        for s in 0..list.len() {
            if r != s && !is_pair_nonsingular(ctx, list[r].0, list[r].1, list[s].0, list[s].1) {
                return false;
            }
        }
    }
    true
}

/// Nonsingularity only for `s > r`: the ordered tensor product has a unique
/// irreducible submodule.
pub fn has_simple_socle(ctx: &RankContext, list: &[(usize, i64)]) -> bool {
    for r in 0..list.len() {
        for s in (r + 1)..list.len() {
            if !is_pair_nonsingular(ctx, list[r].0, list[r].1, list[s].0, list[s].1) {
                return false;
            }
        }
    }
    true
}

/// Closed-form relative exponents for the "+ first" chain on the given nodes:
/// `r_1 = 0`, `r_2 = i_2 - i_1 + 2`, signs alternating thereafter.
pub fn rj_closed(nodes: &[usize]) -> Vec<i64> {
    let mut r = Vec::with_capacity(nodes.len());
    let mut cur = 0i64;
    r.push(cur);
    let mut sign = 1i64;
    for w in nodes.windows(2) {
        cur += sign * ((w[1] - w[0]) as i64 + 2);
        r.push(cur);
        sign = -sign;
    }
    r
}

/// Relative exponents `r_j` of `pi` (so `b_j = r_j + m` with `m = b_1`);
/// requires the "+ first" orientation.
pub fn rj_sequence(pi: &LoopWeight) -> Result<Vec<i64>> {
    if !in_p1(pi) {
        return Err(Error::LoopWeightNotInP1);
    }
    let f = pi.factors();
    if f.len() >= 2 && f[1].1 < f[0].1 {
        return Err(Error::WrongOrientation);
    }
    Ok(f.iter().map(|&(_, m)| m - f[0].1).collect())
}

/// The chain in `P^+_Z(1)` on the given nodes, "+ first" orientation, first
/// exponent `m`.
pub fn p1_from_nodes(nodes: &[usize], m: i64) -> LoopWeight {
    LoopWeight::new(nodes.iter().zip(rj_closed(nodes)).map(|(&i, r)| (i, r + m)).collect())
}

/// A height function on `{1..n}` with unit steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightFunction {
    kappa: Vec<i64>,
}

impl HeightFunction {
    pub fn new(kappa: Vec<i64>) -> Result<Self> {
        if kappa.is_empty() {
            return Err(Error::InvalidHeightFunction);
        }
        for w in kappa.windows(2) {
            if (w[1] - w[0]).abs() != 1 {
                return Err(Error::InvalidHeightFunction);
            }
        }
        Ok(HeightFunction { kappa })
    }

    pub fn rank(&self) -> usize {
        self.kappa.len()
    }

    /// `kappa(i)`, 1-based.
    pub fn at(&self, i: usize) -> i64 {
        self.kappa[i - 1]
    }

    pub fn values(&self) -> &[i64] {
        &self.kappa
    }
}

/// Orientation of the `A_n` path: `forward[e]` is true iff the edge between
/// nodes `e+1` and `e+2` points `e+1 -> e+2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    forward: Vec<bool>,
}

impl Quiver {
    pub fn edge_count(&self) -> usize {
        self.forward.len()
    }

    /// Does the edge between `i` and `i+1` point `i -> i+1`?
    pub fn points_forward(&self, i: usize) -> bool {
        self.forward[i - 1]
    }
}

/// Edges point uphill: `i -> i+1` iff `kappa(i) < kappa(i+1)`.
pub fn quiver_of(kappa: &HeightFunction) -> Quiver {
    Quiver { forward: kappa.values().windows(2).map(|w| w[0] < w[1]).collect() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Extremum {
    Min,
    Max,
    None,
}

/// Classify node `j` within the interval `[a, b]`; neighbors outside the
/// interval are ignored, and a single vertex counts as a minimum.
fn extremum_in(kappa: &HeightFunction, a: usize, b: usize, j: usize) -> Extremum {
    let left_up = j > a && kappa.at(j - 1) > kappa.at(j);
    let left_down = j > a && kappa.at(j - 1) < kappa.at(j);
    let right_up = j < b && kappa.at(j + 1) > kappa.at(j);
    let right_down = j < b && kappa.at(j + 1) < kappa.at(j);
    if left_down || right_down {
        if left_up || right_up {
            Extremum::None
        } else {
            Extremum::Max
        }
    } else if left_up || right_up {
        Extremum::Min
    } else {
        Extremum::Min // single vertex
    }
}

/// The prime loop weight attached to a connected interval `J = [a, b]`:
/// local minima of `kappa` on `J` contribute `omega_{j, q^{kappa(j)}}`,
/// local maxima contribute `omega_{j, q^{kappa(j)+2}}`.
pub fn prime_of_subset(kappa: &HeightFunction, a: usize, b: usize) -> Result<LoopWeight> {
    if a < 1 || b > kappa.rank() || a > b {
        return Err(Error::InvalidNodeInterval);
    }
    let mut factors = Vec::new();
    for j in a..=b {
        match extremum_in(kappa, a, b, j) {
            Extremum::Min => factors.push((j, kappa.at(j))),
            Extremum::Max => factors.push((j, kappa.at(j) + 2)),
            Extremum::None => {}
        }
    }
    Ok(LoopWeight::new(factors))
}

/// A height function whose interval `[i_1, i_k]` reproduces `pi`:
/// the supported nodes alternate between local minima and maxima, `kappa`
/// is strictly monotone between them and extended by unit steps outside.
pub fn height_of_prime(rank: usize, pi: &LoopWeight) -> Result<HeightFunction> {
    if !in_p1(pi) {
        return Err(Error::LoopWeightNotInP1);
    }
    let f = pi.factors();
    if f.is_empty() {
        return Err(Error::InvalidArgument("empty loop weight has no support interval".into()));
    }
    if f.last().unwrap().0 > rank {
        return Err(Error::IndexOutOfRange(format!("node {} at rank {rank}", f.last().unwrap().0)));
    }
    // "+" orientation: i_1 is a minimum (kappa = exponent); "-": a maximum.
    let plus = f.len() < 2 || f[1].1 > f[0].1;
    let mut kappa = vec![0i64; rank];
    let i1 = f[0].0;
    kappa[i1 - 1] = if plus { f[0].1 } else { f[0].1 - 2 };
    let mut dir = if plus { 1i64 } else { -1 };
    for w in f.windows(2) {
        for j in w[0].0..w[1].0 {
            kappa[j] = kappa[j - 1] + dir;
        }
        dir = -dir;
    }
    // Unit-step extension outside the support interval.
    for j in (1..i1).rev() {
        kappa[j - 1] = kappa[j] + if plus { 1 } else { -1 };
    }
    let ik = f.last().unwrap().0;
    for j in (ik + 1)..=rank {
        kappa[j - 1] = kappa[j - 2] + dir;
    }
    HeightFunction::new(kappa)
}

/// All of `P^+_Z(1)` at the given rank, normalized (first exponent 0),
/// including the empty loop weight: one chain per node set of size <= 1,
/// two orientations per node set of size >= 2.
pub fn enumerate_p1(rank: usize) -> Vec<LoopWeight> {
    let mut out = vec![LoopWeight::empty()];
    for mask in 1u64..(1 << rank) {
        let nodes: Vec<usize> = (1..=rank).filter(|i| (mask >> (i - 1)) & 1 == 1).collect();
        let pi = p1_from_nodes(&nodes, 0);
        if nodes.len() >= 2 {
            out.push(pi.reflect_exponents().normalize());
        }
        out.push(pi);
    }
    out.sort();
    out
}
