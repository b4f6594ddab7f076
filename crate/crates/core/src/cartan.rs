//! Weight and root lattices of `sl_{n+1}` (type `A_n`), in exact arithmetic.
//!
//! Weights are stored in fundamental-weight coordinates, so pairing against a
//! coroot is a coordinate sum and simple roots are columns of the Cartan
//! matrix.  The symmetric form is normalized so that `(alpha_i, alpha_i) = 2`.

use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The rank `n` of `sl_{n+1}`; node set is `{1, ..., n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankContext {
    n: usize,
}

impl RankContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("rank must be >= 1".into()));
        }
        Ok(RankContext { n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Cartan matrix entry `a_{ij}`, 1-based.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    }

    /// Inverse Cartan matrix entry `(C^{-1})_{ij} = min(i,j) - ij/(n+1)`.
    pub fn cartan_inverse(&self, i: usize, j: usize) -> BigRational {
        let m = i.min(j) as i64;
        BigRational::new(BigInt::from(m * (self.n as i64 + 1) - (i * j) as i64), BigInt::from(self.n as i64 + 1))
    }

    /// The simple root `alpha_i` expressed in fundamental-weight coordinates
    /// (the `i`-th column of the Cartan matrix).
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        if i < 1 || i > self.n {
            return Err(Error::IndexOutOfRange(format!("node {i}")));
        }
        let coords = (1..=self.n).map(|j| self.cartan(j, i)).collect();
        Ok(Weight::new(coords))
    }

    /// The highest root `theta = alpha_{1,n}` in fundamental-weight coordinates.
    pub fn highest_root(&self) -> Weight {
        let mut w = Weight::zero(self.n);
        for i in 1..=self.n {
            w = w.add(&self.simple_root(i).unwrap()).unwrap();
        }
        w
    }

    pub fn fundamental(&self, i: usize) -> Result<Weight> {
        if i < 1 || i > self.n {
            return Err(Error::IndexOutOfRange(format!("node {i}")));
        }
        let mut coords = vec![0; self.n];
        coords[i - 1] = 1;
        Ok(Weight::new(coords))
    }

    /// All positive roots `alpha_{i,j}`, `1 <= i <= j <= n`.
    pub fn positive_roots(&self) -> Vec<RootRange> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i..=self.n {
                out.push(RootRange::new(self, i, j).unwrap());
            }
        }
        out
    }
}

/// An element of the weight lattice `P`, as integer coefficients of the
/// fundamental weights.  Dominance is a predicate, not an invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { coords: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coefficient of `omega_i`, 1-based.
    pub fn coord(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    fn check_rank(&self, other: &Weight) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Ok(Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Ok(Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight::new(self.coords.iter().map(|c| c * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    /// Image under the longest Weyl element: coordinates negated and reversed.
    pub fn w0(&self) -> Weight {
        Weight::new(self.coords.iter().rev().map(|c| -c).collect())
    }

    /// Support: nodes `i` with nonzero coordinate, in increasing order.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.coord(i) != 0).collect()
    }

    /// Sum of the fundamental coordinates.
    pub fn coord_sum(&self) -> i64 {
        self.coords.iter().sum()
    }
}

/// The positive root `alpha_{i,j} = alpha_i + ... + alpha_j`; also indexes
/// the coroot `h_{i,j}` and the root vectors `x^pm_{i,j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootRange {
    pub i: usize,
    pub j: usize,
}

impl RootRange {
    pub fn new(ctx: &RankContext, i: usize, j: usize) -> Result<Self> {
        if i < 1 || j > ctx.rank() || i > j {
            return Err(Error::IndexOutOfRange(format!("root range ({i},{j}) at rank {}", ctx.rank())));
        }
        Ok(RootRange { i, j })
    }

    /// Height `j - i + 1` of the root.
    pub fn height(&self) -> usize {
        self.j - self.i + 1
    }

    /// The root as a weight (sum of Cartan-matrix columns `i..=j`).
    pub fn as_weight(&self, ctx: &RankContext) -> Weight {
        let mut w = Weight::zero(ctx.rank());
        for k in self.i..=self.j {
            w = w.add(&ctx.simple_root(k).unwrap()).unwrap();
        }
        w
    }
}

/// `lambda(h_{i,j}) = sum of the coordinates i..=j`.
pub fn pair_coroot(ctx: &RankContext, lambda: &Weight, r: RootRange) -> Result<i64> {
    if lambda.rank() != ctx.rank() {
        return Err(Error::RankMismatch(lambda.rank(), ctx.rank()));
    }
    if r.j > ctx.rank() {
        return Err(Error::IndexOutOfRange(format!("root range ({},{})", r.i, r.j)));
    }
    Ok((r.i..=r.j).map(|k| lambda.coord(k)).sum())
}

/// The invariant symmetric form with `(alpha_i, alpha_i) = 2`:
/// `(lambda, mu) = lambda^T C^{-1} mu` in fundamental-weight coordinates.
pub fn inner_product(ctx: &RankContext, lambda: &Weight, mu: &Weight) -> Result<BigRational> {
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch(lambda.rank(), mu.rank()));
    }
    let mut acc = BigRational::from(BigInt::from(0));
    for i in 1..=ctx.rank() {
        let li = lambda.coord(i);
        if li == 0 {
            continue;
        }
        for j in 1..=ctx.rank() {
            let mj = mu.coord(j);
            if mj == 0 {
                continue;
            }
            acc += ctx.cartan_inverse(i, j) * BigRational::from(BigInt::from(li * mj));
        }
    }
    Ok(acc)
}

/// Is `lambda` in `P^+(1)`, i.e. dominant with every coordinate at most 1?
pub fn is_in_p1(lambda: &Weight) -> bool {
    lambda.coords().iter().all(|&c| c == 0 || c == 1)
}

/// Write a dominant `mu` uniquely as `2 nu + lambda` with `nu` dominant and
/// `lambda` in `P^+(1)`; `lambda_i = mu_i mod 2`.
pub fn parity_decompose(mu: &Weight) -> Result<(Weight, Weight)> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.coords().to_vec()));
    }
    let lambda = Weight::new(mu.coords().iter().map(|c| c % 2).collect());
    let nu = Weight::new(mu.coords().iter().map(|c| c / 2).collect());
    Ok((nu, lambda))
}

/// Split `lambda` in `P^+(1)` into its odd and even parts: `lambda^o` takes
/// the 1st, 3rd, 5th, ... supported nodes, `lambda^e` the rest.
pub fn odd_even_split(lambda: &Weight) -> Result<(Weight, Weight)> {
    if !is_in_p1(lambda) {
        return Err(Error::NotInP1(lambda.coords().to_vec()));
    }
    let mut odd = Weight::zero(lambda.rank());
    let mut even = Weight::zero(lambda.rank());
    for (pos, &node) in lambda.support().iter().enumerate() {
        if pos % 2 == 0 {
            odd.coords[node - 1] = 1;
        } else {
            even.coords[node - 1] = 1;
        }
    }
    Ok((odd, even))
}

/// Exact simple-root coordinates of a weight; errors if the weight is not in
/// the root lattice.
pub fn alpha_coords(ctx: &RankContext, w: &Weight) -> Result<Vec<i64>> {
    use num::Zero;
    let mut out = Vec::with_capacity(ctx.rank());
    for i in 1..=ctx.rank() {
        let mut ci = BigRational::zero();
        for j in 1..=ctx.rank() {
            ci += ctx.cartan_inverse(i, j) * BigRational::from(BigInt::from(w.coord(j)));
        }
        if !ci.is_integer() {
            return Err(Error::InvalidArgument(format!(
                "weight {:?} is not in the root lattice",
                w.coords()
            )));
        }
        out.push(
            i64::try_from(ci.to_integer())
                .map_err(|_| Error::InvalidArgument("root coordinate out of i64 range".into()))?,
        );
    }
    Ok(out)
}

/// Enumerate all dominant weights with coordinate sum at most `max_sum`.
pub fn dominant_weights_up_to(rank: usize, max_sum: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn rec(out: &mut Vec<Weight>, cur: &mut Vec<i64>, idx: usize, left: i64) {
        if idx == cur.len() {
            out.push(Weight::new(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[idx] = v;
            rec(out, cur, idx + 1, left - v);
        }
        cur[idx] = 0;
    }
    rec(&mut out, &mut cur, 0, max_sum);
    out
}

/// Enumerate all of `P^+(1)` for the given rank (all 0/1 coordinate vectors).
pub fn p1_weights(rank: usize) -> Vec<Weight> {
    (0..(1u64 << rank))
        .map(|mask| Weight::new((0..rank).map(|b| ((mask >> b) & 1) as i64).collect()))
        .collect()
}
