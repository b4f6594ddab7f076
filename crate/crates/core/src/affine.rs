//! Affine weights of `sl_{n+1}^`, the affine Weyl group action, and the
//! simultaneous-dominance splitting used to embed a level-two Demazure module
//! into a tensor product of level-one modules.
//!
//! An affine weight is `classical + level * L0 + degree * delta`.  Reflections
//! fix the level and `delta`; lattice translations shift the classical part by
//! `level * mu` and pay for it in the `delta` coefficient, which is why the
//! degree is an exact rational.

use num::{BigInt, BigRational, Zero};

use crate::cartan::{inner_product, pair_coroot, RankContext, RootRange, Weight};
use crate::{Error, Result};

/// `classical + level * L0 + degree * delta` in the affine weight lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineWeight {
    pub classical: Weight,
    pub level: i64,
    pub degree: BigRational,
}

impl AffineWeight {
    pub fn new(classical: Weight, level: i64, degree: BigRational) -> Self {
        AffineWeight { classical, level, degree }
    }

    /// `L0` at the given rank.
    pub fn lambda0(rank: usize) -> Self {
        AffineWeight::new(Weight::zero(rank), 1, BigRational::zero())
    }

    /// `Lambda_i = omega_i + L0` (with `Lambda_0 = L0`).
    pub fn lambda(ctx: &RankContext, i: usize) -> Result<Self> {
        let classical = if i == 0 { Weight::zero(ctx.rank()) } else { ctx.fundamental(i)?.clone() };
        Ok(AffineWeight::new(classical, 1, BigRational::zero()))
    }

    /// `delta`.
    pub fn delta(rank: usize) -> Self {
        AffineWeight::new(Weight::zero(rank), 0, BigRational::from(BigInt::from(1)))
    }

    /// Lift a classical weight to level `level`, degree 0.
    pub fn from_classical(classical: Weight, level: i64) -> Self {
        AffineWeight::new(classical, level, BigRational::zero())
    }

    pub fn add(&self, other: &AffineWeight) -> Result<AffineWeight> {
        Ok(AffineWeight::new(
            self.classical.add(&other.classical)?,
            self.level + other.level,
            self.degree.clone() + other.degree.clone(),
        ))
    }
}

/// Value of the affine weight on the coroot `h_i`, `0 <= i <= n`;
/// `h_0 = c - h_{1,n}`.
pub fn eval_affine_coroot(ctx: &RankContext, lam: &AffineWeight, i: usize) -> Result<i64> {
    let n = ctx.rank();
    if i > n {
        return Err(Error::IndexOutOfRange(format!("affine node {i} at rank {n}")));
    }
    if i == 0 {
        Ok(lam.level - pair_coroot(ctx, &lam.classical, RootRange::new(ctx, 1, n)?)?)
    } else {
        Ok(lam.classical.coord(i))
    }
}

/// `s_i(L) = L - L(h_i) alpha_i`, with `alpha_0 = delta - theta`.
pub fn reflect(ctx: &RankContext, i: usize, lam: &AffineWeight) -> Result<AffineWeight> {
    let m = eval_affine_coroot(ctx, lam, i)?;
    if m == 0 {
        return Ok(lam.clone());
    }
    if i == 0 {
        // L - m (delta - theta) = L + m theta - m delta.
        let theta = ctx.highest_root();
        Ok(AffineWeight::new(
            lam.classical.add(&theta.scale(m))?,
            lam.level,
            lam.degree.clone() - BigRational::from(BigInt::from(m)),
        ))
    } else {
        let ai = ctx.simple_root(i)?;
        Ok(AffineWeight::new(lam.classical.sub(&ai.scale(m))?, lam.level, lam.degree.clone()))
    }
}

/// `t_mu(L)`: classical += level * mu,
/// degree -= (classical, mu) + level * (mu, mu) / 2.
pub fn translate(ctx: &RankContext, mu: &Weight, lam: &AffineWeight) -> Result<AffineWeight> {
    if mu.rank() != lam.classical.rank() {
        return Err(Error::RankMismatch(mu.rank(), lam.classical.rank()));
    }
    let cross = inner_product(ctx, &lam.classical, mu)?;
    let norm = inner_product(ctx, mu, mu)?;
    let half_level = BigRational::new(BigInt::from(lam.level), BigInt::from(2));
    Ok(AffineWeight::new(
        lam.classical.add(&mu.scale(lam.level))?,
        lam.level,
        lam.degree.clone() - cross - half_level * norm,
    ))
}

/// Dominance on all affine coroots `h_0, ..., h_n`; the `delta` coefficient
/// is unconstrained.
pub fn is_affine_dominant(ctx: &RankContext, lam: &AffineWeight) -> Result<bool> {
    for i in 0..=ctx.rank() {
        if eval_affine_coroot(ctx, lam, i)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A letter of an extended-affine-Weyl word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Letter {
    Reflect(usize),
    Translate(Weight),
}

/// A word in simple reflections and lattice translations, applied
/// right-to-left (last letter acts first).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AffineWord {
    pub letters: Vec<Letter>,
}

impl AffineWord {
    pub fn identity() -> Self {
        AffineWord { letters: Vec::new() }
    }

    pub fn apply(&self, ctx: &RankContext, lam: &AffineWeight) -> Result<AffineWeight> {
        let mut cur = lam.clone();
        for letter in self.letters.iter().rev() {
            cur = match letter {
                Letter::Reflect(i) => reflect(ctx, *i, &cur)?,
                Letter::Translate(mu) => translate(ctx, mu, &cur)?,
            };
        }
        Ok(cur)
    }

    /// `self` after `other`: `(self * other)(L) = self(other(L))`.
    pub fn compose(&self, other: &AffineWord) -> AffineWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        AffineWord { letters }
    }
}

/// Tie-break rule for `make_dominant`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    SmallestIndex,
    LargestIndex,
}

/// Straighten `L` (level >= 1) into the dominant chamber, recording the
/// reflections used: `word.apply(L+) == L`.
pub fn make_dominant(ctx: &RankContext, lam: &AffineWeight) -> Result<(AffineWord, AffineWeight)> {
    make_dominant_with(ctx, lam, TieBreak::SmallestIndex)
}

pub fn make_dominant_with(
    ctx: &RankContext,
    lam: &AffineWeight,
    tie: TieBreak,
) -> Result<(AffineWord, AffineWeight)> {
    if lam.level < 1 {
        return Err(Error::NonPositiveLevel(lam.level));
    }
    let mut cur = lam.clone();
    let mut letters = Vec::new();
    loop {
        let nodes: Vec<usize> = match tie {
            TieBreak::SmallestIndex => (0..=ctx.rank()).collect(),
            TieBreak::LargestIndex => (0..=ctx.rank()).rev().collect(),
        };
        let neg = nodes.into_iter().find_map(|i| {
            match eval_affine_coroot(ctx, &cur, i) {
                Ok(v) if v < 0 => Some(i),
                _ => None,
            }
        });
        match neg {
            None => break,
            Some(i) => {
                cur = reflect(ctx, i, &cur)?;
                letters.push(Letter::Reflect(i));
            }
        }
    }
    Ok((AffineWord { letters }, cur))
}

/// Is `w` in the positive root cone `Q^+` (nonnegative integral combination
/// of simple roots)?
fn in_q_plus(ctx: &RankContext, w: &Weight) -> bool {
    // alpha-coordinates of w are C^{-1} * coords; all must be nonneg integers.
    for i in 1..=ctx.rank() {
        let mut ci = BigRational::zero();
        for j in 1..=ctx.rank() {
            ci += ctx.cartan_inverse(i, j) * BigRational::from(BigInt::from(w.coord(j)));
        }
        if !ci.is_integer() || ci < BigRational::zero() {
            return false;
        }
    }
    true
}

fn fundamental_or_zero(ctx: &RankContext, i: usize) -> Weight {
    // omega_0 and omega_{n+1} degenerate to 0.
    if i == 0 || i > ctx.rank() {
        Weight::zero(ctx.rank())
    } else {
        ctx.fundamental(i).unwrap()
    }
}

/// Word making `lambda^o + L0` and `lambda^e + L0` simultaneously dominant,
/// by induction on the support of `lambda` in `P^+(1)`.
fn split_word(ctx: &RankContext, lambda: &Weight) -> Result<AffineWord> {
    let supp = lambda.support();
    let k = supp.len();
    if k <= 2 {
        return Ok(AffineWord::identity());
    }
    let n = ctx.rank();
    // Step word: ascending i_3..n, then descending (i_{k-2} - 1)..1, then 0.
    let pivot = supp[k - 3]; // i_{k-2}
    let mut letters = Vec::new();
    for j in supp[2]..=n {
        letters.push(Letter::Reflect(j));
    }
    for j in (1..pivot).rev() {
        letters.push(Letter::Reflect(j));
    }
    letters.push(Letter::Reflect(0));
    let step = AffineWord { letters };

    let mut mu = Weight::zero(n);
    if k == 3 {
        for i in [supp[0] - 1, supp[1], supp[2] + 1] {
            mu = mu.add(&fundamental_or_zero(ctx, i))?;
        }
    } else {
        mu = mu.add(&fundamental_or_zero(ctx, supp[0] - 1))?;
        mu = mu.add(&fundamental_or_zero(ctx, supp[1] - 1))?;
        for &i in &supp[2..k - 2] {
            mu = mu.add(&fundamental_or_zero(ctx, i))?;
        }
        mu = mu.add(&fundamental_or_zero(ctx, supp[k - 2] + 1))?;
        mu = mu.add(&fundamental_or_zero(ctx, supp[k - 1] + 1))?;
    }
    let diff = lambda.sub(&mu)?;
    if diff.is_zero() || !in_q_plus(ctx, &diff) {
        return Err(Error::InvalidArgument(format!(
            "splitting recursion did not descend: {:?} -> {:?}",
            lambda.coords(),
            mu.coords()
        )));
    }
    Ok(split_word(ctx, &mu)?.compose(&step))
}

/// Produce a word `w` with `w(nu + lambda^o + L0)` and `w(nu + lambda^e + L0)`
/// both affine-dominant, together with the two images.
pub fn split_dominant(
    ctx: &RankContext,
    nu: &Weight,
    lambda: &Weight,
) -> Result<(AffineWord, AffineWeight, AffineWeight)> {
    if !nu.is_dominant() {
        return Err(Error::NotDominant(nu.coords().to_vec()));
    }
    if !crate::cartan::is_in_p1(lambda) {
        return Err(Error::NotInP1(lambda.coords().to_vec()));
    }
    let mut word = split_word(ctx, lambda)?;
    if !nu.is_zero() {
        // nu-reduction: follow with the translation by -(w nu).
        let wnu = word.apply(ctx, &AffineWeight::from_classical(nu.clone(), 0))?;
        word = AffineWord { letters: vec![Letter::Translate(wnu.classical.neg())] }.compose(&word);
    }
    let (lo, le) = crate::cartan::odd_even_split(lambda)?;
    let img_o = word.apply(ctx, &AffineWeight::from_classical(nu.add(&lo)?, 1))?;
    let img_e = word.apply(ctx, &AffineWeight::from_classical(nu.add(&le)?, 1))?;
    debug_assert!(is_affine_dominant(ctx, &img_o)? && is_affine_dominant(ctx, &img_e)?);
    Ok((word, img_o, img_e))
}
