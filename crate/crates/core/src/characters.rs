//! Exact character arithmetic.
//!
//! Classical characters are computed by Freudenthal's recursion (cross-checked
//! against the Weyl dimension formula); graded Demazure characters by applying
//! the string-formula operators `D_i` along a straightening word.  All
//! multiplicities are exact integers; the recursion divisions are checked to
//! be exact.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::affine::{
    eval_affine_coroot, make_dominant_with, AffineWeight, Letter, TieBreak,
};
use crate::cartan::{pair_coroot, RankContext, RootRange, Weight};
use crate::{Error, Result};

/// Weight multiplicities of a finite-dimensional g-module.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassicalCharacter {
    terms: BTreeMap<Weight, i64>,
}

impl ClassicalCharacter {
    pub fn trivial(rank: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Weight::zero(rank), 1);
        ClassicalCharacter { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn add_term(&mut self, w: Weight, mult: i64) {
        let entry = self.terms.entry(w).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            let key = self.terms.iter().find(|(_, &v)| v == 0).map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn mult(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Tensor-product character: convolution of supports.
    pub fn multiply(&self, other: &ClassicalCharacter) -> Result<ClassicalCharacter> {
        let mut out = ClassicalCharacter::default();
        for (wa, &ma) in &self.terms {
            for (wb, &mb) in &other.terms {
                out.add_term(wa.add(wb)?, ma * mb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, rank: usize, k: i64) -> Result<ClassicalCharacter> {
        let mut out = ClassicalCharacter::trivial(rank);
        for _ in 0..k {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// Is the multiplicity function invariant under every simple reflection?
    pub fn is_w_invariant(&self, ctx: &RankContext) -> bool {
        for i in 1..=ctx.rank() {
            let ai = ctx.simple_root(i).unwrap();
            for (w, &m) in &self.terms {
                let refl = w.sub(&ai.scale(w.coord(i))).unwrap();
                if self.mult(&refl) != m {
                    return false;
                }
            }
        }
        true
    }
}

/// Weight-and-grade multiplicities of a graded g[t]-module.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedCharacter {
    terms: BTreeMap<(Weight, i64), i64>,
}

/// JSON record for one character term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharRecord {
    pub weight: Vec<i64>,
    pub grade: i64,
    pub mult: i64,
}

impl GradedCharacter {
    pub fn terms(&self) -> &BTreeMap<(Weight, i64), i64> {
        &self.terms
    }

    pub fn add_term(&mut self, w: Weight, grade: i64, mult: i64) {
        let entry = self.terms.entry((w, grade)).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            let key = self.terms.iter().find(|(_, &v)| v == 0).map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn mult(&self, w: &Weight, grade: i64) -> i64 {
        self.terms.get(&(w.clone(), grade)).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Forget the grading.
    pub fn classicalize(&self) -> ClassicalCharacter {
        let mut out = ClassicalCharacter::default();
        for ((w, _), &m) in &self.terms {
            out.add_term(w.clone(), m);
        }
        out
    }

    /// Tensor product with grades adding.
    pub fn multiply(&self, other: &GradedCharacter) -> Result<GradedCharacter> {
        let mut out = GradedCharacter::default();
        for ((wa, ga), &ma) in &self.terms {
            for ((wb, gb), &mb) in &other.terms {
                out.add_term(wa.add(wb)?, ga + gb, ma * mb);
            }
        }
        Ok(out)
    }

    /// Coefficientwise `self <= other`.
    pub fn leq(&self, other: &GradedCharacter) -> bool {
        self.terms.iter().all(|((w, g), &m)| m <= other.mult(w, *g))
    }

    pub fn to_records(&self) -> Vec<CharRecord> {
        self.terms
            .iter()
            .map(|((w, g), &m)| CharRecord { weight: w.coords().to_vec(), grade: *g, mult: m })
            .collect()
    }

    pub fn from_records(records: &[CharRecord]) -> GradedCharacter {
        let mut out = GradedCharacter::default();
        for r in records {
            out.add_term(Weight::new(r.weight.clone()), r.grade, r.mult);
        }
        out
    }

    pub fn from_classical_at_grade(ch: &ClassicalCharacter, grade: i64) -> GradedCharacter {
        let mut out = GradedCharacter::default();
        for (w, &m) in ch.terms() {
            out.add_term(w.clone(), grade, m);
        }
        out
    }
}

/// The epsilon-coordinate vector of a weight (length `n + 1`, last entry 0);
/// the Weyl group permutes these entries.
fn epsilon_coords(w: &Weight) -> Vec<i64> {
    let n = w.rank();
    let mut v = vec![0i64; n + 1];
    for i in (1..=n).rev() {
        v[i - 1] = v[i] + w.coord(i);
    }
    v
}

fn weight_from_epsilon(v: &[i64]) -> Weight {
    Weight::new(v.windows(2).map(|w| w[0] - w[1]).collect())
}

/// The dominant Weyl-orbit representative.
pub fn dominant_rep(w: &Weight) -> Weight {
    let mut v = epsilon_coords(w);
    v.sort_unstable_by(|a, b| b.cmp(a));
    weight_from_epsilon(&v)
}

/// The full Weyl orbit of a weight.
pub fn weyl_orbit(w: &Weight) -> Vec<Weight> {
    let mut v = epsilon_coords(w);
    v.sort_unstable();
    let mut out = Vec::new();
    // Lexicographic multiset-permutation walk.
    loop {
        out.push(weight_from_epsilon(&v));
        // next_permutation
        let n = v.len();
        let mut i = n.wrapping_sub(1);
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
    }
    out
}

use crate::cartan::alpha_coords;

/// Weyl dimension of `V(lam)`.
pub fn weyl_dimension(ctx: &RankContext, lam: &Weight) -> Result<i64> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.coords().to_vec()));
    }
    let rho = Weight::new(vec![1; ctx.rank()]);
    let top = lam.add(&rho)?;
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for r in ctx.positive_roots() {
        num *= pair_coroot(ctx, &top, r)? as i128;
        den *= pair_coroot(ctx, &rho, r)? as i128;
    }
    debug_assert!(num % den == 0);
    Ok((num / den) as i64)
}

/// Weight multiplicities of the irreducible `V(lam)` by Freudenthal's
/// recursion; the total dimension is checked against the Weyl formula.
pub fn weyl_character(ctx: &RankContext, lam: &Weight) -> Result<ClassicalCharacter> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.coords().to_vec()));
    }
    let n = ctx.rank();
    let rho = Weight::new(vec![1; n]);
    let roots: Vec<(RootRange, Weight)> =
        ctx.positive_roots().into_iter().map(|r| (r, r.as_weight(ctx))).collect();

    // Dominant weights below lam, indexed by height of lam - mu.
    let bound = alpha_coords(ctx, &lam.sub(&lam.w0())?)?;
    let mut by_height: BTreeMap<i64, Vec<Weight>> = BTreeMap::new();
    let mut cur = vec![0i64; n];
    loop {
        let mut mu = lam.clone();
        for i in 1..=n {
            mu = mu.sub(&ctx.simple_root(i)?.scale(cur[i - 1]))?;
        }
        if mu.is_dominant() {
            by_height.entry(cur.iter().sum()).or_default().push(mu);
        }
        // odometer over the box 0..=bound
        let mut pos = 0;
        loop {
            if pos == n {
                break;
            }
            if cur[pos] < bound[pos] {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }

    let mut mults: BTreeMap<Weight, i64> = BTreeMap::new();
    for (h, mus) in &by_height {
        for mu in mus {
            if *h == 0 {
                mults.insert(mu.clone(), 1);
                continue;
            }
            // 2 sum_{alpha>0, k>=1} m(mu + k alpha) (mu + k alpha)(h_alpha)
            let mut num: i128 = 0;
            for (r, aw) in &roots {
                let mut k = 1i64;
                loop {
                    let up = mu.add(&aw.scale(k))?;
                    let m = mults.get(&dominant_rep(&up)).copied().unwrap_or(0);
                    if m == 0 {
                        break;
                    }
                    num += 2 * (m as i128) * (pair_coroot(ctx, &up, *r)? as i128);
                    k += 1;
                }
            }
            // (lam + mu + 2 rho, lam - mu) via coroot pairings
            let diff = alpha_coords(ctx, &lam.sub(mu)?)?;
            let mid = lam.add(mu)?.add(&rho.scale(2))?;
            let den: i128 = (1..=n)
                .map(|i| (diff[i - 1] as i128) * (mid.coord(i) as i128))
                .sum();
            debug_assert!(den > 0 && num % den == 0);
            mults.insert(mu.clone(), (num / den) as i64);
        }
    }

    let mut out = ClassicalCharacter::default();
    for (mu, m) in &mults {
        if *m == 0 {
            continue;
        }
        for w in weyl_orbit(mu) {
            out.add_term(w, *m);
        }
    }
    debug_assert_eq!(out.dim(), weyl_dimension(ctx, lam)?);
    Ok(out)
}

/// Intermediate state of a Demazure-operator computation: coefficients of
/// `e^{classical + level L0 + doffset delta}` at a fixed level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineCharacterWorkspace {
    pub level: i64,
    pub terms: BTreeMap<(Weight, i64), i64>,
}

impl AffineCharacterWorkspace {
    pub fn monomial(classical: Weight, level: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((classical, 0), 1);
        AffineCharacterWorkspace { level, terms }
    }

    fn add(&mut self, w: Weight, doffset: i64, c: i64) {
        let entry = self.terms.entry((w, doffset)).or_insert(0);
        *entry += c;
        if *entry == 0 {
            let key = self.terms.iter().find(|(_, &v)| v == 0).map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    fn coroot_value(&self, ctx: &RankContext, w: &Weight, i: usize) -> Result<i64> {
        let aff = AffineWeight::from_classical(w.clone(), self.level);
        eval_affine_coroot(ctx, &aff, i)
    }
}

/// The Demazure operator `D_i` by the string formula:
/// `e^mu -> sum_{k=0}^{m} e^{mu - k alpha_i}` when `m = mu(h_i) >= 0`,
/// `0` when `m = -1`, and `-sum_{k=1}^{-m-1} e^{mu + k alpha_i}` when
/// `m <= -2`.
pub fn demazure_op(
    ctx: &RankContext,
    i: usize,
    ws: &AffineCharacterWorkspace,
) -> Result<AffineCharacterWorkspace> {
    if i > ctx.rank() {
        return Err(Error::IndexOutOfRange(format!("affine node {i}")));
    }
    // alpha_0 = delta - theta: subtracting k alpha_0 adds k theta, lowers the
    // delta offset by k.
    let (alpha, dstep): (Weight, i64) = if i == 0 {
        (ctx.highest_root().neg(), 1)
    } else {
        (ctx.simple_root(i)?, 0)
    };
    let mut out = AffineCharacterWorkspace { level: ws.level, terms: BTreeMap::new() };
    for ((w, doff), &c) in &ws.terms {
        let m = ws.coroot_value(ctx, w, i)?;
        if m >= 0 {
            for k in 0..=m {
                out.add(w.sub(&alpha.scale(k))?, doff - dstep * k, c);
            }
        } else if m <= -2 {
            for k in 1..=(-m - 1) {
                out.add(w.add(&alpha.scale(k))?, doff + dstep * k, -c);
            }
        }
    }
    Ok(out)
}

fn demazure_character_with(
    ctx: &RankContext,
    ell: i64,
    lam: &Weight,
    tie: TieBreak,
) -> Result<GradedCharacter> {
    if ell < 1 {
        return Err(Error::NonPositiveLevel(ell));
    }
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.coords().to_vec()));
    }
    let xi = AffineWeight::from_classical(lam.w0(), ell);
    let (word, plus) = make_dominant_with(ctx, &xi, tie)?;
    let mut ws = AffineCharacterWorkspace::monomial(plus.classical.clone(), ell);
    for letter in word.letters.iter().rev() {
        match letter {
            Letter::Reflect(i) => ws = demazure_op(ctx, *i, &ws)?,
            Letter::Translate(_) => {
                return Err(Error::InvalidArgument("unexpected translation in word".into()))
            }
        }
    }
    // The lam-weight space is one-dimensional; its delta offset pins grade 0.
    let mut d_lam = None;
    for ((w, doff), &c) in &ws.terms {
        if w == lam {
            if d_lam.is_some() || c != 1 {
                return Err(Error::InvalidArgument(format!(
                    "highest-weight space of D({ell}, {:?}) not one-dimensional",
                    lam.coords()
                )));
            }
            d_lam = Some(*doff);
        }
    }
    let d_lam = d_lam.ok_or_else(|| {
        Error::InvalidArgument(format!("missing highest-weight term for D({ell}, {:?})", lam.coords()))
    })?;
    let mut out = GradedCharacter::default();
    for ((w, doff), &c) in &ws.terms {
        let grade = doff - d_lam;
        if c < 0 || grade < 0 {
            return Err(Error::InvalidArgument("Demazure character not effective".into()));
        }
        out.add_term(w.clone(), grade, c);
    }
    Ok(out)
}

/// Graded character of the g-stable Demazure module `D(ell, lam)`, with the
/// generator at grade 0.
pub fn demazure_character(ctx: &RankContext, ell: i64, lam: &Weight) -> Result<GradedCharacter> {
    demazure_character_with(ctx, ell, lam, TieBreak::SmallestIndex)
}

/// Same character computed with the opposite straightening tie-break; used to
/// validate word-independence.
pub fn demazure_character_alt(ctx: &RankContext, ell: i64, lam: &Weight) -> Result<GradedCharacter> {
    demazure_character_with(ctx, ell, lam, TieBreak::LargestIndex)
}

/// Level-two fusion factorization: the classical character of
/// `D(2, 2 nu + lam)` equals the product of `ch V(2 omega_i)^{nu_i}` with the
/// classical character of `D(2, lam)`.
pub fn check_fusion(ctx: &RankContext, nu: &Weight, lam: &Weight) -> Result<bool> {
    if !crate::cartan::is_in_p1(lam) {
        return Err(Error::NotInP1(lam.coords().to_vec()));
    }
    if !nu.is_dominant() {
        return Err(Error::NotDominant(nu.coords().to_vec()));
    }
    let mu = nu.scale(2).add(lam)?;
    let lhs = demazure_character(ctx, 2, &mu)?.classicalize();
    let mut rhs = demazure_character(ctx, 2, lam)?.classicalize();
    for i in 1..=ctx.rank() {
        let r = nu.coord(i);
        if r > 0 {
            let factor = weyl_character(ctx, &ctx.fundamental(i)?.scale(2))?;
            rhs = rhs.multiply(&factor.pow(ctx.rank(), r)?)?;
        }
    }
    Ok(lhs == rhs)
}

/// Graded containment `ch D(2, mu) <= ch D(1, mu^o) * ch D(1, mu^e)` with
/// generators aligned at grade 0.
pub fn check_embedding_bound(ctx: &RankContext, mu: &Weight) -> Result<bool> {
    let (nu, lam) = crate::cartan::parity_decompose(mu)?;
    let (lo, le) = crate::cartan::odd_even_split(&lam)?;
    let muo = nu.add(&lo)?;
    let mue = nu.add(&le)?;
    let lhs = demazure_character(ctx, 2, mu)?;
    let rhs = demazure_character(ctx, 1, &muo)?.multiply(&demazure_character(ctx, 1, &mue)?)?;
    Ok(lhs.leq(&rhs))
}

/// Graded containment `ch D(ell + 1, mu) <= ch D(ell, mu)`.
pub fn check_level_monotone(ctx: &RankContext, ell: i64, mu: &Weight) -> Result<bool> {
    let hi = demazure_character(ctx, ell + 1, mu)?;
    let lo = demazure_character(ctx, ell, mu)?;
    Ok(hi.leq(&lo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::dominant_weights_up_to;
    use rand::{Rng, SeedableRng};

    fn ch_of(pairs: &[(Vec<i64>, i64)]) -> ClassicalCharacter {
        let mut out = ClassicalCharacter::default();
        for (w, m) in pairs {
            out.add_term(Weight::new(w.clone()), *m);
        }
        out
    }

    #[test]
    fn weyl_character_examples() {
        let ctx = RankContext::new(2).unwrap();
        assert_eq!(weyl_character(&ctx, &Weight::zero(2)).unwrap(), ClassicalCharacter::trivial(2));

        let ctx1 = RankContext::new(1).unwrap();
        for m in 0..=6 {
            let ch = weyl_character(&ctx1, &Weight::new(vec![m])).unwrap();
            assert_eq!(ch.dim(), m + 1);
            for j in 0..=m {
                assert_eq!(ch.mult(&Weight::new(vec![m - 2 * j])), 1);
            }
        }

        // Adjoint of sl_3: dimension 8, zero weight multiplicity 2.
        let adj = weyl_character(&ctx, &Weight::new(vec![1, 1])).unwrap();
        assert_eq!(adj.dim(), 8);
        assert_eq!(adj.mult(&Weight::zero(2)), 2);

        assert!(weyl_character(&ctx, &Weight::new(vec![-1, 0])).is_err());
    }

    #[test]
    fn weyl_dimension_matches_character() {
        for n in 1..=3 {
            let ctx = RankContext::new(n).unwrap();
            for lam in dominant_weights_up_to(n, 3) {
                let ch = weyl_character(&ctx, &lam).unwrap();
                assert_eq!(ch.dim(), weyl_dimension(&ctx, &lam).unwrap());
                assert!(ch.is_w_invariant(&ctx));
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let ctx1 = RankContext::new(1).unwrap();
        let v1 = weyl_character(&ctx1, &Weight::new(vec![1])).unwrap();
        assert_eq!(v1.multiply(&ClassicalCharacter::trivial(1)).unwrap(), v1);
        // Clebsch-Gordan: V(1) x V(1) = V(2) + V(0).
        let sq = v1.multiply(&v1).unwrap();
        let expect = ch_of(&[(vec![2], 1), (vec![0], 2), (vec![-2], 1)]);
        assert_eq!(sq, expect);
        assert_eq!(sq.dim(), v1.dim() * v1.dim());
    }

    fn random_workspace(rng: &mut impl Rng, n: usize) -> AffineCharacterWorkspace {
        let mut ws = AffineCharacterWorkspace {
            level: rng.gen_range(1..=3),
            terms: BTreeMap::new(),
        };
        for _ in 0..rng.gen_range(1..=5) {
            let w = Weight::new((0..n).map(|_| rng.gen_range(-3i64..=3)).collect());
            ws.add(w, rng.gen_range(-2..=2), rng.gen_range(-2i64..=2));
        }
        ws
    }

    #[test]
    fn demazure_op_examples() {
        let ctx = RankContext::new(1).unwrap();
        let l0 = AffineCharacterWorkspace::monomial(Weight::zero(1), 1);
        assert_eq!(demazure_op(&ctx, 1, &l0).unwrap(), l0);

        let l1 = AffineCharacterWorkspace::monomial(Weight::new(vec![1]), 1);
        let got = demazure_op(&ctx, 1, &l1).unwrap();
        assert_eq!(got.terms.len(), 2);
        assert_eq!(got.terms.get(&(Weight::new(vec![1]), 0)), Some(&1));
        assert_eq!(got.terms.get(&(Weight::new(vec![-1]), 0)), Some(&1));
    }

    #[test]
    fn demazure_op_idempotent() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(23);
        for _ in 0..100 {
            let n = rng.gen_range(1..=3);
            let ctx = RankContext::new(n).unwrap();
            let ws = random_workspace(&mut rng, n);
            for i in 0..=n {
                let once = demazure_op(&ctx, i, &ws).unwrap();
                let twice = demazure_op(&ctx, i, &once).unwrap();
                assert_eq!(once, twice);
            }
        }
    }

    #[test]
    fn demazure_op_braid_and_commute() {
        // Affine A_n^(1) diagram is a cycle; skip the rank-1 double bond.
        let mut rng = rand::rngs::StdRng::seed_from_u64(29);
        for n in 2..=3usize {
            let ctx = RankContext::new(n).unwrap();
            for _ in 0..40 {
                let ws = random_workspace(&mut rng, n);
                for i in 0..=n {
                    for j in (i + 1)..=n {
                        let adjacent = j == i + 1 || (i == 0 && j == n);
                        let di = |w: &AffineCharacterWorkspace| demazure_op(&ctx, i, w).unwrap();
                        let dj = |w: &AffineCharacterWorkspace| demazure_op(&ctx, j, w).unwrap();
                        if adjacent {
                            assert_eq!(di(&dj(&di(&ws))), dj(&di(&dj(&ws))), "braid {i},{j} n={n}");
                        } else {
                            assert_eq!(di(&dj(&ws)), dj(&di(&ws)), "commute {i},{j} n={n}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn demazure_character_examples() {
        let ctx = RankContext::new(2).unwrap();
        let triv = demazure_character(&ctx, 3, &Weight::zero(2)).unwrap();
        assert_eq!(triv.dim(), 1);
        assert_eq!(triv.mult(&Weight::zero(2), 0), 1);

        // D(1, omega_i) = V(omega_i) at grade 0.
        for n in 1..=4usize {
            let ctxn = RankContext::new(n).unwrap();
            for i in 1..=n {
                let ch = demazure_character(&ctxn, 1, &ctxn.fundamental(i).unwrap()).unwrap();
                let mut binom = 1i64;
                for k in 0..i as i64 {
                    binom = binom * (n as i64 + 1 - k) / (k + 1);
                }
                assert_eq!(ch.dim(), binom);
                assert!(ch.terms().keys().all(|(_, g)| *g == 0));
            }
        }

        // D(1, 2 omega_1) for sl_2: V(2) at grade 0 plus V(0) at grade 1.
        let ctx1 = RankContext::new(1).unwrap();
        let ch = demazure_character(&ctx1, 1, &Weight::new(vec![2])).unwrap();
        assert_eq!(ch.dim(), 4);
        assert_eq!(ch.mult(&Weight::new(vec![2]), 0), 1);
        assert_eq!(ch.mult(&Weight::new(vec![0]), 0), 1);
        assert_eq!(ch.mult(&Weight::new(vec![0]), 1), 1);
        assert_eq!(ch.mult(&Weight::new(vec![-2]), 0), 1);
    }

    #[test]
    fn level_one_rank_one_dimensions() {
        // Local Weyl modules for sl_2: dim D(1, m omega_1) = 2^m.
        let ctx = RankContext::new(1).unwrap();
        for m in 0..=6i64 {
            let ch = demazure_character(&ctx, 1, &Weight::new(vec![m])).unwrap();
            assert_eq!(ch.dim(), 1 << m, "m={m}");
        }
    }

    #[test]
    fn tie_break_invariance() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(31);
        for _ in 0..50 {
            let n = rng.gen_range(1..=3);
            let ctx = RankContext::new(n).unwrap();
            let lam = Weight::new((0..n).map(|_| rng.gen_range(0i64..=2)).collect());
            let ell = rng.gen_range(1..=3);
            assert_eq!(
                demazure_character(&ctx, ell, &lam).unwrap(),
                demazure_character_alt(&ctx, ell, &lam).unwrap()
            );
        }
    }

    #[test]
    fn classicalized_demazure_is_w_invariant() {
        for n in 1..=2 {
            let ctx = RankContext::new(n).unwrap();
            for lam in dominant_weights_up_to(n, 3) {
                for ell in 1..=2 {
                    let ch = demazure_character(&ctx, ell, &lam).unwrap().classicalize();
                    assert!(ch.is_w_invariant(&ctx), "n={n} ell={ell} lam={lam:?}");
                    // Extremal weights carry total multiplicity 1.
                    assert_eq!(ch.mult(&lam.w0()), 1);
                }
            }
        }
    }

    #[test]
    fn fusion_examples() {
        let ctx1 = RankContext::new(1).unwrap();
        assert!(check_fusion(&ctx1, &Weight::new(vec![1]), &Weight::zero(1)).unwrap());
        assert!(check_fusion(&ctx1, &Weight::new(vec![2]), &Weight::zero(1)).unwrap());
        let ctx2 = RankContext::new(2).unwrap();
        assert!(check_fusion(&ctx2, &Weight::new(vec![1, 0]), &Weight::new(vec![0, 1])).unwrap());
    }

    #[test]
    fn embedding_examples() {
        let ctx1 = RankContext::new(1).unwrap();
        assert!(check_embedding_bound(&ctx1, &Weight::new(vec![1])).unwrap());
        assert!(check_embedding_bound(&ctx1, &Weight::new(vec![2])).unwrap());
        let ctx2 = RankContext::new(2).unwrap();
        assert!(check_embedding_bound(&ctx2, &Weight::new(vec![1, 1])).unwrap());
    }

    #[test]
    fn monotone_examples() {
        let ctx = RankContext::new(1).unwrap();
        // Evaluation case: equality of dimensions.
        let d1 = demazure_character(&ctx, 2, &Weight::new(vec![2])).unwrap();
        let d2 = demazure_character(&ctx, 3, &Weight::new(vec![2])).unwrap();
        assert_eq!(d1, d2);
        assert!(check_level_monotone(&ctx, 1, &Weight::new(vec![2])).unwrap());
        assert!(check_level_monotone(&ctx, 2, &Weight::new(vec![4])).unwrap());
        let hi = demazure_character(&ctx, 2, &Weight::new(vec![2])).unwrap();
        let lo = demazure_character(&ctx, 1, &Weight::new(vec![2])).unwrap();
        assert_eq!(hi.dim(), 3);
        assert_eq!(lo.dim(), 4);
        assert!(hi.leq(&lo));
    }

    #[test]
    fn evaluation_case_grade_zero() {
        // lam(h_{1,n}) <= ell: D(ell, lam) = V(lam) at grade 0.
        for n in 1..=3usize {
            let ctx = RankContext::new(n).unwrap();
            for ell in 1..=3i64 {
                for lam in dominant_weights_up_to(n, ell) {
                    let ch = demazure_character(&ctx, ell, &lam).unwrap();
                    assert!(ch.terms().keys().all(|(_, g)| *g == 0));
                    assert_eq!(ch.dim(), weyl_dimension(&ctx, &lam).unwrap());
                }
            }
        }
    }

    #[test]
    fn records_roundtrip() {
        let ctx = RankContext::new(1).unwrap();
        let ch = demazure_character(&ctx, 1, &Weight::new(vec![3])).unwrap();
        let recs = ch.to_records();
        let json = serde_json::to_string(&recs).unwrap();
        let back: Vec<CharRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(GradedCharacter::from_records(&back), ch);
    }
}
