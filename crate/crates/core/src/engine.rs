//! Generators-and-relations construction of cyclic graded modules over the
//! truncated current algebra `sl_{n+1} (x) C[t]/(t^N)`.
//!
//! The cyclic generator spans a one-dimensional module for the Borel part
//! (raising operators and positive-degree Cartan elements annihilate it), so
//! the ambient space is the free `U(n^- (x) C[t]/t^N)`-module on it, with PBW
//! monomials as basis.  A presentation is quotiented out in three stages:
//! relation vectors are closed under the raising/Cartan action, the resulting
//! set is propagated down weight-by-weight under left multiplication by the
//! lowering generators, and graded dimensions are read off as corank per
//! (weight, grade) block by exact rational elimination.  Blocks whose parent
//! blocks are all already full are full themselves and skip elimination
//! entirely; this is what keeps the deep strata cheap.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{alpha_coords, pair_coroot, RankContext, RootRange, Weight};
use crate::characters::GradedCharacter;
use crate::{Error, Result};

/// The matrix unit `E_{a,b} (x) t^r` (1-based, `1 <= a, b <= n + 1`);
/// lowering means `a > b`, raising `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Elem {
    pub a: u8,
    pub b: u8,
    pub r: u8,
}

impl Elem {
    /// `x^-_{i,j} (x) t^r = E_{j+1,i} (x) t^r`.
    pub fn x_minus(i: usize, j: usize, r: usize) -> Elem {
        Elem { a: (j + 1) as u8, b: i as u8, r: r as u8 }
    }

    /// `x^+_{i,j} (x) t^r = E_{i,j+1} (x) t^r`.
    pub fn x_plus(i: usize, j: usize, r: usize) -> Elem {
        Elem { a: i as u8, b: (j + 1) as u8, r: r as u8 }
    }

    pub fn is_lowering(&self) -> bool {
        self.a > self.b
    }
}

/// `[E_{ab} t^r, E_{cd} t^s] = d_{bc} E_{ad} t^{r+s} - d_{da} E_{cb} t^{r+s}`,
/// zero beyond the truncation order.
pub fn bracket(trunc: usize, x: Elem, y: Elem) -> Vec<(Elem, i128)> {
    let r = x.r as usize + y.r as usize;
    if r >= trunc {
        return Vec::new();
    }
    let mut out = Vec::new();
    if x.b == y.a {
        out.push((Elem { a: x.a, b: y.b, r: r as u8 }, 1));
    }
    if y.b == x.a {
        out.push((Elem { a: y.a, b: x.b, r: r as u8 }, -1));
    }
    // E_{ab} - E_{ab} when both deltas fire with a=b on each side.
    if out.len() == 2 && out[0].0 == out[1].0 {
        out.clear();
    }
    out
}

/// The truncated current algebra context: rank and truncation order, with the
/// ordered table of lowering generators `x^-_{i,j} (x) t^r`.
#[derive(Debug, Clone)]
pub struct TruncatedAlgebra {
    n: usize,
    trunc: usize,
    gens: Vec<Elem>,
    gen_drop: Vec<Vec<i64>>,
    gen_index: HashMap<Elem, u16>,
}

impl TruncatedAlgebra {
    pub fn new(n: usize, trunc: usize) -> Result<Self> {
        if n == 0 || trunc == 0 || trunc > 200 {
            return Err(Error::InvalidArgument(format!("bad rank {n} or truncation {trunc}")));
        }
        // PBW order: (t-degree, root height, root position).
        let mut gens = Vec::new();
        for r in 0..trunc {
            for height in 1..=n {
                for i in 1..=(n + 1 - height) {
                    gens.push(Elem::x_minus(i, i + height - 1, r));
                }
            }
        }
        let mut gen_drop = Vec::new();
        let mut gen_index = HashMap::new();
        for (id, e) in gens.iter().enumerate() {
            let mut drop = vec![0i64; n];
            for k in (e.b as usize)..(e.a as usize) {
                drop[k - 1] = 1;
            }
            gen_drop.push(drop);
            gen_index.insert(*e, id as u16);
        }
        Ok(TruncatedAlgebra { n, trunc, gens, gen_drop, gen_index })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn gen_count(&self) -> usize {
        self.gens.len()
    }

    pub fn gen(&self, id: u16) -> Elem {
        self.gens[id as usize]
    }

    pub fn gen_id(&self, e: Elem) -> Option<u16> {
        self.gen_index.get(&e).copied()
    }
}

/// A PBW monomial: generator ids in weakly decreasing order, leftmost first.
pub type Monomial = Vec<u16>;
type LinComb = BTreeMap<Monomial, i128>;

fn add_into(dst: &mut LinComb, m: Monomial, c: i128) {
    if c == 0 {
        return;
    }
    match dst.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if *e.get() == 0 {
                e.remove();
            }
        }
    }
}

/// Straightening engine: rewrites products of algebra elements and PBW
/// monomials applied to the cyclic vector back into the PBW basis.  The
/// highest weight enters only through the Cartan base case.
struct Straightener<'a> {
    alg: &'a TruncatedAlgebra,
    mu: Vec<i64>,
    mult_memo: HashMap<(u16, Monomial), LinComb>,
    act_memo: HashMap<(Elem, Monomial), LinComb>,
}

impl<'a> Straightener<'a> {
    fn new(alg: &'a TruncatedAlgebra, mu: &Weight) -> Self {
        Straightener {
            alg,
            mu: mu.coords().to_vec(),
            mult_memo: HashMap::new(),
            act_memo: HashMap::new(),
        }
    }

    /// `mu(E_{aa})` with the convention `mu(E_{aa}) = sum_{i >= a} mu_i`;
    /// offsets cancel on traceless elements.
    fn diag_eigen(&self, a: u8) -> i128 {
        self.mu[(a as usize - 1).min(self.mu.len())..].iter().map(|&x| x as i128).sum()
    }

    /// Product of a lowering generator with a PBW monomial.
    fn mult_gen(&mut self, g: u16, m: &Monomial) -> LinComb {
        if m.is_empty() || g >= m[0] {
            let mut mono = Vec::with_capacity(m.len() + 1);
            mono.push(g);
            mono.extend_from_slice(m);
            let mut out = LinComb::new();
            out.insert(mono, 1);
            return out;
        }
        let key = (g, m.clone());
        if let Some(hit) = self.mult_memo.get(&key) {
            return hit.clone();
        }
        let head = m[0];
        let rest = m[1..].to_vec();
        // g h rest = h (g rest) + [g, h] rest
        let inner = self.mult_gen(g, &rest);
        let mut out = LinComb::new();
        for (mono, c) in inner {
            for (m2, c2) in self.mult_gen(head, &mono) {
                add_into(&mut out, m2, c * c2);
            }
        }
        for (e, c) in bracket(self.alg.trunc, self.alg.gen(g), self.alg.gen(head)) {
            let id = self.alg.gen_id(e).expect("bracket of lowering elements is lowering");
            for (m2, c2) in self.mult_gen(id, &rest) {
                add_into(&mut out, m2, c * c2);
            }
        }
        self.mult_memo.insert(key, out.clone());
        out
    }

    /// Action of a raising or diagonal matrix unit on a PBW monomial applied
    /// to the cyclic vector.
    fn act_elem(&mut self, e: Elem, m: &Monomial) -> LinComb {
        debug_assert!(!e.is_lowering());
        if m.is_empty() {
            let mut out = LinComb::new();
            if e.a == e.b && e.r == 0 {
                out.insert(Vec::new(), self.diag_eigen(e.a));
            }
            return out;
        }
        let key = (e, m.clone());
        if let Some(hit) = self.act_memo.get(&key) {
            return hit.clone();
        }
        let head = m[0];
        let rest = m[1..].to_vec();
        let mut out = LinComb::new();
        for (mono, c) in self.act_elem(e, &rest) {
            for (m2, c2) in self.mult_gen(head, &mono) {
                add_into(&mut out, m2, c * c2);
            }
        }
        for (k, c) in bracket(self.alg.trunc, e, self.alg.gen(head)) {
            let piece = if k.is_lowering() {
                let id = self.alg.gen_id(k).expect("lowering element in generator table");
                self.mult_gen(id, &rest)
            } else {
                self.act_elem(k, &rest)
            };
            for (m2, c2) in piece {
                add_into(&mut out, m2, c * c2);
            }
        }
        self.act_memo.insert(key, out.clone());
        out
    }

    /// Apply an algebra element to a linear combination.
    fn apply(&mut self, e: Elem, v: &LinComb) -> LinComb {
        let mut out = LinComb::new();
        for (m, c) in v {
            let piece = if e.is_lowering() {
                match self.alg.gen_id(e) {
                    Some(id) => self.mult_gen(id, m),
                    None => LinComb::new(), // t-exponent at or beyond truncation
                }
            } else {
                self.act_elem(e, m)
            };
            for (m2, c2) in piece {
                add_into(&mut out, m2, c * c2);
            }
        }
        out
    }

    /// `h_i (x) t^r` as the traceless difference of two diagonal units.
    fn apply_cartan(&mut self, i: usize, r: usize, v: &LinComb) -> LinComb {
        let mut out = self.apply(Elem { a: i as u8, b: i as u8, r: r as u8 }, v);
        let neg = self.apply(Elem { a: (i + 1) as u8, b: (i + 1) as u8, r: r as u8 }, v);
        for (m, c) in neg {
            add_into(&mut out, m, -c);
        }
        out
    }
}

/// One factor of a relation: `elem` raised to `power`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelFactor {
    pub elem: Elem,
    pub power: u32,
}

/// A cyclic presentation: highest weight plus explicit relations (each a
/// product of factors applied left-to-right-innermost to the generator).
/// Raising annihilation and the Cartan eigenvalue relations are implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub mu: Weight,
    pub relations: Vec<Vec<RelFactor>>,
}

impl Presentation {
    /// Largest t-exponent among the relation factors.
    pub fn max_texp(&self) -> usize {
        self.relations
            .iter()
            .flat_map(|rel| rel.iter().map(|f| f.elem.r as usize))
            .max()
            .unwrap_or(0)
    }
}

fn power(e: Elem, p: i64) -> Vec<RelFactor> {
    vec![RelFactor { elem: e, power: p as u32 }]
}

/// The presentation of `M(nu, lambda)`: Weyl relations for `mu = 2 nu +
/// lambda`, `x_i^- (x) t^{(nu + lambda)(h_i)}`, and the mixed relations
/// `x^-_{p,q} (x) t^{nu(h_{p,q}) + 1}` over consecutive support nodes of
/// `lambda`.
pub fn present_m(ctx: &RankContext, nu: &Weight, lambda: &Weight) -> Result<Presentation> {
    if !nu.is_dominant() {
        return Err(Error::NotDominant(nu.coords().to_vec()));
    }
    if !crate::cartan::is_in_p1(lambda) {
        return Err(Error::NotInP1(lambda.coords().to_vec()));
    }
    let mu = nu.scale(2).add(lambda)?;
    let mut relations = Vec::new();
    for i in 1..=ctx.rank() {
        relations.push(power(Elem::x_minus(i, i, 0), mu.coord(i) + 1));
        let s = nu.coord(i) + lambda.coord(i);
        relations.push(power(Elem::x_minus(i, i, s as usize), 1));
    }
    let supp = lambda.support();
    for w in supp.windows(2) {
        let (p, q) = (w[0], w[1]);
        let texp = pair_coroot(ctx, nu, RootRange::new(ctx, p, q)?)? + 1;
        relations.push(power(Elem::x_minus(p, q, texp as usize), 1));
    }
    Ok(Presentation { mu, relations })
}

/// The presentation of `D(ell, mu)`: for each positive root write
/// `mu(h_{i,j}) = (s - 1) ell + m` with `0 < m <= ell`; impose
/// `x^-_{i,j} (x) t^s` and `(x^-_{i,j} (x) t^{s-1})^{m+1}`.  The power
/// relation is dropped when `m = ell` (always a consequence) and, for
/// `refined` at level two, entirely.
pub fn present_d(ctx: &RankContext, ell: i64, mu: &Weight, refined: bool) -> Result<Presentation> {
    if ell < 1 {
        return Err(Error::NonPositiveLevel(ell));
    }
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.coords().to_vec()));
    }
    let mut relations = Vec::new();
    for i in 1..=ctx.rank() {
        relations.push(power(Elem::x_minus(i, i, 0), mu.coord(i) + 1));
    }
    for root in ctx.positive_roots() {
        let value = pair_coroot(ctx, mu, root)?;
        // value = (s - 1) ell + m, 0 < m <= ell
        let s = (value + ell - 1).div_euclid(ell);
        let m = value - (s - 1) * ell;
        relations.push(power(Elem::x_minus(root.i, root.j, s as usize), 1));
        if m < ell && !(refined && ell == 2) {
            relations.push(power(Elem::x_minus(root.i, root.j, (s - 1) as usize), m + 1));
        }
    }
    Ok(Presentation { mu: mu.clone(), relations })
}

/// The `sl_2` modules `V(xi)` for `xi = 2^a 1^b`: Weyl relation plus
/// `(x^+ (x) t)^s (x^- (x) 1)^{s+r}` for all `s >= 1, r >= 0` with
/// `s + r <= |xi|` admitting `k >= 0` with
/// `s + r >= 1 + r k + sum_{p > k} xi_p`.
pub fn present_v_xi(ctx: &RankContext, a: i64, b: i64) -> Result<Presentation> {
    if ctx.rank() != 1 {
        return Err(Error::RankOneOnly(ctx.rank()));
    }
    if a < 0 || b < 0 {
        return Err(Error::InvalidArgument("partition part counts must be nonnegative".into()));
    }
    let size = 2 * a + b;
    let parts = a + b;
    let tail = |k: i64| -> i64 {
        // sum of parts beyond the k-th
        if k >= parts {
            0
        } else if k >= a {
            parts - k
        } else {
            2 * (a - k) + b
        }
    };
    let mut relations = vec![power(Elem::x_minus(1, 1, 0), size + 1)];
    for s in 1..=size {
        for r in 0..=(size - s) {
            if (0..=parts).any(|k| s + r >= 1 + r * k + tail(k)) {
                relations.push(vec![
                    RelFactor { elem: Elem::x_plus(1, 1, 1), power: s as u32 },
                    RelFactor { elem: Elem::x_minus(1, 1, 0), power: (s + r) as u32 },
                ]);
            }
        }
    }
    Ok(Presentation { mu: Weight::new(vec![size]), relations })
}

/// The two-relation alternative presentation of `V(2^a 1^b)`: Weyl relation
/// plus `x^- (x) t^{a+b}`.
pub fn present_v_xi_short(ctx: &RankContext, a: i64, b: i64) -> Result<Presentation> {
    if ctx.rank() != 1 {
        return Err(Error::RankOneOnly(ctx.rank()));
    }
    let size = 2 * a + b;
    let relations = vec![
        power(Elem::x_minus(1, 1, 0), size + 1),
        power(Elem::x_minus(1, 1, (a + b) as usize), 1),
    ];
    Ok(Presentation { mu: Weight::new(vec![size]), relations })
}

/// Exact graded weight-space dimensions of a constructed module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModule {
    pub mu: Weight,
    pub dims: BTreeMap<(Weight, i64), i64>,
    pub trunc: usize,
    pub bound: usize,
}

/// JSON record for one graded dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRecord {
    pub weight: Vec<i64>,
    pub grade: i64,
    pub dim: i64,
}

impl GradedModule {
    pub fn total_dim(&self) -> i64 {
        self.dims.values().sum()
    }

    pub fn graded_character(&self) -> GradedCharacter {
        let mut out = GradedCharacter::default();
        for ((w, g), &d) in &self.dims {
            out.add_term(w.clone(), *g, d);
        }
        out
    }

    pub fn to_records(&self) -> Vec<DimRecord> {
        self.dims
            .iter()
            .map(|((w, g), &d)| DimRecord { weight: w.coords().to_vec(), grade: *g, dim: d })
            .collect()
    }
}

/// Options for `construct`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ConstructOpts {
    /// Truncation order override; default is max t-exponent + height of the
    /// highest weight + 1.
    pub trunc: Option<usize>,
    /// Weight-height cutoff override; default is the height of `mu - w0 mu`
    /// (the full box, which cannot clip the module).
    pub bound: Option<usize>,
    /// Re-run at truncation + 1 and insist the dimensions agree.
    pub check_stability: bool,
}

type SparseVec = BTreeMap<Monomial, BigRational>;

/// Row-echelon store keyed by leading monomial; rows are normalized to
/// leading coefficient 1.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<Monomial, SparseVec>,
}

impl Echelon {
    fn reduce(&self, v: &mut SparseVec) {
        loop {
            let lead = match v.iter().next() {
                Some((m, _)) => m.clone(),
                None => return,
            };
            let row = match self.rows.get(&lead) {
                Some(r) => r,
                None => return,
            };
            let c = v.get(&lead).unwrap().clone();
            for (m, rc) in row {
                let delta = &c * rc;
                let e = v.entry(m.clone()).or_insert_with(BigRational::zero);
                *e -= delta;
                if e.is_zero() {
                    v.remove(m);
                }
            }
        }
    }

    /// Returns true if the vector was independent and inserted.
    fn insert(&mut self, mut v: SparseVec) -> bool {
        self.reduce(&mut v);
        let (lead, c) = match v.iter().next() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return false,
        };
        let inv = BigRational::one() / c;
        for val in v.values_mut() {
            *val *= &inv;
        }
        self.rows.insert(lead, v);
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn to_sparse(v: &LinComb) -> SparseVec {
    v.iter().map(|(m, &c)| (m.clone(), BigRational::from(BigInt::from(c)))).collect()
}

type BlockKey = (Vec<i64>, i64); // (alpha-coordinate drop, grade)

struct BlockState {
    full: bool,
    basis: Option<Echelon>,
    monomials: Option<Vec<Monomial>>,
}

struct Builder<'a> {
    alg: &'a TruncatedAlgebra,
    st: Straightener<'a>,
    counts: HashMap<BlockKey, u64>,
}

impl<'a> Builder<'a> {
    fn block_of(&self, alg: &TruncatedAlgebra, v: &LinComb) -> Option<BlockKey> {
        let (m, _) = v.iter().next()?;
        let mut drop = vec![0i64; alg.rank()];
        let mut grade = 0i64;
        for &g in m {
            let e = alg.gen(g);
            grade += e.r as i64;
            for (d, gd) in drop.iter_mut().zip(&alg.gen_drop[g as usize]) {
                *d += gd;
            }
        }
        Some((drop, grade))
    }

    fn count(&self, key: &BlockKey) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    fn enumerate(&self, key: &BlockKey) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur: Monomial = Vec::new();
        self.enum_rec(self.alg.gen_count(), &mut key.0.clone(), key.1, &mut cur, &mut out);
        out
    }

    fn enum_rec(
        &self,
        max_gen: usize,
        c: &mut Vec<i64>,
        grade: i64,
        cur: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        if c.iter().all(|&x| x == 0) {
            if grade == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if grade < 0 || max_gen == 0 {
            return;
        }
        for g in (0..max_gen).rev() {
            let e = self.alg.gen(g as u16);
            let drop = &self.alg.gen_drop[g];
            if drop.iter().zip(c.iter()).any(|(d, x)| d > x) || (e.r as i64) > grade {
                continue;
            }
            for (x, d) in c.iter_mut().zip(drop) {
                *x -= d;
            }
            cur.push(g as u16);
            self.enum_rec(g + 1, c, grade - e.r as i64, cur, out);
            cur.pop();
            for (x, d) in c.iter_mut().zip(drop) {
                *x += d;
            }
        }
    }
}

fn monomial_counts(
    alg: &TruncatedAlgebra,
    dbox: &[i64],
    bound: usize,
) -> HashMap<BlockKey, u64> {
    let gmax = (alg.trunc() as i64 - 1) * bound as i64;
    let mut table: HashMap<BlockKey, u64> = HashMap::new();
    table.insert((vec![0; alg.rank()], 0), 1);
    for g in 0..alg.gen_count() {
        let e = alg.gen(g as u16);
        let drop = &alg.gen_drop[g];
        // Unbounded use of one generator: sweep keys in increasing order so
        // each addition can chain.
        let mut keys: Vec<BlockKey> = table.keys().cloned().collect();
        keys.sort();
        let mut idx = 0;
        while idx < keys.len() {
            let key = keys[idx].clone();
            idx += 1;
            let val = table.get(&key).copied().unwrap_or(0);
            if val == 0 {
                continue;
            }
            let mut next = key.clone();
            for (x, d) in next.0.iter_mut().zip(drop) {
                *x += d;
            }
            next.1 += e.r as i64;
            if next.1 > gmax
                || next.0.iter().zip(dbox).any(|(x, d)| x > d)
                || next.0.iter().sum::<i64>() > bound as i64
            {
                continue;
            }
            let slot = table.entry(next.clone()).or_insert(0);
            *slot += val;
            // Insert in sorted position so the chain continues.
            match keys[idx..].binary_search(&next) {
                Ok(_) => {}
                Err(pos) => keys.insert(idx + pos, next),
            }
        }
    }
    table
}

fn construct_once(p: &Presentation, trunc: usize, bound: usize) -> Result<GradedModule> {
    let ctx = RankContext::new(p.mu.rank())?;
    if !p.mu.is_dominant() {
        return Err(Error::NotDominant(p.mu.coords().to_vec()));
    }
    let dbox = alpha_coords(&ctx, &p.mu.sub(&p.mu.w0())?)?;
    let full_height: i64 = dbox.iter().sum();
    if trunc <= p.max_texp() {
        return Err(Error::InvalidArgument(format!(
            "truncation {trunc} not above the relation t-exponents"
        )));
    }
    let alg = TruncatedAlgebra::new(ctx.rank(), trunc)?;
    let counts = monomial_counts(&alg, &dbox, bound);
    let mut builder = Builder {
        alg: &alg,
        st: Straightener::new(&alg, &p.mu),
        counts,
    };

    // Normalize the explicit relations into PBW vectors.
    let mut seeds: Vec<LinComb> = Vec::new();
    for rel in &p.relations {
        let mut v = LinComb::new();
        v.insert(Vec::new(), 1);
        for f in rel.iter().rev() {
            for _ in 0..f.power {
                v = builder.st.apply(f.elem, &v);
            }
        }
        if !v.is_empty() {
            seeds.push(v);
        }
    }

    // Close under the raising/Cartan generators: x_i^+ (x) 1 and
    // h_i (x) t^r, r >= 1.
    let mut t_blocks: HashMap<BlockKey, Echelon> = HashMap::new();
    let mut queue: VecDeque<LinComb> = VecDeque::new();
    // The closure keeps vectors outside the reported weight box: their
    // raising-operator images can land back inside it.
    for v in seeds {
        let key = builder.block_of(&alg, &v).unwrap();
        if t_blocks.entry(key).or_default().insert(to_sparse(&v)) {
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        let mut images: Vec<LinComb> = Vec::new();
        for i in 1..=ctx.rank() {
            images.push(builder.st.apply(Elem::x_plus(i, i, 0), &v));
            for r in 1..trunc {
                images.push(builder.st.apply_cartan(i, r, &v));
            }
        }
        for img in images {
            if img.is_empty() {
                continue;
            }
            let key = builder.block_of(&alg, &img).unwrap();
            if t_blocks.entry(key).or_default().insert(to_sparse(&img)) {
                queue.push_back(img);
            }
        }
    }

    // Propagate downwards, block by block in increasing weight height.
    let mut block_keys: Vec<BlockKey> = builder.counts.keys().cloned().collect();
    block_keys.sort_by_key(|(c, g)| (c.iter().sum::<i64>(), c.clone(), *g));
    let mut states: HashMap<BlockKey, BlockState> = HashMap::new();
    let mut dims: BTreeMap<(Weight, i64), i64> = BTreeMap::new();

    for key in block_keys {
        let count = builder.count(&key);
        if count == 0 {
            continue;
        }
        // Parents along each generator.
        let mut parents: Vec<(u16, BlockKey)> = Vec::new();
        let mut all_full = true;
        for g in 0..alg.gen_count() {
            let e = alg.gen(g as u16);
            let mut pk = key.clone();
            for (x, d) in pk.0.iter_mut().zip(&alg.gen_drop[g]) {
                *x -= d;
            }
            pk.1 -= e.r as i64;
            if pk.1 < 0 || pk.0.iter().any(|&x| x < 0) || builder.count(&pk) == 0 {
                continue;
            }
            let pfull = states.get(&pk).map(|s| s.full).unwrap_or(false);
            if !pfull {
                all_full = false;
            }
            parents.push((g as u16, pk));
        }
        let has_parents = !parents.is_empty();
        if has_parents && all_full {
            states.insert(key, BlockState { full: true, basis: None, monomials: None });
            continue;
        }

        let mut ech = Echelon::default();
        if let Some(t) = t_blocks.get(&key) {
            for row in t.rows.values() {
                ech.insert(row.clone());
            }
        }
        for (g, pk) in &parents {
            let pfull = states.get(pk).map(|s| s.full).unwrap_or(false);
            if pfull {
                let monos: Vec<Monomial> = match &states.get(pk).unwrap().monomials {
                    Some(m) => m.clone(),
                    None => {
                        let m = builder.enumerate(pk);
                        states.get_mut(pk).unwrap().monomials = Some(m.clone());
                        m
                    }
                };
                for m in &monos {
                    let prod = builder.st.mult_gen(*g, m);
                    ech.insert(to_sparse(&prod));
                }
            } else if let Some(basis) = states.get(pk).and_then(|s| s.basis.as_ref()) {
                let rows: Vec<SparseVec> = basis.rows.values().cloned().collect();
                for row in rows {
                    let mut acc: SparseVec = BTreeMap::new();
                    for (m, c) in &row {
                        for (m2, c2) in builder.st.mult_gen(*g, m) {
                            let e = acc.entry(m2).or_insert_with(BigRational::zero);
                            *e += c * BigRational::from(BigInt::from(c2));
                        }
                    }
                    acc.retain(|_, v| !v.is_zero());
                    ech.insert(acc);
                }
            }
        }
        let rank = ech.rank() as u64;
        debug_assert!(rank <= count);
        let dim = (count - rank) as i64;
        let full = dim == 0;
        if dim > 0 {
            let (c, grade) = &key;
            let mut w = p.mu.clone();
            for i in 1..=ctx.rank() {
                w = w.sub(&ctx.simple_root(i)?.scale(c[i - 1]))?;
            }
            if (bound as i64) < full_height && c.iter().sum::<i64>() == bound as i64 {
                return Err(Error::BoundTooSmall(bound));
            }
            dims.insert((w, *grade), dim);
        }
        states.insert(
            key,
            BlockState { full, basis: if full { None } else { Some(ech) }, monomials: None },
        );
    }

    Ok(GradedModule { mu: p.mu.clone(), dims, trunc, bound })
}

/// Build the graded module presented by `p` over the truncated current
/// algebra; exact and deterministic.
pub fn construct(p: &Presentation, opts: ConstructOpts) -> Result<GradedModule> {
    let ctx = RankContext::new(p.mu.rank())?;
    let height = p.mu.coord_sum().max(0) as usize;
    let trunc = opts.trunc.unwrap_or(p.max_texp() + height + 1);
    let dbox = alpha_coords(&ctx, &p.mu.sub(&p.mu.w0())?)?;
    let bound = opts.bound.unwrap_or(dbox.iter().sum::<i64>() as usize);
    let module = construct_once(p, trunc, bound)?;
    if opts.check_stability {
        let again = construct_once(p, trunc + 1, bound)?;
        if again.dims != module.dims {
            return Err(Error::TruncationUnstable(trunc, trunc + 1));
        }
    }
    Ok(module)
}

/// Graded-character identity between the engine-built `M(nu, lambda)` and the
/// level-two Demazure character of `2 nu + lambda`.
pub fn verify_level_two_identity(ctx: &RankContext, nu: &Weight, lambda: &Weight) -> Result<bool> {
    let p = present_m(ctx, nu, lambda)?;
    let module = construct(&p, ConstructOpts::default())?;
    let mu = nu.scale(2).add(lambda)?;
    let target = crate::characters::demazure_character(ctx, 2, &mu)?;
    Ok(module.graded_character() == target)
}

/// Dimension additivity along the short exact sequence
/// `0 -> V(2^a 1^{b-2}) -> V(2^a 1^b) -> V(2^{a+1} 1^{b-2}) -> 0`.
pub fn verify_ses_dims(ctx: &RankContext, a: i64, b: i64) -> Result<bool> {
    if b < 2 {
        return Err(Error::InvalidArgument("need b >= 2".into()));
    }
    let whole = construct(&present_v_xi(ctx, a, b)?, ConstructOpts::default())?;
    let sub = construct(&present_v_xi(ctx, a, b - 2)?, ConstructOpts::default())?;
    let quot = construct(&present_v_xi(ctx, a + 1, b - 2)?, ConstructOpts::default())?;
    Ok(whole.total_dim() == sub.total_dim() + quot.total_dim())
}
