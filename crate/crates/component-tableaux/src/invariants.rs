//! The semi-invariant generators attached to neighbouring pairs.
//!
//! For a pair `(C, C')` of height `s` only the columns `[C, C']` matter, so
//! the diagram is cut down to them first. On that piece, with `n'` entries,
//! the `(n' - s) × (n' - s)` lower-left minor of `a·Id_{>s} + Σ x*_{i,j} E_{j,i}`
//! starts as `a^{d_D} · I`; `I` is the generator. `Id_{>s}` is the identity
//! on Levi blocks of size larger than `s`.
//!
//! Two engines compute it:
//! * symbolic: a row-by-row Laplace expansion over column subsets, exact and
//!   division free, truncated above `a^{d_D}`;
//! * numeric: big-integer determinants at several values of `a` and exact
//!   interpolation, used beyond the symbolic size threshold.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::builder::ComponentTableau;
use crate::diagram::{Composition, Diagram, NeighbouringPair, Pos};
use crate::linalg;
use crate::poly::{Monomial, SparsePolynomial};
use crate::Error;

/// Which diagonal slots carry the parameter `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdMode {
    /// Levi blocks of size `> s` only.
    AboveS,
    /// Every diagonal slot.
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Zero,
    A,
    Var(Pos),
}

/// The columns `[C, C']` as a diagram of their own, with the entry offset.
pub fn restricted(d: &Diagram, pair: &NeighbouringPair) -> (Diagram, NeighbouringPair, usize) {
    let parts = d.composition().parts()[pair.left..=pair.right].to_vec();
    let sub = Diagram::new(&Composition::new(parts).expect("non-empty slice of a composition"));
    let offset = d.columns()[pair.left][0] - 1;
    let p = NeighbouringPair { left: 0, right: pair.right - pair.left, height: pair.height };
    (sub, p, offset)
}

fn slots(sub: &Diagram, s: usize, mode: IdMode) -> Vec<Vec<Slot>> {
    let n = sub.n();
    let size = n - s;
    (0..size)
        .map(|p| {
            let row = p + 1 + s;
            (0..size)
                .map(|q| {
                    let col = q + 1;
                    if col == row {
                        let block = sub.height(sub.col_of(col));
                        if mode == IdMode::Full || block > s {
                            Slot::A
                        } else {
                            Slot::Zero
                        }
                    } else if sub.in_m((col, row)) {
                        Slot::Var((col, row))
                    } else {
                        Slot::Zero
                    }
                })
                .collect()
        })
        .collect()
}

/// Determinant of a matrix of single-term entries by expansion over the set
/// of columns used so far; terms with `a`-degree above `max_a` are dropped.
fn expand(m: &[Vec<Slot>], max_a: Option<u32>) -> SparsePolynomial {
    let n = m.len();
    if n == 0 {
        return SparsePolynomial::constant(1);
    }
    let mut layer: HashMap<u32, HashMap<Monomial, i128>> = HashMap::new();
    layer.insert(0, HashMap::from([(Monomial::one(), 1i128)]));
    for row in m {
        let mut next: HashMap<u32, HashMap<Monomial, i128>> = HashMap::new();
        for (mask, poly) in &layer {
            for (q, slot) in row.iter().enumerate() {
                if *slot == Slot::Zero || mask & (1 << q) != 0 {
                    continue;
                }
                let flips = (mask >> (q + 1)).count_ones();
                let sign = if flips % 2 == 0 { 1 } else { -1 };
                let target = next.entry(mask | (1 << q)).or_default();
                for (mono, c) in poly {
                    let mono = match *slot {
                        Slot::A => {
                            if max_a.is_some_and(|k| mono.a_pow + 1 > k) {
                                continue;
                            }
                            Monomial { vars: mono.vars.clone(), a_pow: mono.a_pow + 1 }
                        }
                        Slot::Var(v) => mono.mul(&Monomial::var(v)),
                        Slot::Zero => unreachable!(),
                    };
                    *target.entry(mono).or_insert(0) += sign * c;
                }
            }
        }
        for poly in next.values_mut() {
            poly.retain(|_, c| *c != 0);
        }
        next.retain(|_, p| !p.is_empty());
        layer = next;
    }
    let full = (1u32 << n) - 1;
    SparsePolynomial::from_terms(
        layer.remove(&full).unwrap_or_default().into_iter().map(|(m, c)| (m, BigInt::from(c))),
    )
}

/// The full lower-left minor (all powers of `a`), in the diagram's numbering.
pub fn symbolic_minor(d: &Diagram, pair: &NeighbouringPair) -> SparsePolynomial {
    minor(d, pair, IdMode::AboveS, None)
}

pub fn minor(d: &Diagram, pair: &NeighbouringPair, mode: IdMode, max_a: Option<u32>) -> SparsePolynomial {
    let (sub, p, off) = restricted(d, pair);
    expand(&slots(&sub, p.height, mode), max_a).shift(off)
}

/// A generator together with its bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    pub pair: NeighbouringPair,
    pub d_d: usize,
    pub true_degree: usize,
    pub poly: SparsePolynomial,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantJson {
    pub pair: [usize; 3],
    pub degree: usize,
    #[serde(rename = "dD")]
    pub d_d: usize,
    pub monomial_count: usize,
    pub polynomial: Vec<crate::poly::TermJson>,
}

impl InvariantRecord {
    pub fn to_json(&self) -> InvariantJson {
        InvariantJson {
            pair: [self.pair.left + 1, self.pair.right + 1, self.pair.height],
            degree: self.true_degree,
            d_d: self.d_d,
            monomial_count: self.poly.len(),
            polynomial: self.poly.to_json(),
        }
    }
}

/// Coefficient of `a^{d_D}`, sign-normalised; lower powers must vanish.
pub fn extract_invariant(minor: &SparsePolynomial, d_d: usize) -> Result<SparsePolynomial, Error> {
    for k in 0..d_d as u32 {
        let low = minor.a_coefficient(k);
        if !low.is_zero() {
            return Err(Error::Consistency(format!("coefficient of a^{k} below a^{d_d} is {low}")));
        }
    }
    Ok(minor.a_coefficient(d_d as u32).normalize_sign())
}

/// Generator for `pair` by the symbolic engine.
pub fn invariant(d: &Diagram, pair: &NeighbouringPair) -> Result<InvariantRecord, Error> {
    invariant_with(d, pair, IdMode::AboveS)
}

pub fn invariant_with(d: &Diagram, pair: &NeighbouringPair, mode: IdMode) -> Result<InvariantRecord, Error> {
    let d_d = d.d_d(pair);
    let raw = minor(d, pair, mode, Some(d_d as u32));
    let poly = extract_invariant(&raw, d_d)?;
    let true_degree = d.true_degree(pair);
    if poly.is_zero() {
        return Err(Error::Consistency(format!("generator for {pair} is zero")));
    }
    if poly.homogeneous_degree() != Some(true_degree) || poly.terms().any(|(m, _)| !m.is_multilinear()) {
        return Err(Error::Consistency(format!(
            "generator for {pair} is not multilinear of degree {true_degree}"
        )));
    }
    Ok(InvariantRecord { pair: *pair, d_d, true_degree, poly })
}

/// Supports of the products of `s` disjoint chains from `C` to `C'` that pass
/// through `min(c, s)` boxes of every column in between.
pub fn chain_support(d: &Diagram, pair: &NeighbouringPair) -> BTreeSet<Vec<Pos>> {
    fn rec(
        d: &Diagram,
        c: usize,
        last: usize,
        s: usize,
        ends: &mut Vec<usize>,
        edges: &mut Vec<Pos>,
        out: &mut BTreeSet<Vec<Pos>>,
    ) {
        if c > last {
            let mut m = edges.clone();
            m.sort_unstable();
            out.insert(m);
            return;
        }
        let col = &d.columns()[c];
        let k = col.len().min(s);
        let mut used = vec![false; col.len()];
        assign(d, c, last, s, 0, s - k, ends, edges, &mut used, col, out);
    }
    #[allow(clippy::too_many_arguments)]
    fn assign(
        d: &Diagram,
        c: usize,
        last: usize,
        s: usize,
        e: usize,
        skips: usize,
        ends: &mut Vec<usize>,
        edges: &mut Vec<Pos>,
        used: &mut Vec<bool>,
        col: &[usize],
        out: &mut BTreeSet<Vec<Pos>>,
    ) {
        if e == ends.len() {
            rec(d, c + 1, last, s, ends, edges, out);
            return;
        }
        if skips > 0 {
            assign(d, c, last, s, e + 1, skips - 1, ends, edges, used, col, out);
        }
        for b in 0..col.len() {
            if used[b] {
                continue;
            }
            used[b] = true;
            let old = ends[e];
            edges.push((old, col[b]));
            ends[e] = col[b];
            assign(d, c, last, s, e + 1, skips, ends, edges, used, col, out);
            ends[e] = old;
            edges.pop();
            used[b] = false;
        }
    }
    let s = pair.height;
    let mut ends: Vec<usize> = d.columns()[pair.left].clone();
    let mut out = BTreeSet::new();
    rec(d, pair.left + 1, pair.right, s, &mut ends, &mut Vec::new(), &mut out);
    out
}

/// Restriction to `e + V`: One variables ↦ 1, Star variables kept, others ↦ 0.
pub fn weierstrass_restrict(poly: &SparsePolynomial, ct: &ComponentTableau) -> SparsePolynomial {
    let asg: HashMap<Pos, BigInt> = poly
        .variables()
        .into_iter()
        .filter(|v| !ct.stars.contains(v))
        .map(|v| (v, if ct.ones.contains(&v) { BigInt::one() } else { BigInt::zero() }))
        .collect();
    poly.substitute(&asg)
}

/// A surviving monomial if `poly` does not vanish once `zeroed` is set to zero.
pub fn vanishing_witness(poly: &SparsePolynomial, zeroed: &BTreeSet<Pos>) -> Option<Vec<Pos>> {
    poly.set_zero(zeroed).terms().next().map(|(m, _)| m.vars.clone())
}

/// Value of the generator at a numeric point of the restricted `𝔪`.
///
/// The raw minor is evaluated at `a = 0, 1, …, N` and interpolated; all
/// coefficients below `a^{d_D}` must come out zero.
pub fn numeric_invariant(
    d: &Diagram,
    pair: &NeighbouringPair,
    assignment: &HashMap<Pos, BigInt>,
) -> Result<BigInt, Error> {
    let (sub, p, off) = restricted(d, pair);
    let m = slots(&sub, p.height, IdMode::AboveS);
    let size = m.len();
    let xs: Vec<BigInt> = (0..=size as i64).map(BigInt::from).collect();
    let mut ys = Vec::with_capacity(xs.len());
    for a in &xs {
        let mat: Vec<Vec<BigInt>> = m
            .iter()
            .map(|row| {
                row.iter()
                    .map(|slot| match *slot {
                        Slot::Zero => BigInt::zero(),
                        Slot::A => a.clone(),
                        Slot::Var((i, j)) => assignment.get(&(i + off, j + off)).cloned().unwrap_or_default(),
                    })
                    .collect()
            })
            .collect();
        ys.push(linalg::det_bareiss(mat));
    }
    let coeffs = linalg::interpolate(&xs, &ys);
    let d_d = d.d_d(pair);
    for (k, c) in coeffs.iter().enumerate().take(d_d) {
        if !c.is_zero() {
            return Err(Error::Consistency(format!("numeric minor has a^{k} coefficient {c}")));
        }
    }
    linalg::as_integer(&coeffs[d_d])
        .ok_or_else(|| Error::Consistency("non-integral interpolated coefficient".into()))
}

/// Variables the generator for `pair` can involve.
pub fn pair_variables(d: &Diagram, pair: &NeighbouringPair) -> Vec<Pos> {
    let r = d.entries_between(pair.left, pair.right);
    d.m_positions().into_iter().filter(|(i, j)| r.contains(i) && r.contains(j)).collect()
}

/// Random identity test: does the generator vanish whenever `zeroed` is zero?
pub fn randomized_vanishing<R: Rng>(
    d: &Diagram,
    pair: &NeighbouringPair,
    zeroed: &BTreeSet<Pos>,
    trials: usize,
    rng: &mut R,
) -> Result<bool, Error> {
    let vars = pair_variables(d, pair);
    for _ in 0..trials {
        let asg: HashMap<Pos, BigInt> = vars
            .iter()
            .map(|v| (*v, if zeroed.contains(v) { BigInt::zero() } else { BigInt::from(rng.gen::<u32>()) }))
            .collect();
        if !numeric_invariant(d, pair, &asg)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Random test that the restriction to `e + V` is `±x_v` for one Star `v`.
pub fn randomized_weierstrass<R: Rng>(
    d: &Diagram,
    pair: &NeighbouringPair,
    ct: &ComponentTableau,
    trials: usize,
    rng: &mut R,
) -> Result<Option<(i8, Pos)>, Error> {
    let vars = pair_variables(d, pair);
    let mut found: Option<(i8, Pos)> = None;
    for _ in 0..trials {
        let mut asg = HashMap::new();
        for v in &vars {
            let x = if ct.ones.contains(v) {
                BigInt::one()
            } else if ct.stars.contains(v) {
                BigInt::from(rng.gen_range(1u64 << 20..1u64 << 32))
            } else {
                BigInt::zero()
            };
            asg.insert(*v, x);
        }
        let val = numeric_invariant(d, pair, &asg)?;
        let hit = vars.iter().filter(|v| ct.stars.contains(v)).find_map(|v| {
            let x = &asg[v];
            if &val == x {
                Some((1i8, *v))
            } else if val == -x {
                Some((-1i8, *v))
            } else {
                None
            }
        });
        match (hit, found) {
            (None, _) => return Ok(None),
            (Some(h), None) => found = Some(h),
            (Some(h), Some(f)) if h != f => return Ok(None),
            _ => {}
        }
    }
    Ok(found)
}

/// Structural singularity of the minor once `zeroed` is set to zero.
///
/// Only meaningful when `d_D = 0` (maximal height): the minor is then a
/// matrix of distinct variables, and it vanishes identically exactly when its
/// nonzero pattern has no perfect matching.
pub fn structurally_singular(d: &Diagram, pair: &NeighbouringPair, zeroed: &BTreeSet<Pos>) -> Option<bool> {
    if d.d_d(pair) != 0 {
        return None;
    }
    let (sub, p, off) = restricted(d, pair);
    let m = slots(&sub, p.height, IdMode::AboveS);
    let adj: Vec<Vec<usize>> = m
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, s)| match s {
                    Slot::Zero => false,
                    Slot::A => true,
                    Slot::Var((i, j)) => !zeroed.contains(&(i + off, j + off)),
                })
                .map(|(q, _)| q)
                .collect()
        })
        .collect();
    Some(!linalg::has_perfect_matching(&adj, m.len()))
}

/// How generators are evaluated for one diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Symbolic,
    Numeric,
}

/// The generators of one diagram behind a single interface, whichever engine.
#[derive(Clone, Debug)]
pub struct Generators {
    pub engine: Engine,
    /// Expanded generators by pair index (symbolic engine only).
    pub records: Vec<InvariantRecord>,
    /// Random evaluations per identity test (numeric engine only).
    pub trials: usize,
}

impl Generators {
    pub fn symbolic(d: &Diagram) -> Result<Self, Error> {
        let records = d.pairs().iter().map(|p| invariant(d, p)).collect::<Result<Vec<_>, _>>()?;
        Ok(Generators { engine: Engine::Symbolic, records, trials: 0 })
    }

    pub fn from_records(records: Vec<InvariantRecord>) -> Self {
        Generators { engine: Engine::Symbolic, records, trials: 0 }
    }

    pub fn numeric(trials: usize) -> Self {
        Generators { engine: Engine::Numeric, records: Vec::new(), trials }
    }

    /// `None` if the generator vanishes once `zeroed` is zero; otherwise a
    /// surviving monomial (empty for the numeric engine).
    pub fn vanishing_witness<R: Rng>(
        &self,
        d: &Diagram,
        pair_index: usize,
        zeroed: &BTreeSet<Pos>,
        rng: &mut R,
    ) -> Result<Option<Vec<Pos>>, Error> {
        match self.engine {
            Engine::Symbolic => Ok(vanishing_witness(&self.records[pair_index].poly, zeroed)),
            Engine::Numeric => {
                let ok = randomized_vanishing(d, &d.pairs()[pair_index], zeroed, self.trials, rng)?;
                Ok(if ok { None } else { Some(Vec::new()) })
            }
        }
    }

    pub fn vanishes<R: Rng>(
        &self,
        d: &Diagram,
        pair_index: usize,
        zeroed: &BTreeSet<Pos>,
        rng: &mut R,
    ) -> Result<bool, Error> {
        Ok(self.vanishing_witness(d, pair_index, zeroed, rng)?.is_none())
    }

    /// The Star variable the generator restricts to on `e + V`, if it is one.
    pub fn restrict<R: Rng>(
        &self,
        d: &Diagram,
        pair_index: usize,
        ct: &ComponentTableau,
        rng: &mut R,
    ) -> Result<Option<(i8, Pos)>, Error> {
        match self.engine {
            Engine::Symbolic => Ok(weierstrass_restrict(&self.records[pair_index].poly, ct)
                .as_signed_variable()
                .filter(|(_, v)| ct.stars.contains(v))),
            Engine::Numeric => randomized_weierstrass(d, &d.pairs()[pair_index], ct, self.trials, rng),
        }
    }

    /// Value at a point; unassigned variables count as zero.
    pub fn value_at(&self, d: &Diagram, pair_index: usize, asg: &HashMap<Pos, BigInt>) -> Result<BigInt, Error> {
        match self.engine {
            Engine::Symbolic => {
                let poly = &self.records[pair_index].poly;
                let full: HashMap<Pos, BigInt> =
                    poly.variables().into_iter().map(|v| (v, asg.get(&v).cloned().unwrap_or_default())).collect();
                poly.evaluate(&full, &BigInt::zero())
            }
            Engine::Numeric => numeric_invariant(d, &d.pairs()[pair_index], asg),
        }
    }
}
