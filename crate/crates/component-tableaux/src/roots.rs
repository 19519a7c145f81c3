//! Shifted tableaux, word forms and excluded roots.
//!
//! Each Star group `(i, j)` of a component tableau gives a tableau `T_{i,j}`:
//! the partial column `j` is put directly below `i` in the original column
//! `C_h` of `i` (row `f`). Whatever hung below `i` is pushed leftwards: the
//! part below row `f` of each column of height `> f` replaces that of the
//! previous such column, skipping columns of height `< f`, until the column
//! `C_g` of height exactly `f` is reached. Reading columns bottom to top, left
//! to right gives a word; a position `(a, b)` of `𝔪` is excluded when `a`
//! comes after `b`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::builder::{ComponentTableau, Generator, Move};
use crate::diagram::{Diagram, NeighbouringPair, Pos};
use crate::invariants;
use crate::Error;

/// Columns read bottom to top, left to right.
pub fn word_form(columns: &[Vec<usize>]) -> Result<Vec<usize>, Error> {
    let w: Vec<usize> = columns.iter().flat_map(|c| c.iter().rev().copied()).collect();
    let mut seen = BTreeSet::new();
    for &x in &w {
        if !seen.insert(x) {
            return Err(Error::InvalidInput(format!("entry {x} occurs twice")));
        }
    }
    Ok(w)
}

/// Positions `(a, b)` of `𝔪` with `a` after `b` in the word.
pub fn excluded_from_word(w: &[usize], d: &Diagram) -> BTreeSet<Pos> {
    let mut place = vec![usize::MAX; d.n() + 1];
    for (k, &x) in w.iter().enumerate() {
        place[x] = k;
    }
    d.m_positions().into_iter().filter(|&(a, b)| place[a] > place[b]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedTableau {
    pub columns: Vec<Vec<usize>>,
    /// Original column of `i`.
    pub h: usize,
    /// Original row of `i`.
    pub f: usize,
    /// Column where the leftward shift stops; `None` when `i` is lowest in `C_h`.
    pub g: Option<usize>,
    /// The entries placed below `i`.
    pub placed: Vec<usize>,
}

impl ShiftedTableau {
    pub fn word(&self) -> Vec<usize> {
        word_form(&self.columns).expect("shifting permutes entries")
    }

    /// Excluded positions, flagged by whether they end in a placed entry.
    pub fn exclusions(&self, d: &Diagram) -> BTreeMap<Pos, RootKind> {
        excluded_from_word(&self.word(), d)
            .into_iter()
            .map(|p| (p, if self.placed.contains(&p.1) { RootKind::Primary } else { RootKind::Secondary }))
            .collect()
    }

    /// Column of each entry, by entry.
    pub fn column_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n + 1];
        for (c, col) in self.columns.iter().enumerate() {
            for &x in col {
                out[x] = c;
            }
        }
        out
    }
}

/// Puts `placed` (in order) below `i`, removing those entries from their
/// columns, then shifts the displaced partial columns leftwards.
pub fn shift_below(d: &Diagram, i: usize, placed: &[usize]) -> Result<ShiftedTableau, Error> {
    let h = d.col_of(i);
    let f = d.row_of(i);
    let mut cols: Vec<Vec<usize>> = d.columns().to_vec();
    for &j in placed {
        if d.col_of(j) <= h {
            return Err(Error::ConstructionViolation(format!("{j} is not to the right of {i}")));
        }
        cols[d.col_of(j)].retain(|&x| x != j);
    }
    let below = |c: usize| d.columns()[c][f.min(d.height(c))..].to_vec();
    let above = |c: usize| d.columns()[c][..f.min(d.height(c))].to_vec();
    cols[h] = above(h);
    cols[h].extend_from_slice(placed);
    let mut g = None;
    if d.height(h) > f {
        let g0 = (0..h).rev().find(|&c| d.height(c) == f).ok_or_else(|| {
            Error::ConstructionViolation(format!("no column of height {f} left of C{} for entry {i}", h + 1))
        })?;
        let chain: Vec<usize> =
            std::iter::once(g0).chain((g0 + 1..=h).filter(|&c| d.height(c) > f)).collect();
        for w in chain.windows(2) {
            let mut c = above(w[0]);
            c.extend(below(w[1]));
            cols[w[0]] = c;
        }
        g = Some(g0);
    }
    Ok(ShiftedTableau { columns: cols, h, f, g, placed: placed.to_vec() })
}

/// `T_{i,j}` for a generator.
pub fn shifted_tableau(d: &Diagram, gen: &Generator) -> Result<ShiftedTableau, Error> {
    shift_below(d, gen.i, &gen.j)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootKind {
    Primary,
    Secondary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorExclusions {
    pub generator: Generator,
    pub roots: BTreeMap<Pos, RootKind>,
}

/// All excluded roots of a component tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcludedRootSet {
    /// One entry per lowering move, in move order.
    pub per_generator: Vec<GeneratorExclusions>,
    pub union: BTreeSet<Pos>,
}

impl ExcludedRootSet {
    /// Support of `𝔲^𝒞`.
    pub fn u_support(&self, d: &Diagram) -> BTreeSet<Pos> {
        d.m_positions().into_iter().filter(|p| !self.union.contains(p)).collect()
    }

    pub fn to_json(&self) -> Vec<ExcludedJson> {
        let mut v: Vec<ExcludedJson> = self
            .per_generator
            .iter()
            .flat_map(|g| {
                g.roots.iter().map(|(&(i, j), &kind)| ExcludedJson { i, j, kind, generator: g.generator.clone() })
            })
            .collect();
        v.sort_by(|a, b| (a.i, a.j, a.kind, &a.generator).cmp(&(b.i, b.j, b.kind, &b.generator)));
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedJson {
    pub i: usize,
    pub j: usize,
    pub kind: RootKind,
    pub generator: Generator,
}

pub fn excluded_roots(ct: &ComponentTableau) -> Result<ExcludedRootSet, Error> {
    let d = &ct.diagram;
    let mut per_generator = Vec::new();
    let mut union = BTreeSet::new();
    for gen in ct.generators() {
        let roots = shifted_tableau(d, &gen)?.exclusions(d);
        union.extend(roots.keys().copied());
        per_generator.push(GeneratorExclusions { generator: gen, roots });
    }
    Ok(ExcludedRootSet { per_generator, union })
}

/// The string of the entry chosen for a pair, up to the step consuming it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PenetrationRecord {
    pub pair: NeighbouringPair,
    pub entry: usize,
    /// Indices into the tableau's moves: the downward steps of the string up
    /// to and including the one consuming the pair.
    pub steps: Vec<usize>,
    /// Row reached at the consuming step.
    pub s_prime: usize,
    /// Exclusions of the generators of those steps.
    pub excluded: BTreeSet<Pos>,
    /// The primary part of `excluded`.
    pub primary: BTreeSet<Pos>,
    /// The string continues to descend after the consuming step.
    pub halted: bool,
}

pub fn penetrating_string(ct: &ComponentTableau, pair_index: usize) -> Result<PenetrationRecord, Error> {
    let d = &ct.diagram;
    let pair = d.pairs()[pair_index];
    let moves: &[Move] = ct.moves();
    let last = moves
        .iter()
        .position(|m| m.pairs.contains(&pair_index))
        .ok_or_else(|| Error::ConstructionViolation(format!("pair {pair} is never used")))?;
    let i = moves[last].entry;
    let steps: Vec<usize> = (0..=last).filter(|&k| moves[k].entry == i).collect();
    let (c0, r0) = (d.col_of(i), d.row_of(i));
    if !(pair.left <= c0 && c0 < pair.right && r0 <= pair.height) {
        return Err(Error::ConstructionViolation(format!("{i}-string does not start in the rectangle of {pair}")));
    }
    let m = &moves[last];
    if !(pair.left < m.to_col() && m.to_col() <= pair.right && m.to_row() > pair.height) {
        return Err(Error::ConstructionViolation(format!("{i}-string does not penetrate below {pair}")));
    }
    if steps[..steps.len() - 1].iter().any(|&k| moves[k].to_row() > pair.height) {
        return Err(Error::ConstructionViolation(format!("{i}-string leaves the rectangle of {pair} early")));
    }
    let mut excluded = BTreeSet::new();
    let mut primary = BTreeSet::new();
    for &k in &steps {
        let gen = Generator { i, j: moves[k].targets.clone() };
        for (p, kind) in shifted_tableau(d, &gen)?.exclusions(d) {
            excluded.insert(p);
            if kind == RootKind::Primary {
                primary.insert(p);
            }
        }
    }
    let halted = moves[last + 1..].iter().any(|mv| mv.entry == i);
    Ok(PenetrationRecord { pair, entry: i, steps, s_prime: m.to_row(), excluded, primary, halted })
}

/// The tableau with the amalgamated partial column below `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HattedTableau {
    pub shifted: ShiftedTableau,
    pub m_hat: usize,
    pub s_prime: usize,
    /// Virtual degree, counting only entries from `[C, C']` over all columns.
    pub virtual_degree: i64,
    /// The same sum taken over the columns `[C, C']` only.
    pub window_degree: i64,
    /// Change in `Σ min(s, height)` over all columns and entries.
    pub unrestricted_delta: i64,
}

impl HattedTableau {
    pub fn amalgamated(&self) -> &[usize] {
        &self.shifted.placed
    }
}

pub fn hatted_tableau(ct: &ComponentTableau, rec: &PenetrationRecord) -> Result<HattedTableau, Error> {
    let d = &ct.diagram;
    let moves = ct.moves();
    let placed: Vec<usize> = rec.steps.iter().flat_map(|&k| moves[k].targets.iter().copied()).collect();
    let m_hat = placed.len();
    let sh = shift_below(d, rec.entry, &placed)?;
    let ht = |c: usize| sh.columns[c].len();
    let fail = |what: &str| Err(Error::Consistency(format!("hatted tableau for {}: {what}", rec.pair)));

    for &k in &rec.steps {
        let m = &moves[k];
        if ht(m.to_col()) != d.height(m.to_col()) - m.rows_down() {
            return fail("target column height");
        }
    }
    if ht(sh.h) != sh.f + m_hat {
        return fail("height of the column of i");
    }
    if ht(sh.h) != rec.s_prime {
        return fail("height of the column of i differs from the penetration depth");
    }
    if let Some(g0) = sh.g {
        let chain: Vec<usize> = std::iter::once(g0).chain((g0 + 1..=sh.h).filter(|&c| d.height(c) > sh.f)).collect();
        for w in chain.windows(2) {
            if ht(w[0]) != d.height(w[1]) {
                return fail("shifted column height");
            }
        }
    }
    let s = rec.pair.height;
    let in_window = |e: &usize| (rec.pair.left..=rec.pair.right).contains(&d.col_of(*e));
    let capped = |cols: &[Vec<usize>], range: std::ops::Range<usize>, only_window: bool| -> i64 {
        range
            .map(|c| {
                let h = if only_window { cols[c].iter().filter(|e| in_window(e)).count() } else { cols[c].len() };
                h.min(s) as i64
            })
            .sum()
    };
    let k = d.k();
    let virtual_degree = capped(&sh.columns, 0..k, true) - s as i64;
    let window_degree = capped(&sh.columns, rec.pair.left..rec.pair.right + 1, true) - s as i64;
    let unrestricted_delta = capped(&sh.columns, 0..k, false) - capped(d.columns(), 0..k, false);
    Ok(HattedTableau { shifted: sh, m_hat, s_prime: rec.s_prime, virtual_degree, window_degree, unrestricted_delta })
}

/// Whether the hatted exclusions agree, kind by kind, with those of the
/// tableaux placing one amalgamated entry at a time.
pub fn hat_exclusions_match(d: &Diagram, rec: &PenetrationRecord, hat: &HattedTableau) -> Result<bool, Error> {
    let hat_x = hat.shifted.exclusions(d);
    let mut single: BTreeMap<Pos, RootKind> = BTreeMap::new();
    for &j in hat.amalgamated() {
        for (p, kind) in shift_below(d, rec.entry, &[j])?.exclusions(d) {
            single.insert(p, kind);
        }
    }
    let split = |m: &BTreeMap<Pos, RootKind>, k: RootKind| -> BTreeSet<Pos> {
        m.iter().filter(|(_, &v)| v == k).map(|(&p, _)| p).collect()
    };
    Ok(split(&hat_x, RootKind::Primary) == split(&single, RootKind::Primary)
        && split(&hat_x, RootKind::Secondary) == split(&single, RootKind::Secondary))
}

/// A chain monomial with a right-to-left (or vertical) constituent in the
/// hatted tableau that avoids `excluded`, if any.
pub fn exceptional_witness(
    d: &Diagram,
    pair: &NeighbouringPair,
    hat: &HattedTableau,
    excluded: &BTreeSet<Pos>,
) -> Option<Vec<Pos>> {
    let col = hat.shifted.column_of(d.n());
    invariants::chain_support(d, pair).into_iter().find(|mono| {
        mono.iter().any(|&(a, b)| col[a] >= col[b]) && !mono.iter().any(|p| excluded.contains(p))
    })
}
