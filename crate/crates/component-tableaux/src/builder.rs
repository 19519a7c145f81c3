//! Extension of a tableau by batch choices, line decoration and collapse.
//!
//! Stage `t` fills row `t + 1` of the growing tableau `T(∞)`:
//!
//! 1. *Lowering.* An entry `i` in row `t' ≤ t` of column `r`, not already
//!    present in column `r + 1`, may be put in row `t + 1` of column `r + 1`
//!    when that column currently has height `t` and every height in
//!    `[t', t]` has a free neighbouring pair surrounding `(r, r + 1)`. All
//!    those pairs are consumed together. A drop of more than one row also
//!    needs column `r + 1` to have original height `t`.
//! 2. Entries not moved on are *stopped*.
//! 3. *Translation.* Afterwards, left to right, an entry in row `t + 1` of
//!    column `r` moves into column `r + 1` if that box is the next empty one.
//!
//! A pair may be left free at its own stage and consumed later together with
//! a higher pair; branches that end with an unused pair are discarded.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, NeighbouringPair, Pos};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Origin {
    /// Box of the original tableau.
    Original,
    /// Put there by the lowering move with this index.
    Lowered(usize),
    /// Translated horizontally from the column on the left.
    Shifted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub entry: usize,
    pub origin: Origin,
}

/// One application of the lowering rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    /// Stage `t`; the entry lands in row `t + 1`.
    pub stage: usize,
    /// Column the entry leaves (0-based); it lands in `from_col + 1`.
    pub from_col: usize,
    pub entry: usize,
    /// Row `t'` the entry leaves.
    pub from_row: usize,
    /// Indices into [`Diagram::pairs`], heights `t'..=t` ascending.
    pub pairs: Vec<usize>,
    /// Original entries of the target column joined to the entry by Star lines.
    pub targets: Vec<usize>,
}

impl Move {
    pub fn to_col(&self) -> usize {
        self.from_col + 1
    }

    pub fn to_row(&self) -> usize {
        self.stage + 1
    }

    pub fn rows_down(&self) -> usize {
        self.stage + 1 - self.from_row
    }
}

/// Entries that could be chosen for a pair when it was consulted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Batch {
    pub stage: usize,
    pub pair: NeighbouringPair,
    pub members: Vec<usize>,
}

/// The limit tableau `T(∞)` of one complete sequence of choices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedTableau {
    cols: Vec<Vec<Cell>>,
    moves: Vec<Move>,
    batches: Vec<Batch>,
    stage: usize,
}

impl ExtendedTableau {
    fn start(d: &Diagram) -> Self {
        let cols = d
            .columns()
            .iter()
            .map(|c| c.iter().map(|&entry| Cell { entry, origin: Origin::Original }).collect())
            .collect();
        ExtendedTableau { cols, moves: Vec::new(), batches: Vec::new(), stage: 0 }
    }

    pub fn columns(&self) -> &[Vec<Cell>] {
        &self.cols
    }

    pub fn column_entries(&self, c: usize) -> Vec<usize> {
        self.cols[c].iter().map(|x| x.entry).collect()
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn batches(&self) -> &[Batch] {
        &self.batches
    }

    /// Last completed stage.
    pub fn stage(&self) -> usize {
        self.stage
    }

    pub fn depth(&self) -> usize {
        self.cols.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    /// Row (1-based) of `entry` in column `c`, if present.
    pub fn row_in(&self, c: usize, entry: usize) -> Option<usize> {
        self.cols[c].iter().position(|x| x.entry == entry).map(|r| r + 1)
    }

    /// The `i`-string: every box `(column, row)` holding `i`, left to right.
    pub fn string(&self, i: usize) -> Vec<(usize, usize)> {
        (0..self.cols.len()).filter_map(|c| self.row_in(c, i).map(|r| (c, r))).collect()
    }

    /// The move consuming each pair, by pair index.
    pub fn move_of_pair(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for (mi, m) in self.moves.iter().enumerate() {
            for &p in &m.pairs {
                out.insert(p, mi);
            }
        }
        out
    }

    fn used(&self, npairs: usize) -> Vec<bool> {
        let mut used = vec![false; npairs];
        for m in &self.moves {
            for &p in &m.pairs {
                used[p] = true;
            }
        }
        used
    }
}

/// All extended tableaux of the diagram, in canonical order.
///
/// Within a stage, pairs are visited by left column; for each pair the
/// candidate moves are tried rightmost target first, shallowest drop first,
/// and "leave the pair for later" last. The first tableau is therefore the one
/// that always lowers the rightmost batch member by a single row.
pub fn extend_all(d: &Diagram) -> Vec<ExtendedTableau> {
    let mut out = Vec::new();
    run_stage(d, ExtendedTableau::start(d), 1, &mut out);
    out
}

fn run_stage(d: &Diagram, state: ExtendedTableau, t: usize, out: &mut Vec<ExtendedTableau>) {
    let pairs = d.pairs();
    let used = state.used(pairs.len());
    let cands = candidates(d, &state, t, &used);

    // Group by the consumed pair of height t; every move uses exactly one.
    let mut groups: Vec<(usize, Vec<Move>)> = pairs
        .iter()
        .enumerate()
        .filter(|(pi, p)| p.height == t && !used[*pi])
        .map(|(pi, _)| (pi, Vec::new()))
        .collect();
    for m in cands.iter() {
        let top = *m.pairs.last().unwrap();
        if let Some(g) = groups.iter_mut().find(|g| g.0 == top) {
            g.1.push(m.clone());
        }
    }
    for g in groups.iter_mut() {
        g.1.sort_by(|a, b| b.to_col().cmp(&a.to_col()).then(b.from_row.cmp(&a.from_row)));
    }

    let mut batches = Vec::new();
    for (pi, p) in pairs.iter().enumerate() {
        if used[pi] || p.height > t {
            continue;
        }
        let mut members: Vec<usize> =
            cands.iter().filter(|m| m.pairs.contains(&pi)).map(|m| m.entry).collect();
        members.sort_unstable();
        members.dedup();
        batches.push(Batch { stage: t, pair: *p, members });
    }

    let mut chosen = Vec::new();
    let mut taken = used.clone();
    choose(d, &state, t, &groups, 0, &mut chosen, &mut taken, &batches, out);
}

#[allow(clippy::too_many_arguments)]
fn choose(
    d: &Diagram,
    state: &ExtendedTableau,
    t: usize,
    groups: &[(usize, Vec<Move>)],
    g: usize,
    chosen: &mut Vec<Move>,
    taken: &mut Vec<bool>,
    batches: &[Batch],
    out: &mut Vec<ExtendedTableau>,
) {
    if g == groups.len() {
        let next = apply(d, state, t, chosen, batches);
        finish_stage(d, next, t, out);
        return;
    }
    for m in &groups[g].1 {
        if m.pairs.iter().any(|&p| taken[p]) {
            continue;
        }
        for &p in &m.pairs {
            taken[p] = true;
        }
        chosen.push(m.clone());
        choose(d, state, t, groups, g + 1, chosen, taken, batches, out);
        chosen.pop();
        for &p in &m.pairs {
            taken[p] = false;
        }
    }
    choose(d, state, t, groups, g + 1, chosen, taken, batches, out);
}

fn finish_stage(d: &Diagram, state: ExtendedTableau, t: usize, out: &mut Vec<ExtendedTableau>) {
    let used = state.used(d.pairs().len());
    // A free pair can only be consumed later by a deeper drop into a column
    // of original height > t inside it.
    for (pi, p) in d.pairs().iter().enumerate() {
        if !used[pi] && p.height <= t && !(p.left + 1..=p.right).any(|c| d.height(c) > t) {
            return;
        }
    }
    if state.depth() <= t {
        if used.iter().all(|&u| u) {
            out.push(state);
        }
        return;
    }
    run_stage(d, state, t + 1, out);
}

fn candidates(d: &Diagram, state: &ExtendedTableau, t: usize, used: &[bool]) -> Vec<Move> {
    let pairs = d.pairs();
    let mut out = Vec::new();
    for r in 0..state.cols.len().saturating_sub(1) {
        let tgt = r + 1;
        if state.cols[tgt].len() != t {
            continue;
        }
        for (idx, cell) in state.cols[r].iter().enumerate().take(t) {
            let t1 = idx + 1;
            if state.cols[tgt].iter().any(|c| c.entry == cell.entry) {
                continue;
            }
            if t1 < t && d.height(tgt) != t {
                continue;
            }
            let mut ps = Vec::with_capacity(t - t1 + 1);
            for s in t1..=t {
                match pairs
                    .iter()
                    .position(|p| p.height == s && p.surrounds(r))
                    .filter(|&pi| !used[pi])
                {
                    Some(pi) => ps.push(pi),
                    None => break,
                }
            }
            if ps.len() != t - t1 + 1 {
                continue;
            }
            let col = &d.columns()[tgt];
            let targets = if t1 < t {
                col[t1 - 1..t].to_vec()
            } else {
                vec![*col.last().unwrap()]
            };
            out.push(Move { stage: t, from_col: r, entry: cell.entry, from_row: t1, pairs: ps, targets });
        }
    }
    out
}

fn apply(d: &Diagram, state: &ExtendedTableau, t: usize, chosen: &[Move], batches: &[Batch]) -> ExtendedTableau {
    let mut next = state.clone();
    let _ = d;
    for m in chosen {
        let mi = next.moves.len();
        next.cols[m.to_col()].push(Cell { entry: m.entry, origin: Origin::Lowered(mi) });
        next.moves.push(m.clone());
    }
    for r in 0..next.cols.len().saturating_sub(1) {
        if next.cols[r].len() > t && next.cols[r + 1].len() == t {
            let entry = next.cols[r][t].entry;
            next.cols[r + 1].push(Cell { entry, origin: Origin::Shifted });
        }
    }
    next.batches.extend(batches.iter().cloned());
    next.stage = t;
    next
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    One,
    Star,
    Neutral,
}

/// A line of `T(∞)` between entries `i` and `j`; boxes are `(column, row)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedLine {
    pub i: usize,
    pub j: usize,
    pub label: Label,
    pub from: (usize, usize),
    pub to: (usize, usize),
}

/// Draws the full line family between every pair of adjacent extended columns.
pub fn decorate(d: &Diagram, ext: &ExtendedTableau) -> Vec<DecoratedLine> {
    let mut out = Vec::new();
    for r in 0..ext.cols.len().saturating_sub(1) {
        let (left, right) = (&ext.cols[r], &ext.cols[r + 1]);
        let orig = &d.columns()[r + 1];
        let mut next_end = 0;
        for (a, cell) in left.iter().enumerate() {
            match right.iter().position(|c| c.entry == cell.entry) {
                Some(b) => out.push(DecoratedLine {
                    i: cell.entry,
                    j: cell.entry,
                    label: Label::Neutral,
                    from: (r, a + 1),
                    to: (r + 1, b + 1),
                }),
                None => {
                    // Stopped: One line to the highest unused original entry.
                    if next_end < orig.len() {
                        out.push(DecoratedLine {
                            i: cell.entry,
                            j: orig[next_end],
                            label: Label::One,
                            from: (r, a + 1),
                            to: (r + 1, next_end + 1),
                        });
                        next_end += 1;
                    }
                }
            }
        }
        for (b, cell) in right.iter().enumerate() {
            if let Origin::Lowered(mi) = cell.origin {
                for &j in &ext.moves[mi].targets {
                    out.push(DecoratedLine {
                        i: cell.entry,
                        j,
                        label: Label::Star,
                        from: (r + 1, b + 1),
                        to: (r + 1, d.row_of(j)),
                    });
                }
            }
        }
    }
    out
}

/// A generator `(i, j)`: entry `i` with the partial column it was lowered beside.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub i: usize,
    #[serde(rename = "jList")]
    pub j: Vec<usize>,
}

/// Collapsed tableau with its One (`e`) and Star (`V`) supports.
#[derive(Clone, Debug)]
pub struct ComponentTableau {
    pub diagram: Diagram,
    pub ext: ExtendedTableau,
    pub decorated: Vec<DecoratedLine>,
    pub ones: BTreeSet<Pos>,
    pub stars: BTreeSet<Pos>,
}

impl ComponentTableau {
    /// Collapse: every One/Star line re-anchored at the boxes of `T`.
    pub fn collapse(d: &Diagram, ext: ExtendedTableau, decorated: Vec<DecoratedLine>) -> Self {
        let mut ones = BTreeSet::new();
        let mut stars = BTreeSet::new();
        for l in &decorated {
            match l.label {
                Label::One => {
                    ones.insert((l.i, l.j));
                }
                Label::Star => {
                    stars.insert((l.i, l.j));
                }
                Label::Neutral => {}
            }
        }
        ComponentTableau { diagram: d.clone(), ext, decorated, ones, stars }
    }

    /// Labelled positions `((i, j), label)` on `T`, sorted.
    pub fn lines(&self) -> Vec<(Pos, Label)> {
        let mut v: Vec<_> = self.ones.iter().map(|&p| (p, Label::One)).collect();
        v.extend(self.stars.iter().map(|&p| (p, Label::Star)));
        v.sort();
        v
    }

    pub fn moves(&self) -> &[Move] {
        self.ext.moves()
    }

    pub fn generators(&self) -> Vec<Generator> {
        self.ext.moves().iter().map(|m| Generator { i: m.entry, j: m.targets.clone() }).collect()
    }

    /// The entry chosen for each pair, by pair index.
    pub fn choice_of_pair(&self) -> BTreeMap<usize, usize> {
        self.ext.move_of_pair().into_iter().map(|(p, mi)| (p, self.ext.moves()[mi].entry)).collect()
    }

    pub fn choice_sequence(&self) -> Vec<ChoiceJson> {
        let pairs = self.diagram.pairs();
        let mut v = Vec::new();
        for m in self.ext.moves() {
            for &pi in &m.pairs {
                v.push(ChoiceJson {
                    t: m.stage,
                    pair_left: pairs[pi].left + 1,
                    pair_right: pairs[pi].right + 1,
                    entry: m.entry,
                    rows_down: m.rows_down(),
                });
            }
        }
        v.sort_by_key(|c| (c.t, c.pair_left, c.pair_right));
        v
    }

    pub fn to_json(&self) -> ComponentTableauJson {
        ComponentTableauJson {
            composition: self.diagram.composition().parts().to_vec(),
            choice_sequence: self.choice_sequence(),
            lines: self
                .lines()
                .into_iter()
                .map(|((i, j), label)| LineJson { i, j, label })
                .collect(),
        }
    }
}

/// All component tableaux of a diagram, in the order of [`extend_all`].
pub fn component_tableaux(d: &Diagram) -> Vec<ComponentTableau> {
    extend_all(d)
        .into_iter()
        .map(|ext| {
            let lines = decorate(d, &ext);
            ComponentTableau::collapse(d, ext, lines)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ChoiceJson {
    pub t: usize,
    pub pair_left: usize,
    pub pair_right: usize,
    pub entry: usize,
    pub rows_down: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineJson {
    pub i: usize,
    pub j: usize,
    pub label: Label,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentTableauJson {
    pub composition: Vec<usize>,
    pub choice_sequence: Vec<ChoiceJson>,
    pub lines: Vec<LineJson>,
}


#[cfg(test)]
mod counts {
    use super::*;
    #[test]
    fn fixture_counts() {
        for (s, c) in [("1,2,1,2", 2), ("2,1,1,2,1", 3), ("2,1,1,1,2", 3), ("2,1,2,1,2,1", 5), ("3,2,1,1,1,2,3", 6), ("2,1,1,2", 2), ("3,2,1", 1)] {
            let d = Diagram::new(&s.parse().unwrap());
            assert_eq!(extend_all(&d).len(), c, "{s}");
        }
    }
}
