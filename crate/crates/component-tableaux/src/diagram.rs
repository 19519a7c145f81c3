//! Compositions, their column diagrams, and the matrix model of the nilradical.
//!
//! Conventions used throughout the crate: entries are `1..=n`, rows are
//! 1-based (row 1 is the top row), column indices are 0-based internally and
//! printed as `C1, C2, …`. A matrix position `(i, j)` always has `i < j`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// A matrix position `(i, j)`, `i < j`, identified with the root vector `x_{i,j}`.
pub type Pos = (usize, usize);

/// An ordered sequence of positive column heights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("empty composition".into()));
        }
        if parts.iter().any(|&c| c == 0) {
            return Err(Error::InvalidInput(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Weakly decreasing compositions.
    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// All `2^(n-1)` compositions of `n`, in lexicographic order of parts.
    pub fn all_of(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for c in 1..=rest {
                cur.push(c);
                rec(rest - c, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self, Error> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Vec<usize> {
        c.0
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad composition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Two columns of equal height `s` with no column of height `s` strictly between.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NeighbouringPair {
    /// 0-based left column.
    pub left: usize,
    /// 0-based right column.
    pub right: usize,
    pub height: usize,
}

impl NeighbouringPair {
    /// Whether the adjacent columns `(r, r+1)` lie inside `[left, right]`.
    pub fn surrounds(&self, r: usize) -> bool {
        self.left <= r && r < self.right
    }
}

impl fmt::Display for NeighbouringPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(C{},C{};{})", self.left + 1, self.right + 1, self.height)
    }
}

/// The tableau of a composition: columns filled `1..=n` top to bottom, left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    comp: Composition,
    columns: Vec<Vec<usize>>,
    col_of: Vec<usize>,
    row_of: Vec<usize>,
    pairs: Vec<NeighbouringPair>,
}

impl Diagram {
    pub fn new(comp: &Composition) -> Diagram {
        let n = comp.n();
        let mut columns = Vec::with_capacity(comp.parts().len());
        let mut col_of = vec![usize::MAX; n + 1];
        let mut row_of = vec![0; n + 1];
        let mut next = 1;
        for (c, &h) in comp.parts().iter().enumerate() {
            let col: Vec<usize> = (next..next + h).collect();
            for (r, &e) in col.iter().enumerate() {
                col_of[e] = c;
                row_of[e] = r + 1;
            }
            next += h;
            columns.push(col);
        }
        let pairs = neighbouring_pairs(comp.parts());
        Diagram { comp: comp.clone(), columns, col_of, row_of, pairs }
    }

    pub fn composition(&self) -> &Composition {
        &self.comp
    }

    pub fn n(&self) -> usize {
        self.comp.n()
    }

    /// Number of columns.
    pub fn k(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn height(&self, c: usize) -> usize {
        self.columns[c].len()
    }

    pub fn max_height(&self) -> usize {
        self.comp.parts().iter().copied().max().unwrap_or(0)
    }

    /// Entry in column `c` (0-based), row `row` (1-based).
    pub fn entry(&self, c: usize, row: usize) -> Option<usize> {
        self.columns.get(c)?.get(row.checked_sub(1)?).copied()
    }

    pub fn col_of(&self, i: usize) -> usize {
        self.col_of[i]
    }

    pub fn row_of(&self, i: usize) -> usize {
        self.row_of[i]
    }

    /// `(i, j)` lies in the nilradical: `i` in a column strictly left of `j`.
    pub fn in_m(&self, (i, j): Pos) -> bool {
        i < j && j <= self.n() && self.col_of[i] < self.col_of[j]
    }

    /// `(i, j)` lies in the Levi factor.
    pub fn in_levi(&self, (i, j): Pos) -> bool {
        i != j && self.col_of[i] == self.col_of[j]
    }

    /// All positions of the nilradical in lexicographic order.
    pub fn m_positions(&self) -> Vec<Pos> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.in_m((i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn dim_m(&self) -> usize {
        let p = self.comp.parts();
        let mut d = 0;
        for a in 0..p.len() {
            for b in a + 1..p.len() {
                d += p[a] * p[b];
            }
        }
        d
    }

    /// Dimension of the full strictly upper triangular algebra.
    pub fn dim_n(&self) -> usize {
        let n = self.n();
        n * (n - 1) / 2
    }

    pub fn pairs(&self) -> &[NeighbouringPair] {
        &self.pairs
    }

    /// Index of `pair` in [`Diagram::pairs`].
    pub fn pair_index(&self, pair: &NeighbouringPair) -> Option<usize> {
        self.pairs.iter().position(|p| p == pair)
    }

    /// Number of boxes strictly below row `s` between the pair's columns.
    pub fn d_d(&self, pair: &NeighbouringPair) -> usize {
        (pair.left..=pair.right)
            .map(|c| self.height(c).saturating_sub(pair.height))
            .sum()
    }

    /// Degree of the semi-invariant attached to `pair`.
    pub fn true_degree(&self, pair: &NeighbouringPair) -> usize {
        let s = pair.height;
        (pair.left..=pair.right).map(|c| self.height(c).min(s)).sum::<usize>() - s
    }

    /// Number of boxes in the columns `[left, right]`.
    pub fn boxes_between(&self, pair: &NeighbouringPair) -> usize {
        (pair.left..=pair.right).map(|c| self.height(c)).sum()
    }

    /// Entries of the rectangle: rows `1..=s`, columns `[left, right]`.
    pub fn rectangle(&self, pair: &NeighbouringPair) -> BTreeSet<usize> {
        (pair.left..=pair.right)
            .flat_map(|c| self.columns[c].iter().take(pair.height).copied())
            .collect()
    }

    /// Entries lying in the columns `[left, right]`.
    pub fn entries_between(&self, left: usize, right: usize) -> std::ops::RangeInclusive<usize> {
        let first = self.columns[left][0];
        let last = *self.columns[right].last().unwrap();
        first..=last
    }
}

fn neighbouring_pairs(parts: &[usize]) -> Vec<NeighbouringPair> {
    let mut out = Vec::new();
    let max = parts.iter().copied().max().unwrap_or(0);
    for s in 1..=max {
        let cols: Vec<usize> = (0..parts.len()).filter(|&c| parts[c] == s).collect();
        for w in cols.windows(2) {
            out.push(NeighbouringPair { left: w[0], right: w[1], height: s });
        }
    }
    out.sort_by_key(|p| (p.height, p.left));
    out
}

/// JSON shape `{parts, n, columns}`.
#[derive(Clone, Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct DiagramJson {
    pub parts: Vec<usize>,
    pub n: usize,
    pub columns: Vec<Vec<usize>>,
}

impl From<&Diagram> for DiagramJson {
    fn from(d: &Diagram) -> Self {
        DiagramJson { parts: d.comp.parts().to_vec(), n: d.n(), columns: d.columns.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Diagram {
        Diagram::new(&s.parse().unwrap())
    }

    #[test]
    fn filling_and_pairs() {
        let t = d("2,1,1,2");
        assert_eq!(t.columns(), &[vec![1, 2], vec![3], vec![4], vec![5, 6]]);
        let p: Vec<_> = t.pairs().iter().map(|p| (p.left, p.right, p.height)).collect();
        assert_eq!(p, vec![(1, 2, 1), (0, 3, 2)]);
        assert!(d("3,2,1").pairs().is_empty());
        assert_eq!(d("1,2,1").pairs()[0], NeighbouringPair { left: 0, right: 2, height: 1 });
    }

    #[test]
    fn degrees() {
        let t = d("1,2,1");
        let p = t.pairs()[0];
        assert_eq!((t.d_d(&p), t.true_degree(&p)), (1, 2));
        let t = d("2,2");
        let p = t.pairs()[0];
        assert_eq!((t.d_d(&p), t.true_degree(&p)), (0, 2));
        let t = d("2,1,1,2");
        assert_eq!(t.true_degree(&t.pairs()[0]), 1);
        assert_eq!(t.d_d(&t.pairs()[1]), 0);
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<Composition>().is_err());
        assert!("2,0".parse::<Composition>().is_err());
        assert!("2,x".parse::<Composition>().is_err());
        assert_eq!(Composition::all_of(4).len(), 8);
    }

    #[test]
    fn single_column_is_trivial() {
        let t = d("1");
        assert_eq!(t.dim_m(), 0);
        assert!(t.m_positions().is_empty());
        assert!(t.pairs().is_empty());
    }
}
