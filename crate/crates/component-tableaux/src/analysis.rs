//! Covering, tangent-space dimension, orbit dimensions and injectivity witnesses.
//!
//! `dim(𝔲 + [𝔫, e])` is computed modulo `𝔲`: since `𝔲` is spanned by
//! coordinate vectors, the rank equals `|𝔲|` plus the rank of `[𝔫, e]`
//! projected onto the excluded coordinates.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::builder::ComponentTableau;
use crate::diagram::{Diagram, Pos};
use crate::invariants::{self, Generators};
use crate::linalg;
use crate::roots::{ExcludedRootSet, PenetrationRecord};
use crate::Error;

/// Label partition of `𝔪`: One (`S`), Star (`Y`), excluded (`X`), and `Z = X \ Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelPartition {
    pub s: BTreeSet<Pos>,
    pub y: BTreeSet<Pos>,
    pub x: BTreeSet<Pos>,
    pub z: BTreeSet<Pos>,
    pub u: BTreeSet<Pos>,
}

impl LabelPartition {
    pub fn new(ct: &ComponentTableau, roots: &ExcludedRootSet) -> Self {
        let x = roots.union.clone();
        let y = ct.stars.clone();
        LabelPartition {
            s: ct.ones.clone(),
            z: x.difference(&y).copied().collect(),
            u: roots.u_support(&ct.diagram),
            y,
            x,
        }
    }

    /// Star ⊆ X and One ∩ X = ∅.
    pub fn labels_sane(&self) -> bool {
        self.y.is_subset(&self.x) && self.s.is_disjoint(&self.x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CoveringReport {
    pub ok: bool,
    /// Every row of `Z` holds exactly one One position.
    pub unique: bool,
    pub uncovered: Vec<Pos>,
}

/// Every `(k, l) ∈ Z` needs a One position `(k, j)` with `j < l`.
pub fn covering_check(p: &LabelPartition) -> CoveringReport {
    let mut uncovered = Vec::new();
    let mut unique = true;
    for &(k, l) in &p.z {
        let row: Vec<usize> = p.s.iter().filter(|s| s.0 == k).map(|s| s.1).collect();
        if row.len() != 1 {
            unique = false;
        }
        if !row.iter().any(|&j| j < l) {
            uncovered.push((k, l));
        }
    }
    CoveringReport { ok: uncovered.is_empty(), unique, uncovered }
}

/// `[E_{a,b}, e]` for every `a < b`, as maps position → coefficient.
pub fn brackets_with(n: usize, s: &BTreeSet<Pos>) -> Vec<BTreeMap<Pos, i64>> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            let mut v: BTreeMap<Pos, i64> = BTreeMap::new();
            for &(i, j) in s {
                if i == b {
                    *v.entry((a, j)).or_default() += 1;
                }
                if j == a {
                    *v.entry((i, b)).or_default() -= 1;
                }
            }
            v.retain(|_, c| *c != 0);
            out.push(v);
        }
    }
    out
}

fn rank_on(vectors: &[BTreeMap<Pos, i64>], coords: &[Pos]) -> usize {
    let idx: HashMap<Pos, usize> = coords.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let rows: Vec<Vec<i64>> = vectors
        .iter()
        .map(|v| {
            let mut r = vec![0; coords.len()];
            for (p, &c) in v {
                if let Some(&k) = idx.get(p) {
                    r[k] = c;
                }
            }
            r
        })
        .filter(|r| r.iter().any(|&x| x != 0))
        .collect();
    linalg::rank(&rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DimensionReport {
    pub dim_m: usize,
    pub g: usize,
    pub dim_u_plus_ne: usize,
    /// `dim(𝔲 + [𝔫, e]) = dim 𝔪 − g`.
    pub rank_ok: bool,
    /// `[𝔫, e] ∩ Y = 0`.
    pub ne_meets_y_trivially: bool,
    /// `(𝔲 + [𝔫, e]) ⊕ Y = 𝔪`.
    pub direct_sum_ok: bool,
    pub jordan_type_of_e: Vec<usize>,
    pub orbit_dimension_of_e: usize,
}

impl DimensionReport {
    pub fn ok(&self) -> bool {
        self.rank_ok && self.ne_meets_y_trivially && self.direct_sum_ok
    }
}

pub fn tangent_dimension(d: &Diagram, p: &LabelPartition) -> Result<DimensionReport, Error> {
    let n = d.n();
    let m = d.m_positions();
    let g = d.pairs().len();
    let ne: Vec<BTreeMap<Pos, i64>> = brackets_with(n, &p.s)
        .into_iter()
        .map(|mut v| {
            v.retain(|q, _| d.in_m(*q));
            v
        })
        .collect();
    let x: Vec<Pos> = p.x.iter().copied().collect();
    let z: Vec<Pos> = p.z.iter().copied().collect();
    let not_y: Vec<Pos> = m.iter().copied().filter(|q| !p.y.contains(q)).collect();

    let dim_u_plus_ne = p.u.len() + rank_on(&ne, &x);
    let ne_rank = rank_on(&ne, &m);
    let ne_meets_y_trivially = rank_on(&ne, &not_y) == ne_rank;
    let with_y = p.u.len() + p.y.len() + rank_on(&ne, &z);
    let direct_sum_ok = with_y == m.len() && dim_u_plus_ne + p.y.len() == m.len();

    let e = support_matrix(n, p.s.iter().map(|&q| (q, BigInt::one())));
    let jordan = linalg::jordan_type(&e)?;
    Ok(DimensionReport {
        dim_m: m.len(),
        g,
        dim_u_plus_ne,
        rank_ok: dim_u_plus_ne + g == m.len(),
        ne_meets_y_trivially,
        direct_sum_ok,
        orbit_dimension_of_e: linalg::orbit_dimension(&jordan),
        jordan_type_of_e: jordan,
    })
}

/// `n × n` matrix with the given entries at 1-based positions.
pub fn support_matrix(n: usize, entries: impl IntoIterator<Item = (Pos, BigInt)>) -> Vec<Vec<BigInt>> {
    let mut a = vec![vec![BigInt::zero(); n]; n];
    for ((i, j), c) in entries {
        a[i - 1][j - 1] = c;
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitalStatus {
    Closure,
    NotClosure,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OrbitalReport {
    pub status: OrbitalStatus,
    /// Largest sampled orbit dimension, taken as that of `G.𝔲`.
    pub generic_orbit_dimension: usize,
    pub sample_dimensions: Vec<usize>,
    /// `2 (dim 𝔪 − g)`.
    pub twice_component_dimension: usize,
    /// The excluded positions span a subalgebra (sufficient for a closure).
    pub excluded_bracket_closed: bool,
    pub heuristic: String,
}

pub const ORBITAL_SAMPLES: usize = 5;
pub const ORBITAL_QUORUM: usize = 3;

/// Compares `dim B.𝔲 = dim 𝔪 − g` with half of a sampled generic `dim G.𝔲`.
pub fn orbital_variety_test<R: Rng>(d: &Diagram, p: &LabelPartition, rng: &mut R) -> Result<OrbitalReport, Error> {
    let n = d.n();
    let mut dims = Vec::with_capacity(ORBITAL_SAMPLES);
    for _ in 0..ORBITAL_SAMPLES {
        let a = support_matrix(n, p.u.iter().map(|&q| (q, BigInt::from(rng.gen_range(1u32..1 << 31)))));
        dims.push(linalg::orbit_dimension(&linalg::jordan_type(&a)?));
    }
    let max = dims.iter().copied().max().unwrap_or(0);
    let twice = 2 * (d.dim_m() - d.pairs().len());
    let status = if dims.iter().filter(|&&x| x == max).count() < ORBITAL_QUORUM {
        OrbitalStatus::Inconclusive
    } else if max == twice {
        OrbitalStatus::Closure
    } else {
        OrbitalStatus::NotClosure
    };
    Ok(OrbitalReport {
        status,
        generic_orbit_dimension: max,
        sample_dimensions: dims,
        twice_component_dimension: twice,
        excluded_bracket_closed: bracket_closed(&p.x),
        heuristic: "generic element approximated by random integer samples".into(),
    })
}

/// Whether `(i, j), (j, k) ∈ set` always gives `(i, k) ∈ set`.
pub fn bracket_closed(set: &BTreeSet<Pos>) -> bool {
    set.iter().all(|&(i, j)| set.iter().filter(|q| q.0 == j).all(|&(_, k)| set.contains(&(i, k))))
}

/// Whether the support is closed under brackets landing in `𝔪` (Levi results ignored).
pub fn bracket_closed_mod_levi(d: &Diagram, set: &BTreeSet<Pos>) -> bool {
    set.iter().all(|&(i, j)| {
        set.iter().filter(|q| q.0 == j).all(|&(_, k)| !d.in_m((i, k)) || set.contains(&(i, k)))
    })
}

/// Stability under the lowering operators of the Levi: for a simple root
/// `(a, a+1)` inside a Levi block, `x_{-α}` sends `x_{a,l}` to `x_{a+1,l}`
/// and `x_{k,a+1}` to `x_{k,a}`.
pub fn levi_lowering_stable(d: &Diagram, set: &BTreeSet<Pos>) -> bool {
    let n = d.n();
    (1..n).filter(|&a| d.in_levi((a, a + 1))).all(|a| {
        set.iter().all(|&(i, j)| {
            let ok_row = i != a || !d.in_m((a + 1, j)) || set.contains(&(a + 1, j));
            let ok_col = j != a + 1 || !d.in_m((i, a)) || set.contains(&(i, a));
            ok_row && ok_col
        })
    })
}

/// Per-tableau facts an injectivity witness needs.
pub struct TableauFacts<'a> {
    pub ct: &'a ComponentTableau,
    pub records: &'a [PenetrationRecord],
    /// The Star variable each generator restricts to, by pair index.
    pub restriction: &'a [Option<(i8, Pos)>],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InjectivityWitness {
    /// Pair `(left, right, height)`, columns 1-based.
    pub pair: [usize; 3],
    /// Index (in the order given) of the tableau playing `𝒞`.
    pub c_index: usize,
    /// Entry chosen for the pair by `𝒞`.
    pub i: usize,
    /// Entry chosen for the pair by `𝒞'`.
    pub i_prime: usize,
    /// Starred in `𝒞`, labelled `1` in `𝒞'`.
    pub ell: Option<Pos>,
    /// Labelled `1` in `𝒞`, starred in `𝒞'`.
    pub ell_prime: Option<Pos>,
    pub labels_exchanged: bool,
    /// `ℓ'` ends in a column strictly right of the end of `ℓ`.
    pub rightmost: bool,
    pub quadrant_clear: bool,
    pub specific_vanishing: bool,
    pub nonvanishing: bool,
}

impl InjectivityWitness {
    pub fn ok(&self) -> bool {
        self.labels_exchanged
            && self.rightmost
            && self.quadrant_clear
            && self.specific_vanishing
            && self.nonvanishing
    }
}

fn oriented_witness<R: Rng>(
    d: &Diagram,
    (c, cp): (&TableauFacts, &TableauFacts),
    c_index: usize,
    pi: usize,
    gens: &Generators,
    rng: &mut R,
) -> Result<InjectivityWitness, Error> {
    let pair = d.pairs()[pi];
    let ell = c.restriction[pi].map(|v| v.1);
    let ell_prime = cp.restriction[pi].map(|v| v.1);
    let labels_exchanged = match (ell, ell_prime) {
        (Some(l), Some(lp)) => {
            c.ct.stars.contains(&l) && cp.ct.ones.contains(&l) && cp.ct.stars.contains(&lp) && c.ct.ones.contains(&lp)
        }
        _ => false,
    };
    let rightmost = match (ell, ell_prime) {
        (Some((_, j)), Some((_, jp))) => d.col_of(jp) > d.col_of(j),
        _ => false,
    };
    let rec = &c.records[pi];
    let quadrant_clear = match ell_prime {
        Some((ip, jp)) => !rec.excluded.iter().any(|&(k, l)| k <= ip && l >= jp && (k, l) != (ip, jp)),
        None => false,
    };
    let specific_vanishing = gens.vanishes(d, pi, &rec.excluded, rng)?;
    let nonvanishing = match ell_prime {
        Some(lp) => {
            let asg: HashMap<Pos, BigInt> = invariants::pair_variables(d, &pair)
                .into_iter()
                .map(|v| (v, if v == lp || cp.ct.ones.contains(&v) { BigInt::one() } else { BigInt::zero() }))
                .collect();
            !gens.value_at(d, pi, &asg)?.is_zero()
        }
        None => false,
    };
    Ok(InjectivityWitness {
        pair: [pair.left + 1, pair.right + 1, pair.height],
        c_index,
        i: c.ct.choice_of_pair()[&pi],
        i_prime: cp.ct.choice_of_pair()[&pi],
        ell,
        ell_prime,
        labels_exchanged,
        rightmost,
        quadrant_clear,
        specific_vanishing,
        nonvanishing,
    })
}

/// Separates two distinct tableaux of the same diagram.
///
/// The first pair (lowest height, then leftmost) on which the choices differ
/// is used. The tableau playing `𝒞` is the one in which the rightmost of the
/// two exchanged lines is labelled `1`; which of the two entries is larger
/// does not decide it.
pub fn injectivity_witness<R: Rng>(
    d: &Diagram,
    a: &TableauFacts,
    b: &TableauFacts,
    gens: &Generators,
    rng: &mut R,
) -> Result<InjectivityWitness, Error> {
    let ca = a.ct.choice_of_pair();
    let cb = b.ct.choice_of_pair();
    let pi = (0..d.pairs().len())
        .find(|p| ca.get(p) != cb.get(p))
        .ok_or_else(|| Error::InvalidInput("tableaux make identical choices".into()))?;
    let w = oriented_witness(d, (a, b), 0, pi, gens, rng)?;
    if w.rightmost {
        return Ok(w);
    }
    let v = oriented_witness(d, (b, a), 1, pi, gens, rng)?;
    Ok(if v.rightmost { v } else { w })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets_of_a_single_one() {
        // e = E_{1,2} in gl(3): [E_{a,b}, e] nonzero only for (a,b) = (2,3).
        let v = brackets_with(3, &BTreeSet::from([(1, 2)]));
        let nonzero: Vec<_> = v.iter().filter(|m| !m.is_empty()).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0], &BTreeMap::from([((1, 3), -1)]));
    }

    #[test]
    fn closure_tests() {
        assert!(bracket_closed(&BTreeSet::from([(1, 2), (2, 3), (1, 3)])));
        assert!(!bracket_closed(&BTreeSet::from([(1, 2), (2, 3)])));
    }
}
