//! Independent oracles for derived values: everything here is recomputed from
//! first principles in the test rather than through the library's engines.

use std::collections::{BTreeMap, BTreeSet};

use component_tableaux::analysis::{self, LabelPartition};
use component_tableaux::invariants::{self, IdMode};
use component_tableaux::poly::Monomial;
use component_tableaux::roots::{self, shifted_tableau, word_form};
use component_tableaux::{component_tableaux, Composition, Diagram, NeighbouringPair, SparsePolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn diagram(s: &str) -> Diagram {
    Diagram::new(&s.parse::<Composition>().unwrap())
}

fn pair(left: usize, right: usize, height: usize) -> NeighbouringPair {
    NeighbouringPair { left, right, height }
}

/// Column (0-based) of each entry 1..=n, filled column by column.
fn column_of(parts: &[usize]) -> Vec<usize> {
    let mut col = vec![usize::MAX];
    for (c, &p) in parts.iter().enumerate() {
        col.extend(std::iter::repeat(c).take(p));
    }
    col
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], sign: i32, out: &mut Vec<(Vec<usize>, i32)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), sign));
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            // Inversions added by placing v after the current prefix.
            let inv = prefix.iter().filter(|&&p| p > v).count();
            used[v] = true;
            prefix.push(v);
            rec(prefix, used, if inv % 2 == 0 { sign } else { -sign }, out);
            prefix.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], 1, &mut out);
    out
}

/// Lower-left `(n'-s)` minor of `a·Id_{>s} + Σ x_{i,j} E_{j,i}` on the
/// columns `left..=right`, by the Leibniz formula, in the full numbering.
fn leibniz_minor(parts: &[usize], left: usize, right: usize, s: usize, full_id: bool) -> SparsePolynomial {
    let sub = &parts[left..=right];
    let col = column_of(sub);
    let off: usize = parts[..left].iter().sum();
    let n: usize = sub.iter().sum();
    let size = n - s;
    let cell = |r: usize, c: usize| -> Option<(Option<(usize, usize)>, u32)> {
        // Row r, column c, both 1-based in the sub-diagram.
        if r == c {
            let block = sub[col[r]];
            (full_id || block > s).then_some((None, 1))
        } else if c < r && col[c] != col[r] {
            Some((Some((c + off, r + off)), 0))
        } else {
            None
        }
    };
    let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    for (perm, sign) in permutations(size) {
        let mut vars = Vec::new();
        let mut a_pow = 0;
        let mut alive = true;
        for (p, &q) in perm.iter().enumerate() {
            match cell(p + 1 + s, q + 1) {
                Some((v, a)) => {
                    vars.extend(v);
                    a_pow += a;
                }
                None => {
                    alive = false;
                    break;
                }
            }
        }
        if alive {
            vars.sort_unstable();
            *acc.entry(Monomial { vars, a_pow }).or_insert_with(BigInt::zero) += sign;
        }
    }
    SparsePolynomial::from_terms(acc)
}

/// `max(c - s, 0)` summed over the columns of the pair.
fn hand_d_d(parts: &[usize], left: usize, right: usize, s: usize) -> usize {
    parts[left..=right].iter().map(|&c| c.saturating_sub(s)).sum()
}

#[test]
fn leibniz_agrees_with_the_symbolic_engine() {
    let mut checked = 0;
    for n in 2..=7 {
        for comp in Composition::all_of(n) {
            let d = Diagram::new(&comp);
            for p in d.pairs() {
                let raw = leibniz_minor(comp.parts(), p.left, p.right, p.height, false);
                let dd = hand_d_d(comp.parts(), p.left, p.right, p.height);
                assert_eq!(raw.min_a_pow(), Some(dd as u32), "{comp} {p}");
                assert_eq!(d.d_d(p), dd, "{comp} {p}");
                let want = raw.a_coefficient(dd as u32).normalize_sign();
                let got = invariants::invariant(&d, p).unwrap().poly;
                assert_eq!(got, want, "{comp} {p}");
                // The full identity gives the same generator.
                let full = leibniz_minor(comp.parts(), p.left, p.right, p.height, true);
                let fdd = full.min_a_pow().unwrap();
                assert_eq!(full.a_coefficient(fdd).normalize_sign(), want, "{comp} {p} full Id");
                checked += 1;
            }
        }
    }
    // Guard against the loop silently covering nothing.
    assert_eq!(checked, 186);
}

#[test]
fn full_identity_mode_matches_for_n_up_to_eight() {
    for n in 2..=8 {
        for comp in Composition::all_of(n) {
            let d = Diagram::new(&comp);
            for p in d.pairs() {
                let a = invariants::invariant_with(&d, p, IdMode::AboveS).unwrap();
                let b = invariants::invariant_with(&d, p, IdMode::Full);
                // Full Id raises the a-valuation; extract at its own minimum.
                let raw = invariants::minor(&d, p, IdMode::Full, None);
                let k = raw.min_a_pow().unwrap();
                assert_eq!(raw.a_coefficient(k).normalize_sign(), a.poly, "{comp} {p}");
                if let Ok(b) = b {
                    assert_eq!(b.poly, a.poly);
                }
            }
        }
    }
}

#[test]
fn one_two_one_minor_by_hand() {
    // Rows 2..4, columns 1..3 of a·Id_{>1} + Σ x_{ij} E_{ji} with blocks {1},{2,3},{4}.
    let d = diagram("1,2,1");
    let p = d.pairs()[0];
    let raw = invariants::symbolic_minor(&d, &p);
    assert_eq!(raw.to_string(), "-a*x1,2*x2,4 - a*x1,3*x3,4 + a^2*x1,4");
    let inv = invariants::invariant(&d, &p).unwrap().poly;
    assert_eq!(inv.to_string(), "x1,2*x2,4 + x1,3*x3,4");
    let x14 = raw.a_coefficient(2);
    assert_eq!(x14.as_signed_variable().map(|v| v.1), Some((1, 4)));
}

#[test]
fn two_two_is_a_two_by_two_determinant() {
    let d = diagram("2,2");
    let inv = invariants::invariant(&d, &d.pairs()[0]).unwrap();
    assert_eq!(inv.d_d, 0);
    assert_eq!(inv.true_degree, 2);
    let mut want = SparsePolynomial::zero();
    want.add_term(Monomial { vars: vec![(1, 3), (2, 4)], a_pow: 0 }, BigInt::one());
    want.add_term(Monomial { vars: vec![(1, 4), (2, 3)], a_pow: 0 }, -BigInt::one());
    assert_eq!(inv.poly, want);
    let chains: BTreeSet<Vec<(usize, usize)>> =
        [vec![(1, 3), (2, 4)], vec![(1, 4), (2, 3)]].into_iter().collect();
    assert_eq!(invariants::chain_support(&d, &d.pairs()[0]), chains);
}

#[test]
fn two_one_one_two_by_hand() {
    let d = diagram("2,1,1,2");
    assert_eq!(d.columns(), &[vec![1, 2], vec![3], vec![4], vec![5, 6]]);
    assert_eq!(d.pairs(), &[pair(1, 2, 1), pair(0, 3, 2)]);
    assert_eq!(d.d_d(&pair(0, 3, 2)), 0);
    assert_eq!(d.true_degree(&pair(1, 2, 1)), 1);
    let lin = invariants::invariant(&d, &pair(1, 2, 1)).unwrap().poly;
    assert_eq!(lin.to_string(), "x3,4");
    assert_eq!(d.true_degree(&pair(0, 3, 2)), 4);
    assert_eq!(diagram("2,2").true_degree(&pair(0, 1, 2)), 2);
    // true degree + d_D + s = boxes of [C, C'].
    for n in 1..=8 {
        for comp in Composition::all_of(n) {
            let d = Diagram::new(&comp);
            for p in d.pairs() {
                let boxes: usize = comp.parts()[p.left..=p.right].iter().sum();
                assert_eq!(d.true_degree(p) + d.d_d(p) + p.height, boxes);
            }
        }
    }
}

#[test]
fn dim_m_is_sum_of_products() {
    for n in 1..=8 {
        for comp in Composition::all_of(n) {
            let d = Diagram::new(&comp);
            let p = comp.parts();
            let mut want = 0;
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    want += p[i] * p[j];
                }
            }
            assert_eq!(d.dim_m(), want);
            assert_eq!(d.m_positions().len(), want);
        }
    }
}

#[test]
fn word_forms_read_bottom_to_top_left_to_right() {
    let d = diagram("2,1,1,2");
    let gen = |i, j: Vec<usize>| component_tableaux::builder::Generator { i, j };
    let w = word_form(&shifted_tableau(&d, &gen(3, vec![4])).unwrap().columns).unwrap();
    assert_eq!(w, vec![2, 1, 4, 3, 6, 5]);
    let w = word_form(&shifted_tableau(&d, &gen(3, vec![6])).unwrap().columns).unwrap();
    assert_eq!(w, vec![2, 1, 6, 3, 4, 5]);
    // (a, b) is excluded exactly when a is read after b.
    let x = roots::excluded_from_word(&[2, 1, 6, 3, 4, 5], &d);
    let by_hand: BTreeSet<_> = [(3, 6), (4, 6)].into_iter().collect();
    assert_eq!(x, by_hand);
}

#[test]
fn canonical_two_one_one_two_excludes_three_roots_and_kills_both_generators() {
    let d = diagram("2,1,1,2");
    let ct = &component_tableaux(&d)[0];
    let x = roots::excluded_roots(ct).unwrap();
    let want: BTreeSet<_> = [(3, 4), (3, 6), (4, 6)].into_iter().collect();
    assert_eq!(x.union, want);
    for p in d.pairs() {
        let inv = invariants::invariant(&d, p).unwrap().poly;
        assert!(inv.set_zero(&want).is_zero());
    }
    // The linear generator restricted to e + V is one starred coordinate.
    let labels = LabelPartition::new(ct, &x);
    assert_eq!(labels.z, [(4, 6)].into_iter().collect());
    assert!(ct.ones.iter().any(|&(i, j)| i == 4 && j < 6));
}

/// Rank over the rationals by plain Gaussian elimination.
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in 0..ncols {
                    let v = &m[rank][k] * &f;
                    m[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim(𝔲 + [𝔫, e])` from the definition: span of `𝔲` and `[E_{ab}, e]` for `a < b`.
fn tangent_rank(d: &Diagram, u: &BTreeSet<(usize, usize)>, ones: &BTreeSet<(usize, usize)>) -> usize {
    let n = d.n();
    let pos = d.m_positions();
    let idx: BTreeMap<(usize, usize), usize> = pos.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut rows = Vec::new();
    for p in u {
        let mut r = vec![0i64; pos.len()];
        r[idx[p]] = 1;
        rows.push(r);
    }
    for a in 1..=n {
        for b in a + 1..=n {
            // [E_ab, e] = Σ_{(b,c) ∈ e} E_ac − Σ_{(c,a) ∈ e} E_cb, projected to 𝔪.
            let mut r = vec![0i64; pos.len()];
            for &(i, j) in ones {
                if i == b {
                    if let Some(&k) = idx.get(&(a, j)) {
                        r[k] += 1;
                    }
                }
                if j == a {
                    if let Some(&k) = idx.get(&(i, b)) {
                        r[k] -= 1;
                    }
                }
            }
            rows.push(r);
        }
    }
    rational_rank(&rows)
}

#[test]
fn tangent_dimension_by_elimination() {
    for (comp, g) in [("2,1,1,2", 2), ("2,1,1,1,2", 3), ("1,2,1,2", 2), ("2,1,2,1,2,1", 4)] {
        let d = diagram(comp);
        assert_eq!(d.pairs().len(), g);
        for ct in component_tableaux(&d) {
            let x = roots::excluded_roots(&ct).unwrap();
            let u = x.u_support(&d);
            let rank = tangent_rank(&d, &u, &ct.ones);
            assert_eq!(rank, d.dim_m() - g, "{comp}");
            let labels = LabelPartition::new(&ct, &x);
            let rep = analysis::tangent_dimension(&d, &labels).unwrap();
            assert_eq!(rep.dim_u_plus_ne, rank);
        }
    }
    let d = diagram("2,1,1,2");
    assert_eq!(d.dim_m(), 13);
}

/// Jordan type from ranks of powers, with rational elimination.
fn jordan_oracle(n: usize, ones: &BTreeSet<(usize, usize)>) -> Vec<usize> {
    let mut m = vec![vec![0i64; n]; n];
    for &(i, j) in ones {
        m[i - 1][j - 1] = 1;
    }
    let mut ranks = vec![n];
    let mut power = m.clone();
    loop {
        let r = rational_rank(&power);
        ranks.push(r);
        if r == 0 {
            break;
        }
        let mut next = vec![vec![0i64; n]; n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    next[i][j] += power[i][k] * m[k][j];
                }
            }
        }
        power = next;
    }
    // Blocks of size ≥ k number rank(e^{k-1}) − rank(e^k).
    let ge: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in (0..ge.len()).rev() {
        let exact = ge[k] - ge.get(k + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat(k + 1).take(exact));
    }
    parts
}

#[test]
fn jordan_types_of_two_one_one_one_two() {
    let d = diagram("2,1,1,1,2");
    let mut types = BTreeSet::new();
    for ct in component_tableaux(&d) {
        let jt = jordan_oracle(d.n(), &ct.ones);
        let x = roots::excluded_roots(&ct).unwrap();
        let rep = analysis::tangent_dimension(&d, &LabelPartition::new(&ct, &x)).unwrap();
        assert_eq!(rep.jordan_type_of_e, jt);
        types.insert(jt);
    }
    assert_eq!(types, [vec![4, 2, 1], vec![3, 2, 2]].into_iter().collect());
}

#[test]
fn single_variable_restrictions_on_one_two_one_two() {
    let d = diagram("1,2,1,2");
    let top = &component_tableaux(&d)[0];
    let want = [(2, 4), (2, 6)];
    for (k, p) in d.pairs().iter().enumerate() {
        let inv = invariants::invariant(&d, p).unwrap().poly;
        let r = invariants::weierstrass_restrict(&inv, top);
        assert_eq!(r.as_signed_variable().map(|v| v.1), Some(want[k]));
    }
}
