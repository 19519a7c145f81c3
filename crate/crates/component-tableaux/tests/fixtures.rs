//! Worked examples pinned to the values stated alongside them.

use std::collections::{BTreeMap, BTreeSet};

use component_tableaux::analysis::{self, OrbitalStatus};
use component_tableaux::report::{self, Check, RunConfig};
use component_tableaux::roots::{self, shift_below, RootKind};
use component_tableaux::{component_tableaux, ComponentTableau, Composition, Diagram, Label};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn diagram(s: &str) -> Diagram {
    Diagram::new(&s.parse::<Composition>().unwrap())
}

/// Index of the pair `(left, right)` (1-based columns).
fn pair_at(d: &Diagram, left: usize, right: usize) -> usize {
    d.pairs().iter().position(|p| (p.left + 1, p.right + 1) == (left, right)).unwrap()
}

fn chosen(ct: &ComponentTableau, pair: usize) -> usize {
    ct.choice_of_pair()[&pair]
}

fn rows_down(ct: &ComponentTableau, pair: usize) -> usize {
    let m = ct.ext.move_of_pair()[&pair];
    ct.moves()[m].rows_down()
}

#[test]
fn three_tableaux_of_two_one_one_two_one() {
    let d = diagram("2,1,1,2,1");
    let all = component_tableaux(&d);
    assert_eq!(all.len(), 3);
    let (p23, p35, p14) = (pair_at(&d, 2, 3), pair_at(&d, 3, 5), pair_at(&d, 1, 4));
    // The height-two batch between C1 and C4 is {2, 3, 4}, one tableau each.
    let top: BTreeSet<usize> = all.iter().map(|ct| chosen(ct, p14)).collect();
    assert_eq!(top, BTreeSet::from([2, 3, 4]));
    for ct in &all {
        if chosen(ct, p14) == 4 {
            // 4 drops from R1 to R3.
            assert_eq!(rows_down(ct, p14), 2);
        } else {
            // First step: 3 and 5 go into R2.
            assert_eq!((chosen(ct, p23), chosen(ct, p35)), (3, 5));
            assert_eq!(rows_down(ct, p14), 1);
        }
    }
}

#[test]
fn seven_lowered_two_rows_then_five_twice() {
    let d = diagram("3,2,1,2,2,1,3");
    let (p36, p45, p24, p17) = (pair_at(&d, 3, 6), pair_at(&d, 4, 5), pair_at(&d, 2, 4), pair_at(&d, 1, 7));
    let ct = component_tableaux(&d)
        .into_iter()
        .find(|ct| chosen(ct, p36) == 7 && chosen(ct, p45) == 7 && chosen(ct, p24) == 5 && chosen(ct, p17) == 5)
        .expect("tableau lowering 7 and then 5");
    // 7 serves the height-1 and height-2 pairs at once, two rows below 10.
    assert_eq!(rows_down(&ct, p36), 2);
    assert_eq!(ct.moves()[ct.ext.move_of_pair()[&p36]].pairs.len(), 2);
    let c5 = ct.ext.column_entries(4);
    assert_eq!(&c5[..3], &[9, 10, 7]);
    // 5 goes one row under 8 in C4, then one row below 7 in C5.
    assert_eq!(rows_down(&ct, p24), 1);
    assert_eq!(rows_down(&ct, p17), 1);
    assert_eq!(ct.ext.column_entries(3), vec![7, 8, 5]);
    assert_eq!(c5, vec![9, 10, 7, 5]);
}

#[test]
fn generator_eight_eleven_of_the_four_eight_three_tableau() {
    let d = diagram("1,2,2,1,3,2");
    let ct = component_tableaux(&d)
        .into_iter()
        .find(|ct| ct.choice_of_pair().values().copied().collect::<BTreeSet<_>>() == BTreeSet::from([3, 4, 8]))
        .unwrap();
    let sh = shift_below(&d, 8, &[11]).unwrap();
    // 11 under 8, then 9 pushed under 5 in C3.
    assert_eq!(sh.columns, vec![vec![1], vec![2, 3], vec![4, 5, 9], vec![6], vec![7, 8, 11], vec![10]]);
    let ex = sh.exclusions(&d);
    let kind = |k| ex.iter().filter(|e| *e.1 == k).map(|e| *e.0).collect::<BTreeSet<_>>();
    assert_eq!(kind(RootKind::Secondary), BTreeSet::from([(4, 9), (5, 9), (6, 9)]));
    assert_eq!(kind(RootKind::Primary), BTreeSet::from([(7, 11), (8, 11)]));
    // The secondary roots do not carry a 1.
    assert!(kind(RootKind::Secondary).is_disjoint(&ct.ones));
    let x = roots::excluded_roots(&ct).unwrap();
    assert!(x.per_generator.iter().any(|g| g.generator.i == 8 && g.generator.j == vec![11] && g.roots == ex));
}

#[test]
fn three_five_tableau_is_not_an_orbital_closure() {
    let d = diagram("2,1,2,2,1");
    let (p13, p34) = (pair_at(&d, 1, 3), pair_at(&d, 3, 4));
    let t = report::tableau_data(&d)
        .unwrap()
        .into_iter()
        .find(|t| chosen(&t.ct, p13) == 3 && chosen(&t.ct, p34) == 5)
        .unwrap();
    // 3 descends two rows below 5, then 5 one row below 7.
    assert_eq!(rows_down(&t.ct, p13), 2);
    assert_eq!(rows_down(&t.ct, p34), 1);
    let gens: BTreeMap<usize, Vec<usize>> = t.ct.generators().into_iter().map(|g| (g.i, g.j)).collect();
    assert_eq!(gens, BTreeMap::from([(3, vec![4, 5]), (5, vec![7])]));
    let t3 = shift_below(&d, 3, &[4, 5]).unwrap();
    assert_eq!(t3.columns, vec![vec![1, 2], vec![3, 4, 5], vec![], vec![6, 7], vec![8]]);
    let t5 = shift_below(&d, 5, &[7]).unwrap();
    assert_eq!(t5.columns, vec![vec![1, 2], vec![3], vec![4, 5, 7], vec![6], vec![8]]);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let rep = analysis::orbital_variety_test(&d, &t.labels, &mut rng).unwrap();
    assert_eq!(rep.status, OrbitalStatus::NotClosure);
    assert!(!rep.excluded_bracket_closed);
}

#[test]
fn orbital_closures_of_two_one_one_one_two() {
    let d = diagram("2,1,1,1,2");
    let top = pair_at(&d, 1, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut by_choice = BTreeMap::new();
    for t in report::tableau_data(&d).unwrap() {
        let rep = analysis::orbital_variety_test(&d, &t.labels, &mut rng).unwrap();
        by_choice.insert(chosen(&t.ct, top), rep.status);
    }
    // Only the tableau choosing 3 has the extra linear generator x_{3,5} in its ideal.
    assert_eq!(
        by_choice,
        BTreeMap::from([
            (2, OrbitalStatus::NotClosure),
            (3, OrbitalStatus::Closure),
            (4, OrbitalStatus::NotClosure)
        ])
    );
}

/// Injectivity witness between the tableaux choosing `i` and `i_prime` for
/// the pair `(left, right)`, as `(c_choice, ell, ell_prime)`.
fn witness(comp: &str, left: usize, right: usize, i: usize, i_prime: usize) -> (usize, (usize, usize), (usize, usize)) {
    let c: Composition = comp.parse().unwrap();
    let d = Diagram::new(&c);
    let p = pair_at(&d, left, right);
    let cfg = RunConfig { checks: BTreeSet::from([Check::Injectivity]), cache: None, ..RunConfig::default() };
    let rep = report::verify_composition(&c, &cfg).unwrap();
    let data = component_tableaux(&d);
    let found = rep
        .injectivity_pairs
        .iter()
        .find(|q| {
            let pick = BTreeSet::from([chosen(&data[q.i], p), chosen(&data[q.j], p)]);
            let others_agree = data[q.i].choice_of_pair().iter().all(|(k, v)| *k >= p || data[q.j].choice_of_pair()[k] == *v);
            pick == BTreeSet::from([i, i_prime]) && others_agree
        })
        .expect("pair of tableaux");
    assert!(found.ok, "{comp}: {:?}", found.witness);
    let w = found.witness.as_ref().unwrap();
    assert!(w.rightmost && w.labels_exchanged && w.quadrant_clear);
    (w.i, w.ell.unwrap(), w.ell_prime.unwrap())
}

#[test]
fn rightmost_line_eight_eleven() {
    // ℓ_{8,11} carries 1 in the tableau lowering 5 under 9 in C4.
    assert_eq!(witness("3,2,1,3,2,1", 2, 5, 5, 8), (5, (5, 8), (8, 11)));
}

#[test]
fn rightmost_line_nine_eleven() {
    // The choices first differ on the height-one pair C3, C6: 7 against 9.
    assert_eq!(witness("3,2,1,2,2,1,3", 3, 6, 7, 9), (7, (7, 9), (9, 11)));
}

#[test]
fn rightmost_line_eight_ten() {
    assert_eq!(witness("3,2,1,3,1,2", 2, 6, 5, 8), (5, (5, 8), (8, 10)));
}

#[test]
fn exchanged_lines_of_two_one_one_two_one() {
    // The tableaux choosing 2 and 3 exchange ℓ_{2,4} and ℓ_{3,6}.
    assert_eq!(witness("2,1,1,2,1", 1, 4, 2, 3), (2, (2, 4), (3, 6)));
}

#[test]
fn single_pair_of_height_one_gives_one_star() {
    // With both columns of height one nothing is lowered beside the pair,
    // and the lone line is starred.
    let d = diagram("1,1");
    let all = component_tableaux(&d);
    assert_eq!(all.len(), 1);
    assert_eq!(all[0].lines(), vec![((1, 2), Label::Star)]);
}

#[test]
fn one_two_one_stars_two_four() {
    let d = diagram("1,2,1");
    let all = component_tableaux(&d);
    assert_eq!(all.len(), 1);
    assert_eq!(all[0].stars, BTreeSet::from([(2, 4)]));
    assert_eq!(all[0].ones, BTreeSet::from([(1, 2), (3, 4)]));
}

#[test]
fn decorated_lines_of_small_examples() {
    let find = |comp: &str, pair: (usize, usize), entry: usize| {
        let d = diagram(comp);
        let p = pair_at(&d, pair.0, pair.1);
        component_tableaux(&d).into_iter().find(|ct| chosen(ct, p) == entry).unwrap()
    };
    // 2 lowered twice.
    let ct = find("1,2,1,2", (2, 4), 2);
    assert_eq!(ct.stars, BTreeSet::from([(2, 4), (2, 6)]));
    assert_eq!(ct.ones, BTreeSet::from([(1, 2), (3, 4), (4, 5)]));
    // 4 lowered two rows below 6: one ∗ line per row.
    let ct = find("2,1,1,2,1", (1, 4), 4);
    assert!(ct.stars.is_superset(&BTreeSet::from([(4, 5), (4, 6)])));
    // 3 goes down twice.
    let ct = find("2,1,1,2", (1, 4), 3);
    assert_eq!(ct.stars, BTreeSet::from([(3, 4), (3, 6)]));
    // Three distinct ∗ coordinates for the tableau choosing 3.
    let d = diagram("2,1,1,1,2");
    let ct = find("2,1,1,1,2", (1, 5), 3);
    assert_eq!(ct.stars.len(), d.pairs().len());
    let cols: BTreeSet<usize> = ct.stars.iter().map(|&(_, j)| d.col_of(j)).collect();
    assert!(cols.len() >= 2);
}
