use std::collections::BTreeMap;

use burnside_core::engine::{BurnsideRing, GSet, Limits, PermGroup};
use burnside_core::partitions::{binomial, factorial};
use burnside_core::schur::{basis_product, contingency_tables, schur_mul};
use burnside_core::{enumerate_partitions, fixed_points, marks_of, Coeff, Composition, Partition, SchurElement};
use proptest::prelude::*;

// p(i) via Euler's pentagonal recurrence
fn partition_counts(max: usize) -> Vec<i64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for i in 1..=max {
        let mut total = 0i64;
        for k in 1.. {
            let k = k as i64;
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                total += sign * p[i - g2];
            }
        }
        p[i] = total;
    }
    p
}

fn arb_partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(|w| {
        let all = enumerate_partitions(w);
        (0..all.len()).prop_map(move |j| all[j].clone())
    })
}

fn arb_schur(n: usize) -> impl Strategy<Value = SchurElement> {
    let basis = enumerate_partitions(n);
    let len = basis.len();
    prop::collection::vec((0..len, -3i128..=3), 0..4).prop_map(move |terms| {
        SchurElement::from_terms(n, terms.into_iter().map(|(j, c)| (basis[j].clone(), c))).unwrap()
    })
}

#[test]
fn partition_counts_match_pentagonal_recurrence() {
    let p = partition_counts(12);
    for (i, &count) in p.iter().enumerate() {
        assert_eq!(enumerate_partitions(i).len() as i64, count, "p({})", i);
    }
}

#[test]
fn enumeration_is_strictly_decreasing() {
    for i in 0..=12 {
        let all = enumerate_partitions(i);
        for w in all.windows(2) {
            assert!(w[0] > w[1]);
        }
        assert!(all.iter().all(|mu| mu.weight() == i));
    }
}

#[test]
fn contingency_tally_matches_aggregated_product() {
    for n in 1..=7 {
        for mu in enumerate_partitions(n) {
            for nu in enumerate_partitions(n) {
                let mut tally: BTreeMap<Partition, Coeff> = BTreeMap::new();
                let tables =
                    contingency_tables(&Composition::from(mu.clone()), &Composition::from(nu.clone())).unwrap();
                for t in &tables {
                    assert!(t.is_valid());
                    *tally.entry(t.shape()).or_insert(0) += 1;
                }
                assert_eq!(tally, basis_product(&mu, &nu).unwrap(), "{} * {}", mu, nu);
            }
        }
    }
}

#[test]
fn fixed_points_match_engine_count() {
    for n in 1..=5 {
        let s_n = PermGroup::symmetric(n, Limits::default()).unwrap();
        let natural = GSet::natural(s_n.clone());
        for mu in enumerate_partitions(n) {
            let set = natural.p_mu(&mu).unwrap();
            for g in 0..s_n.order() {
                let ct = s_n.element(g).cycle_type();
                assert_eq!(
                    fixed_points(&mu, &ct).unwrap(),
                    set.fixed_points_of(g) as Coeff,
                    "mu {} at {}",
                    mu,
                    s_n.element(g)
                );
            }
        }
    }
}

#[test]
fn basis_sets_are_transitive() {
    // orbit-counting lemma: the average number of fixed points is 1
    for n in 1..=5 {
        let s_n = PermGroup::symmetric(n, Limits::default()).unwrap();
        let natural = GSet::natural(s_n.clone());
        for mu in enumerate_partitions(n) {
            let set = natural.p_mu(&mu).unwrap();
            assert_eq!(set.fixed_point_total(), s_n.order() as u128);
            assert_eq!(set.orbits().len(), 1);
        }
    }
}

#[test]
fn orbit_counting_for_other_groups() {
    for group in [PermGroup::cyclic(6, Limits::default()).unwrap(), PermGroup::dihedral(5, Limits::default()).unwrap()]
    {
        let natural = GSet::natural(group.clone());
        for i in 0..=3 {
            let set = natural.symmetric_power(i).unwrap();
            let total = set.fixed_point_total();
            assert_eq!(total % group.order() as u128, 0);
            assert_eq!((total / group.order() as u128) as usize, set.orbits().len());
        }
    }
}

#[test]
fn stabilizers_along_an_orbit_are_conjugate() {
    let g = PermGroup::dihedral(4, Limits::default()).unwrap();
    let set = GSet::natural(g.clone()).symmetric_power(2).unwrap();
    for x in 0..set.len() {
        let stab = set.stabilizer(x);
        for e in 0..g.order() {
            let y = set.act(e, x);
            assert_eq!(stab.conjugate_by(e, &g), set.stabilizer(y));
        }
    }
}

#[test]
fn decompose_is_a_ring_map() {
    let g = PermGroup::symmetric(4, Limits::default()).unwrap();
    let mut ring = BurnsideRing::new(g.clone());
    let natural = GSet::natural(g.clone());
    let sets = [
        natural.clone(),
        natural.symmetric_power(2).unwrap(),
        natural.p_mu(&Partition::new(vec![2, 1]).unwrap()).unwrap(),
    ];
    for a in &sets {
        for b in &sets {
            let x = ring.decompose(a).unwrap();
            let y = ring.decompose(b).unwrap();
            let prod = ring.decompose(&a.product(b).unwrap()).unwrap();
            assert_eq!(ring.mul(&x, &y).unwrap(), prod);
            let mut sum = x.clone();
            sum.add_scaled(&y, 1).unwrap();
            assert_eq!(ring.decompose(&a.disjoint_union(b).unwrap()).unwrap(), sum);
            assert_eq!(prod.cardinality().unwrap(), (a.len() * b.len()) as Coeff);
        }
    }
}

#[test]
fn engine_products_match_contingency_tables() {
    for n in 1..=4 {
        let g = PermGroup::symmetric(n, Limits::default()).unwrap();
        let natural = GSet::natural(g.clone());
        let mut ring = BurnsideRing::new(g.clone());
        let names = burnside_core::engine::SchurNames::new(&mut ring).unwrap();
        for mu in enumerate_partitions(n) {
            for nu in enumerate_partitions(n) {
                let set = natural.p_mu(&mu).unwrap().product(&natural.p_mu(&nu).unwrap()).unwrap();
                let engine = names.to_schur(&ring.decompose(&set).unwrap()).unwrap().unwrap();
                let expected =
                    schur_mul(&SchurElement::basis(&mu, n).unwrap(), &SchurElement::basis(&nu, n).unwrap()).unwrap();
                assert_eq!(engine, expected, "{} * {}", mu, nu);
            }
        }
    }
}

#[test]
fn restriction_commutes_with_lambda() {
    // res: B(S_4) -> B(C_4) sends λ^i(N) to λ^i(res N)
    let s4 = PermGroup::symmetric(4, Limits::default()).unwrap();
    let c4 = PermGroup::cyclic(4, Limits::default()).unwrap();
    let hom = burnside_core::engine::GroupHom::inclusion(c4.clone(), s4.clone()).unwrap();
    let mut big = BurnsideRing::new(s4.clone());
    let mut small = BurnsideRing::new(c4.clone());
    let natural = GSet::natural(s4.clone());
    for i in 0..=4 {
        let lambda = big.lambda_general(&natural, i).unwrap();
        let mut pushed = burnside_core::engine::BurnsideElement::zero(c4.clone());
        for (key, c) in lambda.terms() {
            let rep = big.representative(key).unwrap();
            let r = small.decompose(&rep.restrict(&hom).unwrap()).unwrap();
            pushed.add_scaled(&r, c).unwrap();
        }
        let direct = small.lambda_general(&natural.restrict(&hom).unwrap(), i).unwrap();
        assert_eq!(pushed, direct, "i = {}", i);
    }
}

proptest! {
    #[test]
    fn multinomial_is_one_iff_single_multiplicity(mu in arb_partition(14)) {
        let m = mu.multinomial().unwrap();
        prop_assert!(m >= 1);
        prop_assert_eq!(m == 1, mu.alpha().counts().len() <= 1);
        let direct = factorial(mu.len() as u128).unwrap()
            / mu.alpha().counts().iter().map(|&a| factorial(a as u128).unwrap()).product::<u128>();
        prop_assert_eq!(m, direct);
    }

    #[test]
    fn pad_appends_the_remainder(mu in arb_partition(10), extra in 0usize..5) {
        let n = mu.weight() + extra;
        let padded = mu.pad(n).unwrap();
        prop_assert_eq!(padded.weight(), n);
        let mut a = mu.parts().to_vec();
        if extra > 0 {
            a.push(extra);
        }
        a.sort_unstable_by(|x, y| y.cmp(x));
        prop_assert_eq!(padded.parts(), &a[..]);
    }

    #[test]
    fn parse_display_round_trip(mu in arb_partition(12)) {
        let back: Partition = mu.to_string().parse().unwrap();
        prop_assert_eq!(back, mu);
    }

    #[test]
    fn tuple_count_is_a_multinomial(mu in arb_partition(12)) {
        let n = mu.weight() as u128;
        let mut rest = n;
        let mut prod = 1u128;
        for &p in mu.parts() {
            prod *= binomial(rest, p as u128).unwrap();
            rest -= p as u128;
        }
        prop_assert_eq!(mu.tuple_count().unwrap(), prod);
    }

    #[test]
    fn schur_mul_is_commutative_with_identity(
        (a, b) in (1usize..=7).prop_flat_map(|n| (arb_schur(n), arb_schur(n)))
    ) {
        let n = a.ambient();
        prop_assert_eq!(schur_mul(&a, &b).unwrap(), schur_mul(&b, &a).unwrap());
        prop_assert_eq!(schur_mul(&a, &SchurElement::one(n)).unwrap(), a.clone());
        prop_assert!(schur_mul(&a, &SchurElement::zero(n)).unwrap().is_zero());
    }

    #[test]
    fn schur_mul_is_associative(
        (a, b, c) in (1usize..=6).prop_flat_map(|n| (arb_schur(n), arb_schur(n), arb_schur(n)))
    ) {
        let left = schur_mul(&schur_mul(&a, &b).unwrap(), &c).unwrap();
        let right = schur_mul(&a, &schur_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn cardinality_and_marks_are_multiplicative(
        (a, b) in (1usize..=6).prop_flat_map(|n| (arb_schur(n), arb_schur(n)))
    ) {
        let ab = schur_mul(&a, &b).unwrap();
        prop_assert_eq!(ab.cardinality().unwrap(), a.cardinality().unwrap() * b.cardinality().unwrap());
        let (ma, mb, mab) = (marks_of(&a).unwrap(), marks_of(&b).unwrap(), marks_of(&ab).unwrap());
        for nu in enumerate_partitions(a.ambient()) {
            prop_assert_eq!(mab.get(&nu), ma.get(&nu) * mb.get(&nu));
        }
    }

    #[test]
    fn schur_mul_distributes(
        (a, b, c) in (1usize..=6).prop_flat_map(|n| (arb_schur(n), arb_schur(n), arb_schur(n)))
    ) {
        let left = schur_mul(&a, &b.checked_add(&c).unwrap()).unwrap();
        let right = schur_mul(&a, &b).unwrap().checked_add(&schur_mul(&a, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
