use std::collections::HashSet;

use proptest::prelude::*;

use hodge_sl2::nilpotent_orbits::even_jm_classes;
use hodge_sl2::rep_weights::natural_weight;
use hodge_sl2::root_system::{enumerate_parabolic_subgroup, root_set_orbit, DEFAULT_WEYL_CAP};
use hodge_sl2::*;

const SMALL: &[&str] = &["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"];
const WITH_F4: &[&str] = &["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"];

fn rs(t: &str) -> RootSystem {
    RootSystem::new(CartanType::parse(t).unwrap())
}

/// A type together with a nonzero 0/1 grading mask.
fn domain(types: &'static [&'static str]) -> impl Strategy<Value = (&'static str, Vec<i64>)> {
    proptest::sample::select(types).prop_flat_map(|t| {
        let r = CartanType::parse(t).unwrap().rank;
        (Just(t), proptest::collection::vec(0i64..=1, r).prop_filter("nonzero", |v| v.contains(&1)))
    })
}

fn self_dual(t: &str) -> bool {
    !(t.starts_with('A') && t != "A1")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reflections_preserve_roots(t in proptest::sample::select(WITH_F4), a in 0usize..48, b in 0usize..48) {
        let r = rs(t);
        let (a, b) = (a % r.num_roots(), b % r.num_roots());
        let img = r.reflect_root(a, b);
        prop_assert!(img < r.num_roots());
        prop_assert_eq!(r.reflect_root(a, img), b);
    }

    #[test]
    fn simple_reflections_are_involutions(t in proptest::sample::select(WITH_F4)) {
        let r = rs(t);
        for i in 0..r.rank() {
            let s = r.simple_reflection(i);
            for x in 0..r.num_roots() {
                prop_assert_eq!(s[s[x] as usize] as usize, x);
            }
        }
    }

    #[test]
    fn longest_element_negates_positive_roots(t in proptest::sample::select(SMALL)) {
        let r = rs(t);
        let w = enumerate_weyl(&r, DEFAULT_WEYL_CAP).unwrap();
        let hits = w
            .elements()
            .iter()
            .filter(|el| (0..r.num_positive()).all(|a| !r.is_positive(el[a] as usize)))
            .count();
        prop_assert_eq!(hits, 1);
    }

    #[test]
    fn levis_are_weyl_stable(t in proptest::sample::select(SMALL), k in 0usize..10_000, j in 0usize..10_000) {
        let r = rs(t);
        let w = enumerate_weyl(&r, DEFAULT_WEYL_CAP).unwrap();
        let levis = enumerate_levis(&r, &w).unwrap();
        let all: HashSet<RootSet> = levis.iter().map(|l| l.roots).collect();
        let l = &levis[k % levis.len()];
        let img = l.roots.permute(w.element(j % w.order()));
        prop_assert!(all.contains(&img));
    }

    #[test]
    fn base_regenerates_levi(t in proptest::sample::select(SMALL), k in 0usize..10_000) {
        let r = rs(t);
        let w = enumerate_weyl(&r, DEFAULT_WEYL_CAP).unwrap();
        let levis = enumerate_levis(&r, &w).unwrap();
        let l = &levis[k % levis.len()];
        let again = LeviSubsystem::generated_by(&r, &l.base).unwrap();
        prop_assert_eq!(again.roots, l.roots);
        let rank: usize = l.component_types().iter().map(|c| c.rank).sum();
        prop_assert_eq!(rank, l.base.len());
    }

    #[test]
    fn weight_systems_are_weyl_stable(
        t in proptest::sample::select(&["A2", "B2", "C3", "G2", "A3"][..]),
        hw in proptest::collection::vec(0i64..=2, 3),
    ) {
        let r = rs(t);
        let hw = HighestWeight::new(hw[..r.rank()].to_vec()).unwrap();
        let ws = weight_system(&r, &hw, 100_000).unwrap();
        prop_assert_eq!(Some(ws.dim), hodge_sl2::rep_weights::weyl_dimension(&r, &hw).to_integer().try_into().ok());
        let mult: std::collections::HashMap<Vec<i64>, u64> =
            ws.entries.iter().map(|w| (w.omega.clone(), w.mult)).collect();
        let c = r.cartan_matrix();
        for w in &ws.entries {
            for i in 0..r.rank() {
                let img: Vec<i64> = (0..r.rank()).map(|j| w.omega[j] - w.omega[i] * c[i][j]).collect();
                prop_assert_eq!(mult.get(&img), Some(&w.mult));
            }
        }
    }

    #[test]
    fn hodge_numbers_are_symmetric((t, g) in domain(SMALL), omega in 1usize..=4) {
        let r = rs(t);
        let e = GradingElement::from_ints(&g);
        let adj = adjoint_weight_system(&r);
        let h = hodge_numbers(&adj, &e, 0).unwrap();
        for p in h.p_min..h.p_min + h.h.len() as i64 {
            prop_assert_eq!(h.get(p), h.get(-p));
        }
        let zero_roots = r.roots().iter().filter(|a| e.pair_int(a) == Some(0)).count();
        prop_assert_eq!(h.get(0) as usize, r.rank() + zero_roots);

        if self_dual(t) {
            let omega = 1 + (omega - 1) % r.rank();
            let ws = weight_system(&r, &HighestWeight::fundamental(r.rank(), omega), 100_000).unwrap();
            if let Ok(n) = natural_weight(&ws, &e) {
                if let Ok(h) = hodge_numbers(&ws, &e, n) {
                    prop_assert_eq!(h.h.iter().sum::<u64>(), ws.dim);
                    for p in 0..=n {
                        prop_assert_eq!(h.get(p), h.get(n - p));
                    }
                }
            }
        }
    }

    #[test]
    fn compact_roots_are_closed((t, g) in domain(WITH_F4)) {
        let r = rs(t);
        let e = GradingElement::from_ints(&g);
        let p = split_roots(&r, &e).unwrap();
        for a in p.compact.iter() {
            for b in p.compact.iter() {
                let s: Vec<i64> = r.root(a).iter().zip(r.root(b)).map(|(x, y)| x + y).collect();
                if let Some(c) = r.index_of(&s) {
                    prop_assert!(p.compact.contains(c));
                }
            }
        }
        let label = identify_real_form(&r, &e).unwrap();
        prop_assert_eq!(label.dim_k, r.rank() + p.compact.len());
    }

    #[test]
    fn hermitian_iff_center((t, g) in domain(SMALL)) {
        let r = rs(t);
        let e = GradingElement::from_ints(&g);
        let w = enumerate_weyl(&r, DEFAULT_WEYL_CAP).unwrap();
        let css = compact_simple_system(&r, &e, &w).unwrap();
        let label = identify_real_form(&r, &e).unwrap();
        prop_assert_eq!(css.hermitian, label.center_dim == 1);
        prop_assert_eq!(css.s_k.len() + label.center_dim, r.rank());
    }

    #[test]
    fn compact_char_vector_is_wk_invariant(
        (t, g) in domain(SMALL),
        z in proptest::collection::vec(-3i64..=3, 4),
        moves in proptest::collection::vec(0usize..8, 0..6),
    ) {
        let r = rs(t);
        let e = GradingElement::from_ints(&g);
        let w = enumerate_weyl(&r, DEFAULT_WEYL_CAP).unwrap();
        let css = compact_simple_system(&r, &e, &w).unwrap();
        let z = GradingElement::from_ints(&z[..r.rank()]);
        let base = compact_characteristic_vector(&r, &css, &z).unwrap();
        prop_assert!(base.gamma.iter().all(|&x| x >= 0));
        if css.s_k.is_empty() {
            return Ok(());
        }
        let mut moved = z.clone();
        for m in moves {
            moved = r.reflect_grading(css.s_k[m % css.s_k.len()], &moved);
        }
        prop_assert_eq!(compact_characteristic_vector(&r, &css, &moved).unwrap(), base);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn class_invariants((t, g) in domain(WITH_F4)) {
        let r = rs(t);
        let spec = MTDomainSpec::new(r.cartan_type(), g).unwrap();
        let e = spec.grading_element();
        let classes = classify_in(&r, &spec, &ClassifyOptions::default()).unwrap();
        let adj = adjoint_weight_system(&r);
        let two = Q::from_integer(2.into());
        for c in &classes {
            prop_assert_eq!(c.z.add(&c.zeta.scale(&two)), e.scale(&two));
            prop_assert!(r.roots().iter().all(|a| c.z.pair_int(a).is_some()));
            for a in c.levi.roots.iter() {
                prop_assert_eq!(c.z.pair(r.root(a)), e.pair(r.root(a)) * &two);
            }
            let d = deligne_diamond(&e, &c.z, &adj, 0).unwrap();
            prop_assert_eq!(d.total(), adj.dim);
            prop_assert_eq!(d.is_diagonal(), c.is_hodge_tate);
            for (&(p, q), m) in &d.cells {
                prop_assert_eq!(d.cells.get(&(q, p)), Some(m));
            }
            // dim of the sum of I^{p,q} with p, q > 0
            let pos: u64 = d.cells.iter().filter(|(&(p, q), _)| p > 0 && q > 0).map(|(_, m)| m).sum();
            prop_assert_eq!(pos as usize, c.codim);
        }
        let ones = classes.iter().filter(|c| c.codim == 1).count();
        prop_assert_eq!(ones, codim1_count(&spec));
    }

    #[test]
    fn classification_is_w0_invariant((t, g) in domain(SMALL), k in 0usize..1000) {
        let r = rs(t);
        let spec = MTDomainSpec::new(r.cartan_type(), g).unwrap();
        let e = spec.grading_element();
        let classes = classify_in(&r, &spec, &ClassifyOptions::default()).unwrap();
        let gens: Vec<usize> = (0..r.rank()).filter(|&i| spec.grading_coeffs[i] == 0).collect();
        let w0 = enumerate_parabolic_subgroup(&r, &gens, DEFAULT_WEYL_CAP).unwrap();
        let w = w0.element(k % w0.order());
        let canon: HashSet<RootSet> = classes.iter().map(|c| c.levi.roots).collect();
        for c in &classes {
            let moved = c.levi.roots.permute(w);
            let l = LeviSubsystem::from_roots(&r, moved).unwrap();
            prop_assert!(is_distinguished(&r, &e, &l));
            let min = *root_set_orbit(&r, &moved, &gens).iter().min().unwrap();
            prop_assert!(canon.contains(&min));
            prop_assert_eq!(min, c.levi.roots);
        }
    }

    #[test]
    fn char_vectors_are_bounded(t in proptest::sample::select(WITH_F4)) {
        let r = rs(t);
        let v = enumerate_char_vectors(&r);
        prop_assert!(v.iter().all(|c| c.values.iter().all(|&x| (0..=2).contains(&x))));
        let principal = CharVector { values: vec![2; r.rank()] };
        prop_assert!(v.contains(&principal));
        let full = JMIndexSet::new((1..=r.rank()).collect());
        prop_assert!(is_even_jm(&v, r.rank(), &full));
        prop_assert!(even_jm_classes(&v).contains(&full));
    }
}

#[test]
fn a_type_orbits_match_partitions() {
    fn parts(m: usize, max: usize) -> Vec<Vec<usize>> {
        if m == 0 {
            return vec![vec![]];
        }
        (1..=max.min(m))
            .rev()
            .flat_map(|f| {
                parts(m - f, f).into_iter().map(move |mut rest| {
                    rest.insert(0, f);
                    rest
                })
            })
            .collect()
    }
    for n in 2..=6 {
        let ours = enumerate_char_vectors(&rs(&format!("A{}", n - 1)));
        let dict: std::collections::BTreeSet<CharVector> = parts(n, n)
            .into_iter()
            .map(|p| partition_char_vector(&Partition::new(p).unwrap()))
            .collect();
        assert_eq!(ours, dict, "A{}", n - 1);
    }
}
