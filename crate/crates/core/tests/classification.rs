//! Conjugacy is invariant under transport of structure, and witnesses always
//! satisfy both conditions.

use proptest::prelude::*;
use tbshift::abelian::{enumerate_automorphisms, AbGroup};
use tbshift::classify::{centralizer, check_conditions, decide_conjugacy, Verdict};
use tbshift::dynamics::Triplet;
use tbshift::sampling::Sampler;

fn groups() -> Vec<AbGroup> {
    [vec![3], vec![2, 2], vec![4], vec![3, 3], vec![2, 4], vec![6]]
        .into_iter()
        .map(|t| AbGroup::new(0, t).unwrap())
        .collect()
}

fn random_triplet(s: &mut Sampler, g: &AbGroup) -> Triplet {
    Triplet::new(s.bichar(g), s.character(g)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transported_triplets_are_conjugate(seed in any::<u64>(), gi in 0usize..6) {
        let g = &groups()[gi];
        let mut s = Sampler::new(seed);
        let ta = random_triplet(&mut s, g);
        let auts = enumerate_automorphisms(g).unwrap();
        let psi = &auts[s.int(0, auts.len() as i64 - 1) as usize];
        let tb = Triplet::new(ta.mu().pullback(psi).unwrap(), ta.chi().pullback(psi).unwrap()).unwrap();
        let r = decide_conjugacy(&tb, &ta, None).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Yes);
        let w = r.witness.unwrap();
        prop_assert_eq!(check_conditions(&tb, &ta, &w).unwrap(), (true, true));
        // Transport preserves the centralizer order.
        prop_assert_eq!(centralizer(&ta, None).unwrap().order, centralizer(&tb, None).unwrap().order);
    }

    #[test]
    fn verdicts_are_symmetric(seed in any::<u64>(), gi in 0usize..6) {
        let g = &groups()[gi];
        let mut s = Sampler::new(seed);
        let (a, b) = (random_triplet(&mut s, g), random_triplet(&mut s, g));
        let ab = decide_conjugacy(&a, &b, None).unwrap();
        let ba = decide_conjugacy(&b, &a, None).unwrap();
        prop_assert_eq!(ab.verdict, ba.verdict);
        if let Some(w) = ab.witness {
            prop_assert_eq!(check_conditions(&a, &b, &w).unwrap(), (true, true));
        }
    }
}
