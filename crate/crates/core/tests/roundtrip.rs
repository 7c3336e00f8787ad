//! Files written by the library re-read to equal values.

use hqft::frobenius::fixtures::*;
use hqft::group::FiniteAbelianGroup;
use hqft::io;
use hqft::surface::builders::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn surfaces_round_trip(seed in any::<u64>(), h in 0usize..4, orders in prop::collection::vec(1i64..6, 0..3)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = FiniteAbelianGroup::new(&orders).unwrap();
        let s = randomly_labeled(&mut rng, &genus_surface(g.clone(), h));
        let g2 = io::parse_group(&io::group_to_json(&g)).unwrap();
        prop_assert_eq!(&g2, &g);
        prop_assert_eq!(io::parse_surface(&io::surface_to_json(&s), &g2).unwrap(), s);
    }

    #[test]
    fn algebras_and_actions_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let block = random_block_algebra(&mut rng, 6);
        let a = io::parse_algebra(&io::algebra_to_json(&block.algebra), None).unwrap();
        prop_assert_eq!(io::algebra_to_json(&a), io::algebra_to_json(&block.algebra));
        let g = FiniteAbelianGroup::new(&[2, 3]).unwrap();
        let ex = random_exponents(&mut rng, &g, block.block_sizes.len());
        let act = block.root_of_unity_action(&g, &ex).unwrap();
        let back = io::parse_action(&io::action_to_json(&act), &g, &a).unwrap();
        prop_assert_eq!(io::action_to_json(&back), io::action_to_json(&act));
    }
}
