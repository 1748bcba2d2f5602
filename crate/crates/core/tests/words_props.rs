use linkcx::words::{
    cyclic_reduce, cyclic_syllable_count, free_reduce, parse_word, syllables, expand_syllables, Letter, Word,
};
use proptest::prelude::*;

fn letter() -> impl Strategy<Value = Letter> {
    (0u8..4, any::<bool>()).prop_map(|(g, pos)| Letter::new((b'a' + g) as char, pos).unwrap())
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(), 0..=max).prop_map(Word::from_letters)
}

/// Reference free reduction: delete the leftmost inverse pair until none
/// remain.
fn reduce_by_rescanning(w: &Word) -> Word {
    let mut v = w.letters().to_vec();
    while let Some(i) = v.windows(2).position(|p| p[0].is_inverse_of(p[1])) {
        v.drain(i..i + 2);
    }
    Word::from_letters(v)
}

proptest! {
    #[test]
    fn free_reduction_matches_rescanning(w in word(24)) {
        prop_assert_eq!(free_reduce(&w), reduce_by_rescanning(&w));
    }

    #[test]
    fn free_reduction_is_idempotent_and_reduced(w in word(24)) {
        let r = free_reduce(&w);
        prop_assert!(r.is_freely_reduced());
        prop_assert_eq!(free_reduce(&r), r);
    }

    #[test]
    fn reduction_is_compatible_with_products(u in word(12), v in word(12)) {
        let whole = free_reduce(&u.concat(&v));
        let parts = free_reduce(&free_reduce(&u).concat(&free_reduce(&v)));
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn word_times_inverse_is_trivial(w in word(24)) {
        prop_assert!(free_reduce(&w.concat(&w.inverse())).is_empty());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn printing_round_trips(w in word(24)) {
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn cyclic_syllable_count_is_rotation_invariant(w in word(16), k in 0usize..16) {
        let c = cyclic_reduce(&w);
        prop_assume!(!c.is_empty());
        let r = c.rotate(k);
        prop_assume!(r.is_cyclically_reduced());
        // A word that is a single generator power has one syllable either way.
        prop_assert_eq!(cyclic_syllable_count(&c).unwrap(), cyclic_syllable_count(&r).unwrap());
    }

    #[test]
    fn syllables_expand_back(w in word(20)) {
        let r = free_reduce(&w);
        let s = syllables(&r).unwrap();
        prop_assert_eq!(expand_syllables(&s).unwrap(), r);
        prop_assert!(s.windows(2).all(|p| p[0].generator != p[1].generator));
    }

    #[test]
    fn exponent_sums_survive_reduction(w in word(20)) {
        let r = free_reduce(&w);
        for g in ['a', 'b', 'c', 'd'] {
            prop_assert_eq!(w.exponent_sum(g), r.exponent_sum(g));
        }
    }
}

#[test]
fn syllable_example() {
    let s = syllables(&parse_word("a^5b^2C^4").unwrap()).unwrap();
    assert_eq!(s.len(), 3);
    assert_eq!(cyclic_syllable_count(&parse_word("abAB").unwrap()).unwrap(), 4);
    assert_eq!(cyclic_syllable_count(&parse_word("aba").unwrap()).unwrap(), 2);
}
