use linkcx::families::FamilyId;
use linkcx::wordproblem::{
    bs_is_identity, bs_normal_form, check_trace, finite_image, is_identity, rewrite_is_identity,
    scan_reduced_words, tor_normal_form, Witness, DEFAULT_WORD_BUDGET,
};
use linkcx::words::{expand_syllables, free_reduce, Letter, Word};
use proptest::prelude::*;

fn word_over(alphabet: [char; 2], max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..2, any::<bool>()), 0..=max)
        .prop_map(move |v| v.into_iter().map(|(g, p)| Letter::new(alphabet[g], p).unwrap()).collect())
}

/// A product of conjugates of the relator and its inverse: the identity
/// by construction.
fn consequence(family: FamilyId) -> impl Strategy<Value = Word> {
    let r = family.relator();
    prop::collection::vec((word_over(family.alphabet(), 4), any::<bool>()), 1..=3).prop_map(move |parts| {
        parts.into_iter().fold(Word::empty(), |acc, (c, inv)| {
            let core = if inv { r.inverse() } else { r.clone() };
            free_reduce(&acc.concat(&c).concat(&core).concat(&c.inverse()))
        })
    })
}

fn tor_family() -> impl Strategy<Value = FamilyId> {
    (1u32..=5, 1u32..=5).prop_map(|(m, n)| FamilyId::tor(m, n).unwrap())
}

proptest! {
    #[test]
    fn tor_normal_form_is_multiplicative((f, u, v) in tor_family().prop_flat_map(|f| (Just(f), word_over(['a', 'b'], 6), word_over(['a', 'b'], 6)))) {
        let FamilyId::Tor { m, n } = f else { unreachable!() };
        let nu = tor_normal_form(&u, m, n).unwrap().to_word(m);
        let nv = tor_normal_form(&v, m, n).unwrap().to_word(m);
        prop_assert_eq!(tor_normal_form(&u.concat(&v), m, n).unwrap(), tor_normal_form(&nu.concat(&nv), m, n).unwrap());
    }

    #[test]
    fn tor_normal_form_invariants((f, w) in tor_family().prop_flat_map(|f| (Just(f), word_over(['a', 'b'], 16)))) {
        let FamilyId::Tor { m, n } = f else { unreachable!() };
        let nf = tor_normal_form(&w, m, n).unwrap();
        for s in &nf.coset_sequence {
            let order = if s.generator == 'a' { m } else { n } as i64;
            prop_assert!(0 < s.exponent && s.exponent < order);
        }
        prop_assert!(nf.coset_sequence.windows(2).all(|p| p[0].generator != p[1].generator));
        // w times the inverse of its normal form word is trivial.
        let back = w.concat(&nf.to_word(m).inverse());
        prop_assert!(tor_normal_form(&back, m, n).unwrap().is_identity());
    }

    #[test]
    fn consequences_are_identity_everywhere(w in consequence(FamilyId::tor(2, 3).unwrap())) {
        let f = FamilyId::tor(2, 3).unwrap();
        prop_assert!(is_identity(&w, f).unwrap().is_identity);
        prop_assert!(finite_image(&w, f).unwrap().is_identity());
        let v = rewrite_is_identity(&w, f).unwrap();
        prop_assert!(v.is_identity);
        let Witness::Trace { steps } = &v.witness else { panic!("identity without trace") };
        check_trace(&w, steps, f).unwrap();
    }

    #[test]
    fn artin_consequences_replay(w in consequence(FamilyId::art(3).unwrap())) {
        let f = FamilyId::art(3).unwrap();
        prop_assert!(is_identity(&w, f).unwrap().is_identity);
        prop_assert!(finite_image(&w, f).unwrap().is_identity());
        let v = rewrite_is_identity(&w, f).unwrap();
        prop_assert!(v.is_identity);
        let Witness::Trace { steps } = &v.witness else { panic!("identity without trace") };
        check_trace(&w, steps, f).unwrap();
    }

    #[test]
    fn bs_consequences((k, w) in (1u32..=3).prop_flat_map(|k| (Just(k), consequence(FamilyId::bs(k, k).unwrap())))) {
        prop_assert!(bs_is_identity(&w, k).unwrap().is_identity);
        prop_assert!(bs_normal_form(&w, k).unwrap().is_identity());
    }

    #[test]
    fn identity_verdicts_are_sound((f, w) in prop_oneof![
        Just(FamilyId::tor(2, 3).unwrap()), Just(FamilyId::tor(3, 4).unwrap()),
        Just(FamilyId::art(3).unwrap()), Just(FamilyId::art(4).unwrap()), Just(FamilyId::bs(2, 2).unwrap()),
    ].prop_flat_map(|f| (Just(f), word_over(f.alphabet(), 12)))) {
        if is_identity(&w, f).unwrap().is_identity {
            prop_assert!(finite_image(&w, f).unwrap().is_identity());
        }
    }
}

#[test]
fn britton_agrees_with_amalgam_normal_form() {
    for k in 1..=3u32 {
        let disagreements = scan_reduced_words(['a', 't'], 8, DEFAULT_WORD_BUDGET, |w| {
            let britton = bs_is_identity(w, k).unwrap().is_identity;
            let amalgam = bs_normal_form(w, k).unwrap().is_identity();
            (britton != amalgam).then(|| w.clone())
        })
        .unwrap();
        assert!(disagreements.is_empty(), "k = {k}: {disagreements:?}");
    }
}

#[test]
fn normal_form_round_trip_through_syllables() {
    let nf = tor_normal_form(&"abAbbaBa".parse().unwrap(), 3, 4).unwrap();
    let seq = expand_syllables(&nf.coset_sequence).unwrap();
    assert_eq!(tor_normal_form(&seq, 3, 4).unwrap().coset_sequence, nf.coset_sequence);
}
