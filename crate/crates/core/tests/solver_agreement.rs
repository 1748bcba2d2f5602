use linkcx::families::FamilyId;
use linkcx::wordproblem::checks::agreement;

#[test]
fn rewriting_agrees_with_normal_forms_up_to_length_10() {
    let mut families: Vec<FamilyId> =
        [(2, 2), (2, 3), (3, 3), (4, 5)].iter().map(|&(m, n)| FamilyId::tor(m, n).unwrap()).collect();
    families.extend((2..=5).map(|m| FamilyId::art(m).unwrap()));
    for f in families {
        let r = agreement(f, 10).unwrap();
        assert!(r.identity_words > 0, "{f}");
        assert!(r.disagreements.is_empty(), "{f}: {:?}", r.disagreements);
        assert!(r.soundness_violations.is_empty(), "{f}: {:?}", r.soundness_violations);
        assert!(r.trace_failures.is_empty(), "{f}: {:?}", r.trace_failures);
    }
}

#[test]
fn britton_agrees_with_amalgam_normal_form_up_to_length_10() {
    for k in 1..=3 {
        let r = agreement(FamilyId::bs(k, k).unwrap(), 10).unwrap();
        assert!(r.disagreements.is_empty(), "BS({k},{k}): {:?}", r.disagreements);
        assert!(r.soundness_violations.is_empty());
    }
}
