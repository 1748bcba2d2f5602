use linkcx::complex::{
    contract_edge, describe, description_complex, standard_complex, CombinatorialDescription, Presentation,
    TwoComplex,
};
use linkcx::links::{all_links, is_link_connected};
use linkcx::splitting::{abelianization, collapse_spanning_tree, complex_abelianization, wedge_split, Abelianization};
use linkcx::words::{Letter, Word};
use proptest::prelude::*;

fn relator() -> impl Strategy<Value = Word> {
    prop::collection::vec((0u8..5, any::<bool>()), 1..=10)
        .prop_map(|v| v.into_iter().map(|(g, p)| Letter::new((b'a' + g) as char, p).unwrap()).collect())
}

fn description() -> impl Strategy<Value = CombinatorialDescription> {
    prop::collection::vec(relator(), 1..=5).prop_map(|r| CombinatorialDescription::new(r).unwrap())
}

/// Edge-path rank of H_1 over the rationals is not needed; the check below
/// compares the split pieces against the whole by direct sums.
fn wedge_abelianization(pieces: &[Abelianization], circles: usize) -> Abelianization {
    let mut parts = pieces.to_vec();
    parts.push(Abelianization { rank: circles, torsion: vec![] });
    Abelianization::direct_sum(&parts)
}

fn check_component(x: &TwoComplex) -> Result<(), TestCaseError> {
    let (p, collapsed) = collapse_spanning_tree(x).unwrap();
    prop_assert_eq!(collapsed.vertex_count(), 1);
    prop_assert_eq!(collapsed.euler_characteristic(), x.euler_characteristic());
    prop_assert_eq!(complex_abelianization(x).unwrap(), abelianization(&p));
    let split = wedge_split(&collapsed).unwrap();
    prop_assert_eq!(split.circles, split.link_components - split.minus_vertex_components);
    prop_assert_eq!(split.wedge_euler_characteristic(), x.euler_characteristic());
    let pieces: Vec<Abelianization> =
        split.pieces.iter().map(|pc| complex_abelianization(&pc.complex).unwrap()).collect();
    prop_assert_eq!(wedge_abelianization(&pieces, split.circles), abelianization(&p));
    for piece in &split.pieces {
        prop_assert!(is_link_connected(&piece.complex).unwrap());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn descriptions_build_link_connected_complexes(d in description()) {
        let x = description_complex(&d);
        prop_assert!(is_link_connected(&x).unwrap());
        prop_assert!(all_links(&x).unwrap().iter().all(|l| l.is_connected()));
        let v = x.vertex_count() as i64;
        let e = x.edges().len() as i64;
        let f = x.faces().len() as i64;
        prop_assert_eq!(x.euler_characteristic(), v - e + f);
        prop_assert_eq!(f, d.relators().len() as i64);
        prop_assert!(x.is_polygon_quotient());
    }

    #[test]
    fn describe_inverts_construction(d in description()) {
        let x = description_complex(&d);
        let back = describe(&x).unwrap();
        prop_assert!(back.equivalent(&d));
        prop_assert!(description_complex(&back).is_isomorphic(&x));
    }

    #[test]
    fn splitting_bookkeeping(d in description()) {
        for component in description_complex(&d).connected_components() {
            check_component(&component)?;
        }
    }

    #[test]
    fn standard_complexes_have_one_vertex(rels in prop::collection::vec(relator(), 0..=4)) {
        let p = Presentation::new(vec!['a', 'b', 'c', 'd', 'e'], rels).unwrap();
        let x = standard_complex(&p);
        prop_assert_eq!(x.vertex_count(), 1);
        prop_assert_eq!(x.euler_characteristic(), 1 - 5 + p.relators().len() as i64);
        // Splitting is defined for polygon quotients only.
        if x.is_polygon_quotient() {
            check_component(&x)?;
        }
    }

    #[test]
    fn contracting_a_non_loop_keeps_euler_characteristic(d in description()) {
        // Per component: a vertex whose only edge is contracted away may
        // not survive next to other vertices.
        for x in description_complex(&d).connected_components() {
            if let Some(e) = x.edges().iter().position(|e| !e.is_loop()) {
                let y = contract_edge(&x, e).unwrap();
                prop_assert_eq!(y.euler_characteristic(), x.euler_characteristic());
                prop_assert_eq!(y.vertex_count() + 1, x.vertex_count());
            }
        }
    }
}
