//! End-to-end flows: an invariant translation in the plane or a pairwise
//! form always yields a witness; enumeration agrees with the Shamsuddin
//! criterion on the corpus.

use deristab_core::automorphism::PolyMap;
use deristab_core::corpus::{find, CORPUS};
use deristab_core::derivation::{recognize_pairwise, recognize_shamsuddin, Derivation};
use deristab_core::isotropy::{classify_shift, fixes_coefficients, invariant_translations, ShiftClass};
use deristab_core::poly::{int, Rat};
use deristab_core::simplicity::{
    bounded_isotropy_enumeration, pairwise_witness, plane_witness, shamsuddin_simple_n2, ShamsuddinDecision,
};
use deristab_core::Error;

#[test]
fn plane_translation_always_gives_a_witness() {
    for entry in CORPUS.iter().filter(|e| e.n() == 2) {
        let d = entry.derivation();
        for c in invariant_translations(&d) {
            let w = plane_witness(&d, &c).unwrap();
            assert!(w.verify(&d).unwrap(), "{}", entry.name);
        }
    }
}

#[test]
fn pairwise_translation_always_gives_a_witness() {
    for entry in CORPUS {
        let d = entry.derivation();
        let Some(form) = recognize_pairwise(&d) else { continue };
        for c in invariant_translations(&d) {
            let w = pairwise_witness(&form, &c).unwrap().expect(entry.name);
            assert!(w.verify(&d).unwrap(), "{}", entry.name);
        }
    }
}

#[test]
fn invariance_forces_zero_when_every_q_involves_its_variable() {
    // p = 1, q2 = x2^2 + x1, q3 = x1*x3: with c1 = 0 no nonzero c fixes all q_i.
    let d = Derivation::parse(&["1", "x2^2 + x1", "x1*x3"]).unwrap();
    let form = recognize_pairwise(&d).unwrap();
    for c2 in -3..=3 {
        for c3 in -3..=3 {
            let c = vec![int(0), int(c2), int(c3)];
            let fixed = fixes_coefficients(&d, &c).unwrap();
            assert_eq!(fixed, c2 == 0 && c3 == 0);
            if c2 != 0 || c3 != 0 {
                assert!(matches!(pairwise_witness(&form, &c), Err(Error::Precondition(_))));
            }
        }
    }
    assert!(invariant_translations(&d).is_empty());
}

#[test]
fn shamsuddin_corpus_matches_enumeration() {
    for entry in CORPUS.iter().filter(|e| e.n() == 2) {
        let d = entry.derivation();
        let Some(form) = recognize_shamsuddin(&d) else { continue };
        let decision = shamsuddin_simple_n2(&form.a[0], &form.b[0]).unwrap();
        let maps = bounded_isotropy_enumeration(&d, 1, 1).unwrap();
        match decision {
            ShamsuddinDecision::Simple => assert_eq!(maps, vec![PolyMap::identity(2)], "{}", entry.name),
            ShamsuddinDecision::NotSimple { .. } => assert!(maps.contains(&PolyMap::identity(2))),
        }
    }
}

#[test]
fn nontrivial_isotropy_flags_non_simplicity() {
    // (x1, 2 x2) commutes with ∂1 on the plane without being a translation.
    let d = Derivation::parse(&["1", "0"]).unwrap();
    let f = PolyMap::parse(&["x1", "2*x2"]).unwrap();
    assert_eq!(classify_shift(&f, &d).unwrap(), ShiftClass::NontranslationFlag);

    let intro = find("intro-three-variable").unwrap().derivation();
    let shift = PolyMap::translation(&[int(0), int(0), int(4)]);
    assert_eq!(classify_shift(&shift, &intro).unwrap(), ShiftClass::Translation);
    let c: Vec<Rat> = vec![int(0), int(0), int(1)];
    assert_eq!(invariant_translations(&intro), vec![c]);
}
