use p7c4c5::certificate::verify_certificate;
use p7c4c5::cutset::has_clique_cutset;
use p7c4c5::forge;
use p7c4c5::patterns::class_membership;
use p7c4c5::recognize::recognize_atom;

#[test]
fn corpus_atoms_are_recognized() {
    let mut mismatched = Vec::new();
    for inst in forge::corpus(11, 300, 40) {
        let got = recognize_atom(&inst.graph);
        match (&inst.cert, got) {
            (Some(want), Ok(cert)) => {
                assert!(verify_certificate(&inst.graph, &cert).is_empty(), "{}", inst.name);
                assert_eq!(cert.universal.len(), want.universal.len(), "{}", inst.name);
                if cert.kind.name() != want.kind.name() {
                    mismatched.push(format!("{} -> {}", inst.name, cert.kind.name()));
                }
            }
            (Some(_), Err(e)) => panic!("{}: {e}", inst.name),
            // gluing a small clique inside a clique can leave an atom
            (None, Ok(_)) => assert!(has_clique_cutset(&inst.graph).is_none(), "{}", inst.name),
            // clique sums need not stay P7-free
            (None, Err(_)) => assert!(
                has_clique_cutset(&inst.graph).is_some() || !class_membership(&inst.graph).in_class(),
                "{}",
                inst.name
            ),
        }
    }
    assert!(mismatched.is_empty(), "{mismatched:?}");
}

#[test]
fn recognition_is_deterministic() {
    for inst in forge::corpus(5, 40, 30).into_iter().filter(|i| i.cert.is_some()) {
        let a = recognize_atom(&inst.graph).unwrap();
        let b = recognize_atom(&inst.graph).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn large_atoms_skip_the_brute_checks() {
    for inst in forge::corpus(23, 60, 160).into_iter().filter(|i| i.cert.is_some()) {
        let want = inst.cert.as_ref().unwrap();
        let cert = recognize_atom(&inst.graph).unwrap_or_else(|e| panic!("{}: {e}", inst.name));
        assert_eq!(cert.kind.name(), want.kind.name(), "{}", inst.name);
    }
}
