use motif_kit::io::{
    parse_certificate, parse_cliques, parse_instance, parse_witness, write_certificate, write_cliques, write_instance,
    write_witness, Certificate,
};
use motif_kit::sampling::{self, InstanceShape};
use motif_kit::{Error, Instance};
use proptest::prelude::*;

proptest! {
    #[test]
    fn instance_round_trip(seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let inst = sampling::random_instance(&mut rng, &InstanceShape::default());
        let back = parse_instance(&write_instance(&inst)).unwrap();
        // parsing re-densifies colors, so compare after one more round
        prop_assert_eq!(parse_instance(&write_instance(&back)).unwrap(), back.clone());
        prop_assert_eq!(back.graph, inst.graph);
        prop_assert_eq!(back.motif.total(), inst.motif.total());
    }

    #[test]
    fn witness_and_cliques_round_trip(w in proptest::collection::vec(0usize..1000, 0..20)) {
        prop_assert_eq!(parse_witness(&write_witness(&w)).unwrap(), w.clone());
        let cliques = vec![w.clone(), vec![1, 2]];
        let back = parse_cliques(&write_cliques(&cliques)).unwrap();
        // an empty clique is an empty line, which the parser skips
        prop_assert_eq!(back.len(), if w.is_empty() { 1 } else { 2 });
        prop_assert_eq!(back.last(), Some(&vec![1, 2]));
    }
}

#[test]
fn instance_errors_carry_line_numbers() {
    let cases = [
        ("p gm 2 1\ne 0 2\nc 0 0\nc 1 0\nm 0 1\n", 2),
        ("p gm 2 0\nc 0 0\nm 0 1\n", 0),
        ("p gm 1 0\nc 0 x\nm 0 1\n", 2),
        ("p gm 1 0\nc 0 0\n", 0),
    ];
    for (text, line) in cases {
        match parse_instance(text) {
            Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            Err(e) => assert_eq!(line, 0, "{text:?}: {e}"),
            Ok(_) => panic!("{text:?} parsed"),
        }
    }
}

#[test]
fn solve_output_is_a_witness_file() {
    assert_eq!(parse_witness("YES\n0 3 4\n").unwrap(), vec![0, 3, 4]);
    assert!(parse_witness("NO\n").is_err());
}

#[test]
fn certificate_round_trip() {
    let cert = Certificate {
        map: vec![("root".into(), 0), ("set:1:long".into(), 7)],
        claims: vec![("distance-to-paths".into(), "1".into())],
    };
    let back = parse_certificate(&write_certificate(&cert)).unwrap();
    assert_eq!(back, cert);
    assert_eq!(back.vertex("set:1:long"), Some(7));
    assert_eq!(back.claim("distance-to-paths"), Some("1"));
    assert!(parse_certificate("map a\n").is_err());
}

#[test]
fn external_colors_are_densified() {
    let inst: Instance = parse_instance("p gm 2 1\ne 0 1\nc 0 40\nc 1 7\nm 40 1\nm 7 1\n").unwrap();
    assert_eq!(inst.coloring.as_slice(), &[1, 0]);
}
