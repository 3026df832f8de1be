//! Generated instances against the exhaustive solver and the source-side
//! brute force, independently of the designated algorithms.

use motif_kit::generators::{
    gen_domset_reduction, gen_hitting_set_split, gen_mcc_star, gen_set_cover_split, gen_x3c_comb, gen_x3c_paths,
    gen_x3c_superstar_cliques, random_source, DomVariant, PartitionedGraph, Reduction, SetSystem, X3cInstance,
};
use motif_kit::solvers::{solve_brute, BRUTE_LIMIT};
use motif_kit::{sampling, verify_solution, Graph};

#[test]
fn brute_force_agrees_with_source_side() {
    for (k, red) in Reduction::ALL.iter().enumerate() {
        let mut rng = sampling::rng(9000 + k as u64);
        let mut checked = 0;
        for _ in 0..30 {
            let source = random_source(*red, &mut rng);
            let gen = source.generate().unwrap();
            if gen.instance.n() > BRUTE_LIMIT {
                continue;
            }
            checked += 1;
            let out = solve_brute(&gen.instance).unwrap();
            assert_eq!(out.is_yes(), source.solve_source(), "{red}");
            if let Some(w) = out.witness() {
                assert!(verify_solution(&gen.instance, w).unwrap());
            }
        }
        assert!(checked > 0, "{red}: every instance was above the brute-force limit");
    }
}

fn sample_x3c() -> X3cInstance {
    X3cInstance::new(2, vec![[0, 2, 4], [0, 1, 3], [1, 3, 5], [1, 4, 5]]).unwrap()
}

#[test]
fn x3c_constructions_on_the_sample() {
    let x = sample_x3c();
    assert_eq!(x.exact_cover(), Some(vec![0, 2]));
    let paths = gen_x3c_paths(&x).unwrap();
    let comb = gen_x3c_comb(&x).unwrap();
    assert_eq!((paths.instance.n(), paths.instance.graph.m()), (29, 28));
    assert_eq!(comb.instance.n(), 36);
    assert!(solve_brute(&paths.instance).unwrap().is_yes());
    assert!(solve_brute(&comb.instance).unwrap().is_yes());
    let star = gen_x3c_superstar_cliques(&x, false).unwrap();
    assert_eq!(star.instance.n(), 17);
    assert!(solve_brute(&star.instance).unwrap().is_yes());
    assert!(X3cInstance::new(0, vec![]).is_err());
}

#[test]
fn split_and_domset_examples() {
    let hs = SetSystem::new(3, vec![vec![0, 1], vec![1, 2]], 1).unwrap();
    assert!(solve_brute(&gen_hitting_set_split(&hs).unwrap().instance).unwrap().is_yes());
    let sc = SetSystem::new(2, vec![vec![0], vec![1], vec![0, 1]], 1).unwrap();
    assert!(solve_brute(&gen_set_cover_split(&sc).unwrap().instance).unwrap().is_yes());
    let sc_no = SetSystem::new(2, vec![vec![0], vec![1]], 1).unwrap();
    assert!(!solve_brute(&gen_set_cover_split(&sc_no).unwrap().instance).unwrap().is_yes());

    let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let g = gen_domset_reduction(&k2, 1, DomVariant::Cluster).unwrap();
    assert_eq!(g.instance.n(), 7);
    assert!(solve_brute(&g.instance).unwrap().is_yes());
    // two isolated vertices cannot be dominated by one
    let e2 = Graph::from_edges(2, &[]).unwrap();
    let g = gen_domset_reduction(&e2, 1, DomVariant::Tree).unwrap();
    assert!(!solve_brute(&g.instance).unwrap().is_yes());
}

#[test]
fn mcc_star_certificate_tracks_the_clique() {
    let p = PartitionedGraph::new(3, 2, vec![(0, 0, 1, 1), (1, 1, 2, 0), (0, 0, 2, 0), (0, 1, 2, 1)], None).unwrap();
    assert_eq!(p.find_pattern(), Some(vec![0, 1, 0]));
    let g = gen_mcc_star(&p).unwrap();
    let w = g.solve_designated().unwrap();
    let w = w.witness().unwrap();
    assert!(w.contains(&g.certificate.vertex("u:1:1").unwrap()));
    assert!(!w.contains(&g.certificate.vertex("u:0:1").unwrap()));
    assert!(w.contains(&g.certificate.vertex("e:0:0:2:0").unwrap()));
}
