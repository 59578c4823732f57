mod common;

use std::collections::{HashSet, VecDeque};

use symgen::dcenum::double_cosets;
use symgen::fpgroup::{todd_coxeter, FreeWord, Presentation};
use symgen::perm::{Perm, PermGroup};
use symgen::progenitor::{build_presentation, conjugate_rule, derive_rules, RuleKind};

use common::{image, load, FIXTURES};

fn closure(gens: &[Perm]) -> HashSet<Vec<usize>> {
    let deg = gens[0].degree();
    let start = Perm::identity(deg);
    let mut seen = HashSet::from([start.images()]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = &p * g;
            if seen.insert(q.images()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

fn pgl27() -> Vec<Perm> {
    [
        "(1,2,3,4,5,6,7)(14,13,12,11,10,9,8)",
        "(2,6)(4,5)(14,10)(13,12)",
        "(7,14)(1,8)(2,9)(3,10)(4,11)(5,12)(6,13)",
    ]
    .iter()
    .map(|c| Perm::parse_cycles(c, 14).unwrap())
    .collect()
}

#[test]
fn l2_5_control_group() {
    let loaded = load("l2_19");
    let labels = loaded.spec.labels();
    let n = loaded.spec.control_group();
    assert_eq!(n.order(), 60);
    assert_eq!(closure(n.generators()).len(), 60);
    let xy = &n.generators()[0] * &n.generators()[1];
    assert_eq!(xy.order(), 3);
    assert_eq!(labels.parse_perm("(inf,0,1)(2,4,3)").unwrap().order(), 3);
    let inf = labels.index_of("∞").unwrap();
    let stab = n.point_stabilizer(inf);
    assert_eq!(stab.order(), 10);
    let orbits: Vec<String> = stab
        .orbits()
        .iter()
        .map(|o| labels.format_word(&symgen::progenitor::Word::new(o.clone())))
        .collect();
    assert_eq!(orbits, ["∞", "0.1.2.3.4"]);
}

#[test]
fn pgl27_on_fourteen_points() {
    let gens = pgl27();
    let n = PermGroup::new(14, gens.clone()).unwrap();
    let all = closure(&gens);
    assert_eq!(n.order(), 336);
    assert_eq!(all.len(), 336);
    assert_eq!(n.point_stabilizer(7).order(), 24);

    let pair = n.setwise_stabilizer(&[7, 14]).unwrap();
    let brute = all
        .iter()
        .filter(|g| [g[6], g[13]].iter().all(|&p| p == 7 || p == 14))
        .count();
    assert_eq!(pair.order(), brute as u128);
    assert_eq!(336 / pair.order(), 28);

    let ns71 = PermGroup::new(
        14,
        [
            "(2,6)(4,5)(10,14)(12,13)",
            "(1,13,7,12)(2,9,6,10,5,11,4,14)(3,8)",
        ]
        .iter()
        .map(|c| Perm::parse_cycles(c, 14).unwrap())
        .collect(),
    )
    .unwrap();
    let pairs = [[1, 7], [12, 13], [3, 8]];
    let keeps = |g: &Vec<usize>| {
        pairs.iter().all(|pr| {
            let mut im = [g[pr[0] - 1], g[pr[1] - 1]];
            im.sort();
            pairs.contains(&im)
        })
    };
    assert_eq!(
        ns71.order(),
        all.iter().filter(|g| keeps(g)).count() as u128
    );
    assert_eq!(ns71.order(), 16);
    assert_eq!(n.right_transversal(&ns71).unwrap().len(), 21);
}

#[test]
fn u3_control_and_stabilizers() {
    let img = image("u3_3");
    let labels = img.spec().labels();
    let n = img.spec().control_group();
    assert_eq!(n.order(), 336);
    let stab = n.point_stabilizer(1);
    assert_eq!(stab.order(), 24);
    let graph = double_cosets(&img).unwrap();
    let d = graph.node_by_name("𝟎𝟏").unwrap();
    let orbits: Vec<usize> = d.stabilizer.orbits().iter().map(Vec::len).collect();
    let mut sizes = orbits.clone();
    sizes.sort();
    assert_eq!(sizes, [2, 4, 8]);
    let two = d
        .stabilizer
        .orbits()
        .into_iter()
        .find(|o| o.len() == 2)
        .unwrap();
    let mut two: Vec<&str> = two.iter().map(|&i| labels.display(i)).collect();
    two.sort();
    assert_eq!(two, ["1", "𝟑"]);
    let four = d
        .stabilizer
        .orbits()
        .into_iter()
        .find(|o| o.len() == 4)
        .unwrap();
    let mut four: Vec<&str> = four.iter().map(|&i| labels.display(i)).collect();
    four.sort();
    assert_eq!(four, ["5", "6", "𝟎", "𝟏"]);
}

#[test]
fn u3_program_words_and_identification() {
    let loaded = load("u3_3");
    let img = image("u3_3");
    let pp = build_presentation(&loaded.spec).unwrap();
    let s = FreeWord::generator(pp.presentation.num_generators());
    let x = FreeWord::generator(1);
    let t1 = symgen::fpgroup::word_image(img.gens_image(), &s.conj(&x)).unwrap();
    assert!(img.ts().contains(&t1));
    for g in img.control_image().generators() {
        assert_eq!(img.identify_control(g).unwrap(), *g);
        assert_eq!(g.apply(1), 1);
    }
}

#[test]
fn coset_enumeration_ignores_relator_order() {
    for name in FIXTURES {
        let loaded = load(name);
        let pp = build_presentation(&loaded.spec).unwrap();
        let mut rels = pp.presentation.relators().to_vec();
        rels.reverse();
        rels.rotate_left(2);
        let shuffled = Presentation::new(pp.presentation.generator_names().to_vec(), rels).unwrap();
        let a = todd_coxeter(&pp.presentation, &pp.control_words, 100_000).unwrap();
        let b = todd_coxeter(&shuffled, &pp.control_words, 100_000).unwrap();
        assert_eq!(a.index(), b.index());
        for r in pp.presentation.relators() {
            for c in 1..=a.index() {
                assert_eq!(a.trace(c, r), Some(c));
            }
        }
        for w in &pp.control_words {
            assert_eq!(a.trace(1, w), Some(1));
        }
    }
}

#[test]
fn rules_hold_in_the_image() {
    for name in FIXTURES {
        let img = image(name);
        let rules = derive_rules(img.spec()).unwrap();
        let n = img.spec().control_group();
        for r in rules.rules() {
            let lhs = img.word_perm(&r.pattern);
            let rhs = &img.control_to_image(&r.perm).unwrap() * &img.word_perm(&r.replacement);
            assert_eq!(lhs, rhs, "{name}: {:?}", r.pattern);
            assert!(r.replacement.len() <= r.pattern.len());
            for g in n.generators() {
                let c = conjugate_rule(r, g);
                let found = rules
                    .get(c.pattern.letters())
                    .or_else(|| rules.get(c.replacement.letters()));
                assert!(
                    found.is_some(),
                    "{name}: conjugate of {:?} missing",
                    r.pattern
                );
            }
        }
    }
    let u3 = derive_rules(image("u3_3").spec()).unwrap();
    assert!(u3.count(RuleKind::Shortening) >= 14);
    assert!(u3.count(RuleKind::Swap) > 0);
}

#[test]
fn double_coset_invariants() {
    for name in FIXTURES {
        let img = image(name);
        let graph = double_cosets(&img).unwrap();
        let n = img.control_image().order();
        assert!(graph.is_complete());
        assert_eq!(graph.index(), img.index());
        for (c, w) in img.cst_words().iter().enumerate() {
            assert_eq!(img.point_of(w), c + 1);
        }
        for (a, d) in graph.nodes.iter().enumerate() {
            assert_eq!(d.size() as u128 * d.stabilizer_order(), n);
            let fixing = img
                .spec()
                .control_group()
                .pointwise_stabilizer(d.rep.letters());
            assert!(fixing.is_subgroup_of(&d.stabilizer));
            assert_eq!(
                d.edges.iter().map(|e| e.orbit_size()).sum::<usize>(),
                img.n()
            );
            for b in 0..graph.nodes.len() {
                let out: usize = d
                    .edges
                    .iter()
                    .filter(|e| e.target == b)
                    .map(|e| e.orbit_size())
                    .sum();
                let back: usize = graph.nodes[b]
                    .edges
                    .iter()
                    .filter(|e| e.target == a)
                    .map(|e| e.orbit_size())
                    .sum();
                assert_eq!(
                    d.size() * out,
                    graph.nodes[b].size() * back,
                    "{name}: {a} -> {b}"
                );
            }
        }
    }
}
