mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symgen::fpgroup::{todd_coxeter, FreeWord, Presentation};
use symgen::perm::{Perm, PermGroup};
use symgen::progenitor::{LabelMap, Word};
use symgen::symrep::{unify, Mode, SymElement};

use common::{context, random_sym, FIXTURES};

fn perm(deg: usize) -> impl Strategy<Value = Perm> {
    Just((1..=deg).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(&v).unwrap())
}

fn perm_pair() -> impl Strategy<Value = (Perm, Perm, Perm)> {
    (1usize..=10).prop_flat_map(|d| (perm(d), perm(d), perm(d)))
}

fn group() -> impl Strategy<Value = PermGroup> {
    (2usize..=8).prop_flat_map(|d| {
        prop::collection::vec(perm(d), 1..=3).prop_map(move |g| PermGroup::new(d, g).unwrap())
    })
}

fn free_word() -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(
        prop_oneof![Just(1), Just(-1), Just(2), Just(-2), Just(3), Just(-3)],
        0..12,
    )
    .prop_map(FreeWord::new)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn perm_arithmetic((p, q, r) in perm_pair()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert!((&p * &p.invert()).is_identity());
        prop_assert!(p.pow(p.order() as i64).is_identity());
        prop_assert_eq!(p.conjugate(&q), &(&q.invert() * &p) * &q);
        for k in 1..=p.degree() {
            prop_assert_eq!((&p * &q).apply(k), q.apply(p.apply(k)));
        }
        prop_assert_eq!(Perm::parse_cycles(&p.to_string(), p.degree()).unwrap(), p);
    }

    #[test]
    fn chain_membership(g in group(), x in (0usize..1000)) {
        let elements = g.elements().unwrap();
        prop_assert_eq!(elements.len() as u128, g.order());
        let e = &elements[x % elements.len()];
        prop_assert!(g.contains(e));
        let w = g.word_for(e).unwrap();
        prop_assert_eq!(&g.evaluate(&w).unwrap(), e);
        let orbits: usize = g.orbits().iter().map(Vec::len).sum();
        prop_assert_eq!(orbits, g.degree());
    }

    #[test]
    fn transversal_covers_cosets(g in group(), k in 1usize..=8) {
        let k = (k - 1) % g.degree() + 1;
        let h = g.point_stabilizer(k);
        let reps = g.right_transversal(&h).unwrap();
        prop_assert_eq!(reps.len() as u128 * h.order(), g.order());
        prop_assert!(reps[0].is_identity());
        for r in &reps {
            prop_assert_eq!(&h.min_coset_rep(r), r);
        }
    }

    #[test]
    fn centralizer_commutes(g in group(), x in (0usize..1000)) {
        let elements = g.elements().unwrap();
        let p = &elements[x % elements.len()];
        let c = g.centralizer(p).unwrap();
        let count = elements.iter().filter(|e| e.commutes_with(p)).count() as u128;
        prop_assert_eq!(c.order(), count);
        prop_assert!(c.generators().iter().all(|h| h.commutes_with(p)));
    }

    #[test]
    fn free_words(a in free_word(), b in free_word()) {
        let r = a.reduce();
        prop_assert!(r.is_reduced());
        prop_assert!((&a * &a.inverse()).reduce().is_empty());
        prop_assert_eq!((&a * &b).inverse().reduce(), (&b.inverse() * &a.inverse()).reduce());
        let p = Presentation::new(vec!["a".into(), "b".into(), "c".into()], vec![]).unwrap();
        prop_assert_eq!(p.parse_word(&r.display_with(p.generator_names())).unwrap(), r);
    }

    #[test]
    fn coset_enumeration_matches_permutations(g in group()) {
        let gens = g.generators().to_vec();
        let names: Vec<String> = (0..gens.len()).map(|i| format!("g{i}")).collect();
        let mut rels = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            rels.push(FreeWord::generator(i + 1).pow(a.order() as i64));
        }
        let p = Presentation::new(names, rels).unwrap();
        if let Ok(table) = todd_coxeter(&p, &[], 2000) {
            prop_assert!(table.is_closed());
            let action = table.coset_action().unwrap();
            prop_assert_eq!(action.len(), gens.len());
            prop_assert!(table.index() as u128 >= g.order());
        }
    }

    #[test]
    fn element_text_roundtrip(f in 0usize..3, seed in any::<u64>()) {
        let ctx = &contexts()[f];
        let control = ctx.image().spec().control_group().elements().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_sym(ctx, &control, &mut rng);
        let labels: &LabelMap = ctx.image().spec().labels();
        prop_assert_eq!(SymElement::parse(&a.format(labels), labels).unwrap(), a.clone());
        prop_assert_eq!(SymElement::unflatten(ctx.n(), &a.flatten()).unwrap(), a.clone());
        let (pi, w) = unify(&ctx.identity(), &a).unwrap();
        prop_assert_eq!(&pi, a.control());
        prop_assert_eq!(&w, a.word());
    }

    #[test]
    fn homomorphism_and_inverse(f in 0usize..3, seed in any::<u64>()) {
        let ctx = &contexts()[f];
        let control = ctx.image().spec().control_group().elements().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_sym(ctx, &control, &mut rng);
        let b = random_sym(ctx, &control, &mut rng);
        let ab = ctx.mult(&a, &b, Mode::Rewrite).unwrap();
        prop_assert_eq!(ctx.sym2per(&ab).unwrap(), &ctx.sym2per(&a).unwrap() * &ctx.sym2per(&b).unwrap());
        let inv = ctx.invert_sym(&a, Mode::Rewrite).unwrap();
        prop_assert_eq!(ctx.sym2per(&inv).unwrap(), ctx.sym2per(&a).unwrap().invert());
        prop_assert_eq!(ctx.mult(&a, &inv, Mode::Rewrite).unwrap(), ctx.identity());
        let canon = ctx.canon(&a).unwrap();
        prop_assert!(!canon.word().has_adjacent_repeat());
        prop_assert_eq!(canon.word(), ctx.image().cst(ctx.image().point_of(canon.word())));
    }
}

fn contexts() -> &'static [symgen::symrep::SymContext] {
    use std::sync::OnceLock;
    static CONTEXTS: OnceLock<Vec<symgen::symrep::SymContext>> = OnceLock::new();
    CONTEXTS.get_or_init(|| FIXTURES.iter().map(|f| context(f)).collect())
}

#[test]
fn associativity_spot_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for ctx in contexts() {
        let control = ctx.image().spec().control_group().elements().unwrap();
        for _ in 0..100 {
            let (a, b, c) = (
                random_sym(ctx, &control, &mut rng),
                random_sym(ctx, &control, &mut rng),
                random_sym(ctx, &control, &mut rng),
            );
            let left = ctx
                .mult(&ctx.mult(&a, &b, Mode::Rewrite).unwrap(), &c, Mode::Rewrite)
                .unwrap();
            let right = ctx
                .mult(&a, &ctx.mult(&b, &c, Mode::Rewrite).unwrap(), Mode::Rewrite)
                .unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn u3_centralizer_of_generator() {
    let ctx = &contexts()[1];
    let a = SymElement::generator(ctx.n(), 1);
    let (order, gens) = ctx.cenelt(&a).unwrap();
    let p = ctx.sym2per(&a).unwrap();
    let count = ctx
        .image()
        .group()
        .elements()
        .unwrap()
        .iter()
        .filter(|g| g.commutes_with(&p))
        .count();
    assert_eq!(order, count as u128);
    assert_eq!(ctx.image().order() % order, 0);
    for g in &gens {
        assert_eq!(
            ctx.mult(g, &a, Mode::Rewrite).unwrap(),
            ctx.mult(&a, g, Mode::Rewrite).unwrap()
        );
    }
    let (full, _) = ctx.cenelt(&ctx.identity()).unwrap();
    assert_eq!(full, ctx.image().order());
}

#[test]
fn canon_examples() {
    let ctx = &contexts()[1];
    let labels = ctx.image().spec().labels();
    let e = SymElement::parse("id | 𝟎.0.𝟎", labels).unwrap();
    let c = ctx.canon(&e).unwrap();
    assert!(c.word().is_empty());
    assert_eq!(
        c.control(),
        &labels
            .parse_perm("(b0,0)(b1,1)(b2,2)(b3,3)(b4,4)(b5,5)(b6,6)")
            .unwrap()
    );
    assert!(ctx
        .canon(&SymElement::new(Perm::identity(14), Word::new(vec![3, 3])))
        .unwrap()
        .word()
        .is_empty());
    let a = SymElement::parse("id | 𝟎.1", labels).unwrap();
    let b = SymElement::parse("id | 1.𝟎", labels).unwrap();
    let pa = ctx.sym2per(&a).unwrap();
    let pi = ctx
        .per2sym(&(&pa * &ctx.sym2per(&b).unwrap().invert()))
        .unwrap();
    assert!(pi.word().is_empty());
    let b = SymElement::new(pi.control().clone(), b.word().clone());
    for mode in [Mode::Rewrite, Mode::Image] {
        assert!(ctx.equal_sym(&a, &b, mode).unwrap());
        assert!(ctx.equal_sym(&a, &ctx.canon(&a).unwrap(), mode).unwrap());
        assert!(!ctx.equal_sym(&a, &ctx.identity(), mode).unwrap());
    }
}
