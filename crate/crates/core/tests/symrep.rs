mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symgen::perm::Perm;
use symgen::progenitor::Word;
use symgen::symrep::{Mode, SymElement};

use common::{context, random_perm, random_sym, FIXTURES};

#[test]
fn roundtrip_and_agreement() {
    for name in FIXTURES {
        let ctx = context(name);
        let control = ctx.image().spec().control_group().elements().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let p = random_perm(ctx.image(), &mut rng);
            let e = ctx.per2sym(&p).unwrap();
            assert_eq!(ctx.sym2per(&e).unwrap(), p, "{name}");
            let a = random_sym(&ctx, &control, &mut rng);
            let b = random_sym(&ctx, &control, &mut rng);
            let pure = ctx.mult(&a, &b, Mode::Rewrite).unwrap();
            let via = ctx.mult(&a, &b, Mode::Image).unwrap();
            assert_eq!(pure, via, "{name}: {a:?} * {b:?}");
            assert_eq!(
                ctx.canon(&a).unwrap(),
                ctx.per2sym(&ctx.sym2per(&a).unwrap()).unwrap(),
                "{name}"
            );
        }
    }
}

#[test]
fn identity_and_generators() {
    for name in FIXTURES {
        let ctx = context(name);
        let img = ctx.image();
        assert_eq!(
            ctx.per2sym(&Perm::identity(img.index())).unwrap(),
            ctx.identity()
        );
        for i in 1..=ctx.n() {
            let e = ctx.per2sym(img.t(i)).unwrap();
            assert!(e.control().is_identity());
            assert_eq!(e.word(), &Word::new(vec![i]));
            let g = SymElement::generator(ctx.n(), i);
            assert_eq!(
                ctx.invert_sym(&g, Mode::Rewrite).unwrap(),
                ctx.canon(&g).unwrap()
            );
        }
    }
}
