#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symgen::dcenum::{build_image, SymImage};
use symgen::perm::Perm;
use symgen::progenitor::Word;
use symgen::spec_file::{GroupSpecFile, LoadedSpec};
use symgen::symrep::{SymContext, SymElement};

pub const FIXTURES: [&str; 3] = ["l2_19", "u3_3", "5sq_d6"];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

pub fn load(name: &str) -> LoadedSpec {
    GroupSpecFile::read(&fixture_path(name))
        .unwrap()
        .load()
        .unwrap()
}

pub fn image(name: &str) -> SymImage {
    let l = load(name);
    build_image(&l.spec, l.t_words.as_deref(), 100_000).unwrap()
}

pub fn context(name: &str) -> SymContext {
    SymContext::new(image(name)).unwrap()
}

pub fn random_perm(img: &SymImage, rng: &mut ChaCha8Rng) -> Perm {
    let gens = img.group().generators();
    let mut p = Perm::identity(img.index());
    for _ in 0..40 {
        p = &p * &gens[rng.gen_range(0..gens.len())];
    }
    p
}

pub fn random_word(n: usize, max_len: usize, rng: &mut ChaCha8Rng) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| rng.gen_range(1..=n)).collect())
}

pub fn random_sym(ctx: &SymContext, control: &[Perm], rng: &mut ChaCha8Rng) -> SymElement {
    let pi = control[rng.gen_range(0..control.len())].clone();
    SymElement::new(pi, random_word(ctx.n(), 6, rng))
}

/// The fixture with its label list shuffled: the same group with the
/// symmetric generators renumbered.
pub fn shuffled(name: &str, rng: &mut ChaCha8Rng) -> LoadedSpec {
    use rand::seq::SliceRandom;
    let mut file = GroupSpecFile::read(&fixture_path(name)).unwrap();
    let mut order: Vec<usize> = (0..file.labels.len()).collect();
    order.shuffle(rng);
    file.labels = order.iter().map(|&i| file.labels[i].clone()).collect();
    if let Some(d) = &file.display {
        file.display = Some(order.iter().map(|&i| d[i].clone()).collect());
    }
    file.load().unwrap()
}
