//! Converting between permutations and `pi | w` form in the U3(3):2 image,
//! and multiplying two elements both ways.

use std::path::PathBuf;

use symgen::dcenum::build_image;
use symgen::fpgroup::DEFAULT_MAX_COSETS;
use symgen::spec_file::GroupSpecFile;
use symgen::symrep::{Mode, SymContext, SymElement};

fn main() -> symgen::Result<()> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/u3_3.json");
    let loaded = GroupSpecFile::read(&path)?.load()?;
    let ctx = SymContext::new(build_image(
        &loaded.spec,
        loaded.t_words.as_deref(),
        DEFAULT_MAX_COSETS,
    )?)?;
    let labels = loaded.spec.labels();

    let e = SymElement::parse("id | 𝟎.0.𝟎", labels)?;
    let p = ctx.sym2per(&e)?;
    println!("{} is the permutation {p}", e.format(labels));
    println!("back again: {}", ctx.per2sym(&p)?.format(labels));

    let pi = ctx.per2sym(&ctx.sym2per(&SymElement::parse("id | 𝟐.3.𝟐", labels)?)?)?;
    let a = SymElement::parse("(𝟎,0)(𝟏,1)(𝟐,2)(𝟑,3)(𝟒,4)(𝟓,5)(𝟔,6) | 𝟏.𝟐", labels)?;
    let b = SymElement::new(pi.control().clone(), labels.parse_word("𝟓.6")?);
    println!("a = {}", a.format(labels));
    println!("b = {}", b.format(labels));
    let by_rules = ctx.mult(&a, &b, Mode::Rewrite)?;
    let by_image = ctx.mult(&a, &b, Mode::Image)?;
    println!("ab by rewriting: {}", by_rules.format(labels));
    println!("ab in the image: {}", by_image.format(labels));

    let inv = ctx.invert_sym(&by_rules, Mode::Rewrite)?;
    println!("(ab)^-1 = {}", inv.format(labels));
    println!("flattened: {:?}", inv.flatten());
    Ok(())
}
