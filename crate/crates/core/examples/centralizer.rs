//! Centralizers computed in the image and reported in `pi | w` form.

use std::path::PathBuf;

use symgen::dcenum::build_image;
use symgen::fpgroup::DEFAULT_MAX_COSETS;
use symgen::spec_file::GroupSpecFile;
use symgen::symrep::{SymContext, SymElement};

fn main() -> symgen::Result<()> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/u3_3.json");
    let loaded = GroupSpecFile::read(&path)?.load()?;
    let ctx = SymContext::new(build_image(
        &loaded.spec,
        loaded.t_words.as_deref(),
        DEFAULT_MAX_COSETS,
    )?)?;
    let labels = loaded.spec.labels();

    for text in [
        "id | 𝟎",
        "id | 𝟎.𝟏",
        "(𝟎,0)(𝟏,1)(𝟐,2)(𝟑,3)(𝟒,4)(𝟓,5)(𝟔,6) |",
    ] {
        let a = SymElement::parse(text, labels)?;
        let (order, gens) = ctx.cenelt(&a)?;
        println!("C({text}) has order {order}, generated by");
        for g in gens {
            println!("  {}", g.format(labels));
        }
    }
    Ok(())
}
