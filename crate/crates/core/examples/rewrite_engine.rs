//! Tracing the rewriting of a long word to normal form.

use std::path::PathBuf;

use symgen::dcenum::build_image;
use symgen::fpgroup::DEFAULT_MAX_COSETS;
use symgen::progenitor::RuleKind;
use symgen::spec_file::GroupSpecFile;
use symgen::symrep::{SymContext, SymElement};

fn main() -> symgen::Result<()> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/l2_19.json");
    let loaded = GroupSpecFile::read(&path)?.load()?;
    let ctx = SymContext::new(build_image(
        &loaded.spec,
        loaded.t_words.as_deref(),
        DEFAULT_MAX_COSETS,
    )?)?;
    let labels = loaded.spec.labels();
    let rules = ctx.rules();
    println!(
        "{} rules ({} shortening, {} swaps, {} from coset representatives), longest pattern {}",
        rules.len(),
        rules.count(RuleKind::Shortening),
        rules.count(RuleKind::Swap),
        rules.count(RuleKind::Completion),
        rules.max_pattern_len()
    );

    let e = SymElement::parse("id | 4.2.3.4.2.0.1.1.∞.3", labels)?;
    println!("start  {}", e.format(labels));
    let (result, steps) = ctx.canon_traced(&e)?;
    for s in &steps {
        let shown = SymElement::new(s.control.clone(), s.word.clone());
        println!("  @{} -{}  {}", s.position, s.removed, shown.format(labels));
    }
    println!(
        "normal form {} after {} steps",
        result.format(labels),
        steps.len()
    );
    Ok(())
}
