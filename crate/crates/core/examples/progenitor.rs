//! Building a progenitor by hand and deriving its rewriting rules.

use symgen::dcenum::{build_image, verify_relators_in_image};
use symgen::fpgroup::{Presentation, DEFAULT_MAX_COSETS};
use symgen::perm::Perm;
use symgen::progenitor::{
    build_presentation, derive_rules, relator_power_expand, ProgenitorSpec, Relator, RuleKind, Word,
};

fn main() -> symgen::Result<()> {
    let gens = vec![
        Perm::parse_cycles("(1,2,3)", 3)?,
        Perm::parse_cycles("(1,2)", 3)?,
    ];
    let n = Presentation::parse("a, b | a^3, b^2, (a*b)^2")?;
    let relators = vec![
        Relator::new(n.parse_word("a")?, Word::new(vec![1])).with_power(10),
        Relator::new(n.parse_word("b")?, Word::new(vec![1])).with_power(6),
    ];
    let spec = ProgenitorSpec::new(gens, n, relators, None)?;

    let pp = build_presentation(&spec)?;
    println!("{}", pp.presentation);

    let (pi, w) = relator_power_expand(&spec.control_gens()[0], 1, 10);
    println!("[(1,2,3) t1]^10 = {pi} {:?}", w.letters());

    let rules = derive_rules(&spec)?;
    println!(
        "{} rules: {} shortening, {} swaps",
        rules.len(),
        rules.count(RuleKind::Shortening),
        rules.count(RuleKind::Swap)
    );
    for r in rules.rules().iter().take(6) {
        println!(
            "  {:?} -> {} {:?}",
            r.pattern.letters(),
            r.perm,
            r.replacement.letters()
        );
    }

    let img = build_image(&spec, None, DEFAULT_MAX_COSETS)?;
    println!("image: index {}, order {}", img.index(), img.order());
    for check in verify_relators_in_image(&spec, &img)? {
        println!("  {} holds", check.relator);
    }
    Ok(())
}
