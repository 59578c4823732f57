//! Permutation group basics on A5 acting on six points.

use symgen::perm::{Perm, PermGroup};

fn main() -> symgen::Result<()> {
    let a = Perm::parse_cycles("(2,3,4,5,6)", 6)?;
    let b = Perm::parse_cycles("(1,2)(3,6)", 6)?;
    let g = PermGroup::new(6, vec![a.clone(), b.clone()])?;
    println!("order {}", g.order());
    println!(
        "base {:?}, orbit sizes {:?}",
        g.chain().base(),
        g.chain().orbit_sizes()
    );
    println!("transitive: {}", g.is_transitive());

    // points act from the right: a then b
    let ab = &a * &b;
    println!("ab = {ab}, order {}", ab.order());
    println!(
        "word for ab: {}",
        g.word_for(&ab)?.display_with(&["a".into(), "b".into()])
    );

    let h = g.point_stabilizer(1);
    println!("stabilizer of 1 has order {}", h.order());
    let reps = g.right_transversal(&h)?;
    println!("{} right coset representatives:", reps.len());
    for r in &reps {
        println!("  {r}  sends 1 to {}", r.apply(1));
    }

    let c = g.centralizer(&ab)?;
    println!("centralizer of ab has order {}", c.order());
    let pair = g.setwise_stabilizer(&[1, 2])?;
    println!("stabilizer of {{1,2}} has order {}", pair.order());
    Ok(())
}
