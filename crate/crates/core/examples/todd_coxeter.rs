//! Coset enumeration for a few small presentations.

use symgen::fpgroup::{todd_coxeter, FreeWord, Presentation, DEFAULT_MAX_COSETS};
use symgen::perm::PermGroup;

fn main() -> symgen::Result<()> {
    let a5 = Presentation::parse("<x, y | x^5, y^2, (x*y)^3>")?;
    let whole = todd_coxeter(&a5, &[], DEFAULT_MAX_COSETS)?;
    println!("{a5}: order {}", whole.index());

    let sub = [FreeWord::generator(1)];
    let table = todd_coxeter(&a5, &sub, DEFAULT_MAX_COSETS)?;
    let action = table.coset_action()?;
    let image = PermGroup::new(table.index(), action.clone())?;
    println!(
        "index of <x>: {}, action group order {}",
        table.index(),
        image.order()
    );
    for (name, g) in a5.generator_names().iter().zip(&action) {
        println!("  {name} -> {g}");
    }

    let pgl27 = Presentation::parse(
        "x, y, t | x^7, y^2, t^2, (x^-1*t)^2, (y*x)^3, t*x^-1*y*x*t*y, x^2*y*x^3*y*x^-4*y*x^-4*y*x",
    )?;
    println!(
        "second control group: order {}",
        todd_coxeter(&pgl27, &[], DEFAULT_MAX_COSETS)?.index()
    );

    match todd_coxeter(&Presentation::parse("a, b | a^2")?, &[], 500) {
        Err(e) => println!("infinite group: {e}"),
        Ok(t) => println!("unexpected index {}", t.index()),
    }
    Ok(())
}
