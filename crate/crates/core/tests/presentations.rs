use symgen::fpgroup::{todd_coxeter, word_image, FreeWord, Presentation, DEFAULT_MAX_COSETS};
use symgen::perm::PermGroup;

const U3_PROGRAM: &str = "x, y, t, s | x^7, y^2, t^2, (x^-1 * t)^2, (y * x)^3, \
    t * x^-1 * y * x * t * y, x^2 * y * x^3 * y * x^-4 * y * x^-4 * y*x, s^2, \
    (s^(x^3), y), (s^(x^4), x*y), t * s * s^t * s, y * (s * s^(t * x^6))^2";

#[test]
fn u3_program_presentation() {
    let p = Presentation::parse(U3_PROGRAM).unwrap();
    assert_eq!(p.num_generators(), 4);
    assert_eq!(p.relators().len(), 12);
    let control = vec![
        FreeWord::generator(1),
        FreeWord::generator(2),
        FreeWord::generator(3),
    ];
    let table = todd_coxeter(&p, &control, DEFAULT_MAX_COSETS).unwrap();
    assert_eq!(table.index(), 36);
    let gens = table.coset_action().unwrap();
    let g = PermGroup::new(36, gens.clone()).unwrap();
    assert_eq!(g.order(), 12096);

    let words: Vec<FreeWord> = (1..=7)
        .map(|i| p.parse_word(&format!("s^(x^{i})")).unwrap())
        .chain((8..=14).map(|i| p.parse_word(&format!("(s^t)^(x^{})", 14 - i)).unwrap()))
        .collect();
    let ts: Vec<_> = words
        .iter()
        .map(|w| word_image(&gens, w).unwrap())
        .collect();
    for (i, t) in ts.iter().enumerate() {
        assert_eq!(t.order(), 2);
        assert!(!ts[..i].contains(t));
    }
    let mut points: Vec<usize> = ts.iter().map(|t| t.apply(1)).collect();
    points.sort();
    points.dedup();
    assert_eq!(points.len(), 14);
}

#[test]
fn control_presentations_are_faithful() {
    for (text, order) in [
        ("x, y | x^5, y^2, (x*y)^3", 60),
        ("a, b | a^3, b^2, (a*b)^2", 6),
        ("x, y, t | x^7, y^2, t^2, (x^-1*t)^2, (y*x)^3, t*x^-1*y*x*t*y, x^2*y*x^3*y*x^-4*y*x^-4*y*x", 336),
    ] {
        let p = Presentation::parse(text).unwrap();
        let table = todd_coxeter(&p, &[], DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(table.index(), order, "{text}");
    }
}
