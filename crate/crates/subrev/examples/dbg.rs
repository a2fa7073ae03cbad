use subrev::*;
use subrev::completeness::*;
fn main() {
    let p = parse_presentation(
        "gens: a b c d\nrel: a b = b c = c a\nrel: b a = d b = a d\nrel: c a a = d b b\n",
    ).unwrap();
    let m = p.mirror();
    println!("mirror:\n{}", m.serialize());
    let v = check_completeness(&m, CompletenessMode::HomogeneousLetters, &Limits::default()).unwrap();
    println!("status {:?} limit {:?}", v.status, v.limit);
    for f in &v.failing {
        println!("fails: ({}, {}, {})  witness {:?}",
            m.word_to_string(&f.triple.0), m.word_to_string(&f.triple.1), m.word_to_string(&f.triple.2),
            f.witness.as_ref().map(|w| (m.word_to_string(&w.numerator), m.word_to_string(&w.denominator), m.signed_to_string(&w.residual))));
    }
}
