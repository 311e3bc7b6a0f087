//! The signature rule for `e_i`, `f_i` on tensor products.

use kr_crystals::crystal::{reduce_signature, Signature, SignatureRule, TensorProduct};
use kr_crystals::tableau::VectorCrystal;
use kr_crystals::{CartanSpec, Crystal, Dir, Letter};

fn main() -> kr_crystals::Result<()> {
    // three factors with (ε, φ) = (1,2), (1,1), (2,1)
    let blocks = [(1, 2), (1, 1), (2, 1)];
    let sig = Signature::from_blocks(&blocks);
    println!("signature −++ · −+ · −−+ reduces to (ε, φ) = {:?}", reduce_signature(&sig));
    let rule = SignatureRule::new(&blocks);
    println!("e acts on factor {:?}, f acts on factor {:?}", rule.factor(Dir::E), rule.factor(Dir::F));

    // the same rule on words in the vector representation of D_4
    let d4 = CartanSpec::d(4)?;
    let v = VectorCrystal::new(d4);
    let tp = TensorProduct::new(vec![&v, &v, &v]);
    let word = vec![Letter(1), Letter(2), Letter(1)];
    for i in 1..=4 {
        let show = |w: Option<Vec<Letter>>| match w {
            Some(w) => w.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ⊗ "),
            None => "0".into(),
        };
        println!(
            "i = {i}: (ε, φ) = {:?}, f_i(1 ⊗ 2 ⊗ 1) = {}, e_i = {}",
            tp.eps_phi(i, &word),
            show(tp.f(i, &word)),
            show(tp.e(i, &word))
        );
    }
    Ok(())
}
