//! Closed-form R-matrix against the propagation oracle over a range of specs.

use std::time::Instant;

use kr_crystals::verify::{self, TensorCase};
use kr_crystals::{CartanSpec, KRSpec};

fn main() -> kr_crystals::Result<()> {
    let cases = [
        (CartanSpec::d(4)?, 2, 2, 1),
        (CartanSpec::d(5)?, 3, 1, 2),
        (CartanSpec::b(3)?, 2, 1, 2),
        (CartanSpec::b(4)?, 3, 1, 1),
        (CartanSpec::a2odd(3)?, 3, 1, 1),
        (CartanSpec::a2odd(4)?, 2, 2, 1),
    ];
    let mut clean = true;
    for (cartan, r, k, l) in cases {
        let t = Instant::now();
        let spec = KRSpec::new(cartan, r, k)?;
        let case = TensorCase::build(spec, l, 1_000_000)?;
        let rep = verify::theorem_suite(&case)?;
        let energy = verify::energy_suite(&case);
        clean &= rep.is_clean() && energy.is_clean();
        println!(
            "{spec} ⊗ B^(1,{l}): {} × {} elements, {} highest, mismatches {} / inverse {} / energy {}  ({:.2?})",
            case.big.len(),
            case.row.len(),
            rep.highest_left,
            rep.theorem.failed,
            rep.inverse.failed,
            energy.failed,
            t.elapsed()
        );
    }
    println!("{}", if clean { "all agree" } else { "MISMATCHES FOUND" });
    Ok(())
}
