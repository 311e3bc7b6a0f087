//! One R-matrix image computed by propagation and by the closed form.

use kr_crystals::kr::CoordElement;
use kr_crystals::pm::phi;
use kr_crystals::{brute_force_r, closed_form_r, closed_form_rinv, CartanSpec, KNTableau, KRSpec, KrCrystal};

fn main() -> kr_crystals::Result<()> {
    let d4 = CartanSpec::d(4)?;
    let spec = KRSpec::new(d4, 2, 2)?;
    let big = KrCrystal::build(spec, 100_000)?;
    let row = KrCrystal::build(KRSpec::new(d4, 1, 1)?, 100_000)?;
    let table = brute_force_r(&big, &row, 1 << 24)?;

    let column = KNTableau::from_ints(&[&[1, 2]])?;
    let one = CoordElement::top(&d4, 1);
    let src = (big.id_of(&column).unwrap(), row.id_of_coord(&one).unwrap());
    let (y, b) = table.image(src);
    println!("source      {} ⊗ {one}", column.pretty());
    println!("propagated  {} ⊗ {}   H = {}", row.coord_of(y)?, big.element(b).pretty(), table.energy(src));

    let (p, h) = closed_form_r(&spec, &column.shape(), &one)?;
    println!("closed form 1 ⊗ Φ({p}) = 1 ⊗ {}   H = {h}", phi(&d4, &p)?.pretty());
    let (mu, x) = closed_form_rinv(&spec, &p, 1)?;
    println!("inverse     μ = {mu}, x = {x}");
    Ok(())
}
