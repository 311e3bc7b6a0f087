//! The energy on every classically highest element of `B^{r,k} ⊗ B^{1,l}`,
//! and how often each value occurs over the whole tensor product.

use std::collections::BTreeMap;

use kr_crystals::kr::enumerate_highest_left;
use kr_crystals::rmatrix::closed_form_r;
use kr_crystals::{brute_force_r, CartanSpec, KRSpec, KrCrystal};

fn main() -> kr_crystals::Result<()> {
    let cartan = CartanSpec::b(3)?;
    let spec = KRSpec::new(cartan, 2, 2)?;
    let l = 2;
    let big = KrCrystal::build(spec, 100_000)?;
    let row = KrCrystal::build(KRSpec::new(cartan, 1, l)?, 100_000)?;
    let table = brute_force_r(&big, &row, 1 << 24)?;

    println!("{spec} ⊗ B^(1,{l})");
    println!("{:<8} {:<8} {:<16} {:>3}", "μ", "x", "P", "H");
    for (mu, x) in enumerate_highest_left(&spec, l) {
        let (p, h) = closed_form_r(&spec, &mu, &x)?;
        let src = (big.highest_of(&mu).unwrap(), row.id_of_coord(&x).unwrap());
        assert_eq!(table.energy(src), h);
        println!("{:<8} {:<8} {:<16} {h:>3}", mu.to_string(), x.to_string(), p.to_string());
    }

    let mut dist: BTreeMap<i64, usize> = BTreeMap::new();
    for (_, _, h) in table.rows() {
        *dist.entry(h).or_default() += 1;
    }
    println!("energy distribution over {} elements: {dist:?}", table.len());
    Ok(())
}
