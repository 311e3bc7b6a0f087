//! ±-diagrams: the tableau `Φ(P)`, the word raising it to highest weight,
//! and the involution `𝔖`.

use kr_crystals::pm::{enumerate_pm_outer, phi, phi_inv, s_map, to_highest_word, Column, ColumnKind};
use kr_crystals::{CartanSpec, PMDiagram, Partition};

fn main() -> kr_crystals::Result<()> {
    use ColumnKind::*;
    let cols = [(Plus, 4), (Minus, 4), (Dot, 3), (Plus, 3), (PlusMinus, 3), (Plus, 2), (Minus, 2), (Dot, 1), (Plus, 1)];
    let p = PMDiagram::from_columns(&cols.map(|(k, h)| Column::of_kind(k, h).unwrap()))?;
    println!("P = {p}, outer {}, inner {}", p.outer(), p.inner());
    for spec in [CartanSpec::d(6)?, CartanSpec::b(5)?, CartanSpec::a2odd(5)?] {
        let t = phi(&spec, &p)?;
        println!("{spec}: Φ(P) = {}", t.pretty());
        println!("  raising word {}", to_highest_word(&spec, &p)?);
        assert_eq!(phi_inv(&spec, &t)?, p);
    }

    // 𝔖 on the diagrams of B^{2,2}
    let d4 = CartanSpec::d(4)?;
    for lam in [Partition::rectangle(2, 2), Partition::new(vec![1, 1])?, Partition::empty()] {
        for q in enumerate_pm_outer(&d4, &lam) {
            println!("𝔖 {:<12} = {}", q.to_string(), s_map(&q, 2, 2)?);
        }
    }
    Ok(())
}
