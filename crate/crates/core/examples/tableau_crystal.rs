//! KN tableaux: reading words, operators, and classical components.

use kr_crystals::crystal::generate_component;
use kr_crystals::tableau::highest_tableau;
use kr_crystals::{CartanSpec, Crystal, KNTableau, Partition, TableauCrystal};

fn main() -> kr_crystals::Result<()> {
    let d4 = CartanSpec::d(4)?;
    let tc = TableauCrystal::new(d4);
    let t = KNTableau::from_ints(&[&[1, 2], &[2, -2]])?;
    println!("tableau (rows top to bottom): {}", t.pretty());
    let word: Vec<String> = t.reading_word().iter().map(|c| c.to_string()).collect();
    println!("reading word: {}", word.join(" "));
    println!("weight: {:?}", tc.weight(&t).0);
    for i in 1..=4 {
        let show = |x: Option<KNTableau>| x.map(|x| x.pretty()).unwrap_or_else(|| "0".into());
        println!("  e_{i}: {:<14} f_{i}: {}", show(tc.e(i, &t)), show(tc.f(i, &t)));
    }

    for (rows, name) in [(vec![1], "B(Λ1)"), (vec![1, 1], "B(Λ2)"), (vec![2], "B(2Λ1)"), (vec![2, 2], "B(2Λ2)")] {
        let lam = Partition::new(rows)?;
        let g = generate_component(&tc, &highest_tableau(&lam), &d4.classical_indices(), 100_000)?;
        println!("{name} in D_4: {} elements, {} arrows", g.nodes().len(), g.edges().len());
    }
    Ok(())
}
