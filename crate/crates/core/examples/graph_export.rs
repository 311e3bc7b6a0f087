//! JSON and DOT renderings of the crystal graph of `B^{2,1}` in type `D_4^(1)`.

use kr_crystals::{CartanSpec, KRSpec, KrCrystal, KrElement};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let kr = KrCrystal::build(KRSpec::new(CartanSpec::d(4)?, 2, 1)?, 10_000)?;
    let g = kr.graph(&kr.cartan().affine_indices());
    let dir = std::env::temp_dir().join("kr-crystals-graph");
    std::fs::create_dir_all(&dir)?;

    let js = g.to_json(|t| serde_json::to_value(KrElement::Tableau { cols: t.clone() }).unwrap());
    std::fs::write(dir.join("b21.json"), serde_json::to_string_pretty(&js)?)?;
    let dot = g.to_dot("B21", |t| t.pretty());
    std::fs::write(dir.join("b21.dot"), &dot)?;

    let zero_arrows = g.edges().iter().filter(|e| e.1 == 0).count();
    println!("{} nodes, {} arrows ({zero_arrows} of colour 0)", g.nodes().len(), g.edges().len());
    println!("wrote {}", dir.display());
    println!("{}", dot.lines().take(6).collect::<Vec<_>>().join("\n"));
    Ok(())
}
