//! Verification suites shared by the CLI and the acceptance harness. Each
//! returns a [`Violations`] tally rather than panicking.

use std::collections::BTreeMap;

use crate::cartan::{classical_weights, pairing, CartanSpec, KRSpec, Partition};
use crate::crystal::{apply_word, generate_component, is_highest, Crystal, Dir, OpWord};
use crate::error::Result;
use crate::kr::{enumerate_highest_left, enumerate_highest_right, is_tensor_highest, CoordCrystal, KrCrystal};
use crate::pm::{enumerate_pm_outer, phi, phi_inv, restricted_weight, to_highest_word, PMDiagram};
pub use crate::rmatrix::Violations;
use crate::rmatrix::{
    brute_force_r, check_energy, check_inverse, check_r_table, verify_theorem, RTable, TheoremReport,
};
use crate::tableau::{highest_tableau, TableauCrystal};

fn count(c: &KrCrystal, dir: Dir, i: usize, b: u32) -> usize {
    let mut m = 0;
    let mut cur = b;
    while let Some(next) = c.apply(dir, i, &cur) {
        m += 1;
        cur = next;
    }
    m
}

/// Crystal axioms on every element and every `i ∈ I`, plus `σ`.
pub fn axioms_suite(c: &KrCrystal) -> Violations {
    let mut v = Violations::default();
    let cartan = *c.cartan();
    let n = cartan.n();
    let j = cartan.j_indices();
    for b in c.ids() {
        let w = c.weight(&b);
        for i in 0..=n {
            let alpha = cartan.simple_root(i).expect("i in I");
            if let Some(d) = c.f(i, &b) {
                v.check(c.e(i, &d) == Some(b), || format!("e_{i} f_{i} ≠ id on {}", c.element(b)));
                v.check(c.weight(&d) == w.sub(&alpha), || format!("wt(f_{i} b) ≠ wt(b) − α_{i} on {}", c.element(b)));
            }
            if let Some(d) = c.e(i, &b) {
                v.check(c.f(i, &d) == Some(b), || format!("f_{i} e_{i} ≠ id on {}", c.element(b)));
            }
            let (eps, ph) = c.eps_phi(i, &b);
            v.check((eps, ph) == (count(c, Dir::E, i, b), count(c, Dir::F, i, b)), || {
                format!("(ε_{i}, φ_{i}) disagree with string lengths on {}", c.element(b))
            });
            let h = if i == 0 { -(w.0[0] + w.0[1]) } else { pairing(&cartan, i, &w).expect("i in I_0") };
            v.check(ph as i64 - eps as i64 == h, || format!("φ_{i} − ε_{i} ≠ ⟨h_{i}, wt⟩ on {}", c.element(b)));
        }
        let s = c.sigma(b);
        v.check(c.sigma(s) == b, || format!("σ² ≠ id on {}", c.element(b)));
        for &jj in &j {
            for dir in [Dir::E, Dir::F] {
                v.check(c.apply(dir, jj, &b).map(|x| c.sigma(x)) == c.apply(dir, jj, &s), || {
                    format!("σ does not commute with {dir:?}_{jj} on {}", c.element(b))
                });
            }
        }
    }
    v
}

/// For `B^{1,l}`: the operators obtained through `σ` agree with the
/// coordinate formulas, for every `i ∈ I`.
pub fn coordinate_suite(c: &KrCrystal) -> Result<Violations> {
    let mut v = Violations::default();
    let cartan = *c.cartan();
    let cc = CoordCrystal::new(cartan, c.spec().k);
    v.check(c.spec().r == 1, || "coordinate model needs r = 1".into());
    if c.spec().r != 1 {
        return Ok(v);
    }
    v.check(cc.elements().len() == c.len(), || "element counts differ".into());
    for b in c.ids() {
        let x = c.coord_of(b)?;
        for i in 0..=cartan.n() {
            for dir in [Dir::E, Dir::F] {
                let via_sigma = c.apply(dir, i, &b).map(|d| c.coord_of(d)).transpose()?;
                let via_coord = cc.apply(dir, i, &x);
                v.check(via_sigma == via_coord, || {
                    format!("{dir:?}_{i} on {x}: σ route {via_sigma:?}, formula {via_coord:?}")
                });
            }
            v.check(c.eps_phi(i, &b) == cc.coord_eps_phi(i, &x), || format!("(ε_{i}, φ_{i}) differ on {x}"));
        }
    }
    Ok(v)
}

/// `(λ, #J-highest of restricted weight λ, #±-diagrams of shape Λ/λ)`.
pub fn branching_table(cartan: &CartanSpec, lam: &Partition, cap: usize) -> Result<Vec<(Partition, usize, usize)>> {
    let tc = TableauCrystal::new(*cartan);
    let g = generate_component(&tc, &highest_tableau(lam), &cartan.classical_indices(), cap)?;
    let j = cartan.j_indices();
    let mut counts: BTreeMap<Partition, (usize, usize)> = BTreeMap::new();
    for b in g.nodes().iter().filter(|b| is_highest(&tc, *b, &j)) {
        let key = restricted_weight(cartan, b).unwrap_or_else(Partition::empty);
        counts.entry(key).or_default().0 += 1;
    }
    for p in enumerate_pm_outer(cartan, lam) {
        counts.entry(p.inner().clone()).or_default().1 += 1;
    }
    Ok(counts.into_iter().map(|(k, (a, b))| (k, a, b)).collect())
}

/// Branching multiplicities for every `Λ` in the decomposition of `B^{r,k}`.
pub fn branching_suite(spec: &KRSpec, cap: usize) -> Result<Violations> {
    let mut v = Violations::default();
    for lam in classical_weights(spec) {
        for (inner, found, expect) in branching_table(&spec.cartan, &lam, cap)? {
            v.check(found == expect, || format!("Λ = {lam}, λ = {inner}: {found} J-highest, {expect} diagrams"));
        }
    }
    Ok(v)
}

/// `e_a Φ(P)` reaches the highest tableau of shape `outer(P)`, with every
/// block `e_i^m` of the word maximal.
pub fn word_is_maximal(cartan: &CartanSpec, p: &PMDiagram) -> std::result::Result<OpWord, String> {
    let tc = TableauCrystal::new(*cartan);
    let w = to_highest_word(cartan, p).map_err(|e| e.to_string())?;
    let mut cur = phi(cartan, p).map_err(|e| e.to_string())?;
    for &(i, m) in w.entries() {
        cur = apply_word(&tc, Dir::E, &OpWord(vec![(i, m)]), &cur).ok_or_else(|| format!("{p}: e_{i}^{m} vanished"))?;
        if tc.e(i, &cur).is_some() {
            return Err(format!("{p}: e_{i}^{m} is not maximal"));
        }
    }
    if !is_highest(&tc, &cur, &cartan.classical_indices()) || cur != highest_tableau(p.outer()) {
        return Err(format!("{p}: word ends at {cur}, not the highest tableau of {}", p.outer()));
    }
    Ok(w)
}

pub fn maximality_suite(cartan: &CartanSpec, diagrams: &[PMDiagram]) -> Violations {
    let mut v = Violations::default();
    for p in diagrams {
        let r = word_is_maximal(cartan, p);
        v.check(r.is_ok(), || r.unwrap_err());
    }
    v
}

/// `Φ^{-1}` followed by `Φ` fixes every `J`-highest element.
pub fn phi_round_trip_suite(c: &KrCrystal) -> Result<Violations> {
    let mut v = Violations::default();
    let cartan = *c.cartan();
    let j = cartan.j_indices();
    for b in c.ids().filter(|b| is_highest(c, b, &j)) {
        let t = c.element(b);
        let back = phi_inv(&cartan, t).and_then(|p| phi(&cartan, &p));
        v.check(back.as_ref().ok() == Some(t), || format!("Φ Φ^(-1) moves {t}"));
    }
    Ok(v)
}

/// Largest tensor product a [`TensorCase`] will tabulate.
pub const TENSOR_CAP: usize = 50_000_000;

/// `B^{r,k}` and `B^{1,l}` with both R-matrix tables.
pub struct TensorCase {
    pub big: KrCrystal,
    pub row: KrCrystal,
    pub forward: RTable,
    pub backward: RTable,
}

impl TensorCase {
    pub fn build(spec: KRSpec, l: usize, cap: usize) -> Result<Self> {
        let big = KrCrystal::build(spec, cap)?;
        let row = KrCrystal::build(KRSpec::new(spec.cartan, 1, l)?, cap)?;
        let forward = brute_force_r(&big, &row, TENSOR_CAP)?;
        let backward = brute_force_r(&row, &big, TENSOR_CAP)?;
        Ok(TensorCase { big, row, forward, backward })
    }

    pub fn l(&self) -> usize {
        self.row.spec().k
    }
}

/// Both highest-element enumerations against a scan of the full tensor products.
pub fn highest_suite(case: &TensorCase) -> Result<Violations> {
    let mut v = Violations::default();
    let (big, row) = (&case.big, &case.row);
    let cartan = *big.cartan();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for b in big.ids() {
        for y in row.ids() {
            if is_tensor_highest(&cartan, big, &b, row, &y) {
                left.push((big.element(b).shape(), row.coord_of(y)?));
            }
            if is_tensor_highest(&cartan, row, &y, big, &b) {
                right.push((row.coord_of(y)?, big.element(b).clone()));
            }
        }
    }
    left.sort();
    right.sort();
    let listed = enumerate_highest_left(big.spec(), case.l());
    v.check(listed == left, || format!("LEFT: {} listed, {} found", listed.len(), left.len()));
    let top = crate::kr::CoordElement::top(&cartan, case.l());
    let mut listed: Vec<_> = enumerate_highest_right(big.spec(), case.l())?
        .iter()
        .map(|p| phi(&cartan, p).map(|t| (top.clone(), t)))
        .collect::<Result<_>>()?;
    listed.sort();
    v.check(listed == right, || format!("RIGHT: {} listed, {} found", listed.len(), right.len()));
    Ok(v)
}

/// Table consistency: commutation, bijection, weights, inverse tables.
pub fn rtable_suite(case: &TensorCase) -> Violations {
    let mut v = check_r_table(&case.big, &case.row, &case.forward);
    v.merge(check_r_table(&case.row, &case.big, &case.backward));
    v.merge(check_inverse(&case.forward, &case.backward));
    v.merge(check_inverse(&case.backward, &case.forward));
    v
}

pub fn energy_suite(case: &TensorCase) -> Violations {
    check_energy(&case.big, &case.row, &case.forward)
}

pub fn theorem_suite(case: &TensorCase) -> Result<TheoremReport> {
    verify_theorem(&case.big, &case.row, &case.forward, &case.backward)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_clean_on_a_small_case() {
        let spec = KRSpec::new(CartanSpec::d(4).unwrap(), 2, 1).unwrap();
        let case = TensorCase::build(spec, 2, 100_000).unwrap();
        assert!(axioms_suite(&case.big).is_clean());
        assert!(axioms_suite(&case.row).is_clean());
        assert!(coordinate_suite(&case.row).unwrap().is_clean());
        assert!(branching_suite(&spec, 100_000).unwrap().is_clean());
        assert!(phi_round_trip_suite(&case.big).unwrap().is_clean());
        assert!(highest_suite(&case).unwrap().is_clean());
        assert!(rtable_suite(&case).is_clean());
        assert!(energy_suite(&case).is_clean());
        assert!(theorem_suite(&case).unwrap().is_clean());
    }

    #[test]
    fn violations_keep_a_bounded_sample() {
        let mut v = Violations::default();
        for i in 0..50 {
            v.check(i % 2 == 0, || format!("odd {i}"));
        }
        assert_eq!((v.checked, v.failed, v.samples.len()), (50, 25, 20));
        assert!(!v.is_clean());
    }

    #[test]
    fn coordinate_suite_refuses_r_above_one() {
        let c = KrCrystal::build(KRSpec::new(CartanSpec::d(4).unwrap(), 2, 1).unwrap(), 1000).unwrap();
        assert!(!coordinate_suite(&c).unwrap().is_clean());
    }
}
