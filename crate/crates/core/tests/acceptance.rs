//! Acceptance run: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use kr_crystals::cartan::classical_weights;
use kr_crystals::crystal::OpWord;
use kr_crystals::kr::CoordElement;
use kr_crystals::pm::{enumerate_pm_outer, phi, Column, ColumnKind};
use kr_crystals::rmatrix::{brute_force_r, closed_form_r, Violations};
use kr_crystals::verify::{self, TensorCase};
use kr_crystals::{CartanSpec, KNTableau, KRSpec, KrCrystal, Letter, PMDiagram, Partition};

const CAP: usize = 200_000;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_violations(v: &Violations, what: &str) -> Outcome {
    Outcome {
        ok: v.is_clean() && v.checked > 0,
        detail: if v.is_clean() {
            format!("{} {what} checks, 0 violations", v.checked)
        } else {
            format!("{} of {} {what} checks failed; first: {:?}", v.failed, v.checked, v.samples.first())
        },
    }
}

fn report(n: usize, title: &str, started: Instant, out: Outcome) -> bool {
    let tag = if out.ok { "PASS" } else { "FAIL" };
    println!("{tag} criterion {n}: {title} ({}; {:.2?})", out.detail, started.elapsed());
    out.ok
}

fn specs() -> Vec<(KRSpec, usize)> {
    let mut out = Vec::new();
    let types = [(CartanSpec::d(4).unwrap(), 2), (CartanSpec::b(3).unwrap(), 2), (CartanSpec::a2odd(3).unwrap(), 3)];
    for (cartan, rmax) in types {
        for r in 1..=rmax {
            for k in 1..=2 {
                for l in 1..=2 {
                    out.push((KRSpec::new(cartan, r, k).unwrap(), l));
                }
            }
        }
    }
    out
}

fn letter(spec: &CartanSpec, v: i32) -> CoordElement {
    CoordElement::from_tableau(spec, &KNTableau::row(spec.n(), &[Letter(v)])).unwrap()
}

fn criterion_1() -> Outcome {
    let d4 = CartanSpec::d(4).unwrap();
    let spec = KRSpec::new(d4, 2, 2).unwrap();
    let big = KrCrystal::build(spec, CAP).unwrap();
    let row = KrCrystal::build(KRSpec::new(d4, 1, 1).unwrap(), CAP).unwrap();
    let table = brute_force_r(&big, &row, CAP).unwrap();
    let column = KNTableau::from_ints(&[&[1, 2]]).unwrap();
    let expect = KNTableau::from_ints(&[&[1, 2], &[2, -2]]).unwrap();
    let one = letter(&d4, 1);
    let src = (big.id_of(&column).unwrap(), row.id_of_coord(&one).unwrap());
    let (y, b) = table.image(src);
    let brute = (row.coord_of(y).unwrap(), big.element(b).clone(), table.energy(src));
    let (p, h) = closed_form_r(&spec, &column.shape(), &one).unwrap();
    let closed = (CoordElement::top(&d4, 1), phi(&d4, &p).unwrap(), h);
    let want = (one, expect, -1);
    Outcome {
        ok: brute == want && closed == want,
        detail: format!(
            "brute: {} ⊗ {}, H = {}; closed: {} ⊗ {}, H = {}",
            brute.0,
            brute.1.pretty(),
            brute.2,
            closed.0,
            closed.1.pretty(),
            closed.2
        ),
    }
}

fn example_diagram() -> PMDiagram {
    use ColumnKind::*;
    let cols = [(Plus, 4), (Minus, 4), (Dot, 3), (Plus, 3), (PlusMinus, 3), (Plus, 2), (Minus, 2), (Dot, 1), (Plus, 1)];
    PMDiagram::from_columns(&cols.map(|(k, h)| Column::of_kind(k, h).unwrap())).unwrap()
}

fn criterion_7() -> Outcome {
    let mut v = Violations::default();
    let d6 = CartanSpec::d(6).unwrap();
    let expected = [(1, 7), (2, 5), (3, 5), (4, 3), (5, 3), (6, 3), (4, 3), (3, 2), (2, 1)];
    match verify::word_is_maximal(&d6, &example_diagram()) {
        Ok(w) => {
            let nonzero: Vec<(usize, usize)> = w.entries().iter().copied().filter(|&(_, m)| m > 0).collect();
            v.check(nonzero == expected, || format!("example word {}, expected {}", w, OpWord(expected.to_vec())));
        }
        Err(e) => v.check(false, || e),
    }
    let mut sampled = 0;
    for cartan in [CartanSpec::d(5).unwrap(), CartanSpec::b(5).unwrap(), CartanSpec::a2odd(4).unwrap()] {
        for r in 1..=3 {
            for k in 1..=3 {
                let spec = KRSpec::new(cartan, r, k).unwrap();
                let diagrams: Vec<PMDiagram> =
                    classical_weights(&spec).iter().flat_map(|lam| enumerate_pm_outer(&cartan, lam)).collect();
                sampled += diagrams.len();
                v.merge(verify::maximality_suite(&cartan, &diagrams));
            }
        }
    }
    let mut out = from_violations(&v, "word");
    out.ok &= sampled >= 100;
    out.detail = format!("{sampled} diagrams plus the expected example; {}", out.detail);
    out
}

fn main() -> ExitCode {
    let mut all = true;

    let t = Instant::now();
    all &= report(1, "golden R-matrix image and energy", t, criterion_1());

    let t = Instant::now();
    let mut crystals: BTreeMap<(String, usize, usize), ()> = BTreeMap::new();
    let mut cases = Vec::new();
    for (spec, l) in specs() {
        match TensorCase::build(spec, l, CAP) {
            Ok(case) => cases.push((spec, l, case)),
            Err(e) => {
                println!("FAIL setup: {spec} ⊗ B^(1,{l}): {e}");
                return ExitCode::FAILURE;
            }
        }
    }
    let mut theorem = Violations::default();
    let mut inverse = Violations::default();
    let mut full_width = Violations::default();
    let mut tables = Violations::default();
    let mut energy_forms = Violations::default();
    let mut highest_total = 0;
    for (spec, l, case) in &cases {
        tables.merge(verify::rtable_suite(case));
        match verify::theorem_suite(case) {
            Ok(rep) => {
                highest_total += rep.highest_left;
                theorem.merge(rep.theorem);
                inverse.merge(rep.inverse);
                full_width.merge(rep.full_width);
                energy_forms.merge(rep.energy_forms);
            }
            Err(e) => theorem.check(false, || format!("{spec} l={l}: {e}")),
        }
    }
    let mut out = from_violations(&theorem, "image/energy");
    out.ok &= tables.is_clean() && energy_forms.is_clean();
    out.detail = format!(
        "{} specs, {highest_total} highest elements, {}; table self-checks {}/{} clean; even-r energy forms {}/{} agree",
        cases.len(),
        out.detail,
        tables.checked - tables.failed,
        tables.checked,
        energy_forms.checked - energy_forms.failed,
        energy_forms.checked
    );
    all &= report(2, "closed form equals the oracle on all highest elements", t, out);

    let t = Instant::now();
    let mut out = from_violations(&full_width, "full-width");
    out.ok &= full_width.checked >= cases.len();
    all &= report(3, "R(μ ⊗ 1^l) = 1^l ⊗ μ with H = 0 for full-width μ", t, out);

    let t = Instant::now();
    all &=
        report(4, "inverse formulas round-trip and match the reverse table", t, from_violations(&inverse, "inverse"));

    let t = Instant::now();
    let mut axioms = Violations::default();
    for (spec, l, case) in &cases {
        for (key, c) in
            [((spec.cartan.to_string(), spec.r, spec.k), &case.big), ((spec.cartan.to_string(), 1, *l), &case.row)]
        {
            if crystals.insert(key, ()).is_none() {
                axioms.merge(verify::axioms_suite(c));
            }
        }
    }
    for cartan in [CartanSpec::d(4).unwrap(), CartanSpec::b(3).unwrap(), CartanSpec::a2odd(3).unwrap()] {
        for l in 1..=3 {
            let c = KrCrystal::build(KRSpec::new(cartan, 1, l).unwrap(), CAP).unwrap();
            axioms.merge(verify::coordinate_suite(&c).unwrap());
        }
    }
    let mut out = from_violations(&axioms, "axiom");
    out.detail = format!("{} crystals; {}", crystals.len(), out.detail);
    all &= report(5, "crystal axioms, σ, and σ-route e_0/f_0 against coordinates", t, out);

    let t = Instant::now();
    let mut branching = Violations::default();
    let mut seen: BTreeMap<(String, Partition), ()> = BTreeMap::new();
    for (spec, _, _) in &cases {
        for lam in classical_weights(spec) {
            if seen.insert((spec.cartan.to_string(), lam.clone()), ()).is_some() {
                continue;
            }
            for (inner, found, expect) in verify::branching_table(&spec.cartan, &lam, CAP).unwrap() {
                branching
                    .check(found == expect, || format!("{} Λ = {lam}, λ = {inner}: {found} vs {expect}", spec.cartan));
            }
        }
    }
    let mut out = from_violations(&branching, "multiplicity");
    out.detail = format!("{} classical weights; {}", seen.len(), out.detail);
    all &= report(6, "branching multiplicities equal ±-diagram counts", t, out);

    let t = Instant::now();
    all &= report(7, "raising word is maximal at every stage", t, criterion_7());

    let t = Instant::now();
    let mut highest = Violations::default();
    for (_, _, case) in &cases {
        highest.merge(verify::highest_suite(case).unwrap());
    }
    all &=
        report(8, "highest-element characterizations match brute force", t, from_violations(&highest, "enumeration"));

    let t = Instant::now();
    let mut energy = Violations::default();
    for (_, _, case) in &cases {
        energy.merge(verify::energy_suite(case));
    }
    all &= report(9, "energy recurrence and normalization", t, from_violations(&energy, "energy"));

    if all {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("some criteria failed");
        ExitCode::FAILURE
    }
}
