//! Letters, the vector crystals `B(Λ_1)` of types `B_n`, `C_n`, `D_n`, and
//! Kashiwara–Nakashima tableaux acted on through their Japanese reading
//! word.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanKind, CartanSpec, Partition, WeightVec};
use crate::crystal::{Crystal, Dir, SignatureRule};
use crate::error::{Error, Result};

/// A letter: `i` is `+i`, `ī` is `-i`, and the `B_n` letter `0` is `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub i32);

impl Letter {
    pub const ZERO: Letter = Letter(0);

    pub fn unbarred(i: usize) -> Letter {
        Letter(i as i32)
    }

    pub fn barred(i: usize) -> Letter {
        Letter(-(i as i32))
    }

    pub fn value(self) -> i32 {
        self.0
    }

    pub fn is_valid(self, spec: &CartanSpec) -> bool {
        let a = self.0.unsigned_abs() as usize;
        a <= spec.n() && (self.0 != 0 || spec.kind() == CartanKind::B1)
    }

    /// Position in `1 < 2 < ⋯ < n (< 0) < n̄ < ⋯ < 1̄`, used for display and
    /// sorting rows.
    pub fn display_rank(self, n: usize) -> i32 {
        let n = n as i32;
        match self.0 {
            v if v > 0 => v,
            0 => n + 1,
            v => 3 * n + 2 + v,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 0 {
            write!(f, "{}\u{0305}", -self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// The crystal graph of the vector representation.
#[derive(Debug, Clone, Copy)]
pub struct VectorCrystal {
    spec: CartanSpec,
}

impl VectorCrystal {
    pub fn new(spec: CartanSpec) -> Self {
        VectorCrystal { spec }
    }

    pub fn spec(&self) -> &CartanSpec {
        &self.spec
    }

    /// All `2n` (or `2n+1` for `B_n`) letters in display order.
    pub fn letters(&self) -> Vec<Letter> {
        let n = self.spec.n();
        let mut v: Vec<Letter> = (1..=n).map(Letter::unbarred).collect();
        if self.spec.kind() == CartanKind::B1 {
            v.push(Letter::ZERO);
        }
        v.extend((1..=n).rev().map(Letter::barred));
        v
    }

    fn f(&self, i: usize, c: Letter) -> Option<Letter> {
        let n = self.spec.n();
        let v = c.0;
        let ii = i as i32;
        if i == 0 || i > n {
            return None;
        }
        if i < n {
            return if v == ii {
                Some(Letter(ii + 1))
            } else if v == -(ii + 1) {
                Some(Letter(-ii))
            } else {
                None
            };
        }
        let n = n as i32;
        match self.spec.kind() {
            CartanKind::A2Odd => (v == n).then_some(Letter(-n)),
            CartanKind::B1 => match v {
                x if x == n => Some(Letter::ZERO),
                0 => Some(Letter(-n)),
                _ => None,
            },
            CartanKind::D1 => match v {
                x if x == n - 1 => Some(Letter(-n)),
                x if x == n => Some(Letter(-(n - 1))),
                _ => None,
            },
        }
    }

    fn e(&self, i: usize, c: Letter) -> Option<Letter> {
        // the graph is small enough to invert by search
        self.letters().into_iter().find(|&d| self.f(i, d) == Some(c))
    }

    /// The unique `i`-arrow neighbour of `c`, if any.
    pub fn edge(&self, dir: Dir, i: usize, c: Letter) -> Option<Letter> {
        match dir {
            Dir::E => self.e(i, c),
            Dir::F => self.f(i, c),
        }
    }

    pub fn letter_weight(&self, c: Letter) -> WeightVec {
        let mut w = WeightVec::zero(self.spec.n());
        match c.0 {
            0 => {}
            v if v > 0 => w.0[v as usize - 1] += 1,
            v => w.0[(-v) as usize - 1] -= 1,
        }
        w
    }
}

impl Crystal for VectorCrystal {
    type Elem = Letter;

    fn apply(&self, dir: Dir, i: usize, b: &Letter) -> Option<Letter> {
        self.edge(dir, i, *b)
    }

    fn weight(&self, b: &Letter) -> WeightVec {
        self.letter_weight(*b)
    }
}

/// `vector_edge` in function form.
pub fn vector_edge(spec: &CartanSpec, dir: Dir, i: usize, c: Letter) -> Option<Letter> {
    VectorCrystal::new(*spec).edge(dir, i, c)
}

/// A tableau stored as columns, left to right, each listed bottom to top
/// (French convention: the bottom row is the longest).
///
/// Validity is by construction: tableaux are produced from highest
/// tableaux by crystal operators, and KN admissibility is not rechecked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Letter>>", into = "Vec<Vec<Letter>>")]
pub struct KNTableau {
    cols: Vec<Vec<Letter>>,
}

impl TryFrom<Vec<Vec<Letter>>> for KNTableau {
    type Error = Error;
    fn try_from(cols: Vec<Vec<Letter>>) -> Result<Self> {
        KNTableau::from_columns(cols)
    }
}

impl From<KNTableau> for Vec<Vec<Letter>> {
    fn from(t: KNTableau) -> Self {
        t.cols
    }
}

impl KNTableau {
    pub fn from_columns(cols: Vec<Vec<Letter>>) -> Result<Self> {
        if cols.iter().any(|c| c.is_empty()) {
            return Err(Error::InvalidElement("empty column".into()));
        }
        if cols.windows(2).any(|p| p[0].len() < p[1].len()) {
            return Err(Error::InvalidElement("column heights must weakly decrease".into()));
        }
        Ok(KNTableau { cols })
    }

    /// Convenience constructor from signed integers.
    pub fn from_ints(cols: &[&[i32]]) -> Result<Self> {
        Self::from_columns(cols.iter().map(|c| c.iter().map(|&v| Letter(v)).collect()).collect())
    }

    /// One-row tableau with the given letters, sorted into display order.
    pub fn row(n: usize, letters: &[Letter]) -> Self {
        let mut v = letters.to_vec();
        v.sort_by_key(|c| c.display_rank(n));
        KNTableau { cols: v.into_iter().map(|c| vec![c]).collect() }
    }

    pub fn columns(&self) -> &[Vec<Letter>] {
        &self.cols
    }

    pub fn shape(&self) -> Partition {
        let heights: Vec<usize> = self.cols.iter().map(|c| c.len()).collect();
        Partition::from_column_heights(&heights)
    }

    pub fn num_cells(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_valid_for(&self, spec: &CartanSpec) -> bool {
        self.cols.iter().flatten().all(|c| c.is_valid(spec))
    }

    /// Cell coordinates `(column, row)` in Japanese reading order: columns
    /// right to left, each bottom to top.
    pub fn reading_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_cells());
        for (j, col) in self.cols.iter().enumerate().rev() {
            out.extend((0..col.len()).map(|r| (j, r)));
        }
        out
    }

    pub fn reading_word(&self) -> Vec<Letter> {
        self.reading_positions().into_iter().map(|(j, r)| self.cols[j][r]).collect()
    }

    pub fn get(&self, col: usize, row: usize) -> Letter {
        self.cols[col][row]
    }

    pub(crate) fn set(&mut self, col: usize, row: usize, c: Letter) {
        self.cols[col][row] = c;
    }

    /// Applies `f` to every letter.
    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> KNTableau {
        KNTableau { cols: self.cols.iter().map(|c| c.iter().map(|&x| f(x)).collect()).collect() }
    }

    /// Rows top to bottom, as strings (French drawing).
    pub fn pretty(&self) -> String {
        if self.cols.is_empty() {
            return "∅".into();
        }
        let depth = self.cols.first().map_or(0, |c| c.len());
        let mut lines = Vec::new();
        for r in (0..depth).rev() {
            let row: Vec<String> = self.cols.iter().filter(|c| c.len() > r).map(|c| c[r].to_string()).collect();
            lines.push(row.join(" "));
        }
        lines.join(" / ")
    }
}

impl fmt::Display for KNTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// The highest tableau of shape `shape`: column `j` reads `1, 2, …, h_j`.
pub fn highest_tableau(shape: &Partition) -> KNTableau {
    let cols = shape.column_heights(0).into_iter().map(|h| (1..=h).map(Letter::unbarred).collect()).collect();
    KNTableau { cols }
}

/// KN tableaux of one Cartan type as a classical (`I_0`) crystal.
#[derive(Debug, Clone, Copy)]
pub struct TableauCrystal {
    vector: VectorCrystal,
}

impl TableauCrystal {
    pub fn new(spec: CartanSpec) -> Self {
        TableauCrystal { vector: VectorCrystal::new(spec) }
    }

    pub fn spec(&self) -> &CartanSpec {
        self.vector.spec()
    }

    pub fn vector(&self) -> &VectorCrystal {
        &self.vector
    }
}

/// `e_i` / `f_i` on a tableau via the signature rule on its reading word.
pub fn tableau_apply(spec: &CartanSpec, dir: Dir, i: usize, t: &KNTableau) -> Option<KNTableau> {
    TableauCrystal::new(*spec).apply(dir, i, t)
}

/// ε-coordinate `j` counts letters `j` minus letters `j̄`.
pub fn weight(spec: &CartanSpec, t: &KNTableau) -> WeightVec {
    TableauCrystal::new(*spec).weight(t)
}

impl Crystal for TableauCrystal {
    type Elem = KNTableau;

    fn apply(&self, dir: Dir, i: usize, t: &KNTableau) -> Option<KNTableau> {
        let pos = t.reading_positions();
        let blocks: Vec<(usize, usize)> = pos.iter().map(|&(j, r)| self.vector.eps_phi(i, &t.cols[j][r])).collect();
        let k = SignatureRule::new(&blocks).factor(dir)?;
        let (j, r) = pos[k];
        let c = self.vector.edge(dir, i, t.cols[j][r]).expect("letter with ε/φ > 0 has a neighbour");
        let mut out = t.clone();
        out.set(j, r, c);
        Some(out)
    }

    fn weight(&self, t: &KNTableau) -> WeightVec {
        let n = self.spec().n();
        let mut w = vec![0i64; n];
        for c in t.cols.iter().flatten() {
            match c.0 {
                0 => {}
                v if v > 0 => w[v as usize - 1] += 1,
                v => w[(-v) as usize - 1] -= 1,
            }
        }
        WeightVec(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{generate_component, TensorProduct};

    fn t(cols: &[&[i32]]) -> KNTableau {
        KNTableau::from_ints(cols).unwrap()
    }

    #[test]
    fn vector_edges() {
        let d4 = CartanSpec::d(4).unwrap();
        let b3 = CartanSpec::b(3).unwrap();
        assert_eq!(vector_edge(&d4, Dir::F, 1, Letter(1)), Some(Letter(2)));
        assert_eq!(vector_edge(&b3, Dir::F, 3, Letter(3)), Some(Letter(0)));
        assert_eq!(vector_edge(&b3, Dir::F, 3, Letter(0)), Some(Letter(-3)));
        assert_eq!(vector_edge(&d4, Dir::F, 4, Letter(3)), Some(Letter(-4)));
        assert_eq!(vector_edge(&d4, Dir::F, 4, Letter(4)), Some(Letter(-3)));
        assert_eq!(vector_edge(&d4, Dir::F, 3, Letter(-4)), Some(Letter(-3)));
        assert_eq!(vector_edge(&d4, Dir::E, 2, Letter(3)), Some(Letter(2)));
        let c3 = CartanSpec::a2odd(3).unwrap();
        assert_eq!(vector_edge(&c3, Dir::F, 3, Letter(3)), Some(Letter(-3)));
        assert_eq!(vector_edge(&c3, Dir::F, 2, Letter(-3)), Some(Letter(-2)));
    }

    #[test]
    fn vector_crystal_is_connected_and_weights_shift_by_roots() {
        for spec in [CartanSpec::d(4).unwrap(), CartanSpec::b(3).unwrap(), CartanSpec::a2odd(3).unwrap()] {
            let v = VectorCrystal::new(spec);
            let g = generate_component(&v, &Letter(1), &spec.classical_indices(), 100).unwrap();
            assert_eq!(g.nodes().len(), v.letters().len());
            for &(s, i, d) in g.edges() {
                let (a, b) = (g.nodes()[s], g.nodes()[d]);
                assert_eq!(v.letter_weight(b), v.letter_weight(a).sub(&spec.simple_root(i).unwrap()));
            }
        }
    }

    #[test]
    fn b_letter_zero_string() {
        let b3 = CartanSpec::b(3).unwrap();
        let v = VectorCrystal::new(b3);
        assert_eq!(v.eps_phi(3, &Letter(3)), (0, 2));
        assert_eq!(v.eps_phi(3, &Letter(0)), (1, 1));
        assert_eq!(v.eps_phi(3, &Letter(-3)), (2, 0));
    }

    #[test]
    fn reading_words() {
        assert_eq!(t(&[&[1, 2]]).reading_word(), vec![Letter(1), Letter(2)]);
        assert_eq!(t(&[&[1, 2], &[3]]).reading_word(), vec![Letter(3), Letter(1), Letter(2)]);
        assert!(KNTableau::default().reading_word().is_empty());
    }

    #[test]
    fn tableau_operator_examples() {
        let d4 = CartanSpec::d(4).unwrap();
        assert_eq!(tableau_apply(&d4, Dir::F, 2, &t(&[&[1, 2]])), Some(t(&[&[1, 3]])));
        assert_eq!(tableau_apply(&d4, Dir::E, 2, &t(&[&[1, 3]])), Some(t(&[&[1, 2]])));
        assert_eq!(tableau_apply(&d4, Dir::F, 1, &t(&[&[1, 2]])), None);
        let top = highest_tableau(&Partition::rectangle(2, 3));
        for i in 1..=4 {
            assert_eq!(tableau_apply(&d4, Dir::E, i, &top), None);
        }
    }

    #[test]
    fn tableau_action_agrees_with_word_action() {
        let d4 = CartanSpec::d(4).unwrap();
        let tc = TableauCrystal::new(d4);
        let v = VectorCrystal::new(d4);
        let g = generate_component(&tc, &highest_tableau(&Partition::new(vec![2, 1]).unwrap()), &[1, 2, 3, 4], 10_000)
            .unwrap();
        for b in g.nodes() {
            let word = b.reading_word();
            let factors = vec![&v; word.len()];
            let tp = TensorProduct::new(factors);
            for i in 1..=4 {
                for dir in [Dir::E, Dir::F] {
                    let via_tab = tc.apply(dir, i, b).map(|x| x.reading_word());
                    assert_eq!(via_tab, tp.apply(dir, i, &word));
                }
            }
        }
    }

    #[test]
    fn component_sizes() {
        let d4 = CartanSpec::d(4).unwrap();
        let tc = TableauCrystal::new(d4);
        let i0 = d4.classical_indices();
        let size = |rows: &[usize]| {
            generate_component(&tc, &highest_tableau(&Partition::new(rows.to_vec()).unwrap()), &i0, 100_000)
                .unwrap()
                .nodes()
                .len()
        };
        assert_eq!(size(&[1]), 8);
        assert_eq!(size(&[1, 1]), 28);
        assert_eq!(size(&[2]), 35);
        assert_eq!(size(&[]), 1);
    }

    #[test]
    fn weights() {
        let d4 = CartanSpec::d(4).unwrap();
        assert_eq!(weight(&d4, &highest_tableau(&Partition::rectangle(2, 3))), WeightVec(vec![3, 3, 0, 0]));
        assert_eq!(weight(&d4, &t(&[&[2, -2]])), WeightVec::zero(4));
    }

    #[test]
    fn json_shape() {
        let x = t(&[&[1, 2], &[2, -2]]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[[1,2],[2,-2]]");
        let back: KNTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<KNTableau>("[[1],[1,2]]").is_err());
    }

    #[test]
    fn pretty_prints_french() {
        assert_eq!(t(&[&[1, 2], &[2, -2]]).pretty(), "2 2\u{305} / 1 2");
    }
}
