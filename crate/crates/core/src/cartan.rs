//! Cartan data for the three affine families, partitions and weights.
//!
//! Weights of the classical algebra `X_n` are kept in the orthogonal
//! ε-basis. A dominant weight without spin part is the same thing as a
//! partition with at most `n` rows; `μ_i` (the coefficient of `Λ_i`) is the
//! number of columns of height `i`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Affine family. The classical subalgebra is `D_n`, `B_n` or `C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanKind {
    /// `D_n^(1)`, classical part `D_n`.
    D1,
    /// `B_n^(1)`, classical part `B_n`.
    B1,
    /// `A_{2n-1}^(2)`, classical part `C_n`.
    #[serde(rename = "A2ODD")]
    A2Odd,
}

impl CartanKind {
    pub fn affine_name(self) -> &'static str {
        match self {
            CartanKind::D1 => "D_n^(1)",
            CartanKind::B1 => "B_n^(1)",
            CartanKind::A2Odd => "A_{2n-1}^(2)",
        }
    }

    pub fn classical_letter(self) -> char {
        match self {
            CartanKind::D1 => 'D',
            CartanKind::B1 => 'B',
            CartanKind::A2Odd => 'C',
        }
    }
}

/// An affine type together with the rank `n` of its classical part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawCartan")]
pub struct CartanSpec {
    kind: CartanKind,
    n: usize,
}

#[derive(Deserialize)]
struct RawCartan {
    kind: CartanKind,
    n: usize,
}

impl TryFrom<RawCartan> for CartanSpec {
    type Error = Error;
    fn try_from(raw: RawCartan) -> Result<Self> {
        CartanSpec::new(raw.kind, raw.n)
    }
}

impl CartanSpec {
    pub fn new(kind: CartanKind, n: usize) -> Result<Self> {
        let min = match kind {
            CartanKind::D1 => 4,
            CartanKind::B1 | CartanKind::A2Odd => 3,
        };
        if n < min {
            return Err(Error::InvalidCartan(format!("{} requires n >= {min}, got n = {n}", kind.affine_name())));
        }
        Ok(CartanSpec { kind, n })
    }

    pub fn d(n: usize) -> Result<Self> {
        Self::new(CartanKind::D1, n)
    }

    pub fn b(n: usize) -> Result<Self> {
        Self::new(CartanKind::B1, n)
    }

    pub fn a2odd(n: usize) -> Result<Self> {
        Self::new(CartanKind::A2Odd, n)
    }

    /// The same family at rank `n - 1`, i.e. the classical subalgebra on
    /// the nodes `{2, ..., n}` (relabelled `1, ..., n-1`). No affine rank
    /// bound is enforced, since this is only used for classical branching.
    pub fn restricted(&self) -> CartanSpec {
        assert!(self.n >= 2, "cannot restrict rank {}", self.n);
        CartanSpec { kind: self.kind, n: self.n - 1 }
    }

    pub fn kind(&self) -> CartanKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Classical index set `I_0 = {1, ..., n}`.
    pub fn classical_indices(&self) -> Vec<usize> {
        (1..=self.n).collect()
    }

    /// Affine index set `I = {0, ..., n}`.
    pub fn affine_indices(&self) -> Vec<usize> {
        (0..=self.n).collect()
    }

    /// `J = {2, ..., n}`.
    pub fn j_indices(&self) -> Vec<usize> {
        (2..=self.n).collect()
    }

    /// Fundamental weights that are spin weights (and so have no
    /// partition shape).
    pub fn spin_nodes(&self) -> Vec<usize> {
        match self.kind {
            CartanKind::D1 => vec![self.n - 1, self.n],
            CartanKind::B1 => vec![self.n],
            CartanKind::A2Odd => vec![],
        }
    }

    /// Largest column height of a non-spin dominant weight.
    pub fn max_column_height(&self) -> usize {
        match self.kind {
            CartanKind::D1 => self.n - 2,
            CartanKind::B1 => self.n - 1,
            CartanKind::A2Odd => self.n,
        }
    }

    /// Simple root `α_i` in ε-coordinates, for `i ∈ I_0`; for `i = 0` the
    /// classical projection `-ε_1 - ε_2`.
    pub fn simple_root(&self, i: usize) -> Result<WeightVec> {
        let n = self.n;
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut v = vec![0i64; n];
        if i == 0 {
            v[0] = -1;
            v[1] = -1;
        } else if i < n {
            v[i - 1] = 1;
            v[i] = -1;
        } else {
            match self.kind {
                CartanKind::D1 => {
                    v[n - 2] = 1;
                    v[n - 1] = 1;
                }
                CartanKind::B1 => v[n - 1] = 1,
                CartanKind::A2Odd => v[n - 1] = 2,
            }
        }
        Ok(WeightVec(v))
    }
}

impl fmt::Display for CartanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            CartanKind::D1 => format!("D_{}^(1)", self.n),
            CartanKind::B1 => format!("B_{}^(1)", self.n),
            CartanKind::A2Odd => format!("A_{}^(2)", 2 * self.n - 1),
        };
        f.write_str(&name)
    }
}

/// `⟨h_i, w⟩` for `i ∈ I_0` and `w` in ε-coordinates.
pub fn pairing(spec: &CartanSpec, i: usize, w: &WeightVec) -> Result<i64> {
    let n = spec.n;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    if w.0.len() != n {
        return Err(Error::InvalidElement(format!("weight has {} coordinates, expected {n}", w.0.len())));
    }
    let c = &w.0;
    Ok(if i < n {
        c[i - 1] - c[i]
    } else {
        match spec.kind {
            CartanKind::D1 => c[n - 2] + c[n - 1],
            CartanKind::B1 => 2 * c[n - 1],
            CartanKind::A2Odd => c[n - 1],
        }
    })
}

/// A weight in the ε-basis of `X_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn zero(n: usize) -> Self {
        WeightVec(vec![0; n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// The partition with these rows, if the coordinates form one.
    pub fn as_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&c| c < 0) || self.0.windows(2).any(|p| p[0] < p[1]) {
            return None;
        }
        Some(Partition::new(self.0.iter().map(|&c| c as usize).collect()).expect("checked"))
    }
}

/// A partition, stored as weakly decreasing rows with trailing zeros removed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidElement(format!("rows {rows:?} are not weakly decreasing")));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Partition(rows))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Partition whose columns have the given heights, in any order.
    pub fn from_column_heights(heights: &[usize]) -> Self {
        let depth = heights.iter().copied().max().unwrap_or(0);
        let rows = (1..=depth).map(|h| heights.iter().filter(|&&c| c >= h).count()).collect();
        Partition(rows)
    }

    /// `k × r` rectangle `(k^r)`.
    pub fn rectangle(r: usize, k: usize) -> Self {
        if k == 0 {
            return Partition::empty();
        }
        Partition(vec![k; r])
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    /// Row `i`, zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// First part (number of nonempty columns).
    pub fn width(&self) -> usize {
        self.row(0)
    }

    /// Number of nonzero rows.
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Column heights left to right, padded with zeros to `width`.
    pub fn column_heights(&self, width: usize) -> Vec<usize> {
        (0..width.max(self.width())).map(|j| self.0.iter().filter(|&&r| r > j).count()).collect()
    }

    pub fn conjugate(&self) -> Partition {
        Partition(self.column_heights(0))
    }

    /// Number of columns of height exactly `h` (`h >= 1`).
    pub fn columns_of_height(&self, h: usize) -> usize {
        assert!(h >= 1);
        self.row(h - 1) - self.row(h)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.0.len() <= self.0.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `self / inner` is a horizontal strip.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        if !self.contains(inner) {
            return false;
        }
        self.column_heights(0).iter().zip(inner.column_heights(self.width())).all(|(o, i)| o - i <= 1)
    }

    /// Weight `Σ rows_i ε_i` padded to rank `n`.
    pub fn to_weight(&self, n: usize) -> WeightVec {
        WeightVec((0..n).map(|i| self.row(i) as i64).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Diagram with `coeffs[i]` columns of height `i`.
pub fn weight_to_partition(spec: &CartanSpec, coeffs: &BTreeMap<usize, usize>) -> Result<Partition> {
    let spin = spec.spin_nodes();
    let mut heights = Vec::new();
    for (&i, &m) in coeffs {
        if i == 0 || i > spec.n() {
            return Err(Error::IndexOutOfRange { index: i, n: spec.n() });
        }
        if m > 0 && spin.contains(&i) {
            return Err(Error::SpinWeight(i));
        }
        heights.extend(std::iter::repeat_n(i, m));
    }
    Ok(Partition::from_column_heights(&heights))
}

/// Inverse of [`weight_to_partition`]: `i ↦ #columns of height i`, zero
/// coefficients omitted.
pub fn partition_to_weight(p: &Partition) -> BTreeMap<usize, usize> {
    (1..=p.depth()).map(|h| (h, p.columns_of_height(h))).filter(|&(_, m)| m > 0).collect()
}

/// Parameters `(type, r, k)` of a KR crystal `B^{r,k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KRSpec {
    pub cartan: CartanSpec,
    pub r: usize,
    pub k: usize,
}

impl KRSpec {
    pub fn new(cartan: CartanSpec, r: usize, k: usize) -> Result<Self> {
        let hi = cartan.max_column_height();
        if r < 1 || r > hi {
            let bound = match cartan.kind() {
                CartanKind::D1 => "1 <= r <= n-2",
                CartanKind::B1 => "1 <= r <= n-1",
                CartanKind::A2Odd => "1 <= r <= n",
            };
            return Err(Error::InvalidKr(format!("r = {r} is outside {bound} (= 1..={hi}) for {cartan}")));
        }
        if k < 1 {
            return Err(Error::InvalidKr(format!("k must be at least 1, got {k}")));
        }
        Ok(KRSpec { cartan, r, k })
    }

    /// The `(k^r)` rectangle, shape of `u_0`.
    pub fn rectangle(&self) -> Partition {
        Partition::rectangle(self.r, self.k)
    }
}

impl fmt::Display for KRSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B^{{{},{}}} of {}", self.r, self.k, self.cartan)
    }
}

/// Highest weights of the classical components of `B^{r,k}`: the shapes
/// obtained from the `k × r` rectangle by removing vertical dominoes. Each
/// of the `k` columns has a height in `{r, r-2, ...} ∩ Z_{>=0}`.
pub fn classical_weights(spec: &KRSpec) -> Vec<Partition> {
    let heights: Vec<usize> = (0..=spec.r).rev().step_by(2).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(spec.k);
    fn rec(heights: &[usize], start: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::from_column_heights(current));
            return;
        }
        for idx in start..heights.len() {
            current.push(heights[idx]);
            rec(heights, idx, left - 1, current, out);
            current.pop();
        }
    }
    rec(&heights, 0, spec.k, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn pairing_examples() {
        let d4 = CartanSpec::d(4).unwrap();
        assert_eq!(pairing(&d4, 1, &WeightVec(vec![1, 1, 0, 0])).unwrap(), 0);
        assert_eq!(pairing(&d4, 4, &WeightVec(vec![2, 1, 1, 0])).unwrap(), 1);
        let b3 = CartanSpec::b(3).unwrap();
        assert_eq!(pairing(&b3, 3, &WeightVec(vec![0, 0, 1])).unwrap(), 2);
        let c3 = CartanSpec::a2odd(3).unwrap();
        assert_eq!(pairing(&c3, 3, &WeightVec(vec![0, 0, 1])).unwrap(), 1);
        assert!(pairing(&d4, 5, &WeightVec(vec![0; 4])).is_err());
        assert!(pairing(&d4, 0, &WeightVec(vec![0; 4])).is_err());
    }

    #[test]
    fn pairing_with_simple_roots_gives_cartan_matrix() {
        for spec in [CartanSpec::d(5).unwrap(), CartanSpec::b(4).unwrap(), CartanSpec::a2odd(4).unwrap()] {
            for i in 1..=spec.n() {
                let a = spec.simple_root(i).unwrap();
                assert_eq!(pairing(&spec, i, &a).unwrap(), 2, "{spec} i={i}");
            }
        }
    }

    #[test]
    fn classical_weight_examples() {
        let d4 = CartanSpec::d(4).unwrap();
        let w = classical_weights(&KRSpec::new(d4, 2, 2).unwrap());
        assert_eq!(w, vec![p(&[]), p(&[1, 1]), p(&[2, 2])]);
        let w = classical_weights(&KRSpec::new(d4, 1, 3).unwrap());
        assert_eq!(w, vec![p(&[3])]);
        let c3 = CartanSpec::a2odd(3).unwrap();
        let w = classical_weights(&KRSpec::new(c3, 3, 1).unwrap());
        assert_eq!(w, vec![p(&[1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn classical_weights_fit_rectangle_with_parity() {
        let b5 = CartanSpec::b(5).unwrap();
        for r in 1..=4 {
            for k in 1..=4 {
                let spec = KRSpec::new(b5, r, k).unwrap();
                let w = classical_weights(&spec);
                let mut dedup = w.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), w.len());
                for lam in &w {
                    assert!(spec.rectangle().contains(lam));
                    let cols = lam.column_heights(k);
                    assert_eq!(cols.len(), k);
                    assert!(cols.iter().all(|&h| h % 2 == r % 2));
                    if r % 2 == 1 {
                        assert!(cols.iter().all(|&h| h > 0));
                    }
                }
            }
        }
    }

    #[test]
    fn weight_partition_conversion() {
        let d5 = CartanSpec::d(5).unwrap();
        let m: BTreeMap<usize, usize> = [(2, 1)].into_iter().collect();
        assert_eq!(weight_to_partition(&d5, &m).unwrap(), p(&[1, 1]));
        let m: BTreeMap<usize, usize> = [(1, 2), (3, 1)].into_iter().collect();
        assert_eq!(weight_to_partition(&d5, &m).unwrap(), p(&[3, 1, 1]));
        assert_eq!(partition_to_weight(&p(&[3, 1, 1])), m);
        assert_eq!(weight_to_partition(&d5, &BTreeMap::new()).unwrap(), Partition::empty());
        let spin: BTreeMap<usize, usize> = [(4, 1)].into_iter().collect();
        assert_eq!(weight_to_partition(&d5, &spin), Err(Error::SpinWeight(4)));
    }

    #[test]
    fn partition_rejects_increasing_rows_and_strips_zeros() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap().rows(), &[2, 1]);
        let json = serde_json::to_string(&p(&[2, 2])).unwrap();
        assert_eq!(json, "[2,2]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn cartan_json_and_bounds() {
        let d4 = CartanSpec::d(4).unwrap();
        assert_eq!(serde_json::to_string(&d4).unwrap(), r#"{"kind":"D1","n":4}"#);
        let c: CartanSpec = serde_json::from_str(r#"{"kind":"A2ODD","n":3}"#).unwrap();
        assert_eq!(c, CartanSpec::a2odd(3).unwrap());
        assert!(serde_json::from_str::<CartanSpec>(r#"{"kind":"D1","n":3}"#).is_err());
        assert!(KRSpec::new(d4, 3, 1).is_err());
        assert!(KRSpec::new(CartanSpec::b(3).unwrap(), 2, 1).is_ok());
        assert!(KRSpec::new(CartanSpec::a2odd(3).unwrap(), 3, 1).is_ok());
    }

    #[test]
    fn horizontal_strips() {
        assert!(p(&[2, 1]).is_horizontal_strip_over(&p(&[1])));
        assert!(!p(&[1, 1]).is_horizontal_strip_over(&p(&[])));
        assert!(p(&[3, 1]).is_horizontal_strip_over(&p(&[1])));
    }
}
