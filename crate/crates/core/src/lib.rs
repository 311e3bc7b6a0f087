//! Kirillov–Reshetikhin crystals `B^{r,k}` of types `D_n^(1)`, `B_n^(1)` and
//! `A_{2n-1}^(2)`, and the combinatorial R-matrix
//! `B^{r,k} ⊗ B^{1,l} → B^{1,l} ⊗ B^{r,k}` with its energy function.
//!
//! The R-matrix is available two ways: [`rmatrix::brute_force_r`] propagates
//! `u_0 ⊗ u_0' ↦ u_0' ⊗ u_0` across the whole (connected) tensor product, and
//! [`rmatrix::closed_form_r`] reads the image of a classically highest
//! element off its coordinates. [`verify`] compares them.
//!
//! ```
//! use kr_crystals::{CartanSpec, KRSpec, KrCrystal, KNTableau};
//!
//! let d4 = CartanSpec::d(4)?;
//! let b21 = KrCrystal::build(KRSpec::new(d4, 2, 1)?, 10_000)?;
//! assert_eq!(b21.len(), 29);
//! let col = KNTableau::from_ints(&[&[1, 2]])?;
//! assert_eq!(kr_crystals::kr::sigma(&b21, &col)?, KNTableau::from_ints(&[&[2, -1]])?);
//! # Ok::<(), kr_crystals::Error>(())
//! ```
//!
//! The `examples/` directory walks through each layer:
//!
//! | example | shows |
//! |---|---|
//! | `signature_rule` | the tensor product rule on a toy signature |
//! | `tableau_crystal` | KN tableaux, reading words, classical components |
//! | `pm_diagrams` | ±-diagrams, `Φ`, the raising word and `𝔖` |
//! | `kr_crystal` | building `B^{r,k}`, `σ`, `e_0`, the coordinate model |
//! | `r_matrix` | one R-matrix image by both methods |
//! | `energy_table` | `H` on every highest element of a tensor product |
//! | `graph_export` | JSON and DOT renderings of a crystal graph |
//! | `verify_theorem` | the closed form against the oracle over several specs |

pub mod cartan;
pub mod crystal;
pub mod error;
pub mod graph;
pub mod kr;
pub mod pm;
pub mod rmatrix;
pub mod tableau;
pub mod verify;

pub use cartan::{CartanKind, CartanSpec, KRSpec, Partition, WeightVec};
pub use crystal::{Crystal, Dir, OpWord};
pub use error::{Error, Result};
pub use graph::CrystalGraph;
pub use kr::{CoordCrystal, CoordElement, KrCrystal, KrElement};
pub use pm::{PMDiagram, PMStats};
pub use rmatrix::{brute_force_r, closed_form_r, closed_form_rinv, RTable};
pub use tableau::{KNTableau, Letter, TableauCrystal};
