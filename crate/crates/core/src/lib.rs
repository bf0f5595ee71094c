//! Exact dynamics on minuscule posets: combinatorial, piecewise-linear,
//! and birational rowmotion, with the statistics and identities needed to
//! check their periodicity, reciprocity, and homomesy properties.

pub mod birational;
pub mod cartan;
pub mod catalog;
pub mod combinat;
pub mod diamond;
pub mod identities;
pub mod pl;
pub mod poly;
pub mod ratfun;
pub mod poset;
pub mod verify;

pub use cartan::{CartanData, Family, Rat};
pub use catalog::{catalog, minuscule_weights, CatalogError, LieType, MinusculePoset};
pub use poset::{Bits, HatElem, HatPoset, Ideal, Poset, PosetError, RankFunction};
pub use verify::{run_all, run_check, CheckRecord, Mode, Status, Theorem};
