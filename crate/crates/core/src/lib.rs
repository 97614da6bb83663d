//! Combinatorics on words around the infinite (ω) order.
//!
//! Finite words are compared through their periodic extensions `u^ω` and
//! `v^ω` without ever materializing them. On top of that comparison the
//! crate provides Lyndon predicates and factorization, left/right Lyndon
//! trees, the prefix standard permutation with the left Cartesian tree,
//! and a brute-force [`oracle`] that cross-checks all of it.
//!
//! ```
//! use lyndon_core::{OrderedAlphabet, tree, pstd};
//!
//! let abc = OrderedAlphabet::natural("abc").unwrap();
//! let w = abc.word("aabaacab").unwrap();
//! let lyndon_tree = tree::left_lyndon_tree(&w).unwrap();
//! assert_eq!(lyndon_tree.to_string(), "(((a,(a,b)),(a,(a,c))),(a,b))");
//! assert_eq!(pstd::left_cartesian_tree(&w).unwrap(), lyndon_tree);
//! ```

pub mod error;
pub mod lyndon;
pub mod omega;
pub mod oracle;
pub mod pstd;
pub mod tree;
pub mod word;

pub use error::{Error, Result};
pub use lyndon::LyndonFactorization;
pub use omega::{OmegaComparison, OmegaOutcome, SixConditions};
pub use pstd::{DecreasingTree, PrefixStandard};
pub use tree::{Direction, MagmaTree, NodeAddress};
pub use word::{FractionalExponent, Letter, OrderedAlphabet, Word};
