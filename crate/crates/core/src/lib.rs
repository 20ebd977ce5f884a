//! The h*-polynomial of the zig-zag order polytope `O(Z_n)`, computed four
//! independent ways:
//!
//! * counting swap statistics over alternating permutations
//!   ([`shelling::hstar_from_swaps`]),
//! * from the attachment counts of an explicit shelling
//!   ([`shelling::hstar_from_shelling`]),
//! * from exact lattice-point counts ([`ehrhart::hstar_from_ehrhart`]),
//! * from the flag h-vector of the ideal lattice ([`rank_selection::hstar_from_beta`]).
//!
//! Every structural statement the routes rely on has a brute-force
//! counterpart; [`checks::verify_all`] runs them all and returns a
//! machine-readable report.
//!
//! ```
//! use zigzag_hstar::{hstar_from_ehrhart, hstar_from_swaps};
//! let h = hstar_from_swaps(4).unwrap();
//! assert_eq!(h.to_string(), "1 + 3t + t^2");
//! assert_eq!(h, hstar_from_ehrhart(4).unwrap());
//! ```

pub mod alt_perm;
pub mod checks;
pub mod cli;
pub mod ehrhart;
pub mod error;
pub mod poly;
pub mod polytope;
pub mod poset;
pub mod rank_selection;
pub mod sets;
pub mod shelling;

/// Largest supported `n`. Size sets live in `[0, n]` and are stored as
/// bits of a `u64`.
pub const MAX_N: usize = 63;

pub use alt_perm::{enumerate_alternating, euler_zigzag, AltPerm};
pub use checks::{swap_numbers, verify_all, Depth, Report, Status};
pub use ehrhart::{count_lattice_points, ehrhart_polynomial, ehrhart_table, hstar_from_ehrhart};
pub use error::{Error, Result};
pub use poly::IntPolynomial;
pub use polytope::{exclusion_set, gorenstein_check, share_facet, simplex_of, Vertex01};
pub use poset::{IdealChain, NaturalLabeling, OrderIdeal};
pub use rank_selection::{alpha, beta, hstar_from_beta, phi, psi, unique_max_altperm, VertexConstraintSet};
pub use sets::IndexSet;
pub use shelling::{hstar_from_shelling, hstar_from_swaps, inversion_shelling_order, verify_shelling, ShellingOrder, TieBreak};
