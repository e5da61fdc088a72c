//! Finite fusion systems and the algebraic BP-cellularity criterion.
//!
//! A saturated fusion system `F` over a finite `p`-group `S` has a classifying
//! space `BF`, and for a finite `p`-group `P` the space `BF` is `BP`-cellular
//! exactly when `S` equals `Cl_F(P)`, the smallest strongly `F`-closed subgroup
//! of `S` containing the image of every homomorphism `P -> S`. This crate
//! computes that closure (and everything needed to trust it) on concrete groups:
//!
//! * [`group`]: finite groups with indexed elements, subgroups, Sylow subgroups,
//!   homomorphism enumeration, quotients.
//! * [`fusion`]: fusion systems built from an ambient group or generated from
//!   seed morphisms, saturation checking, strong closure.
//! * [`cellularity`]: `Cl_F(P)`, the cellularity verdict, `Omega` subgroups and
//!   the minimal cellular exponent, the hyperfocal subgroup, normality in `F`,
//!   and the double-coset invariance certificate.
//! * [`catalog`]: the worked examples: symmetric groups, wreath products,
//!   `Sz(8)`, and the maximal-class 3-groups `B(3,r;0,gamma,0)`.
//! * [`cli`]: the `fusioncell` command line front end.
//!
//! ```
//! use fusioncell::catalog;
//! use fusioncell::cellularity::is_bp_cellular;
//! use fusioncell::fusion::FusionSystem;
//!
//! let g = catalog::wreath(3, 2, 2).unwrap();
//! let f = FusionSystem::from_group(&g, 3).unwrap();
//! let report = is_bp_cellular(&f, &catalog::cyclic(3).unwrap()).unwrap();
//! assert!(!report.cellular);
//! assert_eq!(report.closure.order(), 9);
//! ```

pub mod catalog;
pub mod cellularity;
pub mod cli;
pub mod error;
pub mod fusion;
pub mod group;

pub use error::{Error, Result};
pub use fusion::FusionSystem;
pub use group::{Elem, FiniteGroup, GroupHom, Subgroup};
