//! Exact combinatorics behind depth-zero L-packet constructions.
//!
//! The crate is organized bottom-up:
//!
//! - [`lattice`] — integer-lattice linear algebra: Smith normal form,
//!   finite torsion quotients with canonical representatives, exact
//!   rational solving.
//! - [`rootdatum`] — root data (character/cocharacter lattices with
//!   simple roots and coroots), a preset catalog of similitude groups,
//!   duality, diagonal quotients, centers, and based-datum
//!   identification.
//! - [`affweyl`] — affine Weyl group machinery on the apartment:
//!   actions, fixed points, facet subsystems, longest elements,
//!   alcove-stabilizer groups, and involution generator sets.
//! - [`drpackets`] — the end-to-end packet pipeline for the rank-two
//!   spin similitude group: component groups, inner-form classes,
//!   fixed-point tables, and dual torus elements.
//! - [`weilparams`] — tame characters of unramified Weil groups as
//!   exponent arithmetic: irreducibility, symplecticity, parameter
//!   classification and enumeration, twist counting, Hom dimensions.
//! - [`lfactors`] — monomial Weil representations: tensor/dual/Sym²,
//!   inertia invariants, factored Artin L-factors, and pole detection.
//! - [`dualcent`] — centralizer root systems of dual-torus elements
//!   over finite fields, Frobenius orbits, and Hecke parameters.
//! - [`hecke`] — the two-parameter affine Hecke algebra of type Ã₁:
//!   basis arithmetic, principal series, reducibility points,
//!   complementary series, and Plancherel point masses.
//! - [`cli`] — the batch front door shared by the `depthzero` binary.
//!
//! All core arithmetic is exact (integers and rationals; roots of unity
//! as exponents; real quadratic surds). Floating point appears only in
//! explicitly-sampled numerical sweeps.

pub mod affweyl;
pub mod cli;
pub mod drpackets;
pub mod dualcent;
pub mod hecke;
pub mod lattice;
pub mod lfactors;
pub mod rootdatum;
pub mod weilparams;
