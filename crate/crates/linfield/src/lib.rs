//! Weierstrass semigroups at totally ramified rational places of linearized
//! function fields.
//!
//! A linearized function field is an extension `F = K(x, y)` of a rational
//! function field cut out by an additive equation: the left-hand side is a
//! separable linearized polynomial in `y` whose roots all lie in the constant
//! field, the right-hand side a quotient of coprime polynomials in `x` given
//! in factored form.  The extension is Galois of degree `p^n` and every place
//! of `K(x)` supporting the right-hand side with multiplicity prime to `p` is
//! totally ramified.
//!
//! This crate works with the purely combinatorial shadow of such a field: the
//! prime power `p^n` together with the multiplicity/degree pairs of the
//! denominator and numerator factors (see [`FieldSpec`]).  From that datum it
//! computes, in exact integer arithmetic,
//!
//! * Riemann–Roch dimensions for divisors supported on the ramified places,
//!   via the direct-sum decomposition over powers of `y`
//!   ([`riemann_roch`]);
//! * gap sets, semigroup generators, multiplicity, Frobenius number and the
//!   symmetry criterion at a single place ([`single_place`]);
//! * the minimal generating set of the semigroup at several places, with
//!   factored witness functions realizing each tuple as a pole divisor
//!   ([`multi_place`]);
//! * principal-divisor bookkeeping for the symbolic places ([`model`]).
//!
//! Every closed form has an independent counterpart driven purely by
//! dimension jumps ([`riemann_roch::gap_set_oracle`],
//! [`multi_place::gamma_oracle`]), so any spec can be certified at desk
//! scale.
//!
//! The [`fieldcheck`] module handles concrete inputs: finite-field and
//! polynomial arithmetic, Rabin irreducibility, the splitting test for the
//! linearized left-hand side, and hypothesis validation that turns a concrete
//! equation into an abstract [`FieldSpec`].

pub mod arith;
pub mod error;
pub mod fieldcheck;
pub mod model;
pub mod multi_place;
pub mod riemann_roch;
pub mod single_place;

pub use error::{Error, Result};
pub use model::{build_spec, Divisor, Factor, FieldSpec, PlaceId, WitnessExpr};
pub use multi_place::{GammaSet, GammaTuple};
pub use single_place::{GapSet, SemigroupProfile};
