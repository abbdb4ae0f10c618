//! Exact arithmetic in `TL(E_n)` on the monomial basis.

mod laurent;
mod monomial;
mod psets;

pub use laurent::LaurentPolynomial;
pub use monomial::{
    a_value, max_antichain_decomposition, mult_gen_left, mult_word_left, product, ScaledMonomial,
};
pub use psets::{commuting_sets, i_of, p_classes, p_prime, PClassPartition};
