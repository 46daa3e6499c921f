//! Exact computation in the Grothendieck ring of the Verlinde category
//! `Ver_p`, together with an independent Jordan-block oracle over `F_p`.

pub mod cyclotomic;
pub mod error;
pub mod laurent;
pub mod oracle;
pub mod powers;
mod primes;
pub mod ring;
pub mod verify;
pub mod weyl;

pub use cyclotomic::{galois, to_cyclotomic, Cyclotomic};
pub use error::{Error, Result};
pub use laurent::{gauss_binom, parse_laurent, quantum_int, tau, LaurentPoly};
pub use primes::{check_odd_prime, check_prime, is_prime};
pub use ring::{ParitySplit, VerObj};
pub use weyl::WeightA;
