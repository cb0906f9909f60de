//! Modular arithmetic, Chinese-remainder bijections and small finite fields.

mod field;
mod modular;
mod tables;

pub use field::{gf_table, FieldTable, FIELD_ORDER_CEILING};
pub use modular::{crt_map, gcd, is_prime, mod_inverse, prime_factors, prime_power, units, CrtMap};
