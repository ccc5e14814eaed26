//! Generators for the explicit constructions and random test families.
//! Certificates for each construction are checked in tests and by the
//! harness, never assumed.

pub mod binary_words;
pub mod helly_sequence;
pub mod random;
pub mod shatter_family;

pub use binary_words::{gen_binary_words, word_length, word_string};
pub use helly_sequence::{gen_helly_sequence, validate_helly_sequence};
pub use random::{gen_random, random_small_system, GeneratedSystem, RandomKind};
pub use shatter_family::{gen_shatter_family, ShatterFamily, ShatterOptions};
