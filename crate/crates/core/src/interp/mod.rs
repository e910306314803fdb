//! Translations between the arithmetic and abstraction languages, the integer
//! pairing, the disjoint injection chain and the partial abstraction builder.

mod boolos;
mod frege;
mod iota;
mod pairing;
mod partial;

pub use boolos::{boolos_image, boolos_translate, boolos_translate_with, image_encoding, BoolosError, CardEncoding};
pub use frege::{
    flatten, frege_definitions, frege_translate, DefBody, Definition, FregeTranslation, NAT, PLUS_GRAPH,
    SUCC_REL, TIMES_GRAPH, ZERO,
};
pub use iota::{cantor_big, iota_chain, IotaChain, IotaError, Pairing};
pub use pairing::{cantor, pairing_int, try_pairing_int, uncantor, unpair_int, unzigzag, zigzag, PairingError};
pub use partial::{
    build_partial_abstraction, grid, AtomSet, DescriptorFamily, Entry, FieldFamily, FiniteFamily, PartialDelta,
    PartialError, Provenance, Route,
};
