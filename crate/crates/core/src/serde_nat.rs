//! Serializes `Nat` values as decimal strings so that JSON consumers never
//! truncate them to 64-bit numbers.

use serde::Serializer;

use crate::kernel::Nat;

pub fn serialize<S: Serializer>(value: &Nat, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<Nat>, serializer: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => serializer.collect_str(v),
            None => serializer.serialize_none(),
        }
    }
}
