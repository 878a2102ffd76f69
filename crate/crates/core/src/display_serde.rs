//! Serde helpers writing arbitrary-precision integers as decimal strings.

use std::fmt::Display;

use serde::ser::{SerializeSeq, SerializeTuple};
use serde::Serializer;

pub fn many<T: Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn triples<A: Display, B: Display, C: Display, S: Serializer>(
    v: &[(A, B, C)],
    s: S,
) -> Result<S::Ok, S::Error> {
    struct Row<'a, A, B, C>(&'a (A, B, C));
    impl<A: Display, B: Display, C: Display> serde::Serialize for Row<'_, A, B, C> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            let mut t = s.serialize_tuple(3)?;
            t.serialize_element(&self.0 .0.to_string())?;
            t.serialize_element(&self.0 .1.to_string())?;
            t.serialize_element(&self.0 .2.to_string())?;
            t.end()
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&Row(r))?;
    }
    seq.end()
}
