//! Decimal-string serialization for big numbers in JSON reports.

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::Serializer;

pub fn uint<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_str_radix(10))
}

pub fn uints<S: Serializer>(values: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(|v| v.to_str_radix(10)))
}

pub fn rational<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Rational", 2)?;
    st.serialize_field("numerator", &value.numer().to_str_radix(10))?;
    st.serialize_field("denominator", &value.denom().to_str_radix(10))?;
    st.end()
}
