//! JSON encodings: integers as numbers, other rationals as `"a/b"` strings,
//! polynomials as `{exponent: coefficient}` maps in increasing exponent
//! order. Multivariate exponents are written `"e1,e2,..."`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};
use thiserror::Error;

use jetline::matrix::Matrix;
use jetline::multipoly::MultiPoly;
use jetline::p1::{K0Class, SplittingType};
use jetline::{Field, LaurentPoly, Scalar};

use crate::parse::{parse_poly, ParseError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum JsonError {
    #[error("{0}")]
    Shape(String),
    #[error("division by zero in coefficient {0}")]
    DivisionByZero(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub fn scalar_to_json(c: &Scalar) -> Value {
    match c {
        Scalar::Mod { value, .. } => Value::from(*value),
        Scalar::Rational(r) if r.is_integer() => match r.numer().to_i64() {
            Some(n) => Value::from(n),
            None => Value::from(r.numer().to_string()),
        },
        Scalar::Rational(_) => Value::from(c.to_string()),
    }
}

pub fn scalar_from_json(field: Field, v: &Value) -> Result<Scalar, JsonError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|k| field.from_i64(k))
            .or_else(|| n.as_u64().map(|k| field.from_bigint(&BigInt::from(k))))
            .ok_or_else(|| JsonError::Shape(format!("coefficient {n} is not an integer"))),
        Value::String(s) => {
            let (num, den) = s.split_once('/').unwrap_or((s, "1"));
            let parse = |x: &str| {
                x.trim()
                    .parse::<BigInt>()
                    .map_err(|_| JsonError::Shape(format!("coefficient {s:?} is not of the form a or a/b")))
            };
            field
                .fraction(&parse(num)?, &parse(den)?)
                .ok_or_else(|| JsonError::DivisionByZero(s.clone()))
        }
        other => Err(JsonError::Shape(format!("expected a coefficient, found {other}"))),
    }
}

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let map: Map<String, Value> = p.terms().map(|(e, c)| (e.to_string(), scalar_to_json(c))).collect();
    Value::Object(map)
}

/// Accepts an exponent map, a polynomial expression string or an integer.
pub fn poly_from_json(field: Field, v: &Value) -> Result<LaurentPoly, JsonError> {
    match v {
        Value::Object(map) => {
            let mut terms = Vec::with_capacity(map.len());
            for (k, c) in map {
                let e: i64 = k
                    .parse()
                    .map_err(|_| JsonError::Shape(format!("exponent {k:?} is not an integer")))?;
                terms.push((e, scalar_from_json(field, c)?));
            }
            Ok(LaurentPoly::from_terms(field, terms))
        }
        Value::String(s) => Ok(parse_poly(field, s)?),
        Value::Number(_) => Ok(LaurentPoly::constant(scalar_from_json(field, v)?)),
        other => Err(JsonError::Shape(format!("expected a polynomial, found {other}"))),
    }
}

pub fn poly_vec_to_json(v: &[LaurentPoly]) -> Value {
    Value::Array(v.iter().map(poly_to_json).collect())
}

pub fn matrix_to_json(m: &Matrix<LaurentPoly>) -> Value {
    Value::Array(m.row_slices().map(poly_vec_to_json).collect())
}

pub fn matrix_from_json(field: Field, v: &Value) -> Result<Matrix<LaurentPoly>, JsonError> {
    let rows = v
        .as_array()
        .ok_or_else(|| JsonError::Shape("a matrix is an array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| JsonError::Shape("each matrix row is an array".into()))?
                .iter()
                .map(|x| poly_from_json(field, x))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if rows.is_empty() {
        return Err(JsonError::Shape("matrix has no rows".into()));
    }
    Matrix::from_rows(&field, rows).map_err(|e| JsonError::Shape(e.to_string()))
}

pub fn multipoly_to_json(p: &MultiPoly) -> Value {
    let map: Map<String, Value> = p
        .terms()
        .map(|(e, c)| {
            let key = e.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
            (key, scalar_to_json(c))
        })
        .collect();
    Value::Object(map)
}

pub fn multipoly_vec_to_json(v: &[MultiPoly]) -> Value {
    Value::Array(v.iter().map(multipoly_to_json).collect())
}

pub fn splitting_to_json(s: &SplittingType) -> Value {
    Value::from(s.degrees().to_vec())
}

pub fn k0_to_json(c: &K0Class) -> Value {
    let mut map = Map::new();
    map.insert("degree".into(), Value::from(c.degree));
    map.insert("rank".into(), Value::from(c.rank));
    Value::Object(map)
}
