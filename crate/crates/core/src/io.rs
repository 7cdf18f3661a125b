//! Text serialization of matrices, flags and subspaces.
//!
//! A matrix file is `{"field": <tag>, "rows": [[entry, ...], ...]}` where the
//! tag is `"rational"`, `{"prime": p}` or `"sqrt5"` and entries are decimal
//! strings such as `"3"`, `"-2/7"` or `"1+3*s5"`. Plain JSON integers are
//! accepted as entries too. Flags list their adapted basis as columns, and
//! subspaces their basis as columns.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::matrix::Mat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn text(&self) -> String {
        match self {
            Entry::Int(x) => x.to_string(),
            Entry::Text(t) => t.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub field: FieldSpec,
    pub rows: Vec<Vec<Entry>>,
}

impl MatrixFile {
    pub fn from_matrix<F: Field>(f: &F, m: &Mat<F::Elem>) -> Self {
        MatrixFile { field: f.spec(), rows: to_strings(f, m).into_iter().map(|r| r.into_iter().map(Entry::Text).collect()).collect() }
    }

    /// Parse the entries in `f`, which must match the declared field.
    pub fn to_matrix<F: Field>(&self, f: &F) -> Result<Mat<F::Elem>> {
        if self.field != f.spec() {
            return Err(Error::Parse(format!("file is over {}, expected {}", self.field, f.spec())));
        }
        let rows: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Entry::text).collect()).collect();
        from_strings(f, &rows)
    }
}

pub fn to_strings<F: Field>(f: &F, m: &Mat<F::Elem>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| f.format(x)).collect()).collect()
}

pub fn from_strings<F: Field>(f: &F, rows: &[Vec<String>]) -> Result<Mat<F::Elem>> {
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, t)| {
                    f.parse(t).map_err(|e| Error::Parse(format!("row {}, column {}: {e}", i + 1, j + 1)))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Mat::from_rows(parsed)
}

/// An exact rational written as a `[numerator, denominator]` pair. Numbers
/// outside the 64-bit range are written as strings. On input, a bare integer
/// or a string such as `"-3/4"` is accepted as well.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ratio(pub BigRational);

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BigNum {
    Small(i64),
    Text(String),
}

impl BigNum {
    fn of(x: &BigInt) -> Self {
        x.to_i64().map_or_else(|| BigNum::Text(x.to_string()), BigNum::Small)
    }

    fn value(&self) -> std::result::Result<BigInt, String> {
        match self {
            BigNum::Small(x) => Ok(BigInt::from(*x)),
            BigNum::Text(t) => t.trim().parse().map_err(|_| format!("not an integer: {t:?}")),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRatio {
    Pair(BigNum, BigNum),
    Int(i64),
    Text(String),
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (BigNum::of(self.0.numer()), BigNum::of(self.0.denom())).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Ratio {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let value = match RawRatio::deserialize(d)? {
            RawRatio::Int(x) => BigRational::from_integer(x.into()),
            RawRatio::Text(t) => crate::field::Rationals.parse(&t).map_err(D::Error::custom)?,
            RawRatio::Pair(num, den) => {
                let num = num.value().map_err(D::Error::custom)?;
                let den = den.value().map_err(D::Error::custom)?;
                if den == BigInt::from(0) {
                    return Err(D::Error::custom("zero denominator"));
                }
                BigRational::new(num, den)
            }
        };
        Ok(Ratio(value))
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, Sqrt5Field};

    #[test]
    fn json_shapes() {
        let q = Rationals;
        let m = Mat::from_rows(vec![vec![q.parse("1/2").unwrap(), q.from_i64(-3)]]).unwrap();
        let text = serde_json::to_string(&MatrixFile::from_matrix(&q, &m)).unwrap();
        assert_eq!(text, r#"{"field":"rational","rows":[["1/2","-3"]]}"#);
        let back: MatrixFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_matrix(&q).unwrap(), m);

        let p = PrimeField::new(7).unwrap();
        let file: MatrixFile = serde_json::from_str(r#"{"field":{"prime":7},"rows":[[8,"-1"]]}"#).unwrap();
        assert_eq!(file.to_matrix(&p).unwrap().row(0), &[1, 6]);
        assert!(file.to_matrix(&q).is_err());

        let s5 = Sqrt5Field;
        let file: MatrixFile = serde_json::from_str(r#"{"field":"sqrt5","rows":[["2-24*s5"]]}"#).unwrap();
        assert_eq!(file.to_matrix(&s5).unwrap().row(0)[0], crate::field::Sqrt5::from_ints(2, -24));
    }

    #[test]
    fn ratio_forms() {
        let half = Ratio(BigRational::new(1.into(), 2.into()));
        assert_eq!(serde_json::to_string(&half).unwrap(), "[1,2]");
        for text in ["[1,2]", "\"1/2\"", "[\"2\",4]"] {
            assert_eq!(serde_json::from_str::<Ratio>(text).unwrap(), half, "{text}");
        }
        assert_eq!(serde_json::from_str::<Ratio>("-3").unwrap().to_string(), "-3");
        assert!(serde_json::from_str::<Ratio>("[1,0]").is_err());
    }
}
