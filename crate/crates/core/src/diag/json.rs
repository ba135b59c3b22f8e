use serde::{Deserialize, Serialize};

use super::element::{LinComb, Tensor};
use super::{canonicalize, Diagram, PackedMatrix};
use crate::rational::parse_rational;
use crate::{Error, Result};

/// Basis elements serialized through the matrix text format.
pub trait MatrixBasis: Ord + Clone + Sized {
    fn matrix_text(&self) -> String;
    fn from_matrix(m: PackedMatrix) -> Self;
}

impl MatrixBasis for PackedMatrix {
    fn matrix_text(&self) -> String {
        self.to_text()
    }

    fn from_matrix(m: PackedMatrix) -> Self {
        m
    }
}

impl MatrixBasis for Diagram {
    fn matrix_text(&self) -> String {
        self.representative().to_text()
    }

    fn from_matrix(m: PackedMatrix) -> Self {
        canonicalize(&m)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    matrix: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorTermJson {
    left: String,
    right: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Terms<T> {
    terms: Vec<T>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse("json", e.column(), e.to_string())
}

fn basis<B: MatrixBasis>(text: &str) -> Result<B> {
    Ok(B::from_matrix(PackedMatrix::parse(text)?))
}

/// `{"terms":[{"matrix":"2 0;0 2","coeff":"1/2"}]}` in canonical term order.
pub fn element_to_json<B: MatrixBasis>(x: &LinComb<B>) -> String {
    let terms = x
        .terms()
        .map(|(b, c)| TermJson {
            matrix: b.matrix_text(),
            coeff: c.to_string(),
        })
        .collect();
    serde_json::to_string(&Terms { terms }).expect("plain strings serialize")
}

/// Inverse of [`element_to_json`]; repeated matrices are summed.
pub fn element_from_json<B: MatrixBasis>(text: &str) -> Result<LinComb<B>> {
    let raw: Terms<TermJson> = serde_json::from_str(text).map_err(json_error)?;
    let mut out = LinComb::zero();
    for t in raw.terms {
        out.add_term(basis(&t.matrix)?, parse_rational(&t.coeff)?);
    }
    Ok(out)
}

pub fn tensor_to_json<B: MatrixBasis>(t: &Tensor<B>) -> String {
    let terms = t
        .terms()
        .map(|((a, b), c)| TensorTermJson {
            left: a.matrix_text(),
            right: b.matrix_text(),
            coeff: c.to_string(),
        })
        .collect();
    serde_json::to_string(&Terms { terms }).expect("plain strings serialize")
}

pub fn tensor_from_json<B: MatrixBasis>(text: &str) -> Result<Tensor<B>> {
    let raw: Terms<TensorTermJson> = serde_json::from_str(text).map_err(json_error)?;
    let mut out = Tensor::zero();
    for t in raw.terms {
        out.add_term(
            (basis(&t.left)?, basis(&t.right)?),
            parse_rational(&t.coeff)?,
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diag::delta_ws;
    use crate::rational::{q, q_frac};

    #[test]
    fn element_round_trip() {
        let x: LinComb<PackedMatrix> = [
            (PackedMatrix::parse("2 0;0 2").unwrap(), q_frac(1, 2)),
            (PackedMatrix::empty(), q(-3)),
        ]
        .into_iter()
        .collect();
        let text = element_to_json(&x);
        assert_eq!(
            text,
            r#"{"terms":[{"matrix":"","coeff":"-3"},{"matrix":"2 0;0 2","coeff":"1/2"}]}"#
        );
        assert_eq!(element_from_json::<PackedMatrix>(&text).unwrap(), x);
    }

    #[test]
    fn diagram_parse_canonicalizes() {
        let x: LinComb<Diagram> = element_from_json(
            r#"{"terms":[{"matrix":"0 1;1 0","coeff":"1"},{"matrix":"1 0;0 1","coeff":"1"}]}"#,
        )
        .unwrap();
        assert_eq!(x.len(), 1);
        assert_eq!(x.terms().next().unwrap().1, &q(2));
    }

    #[test]
    fn tensor_round_trip() {
        let t = delta_ws(&LinComb::basis(PackedMatrix::parse("2 0;0 2;1 1").unwrap()));
        assert_eq!(
            tensor_from_json::<PackedMatrix>(&tensor_to_json(&t)).unwrap(),
            t
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(element_from_json::<PackedMatrix>("{").is_err());
        assert!(
            element_from_json::<PackedMatrix>(r#"{"terms":[{"matrix":"0 0","coeff":"1"}]}"#)
                .is_err()
        );
        assert!(
            element_from_json::<PackedMatrix>(r#"{"terms":[{"matrix":"1","coeff":"1/0"}]}"#)
                .is_err()
        );
    }
}
