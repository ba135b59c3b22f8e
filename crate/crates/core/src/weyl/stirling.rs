use num_bigint::BigInt;
use num_traits::Zero;

use super::NormalForm;
use crate::{Error, Result};

/// Common value of `k − l` over the terms of a homogeneous element.
pub fn excess(omega: &NormalForm) -> Result<i64> {
    let mut terms = omega.terms();
    let (&(k0, l0), _) = terms
        .next()
        .ok_or_else(|| Error::Precondition("the zero element has no excess".into()))?;
    let e = k0 as i64 - l0 as i64;
    for (&(k, l), _) in terms {
        let e2 = k as i64 - l as i64;
        if e2 != e {
            return Err(Error::NotHomogeneous {
                first: format!("(a+)^{k0} a^{l0}"),
                first_excess: e,
                second: format!("(a+)^{k} a^{l}"),
                second_excess: e2,
            });
        }
    }
    Ok(e)
}

/// The unique monomial of maximal length `k + l` of a homogeneous element,
/// as `((k₀, l₀), c(k₀, l₀))`.
pub fn dominant_term(omega: &NormalForm) -> Result<((u32, u32), BigInt)> {
    excess(omega)?;
    omega
        .terms()
        .max_by_key(|(&(k, l), _)| k + l)
        .map(|(&kl, c)| (kl, c.clone()))
        .ok_or_else(|| Error::Precondition("the zero element has no dominant term".into()))
}

/// Generalized Stirling matrix `S_Ω(n, k)` for `n = 0..=n_max`.
///
/// Rows are stored up to their last nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingMatrix {
    rows: Vec<Vec<BigInt>>,
    excess: i64,
}

/// `N(Ω^n) = (a⁺)^(ne) Σ_k S(n,k) (a⁺)^k a^k` for `e ≥ 0`, and
/// `(Σ_k S(n,k) (a⁺)^k a^k) a^(n|e|)` for `e < 0`.
pub fn stirling_matrix(omega: &NormalForm, n_max: usize) -> Result<StirlingMatrix> {
    let e = excess(omega)?;
    if e < 0 {
        // the mirrored element has excess |e| and exactly the same matrix
        let mirrored = stirling_matrix(&omega.mirror(), n_max)?;
        return Ok(StirlingMatrix {
            rows: mirrored.rows,
            excess: e,
        });
    }
    let shift = e as u32;
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut power = NormalForm::one();
    for n in 0..=n_max {
        if n > 0 {
            power = power.mul(omega);
        }
        let mut row: Vec<BigInt> = Vec::new();
        for (&(k, l), c) in power.terms() {
            debug_assert_eq!(k, l + shift * n as u32);
            let col = l as usize;
            if row.len() <= col {
                row.resize(col + 1, BigInt::zero());
            }
            row[col] = c.clone();
        }
        rows.push(row);
    }
    Ok(StirlingMatrix { rows, excess: e })
}

impl StirlingMatrix {
    pub fn excess(&self) -> i64 {
        self.excess
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn width(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Column and value of the rightmost nonzero entry of row `n`.
    pub fn rightmost(&self, n: usize) -> Option<(usize, &BigInt)> {
        let row = self.rows.get(n)?;
        row.iter().enumerate().rev().find(|(_, c)| !c.is_zero())
    }

    /// Lower-triangular with a nonzero diagonal.
    pub fn is_triangular(&self) -> bool {
        self.rows.iter().enumerate().all(|(n, row)| {
            row.iter().skip(n + 1).all(Zero::is_zero) && row.get(n).is_some_and(|d| !d.is_zero())
        })
    }

    fn padded(&self) -> Vec<Vec<String>> {
        let width = self.width();
        self.rows
            .iter()
            .map(|r| {
                (0..width)
                    .map(|k| r.get(k).cloned().unwrap_or_default().to_string())
                    .collect()
            })
            .collect()
    }

    /// One CSV row per `n`, zero-padded to a common width.
    pub fn to_csv(&self) -> String {
        self.padded().iter().map(|r| r.join(",") + "\n").collect()
    }

    /// JSON array of rows, each row cut after its last nonzero entry.
    pub fn to_json(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        format!("[{}]", rows.join(","))
    }

    /// Right-aligned table with a bracket on the left of every row.
    pub fn to_table(&self) -> String {
        let cells = self.padded();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        cells
            .iter()
            .map(|r| {
                let body: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
                format!("[ {}\n", body.join(" "))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::parse_element;

    fn rows(m: &StirlingMatrix) -> Vec<Vec<i64>> {
        m.rows()
            .iter()
            .map(|r| r.iter().map(|c| i64::try_from(c).unwrap()).collect())
            .collect()
    }

    #[test]
    fn number_operator_gives_stirling_second_kind() {
        let m = stirling_matrix(&parse_element("a+ a").unwrap(), 6).unwrap();
        assert_eq!(rows(&m)[4], vec![0, 1, 7, 6, 1]);
        assert_eq!(rows(&m)[6], vec![0, 1, 31, 90, 65, 15, 1]);
        assert!(m.is_triangular());
    }

    #[test]
    fn excess_values() {
        assert_eq!(excess(&parse_element("a+ a").unwrap()).unwrap(), 0);
        assert_eq!(excess(&parse_element("a+ a a+ + a+").unwrap()).unwrap(), 1);
        assert_eq!(excess(&parse_element("a+ a a a+ a+").unwrap()).unwrap(), 1);
        assert_eq!(excess(&parse_element("a a a+").unwrap()).unwrap(), -1);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let err = stirling_matrix(&parse_element("a+ a + a").unwrap(), 2).unwrap_err();
        assert_eq!(err.code(), "E_NOT_HOMOGENEOUS");
        assert!(excess(&NormalForm::zero()).is_err());
    }

    #[test]
    fn negative_excess_mirrors() {
        // (a a a⁺)^n mirrored is (a a⁺ a⁺)^n; both share the matrix
        let omega = parse_element("a a a+").unwrap();
        let m = stirling_matrix(&omega, 3).unwrap();
        assert_eq!(m.excess(), -1);
        for n in 0..=3u32 {
            let power = omega.pow(n);
            for (k, c) in m.row(n as usize).iter().enumerate() {
                assert_eq!(&power.coeff(k as u32, k as u32 + n), c);
            }
        }
    }

    #[test]
    fn serializations() {
        let m = stirling_matrix(&parse_element("a+ a").unwrap(), 2).unwrap();
        assert_eq!(m.to_csv(), "1,0,0\n0,1,0\n0,1,1\n");
        assert_eq!(m.to_json(), "[[1],[0,1],[0,1,1]]");
        assert_eq!(m.to_table(), "[ 1 0 0\n[ 0 1 0\n[ 0 1 1\n");
    }
}
