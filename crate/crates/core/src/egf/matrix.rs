use num_traits::{One, Zero};

use super::Egf;
use crate::rational::{parse_rational, Q};
use crate::{Error, Result};

/// Square `(N+1)×(N+1)` truncation of a row-finite matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowFiniteMatrix {
    entries: Vec<Vec<Q>>,
}

impl RowFiniteMatrix {
    pub fn from_rows(entries: Vec<Vec<Q>>) -> Result<Self> {
        let size = entries.len();
        if size == 0 {
            return Err(Error::Precondition(
                "a truncated matrix has at least one row".into(),
            ));
        }
        if let Some(bad) = entries.iter().position(|r| r.len() != size) {
            return Err(Error::Precondition(format!(
                "row {bad} has {} entries, expected {size}",
                entries[bad].len()
            )));
        }
        Ok(RowFiniteMatrix { entries })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> Q) -> Self {
        RowFiniteMatrix {
            entries: (0..=order)
                .map(|n| (0..=order).map(|k| f(n, k)).collect())
                .collect(),
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |n, k| if n == k { Q::one() } else { Q::zero() })
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_, _| Q::zero())
    }

    pub fn order(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> &Q {
        &self.entries[n][k]
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.entries
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self::from_fn(self.order(), |n, k| {
            self.get(n, k) + other.get(n, k)
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self::from_fn(self.order(), |n, k| {
            self.get(n, k) - other.get(n, k)
        }))
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_fn(self.order(), |n, k| self.get(n, k) * c)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let size = self.order() + 1;
        Ok(Self::from_fn(self.order(), |n, k| {
            (0..size).fold(Q::zero(), |acc, j| {
                let a = self.get(n, j);
                if a.is_zero() {
                    acc
                } else {
                    acc + a * other.get(j, k)
                }
            })
        }))
    }

    pub fn is_unipotent(&self) -> bool {
        self.entries.iter().enumerate().all(|(n, row)| {
            row.iter().enumerate().all(|(k, c)| match k.cmp(&n) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => c.is_one(),
                std::cmp::Ordering::Greater => c.is_zero(),
            })
        })
    }

    /// First entry that breaks unipotence, for diagnostics.
    fn unipotence_defect(&self) -> Option<String> {
        for (n, row) in self.entries.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if (k == n && !c.is_one()) || (k > n && !c.is_zero()) {
                    return Some(format!("entry ({n},{k}) = {c}"));
                }
            }
        }
        None
    }

    /// One CSV row per `n` with rational entries.
    pub fn to_csv(&self) -> String {
        self.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
                    + "\n"
            })
            .collect()
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()
                .map_err(|_| Error::parse("matrix csv", line_no, "invalid rational entry"))?;
            rows.push(row);
        }
        Self::from_rows(rows)
    }

    pub fn to_table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect();
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

/// `bₙ = Σ_k M(n,k)·aₖ`.
pub fn apply_matrix(m: &RowFiniteMatrix, f: &Egf) -> Result<Egf> {
    if m.order() != f.order() {
        return Err(Error::OrderMismatch {
            left: m.order(),
            right: f.order(),
        });
    }
    Ok(Egf::from_fn(f.order(), |n| {
        (0..=f.order()).fold(Q::zero(), |acc, k| acc + m.get(n, k) * f.coeff(k))
    }))
}

/// Unipotent lower-triangular matrix of a substitution `g ↦ g∘f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubstitutionMatrix {
    matrix: RowFiniteMatrix,
}

impl TryFrom<RowFiniteMatrix> for SubstitutionMatrix {
    type Error = Error;

    fn try_from(matrix: RowFiniteMatrix) -> Result<Self> {
        match matrix.unipotence_defect() {
            None => Ok(SubstitutionMatrix { matrix }),
            Some(defect) => Err(Error::NotUnipotent(defect)),
        }
    }
}

/// `M(n,k) = (n!/k!)·[xⁿ] f(x)^k`, i.e. the EGF coefficients of `f^k/k!`.
pub fn substitution_matrix(f: &Egf, order: usize) -> Result<SubstitutionMatrix> {
    if f.order() < order {
        return Err(Error::OrderMismatch {
            left: f.order(),
            right: order,
        });
    }
    let f = f.truncate(order)?;
    if !f.coeff(0).is_zero() {
        return Err(Error::Precondition(
            "substitution series must have f(0) = 0".into(),
        ));
    }
    if order >= 1 && !f.coeff(1).is_one() {
        return Err(Error::Precondition(
            "substitution series must have f'(0) = 1".into(),
        ));
    }
    let mut columns = Vec::with_capacity(order + 1);
    let mut power = Egf::one(order);
    for k in 0..=order {
        if k > 0 {
            power = power.multiply(&f)?.scale(&Q::new(1.into(), k.into()));
        }
        columns.push(power.clone());
    }
    Ok(SubstitutionMatrix {
        matrix: RowFiniteMatrix::from_fn(order, |n, k| columns[k].coeff(n).clone()),
    })
}

impl SubstitutionMatrix {
    pub fn identity(order: usize) -> Self {
        SubstitutionMatrix {
            matrix: RowFiniteMatrix::identity(order),
        }
    }

    pub fn matrix(&self) -> &RowFiniteMatrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    /// The substitution series `f` itself (column 1).
    pub fn series(&self) -> Egf {
        Egf::from_fn(self.order(), |n| {
            if self.order() == 0 {
                Q::zero()
            } else {
                self.matrix.get(n, 1).clone()
            }
        })
    }

    /// Product `self · other`; as transforms, applies `other` first.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(SubstitutionMatrix {
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn pow_int(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(self.order()), |acc, _| {
            acc.mul(&base).expect("same order")
        })
    }

    /// Exact inverse by forward substitution.
    pub fn inverse(&self) -> Self {
        let size = self.order() + 1;
        let mut inv = vec![vec![Q::zero(); size]; size];
        for n in 0..size {
            inv[n][n] = Q::one();
            // row n of M·inv vanishes below the diagonal
            for k in (0..n).rev() {
                let s = (k..n).fold(Q::zero(), |acc, j| acc + self.matrix.get(n, j) * &inv[j][k]);
                inv[n][k] = -s;
            }
        }
        SubstitutionMatrix {
            matrix: RowFiniteMatrix { entries: inv },
        }
    }

    /// `log M = Σ_{j≥1} (−1)^{j+1} (M−I)^j / j`; finite since `M − I` is
    /// strictly lower-triangular.
    pub fn log(&self) -> RowFiniteMatrix {
        let order = self.order();
        let nil = self
            .matrix
            .sub(&RowFiniteMatrix::identity(order))
            .expect("same order");
        let mut acc = RowFiniteMatrix::zero(order);
        let mut power = RowFiniteMatrix::identity(order);
        for j in 1..=order {
            power = power.mul(&nil).expect("same order");
            let c = Q::new(if j % 2 == 1 { 1.into() } else { (-1).into() }, j.into());
            acc = acc.add(&power.scale(&c)).expect("same order");
        }
        acc
    }

    /// Coordinate series of the infinitesimal generator, column 1 of `log M`.
    pub fn generator_series(&self) -> Egf {
        let log = self.log();
        Egf::from_fn(self.order(), |n| {
            if self.order() == 0 {
                Q::zero()
            } else {
                log.get(n, 1).clone()
            }
        })
    }
}

fn nilpotent_exp(m: &RowFiniteMatrix) -> RowFiniteMatrix {
    let order = m.order();
    let mut acc = RowFiniteMatrix::identity(order);
    let mut term = RowFiniteMatrix::identity(order);
    for j in 1..=order {
        term = term
            .mul(m)
            .expect("same order")
            .scale(&Q::new(1.into(), j.into()));
        acc = acc.add(&term).expect("same order");
    }
    acc
}

/// `M^λ = exp(λ·log M)` for any rational `λ`.
pub fn one_param_power(m: &SubstitutionMatrix, lambda: &Q) -> SubstitutionMatrix {
    SubstitutionMatrix {
        matrix: nilpotent_exp(&m.log().scale(lambda)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    fn stirling2(order: usize) -> SubstitutionMatrix {
        substitution_matrix(&Egf::exp_x(order).sub(&Egf::one(order)).unwrap(), order).unwrap()
    }

    fn ln1p(order: usize) -> Egf {
        Egf::one(order).add(&Egf::x(order)).unwrap().log().unwrap()
    }

    #[test]
    fn identity_substitution() {
        assert_eq!(
            substitution_matrix(&Egf::x(5), 5).unwrap(),
            SubstitutionMatrix::identity(5)
        );
    }

    #[test]
    fn stirling_table_orientation() {
        let m = stirling2(6);
        let row4: Vec<Q> = (0..=4).map(|k| m.matrix().get(4, k).clone()).collect();
        assert_eq!(row4, vec![q(0), q(1), q(7), q(6), q(1)]);
        assert!(m.matrix().get(2, 3).is_zero());
    }

    #[test]
    fn first_kind_is_inverse() {
        let s1 = substitution_matrix(&ln1p(7), 7).unwrap();
        assert_eq!(
            s1.mul(&stirling2(7)).unwrap(),
            SubstitutionMatrix::identity(7)
        );
        assert_eq!(*s1.matrix().get(4, 2), q(11));
        assert_eq!(*s1.matrix().get(4, 3), q(-6));
        assert_eq!(stirling2(7).inverse(), s1);
    }

    #[test]
    fn preconditions() {
        assert!(substitution_matrix(&Egf::exp_x(3), 3).is_err());
        assert!(substitution_matrix(&Egf::x(3).scale(&q(2)), 3).is_err());
        assert_eq!(
            substitution_matrix(&Egf::x(2), 3).unwrap_err().code(),
            "E_ORDER_MISMATCH"
        );
        let bad = RowFiniteMatrix::from_fn(2, |n, k| if n == k { q(2) } else { q(0) });
        assert_eq!(
            SubstitutionMatrix::try_from(bad).unwrap_err().code(),
            "E_NOT_UNIPOTENT"
        );
    }

    #[test]
    fn apply_examples() {
        let f = Egf::new(vec![q(1), q_frac(1, 3), q(-2)]).unwrap();
        assert_eq!(apply_matrix(&RowFiniteMatrix::identity(2), &f).unwrap(), f);
        assert_eq!(
            apply_matrix(&RowFiniteMatrix::zero(2), &f).unwrap(),
            Egf::zero(2)
        );
        let bell = apply_matrix(stirling2(4).matrix(), &Egf::exp_x(4)).unwrap();
        assert_eq!(*bell.coeff(3), q(5));
        assert!(apply_matrix(&RowFiniteMatrix::zero(3), &f).is_err());
    }

    #[test]
    fn half_power_squares_back() {
        let m = stirling2(6);
        let half = one_param_power(&m, &q_frac(1, 2));
        assert_eq!(half.mul(&half).unwrap(), m);
        assert!(half.matrix().is_unipotent());
    }

    #[test]
    fn generator_is_log_column() {
        // the generator of z ↦ z (identity) vanishes
        assert_eq!(
            SubstitutionMatrix::identity(4).generator_series(),
            Egf::zero(4)
        );
        let g = stirling2(4).generator_series();
        assert!(g.coeff(0).is_zero() && g.coeff(1).is_zero());
        assert_eq!(*g.coeff(2), q(1));
    }

    #[test]
    fn csv_round_trip() {
        let m = one_param_power(&stirling2(4), &q_frac(-1, 3));
        let back = RowFiniteMatrix::from_csv(&m.matrix().to_csv()).unwrap();
        assert_eq!(&back, m.matrix());
        assert!(RowFiniteMatrix::from_csv("1,0\n0").is_err());
    }
}
