use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Blocks;
use crate::poly::{Mono, Poly, Var};
use crate::rational::{factorial, Q};
use crate::{Error, Result};

/// Block-size multiplicities `α = (α₁, α₂, …)`; trailing zeros are trimmed,
/// so `(0,2)` and `(0,2,0)` are the same type.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionType {
    alpha: Vec<usize>,
}

impl PartitionType {
    pub fn new(mut alpha: Vec<usize>) -> Self {
        while alpha.last() == Some(&0) {
            alpha.pop();
        }
        PartitionType { alpha }
    }

    /// Type with `count` parts of each listed size.
    pub fn from_sizes(sizes: impl IntoIterator<Item = usize>) -> Self {
        let mut alpha = Vec::new();
        for s in sizes {
            if s == 0 {
                continue;
            }
            if alpha.len() < s {
                alpha.resize(s, 0);
            }
            alpha[s - 1] += 1;
        }
        Self::new(alpha)
    }

    /// `αⱼ`, 1-based.
    pub fn get(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.alpha.get(j - 1).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.alpha
    }

    /// `||α|| = Σ j·αⱼ`, the size of the ground set.
    pub fn weight(&self) -> usize {
        self.alpha
            .iter()
            .enumerate()
            .map(|(i, a)| (i + 1) * a)
            .sum()
    }

    /// `|α| = Σ αⱼ`, the number of blocks.
    pub fn block_count(&self) -> usize {
        self.alpha.iter().sum()
    }

    /// `𝕃^α` over the variables produced by `var(j)`.
    pub fn monomial(&self, var: impl Fn(u32) -> Var) -> Mono<Var> {
        Mono::from_pairs(
            self.alpha
                .iter()
                .enumerate()
                .map(|(i, &a)| (var(i as u32 + 1), a as u32)),
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "()" {
            return Ok(PartitionType::default());
        }
        let inner = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(text);
        let mut alpha = Vec::new();
        let mut offset = 0;
        for field in inner.split(',') {
            let v = field.trim().parse::<usize>().map_err(|_| {
                Error::parse(
                    "partition type",
                    offset,
                    format!("invalid multiplicity {:?}", field.trim()),
                )
            })?;
            alpha.push(v);
            offset += field.len() + 1;
        }
        Ok(Self::new(alpha))
    }
}

impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.alpha.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `αⱼ` = number of blocks of size `j`.
pub fn type_of<P: Blocks>(p: &P) -> PartitionType {
    PartitionType::from_sizes(p.block_list().iter().map(Vec::len))
}

/// `((α)) = ||α||! / Π (j!)^{αⱼ} αⱼ!`, the number of set partitions of type `α`.
pub fn faa_di_bruno(alpha: &PartitionType) -> BigInt {
    let mut den = BigInt::from(1);
    for (i, &a) in alpha.as_slice().iter().enumerate() {
        den *= factorial(i + 1).pow(a as u32) * factorial(a);
    }
    factorial(alpha.weight()) / den
}

/// Every type of weight `n`, in increasing order.
pub fn types_of_weight(n: usize) -> Vec<PartitionType> {
    fn rec(
        remaining: usize,
        max_part: usize,
        parts: &mut Vec<usize>,
        out: &mut Vec<PartitionType>,
    ) {
        if remaining == 0 {
            out.push(PartitionType::from_sizes(parts.iter().copied()));
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            parts.push(p);
            rec(remaining - p, p, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `Yₙ(𝕃) = Σ_{||α||=n} ((α)) 𝕃^α`.
pub fn complete_bell(n: usize) -> Poly<Var> {
    let mut out = Poly::zero();
    for alpha in types_of_weight(n) {
        out.add_term(
            alpha.monomial(Var::L),
            Q::from_integer(faa_di_bruno(&alpha)),
        );
    }
    out
}

/// Evaluates `Yₙ` at `Lᵢ = 1` for all `i`; equals the Bell number.
pub fn bell_number(n: usize) -> BigInt {
    types_of_weight(n)
        .iter()
        .map(faa_di_bruno)
        .fold(BigInt::zero(), |a, b| a + b)
}
