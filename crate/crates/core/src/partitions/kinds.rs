use std::fmt;

use crate::{Error, Result};

fn fmt_blocks(blocks: &[Vec<usize>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for b in blocks {
        f.write_str("{")?;
        for (i, e) in b.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")?;
    }
    Ok(())
}

/// Unordered partition of `{1..n}`. Blocks are kept sorted internally and
/// ordered by their least element, which makes equality set equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Partition of `{1..n}` into a list of blocks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Checks blocks are nonempty, disjoint and cover `{1..n}` for `n` the
/// number of elements seen; sorts each block.
fn validate(mut blocks: Vec<Vec<usize>>) -> Result<(usize, Vec<Vec<usize>>)> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut seen = vec![false; n + 1];
    for b in &mut blocks {
        if b.is_empty() {
            return Err(Error::Precondition(
                "partition blocks must be nonempty".into(),
            ));
        }
        b.sort_unstable();
        for &e in b.iter() {
            if e == 0 || e > n {
                return Err(Error::Precondition(format!(
                    "element {e} is outside 1..={n}"
                )));
            }
            if seen[e] {
                return Err(Error::Precondition(format!("element {e} appears twice")));
            }
            seen[e] = true;
        }
    }
    Ok((n, blocks))
}

impl SetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let (n, mut blocks) = validate(blocks)?;
        blocks.sort_unstable();
        Ok(SetPartition { n, blocks })
    }

    pub(crate) fn from_sorted(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        SetPartition { n, blocks }
    }

    pub fn empty() -> Self {
        SetPartition {
            n: 0,
            blocks: vec![],
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The ordered partition listing the blocks by least element.
    pub fn to_ordered(&self) -> OrderedSetPartition {
        OrderedSetPartition {
            n: self.n,
            blocks: self.blocks.clone(),
        }
    }
}

impl OrderedSetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let (n, blocks) = validate(blocks)?;
        Ok(OrderedSetPartition { n, blocks })
    }

    pub(crate) fn from_sorted(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        OrderedSetPartition { n, blocks }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The forgetful map to unordered partitions.
    pub fn forget_order(&self) -> SetPartition {
        let mut blocks = self.blocks.clone();
        blocks.sort_unstable();
        SetPartition { n: self.n, blocks }
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_blocks(&self.blocks, f)
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_blocks(&self.blocks, f)
    }
}

fn parse_blocks(text: &str) -> Result<Vec<Vec<usize>>> {
    let err = |pos: usize, msg: &str| Error::parse("partition", pos, msg);
    let bytes = text.as_bytes();
    let mut blocks = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        if i == bytes.len() {
            return Ok(blocks);
        }
        if bytes[i] != b'{' {
            return Err(err(i, "expected '{'"));
        }
        i += 1;
        let mut block = Vec::new();
        loop {
            skip_ws(&mut i);
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(i, "expected an element"));
            }
            let value = text[start..i]
                .parse::<usize>()
                .map_err(|_| err(start, "element out of range"))?;
            block.push(value);
            skip_ws(&mut i);
            match bytes.get(i) {
                Some(b',') => i += 1,
                Some(b'}') => {
                    i += 1;
                    break;
                }
                _ => return Err(err(i, "expected ',' or '}'")),
            }
        }
        blocks.push(block);
    }
}

fn reposition(e: Error) -> Error {
    match e {
        Error::Precondition(msg) => Error::parse("partition", 0, msg),
        other => other,
    }
}

/// Parses `{1,2,5}{3,4,6}` with set semantics; the empty string is the
/// partition of the empty set.
pub fn parse_set_partition(text: &str) -> Result<SetPartition> {
    SetPartition::new(parse_blocks(text)?).map_err(reposition)
}

/// Parses `{1,2,5}{3,4,6}` with list semantics (blocks in reading order).
pub fn parse_ordered_partition(text: &str) -> Result<OrderedSetPartition> {
    OrderedSetPartition::new(parse_blocks(text)?).map_err(reposition)
}

/// Anything made of blocks over `{1..n}`.
pub trait Blocks {
    fn block_list(&self) -> &[Vec<usize>];
}

impl Blocks for SetPartition {
    fn block_list(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

impl Blocks for OrderedSetPartition {
    fn block_list(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = parse_ordered_partition("{3,4,6}{1,2,5}").unwrap();
        assert_eq!(p.to_string(), "{3,4,6}{1,2,5}");
        assert_eq!(p.forget_order().to_string(), "{1,2,5}{3,4,6}");
        let q = parse_set_partition(" { 5 , 6 }{1,2}{4,3}").unwrap();
        assert_eq!(q.to_string(), "{1,2}{3,4}{5,6}");
        assert_eq!(parse_set_partition("").unwrap(), SetPartition::empty());
    }

    #[test]
    fn invalid_partitions() {
        for bad in [
            "{1,2}{2}",
            "{1,3}",
            "{}",
            "{0}",
            "{1",
            "1",
            "{1,,2}",
            "{99999999999999999999999}",
        ] {
            assert_eq!(
                parse_set_partition(bad).unwrap_err().code(),
                "E_PARSE",
                "{bad}"
            );
        }
    }
}
