use num_bigint::BigInt;
use num_traits::One;

use super::{Letter, NormalForm, WeylWord};
use crate::{Error, Result};

/// Whitespace-separated tokens with their byte offsets.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - text.as_ptr() as usize, tok))
}

fn letter(tok: &str) -> Option<Letter> {
    match tok {
        "a+" | "ad" => Some(Letter::Creation),
        "a" => Some(Letter::Annihilation),
        _ => None,
    }
}

/// Parses a boson word such as `"a+ a a a+ a+"` (`ad` is accepted for `a+`).
pub fn parse_word(text: &str) -> Result<WeylWord> {
    let mut letters = Vec::new();
    for (pos, tok) in tokens(text) {
        match letter(tok) {
            Some(l) => letters.push(l),
            None => {
                return Err(Error::parse(
                    "word",
                    pos,
                    format!("unknown token {tok:?}, expected \"a\" or \"a+\""),
                ))
            }
        }
    }
    Ok(WeylWord::new(letters))
}

fn flush(
    sign: &BigInt,
    coeff: &mut Option<BigInt>,
    letters: &mut Vec<Letter>,
    total: &mut NormalForm,
) {
    let c = sign * coeff.take().unwrap_or_else(BigInt::one);
    let word = WeylWord::new(std::mem::take(letters));
    let nf = NormalForm::from_word(&word);
    *total = total.add(&NormalForm::from_terms(
        nf.terms().map(|(kl, v)| (*kl, v * &c)),
    ));
}

/// Parses a Weyl-algebra element written as a signed sum of words with
/// optional integer coefficients, e.g. `"a+ a a+ + a+"` or `"2 a+ a - 1"`.
/// Each word is brought to normal form by the rewrite engine.
pub fn parse_element(text: &str) -> Result<NormalForm> {
    let mut total = NormalForm::zero();
    let mut sign = BigInt::one();
    let mut coeff: Option<BigInt> = None;
    let mut letters: Vec<Letter> = Vec::new();
    let mut term_open = false;
    let mut last_pos = 0;

    for (pos, tok) in tokens(text) {
        last_pos = pos;
        match tok {
            "+" | "-" => {
                if term_open {
                    flush(&sign, &mut coeff, &mut letters, &mut total);
                    term_open = false;
                    sign = BigInt::one();
                }
                if tok == "-" {
                    sign = -sign;
                }
            }
            _ => {
                if let Some(l) = letter(tok) {
                    letters.push(l);
                    term_open = true;
                } else if let Ok(n) = tok.parse::<BigInt>() {
                    if term_open {
                        return Err(Error::parse(
                            "element",
                            pos,
                            "coefficient must come before the letters of a term",
                        ));
                    }
                    coeff = Some(n);
                    term_open = true;
                } else {
                    return Err(Error::parse(
                        "element",
                        pos,
                        format!("unknown token {tok:?}"),
                    ));
                }
            }
        }
    }
    if term_open {
        flush(&sign, &mut coeff, &mut letters, &mut total);
    } else if !text.trim().is_empty() {
        return Err(Error::parse("element", last_pos, "dangling sign"));
    } else {
        return Err(Error::parse("element", 0, "empty element"));
    }
    Ok(total)
}

/// Parses the `k l coefficient` line format produced by
/// [`NormalForm::to_lines`]. Blank lines are ignored.
pub fn parse_normal_form_lines(text: &str) -> Result<NormalForm> {
    let mut out = NormalForm::zero();
    let mut offset = 0;
    for line in text.split('\n') {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !fields.is_empty() {
            if fields.len() != 3 {
                return Err(Error::parse(
                    "normal form",
                    offset,
                    "expected `k l coefficient`",
                ));
            }
            let k = fields[0]
                .parse::<u32>()
                .map_err(|_| Error::parse("normal form", offset, "invalid creation degree"))?;
            let l = fields[1]
                .parse::<u32>()
                .map_err(|_| Error::parse("normal form", offset, "invalid annihilation degree"))?;
            let c = fields[2]
                .parse::<BigInt>()
                .map_err(|_| Error::parse("normal form", offset, "invalid coefficient"))?;
            out.add_term(k, l, c);
        }
        offset += line.len() + 1;
    }
    Ok(out)
}
