//! Words over `{1, 2}`: the basis of tensor space.
//!
//! A word of length `n` is packed into an integer with letter `1` as bit 0,
//! letter `2` as bit 1 and the leftmost letter in the most significant
//! position, so lexicographic order is integer order and the packed value is
//! the basis index.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::SparseVector;

pub const MAX_LEN: usize = 63;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    bits: u64,
    len: u8,
}

impl Word {
    pub fn from_index(index: usize, len: usize) -> Self {
        assert!(len <= MAX_LEN && (index as u64) < (1u64 << len));
        Word {
            bits: index as u64,
            len: len as u8,
        }
    }

    /// Build from letters, each `1` or `2`.
    pub fn from_letters(letters: &[u8]) -> Result<Self> {
        if letters.len() > MAX_LEN {
            return Err(Error::OutOfRange {
                what: "word length",
                value: letters.len() as i64,
            });
        }
        let mut bits = 0u64;
        for &l in letters {
            bits <<= 1;
            match l {
                1 => {}
                2 => bits |= 1,
                _ => {
                    return Err(Error::OutOfRange {
                        what: "letter",
                        value: l as i64,
                    })
                }
            }
        }
        Ok(Word {
            bits,
            len: letters.len() as u8,
        })
    }

    /// `1^r 2^(n-r)`, the generator of the weight-`r` sector.
    pub fn generator(n: usize, r: usize) -> Self {
        assert!(r <= n && n <= MAX_LEN);
        Word {
            bits: (1u64 << (n - r)) - 1,
            len: n as u8,
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn index(&self) -> usize {
        self.bits as usize
    }

    /// Letter at 1-based position `pos`.
    pub fn letter(&self, pos: usize) -> u8 {
        assert!(pos >= 1 && pos <= self.len());
        if (self.bits >> (self.len() - pos)) & 1 == 1 {
            2
        } else {
            1
        }
    }

    pub fn letters(&self) -> Vec<u8> {
        (1..=self.len()).map(|p| self.letter(p)).collect()
    }

    /// Number of letters equal to `1`.
    pub fn weight(&self) -> usize {
        self.len() - self.bits.count_ones() as usize
    }

    pub fn concat(&self, other: &Word) -> Word {
        let len = self.len() + other.len();
        assert!(len <= MAX_LEN);
        Word {
            bits: (self.bits << other.len) | other.bits,
            len: len as u8,
        }
    }

    /// `a w b` for letters `a`, `b`.
    pub fn wrap(&self, a: u8, b: u8) -> Word {
        let a = Word::from_letters(&[a]).expect("letter");
        let b = Word::from_letters(&[b]).expect("letter");
        a.concat(self).concat(&b)
    }

    /// First 1-based position `k` with letters `1 2` at `k, k+1`.
    pub fn first_12(&self) -> Option<usize> {
        (1..self.len()).find(|&k| self.letter(k) == 1 && self.letter(k + 1) == 2)
    }

    pub fn lex_compare(&self, other: &Word) -> Result<Ordering> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(self.bits.cmp(&other.bits))
    }

    /// All words of length `n` in lex order.
    pub fn all(n: usize) -> impl Iterator<Item = Word> {
        assert!(n <= 32, "refusing to enumerate 2^{n} words");
        (0..1usize << n).map(move |i| Word::from_index(i, n))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters: Vec<u8> = s
            .chars()
            .map(|c| match c {
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(Error::Parse(format!("bad letter {c:?} in word {s:?}"))),
            })
            .collect::<Result<_>>()?;
        Word::from_letters(&letters)
    }
}

/// The words of length `n` with exactly `r` ones, in lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector {
    pub n: usize,
    pub r: usize,
    pub words: Vec<Word>,
}

impl Sector {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.n && w.weight() == self.r
    }

    /// Newline-separated digit strings.
    pub fn render(&self) -> String {
        self.words.iter().map(|w| format!("{w}\n")).collect()
    }
}

pub fn enumerate_sector(n: usize, r: usize) -> Result<Sector> {
    if r > n {
        return Err(Error::OutOfRange {
            what: "sector weight",
            value: r as i64,
        });
    }
    if n > MAX_LEN {
        return Err(Error::OutOfRange {
            what: "word length",
            value: n as i64,
        });
    }
    // lex order on words of fixed weight = increasing bit patterns with n-r set bits
    let twos = n - r;
    let mut words = Vec::new();
    if twos == 0 {
        words.push(Word { bits: 0, len: n as u8 });
    } else {
        let mut v: u64 = (1u64 << twos) - 1;
        let limit = 1u64 << n;
        while v < limit {
            words.push(Word { bits: v, len: n as u8 });
            // next larger integer with the same popcount
            let t = v | (v - 1);
            let next = (t + 1) | (((!t & (!t).wrapping_neg()) - 1) >> (v.trailing_zeros() + 1));
            if next <= v {
                break;
            }
            v = next;
        }
    }
    Ok(Sector { n, r, words })
}

/// Lex-earliest word in the support of `v`.
pub fn u_map<C: crate::scalar::Scalar>(v: &SparseVector<C>) -> Result<Word> {
    let len = v.dim().trailing_zeros() as usize;
    debug_assert_eq!(1usize << len, v.dim());
    v.min_index()
        .map(|i| Word::from_index(i, len))
        .ok_or(Error::ZeroVector)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn lex_order_examples() {
        assert_eq!(w("1122").lex_compare(&w("1212")).unwrap(), Ordering::Less);
        assert_eq!(w("1212").lex_compare(&w("1212")).unwrap(), Ordering::Equal);
        let all: Vec<String> = Word::all(2).map(|x| x.to_string()).collect();
        assert_eq!(all, ["11", "12", "21", "22"]);
        assert!(matches!(
            w("12").lex_compare(&w("121")),
            Err(Error::LengthMismatch(2, 3))
        ));
    }

    #[test]
    fn sector_examples() {
        assert_eq!(enumerate_sector(4, 2).unwrap().len(), 6);
        let s = enumerate_sector(5, 0).unwrap();
        assert_eq!(s.words, vec![w("22222")]);
        let s = enumerate_sector(3, 1).unwrap();
        assert_eq!(s.render(), "122\n212\n221\n");
        assert!(enumerate_sector(3, 4).is_err());
        assert_eq!(enumerate_sector(0, 0).unwrap().words.len(), 1);
    }

    #[test]
    fn sector_contains_generator() {
        for n in 0..10 {
            for r in 0..=n {
                let s = enumerate_sector(n, r).unwrap();
                assert!(s.words.contains(&Word::generator(n, r)));
                assert!(s.words.windows(2).all(|p| p[0].index() < p[1].index()));
                assert!(s.words.iter().all(|x| x.weight() == r));
            }
        }
        assert_eq!(Word::generator(5, 2).to_string(), "11222");
    }

    #[test]
    fn sector_sizes_sum_to_two_to_the_n() {
        for n in 0..=16usize {
            let total: usize = (0..=n).map(|r| enumerate_sector(n, r).unwrap().len()).sum();
            assert_eq!(total, 1 << n);
        }
    }

    #[test]
    fn lex_compare_agrees_with_rank_order() {
        for n in 0..=8 {
            let words: Vec<Word> = Word::all(n).collect();
            for a in &words {
                for b in &words {
                    // independent oracle: compare letter sequences
                    assert_eq!(a.lex_compare(b).unwrap(), a.letters().cmp(&b.letters()));
                }
            }
        }
    }

    #[test]
    fn word_helpers() {
        assert_eq!(w("2121").first_12(), Some(2));
        assert_eq!(w("2211").first_12(), None);
        assert_eq!(w("12").wrap(2, 1).to_string(), "2121");
        assert_eq!(w("1212").weight(), 2);
        assert!("13".parse::<Word>().is_err());
    }

    #[test]
    fn u_map_of_basis_word_is_the_word() {
        use crate::coeff::RingElement;
        let v = SparseVector::basis(16, w("2112").index(), RingElement::one());
        assert_eq!(u_map(&v).unwrap(), w("2112"));
        let zero: SparseVector<RingElement> = SparseVector::zero(16);
        assert_eq!(u_map(&zero), Err(Error::ZeroVector));
    }
}
