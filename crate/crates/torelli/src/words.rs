//! Exact arithmetic in free groups and their endomorphism monoids.
//!
//! Elements of the free group `F_n` are kept in freely reduced normal form:
//! a word is a sequence of nonzero signed indices in `-n..=n`, positive for a
//! generator and negative for its inverse, with no adjacent cancelling pair.
//! Reduction happens eagerly on every construction.

use std::fmt;

use crate::error::{Error, Result};

/// A freely reduced word in the free group of a given rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: usize,
    letters: Vec<i32>,
}

fn reduce_into(letters: impl IntoIterator<Item = i32>, out: &mut Vec<i32>) {
    for l in letters {
        if let Some(&last) = out.last() {
            if last == -l {
                out.pop();
                continue;
            }
        }
        out.push(l);
    }
}

impl Word {
    /// Freely reduces a raw letter sequence. Letters must be nonzero with
    /// absolute value at most `rank`.
    pub fn reduce(letters: &[i32], rank: usize) -> Result<Word> {
        for &l in letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::MalformedWord(format!(
                    "letter {l} out of range for rank {rank}"
                )));
            }
        }
        let mut out = Vec::with_capacity(letters.len());
        reduce_into(letters.iter().copied(), &mut out);
        Ok(Word { rank, letters: out })
    }

    /// The identity element.
    pub fn identity(rank: usize) -> Word {
        Word { rank, letters: Vec::new() }
    }

    /// The `i`-th generator, `1 <= i <= rank`.
    pub fn generator(rank: usize, i: usize) -> Word {
        assert!(i >= 1 && i <= rank, "generator index out of range");
        Word { rank, letters: vec![i as i32] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced concatenation.
    pub fn mul(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut out = self.letters.clone();
        reduce_into(other.letters.iter().copied(), &mut out);
        Ok(Word { rank: self.rank, letters: out })
    }

    /// Inverse word: reverse and negate.
    pub fn inv(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Integer power.
    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = Word::identity(self.rank);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base).expect("equal ranks");
        }
        out
    }

    /// Group commutator `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(&self, other: &Word) -> Result<Word> {
        self.mul(other)?.mul(&self.inv())?.mul(&other.inv())
    }

    /// Exponent-sum vector of length `rank` (the abelianisation).
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            v[i] += if l > 0 { 1 } else { -1 };
        }
        v
    }

    /// Reinterprets the word in a larger ambient rank.
    pub fn embed(&self, rank: usize) -> Result<Word> {
        if rank < self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: rank });
        }
        Ok(Word { rank, letters: self.letters.clone() })
    }

    /// Parses the whitespace-separated token grammar: `x3` is generator 3,
    /// `X3` its inverse, the empty string the identity.
    pub fn parse(text: &str, rank: usize) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (sign, digits) = match tok.as_bytes().first() {
                Some(b'x') => (1i32, &tok[1..]),
                Some(b'X') => (-1i32, &tok[1..]),
                _ => return Err(Error::Parse(format!("bad token {tok:?}"))),
            };
            let idx: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index in {tok:?}")))?;
            if idx == 0 || idx > rank {
                return Err(Error::MalformedWord(format!(
                    "generator index {idx} out of range for rank {rank}"
                )));
            }
            letters.push(sign * idx as i32);
        }
        Word::reduce(&letters, rank)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "X{}", -l)?;
            }
        }
        Ok(())
    }
}

/// An endomorphism of the free group, given by generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeEndo {
    rank: usize,
    images: Vec<Word>,
}

impl FreeEndo {
    pub fn new(rank: usize, images: Vec<Word>) -> Result<FreeEndo> {
        if images.len() != rank {
            return Err(Error::Invalid(format!(
                "expected {rank} images, got {}",
                images.len()
            )));
        }
        for w in &images {
            if w.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: w.rank() });
            }
        }
        Ok(FreeEndo { rank, images })
    }

    pub fn identity(rank: usize) -> FreeEndo {
        FreeEndo {
            rank,
            images: (1..=rank).map(|i| Word::generator(rank, i)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Word {
        &self.images[i - 1]
    }

    /// Applies the endomorphism to a word by substitution.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: w.rank() });
        }
        let mut out = Vec::new();
        for &l in w.letters() {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                reduce_into(img.letters().iter().copied(), &mut out);
            } else {
                reduce_into(img.letters().iter().rev().map(|x| -x), &mut out);
            }
        }
        Ok(Word { rank: self.rank, letters: out })
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &FreeEndo) -> Result<FreeEndo> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        FreeEndo::new(self.rank, images)
    }

    /// Integer abelianisation matrix; column `i` is the exponent vector of
    /// the image of generator `i+1`.
    pub fn abelianization(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut m = vec![vec![0i64; n]; n];
        for (i, w) in self.images.iter().enumerate() {
            for (j, e) in w.exponent_sums().into_iter().enumerate() {
                m[j][i] = e;
            }
        }
        m
    }

    /// Extends by the identity on additional generators.
    pub fn embed(&self, rank: usize) -> Result<FreeEndo> {
        if rank < self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: rank });
        }
        let mut images: Vec<Word> = self
            .images
            .iter()
            .map(|w| w.embed(rank))
            .collect::<Result<Vec<_>>>()?;
        for i in self.rank + 1..=rank {
            images.push(Word::generator(rank, i));
        }
        FreeEndo::new(rank, images)
    }

    /// Parses the text form `n; w_1; w_2; ...; w_n` with images in the word
    /// grammar.
    pub fn parse(text: &str) -> Result<FreeEndo> {
        let mut parts = text.split(';');
        let rank: usize = parts
            .next()
            .ok_or_else(|| Error::Parse("empty endomorphism text".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("bad rank field".into()))?;
        let images: Vec<&str> = parts.collect();
        if images.len() != rank {
            return Err(Error::Parse(format!(
                "expected {rank} images, got {}",
                images.len()
            )));
        }
        let images = images
            .into_iter()
            .map(|t| Word::parse(t, rank))
            .collect::<Result<Vec<_>>>()?;
        FreeEndo::new(rank, images)
    }
}

impl fmt::Display for FreeEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rank)?;
        for w in &self.images {
            write!(f, "; {w}")?;
        }
        Ok(())
    }
}

/// An automorphism presented together with its inverse, so that commutators
/// and inverses stay at the word level without a general inversion algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutPair {
    pub fwd: FreeEndo,
    pub inv: FreeEndo,
}

impl AutPair {
    pub fn new(fwd: FreeEndo, inv: FreeEndo) -> Result<AutPair> {
        let id = FreeEndo::identity(fwd.rank());
        if fwd.compose(&inv)? != id || inv.compose(&fwd)? != id {
            return Err(Error::Invalid("claimed inverse does not invert".into()));
        }
        Ok(AutPair { fwd, inv })
    }

    pub fn identity(rank: usize) -> AutPair {
        AutPair {
            fwd: FreeEndo::identity(rank),
            inv: FreeEndo::identity(rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.fwd.rank()
    }

    pub fn compose(&self, other: &AutPair) -> Result<AutPair> {
        Ok(AutPair {
            fwd: self.fwd.compose(&other.fwd)?,
            inv: other.inv.compose(&self.inv)?,
        })
    }

    pub fn inverse(&self) -> AutPair {
        AutPair { fwd: self.inv.clone(), inv: self.fwd.clone() }
    }

    pub fn commutator(&self, other: &AutPair) -> Result<AutPair> {
        self.compose(other)?
            .compose(&self.inverse())?
            .compose(&other.inverse())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, rank: usize) -> Word {
        Word::parse(text, rank).unwrap()
    }

    #[test]
    fn reduce_cancels() {
        assert!(Word::reduce(&[1, -1], 2).unwrap().is_empty());
        assert!(Word::reduce(&[1, 2, -2, -1], 2).unwrap().is_empty());
        assert_eq!(Word::reduce(&[1, 2, -1], 2).unwrap().letters(), &[1, 2, -1]);
    }

    #[test]
    fn reduce_rejects_bad_letters() {
        assert!(Word::reduce(&[0], 2).is_err());
        assert!(Word::reduce(&[3], 2).is_err());
    }

    #[test]
    fn mul_and_inv() {
        let u = w("x1", 3);
        assert!(u.mul(&u.inv()).unwrap().is_empty());
        let a = w("x1 x2", 3);
        let b = w("X2 x3", 3);
        assert_eq!(a.mul(&b).unwrap(), w("x1 x3", 3));
        assert_eq!(Word::identity(3).mul(&w("x2", 3)).unwrap(), w("x2", 3));
        assert_eq!(w("x1 x2", 3).inv(), w("X2 X1", 3));
        assert_eq!(Word::identity(3).inv(), Word::identity(3));
        assert_eq!(w("X1", 3).inv(), w("x1", 3));
    }

    #[test]
    fn mul_rank_mismatch() {
        assert!(w("x1", 2).mul(&w("x1", 3)).is_err());
    }

    #[test]
    fn commutators() {
        let x1 = Word::generator(2, 1);
        assert!(x1.commutator(&x1).unwrap().is_empty());
        let x2 = Word::generator(2, 2);
        assert_eq!(x1.commutator(&x2).unwrap().letters(), &[1, 2, -1, -2]);
        // weight-3 commutator [[x1,x2],x3]: expand and reduce by hand
        let c = w("x1 x2 X1 X2", 3)
            .commutator(&Word::generator(3, 3))
            .unwrap();
        assert_eq!(c.letters(), &[1, 2, -1, -2, 3, 2, 1, -2, -1, -3]);
    }

    #[test]
    fn endo_apply_substitutes() {
        let phi = FreeEndo::new(2, vec![w("x1 x2", 2), w("x2", 2)]).unwrap();
        assert_eq!(phi.apply(&w("x1 X2", 2)).unwrap(), w("x1", 2));
        assert_eq!(phi.apply(&Word::identity(2)).unwrap(), Word::identity(2));
        let id = FreeEndo::identity(2);
        let u = w("x1 x2 X1", 2);
        assert_eq!(id.apply(&u).unwrap(), u);
    }

    #[test]
    fn endo_compose_matches_apply() {
        let phi = FreeEndo::new(2, vec![w("x1 x2", 2), w("x2", 2)]).unwrap();
        let psi = FreeEndo::new(2, vec![w("x1 X2", 2), w("x2", 2)]).unwrap();
        assert_eq!(phi.compose(&psi).unwrap(), FreeEndo::identity(2));
        assert_eq!(phi.compose(&FreeEndo::identity(2)).unwrap(), phi);
        // permutation endos compose as permutations
        let swap = FreeEndo::new(2, vec![w("x2", 2), w("x1", 2)]).unwrap();
        assert_eq!(swap.compose(&swap).unwrap(), FreeEndo::identity(2));
    }

    #[test]
    fn endo_is_homomorphism() {
        let phi = FreeEndo::new(3, vec![w("x1 x2", 3), w("x3 X1", 3), w("x2", 3)]).unwrap();
        let u = w("x1 x3 X2", 3);
        let v = w("x2 x2 X3", 3);
        let lhs = phi.apply(&u.mul(&v).unwrap()).unwrap();
        let rhs = phi.apply(&u).unwrap().mul(&phi.apply(&v).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_round_trip() {
        let u = w("x1 X2 x3", 3);
        assert_eq!(Word::parse(&u.to_string(), 3).unwrap(), u);
        let phi = FreeEndo::new(2, vec![w("x1 x2", 2), w("X1", 2)]).unwrap();
        assert_eq!(FreeEndo::parse(&phi.to_string()).unwrap(), phi);
        assert!(Word::parse("y1", 2).is_err());
        assert!(Word::parse("x0", 2).is_err());
    }

    #[test]
    fn aut_pair_commutator() {
        let a = AutPair::new(
            FreeEndo::new(2, vec![w("x1 x2", 2), w("x2", 2)]).unwrap(),
            FreeEndo::new(2, vec![w("x1 X2", 2), w("x2", 2)]).unwrap(),
        )
        .unwrap();
        let b = AutPair::new(
            FreeEndo::new(2, vec![w("x1", 2), w("x2 x1", 2)]).unwrap(),
            FreeEndo::new(2, vec![w("x1", 2), w("x2 X1", 2)]).unwrap(),
        )
        .unwrap();
        let c = a.commutator(&b).unwrap();
        let id = FreeEndo::identity(2);
        assert_eq!(c.fwd.compose(&c.inv).unwrap(), id);
    }
}
