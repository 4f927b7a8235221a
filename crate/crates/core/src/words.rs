//! Pair-partition words.
//!
//! A pair partition of `{1, ..., 2k}` is written as a word of length `2k` in
//! which every letter occurs exactly twice and letters first appear in
//! increasing order (`aabb`, `abba`, `abab` for `k = 2`). Letters are stored
//! as integer ids; the alphabetic form is only used for display and parsing.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// Largest half-length accepted by [`enumerate_words`].
pub const DEFAULT_MAX_HALF_LENGTH: usize = 8;

/// Hard ceiling for configurable caps; letter ids are stored as `u8`.
pub const ABSOLUTE_MAX_HALF_LENGTH: usize = 26;

/// Canonical word of a pair partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionWord {
    letters: Vec<u8>,
}

impl PartitionWord {
    /// Validates `letters` and wraps them.
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.is_empty() || letters.len() % 2 != 0 {
            return Err(invalid(format!(
                "partition word must have positive even length, got {}",
                letters.len()
            )));
        }
        let k = letters.len() / 2;
        if k > ABSOLUTE_MAX_HALF_LENGTH {
            return Err(invalid(format!("half-length {k} exceeds {ABSOLUTE_MAX_HALF_LENGTH}")));
        }
        let mut counts = vec![0usize; k];
        let mut next = 0u8;
        for &l in &letters {
            let id = l as usize;
            if id >= k {
                return Err(invalid(format!("letter id {id} out of range for k = {k}")));
            }
            if counts[id] == 0 {
                if l != next {
                    return Err(invalid("letters must first occur in increasing order"));
                }
                next += 1;
            }
            counts[id] += 1;
            if counts[id] > 2 {
                return Err(invalid(format!("letter id {id} occurs more than twice")));
            }
        }
        if counts.iter().any(|&c| c != 2) {
            return Err(invalid("every letter must occur exactly twice"));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Half-length `k`; the word has `2k` letters.
    pub fn half_len(&self) -> usize {
        self.letters.len() / 2
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// For each position, the position of the other occurrence of its letter.
    pub fn partners(&self) -> Vec<usize> {
        let k = self.half_len();
        let mut first = vec![usize::MAX; k];
        let mut partner = vec![0; self.letters.len()];
        for (pos, &l) in self.letters.iter().enumerate() {
            let id = l as usize;
            if first[id] == usize::MAX {
                first[id] = pos;
            } else {
                partner[pos] = first[id];
                partner[first[id]] = pos;
            }
        }
        partner
    }

    /// `(first, second)` zero-based positions of each letter, indexed by letter id.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let partner = self.partners();
        let mut out = vec![(0, 0); self.half_len()];
        for (pos, &l) in self.letters.iter().enumerate() {
            if partner[pos] > pos {
                out[l as usize] = (pos, partner[pos]);
            }
        }
        out
    }

    /// Returns the canonical relabelling of an arbitrary letter sequence in
    /// which every symbol occurs exactly twice.
    pub fn canonicalize(raw: &[u8]) -> Result<Self> {
        let mut map = std::collections::HashMap::new();
        let mut out = Vec::with_capacity(raw.len());
        for &c in raw {
            let next = map.len() as u8;
            out.push(*map.entry(c).or_insert(next));
        }
        Self::new(out)
    }
}

fn is_closed(partner: &[usize], start: usize, end: usize) -> bool {
    (start..end).all(|p| partner[p] >= start && partner[p] < end)
}

/// All pair-partition words of length `2k`, in lexicographic order.
///
/// Fails for `k = 0` and for `k` above [`DEFAULT_MAX_HALF_LENGTH`].
pub fn enumerate_words(k: usize) -> Result<Vec<PartitionWord>> {
    enumerate_words_capped(k, DEFAULT_MAX_HALF_LENGTH)
}

pub fn enumerate_words_capped(k: usize, cap: usize) -> Result<Vec<PartitionWord>> {
    if k == 0 {
        return Err(invalid("half-length k must be at least 1"));
    }
    let cap = cap.min(ABSOLUTE_MAX_HALF_LENGTH);
    if k > cap {
        return Err(invalid(format!("half-length k = {k} exceeds cap {cap}")));
    }
    let mut out = Vec::with_capacity(double_factorial(k) as usize);
    let mut slots = vec![u8::MAX; 2 * k];
    fill(&mut slots, 0, &mut out);
    out.sort_unstable();
    Ok(out)
}

// Pairs the leftmost open slot with each later open slot in turn.
fn fill(slots: &mut [u8], next: u8, out: &mut Vec<PartitionWord>) {
    let Some(first) = slots.iter().position(|&s| s == u8::MAX) else {
        out.push(PartitionWord { letters: slots.to_vec() });
        return;
    };
    slots[first] = next;
    for second in first + 1..slots.len() {
        if slots[second] == u8::MAX {
            slots[second] = next;
            fill(slots, next + 1, out);
            slots[second] = u8::MAX;
        }
    }
    slots[first] = u8::MAX;
}

/// `(2k - 1)!!`, the number of pair partitions of `{1, ..., 2k}`.
pub fn double_factorial(k: usize) -> u64 {
    (1..=k as u64).map(|j| 2 * j - 1).product()
}

/// Number of encapsulated partition subwords `x w1 x`.
pub fn height(w: &PartitionWord) -> usize {
    let partner = w.partners();
    (0..w.len())
        .filter(|&p| partner[p] > p && is_closed(&partner, p + 1, partner[p]))
        .count()
}

/// True when no proper nonempty contiguous substring is a partition word.
pub fn is_irreducible(w: &PartitionWord) -> bool {
    let partner = w.partners();
    let n = w.len();
    for start in 0..n {
        // a closed block must be even-length; skip the whole word
        for end in (start + 2..=n).step_by(2) {
            if end - start == n {
                continue;
            }
            if is_closed(&partner, start, end) {
                return false;
            }
        }
    }
    true
}

/// True when repeatedly deleting adjacent `xx` pairs empties the word.
pub fn is_noncrossing(w: &PartitionWord) -> bool {
    let mut stack: Vec<u8> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if stack.last() == Some(&l) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    stack.is_empty()
}

impl fmt::Display for PartitionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", (b'a' + l) as char)?;
        }
        Ok(())
    }
}

impl FromStr for PartitionWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if !s.bytes().all(|b| b.is_ascii_lowercase()) {
            return Err(invalid(format!("word {s:?} must use letters a-z")));
        }
        Self::new(s.bytes().map(|b| b - b'a').collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> PartitionWord {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_malformed_words() {
        assert!("".parse::<PartitionWord>().is_err());
        assert!("aab".parse::<PartitionWord>().is_err());
        assert!("baab".parse::<PartitionWord>().is_err());
        assert!("aaab".parse::<PartitionWord>().is_err());
        assert!("abac".parse::<PartitionWord>().is_err());
    }

    #[test]
    fn small_enumerations() {
        let one: Vec<String> = enumerate_words(1).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(one, ["aa"]);
        let two: Vec<String> = enumerate_words(2).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(two, ["aabb", "abab", "abba"]);
        assert_eq!(enumerate_words(4).unwrap().len(), 105);
    }

    #[test]
    fn enumeration_caps() {
        assert!(matches!(enumerate_words(0), Err(Error::InvalidArgument(_))));
        assert!(matches!(enumerate_words(9), Err(Error::InvalidArgument(_))));
        assert_eq!(enumerate_words_capped(3, 3).unwrap().len(), 15);
        assert!(enumerate_words_capped(4, 3).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        for k in 1..=5 {
            let words = enumerate_words(k).unwrap();
            assert!(words.windows(2).all(|p| p[0].letters < p[1].letters), "k = {k}");
        }
    }

    #[test]
    fn heights_from_definition() {
        assert_eq!(height(&w("abcabc")), 0);
        assert_eq!(height(&w("abcbca")), 1);
        assert_eq!(height(&w("abccab")), 1);
        assert_eq!(height(&w("aabbcc")), 3);
        assert_eq!(height(&w("abccba")), 3);
        assert_eq!(height(&w("aa")), 1);
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&w("aa")));
        assert!(!is_irreducible(&w("aabb")));
        assert!(is_irreducible(&w("abab")));
        assert!(!is_irreducible(&w("abba")));
        assert!(is_irreducible(&w("abcabc")));
    }

    #[test]
    fn noncrossing() {
        assert!(is_noncrossing(&w("aa")));
        assert!(is_noncrossing(&w("aabb")));
        assert!(is_noncrossing(&w("abba")));
        assert!(!is_noncrossing(&w("abab")));
    }

    #[test]
    fn canonicalize_relabels() {
        assert_eq!(PartitionWord::canonicalize(b"xyyx").unwrap(), w("abba"));
        assert_eq!(PartitionWord::canonicalize(&[5, 5]).unwrap(), w("aa"));
    }

    #[test]
    fn pairs_and_partners() {
        let word = w("abab");
        assert_eq!(word.pairs(), vec![(0, 2), (1, 3)]);
        assert_eq!(word.partners(), vec![2, 3, 0, 1]);
    }
}
