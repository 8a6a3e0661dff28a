//! Text ingestion and the 30-symbol vocabulary: preprocessing raw text,
//! train/valid/test splitting at sentence boundaries, the public/private
//! partition by sensitive-word sentence extraction, and sharding.

mod files;
pub mod synth;

pub use files::{read_corpus, read_metadata, write_corpus, write_metadata};

use crate::error::{GktError, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Fixed 30-symbol vocabulary: letters A-Z at 0-25, SPACE at 26, EOS at 27,
/// APOSTROPHE at 28, PERIOD at 29. EOS decodes to a line break in corpus
/// files.
pub struct Vocab;

pub const VOCAB_SIZE: usize = 30;
pub const SPACE: u8 = 26;
pub const EOS: u8 = 27;
pub const APOSTROPHE: u8 = 28;
pub const PERIOD: u8 = 29;

impl Vocab {
    pub const SIZE: usize = VOCAB_SIZE;

    /// Canonical character for each symbol id.
    pub fn decode(id: u8) -> char {
        match id {
            0..=25 => (b'A' + id) as char,
            26 => ' ',
            27 => '\n',
            28 => '\'',
            29 => '.',
            _ => panic!("symbol id {id} out of range"),
        }
    }

    /// Id for a canonical character, if it is one of the 30 symbols.
    pub fn encode(ch: char) -> Option<u8> {
        match ch {
            'A'..='Z' => Some(ch as u8 - b'A'),
            ' ' => Some(SPACE),
            '\n' => Some(EOS),
            '\'' => Some(APOSTROPHE),
            '.' => Some(PERIOD),
            _ => None,
        }
    }

    pub fn is_delimiter(id: u8) -> bool {
        matches!(id, SPACE | EOS | APOSTROPHE | PERIOD)
    }

    /// Hash of the symbol ordering, stored in checkpoint headers so
    /// mismatched vocab orders are detectable. First 8 bytes of the SHA-256
    /// of the canonical characters, little-endian.
    pub fn ordering_hash() -> u64 {
        let mut hasher = Sha256::new();
        for id in 0..VOCAB_SIZE as u8 {
            let mut buf = [0u8; 4];
            hasher.update(Vocab::decode(id).encode_utf8(&mut buf).as_bytes());
        }
        let digest = hasher.finalize();
        u64::from_le_bytes(digest[..8].try_into().unwrap())
    }
}

/// A sequence of symbol ids, each in `[0, 30)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolSeq(Vec<u8>);

impl SymbolSeq {
    pub fn new() -> Self {
        SymbolSeq(Vec::new())
    }

    pub fn from_ids(ids: Vec<u8>) -> Result<Self> {
        if let Some(bad) = ids.iter().find(|id| **id >= VOCAB_SIZE as u8) {
            return Err(GktError::Data(format!("invalid symbol id {bad}")));
        }
        Ok(SymbolSeq(ids))
    }

    /// Encodes a string of canonical symbols; rejects anything else.
    pub fn from_text(text: &str) -> Result<Self> {
        let ids = text
            .chars()
            .map(|ch| {
                Vocab::encode(ch)
                    .ok_or_else(|| GktError::Data(format!("non-canonical character {ch:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(SymbolSeq(ids))
    }

    pub fn to_text(&self) -> String {
        self.0.iter().map(|&id| Vocab::decode(id)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ids(&self) -> &[u8] {
        &self.0
    }

    pub fn push(&mut self, id: u8) {
        debug_assert!(id < VOCAB_SIZE as u8);
        self.0.push(id);
    }

    pub fn extend_from_slice(&mut self, ids: &[u8]) {
        debug_assert!(ids.iter().all(|id| *id < VOCAB_SIZE as u8));
        self.0.extend_from_slice(ids);
    }

    pub fn slice(&self, start: usize, end: usize) -> SymbolSeq {
        SymbolSeq(self.0[start..end].to_vec())
    }

    /// Maximal EOS-terminated runs. A trailing run without EOS counts as a
    /// sentence too.
    pub fn sentences(&self) -> Vec<&[u8]> {
        let mut out = Vec::new();
        let mut start = 0;
        for (i, &id) in self.0.iter().enumerate() {
            if id == EOS {
                out.push(&self.0[start..=i]);
                start = i + 1;
            }
        }
        if start < self.0.len() {
            out.push(&self.0[start..]);
        }
        out
    }
}

/// Canonicalizes raw text into symbol ids.
///
/// Lowercase maps to uppercase, line breaks to EOS; runs of characters
/// outside the symbol set are dropped with adjacent whitespace collapsed to
/// a single SPACE.
pub fn preprocess(raw: &str) -> Result<SymbolSeq> {
    #[derive(PartialEq)]
    enum Pending {
        None,
        Space,
    }
    let mut ids = Vec::with_capacity(raw.len());
    let mut pending = Pending::None;
    let mut prev_cr = false;
    for ch in raw.chars() {
        if prev_cr && ch == '\n' {
            prev_cr = false;
            continue;
        }
        prev_cr = ch == '\r';
        let mapped = match ch {
            'a'..='z' => Some(ch.to_ascii_uppercase()),
            '\r' => Some('\n'),
            '\t' => Some(' '),
            _ => Some(ch),
        };
        let ch = mapped.unwrap();
        match Vocab::encode(ch) {
            Some(SPACE) => {
                pending = Pending::Space;
            }
            Some(id) => {
                if pending == Pending::Space && !ids.is_empty() {
                    ids.push(SPACE);
                }
                pending = Pending::None;
                ids.push(id);
            }
            None => {
                // dropped run; collapses with surrounding whitespace
                pending = Pending::Space;
            }
        }
    }
    if ids.is_empty() {
        return Err(GktError::Data("empty corpus after preprocessing".into()));
    }
    Ok(SymbolSeq(ids))
}

/// Contiguous train/valid/test regions of one source stream.
#[derive(Debug, Clone)]
pub struct CorpusSplit {
    pub train: SymbolSeq,
    pub valid: SymbolSeq,
    pub test: SymbolSeq,
    pub fractions: (f64, f64, f64),
}

/// Splits at the EOS boundaries nearest the fraction points.
pub fn split_corpus(s: &SymbolSeq, fractions: (f64, f64, f64)) -> Result<CorpusSplit> {
    let (ft, fv, fe) = fractions;
    if ft <= 0.0 || fv <= 0.0 || fe <= 0.0 {
        return Err(GktError::Config(format!(
            "split fractions must be positive, got ({ft}, {fv}, {fe})"
        )));
    }
    if (ft + fv + fe - 1.0).abs() > 1e-9 {
        return Err(GktError::Config(format!(
            "split fractions must sum to 1, got {}",
            ft + fv + fe
        )));
    }
    let sentences = s.sentences();
    if sentences.len() < 3 {
        return Err(GktError::Data(format!(
            "corpus has only {} sentences, need at least 3 to split",
            sentences.len()
        )));
    }
    // candidate boundaries: cumulative char position after each sentence
    let mut boundaries = Vec::with_capacity(sentences.len());
    let mut acc = 0usize;
    for sent in &sentences {
        acc += sent.len();
        boundaries.push(acc);
    }
    let total = s.len() as f64;
    let nearest = |target: f64, lo: usize, hi: usize| -> usize {
        let mut best = lo;
        let mut best_dist = f64::INFINITY;
        for b in lo..hi {
            let dist = (boundaries[b] as f64 - target).abs();
            if dist < best_dist {
                best_dist = dist;
                best = b;
            }
        }
        best
    };
    // keep at least one sentence in each part
    let cut1 = nearest(ft * total, 0, boundaries.len() - 2);
    let cut2 = nearest((ft + fv) * total, cut1 + 1, boundaries.len() - 1);
    let p1 = boundaries[cut1];
    let p2 = boundaries[cut2];
    Ok(CorpusSplit {
        train: s.slice(0, p1),
        valid: s.slice(p1, p2),
        test: s.slice(p2, s.len()),
        fractions,
    })
}

/// The default sensitive-word list: months, weekdays and seasons.
pub const DEFAULT_PRIVATE_WORDS: [&str; 23] = [
    "JANUARY",
    "FEBRUARY",
    "MARCH",
    "APRIL",
    "MAY",
    "JUNE",
    "JULY",
    "AUGUST",
    "SEPTEMBER",
    "OCTOBER",
    "NOVEMBER",
    "DECEMBER",
    "MONDAY",
    "TUESDAY",
    "WEDNESDAY",
    "THURSDAY",
    "FRIDAY",
    "SATURDAY",
    "SUNDAY",
    "SPRING",
    "SUMMER",
    "AUTUMN",
    "WINTER",
];

/// Sentence-level split into a public and a private side.
#[derive(Debug, Clone)]
pub struct PrivatePartition {
    pub public_sentences: SymbolSeq,
    pub private_sentences: SymbolSeq,
    pub word_list: Vec<String>,
}

fn validate_word_list(word_list: &[String]) -> Result<()> {
    if word_list.is_empty() {
        return Err(GktError::Config("word list must be nonempty".into()));
    }
    for w in word_list {
        if w.is_empty() || !w.chars().all(|c| c.is_ascii_uppercase()) {
            return Err(GktError::Config(format!(
                "word list entries must be uppercase A-Z words, got {w:?}"
            )));
        }
    }
    Ok(())
}

/// Whole-word occurrence check with SPACE/EOS/PERIOD/APOSTROPHE (or the
/// sequence boundary) as delimiters.
pub fn contains_whole_word(ids: &[u8], word: &[u8]) -> bool {
    if word.is_empty() || word.len() > ids.len() {
        return false;
    }
    'outer: for start in 0..=ids.len() - word.len() {
        for (k, &w) in word.iter().enumerate() {
            if ids[start + k] != w {
                continue 'outer;
            }
        }
        let left_ok = start == 0 || Vocab::is_delimiter(ids[start - 1]);
        let end = start + word.len();
        let right_ok = end == ids.len() || Vocab::is_delimiter(ids[end]);
        if left_ok && right_ok {
            return true;
        }
    }
    false
}

/// Moves every sentence containing a listed word (as a whole word) to the
/// private side; everything else stays public.
pub fn partition_private(s: &SymbolSeq, word_list: &[String]) -> Result<PrivatePartition> {
    validate_word_list(word_list)?;
    let encoded: Vec<Vec<u8>> = word_list
        .iter()
        .map(|w| SymbolSeq::from_text(w).map(|seq| seq.0))
        .collect::<Result<_>>()?;
    let mut public_sentences = SymbolSeq::new();
    let mut private_sentences = SymbolSeq::new();
    for sent in s.sentences() {
        let is_private = encoded.iter().any(|w| contains_whole_word(sent, w));
        if is_private {
            private_sentences.extend_from_slice(sent);
        } else {
            public_sentences.extend_from_slice(sent);
        }
    }
    Ok(PrivatePartition {
        public_sentences,
        private_sentences,
        word_list: word_list.to_vec(),
    })
}

/// Round-robin assignment of sentences after a seeded shuffle. Shards are
/// disjoint and their sentence multiset equals the input's.
pub fn shard(s: &SymbolSeq, n: usize, seed: u64) -> Result<Vec<SymbolSeq>> {
    if n < 1 {
        return Err(GktError::Config("shard count must be at least 1".into()));
    }
    let sentences = s.sentences();
    if sentences.len() < n {
        return Err(GktError::Data(format!(
            "cannot make {n} shards from {} sentences",
            sentences.len()
        )));
    }
    let mut order: Vec<usize> = (0..sentences.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let mut shards = vec![SymbolSeq::new(); n];
    for (k, &idx) in order.iter().enumerate() {
        shards[k % n].extend_from_slice(sentences[idx]);
    }
    Ok(shards)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    #[test]
    fn encode_decode_bijection() {
        for id in 0..VOCAB_SIZE as u8 {
            assert_eq!(Vocab::encode(Vocab::decode(id)), Some(id));
        }
        assert_eq!(Vocab::encode('A'), Some(0));
        assert_eq!(Vocab::encode('Z'), Some(25));
        assert_eq!(Vocab::encode(' '), Some(26));
        assert_eq!(Vocab::encode('\n'), Some(27));
        assert_eq!(Vocab::encode('\''), Some(28));
        assert_eq!(Vocab::encode('.'), Some(29));
        assert_eq!(Vocab::encode('7'), None);
    }

    #[test]
    fn preprocess_examples() {
        assert_eq!(preprocess("ab.\n").unwrap().ids(), &[0, 1, 29, 27]);
        assert_eq!(preprocess("A  B").unwrap().ids(), &[0, 26, 1]);
        assert_eq!(preprocess("A7B").unwrap().ids(), &[0, 26, 1]);
        assert_eq!(preprocess("A 7 B").unwrap().ids(), &[0, 26, 1]);
        assert_eq!(preprocess("x\r\ny").unwrap().ids(), &[23, 27, 24]);
    }

    #[test]
    fn preprocess_empty_is_an_error() {
        assert!(matches!(preprocess(""), Err(GktError::Data(_))));
        assert!(matches!(preprocess("123"), Err(GktError::Data(_))));
    }

    #[test]
    fn split_hundred_equal_sentences() {
        let mut text = String::new();
        for _ in 0..100 {
            text.push_str("ABCDE.\n");
        }
        let s = preprocess(&text).unwrap();
        let split = split_corpus(&s, (0.98, 0.01, 0.01)).unwrap();
        assert_eq!(split.train.sentences().len(), 98);
        assert_eq!(split.valid.sentences().len(), 1);
        assert_eq!(split.test.sentences().len(), 1);
        assert_eq!(
            split.train.len() + split.valid.len() + split.test.len(),
            s.len()
        );
    }

    #[test]
    fn split_rejects_degenerate_fractions() {
        let s = preprocess("A.\nB.\nC.\nD.\n").unwrap();
        assert!(split_corpus(&s, (1.0, 0.0, 0.0)).is_err());
        assert!(split_corpus(&s, (0.5, 0.3, 0.3)).is_err());
    }

    #[test]
    fn split_points_follow_eos() {
        let text = "AB.\nLONGER SENTENCE HERE.\nC.\nDD.\nMORE WORDS NOW.\nE.\n";
        let s = preprocess(text).unwrap();
        let split = split_corpus(&s, (0.6, 0.2, 0.2)).unwrap();
        assert_eq!(*split.train.ids().last().unwrap(), EOS);
        assert_eq!(*split.valid.ids().last().unwrap(), EOS);
    }

    #[test]
    fn partition_private_moves_matching_sentences() {
        let words: Vec<String> = DEFAULT_PRIVATE_WORDS.iter().map(|w| w.to_string()).collect();
        assert_eq!(words.len(), 23);
        let text = "THE MEETING IS ON MONDAY.\nNOTHING SPECIAL HERE.\n";
        let s = preprocess(text).unwrap();
        let part = partition_private(&s, &words).unwrap();
        assert_eq!(part.private_sentences.to_text(), "THE MEETING IS ON MONDAY.\n");
        assert_eq!(part.public_sentences.to_text(), "NOTHING SPECIAL HERE.\n");
    }

    #[test]
    fn whole_word_rule_keeps_summers_public() {
        let words = vec!["SUMMER".to_string()];
        let s = preprocess("SUMMERS END.\n").unwrap();
        let part = partition_private(&s, &words).unwrap();
        assert!(part.private_sentences.is_empty());
        assert_eq!(part.public_sentences.to_text(), "SUMMERS END.\n");
        // apostrophe and period delimit
        assert!(contains_whole_word(
            SymbolSeq::from_text("SUMMER'S DAY").unwrap().ids(),
            SymbolSeq::from_text("SUMMER").unwrap().ids()
        ));
        assert!(contains_whole_word(
            SymbolSeq::from_text("IN SUMMER.").unwrap().ids(),
            SymbolSeq::from_text("SUMMER").unwrap().ids()
        ));
    }

    #[test]
    fn public_side_has_no_private_words() {
        let words: Vec<String> = DEFAULT_PRIVATE_WORDS.iter().map(|w| w.to_string()).collect();
        let text = "PAY IN JANUARY.\nMAY THE BEST WIN.\nMAYBE NOT.\nPLAIN TEXT.\nSUNDAY ROAST.\n";
        let s = preprocess(text).unwrap();
        let part = partition_private(&s, &words).unwrap();
        let encoded: Vec<Vec<u8>> = words
            .iter()
            .map(|w| SymbolSeq::from_text(w).unwrap().ids().to_vec())
            .collect();
        for sent in part.public_sentences.sentences() {
            for w in &encoded {
                assert!(!contains_whole_word(sent, w));
            }
        }
        // MAYBE stays public (whole-word rule), MAY moves
        assert!(part.public_sentences.to_text().contains("MAYBE NOT"));
        assert!(part.private_sentences.to_text().contains("MAY THE BEST"));
    }

    #[test]
    fn shard_roundtrip_properties() {
        let text: String = (0..50)
            .map(|i| format!("SENTENCE NUMBER {} ENDS.\n", ["A", "B", "C", "D", "E"][i % 5]))
            .collect();
        let s = preprocess(&text).unwrap();

        let one = shard(&s, 1, 7).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].len(), s.len());

        let a = shard(&s, 7, 123).unwrap();
        let b = shard(&s, 7, 123).unwrap();
        assert_eq!(a, b);
        let c = shard(&s, 7, 124).unwrap();
        assert_ne!(a, c);

        // multiset of sentences preserved
        let mut before: HashMap<String, usize> = HashMap::new();
        for sent in s.sentences() {
            *before
                .entry(SymbolSeq(sent.to_vec()).to_text())
                .or_default() += 1;
        }
        let mut after: HashMap<String, usize> = HashMap::new();
        for sh in &a {
            for sent in sh.sentences() {
                *after
                    .entry(SymbolSeq(sent.to_vec()).to_text())
                    .or_default() += 1;
            }
        }
        assert_eq!(before, after);

        assert!(shard(&s, 51, 0).is_err());
    }

    #[test]
    fn ordering_hash_is_stable() {
        assert_eq!(Vocab::ordering_hash(), Vocab::ordering_hash());
        assert_ne!(Vocab::ordering_hash(), 0);
    }
}
