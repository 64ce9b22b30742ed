//! Rule-and-lexicon tagger over the coarse tag set NN/VB/JJ/RB/OTHERS.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pos {
    NN,
    VB,
    JJ,
    RB,
    OTHERS,
}

impl Pos {
    pub const ALL: [Pos; 5] = [Pos::NN, Pos::VB, Pos::JJ, Pos::RB, Pos::OTHERS];

    pub fn index(self) -> usize {
        self as usize
    }
}

const FUNCTION_WORDS: &str = include_str!("../../data/function_words.txt");
const VERBS: &str = include_str!("../../data/verbs.txt");
const ADJECTIVES: &str = include_str!("../../data/adjectives.txt");
const ADVERBS: &str = include_str!("../../data/adverbs.txt");
const NOUNS: &str = include_str!("../../data/nouns.txt");

/// Tokens after which an ambiguous noun/verb base form reads as a verb.
const VERB_CONTEXT: &[&str] = &[
    "to", "can", "could", "may", "might", "must", "shall", "should", "will", "would", "we", "they", "i",
    "you", "not", "also", "did", "does", "do", "then",
];
/// Tokens after which an ambiguous `-s` form reads as a verb.
const THIRD_PERSON_CONTEXT: &[&str] = &["he", "she", "it", "this", "that", "which", "who", "also"];

#[derive(Debug, Clone)]
pub struct PosTagger {
    lexicon: HashMap<String, Pos>,
    nouns: HashSet<String>,
    verb_forms: HashMap<String, String>,
}

fn words(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace)
}

impl PosTagger {
    pub fn builtin() -> &'static PosTagger {
        static TAGGER: OnceLock<PosTagger> = OnceLock::new();
        TAGGER.get_or_init(PosTagger::new)
    }

    fn new() -> PosTagger {
        let mut lexicon = HashMap::new();
        let mut verb_forms = HashMap::new();
        for line in VERBS.lines().filter(|l| !l.starts_with('#')) {
            if let Some(forms) = line.strip_prefix('=') {
                let forms: Vec<&str> = forms.split_whitespace().collect();
                if let Some(base) = forms.first() {
                    for f in &forms {
                        verb_forms.insert(f.to_string(), base.to_string());
                    }
                }
            } else {
                for base in line.split_whitespace() {
                    for f in inflect(base) {
                        verb_forms.entry(f).or_insert_with(|| base.to_owned());
                    }
                }
            }
        }
        let nouns: HashSet<String> = words(NOUNS).map(str::to_owned).collect();
        for w in words(ADJECTIVES) {
            lexicon.insert(w.to_owned(), Pos::JJ);
        }
        for w in words(ADVERBS) {
            lexicon.insert(w.to_owned(), Pos::RB);
        }
        for w in words(FUNCTION_WORDS) {
            lexicon.insert(w.to_owned(), Pos::OTHERS);
        }
        PosTagger {
            lexicon,
            nouns,
            verb_forms,
        }
    }

    /// Number of distinct word forms the tagger knows.
    pub fn lexicon_size(&self) -> usize {
        let mut all: HashSet<&str> = self.lexicon.keys().map(String::as_str).collect();
        all.extend(self.nouns.iter().map(String::as_str));
        all.extend(self.verb_forms.keys().map(String::as_str));
        all.len()
    }

    pub fn tag(&self, tokens: &[&str]) -> Vec<Pos> {
        let mut prev = String::new();
        tokens
            .iter()
            .map(|t| {
                let core = strip_punctuation(t);
                let pos = self.tag_word(core, &prev);
                prev = core.to_lowercase();
                pos
            })
            .collect()
    }

    fn tag_word(&self, word: &str, prev: &str) -> Pos {
        if !word.chars().any(char::is_alphabetic) {
            return Pos::OTHERS;
        }
        let lower = word.to_lowercase();
        if let Some(&pos) = self.lexicon.get(&lower) {
            return pos;
        }
        if self.nouns.contains(&lower) {
            let verb_base = self.verb_forms.get(&lower).is_some_and(|b| *b == lower);
            return if verb_base && VERB_CONTEXT.contains(&prev) {
                Pos::VB
            } else {
                Pos::NN
            };
        }
        if let Some(base) = self.verb_forms.get(&lower) {
            let plural_reading = lower != *base && lower.ends_with('s') && self.nouns.contains(base.as_str());
            return if plural_reading && !THIRD_PERSON_CONTEXT.contains(&prev) {
                Pos::NN
            } else {
                Pos::VB
            };
        }
        if word.len() > 1 && word.chars().all(|c| c.is_uppercase() || c.is_ascii_digit()) {
            return Pos::NN;
        }
        suffix_rule(&lower)
    }
}

fn suffix_rule(lower: &str) -> Pos {
    const JJ_SUFFIXES: &[&str] = &["ous", "ful", "ive", "al", "able", "ible", "ic", "less", "ish"];
    const NN_SUFFIXES: &[&str] = &[
        "tion", "sion", "ment", "ness", "ity", "ance", "ence", "ism", "ist", "ship", "hood", "er", "or",
    ];
    let long_enough = |suffix: &str| lower.len() > suffix.len() + 2;
    if lower.ends_with("ly") && long_enough("ly") {
        return Pos::RB;
    }
    if NN_SUFFIXES.iter().any(|s| lower.ends_with(s) && long_enough(s)) {
        return Pos::NN;
    }
    if [
        "ize", "ise", "ized", "ised", "izing", "ising", "izes", "ises", "ify", "ified",
    ]
    .iter()
    .any(|s| lower.ends_with(s) && long_enough(s))
    {
        return Pos::VB;
    }
    if JJ_SUFFIXES.iter().any(|s| lower.ends_with(s) && long_enough(s)) {
        return Pos::JJ;
    }
    if (lower.ends_with("ing") && long_enough("ing")) || (lower.ends_with("ed") && long_enough("ed")) {
        return Pos::VB;
    }
    Pos::NN
}

/// Regular inflections of a base form: itself, -s, -ed, -ing.
fn inflect(base: &str) -> Vec<String> {
    let mut forms = vec![base.to_owned()];
    let vowel = |c: char| "aeiou".contains(c);
    let chars: Vec<char> = base.chars().collect();
    let n = chars.len();
    let last = chars.last().copied().unwrap_or(' ');
    let before = if n >= 2 { chars[n - 2] } else { ' ' };
    if last == 'y' && !vowel(before) {
        let stem = &base[..base.len() - 1];
        forms.push(format!("{stem}ies"));
        forms.push(format!("{stem}ied"));
        forms.push(format!("{base}ing"));
    } else if last == 'e' {
        let stem = &base[..base.len() - 1];
        forms.push(format!("{base}s"));
        forms.push(format!("{base}d"));
        forms.push(if base.ends_with("ee") {
            format!("{base}ing")
        } else {
            format!("{stem}ing")
        });
    } else {
        let sibilant = ["s", "x", "z", "ch", "sh"].iter().any(|s| base.ends_with(s));
        forms.push(if sibilant {
            format!("{base}es")
        } else {
            format!("{base}s")
        });
        forms.push(format!("{base}ed"));
        forms.push(format!("{base}ing"));
    }
    forms
}

/// Drops trailing punctuation and leading quotes/brackets.
pub fn strip_punctuation(token: &str) -> &str {
    token
        .trim_start_matches(['(', '[', '{', '"', '\'', '\u{201c}', '\u{2018}'])
        .trim_end_matches(|c: char| c.is_ascii_punctuation() || "\u{201d}\u{2019}\u{2026}".contains(c))
}
