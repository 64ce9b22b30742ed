//! Pattern and gazetteer entity recognizer for PERSON, LOCATION,
//! ORGANIZATION, NUMBER and TIME.

use std::collections::HashMap;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::pos::strip_punctuation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NeTag {
    PERSON,
    LOCATION,
    ORGANIZATION,
    NUMBER,
    TIME,
    NONE,
}

impl NeTag {
    pub const ENTITIES: [NeTag; 5] = [
        NeTag::PERSON,
        NeTag::LOCATION,
        NeTag::ORGANIZATION,
        NeTag::NUMBER,
        NeTag::TIME,
    ];

    /// Position in the entity block of a feature vector; `None` for NONE.
    pub fn index(self) -> Option<usize> {
        match self {
            NeTag::NONE => None,
            other => Some(other as usize),
        }
    }
}

const PERSONS: &str = include_str!("../../data/person.txt");
const LOCATIONS: &str = include_str!("../../data/location.txt");
const ORGANIZATIONS: &str = include_str!("../../data/organization.txt");

const MONTHS: &[&str] = &[
    "January",
    "February",
    "March",
    "April",
    "May",
    "June",
    "July",
    "August",
    "September",
    "October",
    "November",
    "December",
    "Jan",
    "Feb",
    "Mar",
    "Apr",
    "Jun",
    "Jul",
    "Aug",
    "Sep",
    "Sept",
    "Oct",
    "Nov",
    "Dec",
];
const WEEKDAYS: &[&str] = &[
    "Monday",
    "Tuesday",
    "Wednesday",
    "Thursday",
    "Friday",
    "Saturday",
    "Sunday",
];
const ORG_HEADS: &[&str] = &[
    "University",
    "Institute",
    "Laboratory",
    "Laboratories",
    "Lab",
    "Labs",
    "Corporation",
    "Corp",
    "Inc",
    "Ltd",
    "Company",
    "Association",
    "Foundation",
    "Agency",
    "Department",
    "College",
    "School",
    "Academy",
    "Center",
    "Centre",
];
const HONORIFICS: &[&str] = &["Mr", "Mrs", "Ms", "Dr", "Prof", "Professor", "Sir"];

#[derive(Debug, Clone, Default)]
pub struct NeTagger {
    gazetteer: HashMap<Vec<String>, NeTag>,
    longest: usize,
}

impl NeTagger {
    pub fn builtin() -> &'static NeTagger {
        static TAGGER: OnceLock<NeTagger> = OnceLock::new();
        TAGGER.get_or_init(|| {
            let mut t = NeTagger::default();
            t.add_names(PERSONS, NeTag::PERSON);
            t.add_names(LOCATIONS, NeTag::LOCATION);
            t.add_names(ORGANIZATIONS, NeTag::ORGANIZATION);
            t
        })
    }

    /// Loads gazetteers from UTF-8 files with one name per line. Missing
    /// classes fall back to the bundled lists.
    pub fn from_files(
        persons: Option<&Path>,
        locations: Option<&Path>,
        organizations: Option<&Path>,
    ) -> std::io::Result<NeTagger> {
        let mut t = NeTagger::default();
        let load = |p: Option<&Path>, default: &str| -> std::io::Result<String> {
            match p {
                Some(p) => std::fs::read_to_string(p),
                None => Ok(default.to_owned()),
            }
        };
        t.add_names(&load(persons, PERSONS)?, NeTag::PERSON);
        t.add_names(&load(locations, LOCATIONS)?, NeTag::LOCATION);
        t.add_names(&load(organizations, ORGANIZATIONS)?, NeTag::ORGANIZATION);
        Ok(t)
    }

    /// Adds names in priority order: a later class does not overwrite an
    /// earlier one unless it ranks higher (ORGANIZATION > LOCATION > PERSON).
    pub fn add_names(&mut self, text: &str, tag: NeTag) {
        let rank = |t: NeTag| match t {
            NeTag::ORGANIZATION => 3,
            NeTag::LOCATION => 2,
            _ => 1,
        };
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let key: Vec<String> = line.split_whitespace().map(str::to_owned).collect();
            self.longest = self.longest.max(key.len());
            let slot = self.gazetteer.entry(key).or_insert(tag);
            if rank(tag) > rank(*slot) {
                *slot = tag;
            }
        }
    }

    pub fn tag(&self, tokens: &[&str]) -> Vec<NeTag> {
        let cores: Vec<&str> = tokens.iter().map(|t| strip_punctuation(t)).collect();
        let mut tags: Vec<NeTag> = cores.iter().map(|c| pattern_tag(c)).collect();

        let mut i = 0;
        while i < cores.len() {
            if tags[i] != NeTag::NONE || !is_capitalized(cores[i]) {
                i += 1;
                continue;
            }
            let mut matched = false;
            for len in (1..=self.longest.min(cores.len() - i)).rev() {
                let key: Vec<String> = cores[i..i + len].iter().map(|s| s.to_string()).collect();
                if let Some(&tag) = self.gazetteer.get(&key) {
                    if tags[i..i + len].iter().all(|t| *t == NeTag::NONE) {
                        tags[i..i + len].fill(tag);
                        i += len;
                        matched = true;
                        break;
                    }
                }
            }
            if !matched {
                i += 1;
            }
        }

        // Capitalised runs headed by an organisational noun.
        let mut start = 0;
        while start < cores.len() {
            if !is_capitalized(cores[start]) || tags[start] == NeTag::NUMBER || tags[start] == NeTag::TIME {
                start += 1;
                continue;
            }
            let mut end = start;
            while end < cores.len()
                && (is_capitalized(cores[end]) || (end > start && cores[end] == "of"))
                && !matches!(tags[end], NeTag::NUMBER | NeTag::TIME)
            {
                end += 1;
            }
            while end > start + 1 && cores[end - 1] == "of" {
                end -= 1;
            }
            if cores[start..end].iter().any(|c| ORG_HEADS.contains(c)) {
                tags[start..end].fill(NeTag::ORGANIZATION);
            }
            start = end.max(start + 1);
        }

        for k in 1..cores.len() {
            if HONORIFICS.contains(&cores[k - 1]) && is_capitalized(cores[k]) && tags[k] == NeTag::NONE {
                tags[k] = NeTag::PERSON;
            }
        }
        tags
    }
}

fn is_capitalized(word: &str) -> bool {
    word.chars().next().is_some_and(char::is_uppercase)
}

fn pattern_tag(word: &str) -> NeTag {
    if is_time(word) {
        NeTag::TIME
    } else if is_number(word) {
        NeTag::NUMBER
    } else {
        NeTag::NONE
    }
}

/// Integers, decimals, thousands separators, percentages, signed values.
pub fn is_number(word: &str) -> bool {
    let w = word
        .strip_prefix(['+', '-', '\u{2212}', '\u{b1}'])
        .unwrap_or(word);
    let w = w.strip_suffix('%').unwrap_or(w);
    if w.is_empty() {
        return false;
    }
    let (int_part, frac) = match w.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (w, None),
    };
    if let Some(f) = frac {
        if f.is_empty() || !f.bytes().all(|b| b.is_ascii_digit()) {
            return false;
        }
    }
    if int_part.is_empty() {
        return frac.is_some();
    }
    if int_part.contains(',') {
        let groups: Vec<&str> = int_part.split(',').collect();
        return (1..=3).contains(&groups[0].len())
            && groups[0].bytes().all(|b| b.is_ascii_digit())
            && groups[1..]
                .iter()
                .all(|g| g.len() == 3 && g.bytes().all(|b| b.is_ascii_digit()));
    }
    int_part.bytes().all(|b| b.is_ascii_digit())
}

/// Years 1900-2099, clock times, month and weekday names.
pub fn is_time(word: &str) -> bool {
    if word.len() == 4 && word.bytes().all(|b| b.is_ascii_digit()) {
        let year: u32 = word.parse().unwrap_or(0);
        return (1900..=2099).contains(&year);
    }
    if MONTHS.contains(&word) || WEEKDAYS.contains(&word) {
        return true;
    }
    let lower = word.to_ascii_lowercase();
    let clock = lower
        .strip_suffix("am")
        .or_else(|| lower.strip_suffix("pm"))
        .unwrap_or(&lower);
    if let Some((h, rest)) = clock.split_once(':') {
        let (m, s) = rest.split_once(':').unwrap_or((rest, "00"));
        let two = |t: &str, max: u32| {
            t.len() == 2 && t.bytes().all(|b| b.is_ascii_digit()) && t.parse::<u32>().unwrap_or(99) <= max
        };
        return (1..=2).contains(&h.len())
            && h.bytes().all(|b| b.is_ascii_digit())
            && h.parse::<u32>().unwrap_or(99) <= 24
            && two(m, 59)
            && two(s, 59);
    }
    false
}
