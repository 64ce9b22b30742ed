//! Simple (Type1/TrueType) and Identity-encoded Type0 fonts: code
//! splitting, Unicode mapping and advance widths.

use std::collections::HashMap;

use super::file::PdfFile;
use super::font_tables::{CORE_FONT_WIDTHS, GLYPH_UNICODE, MAC_ROMAN, STANDARD, WIN_ANSI};
use super::lexer::{Dict, Lexer, Object, Token};
use crate::ingest::IngestError;

/// Width used when no table supplies one, in glyph-space units (1/1000 em).
pub const FALLBACK_WIDTH: f64 = 500.0;

#[derive(Debug, Clone)]
pub struct Font {
    pub name: String,
    two_byte: bool,
    widths: HashMap<u32, f64>,
    default_width: Option<f64>,
    codes: HashMap<u32, String>,
}

impl Font {
    pub fn load(file: &PdfFile, dict: &Dict, resource_name: &str) -> Result<Font, IngestError> {
        let subtype = file.get_name(dict, "Subtype").unwrap_or("Type1");
        let base = file
            .get_name(dict, "BaseFont")
            .unwrap_or(resource_name)
            .to_owned();
        let to_unicode = match file.get(dict, "ToUnicode") {
            Some(Object::Stream(s)) => parse_to_unicode(&file.decode_stream(s)?)?,
            _ => HashMap::new(),
        };
        match subtype {
            "Type1" | "MMType1" | "TrueType" => Ok(Self::load_simple(file, dict, base, subtype, to_unicode)),
            "Type0" => Self::load_composite(file, dict, base, to_unicode),
            other => Err(IngestError::Unsupported(format!("{other} font {base}"))),
        }
    }

    fn load_simple(
        file: &PdfFile,
        dict: &Dict,
        base: String,
        subtype: &str,
        to_unicode: HashMap<u32, String>,
    ) -> Font {
        let core = core_font_widths(&base);
        let mut names: [Option<String>; 256] = std::array::from_fn(|_| None);
        let base_table = match file.get(dict, "Encoding") {
            Some(Object::Name(n)) => named_encoding(n),
            Some(Object::Dict(d)) => {
                file.get_name(d, "BaseEncoding")
                    .and_then(named_encoding)
                    .or(if subtype == "TrueType" {
                        Some(&WIN_ANSI)
                    } else {
                        None
                    })
            }
            _ if subtype == "TrueType" => Some(&WIN_ANSI),
            _ => None,
        }
        .unwrap_or(&STANDARD);
        for (slot, name) in names.iter_mut().zip(base_table.iter()) {
            *slot = name.map(str::to_owned);
        }
        if let Some(diffs) = file
            .get(dict, "Encoding")
            .and_then(Object::as_dict)
            .and_then(|d| file.get(d, "Differences"))
            .and_then(Object::as_array)
        {
            let mut code = 0usize;
            for item in diffs {
                match file.resolve(item) {
                    Object::Int(i) => code = (*i).clamp(0, 255) as usize,
                    Object::Name(n) if code < 256 => {
                        names[code] = Some(n.clone());
                        code += 1;
                    }
                    _ => {}
                }
            }
        }

        let mut widths = HashMap::new();
        if let Some(arr) = file.get(dict, "Widths").and_then(Object::as_array) {
            let first = file.get_i64(dict, "FirstChar").unwrap_or(0).max(0) as u32;
            for (i, w) in arr.iter().enumerate() {
                if let Some(w) = file.resolve(w).as_f64() {
                    widths.insert(first + i as u32, w);
                }
            }
        } else if let Some(table) = core {
            for (code, name) in names.iter().enumerate() {
                if let Some(w) = name.as_deref().and_then(|n| lookup(table, n)) {
                    widths.insert(code as u32, w as f64);
                }
            }
        }
        let default_width = file
            .get_dict(dict, "FontDescriptor")
            .and_then(|fd| file.get_f64(fd, "MissingWidth"))
            .filter(|w| *w > 0.0);

        let mut codes = HashMap::new();
        for code in 0..256u32 {
            let text = to_unicode
                .get(&code)
                .cloned()
                .or_else(|| names[code as usize].as_deref().and_then(glyph_name_to_unicode));
            let text = text.unwrap_or_else(|| fallback_char(code).to_string());
            codes.insert(code, text);
        }
        Font {
            name: base,
            two_byte: false,
            widths,
            default_width,
            codes,
        }
    }

    fn load_composite(
        file: &PdfFile,
        dict: &Dict,
        base: String,
        to_unicode: HashMap<u32, String>,
    ) -> Result<Font, IngestError> {
        match file.get(dict, "Encoding") {
            Some(Object::Name(n)) if n == "Identity-H" => {}
            Some(Object::Name(n)) if n == "Identity-V" => {
                return Err(IngestError::Unsupported("vertical writing (Identity-V)".into()))
            }
            Some(Object::Name(n)) => return Err(IngestError::Unsupported(format!("CMap {n}"))),
            _ => return Err(IngestError::Unsupported("embedded CMap encoding".into())),
        }
        let descendant = file
            .get(dict, "DescendantFonts")
            .and_then(Object::as_array)
            .and_then(|a| a.first())
            .and_then(|o| file.resolve(o).as_dict());
        let mut widths = HashMap::new();
        let mut default_width = Some(1000.0);
        if let Some(cid) = descendant {
            if let Some(dw) = file.get_f64(cid, "DW") {
                default_width = Some(dw);
            }
            if let Some(w) = file.get(cid, "W").and_then(Object::as_array) {
                let w: Vec<&Object> = w.iter().map(|o| file.resolve(o)).collect();
                let mut i = 0;
                while i + 1 < w.len() {
                    let Some(first) = w[i].as_i64() else { break };
                    if let Some(list) = w[i + 1].as_array() {
                        for (k, v) in list.iter().enumerate() {
                            if let Some(v) = file.resolve(v).as_f64() {
                                widths.insert(first as u32 + k as u32, v);
                            }
                        }
                        i += 2;
                    } else if i + 2 < w.len() {
                        let (Some(last), Some(v)) = (w[i + 1].as_i64(), w[i + 2].as_f64()) else {
                            break;
                        };
                        for c in first..=last.min(first + 0xffff) {
                            widths.insert(c as u32, v);
                        }
                        i += 3;
                    } else {
                        break;
                    }
                }
            }
        }
        Ok(Font {
            name: base,
            two_byte: true,
            widths,
            default_width,
            codes: to_unicode,
        })
    }

    /// Splits a shown string into character codes.
    pub fn codes(&self, bytes: &[u8]) -> Vec<u32> {
        if self.two_byte {
            bytes
                .chunks(2)
                .map(|c| {
                    if c.len() == 2 {
                        (c[0] as u32) << 8 | c[1] as u32
                    } else {
                        c[0] as u32
                    }
                })
                .collect()
        } else {
            bytes.iter().map(|&b| b as u32).collect()
        }
    }

    pub fn is_single_byte(&self) -> bool {
        !self.two_byte
    }

    /// Advance width in glyph space (1/1000 em).
    pub fn width(&self, code: u32) -> f64 {
        self.widths
            .get(&code)
            .copied()
            .or(self.default_width)
            .unwrap_or(FALLBACK_WIDTH)
    }

    pub fn text(&self, code: u32) -> String {
        match self.codes.get(&code) {
            Some(t) => t.clone(),
            None => char::from_u32(code)
                .filter(|_| !self.two_byte)
                .unwrap_or(char::REPLACEMENT_CHARACTER)
                .to_string(),
        }
    }
}

fn fallback_char(code: u32) -> char {
    match code {
        0x20..=0x7e | 0xa0..=0xff => char::from_u32(code).unwrap_or(char::REPLACEMENT_CHARACTER),
        _ => char::REPLACEMENT_CHARACTER,
    }
}

fn named_encoding(name: &str) -> Option<&'static [Option<&'static str>; 256]> {
    match name {
        "WinAnsiEncoding" => Some(&WIN_ANSI),
        "MacRomanEncoding" => Some(&MAC_ROMAN),
        "StandardEncoding" => Some(&STANDARD),
        _ => None,
    }
}

fn lookup<T: Copy>(table: &[(&str, T)], key: &str) -> Option<T> {
    table
        .binary_search_by(|(k, _)| (*k).cmp(key))
        .ok()
        .map(|i| table[i].1)
}

pub fn glyph_name_to_unicode(name: &str) -> Option<String> {
    let name = name.split('.').next().unwrap_or(name);
    if name.contains('_') {
        let parts: Option<String> = name.split('_').map(glyph_name_to_unicode).collect();
        return parts;
    }
    if let Some(c) = lookup(GLYPH_UNICODE, name) {
        return Some(c.to_string());
    }
    let hex = name
        .strip_prefix("uni")
        .filter(|h| h.len() >= 4 && h.len() % 4 == 0)
        .map(|h| {
            (0..h.len())
                .step_by(4)
                .map(|i| {
                    u32::from_str_radix(&h[i..i + 4], 16)
                        .ok()
                        .and_then(char::from_u32)
                })
                .collect::<Option<String>>()
        })
        .or_else(|| {
            name.strip_prefix('u')
                .filter(|h| (4..=6).contains(&h.len()))
                .map(|h| {
                    u32::from_str_radix(h, 16)
                        .ok()
                        .and_then(char::from_u32)
                        .map(String::from)
                })
        });
    hex.flatten()
}

/// Maps a BaseFont name onto one of the twelve Latin core fonts.
fn core_font_widths(base: &str) -> Option<&'static [(&'static str, u16)]> {
    let base = match base.find('+') {
        Some(6) => &base[7..],
        _ => base,
    };
    if let Some(t) = lookup(CORE_FONT_WIDTHS, base) {
        return Some(t);
    }
    let lower = base.to_ascii_lowercase();
    let bold = lower.contains("bold");
    let italic = lower.contains("italic") || lower.contains("oblique");
    let family = if lower.contains("courier") {
        "Courier"
    } else if lower.contains("helvetica") || lower.contains("arial") {
        "Helvetica"
    } else if lower.contains("times") {
        "Times"
    } else {
        return None;
    };
    let name = match (family, bold, italic) {
        ("Times", false, false) => "Times-Roman".to_owned(),
        ("Times", true, false) => "Times-Bold".to_owned(),
        ("Times", false, true) => "Times-Italic".to_owned(),
        ("Times", true, true) => "Times-BoldItalic".to_owned(),
        (f, false, false) => f.to_owned(),
        (f, true, false) => format!("{f}-Bold"),
        (f, false, true) => format!("{f}-Oblique"),
        (f, true, true) => format!("{f}-BoldOblique"),
    };
    lookup(CORE_FONT_WIDTHS, &name)
}

fn utf16be(bytes: &[u8]) -> String {
    let units: Vec<u16> = bytes
        .chunks(2)
        .map(|c| {
            if c.len() == 2 {
                u16::from_be_bytes([c[0], c[1]])
            } else {
                c[0] as u16
            }
        })
        .collect();
    String::from_utf16_lossy(&units)
}

fn code_of(bytes: &[u8]) -> u32 {
    bytes.iter().fold(0u32, |acc, &b| acc << 8 | b as u32)
}

/// Parses the `bfchar` and `bfrange` sections of a ToUnicode CMap.
pub fn parse_to_unicode(data: &[u8]) -> Result<HashMap<u32, String>, IngestError> {
    let mut map = HashMap::new();
    let mut lx = Lexer::new(data);
    let mut operands: Vec<Object> = Vec::new();
    let mut section = "";
    while let Some(tok) = lx.next_token()? {
        match tok {
            Token::Keyword(k) => {
                match k.as_str() {
                    "beginbfchar" => section = "char",
                    "beginbfrange" => section = "range",
                    "endbfchar" => {
                        for pair in operands.chunks(2) {
                            if let [Object::Str(src), Object::Str(dst)] = pair {
                                map.insert(code_of(src), utf16be(dst));
                            }
                        }
                        section = "";
                    }
                    "endbfrange" => {
                        for triple in operands.chunks(3) {
                            let [Object::Str(lo), Object::Str(hi), dst] = triple else {
                                continue;
                            };
                            let (lo, hi) = (code_of(lo), code_of(hi));
                            if hi < lo || hi - lo > 0xffff {
                                continue;
                            }
                            match dst {
                                Object::Str(start) => {
                                    let mut units: Vec<u8> = start.clone();
                                    for code in lo..=hi {
                                        map.insert(code, utf16be(&units));
                                        if let Some(last) = units.last_mut() {
                                            *last = last.wrapping_add(1);
                                        }
                                    }
                                }
                                Object::Array(items) => {
                                    for (code, item) in (lo..=hi).zip(items) {
                                        if let Object::Str(s) = item {
                                            map.insert(code, utf16be(s));
                                        }
                                    }
                                }
                                _ => {}
                            }
                        }
                        section = "";
                    }
                    _ => {}
                }
                operands.clear();
            }
            other if !section.is_empty() => {
                let at = lx.pos;
                operands.push(lx.object_from(other, false, at)?);
            }
            Token::ArrayOpen | Token::DictOpen => {
                // Skip composite objects outside bf sections.
                let at = lx.pos;
                lx.object_from(tok, false, at)?;
            }
            _ => {}
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glyph_names_resolve() {
        assert_eq!(glyph_name_to_unicode("A").as_deref(), Some("A"));
        assert_eq!(glyph_name_to_unicode("quoteright").as_deref(), Some("\u{2019}"));
        assert_eq!(glyph_name_to_unicode("uni00410042").as_deref(), Some("AB"));
        assert_eq!(glyph_name_to_unicode("f_i").as_deref(), Some("fi"));
        assert_eq!(glyph_name_to_unicode("zz-unknown"), None);
    }

    #[test]
    fn core_font_aliases() {
        assert_eq!(lookup(core_font_widths("Helvetica").unwrap(), "A"), Some(667));
        assert_eq!(
            lookup(core_font_widths("ABCDEF+Arial,Bold").unwrap(), "A"),
            Some(722)
        );
        assert_eq!(
            lookup(core_font_widths("TimesNewRomanPSMT").unwrap(), "a"),
            Some(444)
        );
        assert!(core_font_widths("CMR10").is_none());
    }

    #[test]
    fn to_unicode_char_and_range() {
        let cmap = b"1 begincodespacerange <00> <ff> endcodespacerange\n\
            2 beginbfchar <01> <0041> <02> <00660069> endbfchar\n\
            2 beginbfrange <10> <12> <0061> <20> <21> [<0058> <0059>] endbfrange";
        let m = parse_to_unicode(cmap).unwrap();
        assert_eq!(m[&1], "A");
        assert_eq!(m[&2], "fi");
        assert_eq!(m[&0x12], "c");
        assert_eq!(m[&0x21], "Y");
    }
}
