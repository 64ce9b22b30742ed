//! Tokenizer and object parser shared by the file-level scanner and the
//! content-stream interpreter.

use std::collections::BTreeMap;

use crate::ingest::IngestError;

pub type Dict = BTreeMap<String, Object>;

#[derive(Debug, Clone, PartialEq)]
pub enum Object {
    Null,
    Bool(bool),
    Int(i64),
    Real(f64),
    Name(String),
    Str(Vec<u8>),
    Array(Vec<Object>),
    Dict(Dict),
    Stream(Stream),
    Ref(u32, u16),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Stream {
    pub dict: Dict,
    pub raw: Vec<u8>,
}

impl Object {
    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            Object::Int(i) => Some(i as f64),
            Object::Real(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match *self {
            Object::Int(i) => Some(i),
            Object::Real(r) if r.fract() == 0.0 => Some(r as i64),
            _ => None,
        }
    }

    pub fn as_name(&self) -> Option<&str> {
        match self {
            Object::Name(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_dict(&self) -> Option<&Dict> {
        match self {
            Object::Dict(d) => Some(d),
            Object::Stream(s) => Some(&s.dict),
            _ => None,
        }
    }

    pub fn as_array(&self) -> Option<&[Object]> {
        match self {
            Object::Array(a) => Some(a),
            _ => None,
        }
    }
}

/// A lexical token. Keywords cover `obj`, `R`, booleans and every
/// content-stream operator.
#[derive(Debug, Clone, PartialEq)]
pub enum Token {
    Int(i64),
    Real(f64),
    Name(String),
    Str(Vec<u8>),
    ArrayOpen,
    ArrayClose,
    DictOpen,
    DictClose,
    Keyword(String),
}

pub fn is_whitespace(b: u8) -> bool {
    matches!(b, 0 | b'\t' | b'\n' | 0x0c | b'\r' | b' ')
}

pub fn is_delimiter(b: u8) -> bool {
    matches!(
        b,
        b'(' | b')' | b'<' | b'>' | b'[' | b']' | b'{' | b'}' | b'/' | b'%'
    )
}

fn is_regular(b: u8) -> bool {
    !is_whitespace(b) && !is_delimiter(b)
}

pub struct Lexer<'a> {
    pub data: &'a [u8],
    pub pos: usize,
}

impl<'a> Lexer<'a> {
    pub fn new(data: &'a [u8]) -> Self {
        Lexer { data, pos: 0 }
    }

    pub fn at(data: &'a [u8], pos: usize) -> Self {
        Lexer { data, pos }
    }

    pub fn malformed(&self, reason: impl Into<String>) -> IngestError {
        IngestError::MalformedPdf {
            offset: self.pos,
            reason: reason.into(),
        }
    }

    pub fn skip_ws(&mut self) {
        while self.pos < self.data.len() {
            let b = self.data[self.pos];
            if is_whitespace(b) {
                self.pos += 1;
            } else if b == b'%' {
                while self.pos < self.data.len()
                    && self.data[self.pos] != b'\n'
                    && self.data[self.pos] != b'\r'
                {
                    self.pos += 1;
                }
            } else {
                break;
            }
        }
    }

    pub fn eof(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.data.len()
    }

    pub fn peek_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let end = self.pos + kw.len();
        end <= self.data.len()
            && &self.data[self.pos..end] == kw.as_bytes()
            && (end == self.data.len() || !is_regular(self.data[end]))
    }

    pub fn next_token(&mut self) -> Result<Option<Token>, IngestError> {
        self.skip_ws();
        let Some(&b) = self.data.get(self.pos) else {
            return Ok(None);
        };
        let tok = match b {
            b'/' => {
                self.pos += 1;
                Token::Name(self.read_name())
            }
            b'(' => Token::Str(self.read_literal()?),
            b'<' => {
                if self.data.get(self.pos + 1) == Some(&b'<') {
                    self.pos += 2;
                    Token::DictOpen
                } else {
                    Token::Str(self.read_hex()?)
                }
            }
            b'>' => {
                if self.data.get(self.pos + 1) == Some(&b'>') {
                    self.pos += 2;
                    Token::DictClose
                } else {
                    return Err(self.malformed("unexpected '>'"));
                }
            }
            b'[' => {
                self.pos += 1;
                Token::ArrayOpen
            }
            b']' => {
                self.pos += 1;
                Token::ArrayClose
            }
            b'{' | b'}' => {
                self.pos += 1;
                Token::Keyword((b as char).to_string())
            }
            b')' => return Err(self.malformed("unbalanced ')'")),
            b'+' | b'-' | b'.' | b'0'..=b'9' => self.read_number(),
            _ => {
                let start = self.pos;
                while self.pos < self.data.len() && is_regular(self.data[self.pos]) {
                    self.pos += 1;
                }
                Token::Keyword(String::from_utf8_lossy(&self.data[start..self.pos]).into_owned())
            }
        };
        Ok(Some(tok))
    }

    fn read_name(&mut self) -> String {
        let mut out = Vec::new();
        while self.pos < self.data.len() && is_regular(self.data[self.pos]) {
            let b = self.data[self.pos];
            if b == b'#' && self.pos + 2 < self.data.len() {
                if let Ok(v) = u8::from_str_radix(
                    std::str::from_utf8(&self.data[self.pos + 1..self.pos + 3]).unwrap_or("zz"),
                    16,
                ) {
                    out.push(v);
                    self.pos += 3;
                    continue;
                }
            }
            out.push(b);
            self.pos += 1;
        }
        String::from_utf8_lossy(&out).into_owned()
    }

    fn read_number(&mut self) -> Token {
        let start = self.pos;
        self.pos += 1;
        while self.pos < self.data.len() && matches!(self.data[self.pos], b'0'..=b'9' | b'.' | b'-' | b'+') {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.data[start..self.pos]).unwrap_or("0");
        if let Ok(i) = text.parse::<i64>() {
            return Token::Int(i);
        }
        // Producers occasionally emit "--5" or "5." style reals.
        let cleaned: String = {
            let neg = text.starts_with('-');
            let body = text.trim_start_matches(['-', '+']);
            let body = match body.find(['-', '+']) {
                Some(i) => &body[..i],
                None => body,
            };
            format!("{}{}", if neg { "-" } else { "" }, body)
        };
        Token::Real(cleaned.parse::<f64>().unwrap_or(0.0))
    }

    fn read_literal(&mut self) -> Result<Vec<u8>, IngestError> {
        let start = self.pos;
        self.pos += 1;
        let mut depth = 1usize;
        let mut out = Vec::new();
        while self.pos < self.data.len() {
            let b = self.data[self.pos];
            self.pos += 1;
            match b {
                b'\\' => {
                    let Some(&e) = self.data.get(self.pos) else { break };
                    self.pos += 1;
                    match e {
                        b'n' => out.push(b'\n'),
                        b'r' => out.push(b'\r'),
                        b't' => out.push(b'\t'),
                        b'b' => out.push(0x08),
                        b'f' => out.push(0x0c),
                        b'\r' => {
                            if self.data.get(self.pos) == Some(&b'\n') {
                                self.pos += 1;
                            }
                        }
                        b'\n' => {}
                        b'0'..=b'7' => {
                            let mut v = (e - b'0') as u32;
                            for _ in 0..2 {
                                match self.data.get(self.pos) {
                                    Some(&d @ b'0'..=b'7') => {
                                        v = v * 8 + (d - b'0') as u32;
                                        self.pos += 1;
                                    }
                                    _ => break,
                                }
                            }
                            out.push((v & 0xff) as u8);
                        }
                        other => out.push(other),
                    }
                }
                b'(' => {
                    depth += 1;
                    out.push(b);
                }
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(out);
                    }
                    out.push(b);
                }
                _ => out.push(b),
            }
        }
        Err(IngestError::MalformedPdf {
            offset: start,
            reason: "unterminated string".into(),
        })
    }

    fn read_hex(&mut self) -> Result<Vec<u8>, IngestError> {
        let start = self.pos;
        self.pos += 1;
        let mut digits = Vec::new();
        while self.pos < self.data.len() {
            let b = self.data[self.pos];
            self.pos += 1;
            if b == b'>' {
                if digits.len() % 2 == 1 {
                    digits.push(0);
                }
                return Ok(digits.chunks(2).map(|p| p[0] << 4 | p[1]).collect());
            }
            if is_whitespace(b) {
                continue;
            }
            let v = (b as char).to_digit(16).ok_or(IngestError::MalformedPdf {
                offset: self.pos - 1,
                reason: "bad hex digit".into(),
            })?;
            digits.push(v as u8);
        }
        Err(IngestError::MalformedPdf {
            offset: start,
            reason: "unterminated hex string".into(),
        })
    }

    /// Parses one direct object. Indirect references (`n g R`) are
    /// recognised when `allow_refs` is set; content streams never contain
    /// them.
    pub fn parse_object(&mut self, allow_refs: bool) -> Result<Object, IngestError> {
        let start = self.pos;
        let tok = self
            .next_token()?
            .ok_or_else(|| self.malformed("unexpected end of data"))?;
        self.object_from(tok, allow_refs, start)
    }

    pub fn object_from(&mut self, tok: Token, allow_refs: bool, start: usize) -> Result<Object, IngestError> {
        Ok(match tok {
            Token::Int(i) => {
                if allow_refs && i >= 0 {
                    let save = self.pos;
                    if let Ok(Some(Token::Int(g))) = self.next_token() {
                        if g >= 0 && self.peek_keyword("R") {
                            self.pos += 1;
                            return Ok(Object::Ref(i as u32, g as u16));
                        }
                    }
                    self.pos = save;
                }
                Object::Int(i)
            }
            Token::Real(r) => Object::Real(r),
            Token::Name(n) => Object::Name(n),
            Token::Str(s) => Object::Str(s),
            Token::ArrayOpen => {
                let mut items = Vec::new();
                loop {
                    let at = self.pos;
                    match self.next_token()? {
                        Some(Token::ArrayClose) => break,
                        Some(t) => items.push(self.object_from(t, allow_refs, at)?),
                        None => {
                            return Err(IngestError::MalformedPdf {
                                offset: start,
                                reason: "unterminated array".into(),
                            })
                        }
                    }
                }
                Object::Array(items)
            }
            Token::DictOpen => {
                let mut dict = Dict::new();
                loop {
                    let at = self.pos;
                    match self.next_token()? {
                        Some(Token::DictClose) => break,
                        Some(Token::Name(key)) => {
                            let value = self.parse_object(allow_refs)?;
                            dict.insert(key, value);
                        }
                        Some(_) => {
                            return Err(IngestError::MalformedPdf {
                                offset: at,
                                reason: "dictionary key is not a name".into(),
                            })
                        }
                        None => {
                            return Err(IngestError::MalformedPdf {
                                offset: start,
                                reason: "unterminated dictionary".into(),
                            })
                        }
                    }
                }
                Object::Dict(dict)
            }
            Token::Keyword(k) => match k.as_str() {
                "true" => Object::Bool(true),
                "false" => Object::Bool(false),
                "null" => Object::Null,
                _ => {
                    return Err(IngestError::MalformedPdf {
                        offset: start,
                        reason: format!("unexpected keyword '{k}'"),
                    })
                }
            },
            Token::ArrayClose | Token::DictClose => {
                return Err(IngestError::MalformedPdf {
                    offset: start,
                    reason: "unexpected closing delimiter".into(),
                })
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_structures() {
        let mut lx = Lexer::new(b"<< /Type /Page /Kids [3 0 R 4 0 R] /Box [0 0 612.5 792] >>");
        let obj = lx.parse_object(true).unwrap();
        let d = obj.as_dict().unwrap();
        assert_eq!(d["Type"], Object::Name("Page".into()));
        assert_eq!(
            d["Kids"],
            Object::Array(vec![Object::Ref(3, 0), Object::Ref(4, 0)])
        );
        assert_eq!(d["Box"].as_array().unwrap()[2], Object::Real(612.5));
    }

    #[test]
    fn literal_string_escapes() {
        let mut lx = Lexer::new(br"(a\(b\)c \101 (nested) \\)");
        assert_eq!(
            lx.parse_object(false).unwrap(),
            Object::Str(b"a(b)c A (nested) \\".to_vec())
        );
    }

    #[test]
    fn hex_string_pads_odd_digit() {
        let mut lx = Lexer::new(b"<41 42 4>");
        assert_eq!(
            lx.parse_object(false).unwrap(),
            Object::Str(vec![0x41, 0x42, 0x40])
        );
    }

    #[test]
    fn name_hex_escape() {
        let mut lx = Lexer::new(b"/A#20B");
        assert_eq!(lx.parse_object(false).unwrap(), Object::Name("A B".into()));
    }

    #[test]
    fn unterminated_string_reports_offset() {
        let mut lx = Lexer::new(b"   (abc");
        match lx.parse_object(false) {
            Err(IngestError::MalformedPdf { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("{other:?}"),
        }
    }
}
