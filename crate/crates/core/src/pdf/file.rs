//! File-level structure: sequential object scan, object streams, filters,
//! and the page tree.

use std::collections::{HashMap, HashSet};
use std::io::Read;

use super::lexer::{Dict, Lexer, Object, Stream, Token};
use crate::ingest::IngestError;

pub struct PdfFile {
    objects: HashMap<u32, Object>,
    trailer: Dict,
}

/// A leaf of the page tree with inherited attributes resolved.
pub struct PageNode {
    pub dict: Dict,
    pub media_box: [f64; 4],
    pub resources: Dict,
}

impl PdfFile {
    pub fn parse(data: &[u8]) -> Result<Self, IngestError> {
        let header =
            data.windows(5)
                .take(1024)
                .position(|w| w == b"%PDF-")
                .ok_or(IngestError::MalformedPdf {
                    offset: 0,
                    reason: "missing %PDF- header".into(),
                })?;

        let mut objects = HashMap::new();
        let mut trailer = Dict::new();
        let mut encrypted = false;
        let mut lx = Lexer::at(data, header);
        while !lx.eof() {
            let at = lx.pos;
            match lx.next_token()? {
                Some(Token::Int(num)) => {
                    let gen = lx.next_token()?;
                    if !matches!(gen, Some(Token::Int(_))) || !lx.peek_keyword("obj") {
                        return Err(IngestError::MalformedPdf {
                            offset: at,
                            reason: "expected 'N G obj'".into(),
                        });
                    }
                    lx.pos += 3;
                    let obj = parse_indirect_body(&mut lx, data)?;
                    if let Some(d) = obj.as_dict() {
                        if d.get("Type").and_then(Object::as_name) == Some("XRef") {
                            encrypted |= d.contains_key("Encrypt");
                            merge_trailer(&mut trailer, d);
                        }
                    }
                    objects.insert(num as u32, obj);
                }
                Some(Token::Keyword(k)) if k == "xref" => {
                    // Offsets are not needed by the sequential scan.
                    while !lx.eof() && !lx.peek_keyword("trailer") {
                        lx.next_token()?;
                    }
                }
                Some(Token::Keyword(k)) if k == "trailer" => {
                    let obj = lx.parse_object(true)?;
                    let d = obj
                        .as_dict()
                        .ok_or_else(|| lx.malformed("trailer is not a dictionary"))?;
                    encrypted |= d.contains_key("Encrypt");
                    merge_trailer(&mut trailer, d);
                }
                Some(Token::Keyword(k)) if k == "startxref" => {
                    lx.next_token()?;
                }
                _ => {
                    return Err(IngestError::MalformedPdf {
                        offset: at,
                        reason: "unexpected token at file level".into(),
                    })
                }
            }
        }
        if encrypted {
            return Err(IngestError::EncryptedPdf);
        }

        let mut file = PdfFile { objects, trailer };
        file.expand_object_streams()?;
        Ok(file)
    }

    fn expand_object_streams(&mut self) -> Result<(), IngestError> {
        let mut nums: Vec<u32> = self
            .objects
            .iter()
            .filter(|(_, o)| match o {
                Object::Stream(s) => s.dict.get("Type").and_then(Object::as_name) == Some("ObjStm"),
                _ => false,
            })
            .map(|(n, _)| *n)
            .collect();
        nums.sort_unstable();
        for num in nums {
            let Some(Object::Stream(stream)) = self.objects.get(&num).cloned() else {
                continue;
            };
            let data = self.decode_stream(&stream)?;
            let count = self.get_i64(&stream.dict, "N").unwrap_or(0).max(0) as usize;
            let first = self.get_i64(&stream.dict, "First").unwrap_or(0).max(0) as usize;
            let mut lx = Lexer::new(&data);
            let mut index = Vec::with_capacity(count);
            for _ in 0..count {
                match (lx.next_token()?, lx.next_token()?) {
                    (Some(Token::Int(n)), Some(Token::Int(off))) => index.push((n, off)),
                    _ => return Err(lx.malformed("bad object stream index")),
                }
            }
            for (n, off) in index {
                let mut olx = Lexer::at(&data, first + off.max(0) as usize);
                let obj = olx.parse_object(true)?;
                self.objects.entry(n as u32).or_insert(obj);
            }
        }
        Ok(())
    }

    pub fn resolve<'a>(&'a self, obj: &'a Object) -> &'a Object {
        let mut cur = obj;
        for _ in 0..32 {
            match cur {
                Object::Ref(n, _) => match self.objects.get(n) {
                    Some(o) => cur = o,
                    None => return &Object::Null,
                },
                _ => return cur,
            }
        }
        &Object::Null
    }

    pub fn get<'a>(&'a self, dict: &'a Dict, key: &str) -> Option<&'a Object> {
        dict.get(key)
            .map(|o| self.resolve(o))
            .filter(|o| **o != Object::Null)
    }

    pub fn get_dict<'a>(&'a self, dict: &'a Dict, key: &str) -> Option<&'a Dict> {
        self.get(dict, key).and_then(Object::as_dict)
    }

    pub fn get_i64(&self, dict: &Dict, key: &str) -> Option<i64> {
        self.get(dict, key).and_then(Object::as_i64)
    }

    pub fn get_f64(&self, dict: &Dict, key: &str) -> Option<f64> {
        self.get(dict, key).and_then(Object::as_f64)
    }

    pub fn get_name<'a>(&'a self, dict: &'a Dict, key: &str) -> Option<&'a str> {
        self.get(dict, key).and_then(Object::as_name)
    }

    /// Applies the stream's filter chain.
    pub fn decode_stream(&self, stream: &Stream) -> Result<Vec<u8>, IngestError> {
        let filters: Vec<String> = match self.get(&stream.dict, "Filter") {
            None => Vec::new(),
            Some(Object::Name(n)) => vec![n.clone()],
            Some(Object::Array(a)) => a
                .iter()
                .filter_map(|o| self.resolve(o).as_name().map(str::to_owned))
                .collect(),
            Some(_) => return Err(IngestError::Unsupported("malformed /Filter entry".into())),
        };
        let params: Vec<Option<&Dict>> = match self.get(&stream.dict, "DecodeParms") {
            Some(Object::Array(a)) => a.iter().map(|o| self.resolve(o).as_dict()).collect(),
            Some(o) => vec![o.as_dict()],
            None => Vec::new(),
        };
        let mut data = stream.raw.clone();
        for (i, filter) in filters.iter().enumerate() {
            let parms = params.get(i).copied().flatten();
            data = match filter.as_str() {
                "FlateDecode" | "Fl" => {
                    let inflated = inflate(&data)?;
                    self.apply_predictor(inflated, parms)?
                }
                "ASCIIHexDecode" | "AHx" => ascii_hex(&data)?,
                "ASCII85Decode" | "A85" => ascii85(&data)?,
                other => return Err(IngestError::Unsupported(format!("stream filter {other}"))),
            };
        }
        Ok(data)
    }

    fn apply_predictor(&self, data: Vec<u8>, parms: Option<&Dict>) -> Result<Vec<u8>, IngestError> {
        let Some(parms) = parms else { return Ok(data) };
        let predictor = self.get_i64(parms, "Predictor").unwrap_or(1);
        if predictor < 10 {
            if predictor == 1 {
                return Ok(data);
            }
            return Err(IngestError::Unsupported(format!(
                "FlateDecode predictor {predictor}"
            )));
        }
        let colors = self.get_i64(parms, "Colors").unwrap_or(1).max(1) as usize;
        let bpc = self.get_i64(parms, "BitsPerComponent").unwrap_or(8).max(1) as usize;
        let columns = self.get_i64(parms, "Columns").unwrap_or(1).max(1) as usize;
        let bpp = (colors * bpc).div_ceil(8).max(1);
        let row_len = (colors * bpc * columns).div_ceil(8);
        let mut out = Vec::with_capacity(data.len());
        let mut prev = vec![0u8; row_len];
        for chunk in data.chunks(row_len + 1) {
            if chunk.len() < row_len + 1 {
                break;
            }
            let kind = chunk[0];
            let mut row = chunk[1..].to_vec();
            for i in 0..row_len {
                let left = if i >= bpp { row[i - bpp] } else { 0 };
                let up = prev[i];
                let up_left = if i >= bpp { prev[i - bpp] } else { 0 };
                let pred = match kind {
                    0 => 0,
                    1 => left,
                    2 => up,
                    3 => ((left as u16 + up as u16) / 2) as u8,
                    4 => paeth(left, up, up_left),
                    k => return Err(IngestError::Unsupported(format!("PNG predictor type {k}"))),
                };
                row[i] = row[i].wrapping_add(pred);
            }
            out.extend_from_slice(&row);
            prev = row;
        }
        Ok(out)
    }

    /// Walks the page tree in document order.
    pub fn pages(&self) -> Result<Vec<PageNode>, IngestError> {
        let root = self
            .get_dict(&self.trailer, "Root")
            .or_else(|| {
                self.objects
                    .values()
                    .filter_map(Object::as_dict)
                    .find(|d| d.get("Type").and_then(Object::as_name) == Some("Catalog"))
            })
            .ok_or(IngestError::MalformedPdf {
                offset: 0,
                reason: "no document catalog".into(),
            })?;
        let tree = root.get("Pages").ok_or(IngestError::MalformedPdf {
            offset: 0,
            reason: "catalog has no /Pages".into(),
        })?;
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        self.walk_pages(tree, None, None, &mut out, &mut seen)?;
        Ok(out)
    }

    fn walk_pages(
        &self,
        node: &Object,
        media_box: Option<[f64; 4]>,
        resources: Option<&Dict>,
        out: &mut Vec<PageNode>,
        seen: &mut HashSet<u32>,
    ) -> Result<(), IngestError> {
        if let Object::Ref(n, _) = node {
            if !seen.insert(*n) {
                return Err(IngestError::MalformedPdf {
                    offset: 0,
                    reason: format!("page tree cycle at object {n}"),
                });
            }
        }
        let Some(dict) = self.resolve(node).as_dict() else {
            return Ok(());
        };
        let media_box = self.get_rect(dict, "MediaBox").or(media_box);
        let resources = self.get_dict(dict, "Resources").or(resources);
        let is_tree = self.get_name(dict, "Type") == Some("Pages")
            || (dict.contains_key("Kids") && self.get_name(dict, "Type") != Some("Page"));
        if is_tree {
            if let Some(kids) = self.get(dict, "Kids").and_then(Object::as_array) {
                for kid in kids {
                    self.walk_pages(kid, media_box, resources, out, seen)?;
                }
            }
        } else {
            out.push(PageNode {
                dict: dict.clone(),
                media_box: media_box.unwrap_or([0.0, 0.0, 612.0, 792.0]),
                resources: resources.cloned().unwrap_or_default(),
            });
        }
        Ok(())
    }

    pub fn get_rect(&self, dict: &Dict, key: &str) -> Option<[f64; 4]> {
        let arr = self.get(dict, key)?.as_array()?;
        if arr.len() != 4 {
            return None;
        }
        let mut r = [0.0; 4];
        for (slot, o) in r.iter_mut().zip(arr) {
            *slot = self.resolve(o).as_f64()?;
        }
        Some([r[0].min(r[2]), r[1].min(r[3]), r[0].max(r[2]), r[1].max(r[3])])
    }

    /// Concatenated, decoded content of a page's /Contents entry.
    pub fn page_content(&self, page: &PageNode) -> Result<Vec<u8>, IngestError> {
        let mut out = Vec::new();
        let items: Vec<&Object> = match page.dict.get("Contents").map(|o| self.resolve(o)) {
            None | Some(Object::Null) => Vec::new(),
            Some(Object::Array(a)) => a.iter().map(|o| self.resolve(o)).collect(),
            Some(o) => vec![o],
        };
        for item in items {
            if let Object::Stream(s) = item {
                out.extend(self.decode_stream(s)?);
                out.push(b'\n');
            }
        }
        Ok(out)
    }
}

fn merge_trailer(trailer: &mut Dict, d: &Dict) {
    for key in ["Root", "Info", "Encrypt"] {
        if let Some(v) = d.get(key) {
            trailer.insert(key.to_owned(), v.clone());
        }
    }
}

/// Parses what follows `N G obj`: an object, an optional stream body, and
/// `endobj`.
fn parse_indirect_body(lx: &mut Lexer<'_>, data: &[u8]) -> Result<Object, IngestError> {
    let obj = lx.parse_object(true)?;
    let obj = if lx.peek_keyword("stream") {
        let Object::Dict(dict) = obj else {
            return Err(lx.malformed("stream without dictionary"));
        };
        lx.pos += "stream".len();
        if data.get(lx.pos) == Some(&b'\r') {
            lx.pos += 1;
        }
        if data.get(lx.pos) == Some(&b'\n') {
            lx.pos += 1;
        }
        let start = lx.pos;
        let declared = match dict.get("Length") {
            Some(Object::Int(n)) if *n >= 0 => Some(*n as usize),
            _ => None,
        };
        let end = declared
            .filter(|&n| {
                let mut probe = Lexer::at(data, start + n);
                start + n <= data.len() && probe.peek_keyword("endstream")
            })
            .map(|n| start + n)
            .or_else(|| {
                find(data, b"endstream", start).map(|mut e| {
                    if e > start && data[e - 1] == b'\n' {
                        e -= 1;
                    }
                    if e > start && data[e - 1] == b'\r' {
                        e -= 1;
                    }
                    e
                })
            })
            .ok_or(IngestError::MalformedPdf {
                offset: start,
                reason: "stream without endstream".into(),
            })?;
        let raw = data[start..end].to_vec();
        lx.pos = end;
        if !lx.peek_keyword("endstream") {
            return Err(lx.malformed("expected endstream"));
        }
        lx.pos += "endstream".len();
        Object::Stream(Stream { dict, raw })
    } else {
        obj
    };
    if !lx.peek_keyword("endobj") {
        return Err(lx.malformed("expected endobj"));
    }
    lx.pos += "endobj".len();
    Ok(obj)
}

fn find(hay: &[u8], needle: &[u8], from: usize) -> Option<usize> {
    hay.get(from..)?
        .windows(needle.len())
        .position(|w| w == needle)
        .map(|p| p + from)
}

fn inflate(data: &[u8]) -> Result<Vec<u8>, IngestError> {
    let mut out = Vec::new();
    let mut z = flate2::read::ZlibDecoder::new(data);
    match z.read_to_end(&mut out) {
        Ok(_) => Ok(out),
        Err(_) => {
            // Some producers write raw deflate without the zlib wrapper.
            let mut out = Vec::new();
            flate2::read::DeflateDecoder::new(data)
                .read_to_end(&mut out)
                .map_err(|e| IngestError::MalformedPdf {
                    offset: 0,
                    reason: format!("FlateDecode: {e}"),
                })?;
            Ok(out)
        }
    }
}

fn ascii_hex(data: &[u8]) -> Result<Vec<u8>, IngestError> {
    let mut text = Vec::with_capacity(data.len() + 2);
    text.push(b'<');
    text.extend(data.iter().copied().take_while(|&b| b != b'>'));
    text.push(b'>');
    match Lexer::new(&text).parse_object(false)? {
        Object::Str(s) => Ok(s),
        _ => unreachable!("hex literal always parses to a string"),
    }
}

fn ascii85(data: &[u8]) -> Result<Vec<u8>, IngestError> {
    let mut out = Vec::new();
    let mut group = [0u32; 5];
    let mut n = 0;
    let bad = |reason: &str| IngestError::MalformedPdf {
        offset: 0,
        reason: format!("ASCII85Decode: {reason}"),
    };
    let body = data.strip_prefix(b"<~").unwrap_or(data);
    for &b in body {
        match b {
            b'~' => break,
            b'z' if n == 0 => out.extend_from_slice(&[0, 0, 0, 0]),
            b'!'..=b'u' => {
                group[n] = (b - b'!') as u32;
                n += 1;
                if n == 5 {
                    let v = group
                        .iter()
                        .try_fold(0u32, |acc, &d| acc.checked_mul(85).and_then(|a| a.checked_add(d)));
                    out.extend_from_slice(&v.ok_or_else(|| bad("group overflow"))?.to_be_bytes());
                    n = 0;
                }
            }
            b if super::lexer::is_whitespace(b) => {}
            _ => return Err(bad("invalid character")),
        }
    }
    if n > 0 {
        if n == 1 {
            return Err(bad("truncated group"));
        }
        for slot in group.iter_mut().skip(n) {
            *slot = 84;
        }
        let v = group.iter().fold(0u64, |acc, &d| acc * 85 + d as u64) as u32;
        out.extend_from_slice(&v.to_be_bytes()[..n - 1]);
    }
    Ok(out)
}

fn paeth(a: u8, b: u8, c: u8) -> u8 {
    let p = a as i16 + b as i16 - c as i16;
    let (pa, pb, pc) = ((p - a as i16).abs(), (p - b as i16).abs(), (p - c as i16).abs());
    if pa <= pb && pa <= pc {
        a
    } else if pb <= pc {
        b
    } else {
        c
    }
}
