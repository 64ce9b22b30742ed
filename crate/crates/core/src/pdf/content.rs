//! Content-stream interpreter for the text operators. Graphics operators
//! other than `q`/`Q`/`cm` only have their operands consumed.

use std::collections::HashMap;
use std::rc::Rc;

use super::file::PdfFile;
use super::font::Font;
use super::lexer::{Dict, Lexer, Object, Token};
use crate::ingest::{IngestError, RichChar};

const MAX_FORM_DEPTH: usize = 8;
const ROTATION_EPS: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix([f64; 6]);

impl Matrix {
    pub const IDENTITY: Matrix = Matrix([1.0, 0.0, 0.0, 1.0, 0.0, 0.0]);

    fn translate(tx: f64, ty: f64) -> Matrix {
        Matrix([1.0, 0.0, 0.0, 1.0, tx, ty])
    }

    /// `self × other` in the row-vector convention used by PDF.
    fn then(&self, other: &Matrix) -> Matrix {
        let [a1, b1, c1, d1, e1, f1] = self.0;
        let [a2, b2, c2, d2, e2, f2] = other.0;
        Matrix([
            a1 * a2 + b1 * c2,
            a1 * b2 + b1 * d2,
            c1 * a2 + d1 * c2,
            c1 * b2 + d1 * d2,
            e1 * a2 + f1 * c2 + e2,
            e1 * b2 + f1 * d2 + f2,
        ])
    }

    fn from_operands(ops: &[Object]) -> Option<Matrix> {
        if ops.len() < 6 {
            return None;
        }
        let mut m = [0.0; 6];
        for (slot, o) in m.iter_mut().zip(&ops[ops.len() - 6..]) {
            *slot = o.as_f64()?;
        }
        Some(Matrix(m))
    }
}

#[derive(Clone)]
struct GraphicsState {
    ctm: Matrix,
    char_spacing: f64,
    word_spacing: f64,
    h_scale: f64,
    leading: f64,
    rise: f64,
    font: Option<Rc<Font>>,
    font_size: f64,
}

impl Default for GraphicsState {
    fn default() -> Self {
        GraphicsState {
            ctm: Matrix::IDENTITY,
            char_spacing: 0.0,
            word_spacing: 0.0,
            h_scale: 1.0,
            leading: 0.0,
            rise: 0.0,
            font: None,
            font_size: 0.0,
        }
    }
}

pub struct Interpreter<'f> {
    file: &'f PdfFile,
    page: usize,
    state: GraphicsState,
    stack: Vec<GraphicsState>,
    text_matrix: Matrix,
    line_matrix: Matrix,
    pub chars: Vec<RichChar>,
}

impl<'f> Interpreter<'f> {
    pub fn new(file: &'f PdfFile, page: usize) -> Self {
        Interpreter {
            file,
            page,
            state: GraphicsState::default(),
            stack: Vec::new(),
            text_matrix: Matrix::IDENTITY,
            line_matrix: Matrix::IDENTITY,
            chars: Vec::new(),
        }
    }

    pub fn run(&mut self, content: &[u8], resources: &Dict) -> Result<(), IngestError> {
        self.run_at_depth(content, resources, 0)
    }

    fn run_at_depth(&mut self, content: &[u8], resources: &Dict, depth: usize) -> Result<(), IngestError> {
        let mut fonts: HashMap<String, Rc<Font>> = HashMap::new();
        let mut lx = Lexer::new(content);
        let mut operands: Vec<Object> = Vec::new();
        while let Some(tok) = lx.next_token()? {
            let at = lx.pos;
            let op = match tok {
                Token::Keyword(k) => k,
                other => {
                    operands.push(lx.object_from(other, false, at)?);
                    continue;
                }
            };
            match op.as_str() {
                "BI" => skip_inline_image(&mut lx)?,
                "q" => self.stack.push(self.state.clone()),
                "Q" => {
                    if let Some(s) = self.stack.pop() {
                        self.state = s;
                    }
                }
                "cm" => {
                    if let Some(m) = Matrix::from_operands(&operands) {
                        self.state.ctm = m.then(&self.state.ctm);
                    }
                }
                "BT" => {
                    self.text_matrix = Matrix::IDENTITY;
                    self.line_matrix = Matrix::IDENTITY;
                }
                "ET" => {}
                "Tc" => set_num(&operands, &mut self.state.char_spacing),
                "Tw" => set_num(&operands, &mut self.state.word_spacing),
                "Tz" => {
                    let mut pct = 100.0;
                    set_num(&operands, &mut pct);
                    self.state.h_scale = pct / 100.0;
                }
                "TL" => set_num(&operands, &mut self.state.leading),
                "Ts" => set_num(&operands, &mut self.state.rise),
                "Tf" => {
                    if let [.., Object::Name(name), size] = operands.as_slice() {
                        self.state.font_size = size.as_f64().unwrap_or(0.0);
                        let font = match fonts.get(name) {
                            Some(f) => f.clone(),
                            None => {
                                let dict = self
                                    .file
                                    .get_dict(resources, "Font")
                                    .and_then(|fs| self.file.get_dict(fs, name));
                                let font = match dict {
                                    Some(d) => Rc::new(Font::load(self.file, d, name)?),
                                    None => {
                                        return Err(IngestError::MalformedPdf {
                                            offset: at,
                                            reason: format!("font resource /{name} not found"),
                                        })
                                    }
                                };
                                fonts.insert(name.clone(), font.clone());
                                font
                            }
                        };
                        self.state.font = Some(font);
                    }
                }
                "Td" => {
                    if let Some((tx, ty)) = two_nums(&operands) {
                        self.move_line(tx, ty);
                    }
                }
                "TD" => {
                    if let Some((tx, ty)) = two_nums(&operands) {
                        self.state.leading = -ty;
                        self.move_line(tx, ty);
                    }
                }
                "Tm" => {
                    if let Some(m) = Matrix::from_operands(&operands) {
                        self.text_matrix = m;
                        self.line_matrix = m;
                    }
                }
                "T*" => self.move_line(0.0, -self.state.leading),
                "Tj" => {
                    if let Some(Object::Str(s)) = operands.last() {
                        self.show(s, at)?;
                    }
                }
                "'" => {
                    self.move_line(0.0, -self.state.leading);
                    if let Some(Object::Str(s)) = operands.last() {
                        self.show(s, at)?;
                    }
                }
                "\"" => {
                    if let [.., aw, ac, Object::Str(s)] = operands.as_slice() {
                        self.state.word_spacing = aw.as_f64().unwrap_or(0.0);
                        self.state.char_spacing = ac.as_f64().unwrap_or(0.0);
                        let s = s.clone();
                        self.move_line(0.0, -self.state.leading);
                        self.show(&s, at)?;
                    }
                }
                "TJ" => {
                    if let Some(Object::Array(items)) = operands.last() {
                        for item in items.clone() {
                            match item {
                                Object::Str(s) => self.show(&s, at)?,
                                other => {
                                    if let Some(adj) = other.as_f64() {
                                        let tx = -adj / 1000.0 * self.state.font_size * self.state.h_scale;
                                        self.text_matrix = Matrix::translate(tx, 0.0).then(&self.text_matrix);
                                    }
                                }
                            }
                        }
                    }
                }
                "Do" => {
                    if let Some(Object::Name(name)) = operands.last() {
                        self.draw_xobject(name, resources, depth)?;
                    }
                }
                _ => {}
            }
            operands.clear();
        }
        Ok(())
    }

    fn move_line(&mut self, tx: f64, ty: f64) {
        self.line_matrix = Matrix::translate(tx, ty).then(&self.line_matrix);
        self.text_matrix = self.line_matrix;
    }

    fn draw_xobject(&mut self, name: &str, resources: &Dict, depth: usize) -> Result<(), IngestError> {
        let Some(Object::Stream(stream)) = self
            .file
            .get_dict(resources, "XObject")
            .and_then(|xs| self.file.get(xs, name))
        else {
            return Ok(());
        };
        if self.file.get_name(&stream.dict, "Subtype") != Some("Form") || depth >= MAX_FORM_DEPTH {
            return Ok(());
        }
        let content = self.file.decode_stream(stream)?;
        let form_resources = self
            .file
            .get_dict(&stream.dict, "Resources")
            .cloned()
            .unwrap_or_else(|| resources.clone());
        let saved = self.state.clone();
        let (saved_tm, saved_lm) = (self.text_matrix, self.line_matrix);
        if let Some(m) = self
            .file
            .get(&stream.dict, "Matrix")
            .and_then(Object::as_array)
            .and_then(Matrix::from_operands)
        {
            self.state.ctm = m.then(&self.state.ctm);
        }
        let stack_len = self.stack.len();
        self.run_at_depth(&content, &form_resources, depth + 1)?;
        self.stack.truncate(stack_len);
        self.state = saved;
        self.text_matrix = saved_tm;
        self.line_matrix = saved_lm;
        Ok(())
    }

    fn show(&mut self, bytes: &[u8], offset: usize) -> Result<(), IngestError> {
        let Some(font) = self.state.font.clone() else {
            return Err(IngestError::MalformedPdf {
                offset,
                reason: "text shown before a font was selected".into(),
            });
        };
        let st = &self.state;
        for code in font.codes(bytes) {
            let device = self.text_matrix.then(&st.ctm);
            let [a, b, c, d, _, _] = device.0;
            let scale = a.abs().max(d.abs());
            if b.abs() > ROTATION_EPS * scale.max(1.0) || c.abs() > ROTATION_EPS * scale.max(1.0) {
                return Err(IngestError::Unsupported("rotated text matrix".into()));
            }
            let render =
                Matrix([st.font_size * st.h_scale, 0.0, 0.0, st.font_size, 0.0, st.rise]).then(&device);
            let size = (st.font_size * d).abs();
            let w0 = font.width(code);
            let advance = (w0 / 1000.0 * st.font_size * st.h_scale * a).abs();
            let text = font.text(code);
            let n = text.chars().count().max(1) as f64;
            if size > 0.0 && render.0[4].is_finite() && render.0[5].is_finite() {
                for (k, ch) in text.chars().enumerate() {
                    self.chars.push(RichChar {
                        codepoint: ch,
                        page: self.page,
                        x: render.0[4] + advance / n * k as f64,
                        y: render.0[5],
                        font_name: font.name.clone(),
                        font_size: size,
                        advance: Some(advance / n),
                    });
                }
            }
            let word = if font.is_single_byte() && code == 32 {
                st.word_spacing
            } else {
                0.0
            };
            let tx = (w0 / 1000.0 * st.font_size + st.char_spacing + word) * st.h_scale;
            self.text_matrix = Matrix::translate(tx, 0.0).then(&self.text_matrix);
        }
        Ok(())
    }
}

fn set_num(ops: &[Object], slot: &mut f64) {
    if let Some(v) = ops.last().and_then(Object::as_f64) {
        *slot = v;
    }
}

fn two_nums(ops: &[Object]) -> Option<(f64, f64)> {
    match ops {
        [.., a, b] => Some((a.as_f64()?, b.as_f64()?)),
        _ => None,
    }
}

/// Skips `BI <dict> ID <data> EI`; the lexer sits just after `BI`.
fn skip_inline_image(lx: &mut Lexer<'_>) -> Result<(), IngestError> {
    loop {
        match lx.next_token()? {
            Some(Token::Keyword(k)) if k == "ID" => break,
            Some(_) => {}
            None => return Err(lx.malformed("inline image without ID")),
        }
    }
    let data = lx.data;
    let mut i = lx.pos + 1;
    while i + 2 <= data.len() {
        if &data[i..i + 2] == b"EI"
            && super::lexer::is_whitespace(data[i - 1])
            && (i + 2 == data.len() || super::lexer::is_whitespace(data[i + 2]))
        {
            lx.pos = i + 2;
            return Ok(());
        }
        i += 1;
    }
    Err(lx.malformed("inline image without EI"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_composition_order() {
        let scale = Matrix([2.0, 0.0, 0.0, 2.0, 0.0, 0.0]);
        let shift = Matrix::translate(10.0, 5.0);
        // Scale first, then translate.
        assert_eq!(scale.then(&shift).0, [2.0, 0.0, 0.0, 2.0, 10.0, 5.0]);
        // Translate first, then scale.
        assert_eq!(shift.then(&scale).0, [2.0, 0.0, 0.0, 2.0, 20.0, 10.0]);
    }
}
