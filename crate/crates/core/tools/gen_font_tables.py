"""Regenerates src/pdf/font_tables.rs from the Adobe core font metrics
shipped with reportlab and the Adobe Glyph List shipped with pdfminer.six."""
import sys
from reportlab.pdfbase import _fontdata as fd
from pdfminer.glyphlist import glyphname2unicode

FONTS = [
    "Courier", "Courier-Bold", "Courier-Oblique", "Courier-BoldOblique",
    "Helvetica", "Helvetica-Bold", "Helvetica-Oblique", "Helvetica-BoldOblique",
    "Times-Roman", "Times-Bold", "Times-Italic", "Times-BoldItalic",
]
ENCODINGS = ["WinAnsiEncoding", "MacRomanEncoding", "StandardEncoding"]

names = set()
for f in FONTS:
    names.update(fd.widthsByFontGlyph[f].keys())
for e in ENCODINGS:
    names.update(n for n in fd.encodings[e] if n)
names = sorted(n for n in names if n in glyphname2unicode or len(n) == 1)

out = []
w = out.append
w("// Generated by tools/gen_font_tables.py. Do not edit by hand.")
w("")
w("/// Glyph names with their Unicode values, sorted by name.")
w("pub(crate) static GLYPH_UNICODE: &[(&str, char)] = &[")
for n in names:
    u = glyphname2unicode.get(n, n)
    cp = ord(u[0])
    w(f'    ("{n}", \'\\u{{{cp:04x}}}\'),')
w("];")
w("")
for e in ENCODINGS:
    ident = {"WinAnsiEncoding": "WIN_ANSI", "MacRomanEncoding": "MAC_ROMAN",
             "StandardEncoding": "STANDARD"}[e]
    w(f"pub(crate) static {ident}: [Option<&str>; 256] = [")
    for n in fd.encodings[e]:
        w(f'    Some("{n}"),' if n else "    None,")
    w("];")
    w("")
w("/// Advance widths in 1/1000 em keyed by glyph name, one table per core font.")
w("pub(crate) static CORE_FONT_WIDTHS: &[(&str, &[(&str, u16)])] = &[")
for f in sorted(FONTS):
    w(f'    ("{f}", &[')
    for n, width in sorted(fd.widthsByFontGlyph[f].items()):
        w(f'        ("{n}", {int(width)}),')
    w("    ]),")
w("];")
sys.stdout.write("\n".join(out) + "\n")
