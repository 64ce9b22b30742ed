// Generated by tools/gen_font_tables.py. Do not edit by hand.

/// Glyph names with their Unicode values, sorted by name.
pub(crate) static GLYPH_UNICODE: &[(&str, char)] = &[
    ("A", '\u{0041}'),
    ("AE", '\u{00c6}'),
    ("Aacute", '\u{00c1}'),
    ("Acircumflex", '\u{00c2}'),
    ("Adieresis", '\u{00c4}'),
    ("Agrave", '\u{00c0}'),
    ("Aring", '\u{00c5}'),
    ("Atilde", '\u{00c3}'),
    ("B", '\u{0042}'),
    ("C", '\u{0043}'),
    ("Ccedilla", '\u{00c7}'),
    ("D", '\u{0044}'),
    ("E", '\u{0045}'),
    ("Eacute", '\u{00c9}'),
    ("Ecircumflex", '\u{00ca}'),
    ("Edieresis", '\u{00cb}'),
    ("Egrave", '\u{00c8}'),
    ("Eth", '\u{00d0}'),
    ("Euro", '\u{20ac}'),
    ("F", '\u{0046}'),
    ("G", '\u{0047}'),
    ("H", '\u{0048}'),
    ("I", '\u{0049}'),
    ("Iacute", '\u{00cd}'),
    ("Icircumflex", '\u{00ce}'),
    ("Idieresis", '\u{00cf}'),
    ("Igrave", '\u{00cc}'),
    ("J", '\u{004a}'),
    ("K", '\u{004b}'),
    ("L", '\u{004c}'),
    ("Lslash", '\u{0141}'),
    ("M", '\u{004d}'),
    ("N", '\u{004e}'),
    ("Ntilde", '\u{00d1}'),
    ("O", '\u{004f}'),
    ("OE", '\u{0152}'),
    ("Oacute", '\u{00d3}'),
    ("Ocircumflex", '\u{00d4}'),
    ("Odieresis", '\u{00d6}'),
    ("Ograve", '\u{00d2}'),
    ("Oslash", '\u{00d8}'),
    ("Otilde", '\u{00d5}'),
    ("P", '\u{0050}'),
    ("Q", '\u{0051}'),
    ("R", '\u{0052}'),
    ("S", '\u{0053}'),
    ("Scaron", '\u{0160}'),
    ("T", '\u{0054}'),
    ("Thorn", '\u{00de}'),
    ("U", '\u{0055}'),
    ("Uacute", '\u{00da}'),
    ("Ucircumflex", '\u{00db}'),
    ("Udieresis", '\u{00dc}'),
    ("Ugrave", '\u{00d9}'),
    ("V", '\u{0056}'),
    ("W", '\u{0057}'),
    ("X", '\u{0058}'),
    ("Y", '\u{0059}'),
    ("Yacute", '\u{00dd}'),
    ("Ydieresis", '\u{0178}'),
    ("Z", '\u{005a}'),
    ("Zcaron", '\u{017d}'),
    ("a", '\u{0061}'),
    ("aacute", '\u{00e1}'),
    ("acircumflex", '\u{00e2}'),
    ("acute", '\u{00b4}'),
    ("adieresis", '\u{00e4}'),
    ("ae", '\u{00e6}'),
    ("agrave", '\u{00e0}'),
    ("ampersand", '\u{0026}'),
    ("aring", '\u{00e5}'),
    ("asciicircum", '\u{005e}'),
    ("asciitilde", '\u{007e}'),
    ("asterisk", '\u{002a}'),
    ("at", '\u{0040}'),
    ("atilde", '\u{00e3}'),
    ("b", '\u{0062}'),
    ("backslash", '\u{005c}'),
    ("bar", '\u{007c}'),
    ("braceleft", '\u{007b}'),
    ("braceright", '\u{007d}'),
    ("bracketleft", '\u{005b}'),
    ("bracketright", '\u{005d}'),
    ("breve", '\u{02d8}'),
    ("brokenbar", '\u{00a6}'),
    ("bullet", '\u{2022}'),
    ("c", '\u{0063}'),
    ("caron", '\u{02c7}'),
    ("ccedilla", '\u{00e7}'),
    ("cedilla", '\u{00b8}'),
    ("cent", '\u{00a2}'),
    ("circumflex", '\u{02c6}'),
    ("colon", '\u{003a}'),
    ("comma", '\u{002c}'),
    ("copyright", '\u{00a9}'),
    ("currency", '\u{00a4}'),
    ("d", '\u{0064}'),
    ("dagger", '\u{2020}'),
    ("daggerdbl", '\u{2021}'),
    ("degree", '\u{00b0}'),
    ("dieresis", '\u{00a8}'),
    ("divide", '\u{00f7}'),
    ("dollar", '\u{0024}'),
    ("dotaccent", '\u{02d9}'),
    ("dotlessi", '\u{0131}'),
    ("e", '\u{0065}'),
    ("eacute", '\u{00e9}'),
    ("ecircumflex", '\u{00ea}'),
    ("edieresis", '\u{00eb}'),
    ("egrave", '\u{00e8}'),
    ("eight", '\u{0038}'),
    ("ellipsis", '\u{2026}'),
    ("emdash", '\u{2014}'),
    ("endash", '\u{2013}'),
    ("equal", '\u{003d}'),
    ("eth", '\u{00f0}'),
    ("exclam", '\u{0021}'),
    ("exclamdown", '\u{00a1}'),
    ("f", '\u{0066}'),
    ("fi", '\u{fb01}'),
    ("five", '\u{0035}'),
    ("fl", '\u{fb02}'),
    ("florin", '\u{0192}'),
    ("four", '\u{0034}'),
    ("fraction", '\u{2044}'),
    ("g", '\u{0067}'),
    ("germandbls", '\u{00df}'),
    ("grave", '\u{0060}'),
    ("greater", '\u{003e}'),
    ("guillemotleft", '\u{00ab}'),
    ("guillemotright", '\u{00bb}'),
    ("guilsinglleft", '\u{2039}'),
    ("guilsinglright", '\u{203a}'),
    ("h", '\u{0068}'),
    ("hungarumlaut", '\u{02dd}'),
    ("hyphen", '\u{002d}'),
    ("i", '\u{0069}'),
    ("iacute", '\u{00ed}'),
    ("icircumflex", '\u{00ee}'),
    ("idieresis", '\u{00ef}'),
    ("igrave", '\u{00ec}'),
    ("j", '\u{006a}'),
    ("k", '\u{006b}'),
    ("l", '\u{006c}'),
    ("less", '\u{003c}'),
    ("logicalnot", '\u{00ac}'),
    ("lslash", '\u{0142}'),
    ("m", '\u{006d}'),
    ("macron", '\u{00af}'),
    ("minus", '\u{2212}'),
    ("mu", '\u{00b5}'),
    ("multiply", '\u{00d7}'),
    ("n", '\u{006e}'),
    ("nine", '\u{0039}'),
    ("ntilde", '\u{00f1}'),
    ("numbersign", '\u{0023}'),
    ("o", '\u{006f}'),
    ("oacute", '\u{00f3}'),
    ("ocircumflex", '\u{00f4}'),
    ("odieresis", '\u{00f6}'),
    ("oe", '\u{0153}'),
    ("ogonek", '\u{02db}'),
    ("ograve", '\u{00f2}'),
    ("one", '\u{0031}'),
    ("onehalf", '\u{00bd}'),
    ("onequarter", '\u{00bc}'),
    ("onesuperior", '\u{00b9}'),
    ("ordfeminine", '\u{00aa}'),
    ("ordmasculine", '\u{00ba}'),
    ("oslash", '\u{00f8}'),
    ("otilde", '\u{00f5}'),
    ("p", '\u{0070}'),
    ("paragraph", '\u{00b6}'),
    ("parenleft", '\u{0028}'),
    ("parenright", '\u{0029}'),
    ("percent", '\u{0025}'),
    ("period", '\u{002e}'),
    ("periodcentered", '\u{00b7}'),
    ("perthousand", '\u{2030}'),
    ("plus", '\u{002b}'),
    ("plusminus", '\u{00b1}'),
    ("q", '\u{0071}'),
    ("question", '\u{003f}'),
    ("questiondown", '\u{00bf}'),
    ("quotedbl", '\u{0022}'),
    ("quotedblbase", '\u{201e}'),
    ("quotedblleft", '\u{201c}'),
    ("quotedblright", '\u{201d}'),
    ("quoteleft", '\u{2018}'),
    ("quoteright", '\u{2019}'),
    ("quotesinglbase", '\u{201a}'),
    ("quotesingle", '\u{0027}'),
    ("r", '\u{0072}'),
    ("registered", '\u{00ae}'),
    ("ring", '\u{02da}'),
    ("s", '\u{0073}'),
    ("scaron", '\u{0161}'),
    ("section", '\u{00a7}'),
    ("semicolon", '\u{003b}'),
    ("seven", '\u{0037}'),
    ("six", '\u{0036}'),
    ("slash", '\u{002f}'),
    ("space", '\u{0020}'),
    ("sterling", '\u{00a3}'),
    ("t", '\u{0074}'),
    ("thorn", '\u{00fe}'),
    ("three", '\u{0033}'),
    ("threequarters", '\u{00be}'),
    ("threesuperior", '\u{00b3}'),
    ("tilde", '\u{02dc}'),
    ("trademark", '\u{2122}'),
    ("two", '\u{0032}'),
    ("twosuperior", '\u{00b2}'),
    ("u", '\u{0075}'),
    ("uacute", '\u{00fa}'),
    ("ucircumflex", '\u{00fb}'),
    ("udieresis", '\u{00fc}'),
    ("ugrave", '\u{00f9}'),
    ("underscore", '\u{005f}'),
    ("v", '\u{0076}'),
    ("w", '\u{0077}'),
    ("x", '\u{0078}'),
    ("y", '\u{0079}'),
    ("yacute", '\u{00fd}'),
    ("ydieresis", '\u{00ff}'),
    ("yen", '\u{00a5}'),
    ("z", '\u{007a}'),
    ("zcaron", '\u{017e}'),
    ("zero", '\u{0030}'),
];

pub(crate) static WIN_ANSI: [Option<&str>; 256] = [
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    Some("space"),
    Some("exclam"),
    Some("quotedbl"),
    Some("numbersign"),
    Some("dollar"),
    Some("percent"),
    Some("ampersand"),
    Some("quotesingle"),
    Some("parenleft"),
    Some("parenright"),
    Some("asterisk"),
    Some("plus"),
    Some("comma"),
    Some("hyphen"),
    Some("period"),
    Some("slash"),
    Some("zero"),
    Some("one"),
    Some("two"),
    Some("three"),
    Some("four"),
    Some("five"),
    Some("six"),
    Some("seven"),
    Some("eight"),
    Some("nine"),
    Some("colon"),
    Some("semicolon"),
    Some("less"),
    Some("equal"),
    Some("greater"),
    Some("question"),
    Some("at"),
    Some("A"),
    Some("B"),
    Some("C"),
    Some("D"),
    Some("E"),
    Some("F"),
    Some("G"),
    Some("H"),
    Some("I"),
    Some("J"),
    Some("K"),
    Some("L"),
    Some("M"),
    Some("N"),
    Some("O"),
    Some("P"),
    Some("Q"),
    Some("R"),
    Some("S"),
    Some("T"),
    Some("U"),
    Some("V"),
    Some("W"),
    Some("X"),
    Some("Y"),
    Some("Z"),
    Some("bracketleft"),
    Some("backslash"),
    Some("bracketright"),
    Some("asciicircum"),
    Some("underscore"),
    Some("grave"),
    Some("a"),
    Some("b"),
    Some("c"),
    Some("d"),
    Some("e"),
    Some("f"),
    Some("g"),
    Some("h"),
    Some("i"),
    Some("j"),
    Some("k"),
    Some("l"),
    Some("m"),
    Some("n"),
    Some("o"),
    Some("p"),
    Some("q"),
    Some("r"),
    Some("s"),
    Some("t"),
    Some("u"),
    Some("v"),
    Some("w"),
    Some("x"),
    Some("y"),
    Some("z"),
    Some("braceleft"),
    Some("bar"),
    Some("braceright"),
    Some("asciitilde"),
    Some("bullet"),
    Some("Euro"),
    Some("bullet"),
    Some("quotesinglbase"),
    Some("florin"),
    Some("quotedblbase"),
    Some("ellipsis"),
    Some("dagger"),
    Some("daggerdbl"),
    Some("circumflex"),
    Some("perthousand"),
    Some("Scaron"),
    Some("guilsinglleft"),
    Some("OE"),
    Some("bullet"),
    Some("Zcaron"),
    Some("bullet"),
    Some("bullet"),
    Some("quoteleft"),
    Some("quoteright"),
    Some("quotedblleft"),
    Some("quotedblright"),
    Some("bullet"),
    Some("endash"),
    Some("emdash"),
    Some("tilde"),
    Some("trademark"),
    Some("scaron"),
    Some("guilsinglright"),
    Some("oe"),
    Some("bullet"),
    Some("zcaron"),
    Some("Ydieresis"),
    Some("space"),
    Some("exclamdown"),
    Some("cent"),
    Some("sterling"),
    Some("currency"),
    Some("yen"),
    Some("brokenbar"),
    Some("section"),
    Some("dieresis"),
    Some("copyright"),
    Some("ordfeminine"),
    Some("guillemotleft"),
    Some("logicalnot"),
    Some("hyphen"),
    Some("registered"),
    Some("macron"),
    Some("degree"),
    Some("plusminus"),
    Some("twosuperior"),
    Some("threesuperior"),
    Some("acute"),
    Some("mu"),
    Some("paragraph"),
    Some("periodcentered"),
    Some("cedilla"),
    Some("onesuperior"),
    Some("ordmasculine"),
    Some("guillemotright"),
    Some("onequarter"),
    Some("onehalf"),
    Some("threequarters"),
    Some("questiondown"),
    Some("Agrave"),
    Some("Aacute"),
    Some("Acircumflex"),
    Some("Atilde"),
    Some("Adieresis"),
    Some("Aring"),
    Some("AE"),
    Some("Ccedilla"),
    Some("Egrave"),
    Some("Eacute"),
    Some("Ecircumflex"),
    Some("Edieresis"),
    Some("Igrave"),
    Some("Iacute"),
    Some("Icircumflex"),
    Some("Idieresis"),
    Some("Eth"),
    Some("Ntilde"),
    Some("Ograve"),
    Some("Oacute"),
    Some("Ocircumflex"),
    Some("Otilde"),
    Some("Odieresis"),
    Some("multiply"),
    Some("Oslash"),
    Some("Ugrave"),
    Some("Uacute"),
    Some("Ucircumflex"),
    Some("Udieresis"),
    Some("Yacute"),
    Some("Thorn"),
    Some("germandbls"),
    Some("agrave"),
    Some("aacute"),
    Some("acircumflex"),
    Some("atilde"),
    Some("adieresis"),
    Some("aring"),
    Some("ae"),
    Some("ccedilla"),
    Some("egrave"),
    Some("eacute"),
    Some("ecircumflex"),
    Some("edieresis"),
    Some("igrave"),
    Some("iacute"),
    Some("icircumflex"),
    Some("idieresis"),
    Some("eth"),
    Some("ntilde"),
    Some("ograve"),
    Some("oacute"),
    Some("ocircumflex"),
    Some("otilde"),
    Some("odieresis"),
    Some("divide"),
    Some("oslash"),
    Some("ugrave"),
    Some("uacute"),
    Some("ucircumflex"),
    Some("udieresis"),
    Some("yacute"),
    Some("thorn"),
    Some("ydieresis"),
];

pub(crate) static MAC_ROMAN: [Option<&str>; 256] = [
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    Some("space"),
    Some("exclam"),
    Some("quotedbl"),
    Some("numbersign"),
    Some("dollar"),
    Some("percent"),
    Some("ampersand"),
    Some("quotesingle"),
    Some("parenleft"),
    Some("parenright"),
    Some("asterisk"),
    Some("plus"),
    Some("comma"),
    Some("hyphen"),
    Some("period"),
    Some("slash"),
    Some("zero"),
    Some("one"),
    Some("two"),
    Some("three"),
    Some("four"),
    Some("five"),
    Some("six"),
    Some("seven"),
    Some("eight"),
    Some("nine"),
    Some("colon"),
    Some("semicolon"),
    Some("less"),
    Some("equal"),
    Some("greater"),
    Some("question"),
    Some("at"),
    Some("A"),
    Some("B"),
    Some("C"),
    Some("D"),
    Some("E"),
    Some("F"),
    Some("G"),
    Some("H"),
    Some("I"),
    Some("J"),
    Some("K"),
    Some("L"),
    Some("M"),
    Some("N"),
    Some("O"),
    Some("P"),
    Some("Q"),
    Some("R"),
    Some("S"),
    Some("T"),
    Some("U"),
    Some("V"),
    Some("W"),
    Some("X"),
    Some("Y"),
    Some("Z"),
    Some("bracketleft"),
    Some("backslash"),
    Some("bracketright"),
    Some("asciicircum"),
    Some("underscore"),
    Some("grave"),
    Some("a"),
    Some("b"),
    Some("c"),
    Some("d"),
    Some("e"),
    Some("f"),
    Some("g"),
    Some("h"),
    Some("i"),
    Some("j"),
    Some("k"),
    Some("l"),
    Some("m"),
    Some("n"),
    Some("o"),
    Some("p"),
    Some("q"),
    Some("r"),
    Some("s"),
    Some("t"),
    Some("u"),
    Some("v"),
    Some("w"),
    Some("x"),
    Some("y"),
    Some("z"),
    Some("braceleft"),
    Some("bar"),
    Some("braceright"),
    Some("asciitilde"),
    None,
    Some("Adieresis"),
    Some("Aring"),
    Some("Ccedilla"),
    Some("Eacute"),
    Some("Ntilde"),
    Some("Odieresis"),
    Some("Udieresis"),
    Some("aacute"),
    Some("agrave"),
    Some("acircumflex"),
    Some("adieresis"),
    Some("atilde"),
    Some("aring"),
    Some("ccedilla"),
    Some("eacute"),
    Some("egrave"),
    Some("ecircumflex"),
    Some("edieresis"),
    Some("iacute"),
    Some("igrave"),
    Some("icircumflex"),
    Some("idieresis"),
    Some("ntilde"),
    Some("oacute"),
    Some("ograve"),
    Some("ocircumflex"),
    Some("odieresis"),
    Some("otilde"),
    Some("uacute"),
    Some("ugrave"),
    Some("ucircumflex"),
    Some("udieresis"),
    Some("dagger"),
    Some("degree"),
    Some("cent"),
    Some("sterling"),
    Some("section"),
    Some("bullet"),
    Some("paragraph"),
    Some("germandbls"),
    Some("registered"),
    Some("copyright"),
    Some("trademark"),
    Some("acute"),
    Some("dieresis"),
    None,
    Some("AE"),
    Some("Oslash"),
    None,
    Some("plusminus"),
    None,
    None,
    Some("yen"),
    Some("mu"),
    None,
    None,
    None,
    None,
    None,
    Some("ordfeminine"),
    Some("ordmasculine"),
    None,
    Some("ae"),
    Some("oslash"),
    Some("questiondown"),
    Some("exclamdown"),
    Some("logicalnot"),
    None,
    Some("florin"),
    None,
    None,
    Some("guillemotleft"),
    Some("guillemotright"),
    Some("ellipsis"),
    Some("space"),
    Some("Agrave"),
    Some("Atilde"),
    Some("Otilde"),
    Some("OE"),
    Some("oe"),
    Some("endash"),
    Some("emdash"),
    Some("quotedblleft"),
    Some("quotedblright"),
    Some("quoteleft"),
    Some("quoteright"),
    Some("divide"),
    None,
    Some("ydieresis"),
    Some("Ydieresis"),
    Some("fraction"),
    Some("currency"),
    Some("guilsinglleft"),
    Some("guilsinglright"),
    Some("fi"),
    Some("fl"),
    Some("daggerdbl"),
    Some("periodcentered"),
    Some("quotesinglbase"),
    Some("quotedblbase"),
    Some("perthousand"),
    Some("Acircumflex"),
    Some("Ecircumflex"),
    Some("Aacute"),
    Some("Edieresis"),
    Some("Egrave"),
    Some("Iacute"),
    Some("Icircumflex"),
    Some("Idieresis"),
    Some("Igrave"),
    Some("Oacute"),
    Some("Ocircumflex"),
    None,
    Some("Ograve"),
    Some("Uacute"),
    Some("Ucircumflex"),
    Some("Ugrave"),
    Some("dotlessi"),
    Some("circumflex"),
    Some("tilde"),
    Some("macron"),
    Some("breve"),
    Some("dotaccent"),
    Some("ring"),
    Some("cedilla"),
    Some("hungarumlaut"),
    Some("ogonek"),
    Some("caron"),
];

pub(crate) static STANDARD: [Option<&str>; 256] = [
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    Some("space"),
    Some("exclam"),
    Some("quotedbl"),
    Some("numbersign"),
    Some("dollar"),
    Some("percent"),
    Some("ampersand"),
    Some("quoteright"),
    Some("parenleft"),
    Some("parenright"),
    Some("asterisk"),
    Some("plus"),
    Some("comma"),
    Some("hyphen"),
    Some("period"),
    Some("slash"),
    Some("zero"),
    Some("one"),
    Some("two"),
    Some("three"),
    Some("four"),
    Some("five"),
    Some("six"),
    Some("seven"),
    Some("eight"),
    Some("nine"),
    Some("colon"),
    Some("semicolon"),
    Some("less"),
    Some("equal"),
    Some("greater"),
    Some("question"),
    Some("at"),
    Some("A"),
    Some("B"),
    Some("C"),
    Some("D"),
    Some("E"),
    Some("F"),
    Some("G"),
    Some("H"),
    Some("I"),
    Some("J"),
    Some("K"),
    Some("L"),
    Some("M"),
    Some("N"),
    Some("O"),
    Some("P"),
    Some("Q"),
    Some("R"),
    Some("S"),
    Some("T"),
    Some("U"),
    Some("V"),
    Some("W"),
    Some("X"),
    Some("Y"),
    Some("Z"),
    Some("bracketleft"),
    Some("backslash"),
    Some("bracketright"),
    Some("asciicircum"),
    Some("underscore"),
    Some("quoteleft"),
    Some("a"),
    Some("b"),
    Some("c"),
    Some("d"),
    Some("e"),
    Some("f"),
    Some("g"),
    Some("h"),
    Some("i"),
    Some("j"),
    Some("k"),
    Some("l"),
    Some("m"),
    Some("n"),
    Some("o"),
    Some("p"),
    Some("q"),
    Some("r"),
    Some("s"),
    Some("t"),
    Some("u"),
    Some("v"),
    Some("w"),
    Some("x"),
    Some("y"),
    Some("z"),
    Some("braceleft"),
    Some("bar"),
    Some("braceright"),
    Some("asciitilde"),
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    Some("exclamdown"),
    Some("cent"),
    Some("sterling"),
    Some("fraction"),
    Some("yen"),
    Some("florin"),
    Some("section"),
    Some("currency"),
    Some("quotesingle"),
    Some("quotedblleft"),
    Some("guillemotleft"),
    Some("guilsinglleft"),
    Some("guilsinglright"),
    Some("fi"),
    Some("fl"),
    None,
    Some("endash"),
    Some("dagger"),
    Some("daggerdbl"),
    Some("periodcentered"),
    None,
    Some("paragraph"),
    Some("bullet"),
    Some("quotesinglbase"),
    Some("quotedblbase"),
    Some("quotedblright"),
    Some("guillemotright"),
    Some("ellipsis"),
    Some("perthousand"),
    None,
    Some("questiondown"),
    None,
    Some("grave"),
    Some("acute"),
    Some("circumflex"),
    Some("tilde"),
    Some("macron"),
    Some("breve"),
    Some("dotaccent"),
    Some("dieresis"),
    None,
    Some("ring"),
    Some("cedilla"),
    None,
    Some("hungarumlaut"),
    Some("ogonek"),
    Some("caron"),
    Some("emdash"),
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    None,
    Some("AE"),
    None,
    Some("ordfeminine"),
    None,
    None,
    None,
    None,
    Some("Lslash"),
    Some("Oslash"),
    Some("OE"),
    Some("ordmasculine"),
    None,
    None,
    None,
    None,
    None,
    Some("ae"),
    None,
    None,
    None,
    Some("dotlessi"),
    None,
    None,
    Some("lslash"),
    Some("oslash"),
    Some("oe"),
    Some("germandbls"),
    None,
    None,
    None,
    None,
];

/// Advance widths in 1/1000 em keyed by glyph name, one table per core font.
pub(crate) static CORE_FONT_WIDTHS: &[(&str, &[(&str, u16)])] = &[
    (
        "Courier",
        &[
            ("A", 600),
            ("AE", 600),
            ("Aacute", 600),
            ("Acircumflex", 600),
            ("Adieresis", 600),
            ("Agrave", 600),
            ("Aring", 600),
            ("Atilde", 600),
            ("B", 600),
            ("C", 600),
            ("Ccedilla", 600),
            ("D", 600),
            ("E", 600),
            ("Eacute", 600),
            ("Ecircumflex", 600),
            ("Edieresis", 600),
            ("Egrave", 600),
            ("Eth", 600),
            ("Euro", 600),
            ("F", 600),
            ("G", 600),
            ("H", 600),
            ("I", 600),
            ("Iacute", 600),
            ("Icircumflex", 600),
            ("Idieresis", 600),
            ("Igrave", 600),
            ("J", 600),
            ("K", 600),
            ("L", 600),
            ("Lslash", 600),
            ("M", 600),
            ("N", 600),
            ("Ntilde", 600),
            ("O", 600),
            ("OE", 600),
            ("Oacute", 600),
            ("Ocircumflex", 600),
            ("Odieresis", 600),
            ("Ograve", 600),
            ("Oslash", 600),
            ("Otilde", 600),
            ("P", 600),
            ("Q", 600),
            ("R", 600),
            ("S", 600),
            ("Scaron", 600),
            ("T", 600),
            ("Thorn", 600),
            ("U", 600),
            ("Uacute", 600),
            ("Ucircumflex", 600),
            ("Udieresis", 600),
            ("Ugrave", 600),
            ("V", 600),
            ("W", 600),
            ("X", 600),
            ("Y", 600),
            ("Yacute", 600),
            ("Ydieresis", 600),
            ("Z", 600),
            ("Zcaron", 600),
            ("a", 600),
            ("aacute", 600),
            ("acircumflex", 600),
            ("acute", 600),
            ("adieresis", 600),
            ("ae", 600),
            ("agrave", 600),
            ("ampersand", 600),
            ("aring", 600),
            ("asciicircum", 600),
            ("asciitilde", 600),
            ("asterisk", 600),
            ("at", 600),
            ("atilde", 600),
            ("b", 600),
            ("backslash", 600),
            ("bar", 600),
            ("braceleft", 600),
            ("braceright", 600),
            ("bracketleft", 600),
            ("bracketright", 600),
            ("breve", 600),
            ("brokenbar", 600),
            ("bullet", 600),
            ("c", 600),
            ("caron", 600),
            ("ccedilla", 600),
            ("cedilla", 600),
            ("cent", 600),
            ("circumflex", 600),
            ("colon", 600),
            ("comma", 600),
            ("copyright", 600),
            ("currency", 600),
            ("d", 600),
            ("dagger", 600),
            ("daggerdbl", 600),
            ("degree", 600),
            ("dieresis", 600),
            ("divide", 600),
            ("dollar", 600),
            ("dotaccent", 600),
            ("dotlessi", 600),
            ("e", 600),
            ("eacute", 600),
            ("ecircumflex", 600),
            ("edieresis", 600),
            ("egrave", 600),
            ("eight", 600),
            ("ellipsis", 600),
            ("emdash", 600),
            ("endash", 600),
            ("equal", 600),
            ("eth", 600),
            ("exclam", 600),
            ("exclamdown", 600),
            ("f", 600),
            ("fi", 600),
            ("five", 600),
            ("fl", 600),
            ("florin", 600),
            ("four", 600),
            ("fraction", 600),
            ("g", 600),
            ("germandbls", 600),
            ("grave", 600),
            ("greater", 600),
            ("guillemotleft", 600),
            ("guillemotright", 600),
            ("guilsinglleft", 600),
            ("guilsinglright", 600),
            ("h", 600),
            ("hungarumlaut", 600),
            ("hyphen", 600),
            ("i", 600),
            ("iacute", 600),
            ("icircumflex", 600),
            ("idieresis", 600),
            ("igrave", 600),
            ("j", 600),
            ("k", 600),
            ("l", 600),
            ("less", 600),
            ("logicalnot", 600),
            ("lslash", 600),
            ("m", 600),
            ("macron", 600),
            ("minus", 600),
            ("mu", 600),
            ("multiply", 600),
            ("n", 600),
            ("nine", 600),
            ("ntilde", 600),
            ("numbersign", 600),
            ("o", 600),
            ("oacute", 600),
            ("ocircumflex", 600),
            ("odieresis", 600),
            ("oe", 600),
            ("ogonek", 600),
            ("ograve", 600),
            ("one", 600),
            ("onehalf", 600),
            ("onequarter", 600),
            ("onesuperior", 600),
            ("ordfeminine", 600),
            ("ordmasculine", 600),
            ("oslash", 600),
            ("otilde", 600),
            ("p", 600),
            ("paragraph", 600),
            ("parenleft", 600),
            ("parenright", 600),
            ("percent", 600),
            ("period", 600),
            ("periodcentered", 600),
            ("perthousand", 600),
            ("plus", 600),
            ("plusminus", 600),
            ("q", 600),
            ("question", 600),
            ("questiondown", 600),
            ("quotedbl", 600),
            ("quotedblbase", 600),
            ("quotedblleft", 600),
            ("quotedblright", 600),
            ("quoteleft", 600),
            ("quoteright", 600),
            ("quotesinglbase", 600),
            ("quotesingle", 600),
            ("r", 600),
            ("registered", 600),
            ("ring", 600),
            ("s", 600),
            ("scaron", 600),
            ("section", 600),
            ("semicolon", 600),
            ("seven", 600),
            ("six", 600),
            ("slash", 600),
            ("space", 600),
            ("sterling", 600),
            ("t", 600),
            ("thorn", 600),
            ("three", 600),
            ("threequarters", 600),
            ("threesuperior", 600),
            ("tilde", 600),
            ("trademark", 600),
            ("two", 600),
            ("twosuperior", 600),
            ("u", 600),
            ("uacute", 600),
            ("ucircumflex", 600),
            ("udieresis", 600),
            ("ugrave", 600),
            ("underscore", 600),
            ("v", 600),
            ("w", 600),
            ("x", 600),
            ("y", 600),
            ("yacute", 600),
            ("ydieresis", 600),
            ("yen", 600),
            ("z", 600),
            ("zcaron", 600),
            ("zero", 600),
        ],
    ),
    (
        "Courier-Bold",
        &[
            ("A", 600),
            ("AE", 600),
            ("Aacute", 600),
            ("Acircumflex", 600),
            ("Adieresis", 600),
            ("Agrave", 600),
            ("Aring", 600),
            ("Atilde", 600),
            ("B", 600),
            ("C", 600),
            ("Ccedilla", 600),
            ("D", 600),
            ("E", 600),
            ("Eacute", 600),
            ("Ecircumflex", 600),
            ("Edieresis", 600),
            ("Egrave", 600),
            ("Eth", 600),
            ("Euro", 600),
            ("F", 600),
            ("G", 600),
            ("H", 600),
            ("I", 600),
            ("Iacute", 600),
            ("Icircumflex", 600),
            ("Idieresis", 600),
            ("Igrave", 600),
            ("J", 600),
            ("K", 600),
            ("L", 600),
            ("Lslash", 600),
            ("M", 600),
            ("N", 600),
            ("Ntilde", 600),
            ("O", 600),
            ("OE", 600),
            ("Oacute", 600),
            ("Ocircumflex", 600),
            ("Odieresis", 600),
            ("Ograve", 600),
            ("Oslash", 600),
            ("Otilde", 600),
            ("P", 600),
            ("Q", 600),
            ("R", 600),
            ("S", 600),
            ("Scaron", 600),
            ("T", 600),
            ("Thorn", 600),
            ("U", 600),
            ("Uacute", 600),
            ("Ucircumflex", 600),
            ("Udieresis", 600),
            ("Ugrave", 600),
            ("V", 600),
            ("W", 600),
            ("X", 600),
            ("Y", 600),
            ("Yacute", 600),
            ("Ydieresis", 600),
            ("Z", 600),
            ("Zcaron", 600),
            ("a", 600),
            ("aacute", 600),
            ("acircumflex", 600),
            ("acute", 600),
            ("adieresis", 600),
            ("ae", 600),
            ("agrave", 600),
            ("ampersand", 600),
            ("aring", 600),
            ("asciicircum", 600),
            ("asciitilde", 600),
            ("asterisk", 600),
            ("at", 600),
            ("atilde", 600),
            ("b", 600),
            ("backslash", 600),
            ("bar", 600),
            ("braceleft", 600),
            ("braceright", 600),
            ("bracketleft", 600),
            ("bracketright", 600),
            ("breve", 600),
            ("brokenbar", 600),
            ("bullet", 600),
            ("c", 600),
            ("caron", 600),
            ("ccedilla", 600),
            ("cedilla", 600),
            ("cent", 600),
            ("circumflex", 600),
            ("colon", 600),
            ("comma", 600),
            ("copyright", 600),
            ("currency", 600),
            ("d", 600),
            ("dagger", 600),
            ("daggerdbl", 600),
            ("degree", 600),
            ("dieresis", 600),
            ("divide", 600),
            ("dollar", 600),
            ("dotaccent", 600),
            ("dotlessi", 600),
            ("e", 600),
            ("eacute", 600),
            ("ecircumflex", 600),
            ("edieresis", 600),
            ("egrave", 600),
            ("eight", 600),
            ("ellipsis", 600),
            ("emdash", 600),
            ("endash", 600),
            ("equal", 600),
            ("eth", 600),
            ("exclam", 600),
            ("exclamdown", 600),
            ("f", 600),
            ("fi", 600),
            ("five", 600),
            ("fl", 600),
            ("florin", 600),
            ("four", 600),
            ("fraction", 600),
            ("g", 600),
            ("germandbls", 600),
            ("grave", 600),
            ("greater", 600),
            ("guillemotleft", 600),
            ("guillemotright", 600),
            ("guilsinglleft", 600),
            ("guilsinglright", 600),
            ("h", 600),
            ("hungarumlaut", 600),
            ("hyphen", 600),
            ("i", 600),
            ("iacute", 600),
            ("icircumflex", 600),
            ("idieresis", 600),
            ("igrave", 600),
            ("j", 600),
            ("k", 600),
            ("l", 600),
            ("less", 600),
            ("logicalnot", 600),
            ("lslash", 600),
            ("m", 600),
            ("macron", 600),
            ("minus", 600),
            ("mu", 600),
            ("multiply", 600),
            ("n", 600),
            ("nine", 600),
            ("ntilde", 600),
            ("numbersign", 600),
            ("o", 600),
            ("oacute", 600),
            ("ocircumflex", 600),
            ("odieresis", 600),
            ("oe", 600),
            ("ogonek", 600),
            ("ograve", 600),
            ("one", 600),
            ("onehalf", 600),
            ("onequarter", 600),
            ("onesuperior", 600),
            ("ordfeminine", 600),
            ("ordmasculine", 600),
            ("oslash", 600),
            ("otilde", 600),
            ("p", 600),
            ("paragraph", 600),
            ("parenleft", 600),
            ("parenright", 600),
            ("percent", 600),
            ("period", 600),
            ("periodcentered", 600),
            ("perthousand", 600),
            ("plus", 600),
            ("plusminus", 600),
            ("q", 600),
            ("question", 600),
            ("questiondown", 600),
            ("quotedbl", 600),
            ("quotedblbase", 600),
            ("quotedblleft", 600),
            ("quotedblright", 600),
            ("quoteleft", 600),
            ("quoteright", 600),
            ("quotesinglbase", 600),
            ("quotesingle", 600),
            ("r", 600),
            ("registered", 600),
            ("ring", 600),
            ("s", 600),
            ("scaron", 600),
            ("section", 600),
            ("semicolon", 600),
            ("seven", 600),
            ("six", 600),
            ("slash", 600),
            ("space", 600),
            ("sterling", 600),
            ("t", 600),
            ("thorn", 600),
            ("three", 600),
            ("threequarters", 600),
            ("threesuperior", 600),
            ("tilde", 600),
            ("trademark", 600),
            ("two", 600),
            ("twosuperior", 600),
            ("u", 600),
            ("uacute", 600),
            ("ucircumflex", 600),
            ("udieresis", 600),
            ("ugrave", 600),
            ("underscore", 600),
            ("v", 600),
            ("w", 600),
            ("x", 600),
            ("y", 600),
            ("yacute", 600),
            ("ydieresis", 600),
            ("yen", 600),
            ("z", 600),
            ("zcaron", 600),
            ("zero", 600),
        ],
    ),
    (
        "Courier-BoldOblique",
        &[
            ("A", 600),
            ("AE", 600),
            ("Aacute", 600),
            ("Acircumflex", 600),
            ("Adieresis", 600),
            ("Agrave", 600),
            ("Aring", 600),
            ("Atilde", 600),
            ("B", 600),
            ("C", 600),
            ("Ccedilla", 600),
            ("D", 600),
            ("E", 600),
            ("Eacute", 600),
            ("Ecircumflex", 600),
            ("Edieresis", 600),
            ("Egrave", 600),
            ("Eth", 600),
            ("Euro", 600),
            ("F", 600),
            ("G", 600),
            ("H", 600),
            ("I", 600),
            ("Iacute", 600),
            ("Icircumflex", 600),
            ("Idieresis", 600),
            ("Igrave", 600),
            ("J", 600),
            ("K", 600),
            ("L", 600),
            ("Lslash", 600),
            ("M", 600),
            ("N", 600),
            ("Ntilde", 600),
            ("O", 600),
            ("OE", 600),
            ("Oacute", 600),
            ("Ocircumflex", 600),
            ("Odieresis", 600),
            ("Ograve", 600),
            ("Oslash", 600),
            ("Otilde", 600),
            ("P", 600),
            ("Q", 600),
            ("R", 600),
            ("S", 600),
            ("Scaron", 600),
            ("T", 600),
            ("Thorn", 600),
            ("U", 600),
            ("Uacute", 600),
            ("Ucircumflex", 600),
            ("Udieresis", 600),
            ("Ugrave", 600),
            ("V", 600),
            ("W", 600),
            ("X", 600),
            ("Y", 600),
            ("Yacute", 600),
            ("Ydieresis", 600),
            ("Z", 600),
            ("Zcaron", 600),
            ("a", 600),
            ("aacute", 600),
            ("acircumflex", 600),
            ("acute", 600),
            ("adieresis", 600),
            ("ae", 600),
            ("agrave", 600),
            ("ampersand", 600),
            ("aring", 600),
            ("asciicircum", 600),
            ("asciitilde", 600),
            ("asterisk", 600),
            ("at", 600),
            ("atilde", 600),
            ("b", 600),
            ("backslash", 600),
            ("bar", 600),
            ("braceleft", 600),
            ("braceright", 600),
            ("bracketleft", 600),
            ("bracketright", 600),
            ("breve", 600),
            ("brokenbar", 600),
            ("bullet", 600),
            ("c", 600),
            ("caron", 600),
            ("ccedilla", 600),
            ("cedilla", 600),
            ("cent", 600),
            ("circumflex", 600),
            ("colon", 600),
            ("comma", 600),
            ("copyright", 600),
            ("currency", 600),
            ("d", 600),
            ("dagger", 600),
            ("daggerdbl", 600),
            ("degree", 600),
            ("dieresis", 600),
            ("divide", 600),
            ("dollar", 600),
            ("dotaccent", 600),
            ("dotlessi", 600),
            ("e", 600),
            ("eacute", 600),
            ("ecircumflex", 600),
            ("edieresis", 600),
            ("egrave", 600),
            ("eight", 600),
            ("ellipsis", 600),
            ("emdash", 600),
            ("endash", 600),
            ("equal", 600),
            ("eth", 600),
            ("exclam", 600),
            ("exclamdown", 600),
            ("f", 600),
            ("fi", 600),
            ("five", 600),
            ("fl", 600),
            ("florin", 600),
            ("four", 600),
            ("fraction", 600),
            ("g", 600),
            ("germandbls", 600),
            ("grave", 600),
            ("greater", 600),
            ("guillemotleft", 600),
            ("guillemotright", 600),
            ("guilsinglleft", 600),
            ("guilsinglright", 600),
            ("h", 600),
            ("hungarumlaut", 600),
            ("hyphen", 600),
            ("i", 600),
            ("iacute", 600),
            ("icircumflex", 600),
            ("idieresis", 600),
            ("igrave", 600),
            ("j", 600),
            ("k", 600),
            ("l", 600),
            ("less", 600),
            ("logicalnot", 600),
            ("lslash", 600),
            ("m", 600),
            ("macron", 600),
            ("minus", 600),
            ("mu", 600),
            ("multiply", 600),
            ("n", 600),
            ("nine", 600),
            ("ntilde", 600),
            ("numbersign", 600),
            ("o", 600),
            ("oacute", 600),
            ("ocircumflex", 600),
            ("odieresis", 600),
            ("oe", 600),
            ("ogonek", 600),
            ("ograve", 600),
            ("one", 600),
            ("onehalf", 600),
            ("onequarter", 600),
            ("onesuperior", 600),
            ("ordfeminine", 600),
            ("ordmasculine", 600),
            ("oslash", 600),
            ("otilde", 600),
            ("p", 600),
            ("paragraph", 600),
            ("parenleft", 600),
            ("parenright", 600),
            ("percent", 600),
            ("period", 600),
            ("periodcentered", 600),
            ("perthousand", 600),
            ("plus", 600),
            ("plusminus", 600),
            ("q", 600),
            ("question", 600),
            ("questiondown", 600),
            ("quotedbl", 600),
            ("quotedblbase", 600),
            ("quotedblleft", 600),
            ("quotedblright", 600),
            ("quoteleft", 600),
            ("quoteright", 600),
            ("quotesinglbase", 600),
            ("quotesingle", 600),
            ("r", 600),
            ("registered", 600),
            ("ring", 600),
            ("s", 600),
            ("scaron", 600),
            ("section", 600),
            ("semicolon", 600),
            ("seven", 600),
            ("six", 600),
            ("slash", 600),
            ("space", 600),
            ("sterling", 600),
            ("t", 600),
            ("thorn", 600),
            ("three", 600),
            ("threequarters", 600),
            ("threesuperior", 600),
            ("tilde", 600),
            ("trademark", 600),
            ("two", 600),
            ("twosuperior", 600),
            ("u", 600),
            ("uacute", 600),
            ("ucircumflex", 600),
            ("udieresis", 600),
            ("ugrave", 600),
            ("underscore", 600),
            ("v", 600),
            ("w", 600),
            ("x", 600),
            ("y", 600),
            ("yacute", 600),
            ("ydieresis", 600),
            ("yen", 600),
            ("z", 600),
            ("zcaron", 600),
            ("zero", 600),
        ],
    ),
    (
        "Courier-Oblique",
        &[
            ("A", 600),
            ("AE", 600),
            ("Aacute", 600),
            ("Acircumflex", 600),
            ("Adieresis", 600),
            ("Agrave", 600),
            ("Aring", 600),
            ("Atilde", 600),
            ("B", 600),
            ("C", 600),
            ("Ccedilla", 600),
            ("D", 600),
            ("E", 600),
            ("Eacute", 600),
            ("Ecircumflex", 600),
            ("Edieresis", 600),
            ("Egrave", 600),
            ("Eth", 600),
            ("Euro", 600),
            ("F", 600),
            ("G", 600),
            ("H", 600),
            ("I", 600),
            ("Iacute", 600),
            ("Icircumflex", 600),
            ("Idieresis", 600),
            ("Igrave", 600),
            ("J", 600),
            ("K", 600),
            ("L", 600),
            ("Lslash", 600),
            ("M", 600),
            ("N", 600),
            ("Ntilde", 600),
            ("O", 600),
            ("OE", 600),
            ("Oacute", 600),
            ("Ocircumflex", 600),
            ("Odieresis", 600),
            ("Ograve", 600),
            ("Oslash", 600),
            ("Otilde", 600),
            ("P", 600),
            ("Q", 600),
            ("R", 600),
            ("S", 600),
            ("Scaron", 600),
            ("T", 600),
            ("Thorn", 600),
            ("U", 600),
            ("Uacute", 600),
            ("Ucircumflex", 600),
            ("Udieresis", 600),
            ("Ugrave", 600),
            ("V", 600),
            ("W", 600),
            ("X", 600),
            ("Y", 600),
            ("Yacute", 600),
            ("Ydieresis", 600),
            ("Z", 600),
            ("Zcaron", 600),
            ("a", 600),
            ("aacute", 600),
            ("acircumflex", 600),
            ("acute", 600),
            ("adieresis", 600),
            ("ae", 600),
            ("agrave", 600),
            ("ampersand", 600),
            ("aring", 600),
            ("asciicircum", 600),
            ("asciitilde", 600),
            ("asterisk", 600),
            ("at", 600),
            ("atilde", 600),
            ("b", 600),
            ("backslash", 600),
            ("bar", 600),
            ("braceleft", 600),
            ("braceright", 600),
            ("bracketleft", 600),
            ("bracketright", 600),
            ("breve", 600),
            ("brokenbar", 600),
            ("bullet", 600),
            ("c", 600),
            ("caron", 600),
            ("ccedilla", 600),
            ("cedilla", 600),
            ("cent", 600),
            ("circumflex", 600),
            ("colon", 600),
            ("comma", 600),
            ("copyright", 600),
            ("currency", 600),
            ("d", 600),
            ("dagger", 600),
            ("daggerdbl", 600),
            ("degree", 600),
            ("dieresis", 600),
            ("divide", 600),
            ("dollar", 600),
            ("dotaccent", 600),
            ("dotlessi", 600),
            ("e", 600),
            ("eacute", 600),
            ("ecircumflex", 600),
            ("edieresis", 600),
            ("egrave", 600),
            ("eight", 600),
            ("ellipsis", 600),
            ("emdash", 600),
            ("endash", 600),
            ("equal", 600),
            ("eth", 600),
            ("exclam", 600),
            ("exclamdown", 600),
            ("f", 600),
            ("fi", 600),
            ("five", 600),
            ("fl", 600),
            ("florin", 600),
            ("four", 600),
            ("fraction", 600),
            ("g", 600),
            ("germandbls", 600),
            ("grave", 600),
            ("greater", 600),
            ("guillemotleft", 600),
            ("guillemotright", 600),
            ("guilsinglleft", 600),
            ("guilsinglright", 600),
            ("h", 600),
            ("hungarumlaut", 600),
            ("hyphen", 600),
            ("i", 600),
            ("iacute", 600),
            ("icircumflex", 600),
            ("idieresis", 600),
            ("igrave", 600),
            ("j", 600),
            ("k", 600),
            ("l", 600),
            ("less", 600),
            ("logicalnot", 600),
            ("lslash", 600),
            ("m", 600),
            ("macron", 600),
            ("minus", 600),
            ("mu", 600),
            ("multiply", 600),
            ("n", 600),
            ("nine", 600),
            ("ntilde", 600),
            ("numbersign", 600),
            ("o", 600),
            ("oacute", 600),
            ("ocircumflex", 600),
            ("odieresis", 600),
            ("oe", 600),
            ("ogonek", 600),
            ("ograve", 600),
            ("one", 600),
            ("onehalf", 600),
            ("onequarter", 600),
            ("onesuperior", 600),
            ("ordfeminine", 600),
            ("ordmasculine", 600),
            ("oslash", 600),
            ("otilde", 600),
            ("p", 600),
            ("paragraph", 600),
            ("parenleft", 600),
            ("parenright", 600),
            ("percent", 600),
            ("period", 600),
            ("periodcentered", 600),
            ("perthousand", 600),
            ("plus", 600),
            ("plusminus", 600),
            ("q", 600),
            ("question", 600),
            ("questiondown", 600),
            ("quotedbl", 600),
            ("quotedblbase", 600),
            ("quotedblleft", 600),
            ("quotedblright", 600),
            ("quoteleft", 600),
            ("quoteright", 600),
            ("quotesinglbase", 600),
            ("quotesingle", 600),
            ("r", 600),
            ("registered", 600),
            ("ring", 600),
            ("s", 600),
            ("scaron", 600),
            ("section", 600),
            ("semicolon", 600),
            ("seven", 600),
            ("six", 600),
            ("slash", 600),
            ("space", 600),
            ("sterling", 600),
            ("t", 600),
            ("thorn", 600),
            ("three", 600),
            ("threequarters", 600),
            ("threesuperior", 600),
            ("tilde", 600),
            ("trademark", 600),
            ("two", 600),
            ("twosuperior", 600),
            ("u", 600),
            ("uacute", 600),
            ("ucircumflex", 600),
            ("udieresis", 600),
            ("ugrave", 600),
            ("underscore", 600),
            ("v", 600),
            ("w", 600),
            ("x", 600),
            ("y", 600),
            ("yacute", 600),
            ("ydieresis", 600),
            ("yen", 600),
            ("z", 600),
            ("zcaron", 600),
            ("zero", 600),
        ],
    ),
    (
        "Helvetica",
        &[
            ("A", 667),
            ("AE", 1000),
            ("Aacute", 667),
            ("Acircumflex", 667),
            ("Adieresis", 667),
            ("Agrave", 667),
            ("Aring", 667),
            ("Atilde", 667),
            ("B", 667),
            ("C", 722),
            ("Ccedilla", 722),
            ("D", 722),
            ("E", 667),
            ("Eacute", 667),
            ("Ecircumflex", 667),
            ("Edieresis", 667),
            ("Egrave", 667),
            ("Eth", 722),
            ("Euro", 556),
            ("F", 611),
            ("G", 778),
            ("H", 722),
            ("I", 278),
            ("Iacute", 278),
            ("Icircumflex", 278),
            ("Idieresis", 278),
            ("Igrave", 278),
            ("J", 500),
            ("K", 667),
            ("L", 556),
            ("Lslash", 556),
            ("M", 833),
            ("N", 722),
            ("Ntilde", 722),
            ("O", 778),
            ("OE", 1000),
            ("Oacute", 778),
            ("Ocircumflex", 778),
            ("Odieresis", 778),
            ("Ograve", 778),
            ("Oslash", 778),
            ("Otilde", 778),
            ("P", 667),
            ("Q", 778),
            ("R", 722),
            ("S", 667),
            ("Scaron", 667),
            ("T", 611),
            ("Thorn", 667),
            ("U", 722),
            ("Uacute", 722),
            ("Ucircumflex", 722),
            ("Udieresis", 722),
            ("Ugrave", 722),
            ("V", 667),
            ("W", 944),
            ("X", 667),
            ("Y", 667),
            ("Yacute", 667),
            ("Ydieresis", 667),
            ("Z", 611),
            ("Zcaron", 611),
            ("a", 556),
            ("aacute", 556),
            ("acircumflex", 556),
            ("acute", 333),
            ("adieresis", 556),
            ("ae", 889),
            ("agrave", 556),
            ("ampersand", 667),
            ("aring", 556),
            ("asciicircum", 469),
            ("asciitilde", 584),
            ("asterisk", 389),
            ("at", 1015),
            ("atilde", 556),
            ("b", 556),
            ("backslash", 278),
            ("bar", 260),
            ("braceleft", 334),
            ("braceright", 334),
            ("bracketleft", 278),
            ("bracketright", 278),
            ("breve", 333),
            ("brokenbar", 260),
            ("bullet", 350),
            ("c", 500),
            ("caron", 333),
            ("ccedilla", 500),
            ("cedilla", 333),
            ("cent", 556),
            ("circumflex", 333),
            ("colon", 278),
            ("comma", 278),
            ("copyright", 737),
            ("currency", 556),
            ("d", 556),
            ("dagger", 556),
            ("daggerdbl", 556),
            ("degree", 400),
            ("dieresis", 333),
            ("divide", 584),
            ("dollar", 556),
            ("dotaccent", 333),
            ("dotlessi", 278),
            ("e", 556),
            ("eacute", 556),
            ("ecircumflex", 556),
            ("edieresis", 556),
            ("egrave", 556),
            ("eight", 556),
            ("ellipsis", 1000),
            ("emdash", 1000),
            ("endash", 556),
            ("equal", 584),
            ("eth", 556),
            ("exclam", 278),
            ("exclamdown", 333),
            ("f", 278),
            ("fi", 500),
            ("five", 556),
            ("fl", 500),
            ("florin", 556),
            ("four", 556),
            ("fraction", 167),
            ("g", 556),
            ("germandbls", 611),
            ("grave", 333),
            ("greater", 584),
            ("guillemotleft", 556),
            ("guillemotright", 556),
            ("guilsinglleft", 333),
            ("guilsinglright", 333),
            ("h", 556),
            ("hungarumlaut", 333),
            ("hyphen", 333),
            ("i", 222),
            ("iacute", 278),
            ("icircumflex", 278),
            ("idieresis", 278),
            ("igrave", 278),
            ("j", 222),
            ("k", 500),
            ("l", 222),
            ("less", 584),
            ("logicalnot", 584),
            ("lslash", 222),
            ("m", 833),
            ("macron", 333),
            ("minus", 584),
            ("mu", 556),
            ("multiply", 584),
            ("n", 556),
            ("nine", 556),
            ("ntilde", 556),
            ("numbersign", 556),
            ("o", 556),
            ("oacute", 556),
            ("ocircumflex", 556),
            ("odieresis", 556),
            ("oe", 944),
            ("ogonek", 333),
            ("ograve", 556),
            ("one", 556),
            ("onehalf", 834),
            ("onequarter", 834),
            ("onesuperior", 333),
            ("ordfeminine", 370),
            ("ordmasculine", 365),
            ("oslash", 611),
            ("otilde", 556),
            ("p", 556),
            ("paragraph", 537),
            ("parenleft", 333),
            ("parenright", 333),
            ("percent", 889),
            ("period", 278),
            ("periodcentered", 278),
            ("perthousand", 1000),
            ("plus", 584),
            ("plusminus", 584),
            ("q", 556),
            ("question", 556),
            ("questiondown", 611),
            ("quotedbl", 355),
            ("quotedblbase", 333),
            ("quotedblleft", 333),
            ("quotedblright", 333),
            ("quoteleft", 222),
            ("quoteright", 222),
            ("quotesinglbase", 222),
            ("quotesingle", 191),
            ("r", 333),
            ("registered", 737),
            ("ring", 333),
            ("s", 500),
            ("scaron", 500),
            ("section", 556),
            ("semicolon", 278),
            ("seven", 556),
            ("six", 556),
            ("slash", 278),
            ("space", 278),
            ("sterling", 556),
            ("t", 278),
            ("thorn", 556),
            ("three", 556),
            ("threequarters", 834),
            ("threesuperior", 333),
            ("tilde", 333),
            ("trademark", 1000),
            ("two", 556),
            ("twosuperior", 333),
            ("u", 556),
            ("uacute", 556),
            ("ucircumflex", 556),
            ("udieresis", 556),
            ("ugrave", 556),
            ("underscore", 556),
            ("v", 500),
            ("w", 722),
            ("x", 500),
            ("y", 500),
            ("yacute", 500),
            ("ydieresis", 500),
            ("yen", 556),
            ("z", 500),
            ("zcaron", 500),
            ("zero", 556),
        ],
    ),
    (
        "Helvetica-Bold",
        &[
            ("A", 722),
            ("AE", 1000),
            ("Aacute", 722),
            ("Acircumflex", 722),
            ("Adieresis", 722),
            ("Agrave", 722),
            ("Aring", 722),
            ("Atilde", 722),
            ("B", 722),
            ("C", 722),
            ("Ccedilla", 722),
            ("D", 722),
            ("E", 667),
            ("Eacute", 667),
            ("Ecircumflex", 667),
            ("Edieresis", 667),
            ("Egrave", 667),
            ("Eth", 722),
            ("Euro", 556),
            ("F", 611),
            ("G", 778),
            ("H", 722),
            ("I", 278),
            ("Iacute", 278),
            ("Icircumflex", 278),
            ("Idieresis", 278),
            ("Igrave", 278),
            ("J", 556),
            ("K", 722),
            ("L", 611),
            ("Lslash", 611),
            ("M", 833),
            ("N", 722),
            ("Ntilde", 722),
            ("O", 778),
            ("OE", 1000),
            ("Oacute", 778),
            ("Ocircumflex", 778),
            ("Odieresis", 778),
            ("Ograve", 778),
            ("Oslash", 778),
            ("Otilde", 778),
            ("P", 667),
            ("Q", 778),
            ("R", 722),
            ("S", 667),
            ("Scaron", 667),
            ("T", 611),
            ("Thorn", 667),
            ("U", 722),
            ("Uacute", 722),
            ("Ucircumflex", 722),
            ("Udieresis", 722),
            ("Ugrave", 722),
            ("V", 667),
            ("W", 944),
            ("X", 667),
            ("Y", 667),
            ("Yacute", 667),
            ("Ydieresis", 667),
            ("Z", 611),
            ("Zcaron", 611),
            ("a", 556),
            ("aacute", 556),
            ("acircumflex", 556),
            ("acute", 333),
            ("adieresis", 556),
            ("ae", 889),
            ("agrave", 556),
            ("ampersand", 722),
            ("aring", 556),
            ("asciicircum", 584),
            ("asciitilde", 584),
            ("asterisk", 389),
            ("at", 975),
            ("atilde", 556),
            ("b", 611),
            ("backslash", 278),
            ("bar", 280),
            ("braceleft", 389),
            ("braceright", 389),
            ("bracketleft", 333),
            ("bracketright", 333),
            ("breve", 333),
            ("brokenbar", 280),
            ("bullet", 350),
            ("c", 556),
            ("caron", 333),
            ("ccedilla", 556),
            ("cedilla", 333),
            ("cent", 556),
            ("circumflex", 333),
            ("colon", 333),
            ("comma", 278),
            ("copyright", 737),
            ("currency", 556),
            ("d", 611),
            ("dagger", 556),
            ("daggerdbl", 556),
            ("degree", 400),
            ("dieresis", 333),
            ("divide", 584),
            ("dollar", 556),
            ("dotaccent", 333),
            ("dotlessi", 278),
            ("e", 556),
            ("eacute", 556),
            ("ecircumflex", 556),
            ("edieresis", 556),
            ("egrave", 556),
            ("eight", 556),
            ("ellipsis", 1000),
            ("emdash", 1000),
            ("endash", 556),
            ("equal", 584),
            ("eth", 611),
            ("exclam", 333),
            ("exclamdown", 333),
            ("f", 333),
            ("fi", 611),
            ("five", 556),
            ("fl", 611),
            ("florin", 556),
            ("four", 556),
            ("fraction", 167),
            ("g", 611),
            ("germandbls", 611),
            ("grave", 333),
            ("greater", 584),
            ("guillemotleft", 556),
            ("guillemotright", 556),
            ("guilsinglleft", 333),
            ("guilsinglright", 333),
            ("h", 611),
            ("hungarumlaut", 333),
            ("hyphen", 333),
            ("i", 278),
            ("iacute", 278),
            ("icircumflex", 278),
            ("idieresis", 278),
            ("igrave", 278),
            ("j", 278),
            ("k", 556),
            ("l", 278),
            ("less", 584),
            ("logicalnot", 584),
            ("lslash", 278),
            ("m", 889),
            ("macron", 333),
            ("minus", 584),
            ("mu", 611),
            ("multiply", 584),
            ("n", 611),
            ("nine", 556),
            ("ntilde", 611),
            ("numbersign", 556),
            ("o", 611),
            ("oacute", 611),
            ("ocircumflex", 611),
            ("odieresis", 611),
            ("oe", 944),
            ("ogonek", 333),
            ("ograve", 611),
            ("one", 556),
            ("onehalf", 834),
            ("onequarter", 834),
            ("onesuperior", 333),
            ("ordfeminine", 370),
            ("ordmasculine", 365),
            ("oslash", 611),
            ("otilde", 611),
            ("p", 611),
            ("paragraph", 556),
            ("parenleft", 333),
            ("parenright", 333),
            ("percent", 889),
            ("period", 278),
            ("periodcentered", 278),
            ("perthousand", 1000),
            ("plus", 584),
            ("plusminus", 584),
            ("q", 611),
            ("question", 611),
            ("questiondown", 611),
            ("quotedbl", 474),
            ("quotedblbase", 500),
            ("quotedblleft", 500),
            ("quotedblright", 500),
            ("quoteleft", 278),
            ("quoteright", 278),
            ("quotesinglbase", 278),
            ("quotesingle", 238),
            ("r", 389),
            ("registered", 737),
            ("ring", 333),
            ("s", 556),
            ("scaron", 556),
            ("section", 556),
            ("semicolon", 333),
            ("seven", 556),
            ("six", 556),
            ("slash", 278),
            ("space", 278),
            ("sterling", 556),
            ("t", 333),
            ("thorn", 611),
            ("three", 556),
            ("threequarters", 834),
            ("threesuperior", 333),
            ("tilde", 333),
            ("trademark", 1000),
            ("two", 556),
            ("twosuperior", 333),
            ("u", 611),
            ("uacute", 611),
            ("ucircumflex", 611),
            ("udieresis", 611),
            ("ugrave", 611),
            ("underscore", 556),
            ("v", 556),
            ("w", 778),
            ("x", 556),
            ("y", 556),
            ("yacute", 556),
            ("ydieresis", 556),
            ("yen", 556),
            ("z", 500),
            ("zcaron", 500),
            ("zero", 556),
        ],
    ),
    (
        "Helvetica-BoldOblique",
        &[
            ("A", 722),
            ("AE", 1000),
            ("Aacute", 722),
            ("Acircumflex", 722),
            ("Adieresis", 722),
            ("Agrave", 722),
            ("Aring", 722),
            ("Atilde", 722),
            ("B", 722),
            ("C", 722),
            ("Ccedilla", 722),
            ("D", 722),
            ("E", 667),
            ("Eacute", 667),
            ("Ecircumflex", 667),
            ("Edieresis", 667),
            ("Egrave", 667),
            ("Eth", 722),
            ("Euro", 556),
            ("F", 611),
            ("G", 778),
            ("H", 722),
            ("I", 278),
            ("Iacute", 278),
            ("Icircumflex", 278),
            ("Idieresis", 278),
            ("Igrave", 278),
            ("J", 556),
            ("K", 722),
            ("L", 611),
            ("Lslash", 611),
            ("M", 833),
            ("N", 722),
            ("Ntilde", 722),
            ("O", 778),
            ("OE", 1000),
            ("Oacute", 778),
            ("Ocircumflex", 778),
            ("Odieresis", 778),
            ("Ograve", 778),
            ("Oslash", 778),
            ("Otilde", 778),
            ("P", 667),
            ("Q", 778),
            ("R", 722),
            ("S", 667),
            ("Scaron", 667),
            ("T", 611),
            ("Thorn", 667),
            ("U", 722),
            ("Uacute", 722),
            ("Ucircumflex", 722),
            ("Udieresis", 722),
            ("Ugrave", 722),
            ("V", 667),
            ("W", 944),
            ("X", 667),
            ("Y", 667),
            ("Yacute", 667),
            ("Ydieresis", 667),
            ("Z", 611),
            ("Zcaron", 611),
            ("a", 556),
            ("aacute", 556),
            ("acircumflex", 556),
            ("acute", 333),
            ("adieresis", 556),
            ("ae", 889),
            ("agrave", 556),
            ("ampersand", 722),
            ("aring", 556),
            ("asciicircum", 584),
            ("asciitilde", 584),
            ("asterisk", 389),
            ("at", 975),
            ("atilde", 556),
            ("b", 611),
            ("backslash", 278),
            ("bar", 280),
            ("braceleft", 389),
            ("braceright", 389),
            ("bracketleft", 333),
            ("bracketright", 333),
            ("breve", 333),
            ("brokenbar", 280),
            ("bullet", 350),
            ("c", 556),
            ("caron", 333),
            ("ccedilla", 556),
            ("cedilla", 333),
            ("cent", 556),
            ("circumflex", 333),
            ("colon", 333),
            ("comma", 278),
            ("copyright", 737),
            ("currency", 556),
            ("d", 611),
            ("dagger", 556),
            ("daggerdbl", 556),
            ("degree", 400),
            ("dieresis", 333),
            ("divide", 584),
            ("dollar", 556),
            ("dotaccent", 333),
            ("dotlessi", 278),
            ("e", 556),
            ("eacute", 556),
            ("ecircumflex", 556),
            ("edieresis", 556),
            ("egrave", 556),
            ("eight", 556),
            ("ellipsis", 1000),
            ("emdash", 1000),
            ("endash", 556),
            ("equal", 584),
            ("eth", 611),
            ("exclam", 333),
            ("exclamdown", 333),
            ("f", 333),
            ("fi", 611),
            ("five", 556),
            ("fl", 611),
            ("florin", 556),
            ("four", 556),
            ("fraction", 167),
            ("g", 611),
            ("germandbls", 611),
            ("grave", 333),
            ("greater", 584),
            ("guillemotleft", 556),
            ("guillemotright", 556),
            ("guilsinglleft", 333),
            ("guilsinglright", 333),
            ("h", 611),
            ("hungarumlaut", 333),
            ("hyphen", 333),
            ("i", 278),
            ("iacute", 278),
            ("icircumflex", 278),
            ("idieresis", 278),
            ("igrave", 278),
            ("j", 278),
            ("k", 556),
            ("l", 278),
            ("less", 584),
            ("logicalnot", 584),
            ("lslash", 278),
            ("m", 889),
            ("macron", 333),
            ("minus", 584),
            ("mu", 611),
            ("multiply", 584),
            ("n", 611),
            ("nine", 556),
            ("ntilde", 611),
            ("numbersign", 556),
            ("o", 611),
            ("oacute", 611),
            ("ocircumflex", 611),
            ("odieresis", 611),
            ("oe", 944),
            ("ogonek", 333),
            ("ograve", 611),
            ("one", 556),
            ("onehalf", 834),
            ("onequarter", 834),
            ("onesuperior", 333),
            ("ordfeminine", 370),
            ("ordmasculine", 365),
            ("oslash", 611),
            ("otilde", 611),
            ("p", 611),
            ("paragraph", 556),
            ("parenleft", 333),
            ("parenright", 333),
            ("percent", 889),
            ("period", 278),
            ("periodcentered", 278),
            ("perthousand", 1000),
            ("plus", 584),
            ("plusminus", 584),
            ("q", 611),
            ("question", 611),
            ("questiondown", 611),
            ("quotedbl", 474),
            ("quotedblbase", 500),
            ("quotedblleft", 500),
            ("quotedblright", 500),
            ("quoteleft", 278),
            ("quoteright", 278),
            ("quotesinglbase", 278),
            ("quotesingle", 238),
            ("r", 389),
            ("registered", 737),
            ("ring", 333),
            ("s", 556),
            ("scaron", 556),
            ("section", 556),
            ("semicolon", 333),
            ("seven", 556),
            ("six", 556),
            ("slash", 278),
            ("space", 278),
            ("sterling", 556),
            ("t", 333),
            ("thorn", 611),
            ("three", 556),
            ("threequarters", 834),
            ("threesuperior", 333),
            ("tilde", 333),
            ("trademark", 1000),
            ("two", 556),
            ("twosuperior", 333),
            ("u", 611),
            ("uacute", 611),
            ("ucircumflex", 611),
            ("udieresis", 611),
            ("ugrave", 611),
            ("underscore", 556),
            ("v", 556),
            ("w", 778),
            ("x", 556),
            ("y", 556),
            ("yacute", 556),
            ("ydieresis", 556),
            ("yen", 556),
            ("z", 500),
            ("zcaron", 500),
            ("zero", 556),
        ],
    ),
    (
        "Helvetica-Oblique",
        &[
            ("A", 667),
            ("AE", 1000),
            ("Aacute", 667),
            ("Acircumflex", 667),
            ("Adieresis", 667),
            ("Agrave", 667),
            ("Aring", 667),
            ("Atilde", 667),
            ("B", 667),
            ("C", 722),
            ("Ccedilla", 722),
            ("D", 722),
            ("E", 667),
            ("Eacute", 667),
            ("Ecircumflex", 667),
            ("Edieresis", 667),
            ("Egrave", 667),
            ("Eth", 722),
            ("Euro", 556),
            ("F", 611),
            ("G", 778),
            ("H", 722),
            ("I", 278),
            ("Iacute", 278),
            ("Icircumflex", 278),
            ("Idieresis", 278),
            ("Igrave", 278),
            ("J", 500),
            ("K", 667),
            ("L", 556),
            ("Lslash", 556),
            ("M", 833),
            ("N", 722),
            ("Ntilde", 722),
            ("O", 778),
            ("OE", 1000),
            ("Oacute", 778),
            ("Ocircumflex", 778),
            ("Odieresis", 778),
            ("Ograve", 778),
            ("Oslash", 778),
            ("Otilde", 778),
            ("P", 667),
            ("Q", 778),
            ("R", 722),
            ("S", 667),
            ("Scaron", 667),
            ("T", 611),
            ("Thorn", 667),
            ("U", 722),
            ("Uacute", 722),
            ("Ucircumflex", 722),
            ("Udieresis", 722),
            ("Ugrave", 722),
            ("V", 667),
            ("W", 944),
            ("X", 667),
            ("Y", 667),
            ("Yacute", 667),
            ("Ydieresis", 667),
            ("Z", 611),
            ("Zcaron", 611),
            ("a", 556),
            ("aacute", 556),
            ("acircumflex", 556),
            ("acute", 333),
            ("adieresis", 556),
            ("ae", 889),
            ("agrave", 556),
            ("ampersand", 667),
            ("aring", 556),
            ("asciicircum", 469),
            ("asciitilde", 584),
            ("asterisk", 389),
            ("at", 1015),
            ("atilde", 556),
            ("b", 556),
            ("backslash", 278),
            ("bar", 260),
            ("braceleft", 334),
            ("braceright", 334),
            ("bracketleft", 278),
            ("bracketright", 278),
            ("breve", 333),
            ("brokenbar", 260),
            ("bullet", 350),
            ("c", 500),
            ("caron", 333),
            ("ccedilla", 500),
            ("cedilla", 333),
            ("cent", 556),
            ("circumflex", 333),
            ("colon", 278),
            ("comma", 278),
            ("copyright", 737),
            ("currency", 556),
            ("d", 556),
            ("dagger", 556),
            ("daggerdbl", 556),
            ("degree", 400),
            ("dieresis", 333),
            ("divide", 584),
            ("dollar", 556),
            ("dotaccent", 333),
            ("dotlessi", 278),
            ("e", 556),
            ("eacute", 556),
            ("ecircumflex", 556),
            ("edieresis", 556),
            ("egrave", 556),
            ("eight", 556),
            ("ellipsis", 1000),
            ("emdash", 1000),
            ("endash", 556),
            ("equal", 584),
            ("eth", 556),
            ("exclam", 278),
            ("exclamdown", 333),
            ("f", 278),
            ("fi", 500),
            ("five", 556),
            ("fl", 500),
            ("florin", 556),
            ("four", 556),
            ("fraction", 167),
            ("g", 556),
            ("germandbls", 611),
            ("grave", 333),
            ("greater", 584),
            ("guillemotleft", 556),
            ("guillemotright", 556),
            ("guilsinglleft", 333),
            ("guilsinglright", 333),
            ("h", 556),
            ("hungarumlaut", 333),
            ("hyphen", 333),
            ("i", 222),
            ("iacute", 278),
            ("icircumflex", 278),
            ("idieresis", 278),
            ("igrave", 278),
            ("j", 222),
            ("k", 500),
            ("l", 222),
            ("less", 584),
            ("logicalnot", 584),
            ("lslash", 222),
            ("m", 833),
            ("macron", 333),
            ("minus", 584),
            ("mu", 556),
            ("multiply", 584),
            ("n", 556),
            ("nine", 556),
            ("ntilde", 556),
            ("numbersign", 556),
            ("o", 556),
            ("oacute", 556),
            ("ocircumflex", 556),
            ("odieresis", 556),
            ("oe", 944),
            ("ogonek", 333),
            ("ograve", 556),
            ("one", 556),
            ("onehalf", 834),
            ("onequarter", 834),
            ("onesuperior", 333),
            ("ordfeminine", 370),
            ("ordmasculine", 365),
            ("oslash", 611),
            ("otilde", 556),
            ("p", 556),
            ("paragraph", 537),
            ("parenleft", 333),
            ("parenright", 333),
            ("percent", 889),
            ("period", 278),
            ("periodcentered", 278),
            ("perthousand", 1000),
            ("plus", 584),
            ("plusminus", 584),
            ("q", 556),
            ("question", 556),
            ("questiondown", 611),
            ("quotedbl", 355),
            ("quotedblbase", 333),
            ("quotedblleft", 333),
            ("quotedblright", 333),
            ("quoteleft", 222),
            ("quoteright", 222),
            ("quotesinglbase", 222),
            ("quotesingle", 191),
            ("r", 333),
            ("registered", 737),
            ("ring", 333),
            ("s", 500),
            ("scaron", 500),
            ("section", 556),
            ("semicolon", 278),
            ("seven", 556),
            ("six", 556),
            ("slash", 278),
            ("space", 278),
            ("sterling", 556),
            ("t", 278),
            ("thorn", 556),
            ("three", 556),
            ("threequarters", 834),
            ("threesuperior", 333),
            ("tilde", 333),
            ("trademark", 1000),
            ("two", 556),
            ("twosuperior", 333),
            ("u", 556),
            ("uacute", 556),
            ("ucircumflex", 556),
            ("udieresis", 556),
            ("ugrave", 556),
            ("underscore", 556),
            ("v", 500),
            ("w", 722),
            ("x", 500),
            ("y", 500),
            ("yacute", 500),
            ("ydieresis", 500),
            ("yen", 556),
            ("z", 500),
            ("zcaron", 500),
            ("zero", 556),
        ],
    ),
    (
        "Times-Bold",
        &[
            ("A", 722),
            ("AE", 1000),
            ("Aacute", 722),
            ("Acircumflex", 722),
            ("Adieresis", 722),
            ("Agrave", 722),
            ("Aring", 722),
            ("Atilde", 722),
            ("B", 667),
            ("C", 722),
            ("Ccedilla", 722),
            ("D", 722),
            ("E", 667),
            ("Eacute", 667),
            ("Ecircumflex", 667),
            ("Edieresis", 667),
            ("Egrave", 667),
            ("Eth", 722),
            ("Euro", 500),
            ("F", 611),
            ("G", 778),
            ("H", 778),
            ("I", 389),
            ("Iacute", 389),
            ("Icircumflex", 389),
            ("Idieresis", 389),
            ("Igrave", 389),
            ("J", 500),
            ("K", 778),
            ("L", 667),
            ("Lslash", 667),
            ("M", 944),
            ("N", 722),
            ("Ntilde", 722),
            ("O", 778),
            ("OE", 1000),
            ("Oacute", 778),
            ("Ocircumflex", 778),
            ("Odieresis", 778),
            ("Ograve", 778),
            ("Oslash", 778),
            ("Otilde", 778),
            ("P", 611),
            ("Q", 778),
            ("R", 722),
            ("S", 556),
            ("Scaron", 556),
            ("T", 667),
            ("Thorn", 611),
            ("U", 722),
            ("Uacute", 722),
            ("Ucircumflex", 722),
            ("Udieresis", 722),
            ("Ugrave", 722),
            ("V", 722),
            ("W", 1000),
            ("X", 722),
            ("Y", 722),
            ("Yacute", 722),
            ("Ydieresis", 722),
            ("Z", 667),
            ("Zcaron", 667),
            ("a", 500),
            ("aacute", 500),
            ("acircumflex", 500),
            ("acute", 333),
            ("adieresis", 500),
            ("ae", 722),
            ("agrave", 500),
            ("ampersand", 833),
            ("aring", 500),
            ("asciicircum", 581),
            ("asciitilde", 520),
            ("asterisk", 500),
            ("at", 930),
            ("atilde", 500),
            ("b", 556),
            ("backslash", 278),
            ("bar", 220),
            ("braceleft", 394),
            ("braceright", 394),
            ("bracketleft", 333),
            ("bracketright", 333),
            ("breve", 333),
            ("brokenbar", 220),
            ("bullet", 350),
            ("c", 444),
            ("caron", 333),
            ("ccedilla", 444),
            ("cedilla", 333),
            ("cent", 500),
            ("circumflex", 333),
            ("colon", 333),
            ("comma", 250),
            ("copyright", 747),
            ("currency", 500),
            ("d", 556),
            ("dagger", 500),
            ("daggerdbl", 500),
            ("degree", 400),
            ("dieresis", 333),
            ("divide", 570),
            ("dollar", 500),
            ("dotaccent", 333),
            ("dotlessi", 278),
            ("e", 444),
            ("eacute", 444),
            ("ecircumflex", 444),
            ("edieresis", 444),
            ("egrave", 444),
            ("eight", 500),
            ("ellipsis", 1000),
            ("emdash", 1000),
            ("endash", 500),
            ("equal", 570),
            ("eth", 500),
            ("exclam", 333),
            ("exclamdown", 333),
            ("f", 333),
            ("fi", 556),
            ("five", 500),
            ("fl", 556),
            ("florin", 500),
            ("four", 500),
            ("fraction", 167),
            ("g", 500),
            ("germandbls", 556),
            ("grave", 333),
            ("greater", 570),
            ("guillemotleft", 500),
            ("guillemotright", 500),
            ("guilsinglleft", 333),
            ("guilsinglright", 333),
            ("h", 556),
            ("hungarumlaut", 333),
            ("hyphen", 333),
            ("i", 278),
            ("iacute", 278),
            ("icircumflex", 278),
            ("idieresis", 278),
            ("igrave", 278),
            ("j", 333),
            ("k", 556),
            ("l", 278),
            ("less", 570),
            ("logicalnot", 570),
            ("lslash", 278),
            ("m", 833),
            ("macron", 333),
            ("minus", 570),
            ("mu", 556),
            ("multiply", 570),
            ("n", 556),
            ("nine", 500),
            ("ntilde", 556),
            ("numbersign", 500),
            ("o", 500),
            ("oacute", 500),
            ("ocircumflex", 500),
            ("odieresis", 500),
            ("oe", 722),
            ("ogonek", 333),
            ("ograve", 500),
            ("one", 500),
            ("onehalf", 750),
            ("onequarter", 750),
            ("onesuperior", 300),
            ("ordfeminine", 300),
            ("ordmasculine", 330),
            ("oslash", 500),
            ("otilde", 500),
            ("p", 556),
            ("paragraph", 540),
            ("parenleft", 333),
            ("parenright", 333),
            ("percent", 1000),
            ("period", 250),
            ("periodcentered", 250),
            ("perthousand", 1000),
            ("plus", 570),
            ("plusminus", 570),
            ("q", 556),
            ("question", 500),
            ("questiondown", 500),
            ("quotedbl", 555),
            ("quotedblbase", 500),
            ("quotedblleft", 500),
            ("quotedblright", 500),
            ("quoteleft", 333),
            ("quoteright", 333),
            ("quotesinglbase", 333),
            ("quotesingle", 278),
            ("r", 444),
            ("registered", 747),
            ("ring", 333),
            ("s", 389),
            ("scaron", 389),
            ("section", 500),
            ("semicolon", 333),
            ("seven", 500),
            ("six", 500),
            ("slash", 278),
            ("space", 250),
            ("sterling", 500),
            ("t", 333),
            ("thorn", 556),
            ("three", 500),
            ("threequarters", 750),
            ("threesuperior", 300),
            ("tilde", 333),
            ("trademark", 1000),
            ("two", 500),
            ("twosuperior", 300),
            ("u", 556),
            ("uacute", 556),
            ("ucircumflex", 556),
            ("udieresis", 556),
            ("ugrave", 556),
            ("underscore", 500),
            ("v", 500),
            ("w", 722),
            ("x", 500),
            ("y", 500),
            ("yacute", 500),
            ("ydieresis", 500),
            ("yen", 500),
            ("z", 444),
            ("zcaron", 444),
            ("zero", 500),
        ],
    ),
    (
        "Times-BoldItalic",
        &[
            ("A", 667),
            ("AE", 944),
            ("Aacute", 667),
            ("Acircumflex", 667),
            ("Adieresis", 667),
            ("Agrave", 667),
            ("Aring", 667),
            ("Atilde", 667),
            ("B", 667),
            ("C", 667),
            ("Ccedilla", 667),
            ("D", 722),
            ("E", 667),
            ("Eacute", 667),
            ("Ecircumflex", 667),
            ("Edieresis", 667),
            ("Egrave", 667),
            ("Eth", 722),
            ("Euro", 500),
            ("F", 667),
            ("G", 722),
            ("H", 778),
            ("I", 389),
            ("Iacute", 389),
            ("Icircumflex", 389),
            ("Idieresis", 389),
            ("Igrave", 389),
            ("J", 500),
            ("K", 667),
            ("L", 611),
            ("Lslash", 611),
            ("M", 889),
            ("N", 722),
            ("Ntilde", 722),
            ("O", 722),
            ("OE", 944),
            ("Oacute", 722),
            ("Ocircumflex", 722),
            ("Odieresis", 722),
            ("Ograve", 722),
            ("Oslash", 722),
            ("Otilde", 722),
            ("P", 611),
            ("Q", 722),
            ("R", 667),
            ("S", 556),
            ("Scaron", 556),
            ("T", 611),
            ("Thorn", 611),
            ("U", 722),
            ("Uacute", 722),
            ("Ucircumflex", 722),
            ("Udieresis", 722),
            ("Ugrave", 722),
            ("V", 667),
            ("W", 889),
            ("X", 667),
            ("Y", 611),
            ("Yacute", 611),
            ("Ydieresis", 611),
            ("Z", 611),
            ("Zcaron", 611),
            ("a", 500),
            ("aacute", 500),
            ("acircumflex", 500),
            ("acute", 333),
            ("adieresis", 500),
            ("ae", 722),
            ("agrave", 500),
            ("ampersand", 778),
            ("aring", 500),
            ("asciicircum", 570),
            ("asciitilde", 570),
            ("asterisk", 500),
            ("at", 832),
            ("atilde", 500),
            ("b", 500),
            ("backslash", 278),
            ("bar", 220),
            ("braceleft", 348),
            ("braceright", 348),
            ("bracketleft", 333),
            ("bracketright", 333),
            ("breve", 333),
            ("brokenbar", 220),
            ("bullet", 350),
            ("c", 444),
            ("caron", 333),
            ("ccedilla", 444),
            ("cedilla", 333),
            ("cent", 500),
            ("circumflex", 333),
            ("colon", 333),
            ("comma", 250),
            ("copyright", 747),
            ("currency", 500),
            ("d", 500),
            ("dagger", 500),
            ("daggerdbl", 500),
            ("degree", 400),
            ("dieresis", 333),
            ("divide", 570),
            ("dollar", 500),
            ("dotaccent", 333),
            ("dotlessi", 278),
            ("e", 444),
            ("eacute", 444),
            ("ecircumflex", 444),
            ("edieresis", 444),
            ("egrave", 444),
            ("eight", 500),
            ("ellipsis", 1000),
            ("emdash", 1000),
            ("endash", 500),
            ("equal", 570),
            ("eth", 500),
            ("exclam", 389),
            ("exclamdown", 389),
            ("f", 333),
            ("fi", 556),
            ("five", 500),
            ("fl", 556),
            ("florin", 500),
            ("four", 500),
            ("fraction", 167),
            ("g", 500),
            ("germandbls", 500),
            ("grave", 333),
            ("greater", 570),
            ("guillemotleft", 500),
            ("guillemotright", 500),
            ("guilsinglleft", 333),
            ("guilsinglright", 333),
            ("h", 556),
            ("hungarumlaut", 333),
            ("hyphen", 333),
            ("i", 278),
            ("iacute", 278),
            ("icircumflex", 278),
            ("idieresis", 278),
            ("igrave", 278),
            ("j", 278),
            ("k", 500),
            ("l", 278),
            ("less", 570),
            ("logicalnot", 606),
            ("lslash", 278),
            ("m", 778),
            ("macron", 333),
            ("minus", 606),
            ("mu", 576),
            ("multiply", 570),
            ("n", 556),
            ("nine", 500),
            ("ntilde", 556),
            ("numbersign", 500),
            ("o", 500),
            ("oacute", 500),
            ("ocircumflex", 500),
            ("odieresis", 500),
            ("oe", 722),
            ("ogonek", 333),
            ("ograve", 500),
            ("one", 500),
            ("onehalf", 750),
            ("onequarter", 750),
            ("onesuperior", 300),
            ("ordfeminine", 266),
            ("ordmasculine", 300),
            ("oslash", 500),
            ("otilde", 500),
            ("p", 500),
            ("paragraph", 500),
            ("parenleft", 333),
            ("parenright", 333),
            ("percent", 833),
            ("period", 250),
            ("periodcentered", 250),
            ("perthousand", 1000),
            ("plus", 570),
            ("plusminus", 570),
            ("q", 500),
            ("question", 500),
            ("questiondown", 500),
            ("quotedbl", 555),
            ("quotedblbase", 500),
            ("quotedblleft", 500),
            ("quotedblright", 500),
            ("quoteleft", 333),
            ("quoteright", 333),
            ("quotesinglbase", 333),
            ("quotesingle", 278),
            ("r", 389),
            ("registered", 747),
            ("ring", 333),
            ("s", 389),
            ("scaron", 389),
            ("section", 500),
            ("semicolon", 333),
            ("seven", 500),
            ("six", 500),
            ("slash", 278),
            ("space", 250),
            ("sterling", 500),
            ("t", 278),
            ("thorn", 500),
            ("three", 500),
            ("threequarters", 750),
            ("threesuperior", 300),
            ("tilde", 333),
            ("trademark", 1000),
            ("two", 500),
            ("twosuperior", 300),
            ("u", 556),
            ("uacute", 556),
            ("ucircumflex", 556),
            ("udieresis", 556),
            ("ugrave", 556),
            ("underscore", 500),
            ("v", 444),
            ("w", 667),
            ("x", 500),
            ("y", 444),
            ("yacute", 444),
            ("ydieresis", 444),
            ("yen", 500),
            ("z", 389),
            ("zcaron", 389),
            ("zero", 500),
        ],
    ),
    (
        "Times-Italic",
        &[
            ("A", 611),
            ("AE", 889),
            ("Aacute", 611),
            ("Acircumflex", 611),
            ("Adieresis", 611),
            ("Agrave", 611),
            ("Aring", 611),
            ("Atilde", 611),
            ("B", 611),
            ("C", 667),
            ("Ccedilla", 667),
            ("D", 722),
            ("E", 611),
            ("Eacute", 611),
            ("Ecircumflex", 611),
            ("Edieresis", 611),
            ("Egrave", 611),
            ("Eth", 722),
            ("Euro", 500),
            ("F", 611),
            ("G", 722),
            ("H", 722),
            ("I", 333),
            ("Iacute", 333),
            ("Icircumflex", 333),
            ("Idieresis", 333),
            ("Igrave", 333),
            ("J", 444),
            ("K", 667),
            ("L", 556),
            ("Lslash", 556),
            ("M", 833),
            ("N", 667),
            ("Ntilde", 667),
            ("O", 722),
            ("OE", 944),
            ("Oacute", 722),
            ("Ocircumflex", 722),
            ("Odieresis", 722),
            ("Ograve", 722),
            ("Oslash", 722),
            ("Otilde", 722),
            ("P", 611),
            ("Q", 722),
            ("R", 611),
            ("S", 500),
            ("Scaron", 500),
            ("T", 556),
            ("Thorn", 611),
            ("U", 722),
            ("Uacute", 722),
            ("Ucircumflex", 722),
            ("Udieresis", 722),
            ("Ugrave", 722),
            ("V", 611),
            ("W", 833),
            ("X", 611),
            ("Y", 556),
            ("Yacute", 556),
            ("Ydieresis", 556),
            ("Z", 556),
            ("Zcaron", 556),
            ("a", 500),
            ("aacute", 500),
            ("acircumflex", 500),
            ("acute", 333),
            ("adieresis", 500),
            ("ae", 667),
            ("agrave", 500),
            ("ampersand", 778),
            ("aring", 500),
            ("asciicircum", 422),
            ("asciitilde", 541),
            ("asterisk", 500),
            ("at", 920),
            ("atilde", 500),
            ("b", 500),
            ("backslash", 278),
            ("bar", 275),
            ("braceleft", 400),
            ("braceright", 400),
            ("bracketleft", 389),
            ("bracketright", 389),
            ("breve", 333),
            ("brokenbar", 275),
            ("bullet", 350),
            ("c", 444),
            ("caron", 333),
            ("ccedilla", 444),
            ("cedilla", 333),
            ("cent", 500),
            ("circumflex", 333),
            ("colon", 333),
            ("comma", 250),
            ("copyright", 760),
            ("currency", 500),
            ("d", 500),
            ("dagger", 500),
            ("daggerdbl", 500),
            ("degree", 400),
            ("dieresis", 333),
            ("divide", 675),
            ("dollar", 500),
            ("dotaccent", 333),
            ("dotlessi", 278),
            ("e", 444),
            ("eacute", 444),
            ("ecircumflex", 444),
            ("edieresis", 444),
            ("egrave", 444),
            ("eight", 500),
            ("ellipsis", 889),
            ("emdash", 889),
            ("endash", 500),
            ("equal", 675),
            ("eth", 500),
            ("exclam", 333),
            ("exclamdown", 389),
            ("f", 278),
            ("fi", 500),
            ("five", 500),
            ("fl", 500),
            ("florin", 500),
            ("four", 500),
            ("fraction", 167),
            ("g", 500),
            ("germandbls", 500),
            ("grave", 333),
            ("greater", 675),
            ("guillemotleft", 500),
            ("guillemotright", 500),
            ("guilsinglleft", 333),
            ("guilsinglright", 333),
            ("h", 500),
            ("hungarumlaut", 333),
            ("hyphen", 333),
            ("i", 278),
            ("iacute", 278),
            ("icircumflex", 278),
            ("idieresis", 278),
            ("igrave", 278),
            ("j", 278),
            ("k", 444),
            ("l", 278),
            ("less", 675),
            ("logicalnot", 675),
            ("lslash", 278),
            ("m", 722),
            ("macron", 333),
            ("minus", 675),
            ("mu", 500),
            ("multiply", 675),
            ("n", 500),
            ("nine", 500),
            ("ntilde", 500),
            ("numbersign", 500),
            ("o", 500),
            ("oacute", 500),
            ("ocircumflex", 500),
            ("odieresis", 500),
            ("oe", 667),
            ("ogonek", 333),
            ("ograve", 500),
            ("one", 500),
            ("onehalf", 750),
            ("onequarter", 750),
            ("onesuperior", 300),
            ("ordfeminine", 276),
            ("ordmasculine", 310),
            ("oslash", 500),
            ("otilde", 500),
            ("p", 500),
            ("paragraph", 523),
            ("parenleft", 333),
            ("parenright", 333),
            ("percent", 833),
            ("period", 250),
            ("periodcentered", 250),
            ("perthousand", 1000),
            ("plus", 675),
            ("plusminus", 675),
            ("q", 500),
            ("question", 500),
            ("questiondown", 500),
            ("quotedbl", 420),
            ("quotedblbase", 556),
            ("quotedblleft", 556),
            ("quotedblright", 556),
            ("quoteleft", 333),
            ("quoteright", 333),
            ("quotesinglbase", 333),
            ("quotesingle", 214),
            ("r", 389),
            ("registered", 760),
            ("ring", 333),
            ("s", 389),
            ("scaron", 389),
            ("section", 500),
            ("semicolon", 333),
            ("seven", 500),
            ("six", 500),
            ("slash", 278),
            ("space", 250),
            ("sterling", 500),
            ("t", 278),
            ("thorn", 500),
            ("three", 500),
            ("threequarters", 750),
            ("threesuperior", 300),
            ("tilde", 333),
            ("trademark", 980),
            ("two", 500),
            ("twosuperior", 300),
            ("u", 500),
            ("uacute", 500),
            ("ucircumflex", 500),
            ("udieresis", 500),
            ("ugrave", 500),
            ("underscore", 500),
            ("v", 444),
            ("w", 667),
            ("x", 444),
            ("y", 444),
            ("yacute", 444),
            ("ydieresis", 444),
            ("yen", 500),
            ("z", 389),
            ("zcaron", 389),
            ("zero", 500),
        ],
    ),
    (
        "Times-Roman",
        &[
            ("A", 722),
            ("AE", 889),
            ("Aacute", 722),
            ("Acircumflex", 722),
            ("Adieresis", 722),
            ("Agrave", 722),
            ("Aring", 722),
            ("Atilde", 722),
            ("B", 667),
            ("C", 667),
            ("Ccedilla", 667),
            ("D", 722),
            ("E", 611),
            ("Eacute", 611),
            ("Ecircumflex", 611),
            ("Edieresis", 611),
            ("Egrave", 611),
            ("Eth", 722),
            ("Euro", 500),
            ("F", 556),
            ("G", 722),
            ("H", 722),
            ("I", 333),
            ("Iacute", 333),
            ("Icircumflex", 333),
            ("Idieresis", 333),
            ("Igrave", 333),
            ("J", 389),
            ("K", 722),
            ("L", 611),
            ("Lslash", 611),
            ("M", 889),
            ("N", 722),
            ("Ntilde", 722),
            ("O", 722),
            ("OE", 889),
            ("Oacute", 722),
            ("Ocircumflex", 722),
            ("Odieresis", 722),
            ("Ograve", 722),
            ("Oslash", 722),
            ("Otilde", 722),
            ("P", 556),
            ("Q", 722),
            ("R", 667),
            ("S", 556),
            ("Scaron", 556),
            ("T", 611),
            ("Thorn", 556),
            ("U", 722),
            ("Uacute", 722),
            ("Ucircumflex", 722),
            ("Udieresis", 722),
            ("Ugrave", 722),
            ("V", 722),
            ("W", 944),
            ("X", 722),
            ("Y", 722),
            ("Yacute", 722),
            ("Ydieresis", 722),
            ("Z", 611),
            ("Zcaron", 611),
            ("a", 444),
            ("aacute", 444),
            ("acircumflex", 444),
            ("acute", 333),
            ("adieresis", 444),
            ("ae", 667),
            ("agrave", 444),
            ("ampersand", 778),
            ("aring", 444),
            ("asciicircum", 469),
            ("asciitilde", 541),
            ("asterisk", 500),
            ("at", 921),
            ("atilde", 444),
            ("b", 500),
            ("backslash", 278),
            ("bar", 200),
            ("braceleft", 480),
            ("braceright", 480),
            ("bracketleft", 333),
            ("bracketright", 333),
            ("breve", 333),
            ("brokenbar", 200),
            ("bullet", 350),
            ("c", 444),
            ("caron", 333),
            ("ccedilla", 444),
            ("cedilla", 333),
            ("cent", 500),
            ("circumflex", 333),
            ("colon", 278),
            ("comma", 250),
            ("copyright", 760),
            ("currency", 500),
            ("d", 500),
            ("dagger", 500),
            ("daggerdbl", 500),
            ("degree", 400),
            ("dieresis", 333),
            ("divide", 564),
            ("dollar", 500),
            ("dotaccent", 333),
            ("dotlessi", 278),
            ("e", 444),
            ("eacute", 444),
            ("ecircumflex", 444),
            ("edieresis", 444),
            ("egrave", 444),
            ("eight", 500),
            ("ellipsis", 1000),
            ("emdash", 1000),
            ("endash", 500),
            ("equal", 564),
            ("eth", 500),
            ("exclam", 333),
            ("exclamdown", 333),
            ("f", 333),
            ("fi", 556),
            ("five", 500),
            ("fl", 556),
            ("florin", 500),
            ("four", 500),
            ("fraction", 167),
            ("g", 500),
            ("germandbls", 500),
            ("grave", 333),
            ("greater", 564),
            ("guillemotleft", 500),
            ("guillemotright", 500),
            ("guilsinglleft", 333),
            ("guilsinglright", 333),
            ("h", 500),
            ("hungarumlaut", 333),
            ("hyphen", 333),
            ("i", 278),
            ("iacute", 278),
            ("icircumflex", 278),
            ("idieresis", 278),
            ("igrave", 278),
            ("j", 278),
            ("k", 500),
            ("l", 278),
            ("less", 564),
            ("logicalnot", 564),
            ("lslash", 278),
            ("m", 778),
            ("macron", 333),
            ("minus", 564),
            ("mu", 500),
            ("multiply", 564),
            ("n", 500),
            ("nine", 500),
            ("ntilde", 500),
            ("numbersign", 500),
            ("o", 500),
            ("oacute", 500),
            ("ocircumflex", 500),
            ("odieresis", 500),
            ("oe", 722),
            ("ogonek", 333),
            ("ograve", 500),
            ("one", 500),
            ("onehalf", 750),
            ("onequarter", 750),
            ("onesuperior", 300),
            ("ordfeminine", 276),
            ("ordmasculine", 310),
            ("oslash", 500),
            ("otilde", 500),
            ("p", 500),
            ("paragraph", 453),
            ("parenleft", 333),
            ("parenright", 333),
            ("percent", 833),
            ("period", 250),
            ("periodcentered", 250),
            ("perthousand", 1000),
            ("plus", 564),
            ("plusminus", 564),
            ("q", 500),
            ("question", 444),
            ("questiondown", 444),
            ("quotedbl", 408),
            ("quotedblbase", 444),
            ("quotedblleft", 444),
            ("quotedblright", 444),
            ("quoteleft", 333),
            ("quoteright", 333),
            ("quotesinglbase", 333),
            ("quotesingle", 180),
            ("r", 333),
            ("registered", 760),
            ("ring", 333),
            ("s", 389),
            ("scaron", 389),
            ("section", 500),
            ("semicolon", 278),
            ("seven", 500),
            ("six", 500),
            ("slash", 278),
            ("space", 250),
            ("sterling", 500),
            ("t", 278),
            ("thorn", 500),
            ("three", 500),
            ("threequarters", 750),
            ("threesuperior", 300),
            ("tilde", 333),
            ("trademark", 980),
            ("two", 500),
            ("twosuperior", 300),
            ("u", 500),
            ("uacute", 500),
            ("ucircumflex", 500),
            ("udieresis", 500),
            ("ugrave", 500),
            ("underscore", 500),
            ("v", 500),
            ("w", 722),
            ("x", 500),
            ("y", 500),
            ("yacute", 500),
            ("ydieresis", 500),
            ("yen", 500),
            ("z", 444),
            ("zcaron", 444),
            ("zero", 500),
        ],
    ),
];
