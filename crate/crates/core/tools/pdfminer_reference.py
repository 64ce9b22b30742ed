"""Dumps pdfminer.six's view of each fixture's characters to
<name>.reference.json: one entry per page with the glyph origin taken from
the text rendering matrix, the font size, and the advance."""
import json
import sys
from pathlib import Path

from pdfminer.high_level import extract_pages
from pdfminer.layout import LAParams, LTChar

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def chars(obj):
    if isinstance(obj, LTChar):
        yield obj
        return
    for child in getattr(obj, "_objs", []) or []:
        yield from chars(child)


def main(names):
    for name in names:
        pages = []
        for page in extract_pages(str(FIXTURES / name), laparams=LAParams(all_texts=True)):
            found = [
                {
                    "char": c.get_text(),
                    "x": round(c.matrix[4], 6),
                    "y": round(c.matrix[5], 6),
                    "size": round(c.size, 6),
                    "adv": round(c.adv, 6),
                }
                for c in chars(page)
            ]
            found.sort(key=lambda c: (-c["y"], c["x"]))
            pages.append({"width": page.width, "height": page.height, "chars": found})
        out = FIXTURES / (Path(name).stem + ".reference.json")
        out.write_text(json.dumps(pages, indent=1) + "\n")


if __name__ == "__main__":
    main(sys.argv[1:] or ["ab.pdf", "ab_flate.pdf", "report.pdf"])
