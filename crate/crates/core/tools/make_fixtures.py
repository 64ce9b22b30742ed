"""Writes the PDF fixtures under tests/fixtures."""
import sys
import zlib
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def write_pdf(path, objects):
    """objects: list of bytes bodies; object i+1 gets body objects[i]."""
    out = bytearray(b"%PDF-1.4\n%\xe2\xe3\xcf\xd3\n")
    offsets = []
    for i, body in enumerate(objects):
        offsets.append(len(out))
        out += b"%d 0 obj\n" % (i + 1) + body + b"\nendobj\n"
    xref = len(out)
    out += b"xref\n0 %d\n0000000000 65535 f \n" % (len(objects) + 1)
    for off in offsets:
        out += b"%010d 00000 n \n" % off
    out += b"trailer\n<< /Size %d /Root 1 0 R >>\nstartxref\n%d\n%%%%EOF\n" % (len(objects) + 1, xref)
    path.write_bytes(bytes(out))


def stream(data, extra=b""):
    return b"<< /Length %d %s>>\nstream\n" % (len(data), extra) + data + b"\nendstream"


def page_doc(content, font=True, content_extra=b""):
    resources = b"<< /Font << /F1 4 0 R >> >>" if font else b"<< >>"
    objs = [
        b"<< /Type /Catalog /Pages 2 0 R >>",
        b"<< /Type /Pages /Kids [3 0 R] /Count 1 >>",
        b"<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] /Resources "
        + resources
        + b" /Contents 5 0 R >>",
        b"<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica /Encoding /WinAnsiEncoding >>",
        stream(content, content_extra),
    ]
    return objs


def report(path):
    from reportlab.lib.pagesizes import letter
    from reportlab.pdfgen import canvas

    c = canvas.Canvas(str(path), pagesize=letter, pageCompression=1, invariant=1)
    prose = [
        "We describe a simple method that detects table regions in documents.",
        "The approach learns from weak labels which are generated from captions,",
        "and it combines layout features with linguistic features of each line.",
        "Our experiments show that the combined model clearly improves accuracy.",
    ]
    y = 720
    c.setFont("Times-Roman", 10)
    for t in prose:
        c.drawString(72, y, t)
        y -= 13
    c.setFont("Times-Bold", 10)
    c.drawString(72, y, "Table 1: Results on the test set")
    y -= 13
    rows = [
        ["Method", "Accuracy", "Precision", "Recall"],
        ["Heuristics", "0.5491", "0.5946", "0.3826"],
        ["NAM", "0.5134", "0.5134", "1.0000"],
        ["Ensemble", "0.7321", "0.7835", "0.6609"],
    ]
    c.setFont("Helvetica", 10)
    for r in rows:
        for i, cell in enumerate(r):
            c.drawString(72 + 110 * i, y, cell)
        y -= 13
    c.setFont("Times-Roman", 10)
    for t in prose[:2]:
        c.drawString(72, y, t)
        y -= 13
    c.showPage()
    c.save()


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write_pdf(OUT / "ab.pdf", page_doc(b"BT /F1 12 Tf 1 0 0 1 100 700 Tm (AB) Tj ET"))
    write_pdf(OUT / "empty_page.pdf", page_doc(b"", font=False))
    write_pdf(
        OUT / "jpx.pdf",
        page_doc(b"\x00\x00\x00\x0cjP  \r\n\x87\n", content_extra=b"/Filter /JPXDecode "),
    )
    deflated = zlib.compress(b"BT /F1 12 Tf 1 0 0 1 100 700 Tm (AB) Tj ET")
    write_pdf(OUT / "ab_flate.pdf", page_doc(deflated, content_extra=b"/Filter /FlateDecode "))
    (OUT / "corrupt.pdf").write_bytes(b"%PDF-1.4\n1 0 obj\n<< /Type /Catalog /Pages 2 0 R\nstream garbage")
    report(OUT / "report.pdf")


if __name__ == "__main__":
    sys.exit(main())
