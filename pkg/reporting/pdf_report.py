"""PDF ledger of the S3 reproduction using ReportLab."""

import logging
from pathlib import Path
from typing import List, Optional
from xml.sax.saxutils import escape

from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER, TA_LEFT
from reportlab.lib.pagesizes import letter
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import inch
from reportlab.platypus import PageBreak, Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

import config
from arithmetic.scalars import ExactScalar
from pipeline.s3 import S3Report

logger = logging.getLogger(__name__)

HEADER_BLUE = colors.HexColor('#4A90E2')
ROW_BACKGROUND = colors.HexColor('#F8FAFB')
TEXT_DARK = colors.HexColor('#2C3E50')
VERIFIED_GREEN = colors.HexColor('#1B7A3D')
FAILED_RED = colors.HexColor('#C62828')


def _header_table_style(font_size: int = 10) -> List[tuple]:
    return [
        ('BACKGROUND', (0, 0), (-1, 0), HEADER_BLUE),
        ('TEXTCOLOR', (0, 0), (-1, 0), colors.white),
        ('ALIGN', (0, 0), (-1, -1), 'LEFT'),
        ('FONTNAME', (0, 0), (-1, 0), 'Times-Bold'),
        ('FONTSIZE', (0, 0), (-1, 0), 11),
        ('BOTTOMPADDING', (0, 0), (-1, 0), 8),
        ('TOPPADDING', (0, 0), (-1, 0), 8),
        ('BACKGROUND', (0, 1), (-1, -1), ROW_BACKGROUND),
        ('FONTNAME', (0, 1), (-1, -1), 'Times-Roman'),
        ('FONTSIZE', (0, 1), (-1, -1), font_size),
        ('LINEBELOW', (0, 1), (-1, -2), 0.5, colors.HexColor('#E0E6ED')),
        ('TEXTCOLOR', (0, 1), (-1, -1), TEXT_DARK),
        ('VALIGN', (0, 0), (-1, -1), 'TOP'),
    ]


def _scalar_text(value: ExactScalar) -> str:
    z = complex(value)
    return f"{z.real:+.4f}{z.imag:+.4f}i" if abs(z.imag) > 1e-15 else f"{z.real:+.4f}"


def _matrix_table(matrix, body_style: ParagraphStyle) -> Table:
    size = len(matrix)
    data = [[""] + [str(j + 1) for j in range(size)]]
    for i, row in enumerate(matrix):
        data.append([str(i + 1)] + [_scalar_text(v) for v in row])
    table = Table(data)
    table.setStyle(TableStyle(_header_table_style(8)))
    return table


def generate_s3_pdf(report: S3Report, output_path: Optional[Path] = None) -> Path:
    """
    Render the S3 ledger, the matrix A and the block B as a PDF.

    Args:
        report: Verified S3Report
        output_path: Target file (defaults to config.REPORTS_DIR / "s3_reproduction.pdf")

    Returns:
        Path to the generated PDF file
    """
    if output_path is None:
        output_path = config.REPORTS_DIR / "s3_reproduction.pdf"
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)

    doc = SimpleDocTemplate(
        str(output_path),
        pagesize=letter,
        rightMargin=60,
        leftMargin=60,
        topMargin=45,
        bottomMargin=60,
        title="S3 multiplier reproduction",
        author=config.APP_NAME,
        # Fixed creation metadata keeps the output reproducible
        invariant=1,
    )

    styles = getSampleStyleSheet()
    title_style = ParagraphStyle(
        'LedgerTitle',
        parent=styles['Heading1'],
        fontName='Times-Bold',
        fontSize=24,
        textColor=TEXT_DARK,
        spaceAfter=16,
        alignment=TA_LEFT,
        leading=30,
    )
    heading_style = ParagraphStyle(
        'LedgerHeading',
        parent=styles['Heading2'],
        fontName='Times-Bold',
        fontSize=16,
        textColor=colors.HexColor('#34495E'),
        spaceAfter=12,
        spaceBefore=12,
    )
    body_style = ParagraphStyle(
        'LedgerBody',
        parent=styles['Normal'],
        fontName='Times-Roman',
        fontSize=11,
        textColor=TEXT_DARK,
        leading=15,
        spaceAfter=6,
    )
    cell_style = ParagraphStyle('LedgerCell', parent=body_style, fontSize=9, leading=11, spaceAfter=0)

    story = []
    story.append(Paragraph("Non-factorizable multiplier on S3", title_style))
    verdict = report.verdict
    story.append(Paragraph(
        f"Verdict: <b>{verdict.verdict}</b> (d = {verdict.d}, Hadamard rank = {verdict.hadamard_rank}). "
        f"Delta = {escape(str(report.delta))}; rk(M) = {report.rank_m}.",
        body_style,
    ))
    story.append(Spacer(1, 0.2 * inch))

    story.append(Paragraph("Verified identities", heading_style))
    data = [["Identity", "Expected", "Status"]]
    for entry in report.ledger:
        data.append([
            Paragraph(escape(entry.identity), cell_style),
            Paragraph(escape(entry.expected), cell_style),
            "verified" if entry.verified else "FAILED",
        ])
    ledger_table = Table(data, colWidths=[3.4 * inch, 2.0 * inch, 0.9 * inch], repeatRows=1)
    style = _header_table_style()
    for i, entry in enumerate(report.ledger, 1):
        style.append(('TEXTCOLOR', (2, i), (2, i), VERIFIED_GREEN if entry.verified else FAILED_RED))
    ledger_table.setStyle(TableStyle(style))
    story.append(ledger_table)

    story.append(PageBreak())
    story.append(Paragraph("Herz-Schur matrix A", heading_style))
    story.append(_matrix_table(report.a, body_style))
    story.append(Spacer(1, 0.3 * inch))
    story.append(Paragraph("Block B", heading_style))
    story.append(_matrix_table(report.blocks[2], body_style))
    story.append(Spacer(1, 0.3 * inch))
    story.append(Paragraph(
        "Spectrum: {" + ", ".join(str(v) for v in report.spectrum) + "}",
        body_style,
    ))

    footer_style = ParagraphStyle(
        'Footer',
        parent=styles['Normal'],
        fontName='Times-Italic',
        fontSize=9,
        textColor=colors.HexColor('#95A5A6'),
        alignment=TA_CENTER,
    )
    story.append(Spacer(1, 0.5 * inch))
    story.append(Paragraph(f"Generated by {config.APP_NAME} {config.VERSION}", footer_style))

    try:
        doc.build(story)
        logger.info(f"PDF report generated: {output_path}")
        return output_path
    except Exception as e:
        logger.error(f"Error generating PDF: {e}")
        # Clean up partial/corrupt PDF file on failure
        try:
            if output_path.exists():
                output_path.unlink()
                logger.debug(f"Cleaned up partial PDF file: {output_path}")
        except Exception as cleanup_error:
            logger.warning(f"Failed to clean up partial PDF: {cleanup_error}")
        raise
