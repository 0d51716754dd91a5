import json
import logging
from pathlib import Path
from typing import Optional, TextIO, Union

from k3invariants.registry import Report
from k3invariants.registry.claim import Value

logger = logging.getLogger(__name__)

FORMATS = ('text', 'json')
DEFAULT_FORMAT = 'text'


def _format_value(value: Optional[Value]) -> str:
    if value is None:
        return '-'
    if isinstance(value, tuple):
        return '(' + ', '.join(_format_value(v) for v in value) + ')'
    return str(value)


def _render_text(report: Report) -> str:
    rows = [(r.id, r.paper_ref, _format_value(r.expected), _format_value(r.computed), r.status.value)
            for r in report]
    lines = []
    if rows:
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        for id_, ref, expected, computed, status in rows:
            lines.append(f"{id_:<{widths[0]}}  {ref:<{widths[1]}}  "
                         f"expected {expected:<{widths[2]}}  computed {computed:<{widths[3]}}  {status}")
    s = report.summary()
    lines.append(f"{s['pass']} pass, {s['fail']} fail, {s['stored']} stored, {s['disputed']} disputed")
    return '\n'.join(lines) + '\n'


def _render_json(report: Report) -> str:
    document = {'claims': [r.to_dict() for r in report], 'summary': report.summary()}
    return json.dumps(document, indent=2, ensure_ascii=False) + '\n'


def emit_report(report: Report, fmt: str = DEFAULT_FORMAT) -> str:
    """
    Renders a report.

    The text format is an aligned table with one claim per line followed by a summary line
    "N pass, F fail, M stored, K disputed". The JSON format is an object with the list of claim
    records under "claims" and the counts under "summary". Both are byte-stable for a given report.

    :param report: the report to render
    :param fmt: 'text' or 'json'
    :return: the rendered report
    """
    if fmt == 'text':
        return _render_text(report)
    if fmt == 'json':
        return _render_json(report)
    raise ValueError(f"Unknown report format {fmt!r}; expected one of {', '.join(FORMATS)}.")


def write_report(report: Report, out: Union[str, Path, TextIO], fmt: str = DEFAULT_FORMAT):
    """
    Writes the rendered report to a file path or an open text stream.

    :param report: the report to write
    :param out: the destination
    :param fmt: 'text' or 'json'
    """
    rendered = emit_report(report, fmt)
    if isinstance(out, (str, Path)):
        Path(out).write_text(rendered, encoding='utf-8')
        logger.info("Wrote %s report with %d claims to %s", fmt, len(report), out)
    else:
        out.write(rendered)
