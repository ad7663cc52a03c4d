import io
import sys
import csv
import json

from enum import Enum
from typing import Any, Iterable, List, Optional, Sequence, TextIO

from pyhocon import ConfigTree
from sty import fg, rs, Rule, Render

from .census import CensusReport

fg.set_rule('suncount_magenta', Rule(Render.rgb_fg, 199, 51, 147))


class OutputFormat(Enum):
    Table = 'table'
    Json = 'json'
    Csv = 'csv'


def format_table(rows: Sequence[Sequence[Any]], gap: int = 2) -> str:
    """Left aligned columns padded with spaces and separated by `gap` spaces; no trailing whitespace

    Args:
        rows: Rows of cells, the first row usually being the header
        gap: Spaces between columns

    Returns:
        Newline terminated text, empty for no rows
    """
    cells = [[str(c) for c in row] for row in rows]
    if not cells:
        return ''
    widths = [0] * max(len(row) for row in cells)
    for row in cells:
        for i, c in enumerate(row):
            widths[i] = max(widths[i], len(c))
    sep = ' ' * gap
    lines = [sep.join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip() for row in cells]
    return '\n'.join(lines) + '\n'


def format_csv(rows: Iterable[Sequence[Any]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    for row in rows:
        writer.writerow([str(c) for c in row])
    return out.getvalue()


def format_json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + '\n'


def _status(passed: bool) -> str:
    return 'PASS' if passed else 'FAIL'


def render_report(report: CensusReport, output: OutputFormat, gap: int = 2) -> str:
    """Report as table, JSON ({claim, params, values, passed}) or CSV (oracle,value rows)"""
    if output is OutputFormat.Json:
        return format_json(report.to_dict())
    rows: List[List[Any]] = [['oracle', 'value']] + [[name, value] for name, value in report.values.items()]
    if output is OutputFormat.Csv:
        return format_csv(rows + [['passed', str(report.passed).lower()]])
    params = ', '.join('{}={}'.format(k, v) for k, v in report.params.items())
    text = '{} ({})\n'.format(report.claim, params) + format_table(rows, gap)
    for problem in report.problems:
        text += 'problem: {}\n'.format(problem)
    return text + 'result: {}\n'.format(_status(report.passed))


class ConsolePrinter:
    """Writes results to stdout and diagnostics to stderr, colored only when the stream is a terminal

    Streams are looked up at write time, so redirections of sys.stdout and sys.stderr (e.g. in tests) are honored.

    Args:
        internal_config: The internal configuration, for the column gap
        out: Result stream, sys.stdout if None
        err: Diagnostics stream, sys.stderr if None
    """

    def __init__(self,
                 internal_config: ConfigTree,
                 out: Optional[TextIO] = None,
                 err: Optional[TextIO] = None) -> None:
        self.gap: int = internal_config.get('console.column_gap', 2)
        self._out = out
        self._err = err

    @property
    def out(self) -> TextIO:
        return self._out if self._out is not None else sys.stdout

    @property
    def err(self) -> TextIO:
        return self._err if self._err is not None else sys.stderr

    @staticmethod
    def _is_tty(stream: TextIO) -> bool:
        isatty = getattr(stream, 'isatty', None)
        return bool(isatty and isatty())

    def _colored(self, stream: TextIO, txt: str, color: str) -> str:
        return color + txt + rs.all if self._is_tty(stream) else txt

    def print(self, txt: str) -> None:
        self.out.write(txt)
        self.out.flush()

    def print_report(self, report: CensusReport, output: OutputFormat) -> None:
        text = render_report(report, output, self.gap)
        if output is OutputFormat.Table:
            status = _status(report.passed)
            text = text.replace('result: ' + status,
                                'result: ' + self._colored(self.out, status, fg.green if report.passed else fg.red))
        self.print(text)

    def print_rows(self, rows: Sequence[Sequence[Any]], output: OutputFormat) -> None:
        """Tabular data; the first row is the header"""
        self.print(format_csv(rows) if output is OutputFormat.Csv else format_table(rows, self.gap))

    def print_json(self, obj: Any) -> None:
        self.print(format_json(obj))

    def print_heading(self, txt: str) -> None:
        self.print(self._colored(self.out, txt, fg.suncount_magenta) + '\n')

    def print_error(self, txt: str) -> None:
        """A single line diagnostic, prefixed with 'Error: '"""
        line = ' '.join(txt.split())
        self.err.write(self._colored(self.err, 'Error: ' + line, fg.red) + '\n')
        self.err.flush()
