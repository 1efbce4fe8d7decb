"""Run the CLI in-process and check that its JSON output is byte-stable."""

import contextlib
import io
import json

from rosenbrock_edd.cli import dumps, main
from rosenbrock_edd.parse import format_value, matrix_from_doc, matrix_to_doc, parse_frac

LABEL_KEYS = {"ring", "method", "order", "side", "reason"}


def run_cli(argv, stdin_text=None):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        if stdin_text is not None:
            import sys

            old = sys.stdin
            sys.stdin = io.StringIO(stdin_text)
            try:
                code = main(argv)
            finally:
                sys.stdin = old
        else:
            code = main(argv)
    return code, out.getvalue(), err.getvalue()


def write_doc(path, doc):
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def _is_matrix_doc(x):
    return isinstance(x, dict) and set(x) == {"ring", "rows", "cols", "entries"}


def _walk(x, ring, key=None):
    if _is_matrix_doc(x):
        assert matrix_to_doc(matrix_from_doc(x)) == x
        return
    if isinstance(x, dict):
        for k, v in x.items():
            _walk(v, ring, k)
    elif isinstance(x, list):
        for v in x:
            _walk(v, ring, key)
    elif isinstance(x, str) and key not in LABEL_KEYS:
        assert format_value(_canon(parse_frac(x, ring))) == x, (key, x)


def _canon(f):
    return f.num if f.in_ring() else f


def check_roundtrip(text, ring):
    """Reparse every emitted value; re-serializing must reproduce the bytes."""
    obj = json.loads(text)
    assert dumps(obj) == text
    _walk(obj, ring)
    return obj
