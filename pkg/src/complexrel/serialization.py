"""Wire formats: complex numbers in JSON and CSV, literals, precision.

Conventions used by both the service and the CLI:

* JSON carries a complex number as an object ``{"re": ..., "im": ...}``.
* CSV carries it as paired columns ``<name>_re`` and ``<name>_im``.
* Command-line literals are ``a+bi`` (also plain reals, ``bi``, ``i``).
* Floats are rounded to a configurable number of significant digits before
  encoding, so repeated runs emit byte-identical output.
"""

from __future__ import annotations

import io
import json
import math

DEFAULT_PRECISION = 12


def complex_to_json(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def complex_from_json(obj) -> complex:
    """Accept {"re": a, "im": b} (either key optional) or a bare number."""
    if isinstance(obj, dict):
        extra = set(obj) - {"re", "im"}
        if extra:
            raise ValueError(f"unexpected keys in complex object: {sorted(extra)}")
        return complex(float(obj.get("re", 0.0)), float(obj.get("im", 0.0)))
    if isinstance(obj, (int, float)):
        return complex(obj)
    raise ValueError(f"cannot read a complex number from {obj!r}")


def parse_complex_literal(text: str) -> complex:
    """Parse ``a+bi`` (or ``a``, ``bi``, ``i``, ``a-bi``) to a complex number."""
    if not isinstance(text, str) or not text.strip():
        raise ValueError("empty complex literal")
    normalized = text.strip().lower().replace("i", "j")
    try:
        z = complex(normalized)
    except ValueError:
        raise ValueError(f"malformed complex literal {text!r}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"complex literal {text!r} is not finite")
    return z


def format_complex_literal(z: complex, precision: int = DEFAULT_PRECISION) -> str:
    z = complex(z)
    re = format(z.real, f".{precision}g")
    im = format(abs(z.imag), f".{precision}g")
    sign = "-" if z.imag < 0 else "+"
    return f"{re}{sign}{im}i"


def _round_float(x: float, precision: int):
    # Non-finite values have no strict-JSON encoding; emit null instead.
    if not math.isfinite(x):
        return None
    return float(format(x, f".{precision}g"))


def round_floats(obj, precision: int = DEFAULT_PRECISION):
    """Round every float in a nested structure to significant digits.

    Complex values become {"re", "im"} objects on the way through, so the
    result is directly JSON encodable.
    """
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return _round_float(obj, precision)
    if isinstance(obj, complex):
        return {
            "re": _round_float(obj.real, precision),
            "im": _round_float(obj.imag, precision),
        }
    if isinstance(obj, dict):
        return {k: round_floats(v, precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v, precision) for v in obj]
    return obj


def json_dumps(obj, precision: int = DEFAULT_PRECISION) -> str:
    """Deterministic JSON encoding with rounded floats (keys keep their
    construction order, which is fixed for every code path)."""
    return json.dumps(round_floats(obj, precision), indent=2)


def flatten_row(row: dict) -> dict:
    """Expand complex values of one record into paired _re/_im entries."""
    flat: dict = {}
    for key, value in row.items():
        if isinstance(value, complex):
            flat[f"{key}_re"] = value.real
            flat[f"{key}_im"] = value.imag
        elif isinstance(value, dict) and set(value) <= {"re", "im"} and value:
            flat[f"{key}_re"] = float(value.get("re", 0.0))
            flat[f"{key}_im"] = float(value.get("im", 0.0))
        else:
            flat[key] = value
    return flat


def _is_complex_cell(value) -> bool:
    if isinstance(value, complex):
        return True
    return isinstance(value, dict) and bool(value) and set(value) <= {"re", "im"}


def rows_to_csv(rows: list[dict], precision: int = DEFAULT_PRECISION) -> str:
    """Encode records as CSV with complex fields split into _re/_im columns.

    A key is treated as complex-valued if any row holds a complex (or
    {"re", "im"}) value under it, so None entries in such a column still
    occupy both cells.  Missing values and non-finite numbers become empty
    cells, matching the JSON convention of null.
    """
    if not rows:
        return ""
    complex_keys = {
        key for row in rows for key, value in row.items() if _is_complex_cell(value)
    }
    flat_rows = []
    for row in rows:
        flat: dict = {}
        for key, value in row.items():
            if key in complex_keys:
                if value is None:
                    flat[f"{key}_re"] = None
                    flat[f"{key}_im"] = None
                elif isinstance(value, complex):
                    flat[f"{key}_re"] = value.real
                    flat[f"{key}_im"] = value.imag
                else:
                    flat[f"{key}_re"] = float(value.get("re", 0.0))
                    flat[f"{key}_im"] = float(value.get("im", 0.0))
            else:
                flat[key] = value
        flat_rows.append(flat)
    header: list = []
    for row in flat_rows:
        for name in row:
            if name not in header:
                header.append(name)
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in flat_rows:
        cells = []
        for name in header:
            value = row.get(name, "")
            if value is None:
                cells.append("")
            elif isinstance(value, bool):
                cells.append(str(value).lower())
            elif isinstance(value, float):
                cells.append("" if not math.isfinite(value) else format(value, f".{precision}g"))
            else:
                cells.append(str(value))
        buf.write(",".join(cells) + "\n")
    return buf.getvalue()
