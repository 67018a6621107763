"""Deterministic JSON/CSV emission: 17-significant-digit floats, LF, UTF-8.

%.17g round-trips every binary64 exactly, which makes command outputs
byte-stable for golden-file comparison.
"""

import numpy as np


def fmt17(x):
    x = float(x)
    if not np.isfinite(x):
        raise ValueError(f"non-finite value in output: {x}")
    return format(x, ".17g")


def _emit(obj, indent, level):
    pad = " " * (indent * level)
    pad_in = " " * (indent * (level + 1))
    if obj is None:
        return "null"
    if isinstance(obj, bool) or isinstance(obj, np.bool_):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt17(obj)
    if isinstance(obj, str):
        out = obj.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        return f'"{out}"'
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        inner = [_emit(v, indent, level + 1) for v in obj]
        if all(not isinstance(v, (list, tuple, dict, np.ndarray)) for v in obj):
            return "[" + ", ".join(inner) + "]"
        return "[\n" + ",\n".join(pad_in + s for s in inner) + "\n" + pad + "]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f'{pad_in}"{k}": {_emit(v, indent, level + 1)}' for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    raise TypeError(f"cannot serialize {type(obj)}")


def dumps(obj, indent=2):
    """Serialize with insertion-ordered keys and exact float round-trip."""
    return _emit(obj, indent, 0) + "\n"


def flatten(obj, prefix=""):
    """(path, value) pairs for the csv output format."""
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from flatten(v, f"{prefix}{k}." if prefix else f"{k}.")
    elif isinstance(obj, np.ndarray):
        yield from flatten(obj.tolist(), prefix)
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            yield from flatten(v, f"{prefix}{i}.")
    else:
        key = prefix[:-1] if prefix.endswith(".") else prefix
        if isinstance(obj, bool) or obj is None or isinstance(obj, str):
            yield key, str(obj)
        elif isinstance(obj, (int, np.integer)):
            yield key, str(int(obj))
        else:
            yield key, fmt17(obj)
