"""Text formats: tree codes, leaf codes, tree files, point files, learning bases.

Tree code
    Pre-order string over ``0`` (white terminal), ``1`` (black terminal) and
    ``2`` (internal node, followed by the left then the right encoding).

Leaf code
    Sorted list of the black leaves in 2^k-ant addressing.  Each group of k
    binary levels becomes one digit ``sum(bit_j * 2**j)`` written in base 36;
    a trailing ``X`` marks a leaf that stops above full precision.

Tree file
    Three lines: ``k r``, the reference box as 2k reals (mins then maxes),
    and the tree code.
"""

from __future__ import annotations

import io as _stdio
import os

import numpy as np

from .builder import RefBox, add_real_vector, add_with_growth, unit_box
from .core import BLACK, WHITE, Tree, union_subtrees

__all__ = [
    "InputError",
    "encode_tree",
    "decode_tree",
    "encode_leaves",
    "decode_leaves",
    "write_tree_file",
    "read_tree_file",
    "format_tree_file",
    "parse_tree_file",
    "read_points",
    "ingest_points",
    "read_matrix",
    "write_spectral_base",
    "read_spectral_base",
    "write_correlative_base",
    "read_correlative_base",
]

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_LEAF_DIMS = 5


class InputError(ValueError):
    """Malformed user-supplied data (bad code, bad file, bad row)."""


# ---------------------------------------------------------------- tree code


def encode_tree(t: Tree) -> str:
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        if node.left is None:
            out.append("1" if node.black else "0")
        else:
            out.append("2")
            stack.append(node.right)
            stack.append(node.left)
    return "".join(out)


def decode_tree(code: str) -> Tree:
    """Parse a tree code; equal terminal siblings are merged on the way."""
    code = code.strip()
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(code):
            raise InputError("tree code ends early")
        ch = code[pos]
        pos += 1
        if ch == "0":
            return WHITE
        if ch == "1":
            return BLACK
        if ch == "2":
            left = parse()
            return union_subtrees(left, parse())
        raise InputError(f"invalid character {ch!r} at offset {pos - 1}")

    tree = parse()
    if pos != len(code):
        raise InputError(f"trailing characters after offset {pos}")
    return tree


# ---------------------------------------------------------------- leaf code


def _check_leaf_dims(k):
    if not 1 <= k <= MAX_LEAF_DIMS:
        raise ValueError(f"leaf codes support 1 <= k <= {MAX_LEAF_DIMS}")


def encode_leaves(t: Tree, k: int, r: int) -> list:
    """Black leaves of ``t`` as sorted 2^k-ant addresses."""
    _check_leaf_dims(k)
    depth = k * r
    codes = []

    def walk(node, bits, level):
        if node.white:
            return
        if node.left is not None and level < depth:
            walk(node.left, bits + [0], level + 1)
            walk(node.right, bits + [1], level + 1)
            return
        q, p = divmod(level, k)
        head = "".join(
            _DIGITS[sum(b << j for j, b in enumerate(bits[g * k:(g + 1) * k]))] for g in range(q)
        )
        tails = [""]
        if p:
            fixed = sum(b << j for j, b in enumerate(bits[q * k:]))
            tails = [_DIGITS[fixed + (rest << p)] for rest in range(1 << (k - p))]
        for tail in tails:
            c = head + tail
            codes.append(c if len(c) == r else c + "X")

    walk(t, [], 0)
    return sorted(codes)


def decode_leaves(codes, k: int, r: int) -> Tree:
    _check_leaf_dims(k)
    base = 1 << k
    t = WHITE
    for code in codes:
        early = code.endswith("X")
        digits = code[:-1] if early else code
        if len(digits) > r or (not early and len(digits) != r) or (early and len(digits) == r):
            raise InputError(f"leaf code {code!r} has the wrong length for r={r}")
        bits = []
        for ch in digits:
            d = _DIGITS.find(ch)
            if d < 0 or d >= base:
                raise InputError(f"invalid digit {ch!r} in leaf code {code!r}")
            bits.extend((d >> j) & 1 for j in range(k))
        t = _blacken_path(t, bits)
    return t


def _blacken_path(node, bits, i=0):
    if i == len(bits):
        return BLACK
    if node.left is None and node.black:
        return node
    if bits[i]:
        return union_subtrees(node.son(0), _blacken_path(node.son(1), bits, i + 1))
    return union_subtrees(_blacken_path(node.son(0), bits, i + 1), node.son(1))


# ---------------------------------------------------------------- tree files


def format_tree_file(t: Tree, k: int, r: int, box: RefBox | None = None) -> str:
    box = box or unit_box(k)
    if box.dims != k:
        raise ValueError("box dimension does not match k")
    reals = " ".join(repr(float(x)) for x in box.min + box.max)
    return f"{k} {r}\n{reals}\n{encode_tree(t)}\n"


def parse_tree_file(text: str):
    """Inverse of :func:`format_tree_file`; returns ``(tree, k, r, box)``."""
    lines = text.splitlines()
    if len(lines) != 3:
        raise InputError(f"tree file needs 3 lines, found {len(lines)}")
    try:
        k, r = (int(x) for x in lines[0].split())
        reals = [float(x) for x in lines[1].split()]
    except ValueError as exc:
        raise InputError(f"bad tree file header: {exc}") from None
    if k < 0 or r < 0 or len(reals) != 2 * k:
        raise InputError("tree file header is inconsistent")
    try:
        box = RefBox(reals[:k], reals[k:]) if k else None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return decode_tree(lines[2]), k, r, box


def write_tree_file(path, t: Tree, k: int, r: int, box: RefBox | None = None) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_tree_file(t, k, r, box))


def read_tree_file(path):
    with open(path, encoding="ascii") as fh:
        return parse_tree_file(fh.read())


# ---------------------------------------------------------------- point files


def _rows(text):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.replace(",", " ").split()


def read_points(source, k: int) -> np.ndarray:
    """Rows of ``k`` numbers separated by commas and/or whitespace."""
    text = _read_text(source)
    pts = []
    for lineno, fields in _rows(text):
        if len(fields) != k:
            raise InputError(f"row {lineno}: expected {k} values, found {len(fields)}")
        try:
            pts.append([float(f) for f in fields])
        except ValueError:
            raise InputError(f"row {lineno}: non-numeric field") from None
    return np.asarray(pts, dtype=float).reshape(-1, k)


def _read_text(source):
    if isinstance(source, _stdio.TextIOBase):
        return source.read()
    if isinstance(source, (str, os.PathLike)) and os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    raise InputError(f"cannot read {source!r}")


def ingest_points(source, k: int, r: int, mode: str = "fixed"):
    """Build ``(tree, box)`` from a point file.

    ``fixed`` expects values in ``[0, 1)`` on the unit box; ``inductive``
    starts from the unit box of the first point and grows it as needed.
    """
    pts = read_points(source, k)
    if mode == "fixed":
        t = WHITE
        for i, p in enumerate(pts, 1):
            if not np.all((p >= 0.0) & (p < 1.0)):
                raise InputError(f"point {i}: value outside [0, 1)")
            t = add_real_vector(t, p.tolist(), k, r)
        return t, unit_box(k)
    if mode == "inductive":
        if len(pts) == 0:
            return WHITE, unit_box(k)
        first = np.floor(pts[0])
        box = RefBox(first.tolist(), (first + 1.0).tolist())
        t = WHITE
        for p in pts:
            t, box = add_with_growth(t, box, p.tolist(), k, r)
        return t, box
    raise ValueError(f"unknown ingestion mode {mode!r}")


def read_matrix(source, k: int) -> np.ndarray:
    """Row-major ``(k+1)^2`` reals, whitespace separated."""
    text = _read_text(source)
    try:
        vals = [float(x) for x in text.split()]
    except ValueError:
        raise InputError("matrix file holds a non-numeric value") from None
    if len(vals) != (k + 1) ** 2:
        raise InputError(f"matrix needs {(k + 1) ** 2} values, found {len(vals)}")
    return np.array(vals).reshape(k + 1, k + 1)


# ---------------------------------------------------------------- learning bases
#
# Spectral base:
#     spectral <dims> <r_learn>
#     <box reals>
#     <tree code>
#     labels <n>          followed by n lines "id name"
#     cells <m>           followed by m lines "path id id ..."
# Correlative base:
#     correlative <k> <r>
#     labels <n>          followed by n pairs of lines "id name" / tree code


def write_spectral_base(path, base) -> None:
    names = sorted({lab for cell in base.cells.values() for lab in cell})
    ids = {name: i for i, name in enumerate(names)}
    lines = [f"spectral {base.dims} {base.r}"]
    lines.append(" ".join(repr(float(x)) for x in base.box.min + base.box.max))
    lines.append(encode_tree(base.tree))
    lines.append(f"labels {len(names)}")
    lines += [f"{ids[n]} {n}" for n in names]
    lines.append(f"cells {len(base.cells)}")
    for cell_path in sorted(base.cells):
        labs = " ".join(str(ids[n]) for n in sorted(base.cells[cell_path]))
        lines.append(f"{cell_path or '-'} {labs}")
    _write_lines(path, lines)


def read_spectral_base(path):
    from .recognition import SpectralBase

    lines = _read_lines(path)
    try:
        tag, dims, r = lines[0].split()
        if tag != "spectral":
            raise InputError("not a spectral base file")
        dims, r = int(dims), int(r)
        reals = [float(x) for x in lines[1].split()]
        tree = decode_tree(lines[2])
        n = int(lines[3].split()[1])
        names = {}
        for line in lines[4:4 + n]:
            i, name = line.split(" ", 1)
            names[int(i)] = name
        m = int(lines[4 + n].split()[1])
        cells = {}
        for line in lines[5 + n:5 + n + m]:
            p, *labs = line.split()
            cells["" if p == "-" else p] = frozenset(names[int(x)] for x in labs)
    except (IndexError, ValueError, KeyError) as exc:
        raise InputError(f"malformed spectral base: {exc}") from None
    base = SpectralBase.from_cells(dims, r, RefBox(reals[:dims], reals[dims:]), cells)
    if base.tree != tree:
        raise InputError("spectral base cells disagree with its tree code")
    return base


def write_correlative_base(path, base) -> None:
    labels = sorted(base.trees)
    lines = [f"correlative {base.k} {base.r}", f"labels {len(labels)}"]
    for i, name in enumerate(labels):
        lines.append(f"{i} {name}")
        lines.append(encode_tree(base.trees[name]))
    _write_lines(path, lines)


def read_correlative_base(path):
    from .recognition import CorrelativeBase

    lines = _read_lines(path)
    try:
        tag, k, r = lines[0].split()
        if tag != "correlative":
            raise InputError("not a correlative base file")
        n = int(lines[1].split()[1])
        trees = {}
        for j in range(n):
            _, name = lines[2 + 2 * j].split(" ", 1)
            trees[name] = decode_tree(lines[3 + 2 * j])
    except (IndexError, ValueError) as exc:
        raise InputError(f"malformed correlative base: {exc}") from None
    return CorrelativeBase(k=int(k), r=int(r), trees=trees)


def _write_lines(path, lines):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _read_lines(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read().splitlines()
