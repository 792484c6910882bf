"""Command-line interface.

Trees travel as tree files (``k r`` / box / tree code).  Results that are
trees are written as tree files to ``--output`` (default: stdout); other
results are plain text lines.  Exit status: 0 on success, 1 on bad input,
2 on an internal failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter

import numpy as np

from . import boolean, io, metric, moments, recognition, segmentation, slices
from .builder import contains, unit_box
from .core import leaves, node_count
from .geometry import (
    homographic_transform_fast,
    polytope_tree,
    project,
    remove_hidden,
    symmetry_tree,
    transform_polytope_of,
)


class _Context:
    def __init__(self, args):
        self.args = args
        self.chunks = []

    def emit(self, text: str):
        self.chunks.append(text if text.endswith("\n") else text + "\n")

    def emit_tree(self, t, k, r, box=None):
        if box is not None and box.dims != k:
            box = None
        self.emit(io.format_tree_file(t, k, r, box or unit_box(k)))

    def flush(self):
        data = "".join(self.chunks)
        if self.args.output:
            with open(self.args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(data)
        else:
            sys.stdout.write(data)


def _load(path, args=None):
    t, k, r, box = io.read_tree_file(path)
    if args is not None and args.precision is not None:
        r = args.precision
    return t, k, r, box


def _axes(text, k):
    vals = [int(x) for x in text.split(",") if x.strip()]
    if any(not 0 <= a < k for a in vals):
        raise io.InputError(f"axis out of range for k={k}")
    return vals


def _mask(text):
    return [x.strip() not in ("0", "") for x in text.split(",")]


def _fmt(x):
    return repr(float(x))


def _path(p):
    return p or "-"


# ---------------------------------------------------------------- commands


def cmd_build(ctx, a):
    if a.dims is None or a.precision is None:
        raise io.InputError("build needs --dims and --precision")
    t, box = io.ingest_points(a.points, a.dims, a.precision, a.mode)
    ctx.emit_tree(t, a.dims, a.precision, box)


def cmd_contains(ctx, a):
    t, k, r, _ = _load(a.tree, a)
    ctx.emit("true" if contains(t, [int(c) for c in a.coords], k, r) else "false")


def cmd_bool(ctx, a):
    ta, k, r, box = _load(a.a, a)
    if a.op in ("not", "assert"):
        out = boolean.not_tree(ta, k, r) if a.op == "not" else boolean.assert_tree(ta, k, r)
    else:
        if a.b is None:
            raise io.InputError(f"{a.op} needs two trees")
        tb, kb, _, _ = _load(a.b)
        if kb != k:
            raise io.InputError("trees of different dimensions")
        fn = {"and": boolean.intersect, "or": boolean.union, "xor": boolean.xor, "diff": boolean.diff}[a.op]
        out = fn(ta, tb, k, r)
    ctx.emit_tree(out, k, r, box)


def cmd_slice(ctx, a):
    mask = _mask(a.mask)
    c = sum(mask)
    if a.mode == "extract":
        space, k, r, _ = _load(a.space, a)
        coord, _, _, _ = _load(a.coord)
        out = slices.extract_slice(space, k, coord, c, mask, r)
        ctx.emit_tree(out, k - c, r)
    else:
        if a.slice is None:
            raise io.InputError("slice insert needs --slice")
        space, k, r, box = _load(a.space, a)
        coord, _, _, _ = _load(a.coord)
        sl, d, _, _ = _load(a.slice)
        out = slices.insert_slice(space, sl, d, coord, c, mask, r)
        ctx.emit_tree(out, k, r, box)


def cmd_polytope(ctx, a):
    if a.dims is None or a.precision is None:
        raise io.InputError("polytope needs --dims and --precision")
    k = a.dims
    m = io.read_matrix(a.matrix, k)
    try:
        inv = np.linalg.inv(m)
    except np.linalg.LinAlgError:
        raise io.InputError("singular matrix") from None
    ctx.emit_tree(polytope_tree(transform_polytope_of(inv, k), k, a.precision), k, a.precision)


def cmd_transform(ctx, a):
    t, k, r, box = _load(a.tree, a)
    m = io.read_matrix(a.matrix, k)
    rb = a.precision_build if a.precision_build is not None else r
    ctx.emit_tree(homographic_transform_fast(t, m, k, r, rb), k, rb, box)


def cmd_symmetry(ctx, a):
    t, k, r, box = _load(a.tree, a)
    axes = set(_axes(a.axes, k))
    ctx.emit_tree(symmetry_tree(t, [i in axes for i in range(k)], k, r), k, r, box)


def cmd_hide(ctx, a):
    t, k, r, box = _load(a.tree, a)
    ctx.emit_tree(remove_hidden(t, a.axis, k, r), k, r, box)


def cmd_project(ctx, a):
    t, k, r, _ = _load(a.tree, a)
    ctx.emit_tree(project(t, a.axis, k, r), k - 1, r)


def cmd_adjacency(ctx, a):
    t, k, r, _ = _load(a.tree, a)
    g = segmentation.search_adjacencies(t, a.metric, k, r)
    for p, q in sorted(g.edges):
        ctx.emit(f"{_path(p)} {_path(q)}")


def cmd_label(ctx, a):
    t, k, r, _ = _load(a.tree, a)
    lt, n = segmentation.label_components(t, a.metric, k, r)
    ctx.emit(f"components {n}")
    for p, node in leaves(lt):
        if node.black:
            ctx.emit(f"{_path(p)} {node.annotation}")


def cmd_segments(ctx, a):
    t, k, r, _ = _load(a.tree, a)
    lt, n = segmentation.label_components(t, a.metric, k, r)
    for i, seg in enumerate(segmentation.segment_forest(lt, n, k, r), 1):
        ctx.emit(f"{i} {io.encode_tree(seg)}")


def _moment_lines(ctx, items):
    for key, value in sorted(items):
        ctx.emit(f"{key[0]} {key[1]} {key[2]} {_fmt(value)}")


def cmd_moments(ctx, a):
    t, k, r, _ = _load(a.tree, a)
    _moment_lines(ctx, moments.tree_moments(t, k, r).items())


def cmd_center(ctx, a):
    t, k, r, _ = _load(a.tree, a)
    _moment_lines(ctx, moments.center_moments(moments.tree_moments(t, k, r), k).items())


def _frame(t, k, r, policy):
    return moments.normalize_moments(moments.center_moments(moments.tree_moments(t, k, r), k), k, policy)


def cmd_normalize(ctx, a):
    t, k, r, _ = _load(a.tree, a)
    f = _frame(t, k, r, a.scale_policy)
    ctx.emit("eigenvalues " + " ".join(_fmt(x) for x in f.eigenvalues))
    ctx.emit("asymmetries " + " ".join(_fmt(x) for x in f.asymmetries))
    ctx.emit("center " + " ".join(_fmt(x) for x in f.center))
    ctx.emit(f"scale {_fmt(f.scale)}")
    for i in range(k):
        ctx.emit(f"axis{i + 1} " + " ".join(_fmt(x) for x in f.rotation[:, i]))


def cmd_eigen(ctx, a):
    t, k, r, _ = _load(a.tree, a)
    rb = a.precision_build if a.precision_build is not None else r
    f = _frame(t, k, r, a.scale_policy)
    ctx.emit_tree(moments.eigen_tree(t, f, k, r, rb), k, rb)


def _manifest(path):
    base = os.path.dirname(os.path.abspath(path))
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise io.InputError(f"manifest line {lineno}: expected 'label treefile'")
            out.append((parts[0], os.path.join(base, parts[1])))
    if not out:
        raise io.InputError("empty manifest")
    return out


def cmd_learn(ctx, a):
    if not a.output:
        raise io.InputError("learn needs --output")
    entries = _manifest(a.manifest)
    if a.kind == "spectral":
        samples = []
        for label, p in entries:
            t, k, r, _ = _load(p, a)
            samples.append((label, recognition.attributes_of(_frame(t, k, r, a.scale_policy), k)))
        io.write_spectral_base(a.output, recognition.spectral_learn(samples, a.r_learn))
    else:
        trees = [(label, *_load(p, a)[:3]) for label, p in entries]
        k, r = trees[0][2], trees[0][3]
        if any((kk, rr) != (k, r) for _, _, kk, rr in trees):
            raise io.InputError("training trees must share k and r")
        base = recognition.correlative_learn([(lab, t) for lab, t, _, _ in trees], k, r, a.scale_policy)
        io.write_correlative_base(a.output, base)
    a.output = None


def cmd_classify(ctx, a):
    t, k, r, _ = _load(a.tree, a)
    if a.kind == "spectral":
        base = io.read_spectral_base(a.base)
        labels = recognition.spectral_classify(base, recognition.attributes_of(_frame(t, k, r, a.scale_policy), k))
        ctx.emit(" ".join(sorted(labels)) if labels else "-")
    else:
        base = io.read_correlative_base(a.base)
        label, score = recognition.correlative_classify(base, t, k, r)
        ctx.emit(f"{label} {_fmt(score)}")


def cmd_encode(ctx, a):
    t, k, r, _ = _load(a.tree, a)
    if a.kind == "tree":
        ctx.emit(io.encode_tree(t))
    else:
        for code in io.encode_leaves(t, k, r):
            ctx.emit(code)


def cmd_decode(ctx, a):
    if a.dims is None or a.precision is None:
        raise io.InputError("decode needs --dims and --precision")
    if a.leaves:
        t = io.decode_leaves([c for c in a.code.replace(",", " ").split()], a.dims, a.precision)
    else:
        t = io.decode_tree(a.code)
    ctx.emit_tree(t, a.dims, a.precision)


def cmd_stats(ctx, a):
    t, k, r, _ = _load(a.tree, a)
    ctx.emit(f"node_count {node_count(t)}")
    ctx.emit(f"mass {_fmt(metric.mass(t))}")
    hist = Counter(len(p) for p, _ in leaves(t))
    for d in sorted(hist):
        ctx.emit(f"depth {d} {hist[d]}")


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dims", type=int, help="space dimension k")
    common.add_argument("--precision", type=int, help="precision r (overrides the tree file)")
    common.add_argument("--precision-build", type=int, help="output precision of transforms")
    common.add_argument("--metric", choices=segmentation.METRICS, default="d1")
    common.add_argument("--scale-policy", choices=moments.SCALE_POLICIES, default="sqrt")
    common.add_argument("--output", "-o", help="output file (default: stdout)")

    p = argparse.ArgumentParser(prog="hypertree", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=fn)
        return sp

    sp = add("build", cmd_build, "tree from a point file")
    sp.add_argument("points")
    sp.add_argument("--mode", choices=("fixed", "inductive"), default="fixed")

    sp = add("contains", cmd_contains, "test a cell address")
    sp.add_argument("tree")
    sp.add_argument("coords", nargs="+")

    sp = add("bool", cmd_bool, "set operation")
    sp.add_argument("op", choices=("and", "or", "xor", "diff", "not", "assert"))
    sp.add_argument("a")
    sp.add_argument("b", nargs="?")

    sp = add("slice", cmd_slice, "extract or insert a slice")
    sp.add_argument("mode", choices=("extract", "insert"))
    sp.add_argument("space")
    sp.add_argument("coord")
    sp.add_argument("--mask", required=True, help="comma-separated 0/1 per axis, 1 = fixed")
    sp.add_argument("--slice", help="slice tree file (insert)")

    sp = add("polytope", cmd_polytope, "rasterize the image of the unit cube under a matrix")
    sp.add_argument("matrix")

    sp = add("transform", cmd_transform, "homographic transform")
    sp.add_argument("tree")
    sp.add_argument("matrix")

    sp = add("symmetry", cmd_symmetry, "mirror along axes")
    sp.add_argument("tree")
    sp.add_argument("--axes", required=True, help="comma-separated 0-based axes")

    for name, fn, text in (("hide", cmd_hide, "hidden-part removal"), ("project", cmd_project, "parallel projection")):
        sp = add(name, fn, text)
        sp.add_argument("tree")
        sp.add_argument("--axis", type=int, required=True)

    for name, fn, text in (
        ("adjacency", cmd_adjacency, "adjacency edges"),
        ("label", cmd_label, "connected-component labels"),
        ("segments", cmd_segments, "one tree code per component"),
        ("moments", cmd_moments, "moments up to order 3"),
        ("center", cmd_center, "centered moments"),
        ("normalize", cmd_normalize, "principal frame"),
        ("eigen", cmd_eigen, "Eigen tree"),
        ("stats", cmd_stats, "node count, mass, depth histogram"),
    ):
        sp = add(name, fn, text)
        sp.add_argument("tree")

    sp = add("learn", cmd_learn, "build a learning base from a manifest of 'label treefile' lines")
    sp.add_argument("kind", choices=("spectral", "correlative"))
    sp.add_argument("manifest")
    sp.add_argument("--r-learn", type=int, default=recognition.R_LEARN)

    sp = add("classify", cmd_classify, "classify a tree against a base")
    sp.add_argument("kind", choices=("spectral", "correlative"))
    sp.add_argument("base")
    sp.add_argument("tree")

    sp = add("encode", cmd_encode, "tree code or leaf codes of a tree file")
    sp.add_argument("kind", choices=("tree", "leaves"))
    sp.add_argument("tree")

    sp = add("decode", cmd_decode, "tree file from a code")
    sp.add_argument("code")
    sp.add_argument("--leaves", action="store_true", help="code is a list of leaf codes")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    ctx = _Context(args)
    try:
        args.func(ctx, args)
        ctx.flush()
    except (io.InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # invariant violations and bugs
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
