"""Command-line front end.

Definition documents are line-oriented.  A stanza starts with an unindented
``kind name`` line and continues with indented ``key value`` lines; ``#``
starts a comment.  Kinds are ``group``, ``gset``, ``object`` and
``morphism``::

    group S3
      cycles (0 1 2),(0 1)
    object coset_S3_C2_over_S3
      group S3
      cosets (0 1)
    object pt_C2
      group C2
      point
    morphism f
      source pt_C2
      target pt_C2
      term 1 x ([0, 3], (0, 0))

A JSON document holding a list of ``{"kind": ..., "name": ..., key: value}``
records is accepted as well; list values stand for repeated keys.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from typing import Iterable

from .burnside import double_burnside_table, hom_basis, hom_rank
from .catalog import by_name
from .category import decompose, objects_isomorphic
from .config import (
    CompositionError,
    Config,
    InvariantError,
    OrderCapExceeded,
    PreconditionError,
    SpancatError,
    configured,
)
from .fuzz import SUITES, run_suite
from .groups import Group, Subgroup, direct_product, group_from_generators
from .gsets import (
    GSet,
    coset_gset,
    empty_gset,
    gset_disjoint_union,
    gset_from_generator_images,
    gset_from_table,
    natural_gset,
    orbit_decomposition,
    point,
    regular_gset,
)
from .spans import CatObject, Morphism, Span, canonical_class, canonicalize, compose, fixed_marks, identity, pair_subgroup

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT, EXIT_CAP, EXIT_SUITE = 0, 1, 2, 3, 4
KINDS = ("group", "gset", "object", "morphism")


class ParseError(SpancatError):
    """Malformed document, unknown name or duplicate definition."""


@dataclass
class Stanza:
    kind: str
    name: str
    line: int
    fields: list[tuple[str, str, int]] = field(default_factory=list)

    def get(self, key: str, default: str | None = None) -> str | None:
        for k, v, _ in self.fields:
            if k == key:
                return v
        return default

    def all(self, key: str) -> list[tuple[str, int]]:
        return [(v, ln) for k, v, ln in self.fields if k == key]

    def has(self, key: str) -> bool:
        return any(k == key for k, _, _ in self.fields)

    def require(self, key: str) -> str:
        v = self.get(key)
        if v is None:
            raise ParseError(f"line {self.line}: {self.kind} {self.name!r} needs a {key!r} field")
        return v


def parse_text(text: str, origin: str = "<input>") -> list[Stanza]:
    stanzas: list[Stanza] = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if not line[0].isspace():
            parts = line.split()
            if len(parts) != 2 or parts[0] not in KINDS:
                raise ParseError(f"{origin}:{ln}: expected '<kind> <name>' with kind in {KINDS}, got {line.strip()!r}")
            stanzas.append(Stanza(parts[0], parts[1], ln))
            continue
        if not stanzas:
            raise ParseError(f"{origin}:{ln}: field outside any stanza")
        key, _, value = line.strip().partition(" ")
        stanzas[-1].fields.append((key, value.strip(), ln))
    return stanzas


def _json_value(v) -> list[str]:
    if isinstance(v, list) and v and all(isinstance(x, (str, list, dict)) for x in v):
        return [_json_scalar(x) for x in v]
    return [_json_scalar(v)]


def _json_scalar(v) -> str:
    if isinstance(v, bool):
        return "" if v else "false"
    if isinstance(v, (int, str)):
        return str(v)
    if isinstance(v, list):
        return " ".join(_json_scalar(x) for x in v)
    raise ParseError(f"unsupported JSON value {v!r}")


def parse_json(text: str, origin: str = "<input>") -> list[Stanza]:
    try:
        records = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{origin}: invalid JSON: {e}") from None
    if isinstance(records, dict):
        records = [records]
    stanzas = []
    for i, rec in enumerate(records):
        if not isinstance(rec, dict) or rec.get("kind") not in KINDS or "name" not in rec:
            raise ParseError(f"{origin}: record {i} needs 'kind' in {KINDS} and 'name'")
        st = Stanza(rec["kind"], str(rec["name"]), i)
        for k, v in rec.items():
            if k not in ("kind", "name"):
                st.fields.extend((k, s, i) for s in _json_value(v))
        stanzas.append(st)
    return stanzas


def parse_document(text: str, origin: str = "<input>") -> list[Stanza]:
    return parse_json(text, origin) if text.lstrip()[:1] in "[{" else parse_text(text, origin)


# ---------------------------------------------------------------------------
# value syntax


def _split_top(s: str) -> list[str]:
    """Split on commas outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    tail = "".join(cur).strip()
    if tail:
        out.append(tail)
    return out


def parse_cycles(token: str, degree: int) -> tuple[int, ...]:
    """Permutation of ``0..degree-1`` from cycle notation such as ``(0 1)(2 3)``."""
    perm = list(range(degree))
    cycles = re.findall(r"\(([^()]*)\)", token)
    if not cycles and token.strip() not in ("()", ""):
        raise ParseError(f"bad cycle notation {token!r}")
    for c in reversed(cycles):
        pts = [int(t) for t in c.replace(",", " ").split()]
        if any(p < 0 or p >= degree for p in pts) or len(set(pts)) != len(pts):
            raise ParseError(f"bad cycle {c!r} for degree {degree}")
        step = {a: b for a, b in zip(pts, pts[1:] + pts[:1])}
        perm = [step.get(perm[i], perm[i]) for i in range(degree)]
    return tuple(perm)


def _ints(s: str) -> list[int]:
    try:
        return [int(t) for t in s.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"expected integers, got {s!r}") from None


@dataclass
class Workspace:
    """Named entities plus the run configuration."""

    config: Config = field(default_factory=Config)
    groups: dict[str, Group] = field(default_factory=dict)
    gsets: dict[str, GSet] = field(default_factory=dict)
    objects: dict[str, CatObject] = field(default_factory=dict)
    morphisms: dict[str, Morphism] = field(default_factory=dict)

    def _table(self, kind: str) -> dict:
        return {"group": self.groups, "gset": self.gsets, "object": self.objects, "morphism": self.morphisms}[kind]

    def add(self, kind: str, name: str, value, where: str = "") -> None:
        table = self._table(kind)
        if name in table:
            raise ParseError(f"{where}duplicate {kind} name {name!r}")
        table[name] = value

    def group(self, name: str) -> Group:
        if name in self.groups:
            return self.groups[name]
        try:
            return by_name(name)
        except (KeyError, ValueError, IndexError):
            raise ParseError(f"unknown group {name!r}") from None

    def object(self, name: str) -> CatObject:
        try:
            return self.objects[name]
        except KeyError:
            raise ParseError(f"unknown object {name!r}") from None

    def morphism(self, name: str) -> Morphism:
        try:
            return self.morphisms[name]
        except KeyError:
            raise ParseError(f"unknown morphism {name!r}") from None

    # -- building -----------------------------------------------------------

    def element(self, G: Group, token: str) -> int:
        token = token.strip()
        if token.startswith("("):
            if G.perms is None:
                raise ParseError(f"group {G.label!r} has no permutations; use element numbers")
            p = parse_cycles(token, len(G.perms[0]))
            try:
                return G.perms.index(p)
            except ValueError:
                raise ParseError(f"{token} is not in {G.label}") from None
        (a,) = _ints(token)
        if not 0 <= a < G.order:
            raise ParseError(f"element {a} out of range for order {G.order}")
        return a

    def define(self, st: Stanza) -> None:
        where = f"line {st.line}: "
        try:
            build = {"group": self._group, "gset": self._gset, "object": self._object, "morphism": self._morphism}
            value = build[st.kind](st)
        except ParseError as e:
            msg = str(e)
            raise ParseError(msg if msg.startswith("line ") else where + msg) from None
        except (InvariantError, PreconditionError, CompositionError) as e:
            raise type(e)(f"{where}{st.kind} {st.name!r}: {e}") from None
        except (ValueError, KeyError) as e:
            raise ParseError(f"{where}{st.kind} {st.name!r}: malformed field ({e})") from None
        self.add(st.kind, st.name, value, where)

    def _group(self, st: Stanza) -> Group:
        if st.has("catalog"):
            G = by_name(st.require("catalog"))
        elif st.has("product"):
            G = self.group(st.require("product").split()[0])
            for n in st.require("product").split()[1:]:
                G = direct_product(G, self.group(n))
        else:
            gens = _split_top(st.require("cycles"))
            if st.has("degree"):
                degree = int(st.require("degree"))
            else:
                degree = 1 + max((int(t) for g in gens for t in re.findall(r"\d+", g)), default=0)
            G = group_from_generators(degree, [parse_cycles(g, degree) for g in gens], label=st.name)
        G.validate()
        return G

    def _gset(self, st: Stanza) -> GSet:
        if st.has("gset"):
            return self.gsets_lookup(st.require("gset"))
        if st.has("union"):
            names = st.require("union").split()
            X = self.gsets_lookup(names[0])
            for n in names[1:]:
                X = gset_disjoint_union(X, self.gsets_lookup(n))
            return X
        G = self.group(st.require("group"))
        if st.has("point"):
            return point(G)
        if st.has("empty"):
            return empty_gset(G)
        if st.has("regular"):
            return regular_gset(G)
        if st.has("natural"):
            return natural_gset(G)
        if st.has("cosets"):
            gens = [self.element(G, t) for t in _split_top(st.get("cosets") or "")]
            return coset_gset(G, Subgroup.generated(G, gens))
        if st.has("images"):
            size = int(st.require("size"))
            gens, images = [], []
            for v, _ in st.all("images"):
                head, _, tail = v.partition(":")
                gens.append(self.element(G, head))
                images.append(_ints(tail))
            return gset_from_generator_images(G, size, gens, images)
        rows = [_ints(v) for v, _ in st.all("row")]
        if not rows:
            raise ParseError(f"gset {st.name!r} needs a construction (point, cosets, regular, images, row, ...)")
        return gset_from_table(G, rows)

    def gsets_lookup(self, name: str) -> GSet:
        if name in self.gsets:
            return self.gsets[name]
        if name in self.objects:
            return self.objects[name].xset
        raise ParseError(f"unknown gset {name!r}")

    def _object(self, st: Stanza) -> CatObject:
        return CatObject.of(self._gset(st), label=st.name)

    def _morphism(self, st: Stanza) -> Morphism:
        a, b = self.object(st.require("source")), self.object(st.require("target"))
        if st.has("identity"):
            if a != b:
                raise ParseError("identity needs source == target")
            return identity(a)
        if st.has("compose"):
            names = st.require("compose").split()
            out = self.morphism(names[-1])
            for n in reversed(names[:-1]):
                out = compose(self.morphism(n), out)
            if (out.source, out.target) != (a, b):
                raise ParseError("composite does not match source/target")
            return out
        if st.has("points"):
            return canonicalize(self._explicit_span(st, a, b))
        terms = {}
        for v, ln in st.all("term"):
            cls, k = self._term(v, ln, a, b)
            terms[cls] = terms.get(cls, 0) + k
        return Morphism.build(a, b, terms)

    _TERM = re.compile(r"^(-?\d+)\s*(?:x\s*)?\(\s*\[([\d,\s]*)\]\s*,\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*\)$")

    def _term(self, v: str, ln: int, a: CatObject, b: CatObject):
        m = self._TERM.match(v.strip())
        if not m:
            raise ParseError(f"line {ln}: term must look like '2 x ([0, 3], (0, 0))', got {v!r}")
        k, stab, y, x = int(m[1]), tuple(sorted(set(_ints(m[2])))), int(m[3]), int(m[4])
        n = a.group.order * b.group.order
        if not stab or any(s >= n for s in stab) or pair_subgroup(b.group, a.group, stab) != stab:
            raise InvariantError(f"line {ln}: {list(stab)} is not a subgroup of the product group")
        if (y, x) not in fixed_marks(a, b, stab):
            raise InvariantError(f"line {ln}: mark {(y, x)} is not fixed by the stabilizer")
        return canonical_class(a, b, stab, (y, x)), k

    def _explicit_span(self, st: Stanza, a: CatObject, b: CatObject) -> Span:
        n = int(st.require("points"))
        G, H = a.group, b.group

        def action(group, key):
            gens, images = [], []
            for v, _ in st.all(key):
                head, _, tail = v.partition(":")
                gens.append(self.element(group, head))
                images.append(_ints(tail))
            if not gens:
                gens, images = [0], [list(range(n))]
            return gset_from_generator_images(group, n, gens, images).act

        span = Span(a, b, action(H, "left"), action(G, "right"), tuple(_ints(st.require("beta"))), tuple(_ints(st.require("alpha"))))
        if len(span.beta) != n or len(span.alpha) != n:
            raise InvariantError("beta and alpha need one entry per point")
        if any(not 0 <= y < b.size for y in span.beta) or any(not 0 <= x < a.size for x in span.alpha):
            raise InvariantError("leg value out of range")
        span.validate()
        return span

    def load(self, text: str, origin: str = "<input>") -> list[Stanza]:
        stanzas = parse_document(text, origin)
        for st in stanzas:
            self.define(st)
        return stanzas


# ---------------------------------------------------------------------------
# rendering


def morphism_json(f: Morphism) -> dict:
    return {
        "source": f.source.label,
        "target": f.target.label,
        "modulus": f.modulus,
        "terms": [{"coeff": k, "stab": list(c.stab), "mark": list(c.mark)} for c, k in f.terms],
    }


def morphism_text(f: Morphism) -> str:
    if f.is_zero():
        return "0"
    return "\n".join(f"{k} x ({list(c.stab)}, {c.mark})" for c, k in f.terms)


def _vec_text(v: Iterable[int]) -> str:
    parts = [(f"b{i}" if c == 1 else f"{c}*b{i}") for i, c in enumerate(v) if c]
    return "+".join(parts).replace("+-", "-") or "0"


def table_json(t) -> dict:
    return {
        "basis": [[list(c.stab), list(c.mark)] for c in t.basis],
        "identity": t.identity_index,
        "coeffs": [[list(e) for e in row] for row in t.coeffs],
    }


def table_text(t, name: str) -> str:
    n = len(t.basis)
    lines = [f"End(pt/{name}): rank {n}", "basis:"]
    for i, c in enumerate(t.basis):
        star = "  <- identity" if i == t.identity_index else ""
        lines.append(f"  b{i} = ({list(c.stab)}, {c.mark}){star}")
    cells = [[_vec_text(e) for e in row] for row in t.coeffs]
    width = max([len(s) for row in cells for s in row] + [3])
    lines.append("products (row o column):")
    lines.append(" " * 6 + " ".join(f"b{j}".rjust(width) for j in range(n)))
    for i, row in enumerate(cells):
        mark = "*" if i == t.identity_index else " "
        lines.append(f"{mark}{('b' + str(i)).ljust(5)}" + " ".join(s.rjust(width) for s in row))
    return "\n".join(lines)


def decomposition_rows(a: CatObject) -> list[dict]:
    rows = []
    for o, S in zip(orbit_decomposition(a.xset), decompose(a).groups):
        rows.append(
            {
                "base_point": o.base_point,
                "orbit": list(o.points),
                "stabilizer": list(o.stabilizer.members),
                "stabilizer_order": S.order,
                "element_orders": [list(p) for p in S.order_histogram],
            }
        )
    return rows


# ---------------------------------------------------------------------------
# entry point


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-d", "--defs", action="append", default=[], metavar="FILE", help="definition document")
    common.add_argument("--max-order", type=int, default=64)
    common.add_argument("--mod", type=int, default=None, help="coefficient modulus (default: integers)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = _Parser(prog="spancat", description="Spans of bisets between fractions X/G.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    d = sub.add_parser("define", parents=[common], help="load definition files and list what they define")
    d.add_argument("files", nargs="*")
    c = sub.add_parser("compose", parents=[common], help="print f o g")
    c.add_argument("f")
    c.add_argument("g")
    t = sub.add_parser("table", parents=[common], help="structure table of End(pt/G)")
    t.add_argument("group")
    sub.add_parser("decompose", parents=[common], help="orbits and stabilizers of an object").add_argument("object")
    i = sub.add_parser("iso", parents=[common], help="are two objects isomorphic")
    i.add_argument("a")
    i.add_argument("b")
    h = sub.add_parser("hom-rank", parents=[common], help="rank of Hom(a, b)")
    h.add_argument("a")
    h.add_argument("b")
    k = sub.add_parser("check", parents=[common], help="run a property suite")
    k.add_argument("suite", choices=sorted(SUITES))
    e = sub.add_parser("export", parents=[common], help="JSON export of a group, table, object or morphism")
    e.add_argument("kind", choices=("group", "table", "object", "morphism"))
    e.add_argument("name")
    return p


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _run(args, ws: Workspace) -> int:
    for path in args.defs + getattr(args, "files", []):
        try:
            with open(path) as fh:
                ws.load(fh.read(), path)
        except OSError as e:
            raise ParseError(f"cannot read {path}: {e.strerror}") from None
    verb = args.verb
    if verb == "define":
        listing = [{"kind": k, "name": n} for k in KINDS for n in ws._table(k)]
        _emit(args, "\n".join(f"{r['kind']} {r['name']}" for r in listing), listing)
    elif verb == "compose":
        f, g = ws.morphism(args.f), ws.morphism(args.g)
        fg = compose(f, g)
        _emit(args, morphism_text(fg), morphism_json(fg))
    elif verb == "table":
        G = ws.group(args.group)
        t = double_burnside_table(G)
        _emit(args, table_text(t, args.group), table_json(t))
    elif verb == "decompose":
        rows = decomposition_rows(ws.object(args.object))
        text = "\n".join(
            f"orbit {r['orbit']}: stabilizer {r['stabilizer']} (order {r['stabilizer_order']})" for r in rows
        )
        _emit(args, text or "(empty)", rows)
    elif verb == "iso":
        same = objects_isomorphic(ws.object(args.a), ws.object(args.b))
        _emit(args, "true" if same else "false", same)
    elif verb == "hom-rank":
        a, b = ws.object(args.a), ws.object(args.b)
        r = hom_rank(a, b)
        if r != len(hom_basis(a, b)):
            raise InvariantError("rank count and basis enumeration disagree")
        _emit(args, str(r), r)
    elif verb == "check":
        rep = run_suite(args.suite, args.seed, args.budget)
        text = "\n".join([rep.summary()] + [f"  counterexample: {f}" for f in rep.failures])
        _emit(args, text, {"suite": rep.suite, "seed": rep.seed, "budget": rep.budget, "checks": rep.checked,
                           "ok": rep.ok, "counterexamples": rep.failures})
        return EXIT_OK if rep.ok else EXIT_SUITE
    elif verb == "export":
        print(json.dumps(_export(ws, args.kind, args.name), indent=2))
    return EXIT_OK


def _export(ws: Workspace, kind: str, name: str) -> dict:
    if kind == "group":
        G = ws.group(name)
        return {"order": G.order, "mul": [list(r) for r in G.mul]}
    if kind == "table":
        return table_json(double_burnside_table(ws.group(name)))
    if kind == "object":
        a = ws.object(name)
        return {"group": {"order": a.group.order, "mul": [list(r) for r in a.group.mul]}, "act": [list(r) for r in a.xset.act]}
    return morphism_json(ws.morphism(name))


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    cfg = Config(max_order=args.max_order, modulus=args.mod, seed=args.seed)
    try:
        with configured(max_order=cfg.max_order, modulus=cfg.modulus, seed=cfg.seed):
            return _run(args, Workspace(cfg))
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OrderCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (InvariantError, PreconditionError, CompositionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
