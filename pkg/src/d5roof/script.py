"""Text formats: bundle expressions and proof scripts.

Expression grammar (whitespace-insensitive)::

    sum     := product ("+" product)*
    product := postfix ("*" postfix)*
    postfix := primary ("(" int "," int ")")*
    primary := atom | "(" sum ")" | "dual(" sum ")" | "wedge" k "(" sum ")"
             | "sym" k "(" sum ")" | "ext(" sum "," sum ")"
    atom    := O | U+ | U- | V | Ttilde | Ttilde- | T4 | Ttilde4 | F
             | E[a1 .. a5] | E+[..] | E-[..] | Rep[..]

Script lines (``#`` starts a comment)::

    name d5_flop
    mode blowup
    serre_offset -4 -4
    object <id> <expr> @ <c> <r>
    step <label>
    serre <ids> | serre_inverse <ids> | reorder <ids>
    move front|end <ids>        move before|after <anchor> <ids>
    exchange <ids> | <ids>      orth <ids> | <ids> [both]
    mutate_left <id> through <ids> -> <newid> <expr> @ <c> <r> [via <via>]
    regroup <ids>
      -> <newid> <expr> @ <c> <r>     (one line per new object)
      using <via> <via> ...
    target <id> <expr> @ <c> <r>

where ``<via>`` is ``NAME``, ``NAME(a,b)``, ``dual(NAME)`` or ``dual(NAME)(a,b)``.
"""

from __future__ import annotations

import re

from .bundles import (
    ATOMS,
    Atom,
    BundleExpr,
    BundleError,
    Composite,
    Dual,
    Extension,
    Irr,
    Rep,
    Space,
    Sum,
    Sym,
    Tensor,
    Twist,
    Wedge,
)
from .chessboard import ChessObject, Script, Step, Via

__all__ = ["ParseError", "parse_expr", "format_expr", "parse_script", "format_script", "load_script"]


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        self.line, self.col = line, col
        where = f"line {line}, col {col}: " if line else (f"col {col}: " if col else "")
        super().__init__(where + msg)


# ---------------------------------------------------------------------------
# expressions

_TOKEN = re.compile(
    r"\s*(?:(?P<irr>(?:E\+|E-|E|Rep)\[)|(?P<name>Ttilde4|Ttilde-|Ttilde|T4|U\+|U-|O|V|F)(?![A-Za-z0-9])"
    r"|(?P<word>dual|wedge|sym|ext)|(?P<int>-?\d+)|(?P<sym>[()\[\],*+]))"
)
_IRR_SPACE = {"E[": Space.ROOF, "E+[": Space.PLUS, "E-[": Space.MINUS}
_SPACE_PREFIX = {v: k[:-1] for k, v in _IRR_SPACE.items()}


class _Lexer:
    def __init__(self, text: str, line: int = 0, offset: int = 0):
        self.text, self.line, self.offset = text, line, offset
        self.toks = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                start = pos + len(text[pos:]) - len(text[pos:].lstrip())
                bad = re.match(r"[A-Za-z0-9+\-]+", text[start:])
                word = bad.group(0) if bad else text[start]
                self.error(f"unknown token {word!r}", start)
            kind = m.lastgroup
            start = m.start(kind)
            self.toks.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def error(self, msg, pos=None):
        if pos is None:
            pos = self.toks[self.i][2] if self.i < len(self.toks) else len(self.text)
        raise ParseError(msg, self.line, self.offset + pos + 1)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None:
            self.error("unexpected end of expression")
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            self.error(f"expected {value or kind}, got {tok[1]!r}")
        self.i += 1
        return tok

    def at(self, value):
        return self.peek()[1] == value


def _parse_sum(lx: _Lexer):
    e = _parse_product(lx)
    while lx.at("+"):
        lx.take()
        e = Sum(e, _parse_product(lx))
    return e


def _parse_product(lx: _Lexer):
    e = _parse_postfix(lx)
    while lx.at("*"):
        lx.take()
        e = Tensor(e, _parse_postfix(lx))
    return e


def _int(lx: _Lexer) -> int:
    return int(lx.take("int")[1])


def _parse_postfix(lx: _Lexer):
    e = _parse_primary(lx)
    while lx.at("("):
        lx.take()
        a = _int(lx)
        lx.take(value=",")
        b = _int(lx)
        lx.take(value=")")
        e = Twist(e, a, b)
    return e


def _parse_primary(lx: _Lexer):
    kind, val, pos = lx.peek()
    if kind == "name":
        lx.take()
        return Atom(val) if val in ATOMS else Composite(val)
    if kind == "irr":
        lx.take()
        nums = []
        while lx.peek()[0] == "int":
            nums.append(_int(lx))
        lx.take(value="]")
        if len(nums) != 5:
            lx.error(f"{val}..] needs 5 integers, got {len(nums)}", pos)
        try:
            if val == "Rep[":
                return Rep(tuple(nums))
            return Irr(tuple(nums), _IRR_SPACE[val])
        except BundleError as exc:
            lx.error(str(exc), pos)
    if kind == "word":
        lx.take()
        k = None
        if val in ("wedge", "sym"):
            k = _int(lx)
            if k < 0:
                lx.error(f"{val} needs a nonnegative degree", pos)
        lx.take(value="(")
        inner = _parse_sum(lx)
        if val == "ext":
            lx.take(value=",")
            quot = _parse_sum(lx)
            lx.take(value=")")
            return Extension(inner, quot)
        lx.take(value=")")
        if val == "dual":
            return Dual(inner)
        return Wedge(k, inner) if val == "wedge" else Sym(k, inner)
    if val == "(":
        lx.take()
        e = _parse_sum(lx)
        lx.take(value=")")
        return e
    if kind is None:
        lx.error("unexpected end of expression")
    lx.error(f"unexpected {val!r}")


def parse_expr(text: str, line: int = 0, offset: int = 0) -> BundleExpr:
    lx = _Lexer(text, line, offset)
    if not lx.toks:
        raise ParseError("empty expression", line, offset + 1)
    e = _parse_sum(lx)
    if lx.peek()[0] is not None:
        lx.error(f"trailing input {lx.peek()[1]!r}")
    return e


_PREC = {Sum: 1, Tensor: 2}


def format_expr(e: BundleExpr) -> str:
    """Canonical text; ``parse_expr(format_expr(e)) == e``."""
    return _fmt(e, 0)


def _fmt(e, ctx: int) -> str:
    if isinstance(e, Atom | Composite):
        return e.name
    if isinstance(e, Irr):
        return f"{_SPACE_PREFIX[e.space]}[{' '.join(map(str, e.lam))}]"
    if isinstance(e, Rep):
        return f"Rep[{' '.join(map(str, e.lam))}]"
    if isinstance(e, Dual):
        return f"dual({_fmt(e.expr, 0)})"
    if isinstance(e, Wedge):
        return f"wedge{e.k}({_fmt(e.expr, 0)})"
    if isinstance(e, Sym):
        return f"sym{e.k}({_fmt(e.expr, 0)})"
    if isinstance(e, Extension):
        return f"ext({_fmt(e.sub, 0)}, {_fmt(e.quot, 0)})"
    if isinstance(e, Twist):
        return f"{_fmt(e.expr, 3)}({e.a},{e.b})"
    if isinstance(e, Sum | Tensor):
        p = _PREC[type(e)]
        op = " + " if isinstance(e, Sum) else " * "
        # left-associative: the right operand needs brackets at equal precedence
        s = _fmt(e.left, p) + op + _fmt(e.right, p + 1)
        return f"({s})" if ctx > p else s
    raise TypeError(f"cannot format {type(e).__name__}")


# ---------------------------------------------------------------------------
# scripts

_VIA = re.compile(r"^(?:dual\((?P<dn>[A-Z0-9_]+)\)|(?P<n>[A-Z0-9_]+))(?:\((?P<a>-?\d+),(?P<b>-?\d+)\))?$")


def _parse_via(text: str, line: int) -> Via:
    m = _VIA.match(text.replace(" ", ""))
    if m is None:
        raise ParseError(f"bad via {text!r}", line)
    twist = (int(m["a"]), int(m["b"])) if m["a"] is not None else (0, 0)
    return Via(m["dn"] or m["n"], twist, m["dn"] is not None)


def _format_via(v: Via) -> str:
    core = f"dual({v.name})" if v.dual else v.name
    return core if tuple(v.twist) == (0, 0) else f"{core}({v.twist[0]},{v.twist[1]})"


_ID = re.compile(r"^[A-Za-z_][A-Za-z0-9_.']*$")


def _ids(words, line) -> tuple:
    for w in words:
        if not _ID.match(w):
            raise ParseError(f"bad object id {w!r}", line)
    return tuple(words)


def _split_bar(words, line):
    if words.count("|") != 1:
        raise ParseError("expected exactly one '|' between the two blocks", line)
    k = words.index("|")
    a, b = words[:k], words[k + 1 :]
    if not a or not b:
        raise ParseError("both blocks must be nonempty", line)
    return _ids(a, line), _ids(b, line)


def _parse_object(text: str, line: int, col: int) -> ChessObject:
    """``<id> <expr> @ <c> <r>``"""
    m = re.match(r"^(\S+)\s+(.*?)\s*@\s*(-?\d+)\s+(-?\d+)\s*$", text)
    if m is None:
        raise ParseError("expected '<id> <expr> @ <c> <r>'", line, col)
    oid = _ids([m.group(1)], line)[0]
    expr = parse_expr(m.group(2), line, col + m.start(2))
    return ChessObject(oid, expr, (int(m.group(3)), int(m.group(4))))


def _format_object(o: ChessObject) -> str:
    return f"{o.id} {format_expr(o.expr)} @ {o.position[0]} {o.position[1]}"


def parse_script(text: str) -> Script:
    name, mode, offset = "", "blowup", (-4, -4)
    objects, steps, target = [], [], []
    label = ""
    pending = None  # regroup under construction: [ids, objects, vias, label, line]

    def flush():
        nonlocal pending
        if pending is None:
            return
        ids, objs, vias, lab, line = pending
        if not objs:
            raise ParseError("regroup lists no new objects", line)
        steps.append(Step("regroup", ids, objects=tuple(objs), vias=tuple(vias), label=lab))
        pending = None

    for n, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        indent = len(body) - len(body.lstrip())
        head, _, rest = body.strip().partition(" ")
        rest = rest.strip()
        col = indent + len(head) + 2
        words = rest.split()
        try:
            if head in ("->", "using"):
                if pending is None:
                    raise ParseError(f"'{head}' outside a regroup", n, indent + 1)
                if head == "->":
                    pending[1].append(_parse_object(rest, n, col))
                else:
                    packed = re.sub(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", r"(\1,\2)", rest)
                    pending[2].extend(_parse_via(w, n) for w in packed.split())
                continue
            flush()
            if head == "regroup":
                if not words:
                    raise ParseError("regroup needs the ids it replaces", n)
                pending = [_ids(words, n), [], [], label, n]
            elif head == "name":
                name = rest
            elif head == "mode":
                if rest not in ("blowup", "cayley"):
                    raise ParseError(f"mode must be blowup or cayley, got {rest!r}", n)
                mode = rest
            elif head == "serre_offset":
                if len(words) != 2:
                    raise ParseError("serre_offset needs two integers", n)
                offset = (int(words[0]), int(words[1]))
            elif head == "object":
                objects.append(_parse_object(rest, n, col))
            elif head == "target":
                target.append(_parse_object(rest, n, col))
            elif head == "step":
                if not rest:
                    raise ParseError("step needs a label", n)
                label = rest
            elif head in ("serre", "serre_inverse", "reorder"):
                if not words:
                    raise ParseError(f"{head} needs at least one id", n)
                steps.append(Step(head, _ids(words, n), label=label))
            elif head == "move":
                if not words or words[0] not in ("front", "end", "before", "after"):
                    raise ParseError("move needs front, end, before or after", n)
                where = words[0]
                anchor = ""
                if where in ("before", "after"):
                    if len(words) < 3:
                        raise ParseError(f"move {where} needs an anchor and ids", n)
                    anchor = _ids([words[1]], n)[0]
                    ids = words[2:]
                else:
                    ids = words[1:]
                if not ids:
                    raise ParseError("move needs ids", n)
                steps.append(Step("move", _ids(ids, n), where=where, anchor=anchor, label=label))
            elif head == "exchange":
                a, b = _split_bar(words, n)
                steps.append(Step("exchange", a, b, label=label))
            elif head == "orth":
                both = bool(words) and words[-1] == "both"
                a, b = _split_bar(words[:-1] if both else words, n)
                steps.append(Step("orth", a, b, where="both" if both else "", label=label))
            elif head in ("mutate_left", "mutate_right"):
                steps.append(_parse_mutation(head, rest, n, col, label))
            else:
                raise ParseError(f"unknown directive {head!r}", n, indent + 1)
        except ParseError as exc:
            if not exc.line:
                raise ParseError(str(exc), n) from None
            raise
        except (BundleError, ValueError) as exc:
            raise ParseError(str(exc), n) from None
    flush()
    return Script(tuple(objects), tuple(steps), tuple(target), mode, offset, name)


def _parse_mutation(head, rest, n, col, label) -> Step:
    m = re.match(r"^(\S+)\s+through\s+(.+?)\s*->\s*(.*)$", rest)
    if m is None:
        raise ParseError(f"expected '{head} <id> through <ids> -> <new object>'", n)
    oid = _ids([m.group(1)], n)[0]
    through = _ids(m.group(2).split(), n)
    tail = m.group(3)
    via = None
    vm = re.search(r"\s+via\s+(\S+(?:\(\s*-?\d+\s*,\s*-?\d+\s*\))?)\s*$", tail)
    if vm:
        via = _parse_via(vm.group(1), n)
        tail = tail[: vm.start()]
    new = _parse_object(tail, n, col + m.start(3))
    return Step(head, (oid,), through, new=new, via=via, label=label)


def format_script(s: Script) -> str:
    out = []
    if s.name:
        out.append(f"name {s.name}")
    out.append(f"mode {s.mode}")
    out.append(f"serre_offset {s.serre_offset[0]} {s.serre_offset[1]}")
    out.append("")
    out.extend(f"object {_format_object(o)}" for o in s.objects)
    label = None
    for st in s.steps:
        if st.label != label:
            out.append("")
            if st.label:
                out.append(f"step {st.label}")
            label = st.label
        out.append(_format_step(st))
    if s.target:
        out.append("")
        out.extend(f"target {_format_object(o)}" for o in s.target)
    return "\n".join(out) + "\n"


def _format_step(st: Step) -> str:
    k = st.kind
    if k in ("serre", "serre_inverse", "reorder"):
        return f"{k} {' '.join(st.ids)}"
    if k == "move":
        anchor = f" {st.anchor}" if st.where in ("before", "after") else ""
        return f"move {st.where}{anchor} {' '.join(st.ids)}"
    if k == "regroup":
        lines = [f"regroup {' '.join(st.ids)}"]
        lines += [f"  -> {_format_object(o)}" for o in st.objects]
        if st.vias:
            lines.append("  using " + " ".join(_format_via(v) for v in st.vias))
        return "\n".join(lines)
    if k in ("exchange", "orth"):
        tail = " both" if st.where == "both" else ""
        return f"{k} {' '.join(st.ids)} | {' '.join(st.other)}{tail}"
    via = f" via {_format_via(st.via)}" if st.via is not None else ""
    return f"{k} {st.ids[0]} through {' '.join(st.other)} -> {_format_object(st.new)}{via}"


def load_script(path) -> Script:
    with open(path, encoding="utf-8") as fh:
        return parse_script(fh.read())

