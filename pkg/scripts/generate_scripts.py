"""Write the shipped proof scripts d5_flop.script and d5_cayley.script.

The generator only lays out the moves; it never runs the engine.  Replay
with ``d5roof verify`` (or ``python -m d5roof verify``) to check them.

    python scripts/generate_scripts.py [--out DIR]
"""

from __future__ import annotations

import argparse
from dataclasses import replace
from pathlib import Path

from d5roof.bundles import O, U_MINUS, U_PLUS, V, Composite, Dual, Twist
from d5roof.chessboard import ChessObject, Script, Step, Via
from d5roof.script import format_script

TT = Composite("Ttilde")
F = Composite("F")
SERRE = (-4, -4)

# a plus-side cell is a white box <O>, a dual block or a forward block
CELLS = {
    "W": [("o", O)],
    "D": [("t", Twist(Dual(TT), -1, 0)), ("o", O), ("u", Dual(U_PLUS))],
    "F": [("u", U_PLUS), ("o", O), ("t", Twist(TT, 1, 0))],
}


def _n(x: int) -> str:
    return f"m{-x}" if x < 0 else str(x)


def oid(kind, c, r, suffix=""):
    return f"{kind}_{_n(c)}_{_n(r)}" + (f"_{suffix}" if suffix else "")


def cell_ids(kind, c, r):
    return [oid(kind, c, r, s) for s, _ in CELLS[kind]]


def initial_objects():
    """Four copies of the 16-object plus-side collection, copy k on row k."""
    objs = []
    for k in range(4):
        for j, kind in enumerate("WWDDFFWW"):
            c = k - 2 + j
            objs += [ChessObject(oid(kind, c, k, s), e, (c, k)) for s, e in CELLS[kind]]
    return objs


class Layout:
    """Tracks the collection while steps are emitted, without any Ext work."""

    def __init__(self, objs):
        self.objs = list(objs)
        self.steps = []
        self.label = ""

    @property
    def ids(self):
        return [o.id for o in self.objs]

    def get(self, i):
        return next(o for o in self.objs if o.id == i)

    def _emit(self, step):
        self.steps.append(replace(step, label=self.label))

    def serre(self, ids, inverse=False):
        ids = list(ids)
        self._emit(Step("serre_inverse" if inverse else "serre", tuple(ids)))
        off = (-SERRE[0], -SERRE[1]) if inverse else SERRE
        moved = [self.get(i).moved(off) for i in ids]
        rest = [o for o in self.objs if o.id not in ids]
        self.objs = rest + moved if inverse else moved + rest

    def _set_order(self, new):
        by = {o.id: o for o in self.objs}
        self.objs = [by[i] for i in new]

    def reorder(self, new):
        assert sorted(new) == sorted(self.ids)
        self._emit(Step("reorder", tuple(new)))
        self._set_order(new)

    def move(self, ids, where):
        self._emit(Step("move", tuple(ids), where=where))
        grp = [i for i in self.ids if i in ids]
        rest = [i for i in self.ids if i not in ids]
        self._set_order(grp + rest if where == "front" else rest + grp)

    def exchange(self, a, b):
        self._emit(Step("exchange", tuple(a), tuple(b)))
        ids = self.ids
        i = ids.index(a[0])
        assert ids[i : i + len(a) + len(b)] == list(a) + list(b), (a, b)
        ids[i : i + len(a) + len(b)] = list(b) + list(a)
        self._set_order(ids)

    def mutate(self, left, o, through, new, via):
        self._emit(Step("mutate_left" if left else "mutate_right", (o,), tuple(through), new=new, via=via))
        objs = [x for x in self.objs if x.id != o]
        ids = [x.id for x in objs]
        k = ids.index(through[0]) if left else ids.index(through[-1]) + 1
        objs.insert(k, new)
        self.objs = objs

    def regroup(self, old, new, vias):
        self._emit(Step("regroup", tuple(old), objects=tuple(new), vias=tuple(vias)))
        i = self.ids.index(old[0])
        self.objs[i : i + len(old)] = list(new)


def stages_1_to_3(lay: Layout):
    W = lambda c, r: cell_ids("W", c, r)  # noqa: E731
    D = lambda c, r: cell_ids("D", c, r)  # noqa: E731
    Fc = lambda c, r: cell_ids("F", c, r)  # noqa: E731

    lay.label = "stage 1"
    lay.serre(W(7, 3) + W(8, 3))
    lay.move(W(-2, 0) + W(-1, 0), "front")
    lay.serre(W(-2, 0) + W(-1, 0), inverse=True)
    # cell names are stable; these four boxes now sit elsewhere
    alias = {(3, -1): (7, 3), (4, -1): (8, 3), (2, 4): (-2, 0), (3, 4): (-1, 0)}
    Wn = lambda c, r: W(*alias.get((c, r), (c, r)))  # noqa: E731

    lay.label = "stage 2"
    new = lay.ids

    def place(ids, before=None, after=None):
        for i in ids:
            new.remove(i)
        k = new.index(before) if before else new.index(after) + 1
        new[k:k] = ids

    for r in range(-1, 3):
        for x in (r + 4, r + 5):
            place(Wn(x, r), before=Fc(x - 1, r + 1)[0])
    for r in range(1, 5):
        for x in (r - 2, r - 1):
            place(Wn(x, r), after=D(x + 1, r - 1)[-1])
    lay.reorder(new)

    lay.label = "stage 3"
    lay.serre(Wn(6, 2) + Fc(5, 3) + Wn(7, 2) + Fc(6, 3))
    moved = {("W", (6, 2)), ("F", (5, 3)), ("W", (7, 2)), ("F", (6, 3)), ("W", (6, 1)), ("F", (5, 2)), ("D", (4, 3)), ("W", (3, 4))}
    names = {"W": Wn, "D": D, "F": Fc}

    def pick(kind, p):
        q = (p[0] - SERRE[0], p[1] - SERRE[1])
        return names[kind](*q) if (kind, q) in moved else names[kind](*p)

    def copy_c(t):
        c, r = t
        return pick("W", (c + 2, r - 2)) + pick("F", (c + 1, r - 1)) + pick("D", (c, r)) + pick("W", (c - 1, r + 1))

    ts = sorted({(k, k - 1) for k in range(4)} | {(k, k) for k in range(4)})
    last = copy_c((0, -1))
    lay.reorder([i for t in ts if t != (0, -1) for i in copy_c(t)] + last)
    return ts, {t: copy_c(t) for t in ts}, last


def stage_4(lay: Layout, t, ids):
    """Turn one copy C(t) into <A(t), A^vee(t + (1,-1))>."""
    c, r = t
    wa, fu, fo, ft, dt, do, du, wb = ids

    def obj(kind, dc, dr, expr):
        return ChessObject(oid(kind, c + dc, r + dr), expr, (c + dc, r + dr))

    def via(name, a, b, dual=False):
        return Via(name, (a + c, b + r), dual)

    lay.label = f"stage 4.1 C({c},{r})"
    lay.exchange([ft], [dt, do])
    lay.exchange([fo], [dt])
    lay.label = f"stage 4.2 C({c},{r})"
    f_new, fv_new = obj("F", 2, 0, F), obj("Fv", -1, -1, Dual(F))
    lay.mutate(False, ft, [du], f_new, via("F_SEQ", 2, 0))
    lay.mutate(True, dt, [fu], fv_new, via("F_SEQ", -1, -1, True))
    lay.label = f"stage 4.3 C({c},{r})"
    lay.exchange([fo], [do])
    v_new, vv_new = obj("V", 1, -1, V), obj("Vv", 0, 0, Dual(V))
    lay.mutate(False, fu, [do], v_new, via("EULER_PLUS", -1, -1))
    lay.mutate(True, du, [fo], vv_new, via("DUAL_EULER_TWIST", 0, 0))
    lay.label = f"stage 4.4 C({c},{r})"
    lay.exchange([wa], [fv_new.id, do])
    um, umv = obj("Um", 1, -1, U_MINUS), obj("Umv", 0, 0, Dual(U_MINUS))
    lay.mutate(True, v_new.id, [wa], um, via("EULER_MINUS", 1, -3))
    lay.exchange([fo, f_new.id], [wb])
    lay.mutate(False, vv_new.id, [wb], umv, via("EULER_MINUS", 0, 2, True))
    lay.label = f"stage 4.5 C({c},{r})"
    lay.exchange([wa], [wb, umv.id, fo])
    lay.exchange([do, um.id], [wb])
    lay.label = f"stage 4.6 C({c},{r})"
    lay.exchange([um.id], [umv.id])


# cells of B(0,0); B(k,k) is this shifted by (k,k)
B_CELLS = [(-1, 0), (-1, 1), (0, -3), (0, -2), (0, -1), (0, 0), (1, -4), (1, -3)]
B_VIAS = (
    [Via("ISO_EULER_MINUS", t) for t in [(0, -3), (0, -2), (0, -1), (0, 0), (1, -4), (1, -3)]]
    + [Via("TAUT_S_MINUS", (0, -2)), Via("TAUT_S_MINUS", (0, -1))]
    + [Via("F_SEQ_MINUS", (1, -2)), Via("F_SEQ_MINUS", (1, -1))]
    + [Via("TAUT_S_MINUS", (0, -2), True), Via("TAUT_S_MINUS", (0, -1), True)]
    + [Via("F_SEQ_MINUS", (-1, -2), True), Via("F_SEQ_MINUS", (-1, -1), True)]
)


def cell_pair(c, r, ids=None):
    ids = ids or {}
    return [
        ChessObject(ids.get((U_MINUS, (c, r)), oid("Um", c, r)), U_MINUS, (c, r)),
        ChessObject(ids.get((O, (c, r)), oid("O", c, r)), O, (c, r)),
    ]


def stage_5(lay: Layout):
    lay.label = "stage 5.1"
    blk = [lay.ids[4 * i : 4 * i + 4] for i in range(16)]  # A(0,-1), A^vee(1,-2), A(0,0), ...
    lay.exchange(blk[13], blk[14])
    lay.serre(blk[13] + blk[15])
    for k in range(3):
        lay.exchange(blk[4 * k + 1], blk[4 * k + 2])

    known = {(o.expr, o.position): o.id for o in lay.objs}
    for k in range(4):
        lay.label = f"stage 5.2 B({k},{k})"
        old = lay.ids[16 * k : 16 * k + 16]
        new = [o for c, r in B_CELLS for o in cell_pair(c + k, r + k, known)]
        vias = [Via(v.name, (v.twist[0] + k, v.twist[1] + k), v.dual) for v in B_VIAS]
        lay.regroup(old, new, vias)

    lay.label = "stage 5.3"
    lay.serre([o.id for o in lay.objs if o.position[0] == 4])
    front = [o.id for o in lay.objs if o.position[0] == -1]
    lay.move(front, "front")
    lay.serre(front, inverse=True)
    by_pos = {(o.expr, o.position): o.id for o in lay.objs}
    lay.reorder([o.id for o in orlov_target(by_pos)])


def orlov_target(ids=None):
    """Four copies of <U-(r), O(r)>_r on S-, column c carrying rows c-5 .. c+2."""
    return [o for c in range(4) for r in range(c - 5, c + 3) for o in cell_pair(c, r, ids)]


def build(mode: str) -> Script:
    objs = initial_objects()
    lay = Layout(objs)
    ts, copies, last = stages_1_to_3(lay)
    lay.label = "stage 4"
    lay.serre(last)
    for t in ts:
        stage_4(lay, t, copies[t])
    stage_5(lay)
    name = "d5_flop" if mode == "blowup" else "d5_cayley"
    return Script(tuple(objs), tuple(lay.steps), tuple(orlov_target()), mode, SERRE, name)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "src" / "d5roof" / "data"))
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for mode in ("blowup", "cayley"):
        script = build(mode)
        path = out / f"{script.name}.script"
        path.write_text(format_script(script), encoding="utf-8")
        print(f"wrote {path} ({len(script.steps)} steps)")


if __name__ == "__main__":
    main()
