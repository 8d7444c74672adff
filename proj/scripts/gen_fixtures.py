#!/usr/bin/env python3
"""Writes the bundled category documents and goldens into fixtures/.

Free categories are generated here from their EI quivers with a small,
independent path-biset implementation (tuples of arrow elements modulo the
middle group actions), so the explicit documents can be checked against the
C++ generator.
"""

import itertools
from fractions import Fraction
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
OUT = ROOT / "fixtures"


def compose(a, b):
    return tuple(a[i] for i in b)


def inverse(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


class Group:
    def __init__(self, degree, gens):
        self.degree = degree
        self.gens = [tuple(g) for g in gens]
        ident = tuple(range(degree))
        elems = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for e in frontier:
                for g in self.gens:
                    p = compose(g, e)
                    if p not in elems:
                        elems.add(p)
                        nxt.append(p)
            frontier = nxt
        self.elements = sorted(elems)
        self.identity = ident

    def doc(self, name):
        return {"id": name, "degree": self.degree, "generators": [list(g) for g in self.gens]}


TRIVIAL = Group(1, [])
C2 = Group(2, [[1, 0]])
C3 = Group(3, [[1, 2, 0]])
S3 = Group(3, [[1, 0, 2], [1, 2, 0]])


def sign(p):
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


class Arrow:
    """A transitive biset given by point set and action callables."""

    def __init__(self, name, src, dst, points, left, right):
        self.name, self.src, self.dst = name, src, dst
        self.points = points
        self.left = left    # (h, point) -> point, h an element of Aut(dst)
        self.right = right  # (point, g) -> point, g an element of Aut(src)


class Quiver:
    def __init__(self, objects, arrows):
        self.objects = objects  # list of (id, Group)
        self.arrows = arrows
        self.group = dict(objects)

    def paths(self):
        out = [[a] for a in self.arrows]
        frontier = list(out)
        while frontier:
            nxt = []
            for p in frontier:
                for a in self.arrows:
                    if a.src == p[-1].dst:
                        nxt.append(p + [a])
            out += nxt
            frontier = nxt
        return out

    def canonical(self, path, elems):
        # elems[i] lives on path[i]; middle groups act by (b_{i+1} h^-1, h b_i).
        mids = [self.group[a.dst].elements for a in path[:-1]]
        best = None
        for hs in itertools.product(*mids) if mids else [()]:
            t = list(elems)
            for i, h in enumerate(hs):
                t[i] = path[i].left(h, t[i])
                t[i + 1] = path[i + 1].right(t[i + 1], inverse(h))
            t = tuple(t)
            if best is None or t < best:
                best = t
        return best

    def category(self):
        homs = {}
        for p in self.paths():
            key = (p[0].src, p[-1].dst)
            elems = sorted({self.canonical(p, t) for t in itertools.product(*[a.points for a in p])})
            homs.setdefault(key, []).extend((tuple(a.name for a in p), e) for e in elems)
        return homs

    def explicit(self):
        homs = self.category()
        index = {k: {m: i for i, m in enumerate(v)} for k, v in homs.items()}
        arrows = {a.name: a for a in self.arrows}

        def path_of(names):
            return [arrows[n] for n in names]

        def act_left(key, m, h):
            names, e = m
            p = path_of(names)
            e = list(e)
            e[-1] = p[-1].left(h, e[-1])
            return index[key][(names, self.canonical(p, e))]

        def act_right(key, m, g):
            names, e = m
            p = path_of(names)
            e = list(e)
            e[0] = p[0].right(e[0], g)
            return index[key][(names, self.canonical(p, e))]

        doc = {"mode": "explicit", "objects": [g.doc(n) for n, g in self.objects], "homs": [], "compositions": []}
        for (x, y), ms in homs.items():
            doc["homs"].append({
                "from": x, "to": y, "size": len(ms),
                "left_action": [[act_left((x, y), m, h) for m in ms] for h in self.group[y].gens],
                "right_action": [[act_right((x, y), m, g) for m in ms] for g in self.group[x].gens],
            })
        for (x, y), inner in homs.items():
            for (y2, z), outer in homs.items():
                if y2 != y:
                    continue
                table = []
                for o in outer:
                    row = []
                    for i in inner:
                        names = i[0] + o[0]
                        e = self.canonical(path_of(names), i[1] + o[1])
                        row.append(index[(x, z)][(names, e)])
                    table.append(row)
                doc["compositions"].append({"outer": [y, z], "inner": [x, y], "table": table})
        return doc

    def ei_quiver(self):
        doc = {"mode": "ei-quiver", "objects": [g.doc(n) for n, g in self.objects], "homs": []}
        for a in self.arrows:
            pts = a.points
            doc["homs"].append({
                "from": a.src, "to": a.dst, "size": len(pts),
                "left_action": [[pts.index(a.left(h, p)) for p in pts] for h in self.group[a.dst].gens],
                "right_action": [[pts.index(a.right(p, g)) for p in pts] for g in self.group[a.src].gens],
            })
        return doc


def point_arrow(name, src, dst):
    return Arrow(name, src, dst, [0], lambda h, p: p, lambda p, g: p)


def example_2_10():
    objs = [(n, TRIVIAL) for n in ["a", "b", "c", "d"]]
    return Quiver(objs, [point_arrow("alpha", "a", "b"), point_arrow("beta", "b", "c"), point_arrow("gamma", "c", "d")])


def example_2_11():
    # alpha fixed by g; g swaps beta1 and beta2.
    objs = [("x", TRIVIAL), ("y", C2), ("z", TRIVIAL)]
    alpha = point_arrow("alpha", "x", "y")
    beta = Arrow("beta", "y", "z", [0, 1], lambda h, p: p, lambda p, g: p if g == (0, 1) else 1 - p)
    return Quiver(objs, [alpha, beta])


def example_4_3():
    objs = [("G", C2), ("H", S3), ("K", S3), ("L", C3)]
    # O1: H acts through its sign on two points, G swaps them.
    o1 = Arrow("O1", "G", "H", [0, 1],
               lambda h, p: p if sign(h) == 1 else 1 - p,
               lambda p, g: p if g == (0, 1) else 1 - p)
    # O2: S3 with K on the left and H on the right, both by multiplication.
    o2 = Arrow("O2", "H", "K", list(S3.elements), lambda k, s: compose(k, s), lambda s, h: compose(s, h))
    o3 = point_arrow("O3", "H", "L")
    return Quiver(objs, [o1, o2, o3])


def example_4_4():
    # Hom(x, y) = S3; C2 acts on the right through the transposition (0 1).
    embed = {(0, 1): (0, 1, 2), (1, 0): (1, 0, 2)}
    return Quiver([("x", C2), ("y", S3)],
                  [Arrow("alpha", "x", "y", list(S3.elements),
                         lambda h, s: compose(h, s), lambda s, g: compose(s, embed[g]))])


def example_6_6():
    return Quiver([("x", TRIVIAL), ("y", S3)],
                  [Arrow("alpha", "x", "y", list(S3.elements), lambda h, s: compose(h, s), lambda s, g: s)])


def example_2_10_minus_beta():
    # The free category on a->b->c->d without beta: beta*alpha and gamma*beta stay.
    objs = [TRIVIAL.doc(n) for n in ["a", "b", "c", "d"]]
    homs = [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("a", "d")]
    return {
        "mode": "explicit",
        "objects": objs,
        "homs": [{"from": x, "to": y, "size": 1, "left_action": [], "right_action": []} for x, y in homs],
        "compositions": [
            {"outer": ["b", "d"], "inner": ["a", "b"], "table": [[0]]},
            {"outer": ["c", "d"], "inner": ["a", "c"], "table": [[0]]},
        ],
    }


def example_2_11_minus_g():
    objs = [TRIVIAL.doc(n) for n in ["x", "y", "z"]]
    return {
        "mode": "explicit",
        "objects": objs,
        "homs": [
            {"from": "x", "to": "y", "size": 1, "left_action": [], "right_action": []},
            {"from": "y", "to": "z", "size": 2, "left_action": [], "right_action": []},
            {"from": "x", "to": "z", "size": 1, "left_action": [], "right_action": []},
        ],
        "compositions": [{"outer": ["y", "z"], "inner": ["x", "y"], "table": [[0], [0]]}],
    }


def example_2_14():
    return {"mode": "explicit", "objects": [C2.doc("x")], "homs": [], "compositions": []}


def bad_skeletal():
    return {
        "mode": "explicit",
        "objects": [TRIVIAL.doc("x"), TRIVIAL.doc("y")],
        "homs": [
            {"from": "x", "to": "y", "size": 1, "left_action": [], "right_action": []},
            {"from": "y", "to": "x", "size": 1, "left_action": [], "right_action": []},
        ],
        "compositions": [],
    }


def bad_assoc():
    # hom(a, d) has two points; the two bracketings of gamma*beta*alpha disagree.
    objs = [TRIVIAL.doc(n) for n in ["a", "b", "c", "d"]]
    pairs = [("a", "b"), ("b", "c"), ("c", "d"), ("a", "c"), ("b", "d")]
    homs = [{"from": x, "to": y, "size": 1, "left_action": [], "right_action": []} for x, y in pairs]
    homs.append({"from": "a", "to": "d", "size": 2, "left_action": [], "right_action": []})
    return {
        "mode": "explicit",
        "objects": objs,
        "homs": homs,
        "compositions": [
            {"outer": ["b", "c"], "inner": ["a", "b"], "table": [[0]]},
            {"outer": ["c", "d"], "inner": ["b", "c"], "table": [[0]]},
            {"outer": ["b", "d"], "inner": ["a", "b"], "table": [[0]]},
            {"outer": ["c", "d"], "inner": ["a", "c"], "table": [[1]]},
        ],
    }


P = 13


def mat_mod(m):
    def red(v):
        v = Fraction(v)
        return v.numerator * pow(v.denominator, -1, P) % P

    return [[red(v) for v in row] for row in m]


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return out


def v2_matrix(perm):
    # V2 inside k^3 with basis w = e0 + e1 - 2 e2, w' = e0 - e1; coordinates of perm(w), perm(w').
    def act(vec):
        out = [0, 0, 0]
        for i, v in enumerate(vec):
            out[perm[i]] += v
        return out

    def coords(vec):
        # vec = a w + b w': third coordinate is -2a, first minus second is 2b.
        a = Fraction(vec[2], -2)
        b = Fraction(vec[0] - vec[1], 2)
        assert [a + b, a - b, -2 * a] == vec
        return a, b

    cols = [coords(act([1, 1, -2])), coords(act([1, -1, 0]))]
    return [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]


def example_7_3_rep():
    gx = [[[1, 0, 0], [0, 1, 0], [0, 0, -1]]]
    gy = []
    for h in S3.gens:
        gy.append(block_diag([[1]], [[sign(h)]], v2_matrix(h), v2_matrix(h)))
    lam = {(1, 1): 1, (2, 1): 2, (3, 2): 3, (1, 3): 4, (2, 3): 5, (3, 4): 6, (1, 5): 7, (2, 5): 8, (3, 6): 9}
    phi = [[lam.get((i, j), 0) for i in (1, 2, 3)] for j in range(1, 7)]
    return {
        "p": P,
        "objects": [
            {"id": "x", "dim": 3, "generator_matrices": [mat_mod(m) for m in gx]},
            {"id": "y", "dim": 6, "generator_matrices": [mat_mod(m) for m in gy]},
        ],
        "alpha_matrices": [{"rep_index": 0, "matrix": mat_mod(phi)}],
    }


def golden(vertices, arrows):
    """vertices: {object: count}; arrows: (source vertex, target vertex, mult) with names object:Xi."""
    return {"vertex_counts": vertices, "arrows": [{"source": s, "target": t, "mult": m} for s, t, m in arrows]}


# Irreducible labels: X0 is trivial; for C2 and S3, X1 is the sign; X2 of S3 is V2.
GOLDENS = {
    "example_4_3": golden({"G": 2, "H": 3, "K": 3, "L": 3}, [
        ("G:X0", "H:X0", 1), ("G:X1", "H:X1", 1), ("H:X0", "K:X0", 1),
        ("H:X0", "L:X0", 1), ("H:X1", "K:X1", 1), ("H:X2", "K:X2", 1)]),
    "example_4_4": golden({"x": 2, "y": 3}, [
        ("x:X0", "y:X0", 1), ("x:X0", "y:X2", 1), ("x:X1", "y:X1", 1), ("x:X1", "y:X2", 1)]),
    "example_6_6": golden({"x": 1, "y": 3}, [("x:X0", "y:X0", 1), ("x:X0", "y:X1", 1), ("x:X0", "y:X2", 2)]),
    "example_2_10": golden({"a": 1, "b": 1, "c": 1, "d": 1}, [
        ("a:X0", "b:X0", 1), ("b:X0", "c:X0", 1), ("c:X0", "d:X0", 1)]),
    "example_2_14": golden({"x": 2}, []),
}


def write(name, doc):
    path = OUT / name
    path.write_text(json.dumps(doc, indent=1) + "\n")


def main():
    OUT.mkdir(exist_ok=True)
    (OUT / "golden").mkdir(exist_ok=True)
    write("example_2_10.json", example_2_10().explicit())
    write("example_2_10_minus_beta.json", example_2_10_minus_beta())
    write("example_2_11.json", example_2_11().explicit())
    write("example_2_11_minus_g.json", example_2_11_minus_g())
    write("example_2_14.json", example_2_14())
    write("example_4_3.json", example_4_3().explicit())
    write("example_4_3_quiver.json", example_4_3().ei_quiver())
    write("example_4_4.json", example_4_4().explicit())
    write("example_6_6.json", example_6_6().explicit())
    write("example_7_3_rep.json", example_7_3_rep())
    write("bad_skeletal.json", bad_skeletal())
    write("bad_assoc.json", bad_assoc())
    (OUT / "malformed.json").write_text('{"mode": "explicit", "objects": [\n')
    for name, doc in GOLDENS.items():
        write(f"golden/{name}.quiver.json", doc)


if __name__ == "__main__":
    main()
