"""Root systems for the finite Coxeter types.

Crystallographic families (A, B, D, F4, E6-E8) are realized with exact
rational coordinates in the standard models; the roots of A_n live in n+1
dimensions (e_i - e_j), those of B_n/D_n in n dimensions.  The dihedral and
H families are realized over floats in the basis of simple roots, with the
bilinear form -cos(pi/m_rs); floats are only touched while the tables are
built.  Everything downstream works on integer root indices.

A group element is stored as a signed permutation of positive-root indices:
``perm[i] == +-(j+1)`` means the i-th positive root maps to +-(the j-th).
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .descriptors import CoxeterDescriptor, from_spec

FLOAT_KEY_DIGITS = 9
SCHEMA = "coxex.rootsystem/1"


def _key(vec, exact):
    if exact:
        return vec
    return tuple(round(x, FLOAT_KEY_DIGITS) + 0.0 for x in vec)


class RootSystem:
    """Indexed positive roots plus per-generator root permutation tables."""

    def __init__(self, components, positive_roots, coeffs, simple_indices,
                 gen_tables, bilinear_form, exact):
        self.components = tuple(components)
        self.positive_roots = tuple(tuple(v) for v in positive_roots)
        self.coeffs = tuple(tuple(c) for c in coeffs)
        self.simple_indices = tuple(simple_indices)
        self.gen_tables = tuple(tuple(t) for t in gen_tables)
        self.bilinear_form = bilinear_form
        self.exact = exact
        self.rank = len(simple_indices)
        self.num_positive = len(self.positive_roots)
        self._index = {_key(v, exact): i for i, v in enumerate(self.positive_roots)}
        self._reflections: list | None = None
        self._bfs = None  # filled by elements.bfs_tables

    @property
    def name(self) -> str:
        return "x".join(d.name for d in self.components)

    @property
    def is_irreducible(self) -> bool:
        return len(self.components) == 1

    @property
    def family(self) -> str | None:
        """Family letter for irreducible systems, else None."""
        return self.components[0].family if self.is_irreducible else None

    def order(self) -> int:
        n = 1
        for d in self.components:
            n *= d.order()
        return n

    def full_mask(self) -> int:
        return (1 << self.num_positive) - 1

    def index_of(self, vec) -> int:
        """Index of a positive root given by its coordinate vector."""
        return self._index[_key(vec, self.exact)]

    def signed_index_of(self, vec) -> int:
        k = _key(vec, self.exact)
        if k in self._index:
            return self._index[k] + 1
        neg = _key(tuple(-x for x in vec), self.exact)
        if neg in self._index:
            return -(self._index[neg] + 1)
        if not self.exact:
            # rounded keys can flip their last digit when a vector was reached
            # along a different float path; fall back to a tolerance scan
            for i, root in enumerate(self.positive_roots):
                if max(abs(a - b) for a, b in zip(root, vec)) < 1e-6:
                    return i + 1
                if max(abs(a + b) for a, b in zip(root, vec)) < 1e-6:
                    return -(i + 1)
        raise KeyError(f"vector {vec} is not a root")

    def generator_table(self, r: int) -> tuple[int, ...]:
        return self.gen_tables[r]

    def coeff_support(self, i: int) -> tuple[int, ...]:
        c = self.coeffs[i]
        if self.exact:
            return tuple(j for j, x in enumerate(c) if x != 0)
        return tuple(j for j, x in enumerate(c) if abs(x) > 1e-9)

    def reflection_table(self, i: int) -> tuple[int, ...]:
        """Root permutation of the reflection through positive root i."""
        if self._reflections is None:
            self._reflections = [None] * self.num_positive
        if self._reflections[i] is None:
            alpha = self.positive_roots[i]
            nn = _dot(self, alpha, alpha)
            table = []
            for beta in self.positive_roots:
                k = 2 * _dot(self, alpha, beta) / nn
                img = tuple(b - k * a for a, b in zip(alpha, beta))
                table.append(self.signed_index_of(img))
            self._reflections[i] = tuple(table)
        return self._reflections[i]

    def root_label(self, i: int) -> str:
        """Standard-basis name like "e2-e5" (exact systems with 0/+-1 entries)."""
        return root_label(self.positive_roots[i])

    def index_of_label(self, label: str) -> int:
        vec = _vector_of_label(label, len(self.positive_roots[0]))
        return self.index_of(vec)

    def labels_of_bits(self, bits: int) -> frozenset[str]:
        return frozenset(self.root_label(i) for i in _bit_indices(bits))

    def to_json_dict(self) -> dict:
        if self.exact:
            roots = [[str(Fraction(x)) for x in v] for v in self.positive_roots]
            coeffs = [list(c) for c in self.coeffs]
        else:
            roots = [[repr(float(x)) for x in v] for v in self.positive_roots]
            coeffs = [[repr(float(x)) for x in c] for c in self.coeffs]
        return {
            "schema": SCHEMA,
            "descriptor": [
                {"family": d.family, "rank": d.rank, "m": d.m} for d in self.components
            ],
            "exact": self.exact,
            "roots": roots,
            "coeffs": coeffs,
            "simple_indices": list(self.simple_indices),
            "generator_tables": [list(t) for t in self.gen_tables],
        }

    def __repr__(self):
        return f"RootSystem({self.name}, positive={self.num_positive})"


def _bit_indices(bits: int):
    i = 0
    while bits:
        if bits & 1:
            yield i
        bits >>= 1
        i += 1


def root_label(vec) -> str:
    terms = []
    for i, x in enumerate(vec, start=1):
        if x == 0:
            continue
        if x == 1:
            terms.append(("+", i))
        elif x == -1:
            terms.append(("-", i))
        else:
            raise ValueError(f"root {vec} has no e-basis label")
    if not terms:
        raise ValueError("zero vector")
    out = []
    for pos, (sign, i) in enumerate(terms):
        if pos == 0 and sign == "+":
            out.append(f"e{i}")
        else:
            out.append(f"{sign}e{i}")
    return "".join(out)


def _vector_of_label(label: str, dim: int):
    vec = [Fraction(0)] * dim
    tok = label.replace("-", " -").replace("+", " +").split()
    for t in tok:
        sign = 1
        if t[0] in "+-":
            sign = 1 if t[0] == "+" else -1
            t = t[1:]
        if not t.startswith("e"):
            raise ValueError(f"bad root label {label!r}")
        vec[int(t[1:]) - 1] = Fraction(sign)
    return tuple(vec)


def _dot(rs_or_form, v, w):
    if isinstance(rs_or_form, RootSystem):
        if rs_or_form.exact:
            return sum(a * b for a, b in zip(v, w))
        form = rs_or_form.bilinear_form
        return sum(v[i] * form[i][j] * w[j] for i in range(len(v)) for j in range(len(w)))
    raise TypeError


def _simple_vectors_exact(components):
    """Block-diagonal standard simple roots, exact families only."""
    blocks = []
    for d in components:
        fam, n = d.family, d.rank
        if fam == "A":
            dim = n + 1
            vecs = []
            for i in range(n):
                v = [Fraction(0)] * dim
                v[i] = Fraction(1)
                v[i + 1] = Fraction(-1)
                vecs.append(v)
        elif fam in ("B", "D"):
            dim = n
            vecs = []
            for i in range(n - 1):
                v = [Fraction(0)] * dim
                v[i] = Fraction(1)
                v[i + 1] = Fraction(-1)
                vecs.append(v)
            last = [Fraction(0)] * dim
            if fam == "B":
                last[n - 1] = Fraction(1)
            else:
                last[n - 2] = Fraction(1)
                last[n - 1] = Fraction(1)
            vecs.append(last)
        elif fam == "F4":
            dim = 4
            h = Fraction(1, 2)
            vecs = [
                [Fraction(0), Fraction(1), Fraction(-1), Fraction(0)],
                [Fraction(0), Fraction(0), Fraction(1), Fraction(-1)],
                [Fraction(0), Fraction(0), Fraction(0), Fraction(1)],
                [h, -h, -h, -h],
            ]
        elif fam in ("E6", "E7", "E8"):
            dim = 8
            h = Fraction(1, 2)
            full = [
                [h, -h, -h, -h, -h, -h, -h, h],
                [Fraction(1), Fraction(1)] + [Fraction(0)] * 6,
            ]
            for k in range(6):
                v = [Fraction(0)] * 8
                v[k] = Fraction(-1)
                v[k + 1] = Fraction(1)
                full.append(v)
            vecs = full[: n]
        else:
            raise ValueError(f"{d.name} is not crystallographic")
        blocks.append((dim, vecs))
    total = sum(dim for dim, _ in blocks)
    out = []
    offset = 0
    for dim, vecs in blocks:
        for v in vecs:
            out.append(tuple([Fraction(0)] * offset + v + [Fraction(0)] * (total - offset - dim)))
        offset += dim
    return out


def _form_matrix(components):
    """-cos(pi/m_rs) bilinear form over all simple roots of the product."""
    mats = [d.coxeter_matrix() for d in components]
    total = sum(d.rank for d in components)
    form = [[0.0] * total for _ in range(total)]
    offset = 0
    for d, cm in zip(components, mats):
        n = d.rank
        for i in range(n):
            for j in range(n):
                form[offset + i][offset + j] = -math.cos(math.pi / cm[i][j])
        offset += n
    return tuple(tuple(row) for row in form)


def build_root_system(descriptor) -> RootSystem:
    """Close the simple roots under reflection and index the result.

    Accepts a single descriptor or a sequence of them (a direct product).
    """
    if isinstance(descriptor, CoxeterDescriptor):
        components = (descriptor,)
    else:
        components = tuple(descriptor)
        if not components:
            raise ValueError("empty descriptor list")
    exact = all(d.is_crystallographic() for d in components)
    if not exact and len(components) > 1:
        raise ValueError("direct products are only supported for crystallographic types")

    rank = sum(d.rank for d in components)
    if exact:
        simple = _simple_vectors_exact(components)
        simple_coeffs = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
        form = None

        def dot(v, w):
            return sum(a * b for a, b in zip(v, w))
    else:
        form = _form_matrix(components)
        simple = [tuple(1.0 if j == i else 0.0 for j in range(rank)) for i in range(rank)]
        simple_coeffs = [tuple(v) for v in simple]

        def dot(v, w):
            return sum(v[i] * form[i][j] * w[j] for i in range(rank) for j in range(rank))

    norms = [dot(a, a) for a in simple]

    def reflect(vec, coeff, r):
        k = 2 * dot(simple[r], vec) / norms[r]
        if exact:
            ik = int(k)
            if ik != k:
                raise RuntimeError("non-integral Cartan coefficient in exact system")
            k = ik
        new_vec = tuple(b - k * a for a, b in zip(simple[r], vec))
        new_coeff = tuple(b - k * a for a, b in zip(simple_coeffs[r], coeff))
        return new_vec, new_coeff

    expected = 2 * sum(d.num_positive_roots() for d in components)
    roots = {}
    frontier = []
    for v, c in zip(simple, simple_coeffs):
        roots[_key(v, exact)] = (tuple(v), tuple(c))
        frontier.append((tuple(v), tuple(c)))
    while frontier:
        nxt = []
        for vec, coeff in frontier:
            for r in range(rank):
                nv, nc = reflect(vec, coeff, r)
                k = _key(nv, exact)
                if k not in roots:
                    roots[k] = (nv, nc)
                    nxt.append((nv, nc))
        frontier = nxt
        if len(roots) > 4 * expected + 16:
            raise RuntimeError("root closure did not terminate")
    if len(roots) != expected:
        raise RuntimeError(f"closure produced {len(roots)} roots, expected {expected}")

    def is_positive(coeff):
        if exact:
            return all(x >= 0 for x in coeff)
        return all(x > -1e-9 for x in coeff)

    positives = [(v, c) for v, c in roots.values() if is_positive(c)]
    if 2 * len(positives) != expected:
        raise RuntimeError("positive/negative split failed")
    positives.sort(key=lambda vc: _key(vc[0], exact))
    pos_vecs = [v for v, _ in positives]
    pos_coeffs = [c for _, c in positives]
    if exact:
        pos_coeffs = [tuple(int(x) for x in c) for c in pos_coeffs]
    index = {_key(v, exact): i for i, v in enumerate(pos_vecs)}

    def signed(vec):
        k = _key(vec, exact)
        if k in index:
            return index[k] + 1
        return -(index[_key(tuple(-x for x in vec), exact)] + 1)

    tables = []
    for r in range(rank):
        table = []
        negated = 0
        for v, c in positives:
            nv, _ = reflect(v, c, r)
            s = signed(nv)
            if s < 0:
                negated += 1
            table.append(s)
        if negated != 1:
            raise RuntimeError(f"generator {r} negates {negated} positive roots")
        tables.append(tuple(table))

    simple_indices = [index[_key(tuple(v), exact)] for v in simple]
    for r, si in enumerate(simple_indices):
        if tables[r][si] != -(si + 1):
            raise RuntimeError("generator does not negate its own simple root")

    bilinear = tuple(tuple(dot(a, b) for b in simple) for a in simple)
    # the action must respect the form: check every generator on simple pairs
    for r in range(rank):
        imgs = [reflect(tuple(v), simple_coeffs[i], r)[0] for i, v in enumerate(simple)]
        for i in range(rank):
            for j in range(rank):
                got = dot(imgs[i], imgs[j])
                want = bilinear[i][j]
                ok = got == want if exact else abs(got - want) < 1e-9
                if not ok:
                    raise RuntimeError("generator action does not respect the bilinear form")

    return RootSystem(components, pos_vecs, pos_coeffs, simple_indices, tables,
                      bilinear, exact)


def save_root_system(rs: RootSystem, path) -> None:
    with open(path, "w") as fh:
        json.dump(rs.to_json_dict(), fh, indent=1, sort_keys=True)


def load_root_system(path) -> RootSystem:
    with open(path) as fh:
        doc = json.load(fh)
    return root_system_from_json(doc)


def root_system_from_json(doc: dict) -> RootSystem:
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    components = [from_spec((d["family"], d["rank"], d["m"])) for d in doc["descriptor"]]
    exact = doc["exact"]
    if exact:
        roots = [tuple(Fraction(x) for x in v) for v in doc["roots"]]
        coeffs = [tuple(int(x) for x in c) for c in doc["coeffs"]]
        form = None
    else:
        roots = [tuple(float(x) for x in v) for v in doc["roots"]]
        coeffs = [tuple(float(x) for x in c) for c in doc["coeffs"]]
        form = _form_matrix(components)
    rs = RootSystem(components, roots, coeffs, doc["simple_indices"],
                    doc["generator_tables"],
                    form if form is not None else None, exact)
    if rs.bilinear_form is None:
        simple = [rs.positive_roots[i] for i in rs.simple_indices]
        rs.bilinear_form = tuple(
            tuple(sum(a * b for a, b in zip(u, v)) for v in simple) for u in simple
        )
    return rs
