"""The algebras A(m, N): paths on the doubled cyclic quiver modulo
``a_i a_{i+1}``, ``abar_{i+1} abar_i`` and
``(a_i abar_i)^N - (abar_{i-1} a_{i-1})^N``.

A nonzero path is an alternating word in the two arrow directions and is
stored as ``Path(src, start, length)``: ``start`` is 0 when the first
arrow is clockwise (``a``) and 1 when it is counterclockwise (``abar``).
Arrow subscripts are recomputed from the source, never stored.  The socle
element at a vertex is always written as the clockwise word of length
``2N``.
"""

from typing import NamedTuple

from .field import Field

A, B = 0, 1  # clockwise a_i : i -> i+1, counterclockwise abar_i : i+1 -> i


class Path(NamedTuple):
    src: int
    start: int
    length: int

    @property
    def word(self):
        return "".join("ab"[(self.start + k) % 2] for k in range(self.length))


class Algebra:
    """Handle for A(m, N) over a field of characteristic 0 or p."""

    def __init__(self, m, N, char=0):
        if m < 3:
            raise ValueError("m must be at least 3")
        if N < 1:
            raise ValueError("N must be at least 1")
        self.field = Field(char)
        p = self.field.char
        if p:
            for what, val in (("2", 2), ("N", N), ("m", m)):
                if val % p == 0:
                    raise ValueError(f"characteristic divides {what}")
        self.m = m
        self.N = N
        self._basis = None
        self._between = None

    def __repr__(self):
        return f"Algebra(m={self.m}, N={self.N}, char={self.field.char})"

    def __eq__(self, other):
        return isinstance(other, Algebra) and (self.m, self.N, self.field) == (
            other.m,
            other.N,
            other.field,
        )

    def __hash__(self):
        return hash((self.m, self.N, self.field.char))

    # -- paths -------------------------------------------------------------

    def target(self, p):
        if p.length % 2 == 0:
            return p.src
        return (p.src + (1 if p.start == A else -1)) % self.m

    def degree(self, p):
        """Bidegree ``(d, dbar)``: number of a's and minus the number of abar's."""
        n_first = (p.length + 1) // 2
        n_second = p.length // 2
        if p.start == A:
            return n_first, -n_second
        return n_second, -n_first

    def path(self, src, word):
        """Normal form of a direction word (``'a'``/``'b'`` letters), or None if zero."""
        src %= self.m
        if not word:
            return Path(src, A, 0)
        start = "ab".index(word[0])
        for k, ch in enumerate(word):
            if "ab".index(ch) != (start + k) % 2:
                return None
        return self._normal(src, start, len(word))

    def _normal(self, src, start, length):
        if length > 2 * self.N:
            return None
        if length == 2 * self.N and start == B:
            start = A
        if length == 0:
            start = A
        return Path(src, start, length)

    def mul_paths(self, p, q):
        if self.target(p) != q.src:
            return None
        if p.length == 0:
            return q
        if q.length == 0:
            return p
        last = p.start if p.length % 2 else 1 - p.start
        if last == q.start:
            return None
        return self._normal(p.src, p.start, p.length + q.length)

    def arrows(self, p):
        """Arrow labels ``(A, i)`` for a_i and ``(B, i)`` for abar_i along ``p``."""
        out = []
        v = p.src
        for k in range(p.length):
            d = (p.start + k) % 2
            if d == A:
                out.append((A, v))
                v = (v + 1) % self.m
            else:
                v = (v - 1) % self.m
                out.append((B, v))
        return out

    @property
    def basis(self):
        if self._basis is None:
            out = []
            for i in range(self.m):
                out.append(Path(i, A, 0))
                for L in range(1, 2 * self.N + 1):
                    out.append(Path(i, A, L))
                for L in range(1, 2 * self.N):
                    out.append(Path(i, B, L))
            self._basis = out
        return self._basis

    def paths_between(self, s, t):
        if self._between is None:
            table = {}
            for p in self.basis:
                table.setdefault((p.src, self.target(p)), []).append(p)
            self._between = table
        return self._between.get((s % self.m, t % self.m), [])

    # -- elements ----------------------------------------------------------

    def element(self, terms=None):
        return Element(self, terms or {})

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {Path(i, A, 0): self.field.one for i in range(self.m)})

    def from_path(self, p, coeff=1):
        if p is None:
            return self.zero()
        return Element(self, {p: self.field(coeff)})

    def word(self, src, word, coeff=1):
        return self.from_path(self.path(src, word), coeff)

    def e(self, i):
        return self.word(i, "")

    def a(self, i):
        return self.word(i, "a")

    def abar(self, i):
        return self.word(i + 1, "b")

    def arrow(self, label):
        kind, i = label
        return self.a(i) if kind == A else self.abar(i)

    def eps(self, i):
        """Socle element ``(a_i abar_i)^N``."""
        return self.word(i, "ab" * self.N)

    def f(self, i):
        """``a_i abar_i + abar_i a_i``."""
        return self.word(i, "ab") + self.word(i + 1, "ba")

    def grading(self, p, which="d"):
        d, dbar = self.degree(p)
        return d if which == "d" else dbar

    def center_basis(self):
        """``1``, the ``eps_i`` and the powers ``f_i^s`` (``1 <= s <= N-1``)."""
        out = [("1", (), self.one())]
        out += [("eps", (i,), self.eps(i)) for i in range(self.m)]
        for i in range(self.m):
            fi = self.f(i)
            power = fi
            for s in range(1, self.N):
                out.append(("f", (i, s), power))
                power = power * fi
        return out

    def is_central(self, x):
        for i in range(self.m):
            for arr in (self.a(i), self.abar(i)):
                if x * arr != arr * x:
                    return False
        return True


class Element:
    """Finite linear combination of normal-form paths."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = {p: c for p, c in terms.items() if c}

    def _check(self, other):
        if not isinstance(other, Element) or other.alg != self.alg:
            raise TypeError("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return Element(self.alg, out)

    def __neg__(self):
        return Element(self.alg, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Element):
            c = self.alg.field(other)
            return Element(self.alg, {p: c * v for p, v in self.terms.items()})
        self._check(other)
        out = {}
        mul = self.alg.mul_paths
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                r = mul(p, q)
                if r is not None:
                    out[r] = out.get(r, 0) + c * d
        return Element(self.alg, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k):
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Element) and other.alg == self.alg and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        field = self.alg.field
        parts = []
        for p in sorted(self.terms):
            name = f"e{p.src}" if p.length == 0 else f"{p.src}:{p.word}"
            parts.append(f"{field.to_str(self.terms[p])}*{name}")
        return " + ".join(parts)

    def to_json(self):
        field = self.alg.field
        return [
            {"path": {"source": p.src, "word": p.word}, "coeff": field.to_str(c)}
            for p, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, alg, data):
        out = alg.zero()
        for item in data:
            out = out + alg.word(item["path"]["source"], item["path"]["word"], alg.field(item["coeff"]))
        return out


class Derivation:
    """A derivation of A(m, N) given by its values on the arrows.

    ``values`` maps arrow labels ``(A, i)`` / ``(B, i)`` to elements parallel
    to that arrow; missing arrows map to zero and vertices always map to
    zero.  The Leibniz extension is checked against every relation.
    """

    def __init__(self, alg, values, check=True):
        self.alg = alg
        self.values = {k: v for k, v in values.items() if v}
        if check:
            self._check()

    def value(self, label):
        return self.values.get(label) or self.alg.zero()

    def apply_word(self, labels):
        """Leibniz rule on a free word of arrows, evaluated in A."""
        alg = self.alg
        arrows = [alg.arrow(lab) for lab in labels]
        out = alg.zero()
        for k, lab in enumerate(labels):
            if lab not in self.values:
                continue
            term = self.values[lab]
            for x in reversed(arrows[:k]):
                term = x * term
            for x in arrows[k + 1 :]:
                term = term * x
            out = out + term
        return out

    def apply_path(self, p):
        return self.apply_word(self.alg.arrows(p))

    def __call__(self, x):
        out = self.alg.zero()
        for p, c in x.terms.items():
            if p.length:
                out = out + self.apply_path(p) * c
        return out

    def _check(self):
        alg = self.alg
        m, N = alg.m, alg.N
        for (kind, i), v in self.values.items():
            src, tgt = (i, i + 1) if kind == A else (i + 1, i)
            for p in v.terms:
                if p.src != src % m or alg.target(p) != tgt % m:
                    raise ValueError(f"value on arrow {(kind, i)} is not parallel to it")
        for i in range(m):
            rels = [
                [[(A, i), (A, (i + 1) % m)]],
                [[(B, (i + 1) % m), (B, i)]],
                [[(A, i), (B, i)] * N, [(B, (i - 1) % m), (A, (i - 1) % m)] * N],
            ]
            for rel in rels:
                val = self.apply_word(rel[0])
                if len(rel) == 2:
                    val = val - self.apply_word(rel[1])
                if val:
                    raise ValueError("derivation does not respect the relations")

    def weight_components(self):
        """Split into bidegree-homogeneous derivations keyed by weight."""
        alg = self.alg
        parts = {}
        for label, v in self.values.items():
            base = alg.degree(alg.path(*_arrow_word(alg, label)))
            for p, c in v.terms.items():
                d = alg.degree(p)
                w = (d[0] - base[0], d[1] - base[1])
                parts.setdefault(w, {}).setdefault(label, {})[p] = c
        return {
            w: Derivation(alg, {lab: alg.element(t) for lab, t in vals.items()}, check=False)
            for w, vals in parts.items()
        }


def _arrow_word(alg, label):
    kind, i = label
    return (i, "a") if kind == A else (i + 1, "b")


def euler_derivation(alg, which="d"):
    """Eulerian derivation of the grading ``d`` (counts a's) or ``dbar``."""
    vals = {}
    for i in range(alg.m):
        if which == "d":
            vals[(A, i)] = alg.a(i)
        else:
            vals[(B, i)] = -alg.abar(i)
    return Derivation(alg, vals)
