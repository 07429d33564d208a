"""Closed-form expected values: eigenvalue tables, brackets with E_{1,j,s},
the cup-product list and the generator brackets.

Everything here is transcribed once, by hand, as formulas in (m, N, n,
index); the engine never reads these values, they only serve as fixtures
for comparisons.
"""

from fractions import Fraction

from .cohomology import Named, index_set


def _nm(kind, n, *idx):
    return Named(kind, n, tuple(idx))


def expected_eigenvalues(m, N, el):
    """(phi, psi, phi+psi, phi-psi) eigenvalues of a named basis element."""
    n, kind = el.n, el.kind
    if kind == "one":
        return (0, 0, 0, 0)
    if kind == "eps":
        return (N, -N, 0, 2 * N)
    if kind == "f":
        s = el.idx[1]
        return (s, -s, 0, 2 * s)
    p, t = divmod(n, m)
    if kind in ("chi", "pi"):
        a = el.idx[0]
        if m % 2 == 1 and n % 2 == 1:
            # pi_{n, +-p} with t = 0, n odd
            if a == p:
                return (-a * m + N, -N, -a * m, 2 * N - a * m)
            return (N, -a * m - N, -a * m, 2 * N + a * m)
        k = n if kind == "chi" else n - 2
        if a >= 0:
            return (-a * m - Fraction(k - a * m, 2) * N, Fraction(k - a * m, 2) * N,
                    -a * m, -a * m - (k - a * m) * N)
        return (-Fraction(k + a * m, 2) * N, -a * m + Fraction(k + a * m, 2) * N,
                -a * m, a * m - (k + a * m) * N)
    if kind == "F":
        s = el.idx[1]
        return (s - Fraction(n, 2) * N, Fraction(n, 2) * N - s, 0, 2 * s - n * N)
    if kind == "E":
        s = el.idx[1]
        return (s - Fraction(n - 1, 2) * N, Fraction(n - 1, 2) * N - s, 0, 2 * s - (n - 1) * N)
    g = el.idx[0]
    if m % 2 == 1 and n % 2 == 0:
        if kind == "phi":
            return (N, -g * m - N, -g * m, 2 * N + g * m)
        return (-g * m + N, -N, -g * m, 2 * N - g * m)
    upper = g >= 0 if kind == "phi" else g > 0
    if upper:
        return (-g * m - Fraction(n - g * m - 1, 2) * N, Fraction(n - g * m - 1, 2) * N,
                -g * m, -g * m - (n - g * m - 1) * N)
    return (-Fraction(n + g * m - 1, 2) * N, -g * m + Fraction(n + g * m - 1, 2) * N,
            -g * m, g * m - (n + g * m - 1) * N)


def expected_E_bracket(m, N, j, s, el, printed_F=False):
    """[E_{1,j,s}, el] as a dict of named coordinates.

    ``printed_F`` uses the coefficient ``(r - n/2) N`` as typeset in the
    summary table instead of ``r - (n/2) N``.
    """
    n, kind = el.n, el.kind
    even = m % 2 == 0
    if kind in ("one", "eps", "pi"):
        return {}
    if kind == "f":
        i, r = el.idx
        if i != j or r + s > N:
            return {}
        if r + s == N:
            return {_nm("eps", 0, j): r, _nm("eps", 0, (j + 1) % m): r}
        return {_nm("f", 0, j, r + s): r}
    if kind == "chi":
        if el.idx[0] != 0:
            return {}
        sign = (-1) ** ((n // 2) * j) if even else 1
        return {_nm("F", n, j, s): -sign * Fraction(n, 2) * N}
    if kind == "F":
        i, r = el.idx
        if i != j or r + s > N - 1:
            return {}
        coeff = (r - Fraction(n, 2)) * N if printed_F else r - Fraction(n, 2) * N
        return {_nm("F", n, j, s + r): coeff} if coeff else {}
    if kind in ("phi", "psi"):
        if n % 2 == 0 or el.idx[0] != 0:
            return {}
        sign = (-1) ** (((n - 1) // 2) * j) if even else 1
        c = sign * (s + Fraction(n - 1, 2) * N)
        return {_nm("E", n, j, s): -c if kind == "phi" else c}
    if kind == "E":
        i, r = el.idx
        if i != j or r + s > N - 1:
            return {}
        coeff = r - s - Fraction(n - 1, 2) * N
        return {_nm("E", n, j, s + r): coeff} if coeff else {}
    raise ValueError(kind)


def _exists(m, N, *els):
    return all(el in index_set(m, N, el.n) for el in els)


def cup_identities(m, N, n_max):
    """Cup-product identities ``x y = expected`` with all elements existing.

    Each entry is ``(label, x, y, expected)`` where ``x`` and ``y`` are named
    elements and ``expected`` is a dict of named coordinates.
    """
    out = []
    phi, psi = _nm("phi", 1, 0), _nm("psi", 1, 0)
    P, S = _nm("phi", m - 1, -1), _nm("psi", m - 1, 1)

    def add(label, x, y, expected):
        if x.n + y.n > n_max or not _exists(m, N, x, y, *expected):
            return
        out.append((label, x, y, {k: v for k, v in expected.items() if v}))

    eps = [_nm("eps", 0, i) for i in range(m)]
    f = {(i, s): _nm("f", 0, i, s) for i in range(m) for s in range(1, N)}

    for i in range(m):
        for j in range(m):
            if N >= 2:
                if i == j:
                    exp = ({_nm("f", 0, i, 2): 1} if N >= 3
                           else {eps[i]: 1, eps[(i + 1) % m]: 1})
                else:
                    exp = {}
                add(f"f_{i} f_{j} = delta f_{i}^2", f[i, 1], f[j, 1], exp)
    evens = range(2, n_max + 1, 2)
    if m % 2 == 0:
        for i in range(m):
            add(f"eps_{i} phi_(1,0) = 0", eps[i], phi, {})
            add(f"eps_{i} psi_(1,0) = 0", eps[i], psi, {})
            add(f"eps_{i} phi_(m-1,-1) = 0", eps[i], P, {})
            add(f"eps_{i} psi_(m-1,1) = 0", eps[i], S, {})
            for j in range(m):
                if N >= 2:
                    add(f"eps_{i} f_{j} = 0", eps[i], f[j, 1], {})
            add(f"pi_(2,0) = (-1)^{i} eps_{i} chi_(2,0)", eps[i], _nm("chi", 2, 0),
                {_nm("pi", 2, 0): (-1) ** i})
            add(f"pi_(m,1) = (-1)^{i} eps_{i} chi_(m,1)", eps[i], _nm("chi", m, 1),
                {_nm("pi", m, 1): (-1) ** i})
            add(f"pi_(m,-1) = (-1)^{i} eps_{i} chi_(m,-1)", eps[i], _nm("chi", m, -1),
                {_nm("pi", m, -1): (-1) ** i})
        add("phi_(1,0)^2 = 0", phi, phi, {})
        add("psi_(1,0)^2 = 0", psi, psi, {})
        add("phi_(1,0) phi_(m-1,-1) = 0", phi, P, {})
        add("psi_(1,0) psi_(m-1,1) = 0", psi, S, {})
        add("phi_(m-1,-1) psi_(m-1,1) = 0", P, S, {})
        add("phi_(1,0) psi_(1,0) = mN pi_(2,0)", phi, psi, {_nm("pi", 2, 0): m * N})
        add("phi_(1,0) psi_(m-1,1) = m pi_(m,1)", phi, S, {_nm("pi", m, 1): m})
        add("psi_(1,0) phi_(m-1,-1) = -m pi_(m,-1)", psi, P, {_nm("pi", m, -1): -m})
        add("chi_(m,1) phi_(m-1,-1) = 0", _nm("chi", m, 1), P, {})
        add("chi_(m,-1) psi_(m-1,1) = 0", _nm("chi", m, -1), S, {})
        for (j, s), fs in f.items():
            add(f"E_(1,{j},{s}) = f_{j}^{s} phi_(1,0)", fs, phi, {_nm("E", 1, j, s): 1})
            add(f"E_(1,{j},{s}) = -f_{j}^{s} psi_(1,0)", fs, psi, {_nm("E", 1, j, s): -1})
            for n in evens:
                sg = (-1) ** ((n // 2) * j)
                add(f"E_({n + 1},{j},{s}) = (-1)^(nj/2) E_(1,{j},{s}) chi_({n},0)",
                    _nm("E", 1, j, s), _nm("chi", n, 0), {_nm("E", n + 1, j, s): sg})
                add(f"F_({n},{j},{s}) = (-1)^(nj/2) f_{j}^{s} chi_({n},0)",
                    fs, _nm("chi", n, 0), {_nm("F", n, j, s): sg})
        for n in evens:
            c = _nm("chi", n, 0)
            add(f"chi_({n},0) phi_(1,0) = phi_({n + 1},0)", c, phi, {_nm("phi", n + 1, 0): 1})
            add(f"chi_({n},0) psi_(1,0) = psi_({n + 1},0)", c, psi, {_nm("psi", n + 1, 0): 1})
            add(f"chi_({n},0) pi_(2,0) = pi_({n + 2},0)", c, _nm("pi", 2, 0), {_nm("pi", n + 2, 0): 1})
            add(f"chi_({n},0) chi_(2,0) = chi_({n + 2},0)", c, _nm("chi", 2, 0), {_nm("chi", n + 2, 0): 1})
    else:
        for i in range(m):
            add(f"eps_{i} chi_(4,0) = 0", eps[i], _nm("chi", 4, 0), {})
            if N >= 2:
                add(f"f_{i} phi_(1,0) = -f_{i} psi_(1,0) [phi part]", f[i, 1], phi,
                    {_nm("E", 1, i, 1): 1})
                add(f"f_{i} phi_(1,0) = -f_{i} psi_(1,0) [psi part]", f[i, 1], psi,
                    {_nm("E", 1, i, 1): -1})
        for (j, s), fs in f.items():
            for n in range(1, n_max + 1, 4):
                add(f"E_({n},{j},{s}) = f_{j}^{s} phi_({n},0)", fs, _nm("phi", n, 0),
                    {_nm("E", n, j, s): 1})
            for n in range(4, n_max + 1, 4):
                add(f"F_({n},{j},{s}) = f_{j}^{s} chi_({n},0)", fs, _nm("chi", n, 0),
                    {_nm("F", n, j, s): 1})
            for n in evens:
                F = _nm("F", n, j, s)
                add(f"F_({n},{j},{s}) phi_(1,0) = E_({n + 1},{j},{s})", F, phi,
                    {_nm("E", n + 1, j, s): 1})
                add(f"F_({n},{j},{s}) psi_(1,0) = -E_({n + 1},{j},{s})", F, psi,
                    {_nm("E", n + 1, j, s): -1})
        for n in range(4, n_max + 1, 4):
            c = _nm("chi", n, 0)
            add(f"chi_({n},0) phi_(1,0) = phi_({n + 1},0)", c, phi, {_nm("phi", n + 1, 0): 1})
            add(f"chi_({n},0) psi_(1,0) = psi_({n + 1},0)", c, psi, {_nm("psi", n + 1, 0): 1})
    return out


def bracket_generators(m, N):
    """Generators whose pairwise brackets are listed for the given parity of m."""
    eps = [_nm("eps", 0, i) for i in range(m)]
    f = [_nm("f", 0, i, 1) for i in range(m)] if N >= 2 else []
    if m % 2 == 0:
        return eps + f + [_nm("chi", 2, 0), _nm("phi", m - 1, -1), _nm("psi", m - 1, 1),
                          _nm("chi", m, -1), _nm("chi", m, 1)]
    F = [_nm("F", 2, i, 1) for i in range(m)] if N >= 2 else []
    return eps + f + F + [_nm("chi", 4, 0), _nm("phi", m - 1, -1), _nm("psi", m - 1, 1),
                          _nm("chi", 2 * m, 2), _nm("chi", 2 * m, -2)]


def expected_generator_bracket(m, N, x, y):
    """Listed value of [x, y] for generators, as a dict, or None if not listed."""
    if m % 2 == 1:
        return {}
    phi, psi = _nm("phi", 1, 0), _nm("psi", 1, 0)
    P, S = _nm("phi", m - 1, -1), _nm("psi", m - 1, 1)
    c2, cm, cp = _nm("chi", 2, 0), _nm("chi", m, -1), _nm("chi", m, 1)
    sign = 1
    if y.kind == "eps" and x.kind != "eps":
        x, y = y, x
        sign = -((-1) ** (((x.n - 1) * (y.n - 1)) % 2))
    if x.kind == "eps":
        i = x.idx[0]
        if y == c2:
            return {phi: sign * Fraction((-1) ** (i + 1), m), psi: sign * Fraction((-1) ** (i + 1), m)}
        if y == cm:
            return {P: sign * (-1) ** (i + 1)}
        if y == cp:
            return {S: sign * (-1) ** (i + 1)}
        return {}
    for a, b, val in ((c2, P, {cm: 1}), (c2, S, {cp: -1})):
        if (x, y) == (a, b):
            return val
        if (x, y) == (b, a):
            return {k: -((-1) ** (((a.n - 1) * (b.n - 1)) % 2)) * v for k, v in val.items()}
    return {}
