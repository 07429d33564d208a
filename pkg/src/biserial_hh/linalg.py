"""Sparse exact linear algebra over labelled coordinates.

Vectors are plain dicts mapping a comparable key to a nonzero field
element.  A :class:`ColumnSpace` is grown one column at a time; the order
in which columns are added fixes which ones end up as pivots, so results
are reproducible and can be varied deliberately by reordering the input.
"""


def axpy(target, coeff, vec):
    """In place ``target += coeff * vec``, dropping cancelled entries."""
    if not coeff:
        return target
    for k, v in vec.items():
        s = target.get(k)
        s = coeff * v if s is None else s + coeff * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)
    return target


def scale(vec, coeff):
    if not coeff:
        return {}
    return {k: coeff * v for k, v in vec.items()}


def clean(vec):
    return {k: v for k, v in vec.items() if v}


class ColumnSpace:
    """Row-echelon data for the span of a growing list of labelled columns.

    Every stored vector has its pivot at its smallest key and carries the
    combination of original columns it equals.  Dependent columns yield
    kernel relations instead of being stored.
    """

    def __init__(self):
        self._pivots = {}
        self.labels = []
        self.kernel = []

    @property
    def rank(self):
        return len(self._pivots)

    def _reduce(self, vec):
        vec = clean(vec)
        used = {}
        pivots = self._pivots
        while True:
            hits = [k for k in vec if k in pivots]
            if not hits:
                return vec, used
            k = min(hits)
            c = vec[k]
            row, combo = pivots[k]
            axpy(vec, -c, row)
            axpy(used, c, combo)

    def add(self, label, vec):
        """Append a column; return its kernel relation if it is dependent."""
        self.labels.append(label)
        residual, used = self._reduce(vec)
        combo = axpy({label: 1}, -1, used) if used else {label: 1}
        if not residual:
            self.kernel.append(combo)
            return combo
        k = min(residual)
        inv = 1 / residual[k]
        self._pivots[k] = (scale(residual, inv), scale(combo, inv))
        return None

    def contains(self, vec):
        return not self._reduce(vec)[0]

    def residual(self, vec):
        return self._reduce(vec)[0]

    def solve(self, vec):
        """Coefficients ``x`` with ``sum x[l] * column[l] == vec``, or None."""
        residual, used = self._reduce(vec)
        if residual:
            return None
        return used


def rank(vectors):
    space = ColumnSpace()
    for i, v in enumerate(vectors):
        space.add(i, v)
    return space.rank


def kernel(columns):
    """Basis of relations among the given labelled columns (list of pairs)."""
    space = ColumnSpace()
    for label, v in columns:
        space.add(label, v)
    return space.kernel
