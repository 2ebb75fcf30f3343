from itertools import chain

from sympy.utilities.iterables import partitions as sympy_partitions

from algebra import NEG_INF, POS_INF
from errors import InputError, LengthMismatchError


class IntSeq(tuple):
    """Nonincreasing integer sequence; a_i is +inf for i < 1 and -inf past the end."""

    def __new__(cls, values=()):
        values = tuple(values)
        for value in values:
            if isinstance(value, bool) or not isinstance(value, int):
                raise InputError("{} entries must be integers, got {!r}".format(cls.__name__, value))
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise InputError("{} must be nonincreasing, got {}".format(cls.__name__, list(values)))
        return super(IntSeq, cls).__new__(cls, values)

    def at(self, i):
        return at(self, i)

    def __repr__(self):
        return "{}({})".format(type(self).__name__, list(self))


class Partition(IntSeq):

    def __new__(cls, values=()):
        seq = super(Partition, cls).__new__(cls, values)
        if seq and seq[-1] < 0:
            raise InputError("partition entries must be nonnegative, got {}".format(list(seq)))
        return seq


def at(seq, i):
    if i < 1:
        return POS_INF
    if i > len(seq):
        return NEG_INF
    return seq[i - 1]


def prefix_sum(seq, k):
    return sum(seq[:max(k, 0)])


def count_positive(seq):
    return sum(1 for value in seq if value > 0)


def majorizes(a, b):
    """True iff a is majorized by b."""
    if len(a) != len(b):
        raise LengthMismatchError("majorization needs equal lengths, got {} and {}".format(len(a), len(b)))
    if sum(a) != sum(b):
        return False
    return all(prefix_sum(a, k) <= prefix_sum(b, k) for k in range(1, len(a)))


def gen_majorization_thresholds(g, d, s):
    """h_j = min{i : d_(i-j+1) < g_i} for 1 <= j <= s."""
    m = len(d)
    thresholds = []
    for j in range(1, s + 1):
        h = next(i for i in range(j, m + j + 1) if at(d, i - j + 1) < g[i - 1])
        assert j <= h <= m + j
        thresholds.append(h)
    return tuple(thresholds)


def gen_majorizes(g, d, a):
    """True iff g is majorized by d and a in the generalized sense."""
    m, s = len(d), len(a)
    if len(g) != m + s:
        raise LengthMismatchError(
            "generalized majorization needs len(g) = len(d) + len(a), got {} != {} + {}".format(len(g), m, s)
        )
    if any(d[i] < g[i + s] for i in range(m)):
        return False
    if sum(g) != sum(d) + sum(a):
        return False
    for j, h in enumerate(gen_majorization_thresholds(g, d, s), start=1):
        if prefix_sum(g, h) - prefix_sum(d, h - j) > prefix_sum(a, j):
            return False
    return True


def union_desc(u, b):
    return IntSeq(sorted(tuple(u) + tuple(b), reverse=True))


def partitions(total, length):
    """Nonincreasing nonnegative sequences of the given length and sum, largest first."""
    if total < 0:
        return
    if length == 0:
        if total == 0:
            yield Partition()
        return
    for parts in sympy_partitions(total, m=length):
        values = sorted(chain.from_iterable([part] * count for part, count in parts.items()), reverse=True)
        yield Partition(values + [0] * (length - len(values)))
