"""Self-similar actions on words and two-alphabet monoids with a
commutation bijection.

A self-similar action descriptor gives, for each group element g and
letter x, a new letter g·x and a restricted element g|_x; the action
extends to words letter by letter, the restriction trailing along:
g·(xw) = (g·x)(g|_x·w).  The flagship instance is the odometer (adding
machine), where g = k adds k to the first digit with carry.

The second half of the module handles monoids on two alphabets X, Y with
relations y_j x_i = x_{i'} y_{j'} prescribed by a bijection θ, whose
elements have unique X*Y* normal forms of a well-defined bidegree.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Any, Callable, Optional

from .core import DISJOINT, Lcm, Semigroup
from .report import Report
from .zoo import frac_right_lcm


@dataclass(frozen=True)
class SSADescriptor:
    """Letterwise data of one self-similar action.

    `act(g, x)` and `res(g, x)` take a group element and a letter index
    in [0, n_letters); `inverse` inverts a group element when the acting
    monoid is a group (None otherwise).
    """

    name: str
    n_letters: int
    identity: Any
    act: Callable[[Any, int], int]
    res: Callable[[Any, int], Any]
    inverse: Optional[Callable[[Any], Any]] = None


def adding_machine(n):
    """Base-n odometer: k adds k to a digit, carrying (x+k) // n onward.

    Group elements are plain integers (k stands for the k-th power of
    the single generator); negative k works through Euclidean division,
    giving the inverse action.
    """
    return SSADescriptor(
        name=f"add:{n}",
        n_letters=n,
        identity=0,
        act=lambda k, x: (x + k) % n,
        res=lambda k, x: (x + k) // n,
        inverse=lambda k: -k,
    )


def bs_odometer(c, d):
    """The odometer with carries scaled by c: the letterwise action of
    the cyclic part of BS(c,d)+ on its d-letter free factor, where
    passing a carry costs c instead of 1."""
    return SSADescriptor(
        name=f"bsodo:{c},{d}",
        n_letters=d,
        identity=0,
        act=lambda k, x: (x + k) % d,
        res=lambda k, x: c * ((x + k) // d),
    )


def ssa_act_word(D, g, word):
    """(g·word, g|_word) for a digit-string word; length is preserved."""
    out = []
    for ch in word:
        x = int(ch)
        out.append(str(D.act(g, x)))
        g = D.res(g, x)
    return "".join(out), g


def ssa_act_inverse_word(D, g, word):
    """The unique v with g·v == word, found letterwise: each step inverts
    the bijection x -> g·x on the alphabet, then restricts."""
    out = []
    for ch in word:
        y = int(ch)
        for x in range(D.n_letters):
            if D.act(g, x) == y:
                break
        else:
            raise ValueError(f"{D.name}: letter {y} not in the image of {g!r}")
        out.append(str(x))
        g = D.res(g, x)
    return "".join(out)


# ---------------------------------------------------------------------------
# Commutation tables and X*Y* normal forms.

class ThetaTable:
    """A bijection Y x X -> X x Y driving relations y_j x_i = x_i' y_j'.

    Stored as a mapping (j, i) -> (i', j') with its inverse; arbitrary
    bijections are accepted so that deliberately broken tables can be
    fed to the checkers.
    """

    def __init__(self, m, n, table):
        self.m = m
        self.n = n
        self.table = dict(table)
        if len(self.table) != m * n:
            raise ValueError("table must have one entry per (j,i)")
        self.inv = {v: k for k, v in self.table.items()}
        if len(self.inv) != m * n:
            raise ValueError("table is not a bijection")

    def theta(self, j, i):
        return self.table[(j, i)]

    def theta_inv(self, i, j):
        return self.inv[(i, j)]


def theta_build(m, n):
    """The standard table: (j, i) maps to the unique (i', j') with
    j + i*n == i' + j'*m, 0 <= i' < m, 0 <= j' < n."""
    if m < 2 or n < 2:
        raise ValueError("need m, n >= 2")
    table = {}
    for j in range(n):
        for i in range(m):
            t = j + i * n
            table[(j, i)] = (t % m, t // m)
    return ThetaTable(m, n, table)


def theta_swap(T, key1, key2):
    """Copy of T with the entries at two (j,i) keys exchanged; used for
    mutation tests against the compatibility checker."""
    table = dict(T.table)
    table[key1], table[key2] = table[key2], table[key1]
    return ThetaTable(T.m, T.n, table)


def _push_x(T, ys, i):
    """Move one x-letter left through a block of y-letters."""
    out = []
    for j in reversed(ys):
        i, j2 = T.theta(j, i)
        out.append(j2)
    return i, tuple(reversed(out))


def _push_y(T, xs, j):
    """Move one y-letter left through a block of x-letters (inverse
    rewriting x_i y_j -> y_j' x_i')."""
    out = []
    for i in reversed(xs):
        j, i2 = T.theta_inv(i, j)
        out.append(i2)
    return j, tuple(reversed(out))


def ftheta_multiply(T, z1, z2):
    """Product in X*Y* normal form; bidegrees add."""
    xs1, ys1 = z1
    xs2, ys2 = z2
    ys = ys1
    xs = list(xs1)
    for i in xs2:
        i2, ys = _push_x(T, ys, i)
        xs.append(i2)
    return (tuple(xs), ys + ys2)


def ftheta_normalize(T, letters):
    """Fold a mixed letter sequence (('x', i) / ('y', j) pairs) into
    normal form; the result is independent of how the relations are
    applied because the table is a bijection."""
    z = ((), ())
    for kind, idx in letters:
        step = ((idx,), ()) if kind == "x" else ((), (idx,))
        z = ftheta_multiply(T, z, step)
    return z


def ftheta_anti_normal(T, z):
    """The same element written in Y*X* order, as (ys, xs)."""
    xs, ys = z
    out = []
    for j in ys:
        j2, xs = _push_y(T, xs, j)
        out.append(j2)
    return tuple(out), xs


def ftheta_factor(T, z, d):
    """Split z = w1 * w2 with bidegree(w1) == d; None if d does not fit.

    The split is unique: the x-part of w1 is forced, and the y-part is
    read off after rewriting the remainder into Y*X* order.
    """
    p1, q1 = d
    xs, ys = z
    if not (0 <= p1 <= len(xs) and 0 <= q1 <= len(ys)):
        return None
    ays, axs = ftheta_anti_normal(T, (xs[p1:], ys))
    w1 = (xs[:p1], ays[:q1])
    w2 = ftheta_multiply(T, ((), ays[q1:]), (axs, ()))
    return w1, w2


def ftheta_left_divide(T, z1, z):
    xs1, ys1 = z1
    got = ftheta_factor(T, z, (len(xs1), len(ys1)))
    if got is None or got[0] != z1:
        return None
    return got[1]


def ftheta_display(z):
    xs, ys = z
    return ("".join(f"x{i}" for i in xs) + "." + "".join(f"y{j}" for j in ys))


def ftheta_parse(T, text):
    text = text.strip()
    if text in ("ε", "e"):
        return ((), ())
    if text.count(".") != 1:
        raise ValueError(f"expected 'x…x.y…y', got {text!r}")
    xpart, ypart = text.split(".")
    z = _parse_letters(xpart, "x", T.m), _parse_letters(ypart, "y", T.n)
    return z


def _parse_letters(part, kind, bound):
    out = []
    rest = part
    while rest:
        if rest[0] != kind or len(rest) < 2 or not rest[1].isdigit():
            raise ValueError(f"bad {kind}-letter near {rest!r}")
        idx = int(rest[1])
        if idx >= bound:
            raise ValueError(f"letter {kind}{idx} out of range (< {bound})")
        out.append(idx)
        rest = rest[2:]
    return tuple(out)


# ---------------------------------------------------------------------------
# Embedding into the affine semigroup over N for coprime alphabet sizes:
# x_i -> (i, m), y_j -> (j, n).  Word values use least-significant-digit-
# first base expansions, so an (xs, ys) word of bidegree (p, q) maps to
# (rx + m^p * ry, m^p n^q) with rx, ry the digit values of the parts.

def ftheta_embed(T, z):
    xs, ys = z
    m, n = T.m, T.n
    rx = sum(i * m ** k for k, i in enumerate(xs))
    ry = sum(j * n ** k for k, j in enumerate(ys))
    return (rx + m ** len(xs) * ry, m ** len(xs) * n ** len(ys))


def ftheta_unembed(T, pair):
    r, s = pair
    m, n = T.m, T.n
    p = 0
    while s % m == 0:
        s //= m
        p += 1
    q = 0
    while s % n == 0:
        s //= n
        q += 1
    if s != 1:
        raise ValueError(f"{pair} is not in the embedded image")
    xs = []
    for _ in range(p):
        xs.append(r % m)
        r //= m
    ys = []
    for _ in range(q):
        ys.append(r % n)
        r //= n
    if r:
        raise ValueError(f"{pair} is not in the embedded image")
    return (tuple(xs), tuple(ys))


def ftheta_right_lcm(T, z1, z2):
    """Closed-form right LCM for coprime alphabet sizes, computed in the
    embedded arithmetic-progression picture and pulled back."""
    if math.gcd(T.m, T.n) != 1:
        raise ValueError("closed-form LCM needs gcd(m, n) == 1")
    got = frac_right_lcm(ftheta_embed(T, z1), ftheta_embed(T, z2))
    if got is DISJOINT:
        return DISJOINT
    return Lcm(ftheta_unembed(T, got.lcm),
               ftheta_unembed(T, got.p_comp),
               ftheta_unembed(T, got.q_comp))


def ftheta_semigroup(T):
    """The two-alphabet monoid as a descriptor over normal-form pairs.

    The closed-form right LCM is attached only when the alphabet sizes
    are coprime; otherwise the monoid genuinely fails the right-LCM
    property (see ftheta_right_lcm_survey) and the field stays None.
    """
    gens = tuple(((i,), ()) for i in range(T.m))
    gens += tuple(((), (j,)) for j in range(T.n))
    coprime = math.gcd(T.m, T.n) == 1
    return Semigroup(
        name=f"ftheta:{T.m},{T.n}",
        identity=((), ()),
        multiply=lambda p, q: ftheta_multiply(T, p, q),
        generators=gens,
        display=ftheta_display,
        is_unit=lambda z: z == ((), ()),
        left_divide=lambda p, r: ftheta_left_divide(T, p, r),
        right_lcm=(lambda p, q: ftheta_right_lcm(T, p, q)) if coprime else None,
        parse=lambda t: ftheta_parse(T, t),
    )


# ---------------------------------------------------------------------------
# Compatibility of a table with a pair of self-similar actions, and the
# right-LCM survey.

def prop_compat_check(T, D_X, D_Y, g_range):
    """Check that the table intertwines the two letter actions:

        x-part:  theta_X(y, x) == g^-1 · theta_X(g·y, g|_y·x)
        y-part:  theta_Y(y, x) == (g|_{theta_X(y,x)})^-1 · theta_Y(g·y, g|_y·x)

    for every g in g_range and every letter pair.  Both descriptors must
    encode group elements the same way and provide `inverse`.
    """
    report = Report()
    bad_x, bad_y = [], []
    gs = list(g_range)
    for g in gs:
        for j in range(T.n):
            for i in range(T.m):
                i1, j1 = T.theta(j, i)
                gy = D_Y.act(g, j)
                gx = D_X.act(D_Y.res(g, j), i)
                i2, j2 = T.theta(gy, gx)
                spot = f"(g={g!r},y{j},x{i})"
                if D_X.act(D_X.inverse(g), i2) != i1:
                    bad_x.append(spot)
                rx = D_X.res(g, i1)
                if D_Y.act(D_Y.inverse(rx), j2) != j1:
                    bad_y.append(spot)
    total = len(gs) * T.m * T.n
    report.add("compat-X", total, bad_x)
    report.add("compat-Y", total, bad_y)
    return report


@dataclass(frozen=True)
class SurveyVerdict:
    """Outcome of the bounded right-LCM survey: either no counterexample
    within the bidegree box, or a pair with two distinct minimal common
    multiples."""

    box: tuple
    checked_pairs: int
    pair: Optional[tuple] = None
    multiples: Optional[tuple] = None

    @property
    def ok(self):
        return self.pair is None


def ftheta_min_common_multiples(T, z1, z2):
    """All minimal common right multiples of z1 and z2: the common
    multiples at the componentwise-max bidegree.  Empty means disjoint;
    two or more means no least one exists."""
    (p1, q1), (p2, q2) = _bidegree(z1), _bidegree(z2)
    P, Q = max(p1, p2), max(q1, q2)
    found = []
    for xs in itertools.product(range(T.m), repeat=P):
        for ys in itertools.product(range(T.n), repeat=Q):
            t = (xs, ys)
            if (ftheta_left_divide(T, z1, t) is not None
                    and ftheta_left_divide(T, z2, t) is not None):
                found.append(t)
    return found


def _bidegree(z):
    return (len(z[0]), len(z[1]))


def ftheta_right_lcm_survey(T, max_bidegree):
    """Search for right-LCM failures among all word pairs whose joined
    bidegree fits in the box.

    If a pair has any common right multiple, it has one at the joined
    (componentwise max) bidegree, and the pair has a right LCM exactly
    when that bidegree carries a single common multiple.  So for every
    bidegree D in the box it suffices to bucket all degree-D words by
    their pairs of prefixes: a bucket with two words is a counterexample,
    and an all-singleton run is a complete certificate for the box.
    """
    P, Q = max_bidegree
    boxes = sorted(((p, q) for p in range(P + 1) for q in range(Q + 1)),
                   key=lambda d: (d[0] + d[1], d))
    checked = 0
    for D in boxes:
        subs = [d for d in boxes if d[0] <= D[0] and d[1] <= D[1]]
        joins = [(d1, d2) for d1 in subs for d2 in subs
                 if (max(d1[0], d2[0]), max(d1[1], d2[1])) == D]
        words = [(xs, ys)
                 for xs in itertools.product(range(T.m), repeat=D[0])
                 for ys in itertools.product(range(T.n), repeat=D[1])]
        prefixes = {t: {d: ftheta_factor(T, t, d)[0] for d in subs}
                    for t in words}
        for d1, d2 in joins:
            buckets = {}
            for t in words:
                key = (prefixes[t][d1], prefixes[t][d2])
                buckets.setdefault(key, []).append(t)
            checked += len(buckets)
            for (w1, w2), ts in buckets.items():
                if len(ts) >= 2:
                    return SurveyVerdict(box=max_bidegree,
                                         checked_pairs=checked,
                                         pair=(w1, w2),
                                         multiples=tuple(ts[:2]))
    return SurveyVerdict(box=max_bidegree, checked_pairs=checked)
