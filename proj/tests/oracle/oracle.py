#!/usr/bin/env python3
"""Reference implementation for the legcob toolkit.

Pure-Python, dependency-free implementations of the front-diagram,
planar-diagram, braid and polynomial engines.  The C++ library is tested
against this module: expected values in the C++ test suite were frozen from
runs of `selfcheck.py`, and `crosscheck.py` replays random inputs through
both implementations.

Conventions (shared with the C++ code, see README):
  * Front words are sequences of tokens L<i>, R<i>, X<i>; rows are numbered
    from the top starting at 1.  A left cusp at row i creates rows i, i+1;
    a right cusp joins rows i, i+1; a crossing swaps rows i, i+1.
  * At a crossing the descending strand (row i -> i+1, the smaller slope)
    is in front.  A crossing is positive iff the two strands run in the
    same horizontal direction.
  * PD tuples list edges counterclockwise from the incoming under-edge.
  * Kauffman bracket: <X> = A<0-join> + A^-1<infinity-join>, each circle
    contributes a factor (-A^2 - A^-2); Jones is (-A)^(-3w) <D> divided by
    one circle factor so the unknot maps to 1.
  * Dubrovnik skein: D(X) - D(switch X) = z (D(0-join) - D(inf-join)),
    positive kink = a, unlink circle factor (a - a^-1) z^-1 + 1, F = a^-w D.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

# ---------------------------------------------------------------------------
# Laurent polynomials as dicts {exponent: coeff} / {(a_exp, z_exp): coeff}


def p1_norm(p):
    return {e: c for e, c in p.items() if c != 0}


def p1_add(p, q):
    r = dict(p)
    for e, c in q.items():
        r[e] = r.get(e, 0) + c
    return p1_norm(r)


def p1_scale(p, k):
    return p1_norm({e: c * k for e, c in p.items()})


def p1_mul(p, q):
    r = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            r[e1 + e2] = r.get(e1 + e2, 0) + c1 * c2
    return p1_norm(r)


def p1_mono(e, c=1):
    return {e: c} if c else {}


def p1_invert_var(p):
    """A -> A^-1."""
    return {-e: c for e, c in p.items()}


def p1_divide_exact(p, d):
    """Exact division of Laurent polynomials; raises if not divisible."""
    p = dict(p)
    d = p1_norm(d)
    if not d:
        raise ZeroDivisionError
    lead_e = max(d)
    lead_c = d[lead_e]
    p = p1_norm(p)
    floor = (min(p) - min(d)) if p else 0
    q = {}
    while p:
        e = max(p)
        c = p[e]
        if c % lead_c != 0 or e - lead_e < floor:
            raise ValueError("not divisible")
        qe, qc = e - lead_e, c // lead_c
        q[qe] = q.get(qe, 0) + qc
        for de, dc in d.items():
            p[de + qe] = p.get(de + qe, 0) - dc * qc
        p = p1_norm(p)
    return p1_norm(q)


def p1_str(p):
    return " ".join(f"{e}:{p[e]}" for e in sorted(p)) if p else "0"


def p2_norm(p):
    return {k: c for k, c in p.items() if c != 0}


def p2_add(p, q):
    r = dict(p)
    for k, c in q.items():
        r[k] = r.get(k, 0) + c
    return p2_norm(r)


def p2_mul(p, q):
    r = {}
    for (a1, z1), c1 in p.items():
        for (a2, z2), c2 in q.items():
            k = (a1 + a2, z1 + z2)
            r[k] = r.get(k, 0) + c1 * c2
    return p2_norm(r)


def p2_scale(p, k):
    return p2_norm({kk: c * k for kk, c in p.items()})


def p2_mono(ae, ze, c=1):
    return {(ae, ze): c} if c else {}


def p2_pow(p, n):
    r = {(0, 0): 1}
    for _ in range(n):
        r = p2_mul(r, p)
    return r


def p2_str(p):
    return "\n".join(f"{a} {z} {p[(a, z)]}" for a, z in sorted(p)) if p else "0"


DELTA_BR = {2: -1, -2: -1}            # -A^2 - A^-2
DELTA_DUB = {(1, -1): 1, (-1, -1): -1, (0, 0): 1}   # (a - a^-1) z^-1 + 1


# ---------------------------------------------------------------------------
# Front diagrams


class FrontError(Exception):
    pass


def parse_front(text):
    """Parse a front word into a list of (kind, row) tokens; validates."""
    toks = []
    for line in text.splitlines() if "\n" in text else [text]:
        line = line.split("#", 1)[0]
        toks.extend(line.split())
    word = []
    for t in toks:
        if len(t) < 2 or t[0] not in "LRX" or not t[1:].isdigit() or t[1:][0] == "0" and t[1:] != "0":
            raise FrontError(f"bad token {t!r}")
        row = int(t[1:])
        if row < 1:
            raise FrontError(f"bad token {t!r}")
        word.append((t[0], row))
    validate_front(word)
    return word


def validate_front(word):
    c = 0
    for idx, (k, i) in enumerate(word, start=1):
        if k == "L":
            if not (1 <= i <= c + 1):
                raise FrontError(f"event {idx}: L{i} needs 1<=i<={c + 1}")
            c += 2
        else:
            if not (1 <= i <= c - 1):
                raise FrontError(f"event {idx}: {k}{i} needs 1<=i<={c - 1}")
            if k == "R":
                c -= 2
    if c != 0:
        raise FrontError(f"word ends with {c} open strands")


def serialize_front(word):
    return " ".join(f"{k}{i}" for k, i in word)


def gap_counts(word):
    cs = [0]
    c = 0
    for k, i in word:
        c += 2 if k == "L" else -2 if k == "R" else 0
        cs.append(c)
    return cs


def next_state(word, g, r, d):
    """One traversal step.  State: gap g, row r, direction d (+1 right)."""
    if d == +1:
        k, i = word[g]          # crossing event g+1
        if k == "L":
            return (g + 1, r if r < i else r + 2, +1)
        if k == "X":
            if r == i:
                return (g + 1, i + 1, +1)
            if r == i + 1:
                return (g + 1, i, +1)
            return (g + 1, r, +1)
        # R
        if r < i:
            return (g + 1, r, +1)
        if r > i + 1:
            return (g + 1, r - 2, +1)
        return (g, i + 1 if r == i else i, -1)
    else:
        k, i = word[g - 1]      # crossing event g
        if k == "L":
            if r < i:
                return (g - 1, r, -1)
            if r > i + 1:
                return (g - 1, r - 2, -1)
            return (g, i + 1 if r == i else i, +1)
        if k == "X":
            if r == i:
                return (g - 1, i + 1, -1)
            if r == i + 1:
                return (g - 1, i, -1)
            return (g - 1, r, -1)
        # R
        return (g - 1, r if r < i else r + 2, -1)


def components(word):
    """Returns (list of components, dir map).  Each component is a list of
    (g, r) in traversal order under the canonical orientation; dir maps
    (g, r) -> +-1.  Canonical rule: the component's lexicographically least
    segment (by gap then row) is traversed rightward."""
    cs = gap_counts(word)
    segs = [(g, r) for g in range(len(cs)) for r in range(1, cs[g] + 1)]
    seen = {}
    comps = []
    for s0 in segs:
        if s0 in seen:
            continue
        orbit = []
        g, r, d = s0[0], s0[1], +1
        while True:
            orbit.append(((g, r), d))
            g, r, d = next_state(word, g, r, d)
            if (g, r) == s0 and d == +1:
                break
            if len(orbit) > 4 * len(segs) + 8:
                raise FrontError("traversal did not close")
        least = min(s for s, _ in orbit)
        dirs = {s: dd for s, dd in orbit}
        if dirs[least] != +1:
            orbit = [(s, -dd) for s, dd in reversed(orbit)]
            dirs = {s: dd for s, dd in orbit}
        # rotate so orbit starts at the least segment
        at = next(ix for ix, (s, _) in enumerate(orbit) if s == least)
        orbit = orbit[at:] + orbit[:at]
        for s, dd in orbit:
            seen[s] = dd
        comps.append(orbit)
    comps.sort(key=lambda orb: orb[0][0])
    return comps, seen


def invariants(word, dirs=None):
    if dirs is None:
        comps, dirs = components(word)
    else:
        comps, _ = components(word)
    writhe = 0
    up = down = 0
    cusps = 0
    for e, (k, i) in enumerate(word, start=1):
        if k == "X":
            d_over = dirs[(e - 1, i)]       # descending strand, in front
            d_under = dirs[(e - 1, i + 1)]  # ascending strand, behind
            writhe += 1 if d_over * d_under > 0 else -1
        elif k == "L":
            cusps += 1
            if dirs[(e, i)] == +1:
                up += 1
            else:
                down += 1
        else:
            cusps += 1
            if dirs[(e - 1, i)] == +1:
                down += 1
            else:
                up += 1
    ncomp = len(components(word)[0])
    tb = writhe - cusps // 2
    rot = (down - up) // 2
    return {"tb": tb, "rot": rot, "writhe": writhe, "cusps": cusps,
            "components": ncomp}


class _UF:
    def __init__(self):
        self.p = {}

    def find(self, x):
        self.p.setdefault(x, x)
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[max(ra, rb)] = min(ra, rb)


def _finalize_pd(tuples, uf, nids):
    """Resolve union-find classes, relabel edges 1.. in first-use order,
    count crossingless classes as free loops."""
    tuples = [tuple(uf.find(e) for e in t) for t in tuples]
    used = set()
    for t in tuples:
        used.update(t)
    allcls = {uf.find(i) for i in range(1, nids + 1)}
    free = len([c for c in allcls if c not in used])
    relab = {}
    out = []
    for t in tuples:
        out.append(tuple(relab.setdefault(e, len(relab) + 1) for e in t))
    return out, free


def front_to_pd(word, dirs=None):
    """Resolve a front into a planar diagram (tuples, free_loops)."""
    if dirs is None:
        _, dirs = components(word)
    cur = []
    nid = 0
    tuples = []
    uf = _UF()
    for e, (k, i) in enumerate(word, start=1):
        if k == "L":
            nid += 1
            cur.insert(i - 1, nid)
            cur.insert(i - 1, nid)
        elif k == "X":
            top, bot = nid + 1, nid + 2
            nid += 2
            d_under = dirs[(e - 1, i + 1)]
            if d_under == +1:
                tuples.append((cur[i], bot, top, cur[i - 1]))
            else:
                tuples.append((top, cur[i - 1], cur[i], bot))
            cur[i - 1], cur[i] = top, bot
        else:
            a, b = cur[i - 1], cur[i]
            del cur[i - 1:i + 1]
            uf.union(a, b)
    assert not cur
    return _finalize_pd(tuples, uf, nid)


# ---------------------------------------------------------------------------
# Braids


def braid_closure_pd(n, letters):
    for g in letters:
        if g == 0 or abs(g) > n - 1:
            raise FrontError(f"bad letter {g} for B{n}")
    init = list(range(1, n + 1))
    cur = list(init)
    nid = n
    tuples = []
    uf = _UF()
    for g in letters:
        a = abs(g)
        top, bot = nid + 1, nid + 2
        nid += 2
        if g > 0:
            tuples.append((cur[a], bot, top, cur[a - 1]))
        else:
            tuples.append((cur[a - 1], cur[a], bot, top))
        cur[a - 1], cur[a] = top, bot
    for r in range(n):
        uf.union(init[r], cur[r])
    return _finalize_pd(tuples, uf, nid)


def closure_permutation(n, letters):
    perm = list(range(n))
    for g in letters:
        a = abs(g)
        perm[a - 1], perm[a] = perm[a], perm[a - 1]
    seen = [False] * n
    ncomp = 0
    for s in range(n):
        if not seen[s]:
            ncomp += 1
            j = s
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return perm, ncomp


def qp_expand(n, factors):
    word = []
    for w, i in factors:
        if not (1 <= i <= n - 1):
            raise FrontError(f"bad generator index {i}")
        word.extend(w)
        word.append(i)
        word.extend(-g for g in reversed(w))
    return word


# ---------------------------------------------------------------------------
# Planar diagram utilities


def pd_orient_trace(tuples):
    """Determine each crossing's over-direction; returns list of signs.
    sign +1  <=> over strand runs slot3 -> slot1.
    Slots: 0 incoming under, 2 outgoing under.
    Components whose direction is not forced by the under-slots are
    oriented by assigning +1 to their lowest-index crossing."""
    occ = {}
    for ci, t in enumerate(tuples):
        for s, e in enumerate(t):
            occ.setdefault(e, []).append((ci, s))
    for e, os_ in occ.items():
        if len(os_) != 2:
            raise FrontError(f"edge {e} appears {len(os_)} times")
    n = len(tuples)
    sign = [0] * n
    # io of a slot given a crossing sign: +1 incoming, -1 outgoing
    fixed_io = {0: +1, 2: -1}

    def over_io(s, sg):
        return sg if s == 3 else -sg    # io(slot3) = sign, io(slot1) = -sign

    adj = [[] for _ in range(n)]        # (other, parity): sign_a = parity*sign_b
    forced = {}

    def force(ci, v):
        if forced.setdefault(ci, v) != v:
            raise FrontError("inconsistent orientation")

    for e, ((c1, s1), (c2, s2)) in occ.items():
        f1, f2 = s1 in fixed_io, s2 in fixed_io
        if f1 and f2:
            if fixed_io[s1] + fixed_io[s2] != 0:
                raise FrontError("inconsistent orientation")
        elif f1 != f2:
            if f2:
                c1, s1, c2, s2 = c2, s2, c1, s1
            want = -fixed_io[s1]        # io required at the over slot
            force(c2, want if s2 == 3 else -want)
        else:
            # io1 = -io2  =>  over_io(s1, g1) = -over_io(s2, g2)
            par = -1 if (s1 == 3) == (s2 == 3) else +1
            adj[c1].append((c2, par))
            adj[c2].append((c1, par))

    def assign(ci, v):
        stack = [(ci, v)]
        while stack:
            cj, w = stack.pop()
            if sign[cj] != 0:
                if sign[cj] != w:
                    raise FrontError("inconsistent orientation")
                continue
            sign[cj] = w
            if cj in forced and forced[cj] != w:
                raise FrontError("inconsistent orientation")
            for ck, par in adj[cj]:
                stack.append((ck, par * w))

    for ci, v in sorted(forced.items()):
        if sign[ci] == 0:
            assign(ci, v)
    for ci in range(n):
        if sign[ci] == 0:
            assign(ci, +1)
    return sign


def pd_writhe(tuples):
    return sum(pd_orient_trace(tuples))


def pd_mirror(tuples, free_loops):
    signs = pd_orient_trace(tuples)
    out = []
    for t, sg in zip(tuples, signs):
        if sg == +1:
            out.append((t[3], t[0], t[1], t[2]))
        else:
            out.append((t[1], t[2], t[3], t[0]))
    return out, free_loops


def kauffman_bracket(tuples, free_loops):
    """State sum; each circle contributes (-A^2 - A^-2)."""
    n = len(tuples)
    total = {}
    for mask in range(1 << n):
        uf = _UF()
        touched = set()
        nb = 0
        for ci, t in enumerate(tuples):
            touched.update(t)
            if mask >> ci & 1:      # B: join (1,2) and (3,0)
                uf.union(t[1], t[2])
                uf.union(t[3], t[0])
                nb += 1
            else:                   # A: join (0,1) and (2,3)
                uf.union(t[0], t[1])
                uf.union(t[2], t[3])
        loops = len({uf.find(e) for e in touched}) + free_loops
        term = p1_mul(p1_mono(n - 2 * nb), p1_pow(DELTA_BR, loops))
        total = p1_add(total, term)
    if n == 0:
        total = p1_pow(DELTA_BR, free_loops)
    return total


def p1_pow(p, n):
    r = {0: 1}
    for _ in range(n):
        r = p1_mul(r, p)
    return r


def jones(tuples, free_loops, writhe=None):
    if not tuples and not free_loops:
        raise FrontError("empty diagram has no Jones polynomial")
    if writhe is None:
        writhe = pd_writhe(tuples)
    br = kauffman_bracket(tuples, free_loops)
    pref = p1_mono(-3 * writhe, (-1) ** (writhe % 2))
    return p1_divide_exact(p1_mul(pref, br), DELTA_BR)


# ---------------------------------------------------------------------------
# Dubrovnik polynomial


def _splice(tuples, ci, pairs):
    """Remove crossing ci, joining the given slot pairs; returns
    (new tuples, extra free loops)."""
    t = tuples[ci]
    rest = [list(x) for x in tuples[:ci] + tuples[ci + 1:]]
    loops = 0
    joins = [[t[a], t[b]] for a, b in pairs]
    for jn in joins:
        x, y = jn
        if x == y:
            loops += 1
            continue
        for r in rest:
            for s in range(4):
                if r[s] == y:
                    r[s] = x
        for jn2 in joins:
            if jn2[0] == y:
                jn2[0] = x
            if jn2[1] == y:
                jn2[1] = x
    return [tuple(r) for r in rest], loops


def _canon_key(tuples, loops):
    relab = {}
    out = []
    for t in tuples:
        out.append(tuple(relab.setdefault(e, len(relab) + 1) for e in t))
    return (tuple(out), loops)


def _occ_map(tuples):
    occ = {}
    for ci, t in enumerate(tuples):
        for s, e in enumerate(t):
            occ.setdefault(e, []).append((ci, s))
    return occ


def _walk(tuples):
    """Deterministic traversal of the underlying curves.  Returns
    (bad_list, ncomp): bad_list is the crossings first reached on their
    under line, in visit order; ncomp is the number of closed curves.
    The walk itself (sequence of edges) is invariant under over/under
    switches since it only uses the through-pairing of slots."""
    occ = _occ_map(tuples)

    def other(ci, s):
        a, b = occ[tuples[ci][s]]
        return b if a == (ci, s) else a

    def line(s):
        return s % 2        # 0 = under line (slots 0,2), 1 = over line

    visited = set()
    first_arrival = []
    ncomp = 0
    for ci0 in range(len(tuples)):
        for s0 in range(4):
            if (ci0, line(s0)) in visited:
                continue
            ncomp += 1
            ci, s = ci0, s0
            while (ci, line(s)) not in visited:
                visited.add((ci, line(s)))
                first_arrival.append((ci, s))
                ci, s = other(ci, (s + 2) % 4)
    seen = set()
    bad = []
    for ci, s in first_arrival:
        if ci not in seen:
            seen.add(ci)
            if s in (0, 2):
                bad.append(ci)
    return bad, ncomp


def _descending_value(tuples, ncomp):
    """D of a kink-free descending diagram: a^(self-writhe) * delta^(c-1).
    The sign of a self-crossing is found by walking from its under-out slot
    until re-entering it: arrival on slot 3 means the over strand runs
    slot3 -> slot1 relative to the under direction, i.e. sign +1."""
    occ = _occ_map(tuples)

    def other(ci, s):
        a, b = occ[tuples[ci][s]]
        return b if a == (ci, s) else a

    w = 0
    for ci in range(len(tuples)):
        cj, s = other(ci, 2)
        while cj != ci:
            cj, s = other(cj, (s + 2) % 4)
        if s in (1, 3):     # same component: first return is on the over line
            w += 1 if s == 3 else -1
        # s == 0: the under line closed without meeting the over line,
        # so the crossing involves two components and contributes nothing
    return p2_mul({(w, 0): 1}, p2_pow(DELTA_DUB, ncomp - 1))


def _switch(t):
    return (t[1], t[2], t[3], t[0])


def dubrovnik(tuples, free_loops, _memo=None, _ncross=None):
    """Dubrovnik-form Kauffman polynomial D (regular-isotopy invariant).
    Recursion: strip kinks (factor a^+-1), then switch all crossings that a
    canonical traversal first meets on their under line; the fully switched
    diagram is descending and evaluated directly, and each switch costs a
    z-weighted pair of smoothings with strictly fewer crossings."""
    if _memo is None:
        _memo = {}
    if _ncross is not None and len(tuples) >= _ncross:
        raise FrontError("nontermination: crossing count did not decrease")
    if not tuples:
        if free_loops < 1:
            raise FrontError("empty diagram has no Kauffman polynomial")
        return p2_pow(DELTA_DUB, free_loops - 1)
    if free_loops:
        return p2_mul(p2_pow(DELTA_DUB, free_loops),
                      dubrovnik(tuples, 0, _memo, _ncross))
    key = _canon_key(tuples, 0)
    if key in _memo:
        return _memo[key]
    # strip kinks
    for ci, t in enumerate(tuples):
        kin = None
        if t[0] == t[1]:
            kin = (+1, (2, 3))
        elif t[2] == t[3]:
            kin = (+1, (0, 1))
        elif t[1] == t[2]:
            kin = (-1, (3, 0))
        elif t[3] == t[0]:
            kin = (-1, (1, 2))
        if kin:
            sgn, through = kin
            rest, loops = _splice(tuples, ci, [through])
            val = p2_mul({(sgn, 0): 1},
                         dubrovnik(rest, loops, _memo, len(tuples)))
            _memo[key] = val
            return val
    bad, ncomp = _walk(tuples)
    cur = list(tuples)
    corrections = {}
    for cj in bad:
        a_join, la = _splice(cur, cj, [(0, 1), (2, 3)])
        b_join, lb = _splice(cur, cj, [(1, 2), (3, 0)])
        corrections = p2_add(
            corrections,
            p2_add(dubrovnik(a_join, la, _memo, len(tuples)),
                   p2_scale(dubrovnik(b_join, lb, _memo, len(tuples)), -1)))
        cur[cj] = _switch(cur[cj])
    val = p2_add(_descending_value(cur, ncomp),
                 p2_mul(p2_mono(0, 1), corrections))
    _memo[key] = val
    return val


def f_poly(tuples, free_loops, writhe=None):
    if writhe is None:
        writhe = pd_writhe(tuples)
    d = dubrovnik(tuples, free_loops)
    return p2_mul({(-writhe, 0): 1}, d)


def tb_upper_bound(tuples, free_loops, writhe=None):
    f = f_poly(tuples, free_loops, writhe)
    dega = max(a for a, _ in f)
    return -dega - 1


# ---------------------------------------------------------------------------
# Moves (word rewrites)


def try_far_commute(word, p):
    """Swap events p, p+1 (0-based) when they are a far-commuting pair.
    Returns the new word or None."""
    if p < 0 or p + 1 >= len(word):
        return None
    (k1, a), (k2, b) = word[p], word[p + 1]
    res = None
    if k1 == "X" and k2 == "X":
        if abs(a - b) >= 2:
            res = [("X", b), ("X", a)]
    elif k1 == "X" and k2 == "L":
        if b <= a:
            res = [("L", b), ("X", a + 2)]
        elif b >= a + 2:
            res = [("L", b), ("X", a)]
    elif k1 == "L" and k2 == "X":
        if b <= a - 2:
            res = [("X", b), ("L", a)]
        elif b >= a + 2:
            res = [("X", b - 2), ("L", a)]
    elif k1 == "X" and k2 == "R":
        if b >= a + 2:
            res = [("R", b), ("X", a)]
        elif b <= a - 2:
            res = [("R", b), ("X", a - 2)]
    elif k1 == "R" and k2 == "X":
        if b >= a:
            res = [("X", b + 2), ("R", a)]
        elif b <= a - 2:
            res = [("X", b), ("R", a)]
    elif k1 == "L" and k2 == "L":
        if b <= a:
            res = [("L", b), ("L", a + 2)]
        elif b >= a + 2:
            res = [("L", b - 2), ("L", a)]
    elif k1 == "R" and k2 == "R":
        if b >= a:
            res = [("R", b + 2), ("R", a)]
        elif b <= a - 2:
            res = [("R", b), ("R", a - 2)]
    elif k1 == "L" and k2 == "R":
        if b <= a - 2:
            res = [("R", b), ("L", a - 2)]
        elif b >= a + 2:
            res = [("R", b - 2), ("L", a)]
    elif k1 == "R" and k2 == "L":
        if b <= a - 1:
            res = [("L", b), ("R", a + 2)]
        elif b >= a + 1:
            res = [("L", b + 2), ("R", a)]
    if res is None:
        return None
    out = word[:p] + res + word[p + 2:]
    try:
        validate_front(out)
    except FrontError:
        return None
    return out


TOK_RANK = {"L": 0, "R": 1, "X": 2}


def normal_form(word):
    word = list(word)
    changed = True
    while changed:
        changed = False
        for p in range(len(word) - 1):
            nw = try_far_commute(word, p)
            if nw is not None and [(TOK_RANK[k], i) for k, i in nw] < \
                    [(TOK_RANK[k], i) for k, i in word]:
                word = nw
                changed = True
                break
    return word


def apply_rewrite(word, p, cut, repl):
    out = word[:p] + repl + word[p + cut:]
    validate_front(out)
    return out


def move_sites(word):
    """Enumerate (kind, index, variant) sites."""
    cs = gap_counts(word)
    sites = []
    m = len(word)
    for p in range(m + 1):
        for r in range(1, cs[p] + 1):
            sites.append(("R1a", p, r))
            sites.append(("R1b", p, r))
        for i in range(1, cs[p] + 2):
            sites.append(("Birth", p, i))
    for p in range(m):
        k, i = word[p]
        if k == "L":
            if cs[p] >= i:
                sites.append(("R2a", p, 0))
            if i >= 2:
                sites.append(("R2a", p, 1))
        if k == "R":
            if cs[p] >= i + 2:
                sites.append(("R2b", p, 0))
            if i >= 2:
                sites.append(("R2b", p, 1))
        if p + 1 < m and k == "R" and word[p + 1] == ("L", i):
            sites.append(("SaddleUp", p, 0))
        if try_far_commute(word, p) is not None:
            sites.append(("FarCommute", p, 0))
    for p in range(m - 2):
        w3 = word[p:p + 3]
        ks = [k for k, _ in w3]
        rs = [i for _, i in w3]
        if ks == ["L", "X", "R"] and rs[1] == rs[0] + 1 and rs[2] == rs[0]:
            sites.append(("R1a-", p, rs[0]))
        if ks == ["L", "X", "R"] and rs[1] == rs[0] - 1 and rs[2] == rs[0]:
            sites.append(("R1b-", p, rs[1]))
        if ks == ["X", "X", "X"]:
            if rs[0] == rs[2] and rs[1] == rs[0] + 1:
                sites.append(("R3", p, 0))
            if rs[0] == rs[2] and rs[1] == rs[0] - 1:
                sites.append(("R3", p, 0))
        if ks == ["L", "X", "X"]:
            if rs[0] == rs[1] + 1 and rs[2] == rs[1] + 1:
                sites.append(("R2a-", p, 0))
            if rs[0] == rs[1] - 1 and rs[2] == rs[1] - 1:
                sites.append(("R2a-", p, 1))
        if ks == ["X", "X", "R"]:
            if rs[0] == rs[1] + 1 and rs[2] == rs[1] + 1:
                sites.append(("R2b-", p, 0))
            if rs[0] == rs[1] - 1 and rs[2] == rs[1] - 1:
                sites.append(("R2b-", p, 1))
    return sites


def apply_move(word, kind, p, variant=0):
    cs = gap_counts(word)
    if kind == "R1a":
        r = variant
        return apply_rewrite(word, p, 0, [("L", r), ("X", r + 1), ("R", r)])
    if kind == "R1b":
        r = variant
        return apply_rewrite(word, p, 0, [("L", r + 1), ("X", r), ("R", r + 1)])
    if kind == "R1a-":
        return apply_rewrite(word, p, 3, [])
    if kind == "R1b-":
        return apply_rewrite(word, p, 3, [])
    if kind == "R2a":
        k = word[p][1]
        if variant == 0:
            return apply_rewrite(word, p, 1, [("L", k + 1), ("X", k), ("X", k + 1)])
        return apply_rewrite(word, p, 1, [("L", k - 1), ("X", k), ("X", k - 1)])
    if kind == "R2b":
        k = word[p][1]
        if variant == 0:
            return apply_rewrite(word, p, 1, [("X", k + 1), ("X", k), ("R", k + 1)])
        return apply_rewrite(word, p, 1, [("X", k - 1), ("X", k), ("R", k - 1)])
    if kind == "R2a-":
        k = word[p][1] - 1 if variant == 0 else word[p][1] + 1
        return apply_rewrite(word, p, 3, [("L", k)])
    if kind == "R2b-":
        k = word[p][1] - 1 if variant == 0 else word[p][1] + 1
        return apply_rewrite(word, p, 3, [("R", k)])
    if kind == "R3":
        a = word[p][1]
        b = word[p + 1][1]
        return apply_rewrite(word, p, 3, [("X", b), ("X", a), ("X", b)])
    if kind == "SaddleUp":
        return apply_rewrite(word, p, 2, [])
    if kind == "Birth":
        i = variant
        return apply_rewrite(word, p, 0, [("L", i), ("R", i)])
    if kind == "FarCommute":
        nw = try_far_commute(word, p)
        if nw is None:
            raise FrontError("not a far-commuting pair")
        return nw
    raise FrontError(f"unknown move {kind}")


def saddle_coherent(word, p):
    """word[p] = R_i, word[p+1] = L_i.  Coherent iff the strand at row i
    flows the same horizontal direction on both sides."""
    _, dirs = components(word)
    i = word[p][1]
    e = p + 1
    return dirs[(e - 1, i)] == dirs[(e + 1, i)]


def random_front(rng, max_events=20, max_cross=8):
    while True:
        word = []
        c = 0
        nx = 0
        for _ in range(max_events):
            opts = []
            remaining = max_events - len(word)
            if remaining <= c // 2 + 1:
                if c >= 2:
                    opts = [("R", i) for i in range(1, c)]
            else:
                if c < 8:
                    opts += [("L", i) for i in range(1, c + 2)] * 2
                if c >= 2 and nx < max_cross:
                    opts += [("X", i) for i in range(1, c)] * 3
                if c >= 2:
                    opts += [("R", i) for i in range(1, c)]
            if not opts:
                if c == 0:
                    break
                opts = [("R", i) for i in range(1, c)]
            k, i = opts[rng.randrange(len(opts))]
            word.append((k, i))
            c += 2 if k == "L" else -2 if k == "R" else 0
            nx += 1 if k == "X" else 0
            if c == 0 and rng.random() < 0.4:
                break
        if c != 0:
            continue
        if word:
            validate_front(word)
            return word
