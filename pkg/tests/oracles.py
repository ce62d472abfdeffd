"""Brute-force reference computations on plain integers.

Nothing here imports the package under test.  Running the module prints
the values pinned in ``frozen.py``.
"""

from __future__ import annotations

from itertools import product


def squares_bf(p):
    return {b * b % p for b in range(p)}


def is_square_bf(a, p):
    return a % p in squares_bf(p)


def sqrt_bf(a, p):
    roots = [b for b in range(p) if b * b % p == a % p]
    return min(roots) if roots else None


def inv(a, p):
    return pow(a, p - 2, p)


def curve_points_bf(p, c, d):
    return [
        (x, y)
        for x, y in product(range(p), repeat=2)
        if (x * x + c * y * y - 1 - d * x * x * y * y) % p == 0
    ]


def add0_bf(P, Q, p, c, d):
    (x1, y1), (x2, y2) = P, Q
    m = d * x1 * x2 * y1 * y2
    dm, dp = (1 - m) % p, (1 + m) % p
    if dm == 0 or dp == 0:
        return None
    return ((x1 * x2 - c * y1 * y2) * inv(dm, p) % p, (x1 * y2 + y1 * x2) * inv(dp, p) % p)


def tau_bf(P, p, t):
    x, y = P
    return inv(t * x % p, p), inv(t * y % p, p)


def add1_bf(P, Q, p, t):
    """tau((tau P) +0 Q), computed through the basic law."""
    x, y = P
    if x == 0 or y == 0:
        return None
    S = add0_bf(tau_bf(P, p, t), Q, p, 1, t * t)
    if S is None or S[0] == 0 or S[1] == 0:
        return None
    return tau_bf(S, p, t)


def classes_bf(p, t):
    """Partition of the two affine copies under [P, i] ~ [tau P, i + 1]."""
    pts = curve_points_bf(p, 1, t * t)
    parent = {(P, i): (P, i) for P in pts for i in (0, 1)}

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for P in pts:
        if P[0] and P[1]:
            for i in (0, 1):
                a, b = find((P, i)), find((tau_bf(P, p, t), 1 - i))
                if a != b:
                    parent[a] = b
    groups = {}
    for node in parent:
        groups.setdefault(find(node), set()).add(node)
    return list(groups.values())


def nonsummable_witness_bf(p, t):
    """First (P, Q) on the rescaled curve with both deltas zero."""
    d = t * t
    for P, Q in product(curve_points_bf(p, 1, d), repeat=2):
        (x1, y1), (x2, y2) = P, Q
        m = d * x1 * x2 * y1 * y2
        d0 = (1 - m) * (1 + m) % p
        d1 = (x2 * y1 - x1 * y2) * (x1 * x2 + y1 * y2) % p
        if d0 == 0 and d1 == 0:
            return P, Q
    return None


def delta_zero_pairs_bf(p, c, d):
    pts = curve_points_bf(p, c, d)
    out = []
    for P, Q in product(pts, repeat=2):
        m = d * P[0] * P[1] * Q[0] * Q[1]
        if (1 - m) * (1 + m) % p == 0:
            out.append((P, Q))
    return out


if __name__ == "__main__":
    print("squares mod 13:", sorted(squares_bf(13)))
    print("sqrt(3) mod 13:", sqrt_bf(3, 13))
    print("2 square mod 13:", is_square_bf(2, 13))
    for p, c, d in [(5, 1, 2), (13, 1, 2), (17, 1, 3), (29, 1, 2), (5, 1, 0)]:
        print(f"|C({p},{c},{d})| =", len(curve_points_bf(p, c, d)))
    for p, t in [(13, 2), (17, 2), (29, 3)]:
        cl = classes_bf(p, t)
        print(f"|E({p},{t})| =", len(cl), " witness:", nonsummable_witness_bf(p, t))
    print("delta = 0 pairs at (13,1,4):", len(delta_zero_pairs_bf(13, 1, 4)))
