"""Polynomials over Z/mZ: finite-field factorisation and Hensel lifting.

Polynomials are lists of ints, lowest degree first, with no trailing zeros
(the zero polynomial is ``[]``).  Coefficients are kept in ``range(m)``.
"""

import random


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def pmod(a, m):
    return trim([c % m for c in a])


def add(a, b, m):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m for i in range(n)])


def sub(a, b, m):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m for i in range(n)])


def mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % m for c in out])


def scale(a, c, m):
    return trim([x * c % m for x in a])


def divmod_monic(a, b, m):
    """Quotient and remainder by a monic ``b`` over Z/mZ."""
    if b[-1] % m != 1:
        raise ValueError("divisor must be monic")
    a = [c % m for c in a]
    db = len(b) - 1
    if len(a) <= db:
        return [], trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] % m
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % m
    return trim(q), trim(a[:db])


def rem(a, b, m):
    return divmod_monic(a, b, m)[1]


def mulmod(a, b, f, m):
    return rem(mul(a, b, m), f, m)


def powmod(a, e, f, m):
    result = [1 % m] if m > 1 else []
    base = rem(a, f, m)
    while e:
        if e & 1:
            result = mulmod(result, base, f, m)
        base = mulmod(base, base, f, m)
        e >>= 1
    return trim(result)


# -- field case: m = p prime --------------------------------------------------


def monic(a, p):
    inv = pow(a[-1], -1, p)
    return scale(a, inv, p)


def gcd(a, b, p):
    a, b = trim(a), trim(b)
    while b:
        b_m = monic(b, p)
        a, b = b_m, rem(a, b_m, p)
    return monic(a, p) if a else []


def xgcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        inv = pow(r1[-1], -1, p)
        q, r = divmod_monic(scale(r0, inv, p), scale(r1, inv, p), p)
        # r0 = q*r1 + r*(1/inv) ; rescale remainder back
        r = scale(r, r1[-1], p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def inverse_mod(a, f, p):
    g, s, _ = xgcd(a, f, p)
    if g != [1]:
        raise ZeroDivisionError("not invertible modulo f")
    return rem(s, f, p)


def equal_degree_factorization(f, d, p, seed=0):
    """Split a monic squarefree ``f`` whose irreducible factors all have degree d.

    Cantor-Zassenhaus for odd p.  Factors are returned sorted so the output
    does not depend on the random choices.
    """
    if p == 2:
        raise ValueError("odd characteristic only")
    if (len(f) - 1) % d:
        raise ValueError(f"degree {len(f) - 1} is not a multiple of {d}")
    rng = random.Random(seed)
    out = []
    stack = [monic(f, p)]
    while stack:
        g = stack.pop()
        n = len(g) - 1
        if n == d:
            out.append(g)
            continue
        for _ in range(200):
            a = trim([rng.randrange(p) for _ in range(n)])
            if len(a) < 2:
                continue
            h = gcd(a, g, p)
            if 0 < len(h) - 1 < n:
                break
            b = sub(powmod(a, (p ** d - 1) // 2, g, p), [1], p)
            h = gcd(b, g, p)
            if 0 < len(h) - 1 < n:
                break
        else:
            # each try splits with probability about 1/2 when the factor
            # degree is right; 200 misses mean it is not
            raise ValueError(f"factors of f do not all have degree {d}")
        stack.append(h)
        stack.append(divmod_monic(g, h, p)[0])
    return sorted(out, key=lambda q: (len(q), q[::-1]))


def hensel_lift(f, g0, p, s):
    """Lift a monic factor ``g0`` of ``f`` mod p to a factor mod p^s.

    ``f`` is a monic integer polynomial, squarefree mod p.  Returns the monic
    lift of g0 (coefficients mod p^s).
    """
    g0 = monic(pmod(g0, p), p)
    h0, r = divmod_monic(pmod(f, p), g0, p)
    if r:
        raise ValueError("g0 does not divide f mod p")
    one, sg, th = xgcd(g0, h0, p)
    if one != [1]:
        raise ValueError("factors are not coprime mod p")
    G, H = list(g0), list(h0)
    pk = p
    for _ in range(1, s):
        # f - G*H is divisible by p^k
        diff = sub(list(f), mul(G, H, pk * p * p), pk * p * p)
        e = pmod([c // pk for c in diff], p)
        dg = rem(mul(e, th, p), g0, p)
        dh = rem(mul(e, sg, p), h0, p)
        G = add(G, [c * pk for c in dg], pk * p)
        H = add(H, [c * pk for c in dh], pk * p)
        pk *= p
    return pmod(G, pk)
