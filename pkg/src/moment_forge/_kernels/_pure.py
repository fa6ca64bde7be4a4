"""Reference Python kernels.  ``_ckernels.pyx`` mirrors these signatures."""


def convolve(ar, ai, br, bi, d):
    """Product of two dense polynomials over Z[sqrt(d)].

    Each operand is given as two equal-length lists of ints (rational and
    sqrt(d) parts, lowest degree first).  Returns the two coefficient lists
    of the product, of length ``len(ar) + len(br) - 1``.
    """
    n = len(ar)
    m = len(br)
    if not n or not m:
        return [], []
    cr = [0] * (n + m - 1)
    ci = [0] * (n + m - 1)
    b_rational = not any(bi)
    for i in range(n):
        x = ar[i]
        y = ai[i]
        if not x and not y:
            continue
        if b_rational:
            for j in range(m):
                u = br[j]
                cr[i + j] += x * u
                ci[i + j] += y * u
        else:
            dy = d * y
            for j in range(m):
                u = br[j]
                v = bi[j]
                cr[i + j] += x * u + dy * v
                ci[i + j] += x * v + y * u
    return cr, ci


def dot_window(pr, pi, qr, qi, start, d):
    """``sum_k (pr[start+k] + pi[start+k] s)(qr[k] + qi[k] s)`` with ``s = sqrt(d)``.

    Indices that fall outside ``pr`` contribute zero.  This is the single
    output coefficient of a product, used to read off residues without
    forming the whole product.
    """
    sr = 0
    si = 0
    n = len(pr)
    for k in range(len(qr)):
        t = start + k
        if t < 0 or t >= n:
            continue
        x = pr[t]
        y = pi[t]
        u = qr[k]
        v = qi[k]
        sr += x * u + d * y * v
        si += x * v + y * u
    return sr, si
