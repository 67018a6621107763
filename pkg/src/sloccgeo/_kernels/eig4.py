"""Eigenvalues of small real non-symmetric matrices.

Classic dense path: Parlett-Reinsch balancing, Householder reduction to upper
Hessenberg form, then Francis implicit double-shift QR iteration with
deflation (EISPACK hqr structure).  Written with plain loops so the same
source runs as-is and under numba.njit; n is 4 everywhere in this package
but the code is generic.
"""

import numpy as np

_EPS = 2.220446049250313e-16
_RADIX = 2.0
_MAXITER = 30


def balance(a):
    """Diagonal similarity scaling toward equal row/column norms (in place)."""
    n = a.shape[0]
    done = False
    while not done:
        done = True
        for i in range(n):
            r = 0.0
            c = 0.0
            for j in range(n):
                if j != i:
                    c += abs(a[j, i])
                    r += abs(a[i, j])
            if c != 0.0 and r != 0.0:
                g = r / _RADIX
                f = 1.0
                s = c + r
                while c < g:
                    f *= _RADIX
                    c *= _RADIX * _RADIX
                g = r * _RADIX
                while c > g:
                    f /= _RADIX
                    c /= _RADIX * _RADIX
                if (c + r) / f < 0.95 * s:
                    done = False
                    g = 1.0 / f
                    for j in range(n):
                        a[i, j] *= g
                    for j in range(n):
                        a[j, i] *= f
    return a


def hessenberg(a):
    """Householder reduction to upper Hessenberg form (in place)."""
    n = a.shape[0]
    v = np.empty(n)
    for k in range(n - 2):
        xnorm = 0.0
        for i in range(k + 1, n):
            xnorm += a[i, k] * a[i, k]
        xnorm = np.sqrt(xnorm)
        if xnorm == 0.0:
            continue
        alpha = -xnorm if a[k + 1, k] >= 0.0 else xnorm
        vnorm2 = 0.0
        for i in range(k + 1, n):
            v[i] = a[i, k]
            if i == k + 1:
                v[i] -= alpha
            vnorm2 += v[i] * v[i]
        if vnorm2 == 0.0:
            continue
        # rows k+1..n-1
        for j in range(k, n):
            dot = 0.0
            for i in range(k + 1, n):
                dot += v[i] * a[i, j]
            f = 2.0 * dot / vnorm2
            for i in range(k + 1, n):
                a[i, j] -= f * v[i]
        # columns k+1..n-1
        for i in range(n):
            dot = 0.0
            for j in range(k + 1, n):
                dot += a[i, j] * v[j]
            f = 2.0 * dot / vnorm2
            for j in range(k + 1, n):
                a[i, j] -= f * v[j]
    return a


def hqr(a, wr, wi):
    """Eigenvalues of an upper Hessenberg matrix (destroys a).

    Fills wr/wi with real/imaginary parts; returns True on convergence.
    """
    n = a.shape[0]
    anorm = 0.0
    for i in range(n):
        lo = i - 1 if i > 0 else 0
        for j in range(lo, n):
            anorm += abs(a[i, j])
    if anorm == 0.0:
        for i in range(n):
            wr[i] = 0.0
            wi[i] = 0.0
        return True
    nn = n - 1
    t = 0.0
    while nn >= 0:
        its = 0
        while True:
            # search for a single small subdiagonal element
            l = nn
            while l >= 1:
                s = abs(a[l - 1, l - 1]) + abs(a[l, l])
                if s == 0.0:
                    s = anorm
                if abs(a[l, l - 1]) <= _EPS * s:
                    a[l, l - 1] = 0.0
                    break
                l -= 1
            x = a[nn, nn]
            if l == nn:                       # one real root
                wr[nn] = x + t
                wi[nn] = 0.0
                nn -= 1
                break
            y = a[nn - 1, nn - 1]
            w = a[nn, nn - 1] * a[nn - 1, nn]
            if l == nn - 1:                   # a 2x2 block: two roots
                p = 0.5 * (y - x)
                q = p * p + w
                z = np.sqrt(abs(q))
                x += t
                if q >= 0.0:                  # real pair
                    z = p + (z if p >= 0.0 else -z)
                    wr[nn - 1] = x + z
                    wr[nn] = wr[nn - 1]
                    if z != 0.0:
                        wr[nn] = x - w / z
                    wi[nn - 1] = 0.0
                    wi[nn] = 0.0
                else:                         # complex conjugate pair
                    wr[nn - 1] = x + p
                    wr[nn] = x + p
                    wi[nn - 1] = -z
                    wi[nn] = z
                nn -= 2
                break
            if its == _MAXITER:
                return False
            if its == 10 or its == 20:        # exceptional shift
                t += x
                for i in range(nn + 1):
                    a[i, i] -= x
                s = abs(a[nn, nn - 1]) + abs(a[nn - 1, nn - 2])
                y = 0.75 * s
                x = y
                w = -0.4375 * s * s
            its += 1
            # look for two consecutive small subdiagonal elements
            m = nn - 2
            p = 0.0
            q = 0.0
            r = 0.0
            while m >= l:
                z = a[m, m]
                rr = x - z
                ss = y - z
                p = (rr * ss - w) / a[m + 1, m] + a[m, m + 1]
                q = a[m + 1, m + 1] - z - rr - ss
                r = a[m + 2, m + 1]
                s = abs(p) + abs(q) + abs(r)
                p /= s
                q /= s
                r /= s
                if m == l:
                    break
                u = abs(a[m, m - 1]) * (abs(q) + abs(r))
                v = abs(p) * (abs(a[m - 1, m - 1]) + abs(z) + abs(a[m + 1, m + 1]))
                if u <= _EPS * v:
                    break
                m -= 1
            for i in range(m + 2, nn + 1):
                a[i, i - 2] = 0.0
            for i in range(m + 3, nn + 1):
                a[i, i - 3] = 0.0
            # double QR step on rows l..nn, columns m..nn
            for k in range(m, nn):
                if k != m:
                    p = a[k, k - 1]
                    q = a[k + 1, k - 1]
                    r = 0.0
                    if k != nn - 1:
                        r = a[k + 2, k - 1]
                    x = abs(p) + abs(q) + abs(r)
                    if x != 0.0:
                        p /= x
                        q /= x
                        r /= x
                s = np.sqrt(p * p + q * q + r * r)
                if p < 0.0:
                    s = -s
                if s == 0.0:
                    continue
                if k == m:
                    if l != m:
                        a[k, k - 1] = -a[k, k - 1]
                else:
                    a[k, k - 1] = -s * x
                p += s
                x = p / s
                y = q / s
                z = r / s
                q /= p
                r /= p
                for j in range(k, nn + 1):    # row modification
                    p = a[k, j] + q * a[k + 1, j]
                    if k != nn - 1:
                        p += r * a[k + 2, j]
                        a[k + 2, j] -= p * z
                    a[k + 1, j] -= p * y
                    a[k, j] -= p * x
                mmin = nn if nn < k + 3 else k + 3
                for i in range(l, mmin + 1):  # column modification
                    p = x * a[i, k] + y * a[i, k + 1]
                    if k != nn - 1:
                        p += z * a[i, k + 2]
                        a[i, k + 2] -= p * r
                    a[i, k + 1] -= p * q
                    a[i, k] -= p
    return True


def eigvals4(a, wr, wi):
    """All eigenvalues of a real 4x4 matrix into wr/wi; True on convergence."""
    h = a.copy()
    balance(h)
    hessenberg(h)
    return hqr(h, wr, wi)
