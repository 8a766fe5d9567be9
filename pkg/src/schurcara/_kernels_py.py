"""Pure-Python numeric kernels.

Reference implementations of the hot inner loops: the damped-convolution
coefficient recursion, the triangular b/c recursions, the direct recursion
for the Caratheodory parametrization, the Schur extraction sweep and the
Hermitian Toeplitz minors. ``schurcara._ckernels`` is a compiled drop-in
replacement with the same signatures; selection happens at import time in
``schurcara._backend``.

All functions take and return plain Python ``complex`` values.
"""

from .errors import NotSchurFunctionError


def vec_f(gammas):
    """First n values of the damped-convolution map, one per prefix.

    Entry m-1 is the map of length m applied to ``gammas[:m]``. Values over
    contiguous windows are memoised in a table (``table[i][m]`` holds the
    length-m value on ``gammas[i:i+m]``), which turns the naive exponential
    recursion into O(n^3) work.
    """
    n = len(gammas)
    if n == 0:
        return []
    g = [complex(v) for v in gammas]
    table = [[0j] * (n - i + 1) for i in range(n)]
    for i in range(n):
        table[i][1] = g[i]
    for m in range(2, n + 1):
        for i in range(n - m + 1):
            gi = g[i]
            damp = 1.0 - (gi.real * gi.real + gi.imag * gi.imag)
            conv = 0j
            for k in range(2, m):
                conv += table[i + 1][m - k] * table[i][k]
            table[i][m] = damp * table[i + 1][m - 1] - gi.conjugate() * conv
    return [table[0][m] for m in range(1, n + 1)]


def vec_q(xs):
    """Triangular recursion q_m = x_m + sum_{k<m} x_{m-k} q_k, all prefixes."""
    n = len(xs)
    x = [complex(v) for v in xs]
    q = [0j] * (n + 1)
    for m in range(1, n + 1):
        acc = x[m - 1]
        for k in range(1, m):
            acc += x[m - k - 1] * q[k]
        q[m] = acc
    return q[1:]


def vec_r(xs):
    """Inverse triangular recursion r_m = x_m - sum_{k<m} x_{m-k} r_k."""
    n = len(xs)
    x = [complex(v) for v in xs]
    r = [0j] * (n + 1)
    for m in range(1, n + 1):
        acc = x[m - 1]
        for k in range(1, m):
            acc -= x[m - k - 1] * r[k]
        r[m] = acc
    return r[1:]


def vec_t_recursive(gammas):
    """Caratheodory coefficients by the direct shift recursion, all prefixes.

    ``table[i][m]`` holds the length-m value on ``gammas[i:i+m]``; column 0
    is the initial condition 1. O(n^3).
    """
    n = len(gammas)
    if n == 0:
        return []
    g = [complex(v) for v in gammas]
    table = [[0j] * (n - i + 1) for i in range(n)]
    for i in range(n):
        table[i][0] = 1.0 + 0j
    for m in range(1, n + 1):
        for i in range(n - m + 1):
            gi = g[i]
            up = 1.0 + gi
            down = 1.0 + gi.conjugate()
            acc = gi * table[i][m - 1]
            for k in range(1, m):
                acc += table[i + 1][k] * (up * table[i][m - k - 1] - down * table[i][m - k])
            table[i][m] = acc
    return [table[0][m] for m in range(1, n + 1)]


def extract_gammas(f_coeffs, boundary_tol, modulus_tol):
    """Schur parameters of f from its Taylor coefficients.

    Returns ``(gammas, blaschke_index)``; ``blaschke_index`` is ``None``
    unless some parameter reaches the unit circle (within ``boundary_tol``),
    in which case the remaining parameters are exact zeros. Raises
    :class:`NotSchurFunctionError` when a parameter exceeds 1 + modulus_tol.
    """
    n = len(f_coeffs)
    work = [complex(v) for v in f_coeffs]
    gammas = []
    for j in range(1, n + 1):
        gam = work[0]
        mod = abs(gam)
        if mod > 1.0 + modulus_tol:
            raise NotSchurFunctionError(j, mod)
        gammas.append(gam)
        if mod >= 1.0 - boundary_tol:
            gammas.extend([0j] * (n - j))
            return gammas, j
        if j == n:
            break
        # sigma step: shift off the constant term and divide by 1 - conj(gam)*f
        # via forward substitution. The constant denominator term 1 - |gam|^2
        # is kept away from 0 by the boundary guard above.
        den0 = 1.0 - (gam.real * gam.real + gam.imag * gam.imag)
        gbar = gam.conjugate()
        m = len(work) - 1
        out = [0j] * m
        for k in range(m):
            acc = work[k + 1]
            for i in range(1, k + 1):
                acc += gbar * (work[i] * out[k - i])
            out[k] = acc / den0
        work = out
    return gammas, None


def toeplitz_minors(ps):
    """Raw complex determinants of the nested Hermitian Toeplitz matrices.

    Entry k is the determinant of the (k+1)x(k+1) matrix with diagonal 2,
    first row continuing with ``ps[:k]`` and Hermitian reflection below.
    Gaussian elimination with partial pivoting, one sweep per size; the
    caller checks that the imaginary parts are residues and discards them.
    """
    p = [complex(v) for v in ps]
    n = len(p)
    dets = [2.0 + 0j]
    for k in range(1, n + 1):
        dim = k + 1
        a = [
            [
                (2.0 + 0j) if i == j else (p[j - i - 1] if j > i else p[i - j - 1].conjugate())
                for j in range(dim)
            ]
            for i in range(dim)
        ]
        det = 1.0 + 0j
        for col in range(dim):
            piv = col
            best = abs(a[col][col])
            for row in range(col + 1, dim):
                mag = abs(a[row][col])
                if mag > best:
                    best = mag
                    piv = row
            if best == 0.0:
                det = 0j
                break
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            pivot = a[col][col]
            det *= pivot
            arow = a[col]
            for row in range(col + 1, dim):
                factor = a[row][col] / pivot
                if factor == 0:
                    continue
                brow = a[row]
                for cc in range(col + 1, dim):
                    brow[cc] -= factor * arow[cc]
        dets.append(det)
    return dets
