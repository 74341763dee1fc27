"""Pure NumPy/Python reference kernels.

Mirrors wavecoeff.kernels._compiled operation for operation; keep the two in
sync (the cross-backend tests compare them to the last few ulp).

Scheme: average-acceleration Newmark (beta = 1/4, gamma = 1/2, algebraically
Crank-Nicolson) for u'' = L u + F, where L is the flux-form operator

    (L u)_i = c_{i-1}(u_{i-1} - u_i) + c_i(u_{i+1} - u_i),
    c_i = (p_i + p_{i+1}) / (2 h^2),

with homogeneous-Neumann ghost mirroring at both ends (u_{-1} = u_1,
p_{-1} = p_1), giving boundary rows 2 c_0 (u_1 - u_0) and
2 c_{n-1} (u_{n-1} - u_n). Each level solves one constant tridiagonal system
(I - tau^2/4 L) by Thomas elimination, factored once per march.
"""

import numpy as np


def flux_coefficients(p, h):
    """Midpoint flux coefficients c_i = (p_i + p_{i+1}) / (2 h^2), length n."""
    p = np.asarray(p, dtype=float)
    return (p[:-1] + p[1:]) / (2.0 * h * h)


def apply_flux(c, u):
    """Apply the flux-form operator with Neumann ghost mirroring (1D)."""
    out = np.empty_like(u)
    out[1:-1] = c[:-1] * u[:-2] - (c[:-1] + c[1:]) * u[1:-1] + c[1:] * u[2:]
    out[0] = 2.0 * c[0] * (u[1] - u[0])
    out[-1] = 2.0 * c[-1] * (u[-2] - u[-1])
    return out


def apply_flux_batch(c, u):
    """Apply the flux operator to every row of ``u`` (levels x nodes)."""
    out = np.empty_like(u)
    out[:, 1:-1] = c[:-1] * u[:, :-2] - (c[:-1] + c[1:]) * u[:, 1:-1] + c[1:] * u[:, 2:]
    out[:, 0] = 2.0 * c[0] * (u[:, 1] - u[:, 0])
    out[:, -1] = 2.0 * c[-1] * (u[:, -2] - u[:, -1])
    return out


def thomas_factor(lower, diag, upper):
    """LU-cache for Thomas elimination: returns (cp, den).

    ``lower[0]`` and ``upper[-1]`` are ignored. No pivoting; intended for the
    diagonally dominant systems assembled in this package.
    """
    lo = np.asarray(lower, dtype=float).tolist()
    di = np.asarray(diag, dtype=float).tolist()
    up = np.asarray(upper, dtype=float).tolist()
    n = len(di)
    cp = [0.0] * n
    den = [0.0] * n
    den[0] = di[0]
    cp[0] = up[0] / di[0]
    for i in range(1, n):
        d = di[i] - lo[i] * cp[i - 1]
        den[i] = d
        cp[i] = up[i] / d
    return np.array(cp), np.array(den)


def thomas_solve(lower, cp, den, rhs):
    """Back-substitution against a factorization from :func:`thomas_factor`."""
    lo = np.asarray(lower, dtype=float).tolist()
    cpl = np.asarray(cp, dtype=float).tolist()
    dl = np.asarray(den, dtype=float).tolist()
    y = np.asarray(rhs, dtype=float).tolist()
    n = len(y)
    y[0] = y[0] / dl[0]
    for i in range(1, n):
        y[i] = (y[i] - lo[i] * y[i - 1]) / dl[i]
    for i in range(n - 2, -1, -1):
        y[i] = y[i] - cpl[i] * y[i + 1]
    return np.array(y)


def _newmark_bands(c, qt):
    n1 = len(c) + 1
    lower = np.zeros(n1)
    diag = np.empty(n1)
    upper = np.zeros(n1)
    diag[1:-1] = 1.0 + qt * (c[:-1] + c[1:])
    lower[1:-1] = -(qt * c[:-1])
    upper[1:-1] = -(qt * c[1:])
    diag[0] = 1.0 + 2.0 * qt * c[0]
    upper[0] = -(2.0 * qt * c[0])
    diag[-1] = 1.0 + 2.0 * qt * c[-1]
    lower[-1] = -(2.0 * qt * c[-1])
    return lower, diag, upper


def newmark_march(c, tau, src, u0, v0):
    """March u'' = L u + F over the whole mesh; returns (levels x nodes).

    ``src`` holds F sampled at every level; row 0 of the result is ``u0``.
    """
    src = np.ascontiguousarray(src, dtype=float)
    m1, n1 = src.shape
    qt = 0.25 * tau * tau
    half = 0.5 * tau
    lower, diag, upper = _newmark_bands(c, qt)
    cp, den = thomas_factor(lower, diag, upper)
    lo, cpl, dl = lower.tolist(), cp.tolist(), den.tolist()

    u = np.empty((m1, n1))
    uk = np.array(u0, dtype=float)
    vk = np.array(v0, dtype=float)
    ak = apply_flux(c, uk) + src[0]
    u[0] = uk
    for k in range(m1 - 1):
        fk1 = src[k + 1]
        y = (uk + tau * vk + qt * (ak + fk1)).tolist()
        # Thomas sweeps, same recurrences as thomas_solve
        y[0] = y[0] / dl[0]
        for i in range(1, n1):
            y[i] = (y[i] - lo[i] * y[i - 1]) / dl[i]
        for i in range(n1 - 2, -1, -1):
            y[i] = y[i] - cpl[i] * y[i + 1]
        uk = np.array(y)
        ak1 = apply_flux(c, uk) + fk1
        vk = vk + half * (ak + ak1)
        ak = ak1
        u[k + 1] = uk
    return u
