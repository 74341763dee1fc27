# Compiled counterparts of wavecoeff.kernels._reference; same operation order
# (the build uses -ffp-contract=off so no FMA fusion diverges from NumPy).

import numpy as np

cimport numpy as cnp

cnp.import_array()


def flux_coefficients(p, double h):
    cdef const double[::1] pv = np.ascontiguousarray(p, dtype=np.float64)
    cdef Py_ssize_t n = pv.shape[0] - 1
    out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = (pv[i] + pv[i + 1]) / (2.0 * h * h)
    return out_arr


cdef void _apply_flux(const double[::1] c, const double[::1] u, double[::1] out) noexcept nogil:
    cdef Py_ssize_t n1 = u.shape[0]
    cdef Py_ssize_t i
    for i in range(1, n1 - 1):
        out[i] = c[i - 1] * u[i - 1] - (c[i - 1] + c[i]) * u[i] + c[i] * u[i + 1]
    out[0] = 2.0 * c[0] * (u[1] - u[0])
    out[n1 - 1] = 2.0 * c[n1 - 2] * (u[n1 - 2] - u[n1 - 1])


def apply_flux(c, u):
    cdef const double[::1] cv = np.ascontiguousarray(c, dtype=np.float64)
    cdef const double[::1] uv = np.ascontiguousarray(u, dtype=np.float64)
    out_arr = np.empty(uv.shape[0])
    cdef double[::1] out = out_arr
    _apply_flux(cv, uv, out)
    return out_arr


def apply_flux_batch(c, u):
    cdef const double[::1] cv = np.ascontiguousarray(c, dtype=np.float64)
    cdef const double[:, ::1] uv = np.ascontiguousarray(u, dtype=np.float64)
    out_arr = np.empty((uv.shape[0], uv.shape[1]))
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t k
    with nogil:
        for k in range(uv.shape[0]):
            _apply_flux(cv, uv[k], out[k])
    return out_arr


def thomas_factor(lower, diag, upper):
    cdef const double[::1] lo = np.ascontiguousarray(lower, dtype=np.float64)
    cdef const double[::1] di = np.ascontiguousarray(diag, dtype=np.float64)
    cdef const double[::1] up = np.ascontiguousarray(upper, dtype=np.float64)
    cdef Py_ssize_t n = di.shape[0]
    cp_arr = np.empty(n)
    den_arr = np.empty(n)
    cdef double[::1] cp = cp_arr
    cdef double[::1] den = den_arr
    cdef Py_ssize_t i
    cdef double d
    den[0] = di[0]
    cp[0] = up[0] / di[0]
    for i in range(1, n):
        d = di[i] - lo[i] * cp[i - 1]
        den[i] = d
        cp[i] = up[i] / d
    return cp_arr, den_arr


cdef void _thomas_solve(const double[::1] lo, const double[::1] cp,
                        const double[::1] den, double[::1] y) noexcept nogil:
    cdef Py_ssize_t n = y.shape[0]
    cdef Py_ssize_t i
    y[0] = y[0] / den[0]
    for i in range(1, n):
        y[i] = (y[i] - lo[i] * y[i - 1]) / den[i]
    for i in range(n - 2, -1, -1):
        y[i] = y[i] - cp[i] * y[i + 1]


def thomas_solve(lower, cp, den, rhs):
    cdef const double[::1] lo = np.ascontiguousarray(lower, dtype=np.float64)
    cdef const double[::1] cpv = np.ascontiguousarray(cp, dtype=np.float64)
    cdef const double[::1] dv = np.ascontiguousarray(den, dtype=np.float64)
    out_arr = np.array(rhs, dtype=np.float64)
    cdef double[::1] y = out_arr
    _thomas_solve(lo, cpv, dv, y)
    return out_arr


def newmark_march(c, double tau, src, u0, v0):
    cdef const double[::1] cv = np.ascontiguousarray(c, dtype=np.float64)
    cdef const double[:, ::1] f = np.ascontiguousarray(src, dtype=np.float64)
    cdef Py_ssize_t m1 = f.shape[0]
    cdef Py_ssize_t n1 = f.shape[1]
    cdef double qt = 0.25 * tau * tau
    cdef double half = 0.5 * tau

    lower_arr = np.zeros(n1)
    diag_arr = np.empty(n1)
    upper_arr = np.zeros(n1)
    cdef double[::1] lower = lower_arr
    cdef double[::1] diag = diag_arr
    cdef double[::1] upper = upper_arr
    cdef Py_ssize_t i
    for i in range(1, n1 - 1):
        diag[i] = 1.0 + qt * (cv[i - 1] + cv[i])
        lower[i] = -(qt * cv[i - 1])
        upper[i] = -(qt * cv[i])
    diag[0] = 1.0 + 2.0 * qt * cv[0]
    upper[0] = -(2.0 * qt * cv[0])
    diag[n1 - 1] = 1.0 + 2.0 * qt * cv[n1 - 2]
    lower[n1 - 1] = -(2.0 * qt * cv[n1 - 2])

    cp_arr, den_arr = thomas_factor(lower_arr, diag_arr, upper_arr)
    cdef double[::1] cp = cp_arr
    cdef double[::1] den = den_arr

    u_arr = np.empty((m1, n1))
    cdef double[:, ::1] u = u_arr
    uk_arr = np.array(u0, dtype=np.float64)
    vk_arr = np.array(v0, dtype=np.float64)
    cdef double[::1] uk = uk_arr
    cdef double[::1] vk = vk_arr
    ak_arr = np.empty(n1)
    a1_arr = np.empty(n1)
    y_arr = np.empty(n1)
    cdef double[::1] ak = ak_arr
    cdef double[::1] a1 = a1_arr
    cdef double[::1] y = y_arr
    cdef Py_ssize_t k

    with nogil:
        _apply_flux(cv, uk, ak)
        for i in range(n1):
            ak[i] = ak[i] + f[0, i]
            u[0, i] = uk[i]
        for k in range(m1 - 1):
            for i in range(n1):
                y[i] = uk[i] + tau * vk[i] + qt * (ak[i] + f[k + 1, i])
            _thomas_solve(lower, cp, den, y)
            for i in range(n1):
                uk[i] = y[i]
            _apply_flux(cv, uk, a1)
            for i in range(n1):
                a1[i] = a1[i] + f[k + 1, i]
                vk[i] = vk[i] + half * (ak[i] + a1[i])
                u[k + 1, i] = uk[i]
            for i in range(n1):
                ak[i] = a1[i]
    return u_arr
