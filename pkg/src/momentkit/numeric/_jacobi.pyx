# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernel: moment matrices on CP^2 x CP^2 and their spectra.

Each 3x3 Hermitian matrix is diagonalized by cyclic complex Jacobi.  The
loop runs without the GIL so threads can share the work.
"""
from libc.math cimport sqrt, isfinite, NAN

cdef extern from "complex.h" nogil:
    double cabs(double complex)
    double complex conj(double complex)
    double creal(double complex)

OFF_TOL = 1e-12
MAX_SWEEPS = 100


cdef int _jacobi3(double complex a[3][3], double tol, int max_sweeps, double *ev) noexcept nogil:
    cdef int sweep, p, q, k, pi
    cdef double off, scale, r, theta, t, c, sn, tmp
    cdef double complex ph, akp, akq
    cdef int P[3]
    cdef int Q[3]
    P[0] = 0; Q[0] = 1; P[1] = 0; Q[1] = 2; P[2] = 1; Q[2] = 2
    for sweep in range(max_sweeps + 1):
        off = 0.0
        scale = 1.0
        for p in range(3):
            for q in range(3):
                tmp = cabs(a[p][q])
                if not isfinite(tmp):
                    return 1
                if tmp > scale:
                    scale = tmp
                if p != q:
                    off += tmp * tmp
        if sqrt(off) <= tol * scale:
            for p in range(3):
                ev[p] = creal(a[p][p])
            return 0
        if sweep == max_sweeps:
            return 1
        for pi in range(3):
            p = P[pi]; q = Q[pi]
            r = cabs(a[p][q])
            if r == 0.0:
                continue
            ph = a[p][q] / r
            theta = (creal(a[q][q]) - creal(a[p][p])) / (2.0 * r)
            if theta >= 0:
                t = 1.0 / (theta + sqrt(theta * theta + 1.0))
            else:
                t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
            c = 1.0 / sqrt(t * t + 1.0)
            sn = t * c
            # A <- A G with G = [[c, sn], [-sn conj(ph), c conj(ph)]] on (p, q)
            for k in range(3):
                akp = a[k][p]
                akq = a[k][q]
                a[k][p] = c * akp - sn * conj(ph) * akq
                a[k][q] = sn * akp + c * conj(ph) * akq
            # A <- G* A
            for k in range(3):
                akp = a[p][k]
                akq = a[q][k]
                a[p][k] = c * akp - sn * ph * akq
                a[q][k] = sn * akp + c * ph * akq
            a[p][q] = 0.0
            a[q][p] = 0.0
    return 1


def moment_batch(double[:, ::1] xr, double[:, ::1] xi, double[:, ::1] yr, double[:, ::1] yi,
                 double t, double s, double[:, ::1] diag, double[:, ::1] eig, bint eigen=True,
                 double tol=OFF_TOL, int max_sweeps=MAX_SWEEPS):
    """Fill ``diag`` (and ``eig`` when ``eigen``) for each row pair; returns the failure count."""
    cdef Py_ssize_t n = xr.shape[0], k
    cdef int i, j, fails = 0
    cdef double complex a[3][3]
    cdef double complex xv[3]
    cdef double complex yv[3]
    cdef double ev[3]
    cdef double shift = (t + s) / 3.0, tmp
    with nogil:
        for k in range(n):
            for i in range(3):
                xv[i] = xr[k, i] + 1j * xi[k, i]
                yv[i] = yr[k, i] + 1j * yi[k, i]
            for i in range(3):
                for j in range(3):
                    a[i][j] = t * xv[i] * conj(xv[j]) + s * yv[i] * conj(yv[j])
                a[i][i] = a[i][i] - shift
                diag[k, i] = creal(a[i][i])
            if not eigen:
                continue
            if _jacobi3(a, tol, max_sweeps, ev):
                fails += 1
                for i in range(3):
                    eig[k, i] = NAN
                continue
            # descending insertion sort of three values
            if ev[0] < ev[1]:
                tmp = ev[0]; ev[0] = ev[1]; ev[1] = tmp
            if ev[1] < ev[2]:
                tmp = ev[1]; ev[1] = ev[2]; ev[2] = tmp
            if ev[0] < ev[1]:
                tmp = ev[0]; ev[0] = ev[1]; ev[1] = tmp
            for i in range(3):
                eig[k, i] = ev[i]
    return fails
