"""Compiled twin of ``_kernels_py`` (see there for the algorithm notes).

Sorting is delegated to NumPy; the per-element sweeps run as C loops.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def one_sample_stats(control_times, control_events, exp_times, exp_events):
    """Return (m_hat, var_new, var_oslr); see the NumPy twin for details."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ta = \
        np.ascontiguousarray(control_times, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ea = \
        np.ascontiguousarray(control_events, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tb = \
        np.ascontiguousarray(exp_times, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] eb = \
        np.ascontiguousarray(exp_events, dtype=np.float64)

    order = np.argsort(ta, kind="stable")
    cdef double[::1] ts = np.ascontiguousarray(ta[order])
    cdef double[::1] es = np.ascontiguousarray(ea[order])
    cdef double[::1] xb = np.sort(tb)

    cdef Py_ssize_t na = ts.shape[0]
    cdef Py_ssize_t nb = xb.shape[0]
    cdef Py_ssize_t i = 0, k = 0
    cdef double na_cum = 0.0, var_cum = 0.0
    cdef double lam_sum = 0.0, double_sum = 0.0, nb_events = 0.0
    cdef double t, d, y, x

    for k in range(nb):
        nb_events += eb[k]

    for k in range(nb):
        x = xb[k]
        while i < na and ts[i] <= x:
            t = ts[i]
            y = <double>(na - i)
            d = 0.0
            while i < na and ts[i] == t:
                d += es[i]
                i += 1
            if d > 0.0:
                na_cum += d / y
                var_cum += d / (y * y)
        lam_sum += na_cum
        double_sum += var_cum * (2.0 * <double>(nb - k - 1) + 1.0)

    cdef double m_hat = (nb_events - lam_sum) / sqrt(<double>nb)
    cdef double var_oslr = nb_events / <double>nb
    cdef double var_new = var_oslr + double_sum / <double>nb
    return m_hat, var_new, var_oslr


def two_sample_stats(control_times, control_events, exp_times, exp_events):
    """Return (o_minus_e, variance); see the NumPy twin for details."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ta = \
        np.ascontiguousarray(control_times, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ea = \
        np.ascontiguousarray(control_events, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tb = \
        np.ascontiguousarray(exp_times, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] eb = \
        np.ascontiguousarray(exp_events, dtype=np.float64)

    order_a = np.argsort(ta, kind="stable")
    order_b = np.argsort(tb, kind="stable")
    cdef double[::1] tas = np.ascontiguousarray(ta[order_a])
    cdef double[::1] eas = np.ascontiguousarray(ea[order_a])
    cdef double[::1] tbs = np.ascontiguousarray(tb[order_b])
    cdef double[::1] ebs = np.ascontiguousarray(eb[order_b])

    cdef Py_ssize_t na = tas.shape[0]
    cdef Py_ssize_t nb = tbs.shape[0]
    cdef Py_ssize_t i = 0, j = 0
    cdef double ya = <double>na, yb = <double>nb
    cdef double o_minus_e = 0.0, var = 0.0
    cdef double t, da, db, ca, cb, d, y, frac

    while i < na or j < nb:
        if i < na and (j >= nb or tas[i] <= tbs[j]):
            t = tas[i]
            if j < nb and tbs[j] < t:
                t = tbs[j]
        else:
            t = tbs[j]
        da = ca = db = cb = 0.0
        while i < na and tas[i] == t:
            da += eas[i]
            ca += 1.0
            i += 1
        while j < nb and tbs[j] == t:
            db += ebs[j]
            cb += 1.0
            j += 1
        d = da + db
        y = ya + yb
        if d > 0.0 and y > 0.0:
            frac = yb / y
            o_minus_e += db - d * frac
            if y > 1.0:
                var += d * frac * (1.0 - frac) * (y - d) / (y - 1.0)
        ya -= ca
        yb -= cb
    return o_minus_e, var
