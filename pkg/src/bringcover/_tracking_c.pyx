# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled root-continuation kernel: same contract as _tracking_py."""

from libc.math cimport HUGE_VAL

from ._tracking_py import TrackingError

cdef double _C = 256.0 / 3125.0
cdef int _NEWTON_CAP = 60


cdef struct StepOut:
    double complex b
    double complex xs[5]
    double residual
    double separation
    int ok


cdef StepOut _try_step(double complex t_target, double complex b_cur,
                       double complex *xs_cur, double tol, double ratio) noexcept:
    cdef StepOut out
    cdef double complex w, principal, cand, b_new, x, x2, x4, f, rot
    cdef double best, d, scale, worst, d_self, d_other, sep
    cdef int i, j, k, it, converged
    cdef double complex xs_new[5]

    out.ok = 0
    w = _C * (1.0 - t_target) / t_target
    principal = w ** 0.25
    b_new = principal
    best = abs(principal - b_cur)
    rot = principal
    for k in range(3):
        rot = rot * 1j
        d = abs(rot - b_cur)
        if d < best:
            best = d
            b_new = rot
    if best > 0.4 * abs(b_new):
        return out

    scale = 1.0 + abs(b_new)
    worst = 0.0
    for i in range(5):
        x = xs_cur[i]
        converged = 0
        for it in range(_NEWTON_CAP):
            x2 = x * x
            x4 = x2 * x2
            f = x4 * x + x + b_new
            if abs(f) <= tol * scale:
                converged = 1
                break
            x = x - f / (5.0 * x4 + 1.0)
        if not converged:
            return out
        f = x * x * x * x * x + x + b_new
        d = abs(f) / scale
        if d > worst:
            worst = d
        xs_new[i] = x

    sep = HUGE_VAL
    for i in range(5):
        for j in range(i + 1, 5):
            d = abs(xs_new[i] - xs_new[j])
            if d < sep:
                sep = d
    for i in range(5):
        d_self = abs(xs_new[i] - xs_cur[i])
        d_other = HUGE_VAL
        for j in range(5):
            if j != i:
                d = abs(xs_new[j] - xs_cur[i])
                if d < d_other:
                    d_other = d
        if d_self * ratio > d_other:
            return out

    out.b = b_new
    for i in range(5):
        out.xs[i] = xs_new[i]
    out.residual = worst
    out.separation = sep
    out.ok = 1
    return out


cdef class _State:
    cdef double complex b_cur
    cdef double complex t_cur
    cdef double complex xs_cur[5]
    cdef double max_residual
    cdef double min_separation
    cdef long steps_used
    cdef double tol
    cdef double ratio
    cdef int max_depth
    cdef long budget

    cdef void advance(self, double complex t_target, int depth) except *:
        cdef StepOut r = _try_step(t_target, self.b_cur, self.xs_cur,
                                   self.tol, self.ratio)
        cdef double complex t_mid
        cdef int i
        if not r.ok:
            if depth >= self.max_depth:
                raise TrackingError(
                    "collision floor breached: segment halved "
                    f"{self.max_depth} times near t={complex(t_target)}")
            t_mid = 0.5 * (self.t_cur + t_target)
            self.advance(t_mid, depth + 1)
            self.advance(t_target, depth + 1)
            return
        self.steps_used += 1
        if self.steps_used > self.budget:
            raise TrackingError(
                f"resolution budget exhausted ({self.budget} steps): "
                "the loop needs finer sampling, increase steps")
        self.b_cur = r.b
        for i in range(5):
            self.xs_cur[i] = r.xs[i]
        self.t_cur = t_target
        if r.residual > self.max_residual:
            self.max_residual = r.residual
        if r.separation < self.min_separation:
            self.min_separation = r.separation


def track_path(ts, b0, xs0, double tol_residual, double match_ratio,
               int max_depth, long budget):
    """Compiled twin of :func:`bringcover._tracking_py.track_path`."""
    cdef _State st = _State()
    cdef int i
    cdef Py_ssize_t k
    st.b_cur = b0
    st.t_cur = ts[0]
    for i in range(5):
        st.xs_cur[i] = xs0[i]
    st.max_residual = 0.0
    st.min_separation = HUGE_VAL
    st.steps_used = 0
    st.tol = tol_residual
    st.ratio = match_ratio
    st.max_depth = max_depth
    st.budget = budget

    for k in range(1, len(ts)):
        st.advance(ts[k], 0)
    return (complex(st.b_cur),
            tuple(complex(st.xs_cur[i]) for i in range(5)),
            st.max_residual,
            st.min_separation if st.min_separation < HUGE_VAL else float("inf"),
            st.steps_used)
