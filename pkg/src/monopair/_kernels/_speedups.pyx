# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels: exhaustive coboundary search and leveled
backtracking over cocycle tables.  Contracts match ``pure.py`` exactly."""

from cpython cimport array
import array


cdef array.array _int_template = array.array('i', [])


cdef array.array _as_ints(values):
    return array.array('i', values)


def search_coboundary(int q_size, int t_size, t_add, t_neg, diff, cons, offsets):
    """First h (list, h[0] = 0) with delta-h == diff, or None."""
    if q_size == 1:
        return [0]
    cdef array.array t_add_a = _as_ints(t_add)
    cdef array.array t_neg_a = _as_ints(t_neg)
    cdef array.array diff_a = _as_ints(diff)
    cdef array.array cons_a = _as_ints(cons)
    cdef array.array offs_a = _as_ints(offsets)
    cdef array.array h_a = array.clone(_int_template, q_size, zero=True)
    cdef int* tadd = t_add_a.data.as_ints
    cdef int* tneg = t_neg_a.data.as_ints
    cdef int* dif = diff_a.data.as_ints
    cdef int* con = cons_a.data.as_ints
    cdef int* off = offs_a.data.as_ints
    cdef int* h = h_a.data.as_ints
    cdef int level = 1
    cdef int c, a, b, ab, ok
    h[level] = -1
    while level >= 1:
        h[level] += 1
        if h[level] >= t_size:
            level -= 1
            continue
        ok = 1
        for c in range(off[level], off[level + 1]):
            a = con[3 * c]
            b = con[3 * c + 1]
            ab = con[3 * c + 2]
            if tadd[tadd[h[a] * t_size + h[b]] * t_size + tneg[h[ab]]] != dif[a * q_size + b]:
                ok = 0
                break
        if not ok:
            continue
        if level == q_size - 1:
            return [h[i] for i in range(q_size)]
        level += 1
        h[level] = -1
    return None


def count_cocycles(int n, system, collect=False):
    """Count (or list) solutions of the leveled constraint system mod n."""
    cdef int nunk = system["nunk"]
    if nunk == 0:
        return [()] if collect else 1
    cdef array.array kinds_a = _as_ints(system["kinds"])
    cdef array.array sol_inv_a = _as_ints(system["sol_inv"])
    cdef array.array sol_toff_a = _as_ints(system["sol_toff"])
    cdef array.array sol_terms_a = _as_ints(system["sol_terms"] or [0])
    cdef array.array chk_coff_a = _as_ints(system["chk_coff"])
    cdef array.array chk_toff_a = _as_ints(system["chk_toff"])
    cdef array.array chk_terms_a = _as_ints(system["chk_terms"] or [0])
    cdef array.array values_a = array.clone(_int_template, nunk, zero=True)
    cdef int* kinds = kinds_a.data.as_ints
    cdef int* sol_inv = sol_inv_a.data.as_ints
    cdef int* sol_toff = sol_toff_a.data.as_ints
    cdef int* sol_terms = sol_terms_a.data.as_ints
    cdef int* chk_coff = chk_coff_a.data.as_ints
    cdef int* chk_toff = chk_toff_a.data.as_ints
    cdef int* chk_terms = chk_terms_a.data.as_ints
    cdef int* values = values_a.data.as_ints
    cdef long long count = 0
    cdef int level = 0
    cdef int fresh = kinds[0]
    cdef int ok, c, t
    cdef long long acc
    cdef bint want_tables = bool(collect)
    found = [] if want_tables else None
    values[0] = -1
    while level >= 0:
        if kinds[level]:
            if not fresh:
                level -= 1
                continue
            acc = 0
            for t in range(sol_toff[level], sol_toff[level + 1]):
                acc += sol_terms[2 * t + 1] * values[sol_terms[2 * t]]
            values[level] = <int> ((acc * sol_inv[level]) % n)
            fresh = 0
        else:
            if fresh:
                values[level] = 0
                fresh = 0
            else:
                values[level] += 1
            if values[level] >= n:
                level -= 1
                fresh = 0
                continue
        ok = 1
        for c in range(chk_coff[level], chk_coff[level + 1]):
            acc = 0
            for t in range(chk_toff[c], chk_toff[c + 1]):
                acc += chk_terms[2 * t + 1] * values[chk_terms[2 * t]]
            if acc % n:
                ok = 0
                break
        if not ok:
            if kinds[level]:
                level -= 1
                fresh = 0
            continue
        if level == nunk - 1:
            if want_tables:
                found.append(tuple([values[t] for t in range(nunk)]))
            else:
                count += 1
            if kinds[level]:
                level -= 1
                fresh = 0
            continue
        level += 1
        fresh = 1
    return found if want_tables else int(count)
