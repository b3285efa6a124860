# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernel for crossingless-match enumeration.

Behavioural twin of ``_match_kernel_py``; see that module for the algorithm.
"""

MAX_VERTICES = 64


def enumerate_arc_sets(sizes):
    """All valid arc sets on the vertex line of ``sizes``, canonically ordered."""
    cdef int box_of[65]
    cdef int stack[65]
    cdef int arc_p[33]
    cdef int arc_q[33]
    cdef int w = 0
    cdef int b = 0
    cdef int s, k

    py_sizes = [int(x) for x in sizes]
    if any(x < 0 for x in py_sizes):
        raise ValueError(f"box sizes must be nonnegative, got {py_sizes}")
    w = sum(py_sizes)
    if w > MAX_VERTICES:
        raise ValueError(f"enumeration supports at most {MAX_VERTICES} vertices, got {w}")
    if w == 0:
        return [()]

    k = 1
    for s in py_sizes:
        b += 1
        while s > 0:
            box_of[k] = b
            k += 1
            s -= 1

    out = []
    _search(1, w, box_of, stack, 0, arc_p, arc_q, 0, out)
    out.sort()
    return out


cdef void _search(int pos, int w, int* box_of, int* stack, int depth,
                  int* arc_p, int* arc_q, int n_arcs, list out):
    cdef int i
    cdef int saved
    if pos > w:
        if depth == 0:
            arcs = [(arc_p[i], arc_q[i]) for i in range(n_arcs)]
            arcs.sort()
            out.append(tuple(arcs))
        return
    if depth > w - pos + 1:
        return
    if depth == 0:
        _search(pos + 1, w, box_of, stack, 0, arc_p, arc_q, n_arcs, out)
    if depth > 0 and box_of[stack[depth - 1]] != box_of[pos]:
        # The recursion below may scribble over stack[depth-1]; restore it so
        # the open branch still sees the popped vertex.
        saved = stack[depth - 1]
        arc_p[n_arcs] = saved
        arc_q[n_arcs] = pos
        _search(pos + 1, w, box_of, stack, depth - 1, arc_p, arc_q, n_arcs + 1, out)
        stack[depth - 1] = saved
    stack[depth] = pos
    _search(pos + 1, w, box_of, stack, depth + 1, arc_p, arc_q, n_arcs, out)
