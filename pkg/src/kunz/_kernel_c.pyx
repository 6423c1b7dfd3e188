# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernel_py. Same contracts, same term representation.

Terms stay Python tuples (exponents can be large and keys are compared as
tuples anyway); the win comes from typed counters and tight loops around
the divisibility scan and merges. Keep the two implementations in lockstep:
the backend cross-check test runs both on the same inputs.
"""

KIND_GREVLEX = 0
KIND_LEX = 1
KIND_ELIMINATION = 2


cdef tuple _grevlex_key(tuple exps):
    cdef Py_ssize_t n = len(exps)
    cdef Py_ssize_t i
    cdef object total = 0
    cdef list key = [0]
    for i in range(n - 1):
        total = total + exps[i]
        key.append(total)
    if n > 0:
        total = total + exps[n - 1]
    key[0] = total
    if n > 1:
        key[1:] = key[:0:-1]
    return tuple(key)


def make_key(exps, int kind, int block):
    """Order key tuple for an exponent vector."""
    if kind == KIND_GREVLEX:
        return _grevlex_key(tuple(exps))
    if kind == KIND_LEX:
        return tuple(exps)
    t = tuple(exps)
    return _grevlex_key(t[:block]) + _grevlex_key(t[block:])


def merge(list a, list b, p):
    """Merge two descending term lists, adding coefficients mod p."""
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef tuple ta, tb
    while i < na and j < nb:
        ta = <tuple> a[i]
        tb = <tuple> b[j]
        if ta[0] > tb[0]:
            out.append(ta)
            i += 1
        elif ta[0] < tb[0]:
            out.append(tb)
            j += 1
        else:
            c = (ta[2] + tb[2]) % p
            if c:
                out.append((ta[0], ta[1], c))
            i += 1
            j += 1
    if i < na:
        out.extend(a[i:])
    if j < nb:
        out.extend(b[j:])
    return out


def reduce_full(f, reducers, p, int kind, int block):
    """Fully reduce f by a list of monic term lists.

    Returns (normal_form, max_degree_seen, steps); see the pure twin for the
    contract.
    """
    cdef list lead_exps = [r[0][1] for r in reducers]
    cdef Py_ssize_t nred = len(reducers)
    cdef list work = list(f)
    cdef list result = []
    cdef object max_deg = 0
    cdef long long steps = 0
    cdef Py_ssize_t j, t, nv
    cdef tuple e0, rl, head
    cdef bint divides
    while work:
        head = <tuple> work[0]
        e0 = <tuple> head[1]
        deg = sum(e0)
        if deg > max_deg:
            max_deg = deg
        chosen = -1
        nv = len(e0)
        for j in range(nred):
            rl = <tuple> lead_exps[j]
            divides = True
            for t in range(nv):
                if rl[t] > e0[t]:
                    divides = False
                    break
            if divides:
                chosen = j
                break
        if chosen < 0:
            result.append(head)
            work = work[1:]
            continue
        c0 = head[2]
        rl = <tuple> lead_exps[chosen]
        shift = tuple([e0[t] - rl[t] for t in range(nv)])
        shifted = []
        for term in (<list> reducers[chosen])[1:]:
            e = (<tuple> term)[1]
            ne = tuple([e[t] + shift[t] for t in range(nv)])
            nc = (p - (<object> term[2]) * c0 % p) % p
            if nc:
                shifted.append((make_key(ne, kind, block), ne, nc))
        work = merge(work[1:], shifted, p)
        steps += 1
    return result, max_deg, steps


def s_poly(f, g, p, int kind, int block):
    """S-polynomial of two monic term lists, leading terms cancelled exactly."""
    cdef tuple ef = f[0][1]
    cdef tuple eg = g[0][1]
    cdef Py_ssize_t nv = len(ef), t
    lcm = tuple([ef[t] if ef[t] > eg[t] else eg[t] for t in range(nv)])
    sf = tuple([lcm[t] - ef[t] for t in range(nv)])
    sg = tuple([lcm[t] - eg[t] for t in range(nv)])
    cdef list a = []
    for term in f[1:]:
        e = (<tuple> term)[1]
        ne = tuple([e[t] + sf[t] for t in range(nv)])
        a.append((make_key(ne, kind, block), ne, term[2]))
    cdef list b = []
    for term in g[1:]:
        e = (<tuple> term)[1]
        ne = tuple([e[t] + sg[t] for t in range(nv)])
        b.append((make_key(ne, kind, block), ne, (p - term[2]) % p))
    return merge(a, b, p)


def make_monic(terms, p):
    """Scale a descending term list so its leading coefficient is 1."""
    if not terms:
        return terms
    lc = terms[0][2]
    if lc == 1:
        return terms
    inv = pow(lc, -1, p)
    return [(k, e, c * inv % p) for k, e, c in terms]
