# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; same algorithms and results as ``_pykernels``.

Vertex sets are arrays of 64-bit words.  Every loop visits vertices in the
same order as the pure-Python version, so clique discovery order, the
canonical labeling and the limits at which errors are raised all agree.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free, malloc, realloc
from libc.string cimport memcmp, memcpy, memset

from .errors import CanonicalLimitExceeded, CliqueLimitExceeded

NAME = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef uint64_t* rows_to_words(rows, Py_ssize_t n, Py_ssize_t w) except NULL:
    cdef uint64_t* out = <uint64_t*> calloc(max(n * w, 1), sizeof(uint64_t))
    cdef bytes raw
    cdef Py_ssize_t i
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        raw = int(rows[i]).to_bytes(w * 8, "little")
        memcpy(&out[i * w], <char*> raw, w * 8)
    return out


cdef object words_to_int(uint64_t* words, Py_ssize_t w):
    return int.from_bytes((<char*> words)[: w * 8], "little")


# ---------------------------------------------------------------------------
# maximal cliques


cdef struct CliqueState:
    int n
    int w
    uint64_t* rows
    uint64_t* scratch   # 3 * w words per recursion level: P, X, candidates
    uint64_t* r         # current clique
    uint64_t* found
    Py_ssize_t count
    Py_ssize_t capacity
    Py_ssize_t limit


cdef int push_clique(CliqueState* st) except -1:
    cdef uint64_t* grown
    if st.count == st.capacity:
        st.capacity = st.capacity * 2 if st.capacity else 64
        grown = <uint64_t*> realloc(st.found, st.capacity * st.w * sizeof(uint64_t))
        if grown == NULL:
            raise MemoryError()
        st.found = grown
    memcpy(&st.found[st.count * st.w], st.r, st.w * sizeof(uint64_t))
    st.count += 1
    if st.count > st.limit:
        raise CliqueLimitExceeded(st.limit, st.count)
    return 0


cdef int expand(CliqueState* st, int depth) except -1:
    cdef int w = st.w
    cdef uint64_t* p = &st.scratch[depth * 3 * w]
    cdef uint64_t* x = p + w
    cdef uint64_t* cand = p + 2 * w
    cdef uint64_t* np_ = &st.scratch[(depth + 1) * 3 * w]
    cdef uint64_t* nx = np_ + w
    cdef uint64_t* nv
    cdef uint64_t* prow
    cdef uint64_t* pivot_row = NULL
    cdef uint64_t word, bit
    cdef int k, u, v, c, best = -1
    cdef bint p_empty = True, x_empty = True

    for k in range(w):
        if p[k]:
            p_empty = False
        if x[k]:
            x_empty = False
    if p_empty:
        if x_empty:
            push_clique(st)
        return 0
    # pivot: first vertex of P | X maximising |P & N(u)|
    for k in range(w):
        word = p[k] | x[k]
        while word:
            u = k * 64 + ctz(word)
            word &= word - 1
            prow = &st.rows[u * w]
            c = 0
            for v in range(w):
                c += popcount(p[v] & prow[v])
            if c > best:
                best = c
                pivot_row = prow
    for k in range(w):
        cand[k] = p[k] & ~pivot_row[k]
    for k in range(w):
        word = cand[k]
        while word:
            v = k * 64 + ctz(word)
            word &= word - 1
            bit = (<uint64_t> 1) << (v & 63)
            nv = &st.rows[v * w]
            for u in range(w):
                np_[u] = p[u] & nv[u]
                nx[u] = x[u] & nv[u]
            st.r[k] |= bit
            expand(st, depth + 1)
            st.r[k] &= ~bit
            p[k] &= ~bit
            x[k] |= bit
    return 0


def maximal_cliques(int n, rows, Py_ssize_t limit):
    """All maximal cliques as sorted vertex tuples, in discovery order."""
    if n == 0:
        return []
    cdef CliqueState st
    cdef int w = (n + 63) // 64
    cdef int i, k
    cdef uint64_t word
    st.n = n
    st.w = w
    st.limit = limit
    st.count = 0
    st.capacity = 0
    st.found = NULL
    st.rows = rows_to_words(rows, n, w)
    st.scratch = <uint64_t*> calloc((n + 2) * 3 * w, sizeof(uint64_t))
    st.r = <uint64_t*> calloc(w, sizeof(uint64_t))
    try:
        if st.scratch == NULL or st.r == NULL:
            raise MemoryError()
        for i in range(n):
            st.scratch[i // 64] |= (<uint64_t> 1) << (i & 63)
        expand(&st, 0)
        out = []
        for i in range(st.count):
            members = []
            for k in range(w):
                word = st.found[i * w + k]
                while word:
                    members.append(k * 64 + ctz(word))
                    word &= word - 1
            out.append(tuple(members))
        return out
    finally:
        free(st.rows)
        free(st.scratch)
        free(st.r)
        free(st.found)


def intersection_rows(int n_vertices, family):
    """Row ``i`` has bit ``j`` set iff members ``i != j`` of ``family`` intersect."""
    cdef Py_ssize_t m = len(family)
    cdef Py_ssize_t w = (m + 63) // 64 if m else 1
    cdef uint64_t* incidence = <uint64_t*> calloc(max(n_vertices, 1) * w, sizeof(uint64_t))
    cdef uint64_t* row = <uint64_t*> malloc(w * sizeof(uint64_t))
    cdef Py_ssize_t idx, k
    cdef int v
    out = []
    try:
        if incidence == NULL or row == NULL:
            raise MemoryError()
        for idx in range(m):
            for v in family[idx]:
                incidence[v * w + idx // 64] |= (<uint64_t> 1) << (idx & 63)
        for idx in range(m):
            memset(row, 0, w * sizeof(uint64_t))
            for v in family[idx]:
                for k in range(w):
                    row[k] |= incidence[v * w + k]
            row[idx // 64] &= ~((<uint64_t> 1) << (idx & 63))
            out.append(words_to_int(row, w))
        return out
    finally:
        free(incidence)
        free(row)


# ---------------------------------------------------------------------------
# canonical labeling


cdef struct Canon:
    int n
    int w
    uint64_t* rows
    long nodes
    long node_limit
    int code_len
    # refinement scratch
    int* queue
    char* queued
    uint64_t* wmask
    int* counts
    int* order
    int* tally
    int* segment
    # leaves
    unsigned char* leaf
    unsigned char* first_code
    unsigned char* best_code
    int* first_lab
    int* best_lab
    int* first_path
    int* best_path
    int first_len
    int best_len
    bint have_first
    # automorphism generators, n ints each
    int* gens
    int ngens
    int gen_capacity
    int* active
    char* in_orbit
    int* frontier


cdef inline bint adjacent(Canon* c, int u, int v) noexcept nogil:
    return (c.rows[u * c.w + (v >> 6)] >> (v & 63)) & 1


cdef void refine(Canon* c, int* lab, int* cell_end, int first_splitter) noexcept nogil:
    cdef int n = c.n, w = c.w
    cdef int head = 0, tail = 0, qlen = 0
    cdef int ws, s, e, i, k, lo, hi, start, prev, cnt, pos, v, sz
    cdef uint64_t* row
    memset(c.queued, 0, n)
    c.queue[tail] = first_splitter
    tail = (tail + 1) % n
    qlen = 1
    c.queued[first_splitter] = 1
    while qlen:
        ws = c.queue[head]
        head = (head + 1) % n
        qlen -= 1
        c.queued[ws] = 0
        memset(c.wmask, 0, w * sizeof(uint64_t))
        for i in range(ws, cell_end[ws]):
            v = lab[i]
            c.wmask[v >> 6] |= (<uint64_t> 1) << (v & 63)
        s = 0
        while s < n:
            e = cell_end[s]
            sz = e - s
            if sz > 1:
                lo = n + 1
                hi = -1
                for i in range(sz):
                    row = &c.rows[lab[s + i] * w]
                    cnt = 0
                    for k in range(w):
                        cnt += popcount(row[k] & c.wmask[k])
                    c.counts[i] = cnt
                    if cnt < lo:
                        lo = cnt
                    if cnt > hi:
                        hi = cnt
                if lo != hi:
                    # stable counting sort of positions by count
                    for k in range(hi - lo + 2):
                        c.tally[k] = 0
                    for i in range(sz):
                        c.tally[c.counts[i] - lo + 1] += 1
                    for k in range(1, hi - lo + 2):
                        c.tally[k] += c.tally[k - 1]
                    for i in range(sz):
                        k = c.counts[i] - lo
                        c.order[c.tally[k]] = i
                        c.tally[k] += 1
                    for i in range(sz):
                        c.segment[i] = lab[s + c.order[i]]
                    prev = c.counts[c.order[0]]
                    for i in range(sz):
                        c.order[i] = c.counts[c.order[i]]
                    memcpy(&lab[s], c.segment, sz * sizeof(int))
                    start = s
                    for pos in range(1, sz):
                        cnt = c.order[pos]
                        if cnt != prev:
                            cell_end[start] = s + pos
                            if not c.queued[start]:
                                c.queue[tail] = start
                                tail = (tail + 1) % n
                                qlen += 1
                                c.queued[start] = 1
                            start = s + pos
                            prev = cnt
                    cell_end[start] = e
                    if not c.queued[start]:
                        c.queue[tail] = start
                        tail = (tail + 1) % n
                        qlen += 1
                        c.queued[start] = 1
            s = e


cdef void leaf_code(Canon* c, int* lab) noexcept nogil:
    cdef int n = c.n
    cdef int i, j, nbits = 0, acc = 0, out = 0
    cdef unsigned char* code = c.leaf
    if n <= 62:
        code[0] = 63 + n
        out = 1
    else:
        code[0] = 126
        code[1] = 63 + ((n >> 12) & 63)
        code[2] = 63 + ((n >> 6) & 63)
        code[3] = 63 + (n & 63)
        out = 4
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | adjacent(c, lab[i], lab[j])
            nbits += 1
            if nbits == 6:
                code[out] = 63 + acc
                out += 1
                acc = 0
                nbits = 0
    if nbits:
        code[out] = 63 + (acc << (6 - nbits))


cdef int add_generator(Canon* c, int* ref_lab, int* lab) except -1:
    cdef int* grown
    cdef int i
    if c.ngens == c.gen_capacity:
        c.gen_capacity = c.gen_capacity * 2 if c.gen_capacity else 16
        grown = <int*> realloc(c.gens, c.gen_capacity * c.n * sizeof(int))
        if grown == NULL:
            raise MemoryError()
        c.gens = grown
        grown = <int*> realloc(c.active, c.gen_capacity * sizeof(int))
        if grown == NULL:
            raise MemoryError()
        c.active = grown
    for i in range(c.n):
        c.gens[c.ngens * c.n + ref_lab[i]] = lab[i]
    c.ngens += 1
    return 0


cdef bint orbit_rep_seen(Canon* c, int v, int* explored, int nexplored, int* path, int depth) noexcept nogil:
    cdef int n = c.n
    cdef int nactive = 0, g, p, top, x, u, i
    cdef int* perm
    cdef bint fixes
    cdef bint seen = False
    for g in range(c.ngens):
        perm = &c.gens[g * n]
        fixes = True
        for p in range(depth):
            if perm[path[p]] != path[p]:
                fixes = False
                break
        if fixes:
            c.active[nactive] = g
            nactive += 1
    if nactive == 0:
        return False
    memset(c.in_orbit, 0, n)
    c.in_orbit[v] = 1
    c.frontier[0] = v
    top = 1
    while top:
        top -= 1
        x = c.frontier[top]
        for i in range(nactive):
            u = c.gens[c.active[i] * n + x]
            if not c.in_orbit[u]:
                c.in_orbit[u] = 1
                c.frontier[top] = u
                top += 1
    for i in range(nexplored):
        if c.in_orbit[explored[i]]:
            seen = True
            break
    return seen


cdef int visit(Canon* c, int* lab, int* cell_end, int* path, int depth) except -2:
    """Return the level to jump back to, or -1 to carry on."""
    cdef int n = c.n
    cdef int s = 0, e, i, k, v, nexplored = 0, jump, common, ncand
    cdef int* child_lab
    cdef int* child_end
    cdef int* explored
    cdef int* cand
    c.nodes += 1
    if c.nodes > c.node_limit:
        raise CanonicalLimitExceeded(
            f"canonical search exceeded {c.node_limit} nodes on a graph of order {n}")
    while s < n and cell_end[s] - s == 1:
        s = cell_end[s]
    if s == n:
        leaf_code(c, lab)
        if not c.have_first:
            c.have_first = True
            memcpy(c.first_code, c.leaf, c.code_len)
            memcpy(c.best_code, c.leaf, c.code_len)
            memcpy(c.first_lab, lab, n * sizeof(int))
            memcpy(c.best_lab, lab, n * sizeof(int))
            memcpy(c.first_path, path, depth * sizeof(int))
            memcpy(c.best_path, path, depth * sizeof(int))
            c.first_len = c.best_len = depth
            return -1
        if memcmp(c.leaf, c.first_code, c.code_len) == 0:
            add_generator(c, c.first_lab, lab)
            common = 0
            while path[common] == c.first_path[common]:
                common += 1
            return common
        if memcmp(c.leaf, c.best_code, c.code_len) == 0:
            add_generator(c, c.best_lab, lab)
            common = 0
            while path[common] == c.best_path[common]:
                common += 1
            return common
        if memcmp(c.leaf, c.best_code, c.code_len) < 0:
            memcpy(c.best_code, c.leaf, c.code_len)
            memcpy(c.best_lab, lab, n * sizeof(int))
            memcpy(c.best_path, path, depth * sizeof(int))
            c.best_len = depth
        return -1
    e = cell_end[s]
    ncand = e - s
    cand = <int*> malloc(ncand * sizeof(int))
    explored = <int*> malloc(ncand * sizeof(int))
    child_lab = <int*> malloc(n * sizeof(int))
    child_end = <int*> malloc(n * sizeof(int))
    try:
        if cand == NULL or explored == NULL or child_lab == NULL or child_end == NULL:
            raise MemoryError()
        # candidates in increasing vertex order (insertion sort; cells are small)
        for i in range(ncand):
            v = lab[s + i]
            k = i
            while k > 0 and cand[k - 1] > v:
                cand[k] = cand[k - 1]
                k -= 1
            cand[k] = v
        for i in range(ncand):
            v = cand[i]
            if nexplored and orbit_rep_seen(c, v, explored, nexplored, path, depth):
                continue
            explored[nexplored] = v
            nexplored += 1
            memcpy(child_lab, lab, n * sizeof(int))
            memcpy(child_end, cell_end, n * sizeof(int))
            k = s
            while child_lab[k] != v:
                k += 1
            child_lab[k] = child_lab[s]
            child_lab[s] = v
            child_end[s] = s + 1
            child_end[s + 1] = e
            refine(c, child_lab, child_end, s)
            path[depth] = v
            jump = visit(c, child_lab, child_end, path, depth + 1)
            if jump >= 0 and jump < depth:
                return jump
        return -1
    finally:
        free(cand)
        free(explored)
        free(child_lab)
        free(child_end)


def canonical_labeling(int n, rows, long node_limit):
    """Return ``(lab, code)``: canonical position order and its graph6 bytes."""
    if n == 0:
        return [], bytes([63])
    cdef Canon c
    cdef int w = (n + 63) // 64
    cdef int i
    cdef int nbits_ = n * (n - 1) // 2
    cdef int* lab = NULL
    cdef int* cell_end = NULL
    cdef int* path = NULL
    memset(&c, 0, sizeof(Canon))
    c.n = n
    c.w = w
    c.node_limit = node_limit
    c.code_len = (1 if n <= 62 else 4) + (nbits_ + 5) // 6
    c.rows = rows_to_words(rows, n, w)
    try:
        c.queue = <int*> malloc(n * sizeof(int))
        c.queued = <char*> malloc(n)
        c.wmask = <uint64_t*> malloc(w * sizeof(uint64_t))
        c.counts = <int*> malloc(n * sizeof(int))
        c.order = <int*> malloc(n * sizeof(int))
        c.tally = <int*> malloc((n + 2) * sizeof(int))
        c.segment = <int*> malloc(n * sizeof(int))
        c.leaf = <unsigned char*> malloc(c.code_len)
        c.first_code = <unsigned char*> malloc(c.code_len)
        c.best_code = <unsigned char*> malloc(c.code_len)
        c.first_lab = <int*> malloc(n * sizeof(int))
        c.best_lab = <int*> malloc(n * sizeof(int))
        c.first_path = <int*> malloc((n + 1) * sizeof(int))
        c.best_path = <int*> malloc((n + 1) * sizeof(int))
        c.in_orbit = <char*> malloc(n)
        c.frontier = <int*> malloc(n * sizeof(int))
        lab = <int*> malloc(n * sizeof(int))
        cell_end = <int*> calloc(n, sizeof(int))
        path = <int*> malloc((n + 1) * sizeof(int))
        if (c.queue == NULL or c.queued == NULL or c.wmask == NULL or c.counts == NULL or c.order == NULL
                or c.tally == NULL or c.segment == NULL or c.leaf == NULL or c.first_code == NULL
                or c.best_code == NULL or c.first_lab == NULL or c.best_lab == NULL or c.first_path == NULL
                or c.best_path == NULL or c.in_orbit == NULL or c.frontier == NULL or lab == NULL
                or cell_end == NULL or path == NULL):
            raise MemoryError()
        for i in range(n):
            lab[i] = i
        cell_end[0] = n
        refine(&c, lab, cell_end, 0)
        visit(&c, lab, cell_end, path, 0)
        return [c.best_lab[i] for i in range(n)], (<char*> c.best_code)[: c.code_len]
    finally:
        free(c.rows)
        free(c.queue)
        free(c.queued)
        free(c.wmask)
        free(c.counts)
        free(c.order)
        free(c.tally)
        free(c.segment)
        free(c.leaf)
        free(c.first_code)
        free(c.best_code)
        free(c.first_lab)
        free(c.best_lab)
        free(c.first_path)
        free(c.best_path)
        free(c.gens)
        free(c.active)
        free(c.in_orbit)
        free(c.frontier)
        free(lab)
        free(cell_end)
        free(path)
