# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _purekernel.py.

Same algorithms, same SplitMix64 stream, bit-identical outputs; the hot
cell-scanning loops run over typed C arrays. Any behavioral change must be
made in both files (tests/test_kernel_parity.py compares them case by case).
"""

from cpython cimport array
import array

cdef unsigned long long _GOLDEN = 0x9E3779B97F4A7C15ULL

DEF BOARD = 51
DEF OFFSET = 25


cdef class _Rng:
    cdef unsigned long long state

    def __cinit__(self, object seed):
        self.state = <unsigned long long> (seed & 0xFFFFFFFFFFFFFFFF)

    cdef unsigned long long next_u64(self):
        cdef unsigned long long z
        self.state += _GOLDEN
        z = self.state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
        return z ^ (z >> 31)

    cdef unsigned long long below(self, unsigned long long n):
        return self.next_u64() % n


cdef int _try_across(int[:] letters, char[:] acr, int* wcodes, int length,
                     int r, int c0, int max_grid) nogil:
    cdef int base, crossings, i, idx, lv
    if r < 1 or r > BOARD - 2 or c0 < 1 or c0 + length > BOARD - 1:
        return -1
    base = r * BOARD
    if letters[base + c0 - 1] or letters[base + c0 + length]:
        return -1
    crossings = 0
    for i in range(length):
        idx = base + c0 + i
        lv = letters[idx]
        if lv:
            if lv != wcodes[i] or acr[idx]:
                return -1
            crossings += 1
        else:
            if letters[idx - BOARD] or letters[idx + BOARD]:
                return -1
    return crossings


cdef int _try_down(int[:] letters, char[:] dwn, int* wcodes, int length,
                   int r0, int c, int max_grid) nogil:
    cdef int crossings, i, idx, lv
    if c < 1 or c > BOARD - 2 or r0 < 1 or r0 + length > BOARD - 1:
        return -1
    if letters[(r0 - 1) * BOARD + c] or letters[(r0 + length) * BOARD + c]:
        return -1
    crossings = 0
    for i in range(length):
        idx = (r0 + i) * BOARD + c
        lv = letters[idx]
        if lv:
            if lv != wcodes[i] or dwn[idx]:
                return -1
            crossings += 1
        else:
            if letters[idx - 1] or letters[idx + 1]:
                return -1
    return crossings


def crossword_layout(words, max_grid, budget, seed):
    """See _purekernel.crossword_layout; identical contract and results."""
    cdef int n = len(words)
    if n == 0:
        return [], [], 0
    cdef int budget_c = budget
    if budget_c < 2 * n + 1:
        budget_c = 2 * n + 1
    cdef int max_grid_c = max_grid
    cdef _Rng rng = _Rng(seed)

    cdef array.array letters_arr = array.array("i", [0]) * (BOARD * BOARD)
    cdef array.array acr_arr = array.array("b", [0]) * (BOARD * BOARD)
    cdef array.array dwn_arr = array.array("b", [0]) * (BOARD * BOARD)
    cdef int[:] letters = letters_arr
    cdef char[:] acr = acr_arr
    cdef char[:] dwn = dwn_arr

    # word letter codes in a flat buffer with offsets (max word length 24)
    cdef array.array codes_arr = array.array("i", [0]) * (n * 24)
    cdef array.array lens_arr = array.array("i", [0]) * n
    cdef int[:] codes = codes_arr
    cdef int[:] lens = lens_arr
    cdef int wi, k
    for wi in range(n):
        word = words[wi]
        lens[wi] = len(word)
        for k in range(len(word)):
            codes[wi * 24 + k] = ord(word[k]) - 64

    occupied = []  # cell indices in fill order
    placed = []    # (word_idx, row, col, direction)

    state = {
        "expansions": 0,
        "stopped": False,
        "best_count": -1,
        "best_placed": [],
        "best_unplaced": list(range(n)),
    }

    def snapshot(unplaced_now):
        if len(placed) > state["best_count"]:
            state["best_count"] = len(placed)
            state["best_placed"] = list(placed)
            state["best_unplaced"] = list(unplaced_now)

    def candidates_for(int wi, bbox):
        cdef int length = lens[wi]
        cdef int* wcodes = &codes[wi * 24]
        cdef int min_r, max_r, min_c, max_c
        cdef int r, c, i, idx, lv, crossings, r0, c0
        cdef int nmin_r, nmax_r, nmin_c, nmax_c, area
        cdef char a_used, d_used
        cands = []
        if not occupied:
            if length <= max_grid_c:
                cands.append((0, length, 0, OFFSET, OFFSET, 0))
            return cands
        min_r, max_r, min_c, max_c = bbox
        seen = set()
        for idx_obj in occupied:
            idx = idx_obj
            lv = letters[idx]
            a_used = acr[idx]
            d_used = dwn[idx]
            if a_used and d_used:
                continue
            r = idx // BOARD
            c = idx - r * BOARD
            for i in range(length):
                if wcodes[i] != lv:
                    continue
                if a_used:
                    r0 = r - i
                    key = (r0, c, 1)
                    if key in seen:
                        continue
                    seen.add(key)
                    crossings = _try_down(letters, dwn, wcodes, length, r0, c, max_grid_c)
                    if crossings < 0:
                        continue
                    nmin_r = r0 if r0 < min_r else min_r
                    nmax_r = r0 + length - 1 if r0 + length - 1 > max_r else max_r
                    if nmax_r - nmin_r + 1 > max_grid_c:
                        continue
                    nmin_c = c if c < min_c else min_c
                    nmax_c = c if c > max_c else max_c
                    if nmax_c - nmin_c + 1 > max_grid_c:
                        continue
                    area = (nmax_r - nmin_r + 1) * (nmax_c - nmin_c + 1)
                    cands.append((-crossings, area, rng.next_u64(), r0, c, 1))
                else:
                    c0 = c - i
                    key = (r, c0, 0)
                    if key in seen:
                        continue
                    seen.add(key)
                    crossings = _try_across(letters, acr, wcodes, length, r, c0, max_grid_c)
                    if crossings < 0:
                        continue
                    nmin_c = c0 if c0 < min_c else min_c
                    nmax_c = c0 + length - 1 if c0 + length - 1 > max_c else max_c
                    if nmax_c - nmin_c + 1 > max_grid_c:
                        continue
                    nmin_r = r if r < min_r else min_r
                    nmax_r = r if r > max_r else max_r
                    if nmax_r - nmin_r + 1 > max_grid_c:
                        continue
                    area = (nmax_r - nmin_r + 1) * (nmax_c - nmin_c + 1)
                    cands.append((-crossings, area, rng.next_u64(), r, c0, 0))
        cands.sort()
        return cands

    def place(int wi, int r, int c, int d):
        cdef int length = lens[wi]
        cdef int i, idx, base
        touched = []
        if d == 0:
            base = r * BOARD
            for i in range(length):
                idx = base + c + i
                if letters[idx] == 0:
                    letters[idx] = codes[wi * 24 + i]
                    occupied.append(idx)
                    touched.append(idx)
                acr[idx] = 1
        else:
            for i in range(length):
                idx = (r + i) * BOARD + c
                if letters[idx] == 0:
                    letters[idx] = codes[wi * 24 + i]
                    occupied.append(idx)
                    touched.append(idx)
                dwn[idx] = 1
        placed.append((wi, r, c, d))
        return touched

    def unplace(int wi, int r, int c, int d, touched):
        cdef int length = lens[wi]
        cdef int i, base
        if d == 0:
            base = r * BOARD
            for i in range(length):
                acr[base + c + i] = 0
        else:
            for i in range(length):
                dwn[(r + i) * BOARD + c] = 0
        for idx in touched:
            letters[idx] = 0
        del occupied[len(occupied) - len(touched):]
        placed.pop()

    def bbox_with(bbox, int r, int c, int d, int length):
        cdef int r1, r2, c1, c2, min_r, max_r, min_c, max_c
        if d == 0:
            r1, r2, c1, c2 = r, r, c, c + length - 1
        else:
            r1, r2, c1, c2 = r, r + length - 1, c, c
        if bbox is None:
            return (r1, r2, c1, c2)
        min_r, max_r, min_c, max_c = bbox
        return (
            r1 if r1 < min_r else min_r,
            r2 if r2 > max_r else max_r,
            c1 if c1 < min_c else min_c,
            c2 if c2 > max_c else max_c,
        )

    def dfs(int i, bbox, unplaced):
        if state["stopped"]:
            return
        if i == n:
            snapshot(unplaced)
            if state["best_count"] == n:
                state["stopped"] = True
            return
        if len(placed) + (n - i) <= state["best_count"]:
            return
        for cand in candidates_for(i, bbox if bbox is not None else (0, 0, 0, 0)):
            if state["expansions"] >= budget_c:
                snapshot(unplaced + list(range(i, n)))
                state["stopped"] = True
                return
            state["expansions"] += 1
            _, _, _, r, c, d = cand
            touched = place(i, r, c, d)
            dfs(i + 1, bbox_with(bbox, r, c, d, lens[i]), unplaced)
            unplace(i, r, c, d, touched)
            if state["stopped"]:
                return
        dfs(i + 1, bbox, unplaced + [i])

    dfs(0, None, [])

    best = state["best_placed"]
    if not best:
        return [], sorted(state["best_unplaced"]), state["expansions"]
    min_r = min(p[1] for p in best)
    min_c = min(p[2] for p in best)
    result = [(wi, r - min_r, c - min_c, d) for (wi, r, c, d) in best]
    return result, sorted(state["best_unplaced"]), state["expansions"]


def wordsearch_layout(words, size, directions, seed, attempts=20):
    """See _purekernel.wordsearch_layout; identical contract and results."""
    cdef int size_c = size
    cdef int total = size_c * size_c
    cdef int n_dirs = len(directions)
    cdef int attempt, wi, di, r, c, i, rr, cc, length, end_r, end_c, v, idx
    cdef bint fits, ok
    cdef _Rng rng

    cdef array.array grid_arr = array.array("i", [0]) * total
    cdef int[:] grid = grid_arr
    cdef array.array dr_arr = array.array("i", [0]) * n_dirs
    cdef array.array dc_arr = array.array("i", [0]) * n_dirs
    cdef int[:] drs = dr_arr
    cdef int[:] dcs = dc_arr
    for di in range(n_dirs):
        drs[di] = directions[di][0]
        dcs[di] = directions[di][1]

    cdef array.array wc_arr = array.array("i", [0]) * 32
    cdef int[:] wcodes = wc_arr

    for attempt in range(attempts):
        rng = _Rng((seed + attempt * 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF)
        for idx in range(total):
            grid[idx] = 0
        placements = []
        ok = True
        for wi in range(len(words)):
            word = words[wi]
            length = len(word)
            for i in range(length):
                wcodes[i] = ord(word[i]) - 64
            starts = []
            for di in range(n_dirs):
                for r in range(size_c):
                    end_r = r + (length - 1) * drs[di]
                    if end_r < 0 or end_r >= size_c:
                        continue
                    for c in range(size_c):
                        end_c = c + (length - 1) * dcs[di]
                        if end_c < 0 or end_c >= size_c:
                            continue
                        fits = True
                        rr = r
                        cc = c
                        for i in range(length):
                            v = grid[rr * size_c + cc]
                            if v != 0 and v != wcodes[i]:
                                fits = False
                                break
                            rr += drs[di]
                            cc += dcs[di]
                        if fits:
                            starts.append((r, c, di))
            if not starts:
                ok = False
                break
            r, c, di = starts[rng.below(len(starts))]
            for i in range(length):
                grid[(r + i * drs[di]) * size_c + (c + i * dcs[di])] = ord(word[i]) - 64
            placements.append((wi, r, c, di))
        if not ok:
            continue
        pool = []
        for word in words:
            for ch in word:
                pool.append(ord(ch) - 64)
        for idx in range(total):
            if grid[idx] == 0:
                grid[idx] = pool[rng.below(len(pool))]
        rows = [
            "".join(chr(64 + grid[r * size_c + c]) for c in range(size_c))
            for r in range(size_c)
        ]
        return rows, placements, attempt
    return None
