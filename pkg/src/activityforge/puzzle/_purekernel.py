"""Pure-Python placement kernels for crossword and word-search search.

This is the hot path of puzzle generation. A compiled twin lives in
_fastkernel.pyx; both must return bit-identical results for identical
inputs (tests/test_kernel_parity.py enforces it), so any change here must
be mirrored there. The embedded SplitMix64 generator keeps the two
backends and the rest of the package on one deterministic RNG.

Crossword search: depth-first over words in the caller's order. Each word
is tried at every placement that crosses an already-placed word; candidates
are ranked by most crossings gained, then smallest bounding-box area, with
seeded tie-breaking. Dead ends backtrack. Each board write counts against
the expansion budget; on exhaustion the best layout seen so far (most words
placed, first found) is returned and the rest are reported unplaced.
"""

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

# virtual plane: coordinates stay within +-24 of the first word for any
# bounding box up to 25x25, so a 51x51 board with a 1-cell margin suffices
_BOARD = 51
_OFFSET = 25


class _Rng:
    __slots__ = ("_state",)

    def __init__(self, seed):
        self._state = seed & _MASK64

    def next_u64(self):
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n):
        return self.next_u64() % n


def _derive(seed, stream):
    return (seed + stream * _GOLDEN) & _MASK64


def crossword_layout(words, max_grid, budget, seed):
    """Search a crossword layout.

    words: uppercase A-Z strings in placement-priority order.
    Returns (placements, unplaced, expansions): placements as
    (word_index, row, col, direction) with direction 0=across/1=down and
    coordinates cropped to start at (0, 0); unplaced as word indices.
    """
    n = len(words)
    if n == 0:
        return [], [], 0
    if budget < 2 * n + 1:
        budget = 2 * n + 1
    rng = _Rng(seed)
    size = _BOARD * _BOARD
    letters = [0] * size
    acr = bytearray(size)
    dwn = bytearray(size)
    occupied = []  # cell indices in fill order
    placed = []    # (word_idx, row, col, direction) in virtual coords
    codes = [[ord(c) - 64 for c in w] for w in words]

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

    def try_across(wcodes, r, c0):
        """Crossings gained, or -1 if the placement is invalid."""
        length = len(wcodes)
        if r < 1 or r > _BOARD - 2 or c0 < 1 or c0 + length > _BOARD - 1:
            return -1
        base = r * _BOARD
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
                if letters[idx - _BOARD] or letters[idx + _BOARD]:
                    return -1
        return crossings

    def try_down(wcodes, r0, c):
        length = len(wcodes)
        if c < 1 or c > _BOARD - 2 or r0 < 1 or r0 + length > _BOARD - 1:
            return -1
        if letters[(r0 - 1) * _BOARD + c] or letters[(r0 + length) * _BOARD + c]:
            return -1
        crossings = 0
        for i in range(length):
            idx = (r0 + i) * _BOARD + c
            lv = letters[idx]
            if lv:
                if lv != wcodes[i] or dwn[idx]:
                    return -1
                crossings += 1
            else:
                if letters[idx - 1] or letters[idx + 1]:
                    return -1
        return crossings

    def candidates_for(wi, bbox):
        wcodes = codes[wi]
        length = len(wcodes)
        cands = []
        if not occupied:
            if length <= max_grid:
                # first word on an empty board: across at the origin
                cands.append((0, length, 0, _OFFSET, _OFFSET, 0))
            return cands
        min_r, max_r, min_c, max_c = bbox
        seen = set()
        for idx in occupied:
            lv = letters[idx]
            a_used = acr[idx]
            d_used = dwn[idx]
            if a_used and d_used:
                continue
            r = idx // _BOARD
            c = idx - r * _BOARD
            for i in range(length):
                if wcodes[i] != lv:
                    continue
                if a_used:
                    r0 = r - i
                    key = (r0, c, 1)
                    if key in seen:
                        continue
                    seen.add(key)
                    crossings = try_down(wcodes, r0, c)
                    if crossings < 0:
                        continue
                    nmin_r = r0 if r0 < min_r else min_r
                    nmax_r = r0 + length - 1 if r0 + length - 1 > max_r else max_r
                    if nmax_r - nmin_r + 1 > max_grid:
                        continue
                    nmin_c = c if c < min_c else min_c
                    nmax_c = c if c > max_c else max_c
                    if nmax_c - nmin_c + 1 > max_grid:
                        continue
                    area = (nmax_r - nmin_r + 1) * (nmax_c - nmin_c + 1)
                    cands.append((-crossings, area, rng.next_u64(), r0, c, 1))
                else:
                    c0 = c - i
                    key = (r, c0, 0)
                    if key in seen:
                        continue
                    seen.add(key)
                    crossings = try_across(wcodes, r, c0)
                    if crossings < 0:
                        continue
                    nmin_c = c0 if c0 < min_c else min_c
                    nmax_c = c0 + length - 1 if c0 + length - 1 > max_c else max_c
                    if nmax_c - nmin_c + 1 > max_grid:
                        continue
                    nmin_r = r if r < min_r else min_r
                    nmax_r = r if r > max_r else max_r
                    if nmax_r - nmin_r + 1 > max_grid:
                        continue
                    area = (nmax_r - nmin_r + 1) * (nmax_c - nmin_c + 1)
                    cands.append((-crossings, area, rng.next_u64(), r, c0, 0))
        cands.sort()
        return cands

    def place(wi, r, c, d):
        wcodes = codes[wi]
        touched = []
        if d == 0:
            base = r * _BOARD
            for i, code in enumerate(wcodes):
                idx = base + c + i
                if letters[idx] == 0:
                    letters[idx] = code
                    occupied.append(idx)
                    touched.append(idx)
                acr[idx] = 1
        else:
            for i, code in enumerate(wcodes):
                idx = (r + i) * _BOARD + c
                if letters[idx] == 0:
                    letters[idx] = code
                    occupied.append(idx)
                    touched.append(idx)
                dwn[idx] = 1
        placed.append((wi, r, c, d))
        return touched

    def unplace(wi, r, c, d, touched):
        wcodes = codes[wi]
        if d == 0:
            base = r * _BOARD
            for i in range(len(wcodes)):
                acr[base + c + i] = 0
        else:
            for i in range(len(wcodes)):
                dwn[(r + i) * _BOARD + c] = 0
        for idx in touched:
            letters[idx] = 0
        del occupied[len(occupied) - len(touched):]
        placed.pop()

    def bbox_with(bbox, r, c, d, length):
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

    def dfs(i, bbox, unplaced):
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
            if state["expansions"] >= budget:
                snapshot(unplaced + list(range(i, n)))
                state["stopped"] = True
                return
            state["expansions"] += 1
            _, _, _, r, c, d = cand
            touched = place(i, r, c, d)
            dfs(i + 1, bbox_with(bbox, r, c, d, len(codes[i])), unplaced)
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
    """Seeded word-search placement plus letterfill.

    words: uppercase A-Z strings in placement-priority order.
    directions: (dr, dc) deltas in canonical order.
    Returns (rows, placements, attempt) with placements as
    (word_index, row, col, direction_index), or None when every attempt
    fails. Empty cells are filled from the letter distribution of the
    placed words (uniform draw over their concatenated letters).
    """
    total = size * size
    for attempt in range(attempts):
        rng = _Rng(_derive(seed, attempt))
        grid = [0] * total
        placements = []
        ok = True
        for wi, word in enumerate(words):
            wcodes = [ord(ch) - 64 for ch in word]
            length = len(wcodes)
            starts = []
            for di in range(len(directions)):
                dr, dc = directions[di]
                for r in range(size):
                    end_r = r + (length - 1) * dr
                    if end_r < 0 or end_r >= size:
                        continue
                    for c in range(size):
                        end_c = c + (length - 1) * dc
                        if end_c < 0 or end_c >= size:
                            continue
                        fits = True
                        rr = r
                        cc = c
                        for i in range(length):
                            v = grid[rr * size + cc]
                            if v != 0 and v != wcodes[i]:
                                fits = False
                                break
                            rr += dr
                            cc += dc
                        if fits:
                            starts.append((r, c, di))
            if not starts:
                ok = False
                break
            r, c, di = starts[rng.below(len(starts))]
            dr, dc = directions[di]
            for i in range(length):
                grid[(r + i * dr) * size + (c + i * dc)] = wcodes[i]
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
            "".join(chr(64 + grid[r * size + c]) for c in range(size))
            for r in range(size)
        ]
        return rows, placements, attempt
    return None
