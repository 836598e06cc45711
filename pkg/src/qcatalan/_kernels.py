"""Hot inner loops over {1,2} words, JIT-compiled with numba when available.

Words are numpy int8 arrays with entries 1 (horizontal step) and 2
(vertical step).  All kernels are written in plain loop style so the same
source runs under numba's nopython mode and as ordinary Python.

Backend selection (resolved once, at import):

    QCAT_BACKEND=numba   require numba, fail if it cannot be imported
    QCAT_BACKEND=numpy   skip JIT, run the kernels as plain Python
    unset / auto         use numba if importable, else fall back
"""

import os

import numpy as np


def _pick_backend() -> str:
    choice = os.environ.get("QCAT_BACKEND", "auto").strip().lower() or "auto"
    if choice not in ("auto", "numba", "numpy"):
        raise RuntimeError(
            f"QCAT_BACKEND must be 'numba' or 'numpy', got {choice!r}"
        )
    if choice == "numpy":
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        if choice == "numba":
            raise
        return "numpy"
    return "numba"


BACKEND = _pick_backend()

if BACKEND == "numba":
    from numba import njit
else:
    def njit(*args, **kwargs):
        # identity decorator: same kernels, no compilation
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


@njit(cache=True)
def inv_word(w):
    """Inversions of a {1,2} word: pairs with a 2 before a 1.

    Single left-to-right scan accumulating the running 2-count at each 1.
    """
    twos = 0
    total = 0
    for i in range(w.shape[0]):
        if w[i] == 2:
            twos += 1
        else:
            total += twos
    return total


@njit(cache=True)
def is_lattice(w):
    """True iff w is a ballot word: only 1s/2s, equal counts, no prefix
    with more 2s than 1s."""
    ones = 0
    twos = 0
    for i in range(w.shape[0]):
        s = w[i]
        if s == 1:
            ones += 1
        elif s == 2:
            twos += 1
            if twos > ones:
                return False
        else:
            return False
    return ones == twos


@njit(cache=True)
def inv_rows(mat):
    """Inversion count of every row of a word matrix."""
    out = np.empty(mat.shape[0], dtype=np.int64)
    for i in range(mat.shape[0]):
        out[i] = inv_word(mat[i])
    return out


@njit(cache=True)
def fill_words(n, out):
    """Fill ``out`` (count x 2n, int8) with every ballot word of half-length
    n, in lexicographic order with 1 < 2.

    Row 0 is 1^n 2^n; each later row is the lexicographic successor of the
    previous one: flip the rightmost 1 that can become a 2 without breaking
    the ballot prefix condition, then append the smallest completion
    (remaining 1s, then remaining 2s).  ``out`` must have exactly as many
    rows as there are such words.
    """
    count = out.shape[0]
    length = 2 * n
    if n == 0:
        return
    for j in range(n):
        out[0, j] = 1
        out[0, n + j] = 2
    for row in range(1, count):
        prev = out[row - 1]
        cur = out[row]
        ones = n
        twos = n
        i = length - 1
        while True:
            s = prev[i]
            if s == 1:
                ones -= 1
            else:
                twos -= 1
            # (ones, twos) now count prev[:i]
            if s == 1 and twos + 1 <= ones:
                break
            i -= 1
        for j in range(i):
            cur[j] = prev[j]
        cur[i] = 2
        rem_ones = n - ones
        rem_twos = n - twos - 1
        for j in range(rem_ones):
            cur[i + 1 + j] = 1
        for j in range(rem_twos):
            cur[i + 1 + rem_ones + j] = 2


@njit(cache=True)
def split_scan(pi, sigma, r):
    """Smallest t with (#2s in pi[:t+2r]) - (#2s in sigma[:t]) == r.

    Returns -1 if no such t exists in [0, len(pi) - 2r]; for valid ballot
    inputs under the injection preconditions one always exists.
    """
    m2_pi = 0
    for j in range(2 * r):
        if pi[j] == 2:
            m2_pi += 1
    m2_sigma = 0
    t_max = pi.shape[0] - 2 * r
    for t in range(t_max + 1):
        if m2_pi - m2_sigma == r:
            return t
        if t < t_max:
            if pi[t + 2 * r] == 2:
                m2_pi += 1
            if sigma[t] == 2:
                m2_sigma += 1
    return -1


# status codes returned by audit_batch
AUDIT_OK = 0
AUDIT_NO_SPLIT = 1
AUDIT_BAD_NU = 2
AUDIT_BAD_OMEGA = 3


@njit(cache=True)
def audit_batch(pk, pl, r):
    """Apply the recombination injection to every pair of rows (pi, sigma)
    from the word matrices ``pk`` and ``pl``.

    For each pair: find the split index, form nu = sigma_left + pi_right
    and omega = pi_left + sigma_right, validate both, and record

      keys[p]     -- the pair (nu, omega) packed into one int64
                     (symbol - 1 bits, nu first; lengths are fixed per call)
      inv_sums[p] -- inv(nu) + inv(omega)
      status[p]   -- AUDIT_OK or the first failure code

    Pairs are visited row-major, p = a * len(pl) + b.
    """
    ck = pk.shape[0]
    cl = pl.shape[0]
    len_pi = pk.shape[1]
    len_sigma = pl.shape[1]
    len_nu = len_pi - 2 * r
    len_omega = len_sigma + 2 * r
    n_pairs = ck * cl
    keys = np.empty(n_pairs, dtype=np.int64)
    inv_sums = np.empty(n_pairs, dtype=np.int64)
    status = np.zeros(n_pairs, dtype=np.int8)
    nu = np.empty(len_nu, dtype=np.int8)
    omega = np.empty(len_omega, dtype=np.int8)
    p = 0
    for a in range(ck):
        pi = pk[a]
        for b in range(cl):
            sigma = pl[b]
            t = split_scan(pi, sigma, r)
            if t < 0:
                status[p] = AUDIT_NO_SPLIT
                keys[p] = -1
                inv_sums[p] = -1
                p += 1
                continue
            cut = t + 2 * r
            for j in range(t):
                nu[j] = sigma[j]
            for j in range(cut, len_pi):
                nu[t + j - cut] = pi[j]
            for j in range(cut):
                omega[j] = pi[j]
            for j in range(t, len_sigma):
                omega[cut + j - t] = sigma[j]
            if not is_lattice(nu):
                status[p] = AUDIT_BAD_NU
            elif not is_lattice(omega):
                status[p] = AUDIT_BAD_OMEGA
            # bits must be plain ints so the key cannot wrap in int8 math
            key = 0
            for j in range(len_nu):
                key = key * 2 + (1 if nu[j] == 2 else 0)
            for j in range(len_omega):
                key = key * 2 + (1 if omega[j] == 2 else 0)
            keys[p] = key
            inv_sums[p] = inv_word(nu) + inv_word(omega)
            p += 1
    return keys, inv_sums, status
