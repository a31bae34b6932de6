"""Jit-compiled interpreter kernels.

Buffer layout shared with the fallback backend:

  ops_mat  (P, L) int64   op ids, one row per program
  plans    (P, L, 4) int64  per statement: kind1, idx1, kind2, idx2
  inputs   (M, max_in) int64 padded input rows, in_lens gives true lengths
  out_ints (P, M) int64   integer outputs
  out_lists (P, M, cap) int64  list outputs, cap >= max_in + L
  out_lens (P, M) int64   list length, or -1 for an integer output

int64 arithmetic in jit code wraps like C, so saturation is enforced
explicitly before and after each risky operation.
"""

import numpy as np
from numba import njit

from listsynth.optable import (
    ACCESS, COUNT, DELETE, DROP, FILTER, HEAD, INSERT, LAST, MAP, MAXIMUM,
    MINIMUM, OP_FAMILY, OP_LAMBDA, OP_RET, REVERSE, SCANL1, SEARCH, SORT,
    SRC_HIST, SUM, TAKE, TINT, ZIPWITH,
)

NAME = "numba"

IMIN64 = np.int64(-(2**63))
IMAX64 = np.int64(2**63 - 1)

# read-only tables baked into the compiled kernels
_FAMILY = OP_FAMILY
_LAMBDA = OP_LAMBDA
_RET = OP_RET


@njit(cache=True)
def _sat_add(a, b):
    if b > 0 and a > IMAX64 - b:
        return IMAX64
    if b < 0 and a < IMIN64 - b:
        return IMIN64
    return a + b


@njit(cache=True)
def _sat_sub(a, b):
    if b < 0 and a > IMAX64 + b:
        return IMAX64
    if b > 0 and a < IMIN64 + b:
        return IMIN64
    return a - b


@njit(cache=True)
def _sat_mul(a, b):
    if a == 0 or b == 0:
        return np.int64(0)
    if a == IMIN64:
        if b == 1:
            return a
        return IMAX64 if b < 0 else IMIN64
    if b == IMIN64:
        if a == 1:
            return b
        return IMAX64 if a < 0 else IMIN64
    r = a * b  # wraps on overflow
    if r // a != b:
        return IMAX64 if (a > 0) == (b > 0) else IMIN64
    return r


@njit(cache=True)
def _div_trunc(a, b):
    # b is always positive here; floor division corrected toward zero
    q = a // b
    if a % b != 0 and a < 0:
        q += 1
    return q


@njit(cache=True)
def _unary_lam(lam, x):
    if lam == 0:
        return _sat_add(x, np.int64(1))
    if lam == 1:
        return _sat_sub(x, np.int64(1))
    if lam == 2:
        return _sat_mul(x, np.int64(2))
    if lam == 3:
        return _sat_mul(x, np.int64(3))
    if lam == 4:
        return _sat_mul(x, np.int64(4))
    if lam == 5:
        return _div_trunc(x, np.int64(2))
    if lam == 6:
        return _div_trunc(x, np.int64(3))
    if lam == 7:
        return _div_trunc(x, np.int64(4))
    if lam == 8:
        return _sat_mul(x, np.int64(-1))
    return _sat_mul(x, x)  # ^2


@njit(cache=True)
def _binary_lam(lam, a, b):
    if lam == 0:
        return _sat_add(a, b)
    if lam == 1:
        return _sat_sub(a, b)
    if lam == 2:
        return _sat_mul(a, b)
    if lam == 3:
        return min(a, b)
    return max(a, b)


@njit(cache=True)
def _pred(lam, x):
    if lam == 0:
        return x > 0
    if lam == 1:
        return x < 0
    if lam == 2:
        return x % 2 != 0
    return x % 2 == 0


@njit(cache=True)
def run_batch(ops_mat, plans, inputs, in_lens, out_ints, out_lists, out_lens):
    n_prog, length = ops_mat.shape
    n_in = inputs.shape[0]
    cap = out_lists.shape[2]
    hist_int = np.zeros(length, np.int64)
    hist_list = np.zeros((length, cap), np.int64)
    hist_len = np.zeros(length, np.int64)

    for p in range(n_prog):
        for m in range(n_in):
            ilen = in_lens[m]
            for s in range(length):
                op = ops_mat[p, s]
                fam = _FAMILY[op]
                lam = _LAMBDA[op]
                k1 = plans[p, s, 0]
                i1 = plans[p, s, 1]
                k2 = plans[p, s, 2]
                i2 = plans[p, s, 3]

                # resolve arguments; list args alias history rows or the input
                int_arg = np.int64(0)
                if fam == ZIPWITH:
                    if k1 == SRC_HIST:
                        src1 = hist_list[i1]
                        n1 = hist_len[i1]
                    else:
                        src1 = inputs[m]
                        n1 = ilen
                    if k2 == SRC_HIST:
                        src2 = hist_list[i2]
                        n2 = hist_len[i2]
                    else:
                        src2 = inputs[m]
                        n2 = ilen
                elif k2 != -1:  # (int, list) signature
                    if k1 == SRC_HIST:
                        int_arg = hist_int[i1]
                    if k2 == SRC_HIST:
                        src1 = hist_list[i2]
                        n1 = hist_len[i2]
                    else:
                        src1 = inputs[m]
                        n1 = ilen
                    src2 = src1
                    n2 = np.int64(0)
                else:  # single list argument
                    if k1 == SRC_HIST:
                        src1 = hist_list[i1]
                        n1 = hist_len[i1]
                    else:
                        src1 = inputs[m]
                        n1 = ilen
                    src2 = src1
                    n2 = np.int64(0)

                dst = hist_list[s]
                if fam == ACCESS:
                    if int_arg >= 0 and int_arg < n1:
                        hist_int[s] = src1[int_arg]
                    else:
                        hist_int[s] = 0
                elif fam == COUNT:
                    c = np.int64(0)
                    for i in range(n1):
                        if _pred(lam, src1[i]):
                            c += 1
                    hist_int[s] = c
                elif fam == HEAD:
                    hist_int[s] = src1[0] if n1 > 0 else 0
                elif fam == LAST:
                    hist_int[s] = src1[n1 - 1] if n1 > 0 else 0
                elif fam == MINIMUM:
                    if n1 == 0:
                        hist_int[s] = 0
                    else:
                        v = src1[0]
                        for i in range(1, n1):
                            if src1[i] < v:
                                v = src1[i]
                        hist_int[s] = v
                elif fam == MAXIMUM:
                    if n1 == 0:
                        hist_int[s] = 0
                    else:
                        v = src1[0]
                        for i in range(1, n1):
                            if src1[i] > v:
                                v = src1[i]
                        hist_int[s] = v
                elif fam == SEARCH:
                    found = np.int64(-1)
                    for i in range(n1):
                        if src1[i] == int_arg:
                            found = i
                            break
                    hist_int[s] = found
                elif fam == SUM:
                    acc = np.int64(0)
                    for i in range(n1):
                        acc = _sat_add(acc, src1[i])
                    hist_int[s] = acc
                elif fam == DELETE:
                    n = np.int64(0)
                    for i in range(n1):
                        if src1[i] != int_arg:
                            dst[n] = src1[i]
                            n += 1
                    hist_len[s] = n
                elif fam == DROP:
                    skip = max(int_arg, np.int64(0))
                    n = np.int64(0)
                    for i in range(skip, n1):
                        dst[n] = src1[i]
                        n += 1
                    hist_len[s] = n
                elif fam == FILTER:
                    n = np.int64(0)
                    for i in range(n1):
                        if _pred(lam, src1[i]):
                            dst[n] = src1[i]
                            n += 1
                    hist_len[s] = n
                elif fam == INSERT:
                    for i in range(n1):
                        dst[i] = src1[i]
                    dst[n1] = int_arg
                    hist_len[s] = n1 + 1
                elif fam == MAP:
                    for i in range(n1):
                        dst[i] = _unary_lam(lam, src1[i])
                    hist_len[s] = n1
                elif fam == REVERSE:
                    for i in range(n1):
                        dst[i] = src1[n1 - 1 - i]
                    hist_len[s] = n1
                elif fam == SCANL1:
                    if n1 > 0:
                        dst[0] = src1[0]
                        for i in range(1, n1):
                            dst[i] = _binary_lam(lam, src1[i], dst[i - 1])
                    hist_len[s] = n1
                elif fam == SORT:
                    for i in range(n1):
                        dst[i] = src1[i]
                    dst[:n1].sort()
                    hist_len[s] = n1
                elif fam == TAKE:
                    n = min(max(int_arg, np.int64(0)), n1)
                    for i in range(n):
                        dst[i] = src1[i]
                    hist_len[s] = n
                else:  # ZIPWITH
                    n = min(n1, n2)
                    for i in range(n):
                        dst[i] = _binary_lam(lam, src1[i], src2[i])
                    hist_len[s] = n

            last = length - 1
            if _RET[ops_mat[p, last]] == TINT:
                out_ints[p, m] = hist_int[last]
                out_lens[p, m] = -1
            else:
                n = hist_len[last]
                out_lens[p, m] = n
                for i in range(n):
                    out_lists[p, m, i] = hist_list[last, i]


@njit(cache=True)
def levenshtein(a, b):
    la = len(a)
    lb = len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    prev = np.arange(lb + 1)
    cur = np.zeros(lb + 1, np.int64)
    for i in range(1, la + 1):
        cur[0] = i
        ai = a[i - 1]
        for j in range(1, lb + 1):
            cost = 0 if ai == b[j - 1] else 1
            best = prev[j] + 1
            if cur[j - 1] + 1 < best:
                best = cur[j - 1] + 1
            if prev[j - 1] + cost < best:
                best = prev[j - 1] + cost
            cur[j] = best
        for j in range(lb + 1):
            prev[j] = cur[j]
    return prev[lb]
