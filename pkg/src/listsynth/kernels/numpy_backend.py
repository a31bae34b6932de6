"""Fallback interpreter kernels without numba.

Works on the same buffer layout as the jit backend but evaluates statements
with plain Python integers, which are exact, and clamps results to the int64
bounds afterwards.  Slow but obviously correct; selected with
LISTSYNTH_BACKEND=numpy.
"""

from listsynth.optable import (
    ACCESS, COUNT, DELETE, DROP, FILTER, HEAD, IMAX, IMIN, INSERT, LAST,
    LAM_ADD1, LAM_DIV2, LAM_DIV3, LAM_DIV4, LAM_EVEN, LAM_GT0, LAM_LT0,
    LAM_MAX, LAM_MIN, LAM_MINUS, LAM_MUL2, LAM_MUL3, LAM_MUL4, LAM_NEG,
    LAM_ODD, LAM_PLUS, LAM_SQR, LAM_SUB1, LAM_TIMES, MAP, MAXIMUM, MINIMUM,
    OP_FAMILY, OP_LAMBDA, OP_RET, REVERSE, SCANL1, SEARCH, SORT, SRC_HIST,
    SRC_INPUT, SUM, TAKE, TINT, ZIPWITH,
)

NAME = "numpy"


def _clamp(v):
    if v > IMAX:
        return IMAX
    if v < IMIN:
        return IMIN
    return v


_PREDS = {
    LAM_GT0: lambda x: x > 0,
    LAM_LT0: lambda x: x < 0,
    LAM_ODD: lambda x: x % 2 != 0,
    LAM_EVEN: lambda x: x % 2 == 0,
}

_UNARY = {
    LAM_ADD1: lambda x: x + 1,
    LAM_SUB1: lambda x: x - 1,
    LAM_MUL2: lambda x: x * 2,
    LAM_MUL3: lambda x: x * 3,
    LAM_MUL4: lambda x: x * 4,
    LAM_DIV2: lambda x: -(-x // 2) if x < 0 else x // 2,
    LAM_DIV3: lambda x: -(-x // 3) if x < 0 else x // 3,
    LAM_DIV4: lambda x: -(-x // 4) if x < 0 else x // 4,
    LAM_NEG: lambda x: -x,
    LAM_SQR: lambda x: x * x,
}

_BINARY = {
    LAM_PLUS: lambda a, b: a + b,
    LAM_MINUS: lambda a, b: a - b,
    LAM_TIMES: lambda a, b: a * b,
    LAM_MIN: min,
    LAM_MAX: max,
}


def exec_op(op_id, int_arg, list1, list2):
    """Apply one operation to already-resolved arguments.

    int_arg is a Python int, list1/list2 are Python int lists (list2 only for
    the two-list signature).  Returns an int or a new list.
    """
    fam = OP_FAMILY[op_id]
    lam = OP_LAMBDA[op_id]
    if fam == ACCESS:
        if 0 <= int_arg < len(list1):
            return list1[int_arg]
        return 0
    if fam == COUNT:
        pred = _PREDS[lam]
        return sum(1 for x in list1 if pred(x))
    if fam == HEAD:
        return list1[0] if list1 else 0
    if fam == LAST:
        return list1[-1] if list1 else 0
    if fam == MINIMUM:
        return min(list1) if list1 else 0
    if fam == MAXIMUM:
        return max(list1) if list1 else 0
    if fam == SEARCH:
        for i, x in enumerate(list1):
            if x == int_arg:
                return i
        return -1
    if fam == SUM:
        acc = 0
        for x in list1:
            acc = _clamp(acc + x)
        return acc
    if fam == DELETE:
        return [x for x in list1 if x != int_arg]
    if fam == DROP:
        n = max(int_arg, 0)
        return list(list1[n:])
    if fam == FILTER:
        pred = _PREDS[lam]
        return [x for x in list1 if pred(x)]
    if fam == INSERT:
        return list(list1) + [int_arg]
    if fam == MAP:
        f = _UNARY[lam]
        return [_clamp(f(x)) for x in list1]
    if fam == REVERSE:
        return list(reversed(list1))
    if fam == SCANL1:
        if not list1:
            return []
        f = _BINARY[lam]
        out = [list1[0]]
        for x in list1[1:]:
            out.append(_clamp(f(x, out[-1])))
        return out
    if fam == SORT:
        return sorted(list1)
    if fam == TAKE:
        n = max(int_arg, 0)
        return list(list1[:n])
    if fam == ZIPWITH:
        f = _BINARY[lam]
        return [_clamp(f(a, b)) for a, b in zip(list1, list2)]
    raise AssertionError(f"unknown family {fam}")


def _run_one(ops, plan, inp):
    """Execute one program on one input list; returns (tag, value)."""
    hist = []
    value = None
    for s, op in enumerate(ops):
        k1, i1, k2, i2 = plan[s]
        int_arg = 0
        list1 = []
        list2 = []
        if OP_FAMILY[op] == ZIPWITH:
            list1 = hist[i1] if k1 == SRC_HIST else inp
            list2 = hist[i2] if k2 == SRC_HIST else inp
        else:
            first_is_int = k2 != -1  # two-arg (int, list) signatures
            if first_is_int:
                int_arg = hist[i1] if k1 == SRC_HIST else 0
                list1 = hist[i2] if k2 == SRC_HIST else inp
            else:
                list1 = hist[i1] if k1 == SRC_HIST else inp
        value = exec_op(op, int_arg, list1, list2)
        hist.append(value)
    tag = OP_RET[ops[-1]]
    return tag, value


def run_batch(ops_mat, plans, inputs, in_lens, out_ints, out_lists, out_lens):
    """Run every program in ops_mat on every input row.

    Same contract as the jit kernel: out_lens[p, m] = -1 marks an integer
    output stored in out_ints[p, m]; list outputs land in out_lists[p, m].
    """
    n_prog = len(ops_mat)
    n_in = len(inputs)
    for m in range(n_in):
        py_inputs_m = [int(x) for x in inputs[m][: in_lens[m]]]
        for p in range(n_prog):
            tag, value = _run_one(ops_mat[p], plans[p], py_inputs_m)
            if tag == TINT:
                out_ints[p, m] = value
                out_lens[p, m] = -1
            else:
                out_lens[p, m] = len(value)
                for i, x in enumerate(value):
                    out_lists[p, m, i] = x


def levenshtein(a, b):
    """Edit distance between two integer sequences (two-row DP)."""
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    prev = list(range(lb + 1))
    cur = [0] * (lb + 1)
    for i in range(1, la + 1):
        cur[0] = i
        ai = a[i - 1]
        for j in range(1, lb + 1):
            cost = 0 if ai == b[j - 1] else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
        prev, cur = cur, prev
    return prev[lb]
