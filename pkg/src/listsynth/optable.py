"""The 41-operation table of the list DSL.

Two runtime types exist: 64-bit signed integers and lists of such integers.
Every operation takes one or two arguments and returns one value; the five
signatures that occur are list->int, list->list, (int,list)->list,
(list,list)->list and (int,list)->int.  All integer arithmetic saturates at
the int64 bounds instead of wrapping or trapping, which keeps every program
total.
"""

from dataclasses import dataclass

import numpy as np

# type tags
TINT = 0
TLIST = 1

# int64 bounds (saturation limits for all DSL arithmetic)
IMIN = -(2**63)
IMAX = 2**63 - 1

# argument-source kinds used by execution plans
SRC_HIST = 0    # output of an earlier statement
SRC_INPUT = 1   # the program's list input
SRC_ZERO = 2    # default 0 (int arguments with no producer)

# families
ACCESS, COUNT, HEAD, LAST, MINIMUM, MAXIMUM, SEARCH, SUM, DELETE, DROP, \
    FILTER, INSERT, MAP, REVERSE, SCANL1, SORT, TAKE, ZIPWITH = range(18)

# lambda ids: predicates (COUNT / FILTER)
LAM_GT0, LAM_LT0, LAM_ODD, LAM_EVEN = range(4)
# unary map lambdas
LAM_ADD1, LAM_SUB1, LAM_MUL2, LAM_MUL3, LAM_MUL4, LAM_DIV2, LAM_DIV3, \
    LAM_DIV4, LAM_NEG, LAM_SQR = range(10)
# binary lambdas (SCANL1 / ZIPWITH)
LAM_PLUS, LAM_MINUS, LAM_TIMES, LAM_MIN, LAM_MAX = range(5)


@dataclass(frozen=True)
class OperationDescriptor:
    op_id: int
    name: str
    family: int
    lam: int                 # -1 when the family takes no lambda
    arg_tags: tuple          # declaration-order argument types
    ret_tag: int


def _build_table():
    ops = []

    def add(op_id, name, family, lam, arg_tags, ret_tag):
        ops.append(OperationDescriptor(op_id, name, family, lam, arg_tags, ret_tag))

    preds = [(">0", LAM_GT0), ("<0", LAM_LT0), ("odd", LAM_ODD), ("even", LAM_EVEN)]
    binops = [("+", LAM_PLUS), ("-", LAM_MINUS), ("*", LAM_TIMES),
              ("min", LAM_MIN), ("max", LAM_MAX)]
    maps = [("+1", LAM_ADD1), ("-1", LAM_SUB1), ("*2", LAM_MUL2), ("*3", LAM_MUL3),
            ("*4", LAM_MUL4), ("/2", LAM_DIV2), ("/3", LAM_DIV3), ("/4", LAM_DIV4),
            ("*-1", LAM_NEG), ("^2", LAM_SQR)]

    add(1, "ACCESS", ACCESS, -1, (TINT, TLIST), TINT)
    for i, (txt, lam) in enumerate(preds):
        add(2 + i, f"COUNT({txt})", COUNT, lam, (TLIST,), TINT)
    add(6, "HEAD", HEAD, -1, (TLIST,), TINT)
    add(7, "LAST", LAST, -1, (TLIST,), TINT)
    add(8, "MINIMUM", MINIMUM, -1, (TLIST,), TINT)
    add(9, "MAXIMUM", MAXIMUM, -1, (TLIST,), TINT)
    add(10, "SEARCH", SEARCH, -1, (TINT, TLIST), TINT)
    add(11, "SUM", SUM, -1, (TLIST,), TINT)
    add(12, "DELETE", DELETE, -1, (TINT, TLIST), TLIST)
    add(13, "DROP", DROP, -1, (TINT, TLIST), TLIST)
    for i, (txt, lam) in enumerate(preds):
        add(14 + i, f"FILTER({txt})", FILTER, lam, (TLIST,), TLIST)
    add(18, "INSERT", INSERT, -1, (TINT, TLIST), TLIST)
    for i, (txt, lam) in enumerate(maps):
        add(19 + i, f"MAP({txt})", MAP, lam, (TLIST,), TLIST)
    add(29, "REVERSE", REVERSE, -1, (TLIST,), TLIST)
    for i, (txt, lam) in enumerate(binops):
        add(30 + i, f"SCANL1({txt})", SCANL1, lam, (TLIST,), TLIST)
    add(35, "SORT", SORT, -1, (TLIST,), TLIST)
    add(36, "TAKE", TAKE, -1, (TINT, TLIST), TLIST)
    for i, (txt, lam) in enumerate(binops):
        add(37 + i, f"ZIPWITH({txt})", ZIPWITH, lam, (TLIST, TLIST), TLIST)

    return {d.op_id: d for d in ops}


OPERATIONS = _build_table()
N_OPS = len(OPERATIONS)
ALL_OP_IDS = tuple(sorted(OPERATIONS))
NAME_TO_ID = {d.name: d.op_id for d in OPERATIONS.values()}

assert N_OPS == 41 and ALL_OP_IDS == tuple(range(1, 42))
assert len(NAME_TO_ID) == N_OPS  # names are unique

# flat lookup arrays for the kernels, indexed by op id (slot 0 unused)
OP_FAMILY = np.zeros(N_OPS + 1, dtype=np.int64)
OP_LAMBDA = np.zeros(N_OPS + 1, dtype=np.int64)
OP_NARGS = np.zeros(N_OPS + 1, dtype=np.int64)
OP_ARG1 = np.full(N_OPS + 1, -1, dtype=np.int64)
OP_ARG2 = np.full(N_OPS + 1, -1, dtype=np.int64)
OP_RET = np.zeros(N_OPS + 1, dtype=np.int64)
for _d in OPERATIONS.values():
    OP_FAMILY[_d.op_id] = _d.family
    OP_LAMBDA[_d.op_id] = _d.lam
    OP_NARGS[_d.op_id] = len(_d.arg_tags)
    OP_ARG1[_d.op_id] = _d.arg_tags[0]
    if len(_d.arg_tags) == 2:
        OP_ARG2[_d.op_id] = _d.arg_tags[1]
    OP_RET[_d.op_id] = _d.ret_tag
for _a in (OP_FAMILY, OP_LAMBDA, OP_NARGS, OP_ARG1, OP_ARG2, OP_RET):
    _a.setflags(write=False)

INT_RETURNING = tuple(i for i in ALL_OP_IDS if OP_RET[i] == TINT)
LIST_RETURNING = tuple(i for i in ALL_OP_IDS if OP_RET[i] == TLIST)
