"""Programs, implicit argument resolution, and the interpreter front end.

A program is a sequence of op ids from the 41-entry table; the single program
input is always a list of integers.  Arguments are never named: each
statement parameter is bound to the most recent earlier output of the right
type, falling back to the program input (for lists) or 0 (for integers).
Because that binding depends only on the op signatures, it is computed once
per program as a static plan and shared by both interpreter backends.
"""

import numpy as np

from listsynth import kernels
from listsynth.kernels import numpy_backend
from listsynth.optable import (
    IMAX, IMIN, NAME_TO_ID, OP_RET, OPERATIONS, SRC_HIST, SRC_INPUT,
    SRC_ZERO, TINT,
)


class ProgramParseError(ValueError):
    """Raised by parse_program with the offending token and its position."""


def validate_ops(ops):
    """Return the op-id sequence as an int64 array, checking ids and length."""
    arr = np.asarray(ops, dtype=np.int64)
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError("a program needs at least one statement")
    if arr.min() < 1 or arr.max() > 41:
        raise ValueError("op ids must lie in 1..41")
    return arr


def arg_plan(ops):
    """Static argument sources for every statement of a program.

    Returns an (L, 4) int64 array of (kind, index) pairs per declared
    parameter: kind SRC_HIST with the producing statement index, SRC_INPUT
    for the program input, or SRC_ZERO for the integer default.  Parameters
    of one statement claim distinct history entries, scanning backwards in
    declaration order.
    """
    arr = validate_ops(ops)
    length = arr.size
    plan = np.full((length, 4), -1, dtype=np.int64)
    for s in range(length):
        desc = OPERATIONS[int(arr[s])]
        claimed = -1  # at most two params, so one claim to remember
        for a, want in enumerate(desc.arg_tags):
            kind = SRC_ZERO if want == TINT else SRC_INPUT
            idx = -1
            for h in range(s - 1, -1, -1):
                if h != claimed and OP_RET[arr[h]] == want:
                    kind, idx = SRC_HIST, h
                    break
            if kind == SRC_HIST:
                claimed = idx
            plan[s, 2 * a] = kind
            plan[s, 2 * a + 1] = idx
    return plan


def resolve_args(ops, position, history, program_input):
    """Concrete argument values for the statement at `position`.

    `history` holds the outputs of statements 0..position-1 in order.
    """
    arr = validate_ops(ops)
    if not 0 <= position < arr.size:
        raise ValueError("position out of range")
    if len(history) != position:
        raise ValueError("history must hold exactly the earlier outputs")
    plan = arg_plan(arr)
    desc = OPERATIONS[int(arr[position])]
    out = []
    for a, want in enumerate(desc.arg_tags):
        kind = plan[position, 2 * a]
        idx = plan[position, 2 * a + 1]
        if kind == SRC_HIST:
            out.append(history[idx])
        elif kind == SRC_INPUT:
            out.append(list(program_input))
        else:
            out.append(0)
    return out


def apply_op(op_id, args):
    """Apply one table operation to explicit argument values.

    Arity or type mismatches are caller bugs and raise TypeError; programs
    built through argument resolution can never trigger them.
    """
    desc = OPERATIONS.get(int(op_id))
    if desc is None:
        raise ValueError(f"unknown op id {op_id}")
    if len(args) != len(desc.arg_tags):
        raise TypeError(f"{desc.name} takes {len(desc.arg_tags)} arguments")
    int_arg = 0
    lists = []
    for value, want in zip(args, desc.arg_tags):
        if want == TINT:
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{desc.name} expects an integer argument")
            if not IMIN <= value <= IMAX:
                raise ValueError("integer argument outside the 64-bit range")
            int_arg = value
        else:
            if not isinstance(value, (list, tuple)):
                raise TypeError(f"{desc.name} expects a list argument")
            if any(not IMIN <= x <= IMAX for x in value):
                raise ValueError("list element outside the 64-bit range")
            lists.append(list(value))
    list2 = lists[1] if len(lists) == 2 else []
    from listsynth.kernels import numpy_backend
    return numpy_backend.exec_op(int(op_id), int_arg, lists[0], list2)


def _encode_inputs(inputs):
    """Pad variable-length input lists into a matrix plus a length vector."""
    n = len(inputs)
    max_in = max((len(x) for x in inputs), default=0)
    mat = np.zeros((n, max(max_in, 1)), dtype=np.int64)
    lens = np.zeros(n, dtype=np.int64)
    for i, x in enumerate(inputs):
        lens[i] = len(x)
        if len(x):
            mat[i, : len(x)] = x
    return mat, lens


def run_batch_raw(ops_mat, plans, input_mat, input_lens):
    """Run P programs on M pre-encoded inputs through the active backend.

    Returns (out_ints, out_lists, out_lens); out_lens[p, m] == -1 marks an
    integer output.
    """
    n_prog, length = ops_mat.shape
    n_in = input_mat.shape[0]
    cap = int(input_mat.shape[1] + length)
    out_ints = np.zeros((n_prog, n_in), dtype=np.int64)
    out_lists = np.zeros((n_prog, n_in, cap), dtype=np.int64)
    out_lens = np.zeros((n_prog, n_in), dtype=np.int64)
    kernels.run_batch(ops_mat, plans, input_mat, input_lens,
                      out_ints, out_lists, out_lens)
    return out_ints, out_lists, out_lens


def run_many(programs, inputs):
    """Run each program on each input; results as Python ints / lists."""
    ops_mat = np.stack([validate_ops(p) for p in programs])
    plans = np.stack([arg_plan(p) for p in programs])
    input_mat, input_lens = _encode_inputs(inputs)
    for row in inputs:
        if any(not IMIN <= x <= IMAX for x in row):
            raise ValueError("input element outside the 64-bit range")
    out_ints, out_lists, out_lens = run_batch_raw(
        ops_mat, plans, input_mat, input_lens)
    results = []
    for p in range(len(programs)):
        per_input = []
        for m in range(len(inputs)):
            n = out_lens[p, m]
            if n < 0:
                per_input.append(int(out_ints[p, m]))
            else:
                per_input.append([int(v) for v in out_lists[p, m, :n]])
        results.append(per_input)
    return results


def run_program(ops, program_input):
    """Execute one program on one input list; deterministic and total."""
    return run_many([ops], [list(program_input)])[0][0]


def output_type(ops):
    """TINT or TLIST, from the final statement's signature."""
    arr = validate_ops(ops)
    return int(OP_RET[arr[-1]])


def check_equivalence(candidate, examples):
    """True iff the candidate reproduces every (input, output) example.

    Comparison is exact structural equality: an integer never equals a list,
    not even a singleton one.
    """
    inputs = [list(inp) for inp, _ in examples]
    got = run_many([candidate], inputs)[0]
    for out, (_, want) in zip(got, examples):
        if out != want:
            return False
    return True


def format_program(ops):
    """Canonical text form, '|'-separated op names."""
    arr = validate_ops(ops)
    return "|".join(OPERATIONS[int(op)].name for op in arr)


def parse_program(text):
    """Inverse of format_program; unknown names fail with their position."""
    parts = text.strip().split("|")
    ops = []
    for pos, token in enumerate(parts):
        name = token.strip()
        op_id = NAME_TO_ID.get(name)
        if op_id is None:
            raise ProgramParseError(
                f"unknown operation {name!r} at position {pos}")
        ops.append(op_id)
    return np.asarray(ops, dtype=np.int64)
