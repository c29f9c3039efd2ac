"""Canonical-form problem instances: min c'x s.t. Ax = 0, e'x = n, x >= 0."""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    NotOnSimplex,
    ProblemFormatError,
    RankDeficient,
)
from .projection import build_basis

TOL_FEAS = 1e-9

PASS = "PASS"
FAIL = "FAIL"
UNVERIFIED = "UNVERIFIED-HERE"


@dataclass(frozen=True, eq=False)
class KarmarkarProblem:
    """An LP in canonical form.

    ``A`` is ``m x n`` (``m`` may be zero) and ``c`` has length ``n``. Both
    are copied into read-only float arrays on construction. Only shapes
    are checked here; the modelling assumptions are checked by
    :func:`validate`.
    """

    A: np.ndarray
    c: np.ndarray
    comment: str = ""

    def __post_init__(self):
        c = np.array(self.c, dtype=float)
        if c.ndim != 1:
            raise DimensionMismatch(f"c must be a vector, got shape {c.shape}")
        A = np.array(self.A, dtype=float)
        if A.size == 0:
            A = A.reshape(0, c.shape[0])
        if A.ndim != 2:
            raise DimensionMismatch(f"A must be a matrix, got shape {A.shape}")
        if A.shape[1] != c.shape[0]:
            raise DimensionMismatch(
                f"A has {A.shape[1]} columns but c has {c.shape[0]} entries"
            )
        if c.shape[0] < 2:
            raise DimensionMismatch(f"need n >= 2 variables, got n={c.shape[0]}")
        A.setflags(write=False)
        c.setflags(write=False)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "c", c)

    @property
    def n(self):
        return self.c.shape[0]

    @property
    def m(self):
        return self.A.shape[0]

    @property
    def e(self):
        return np.ones(self.n)

    def stacked(self):
        """The ``(m+1) x n`` matrix ``[A; e^T]``."""
        return np.vstack([self.A, np.ones((1, self.n))])

    def c_dot_e(self):
        return float(self.c.sum())

    def objective(self, x):
        return float(self.c @ np.asarray(x, dtype=float))


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""

    @property
    def passed(self):
        return self.status != FAIL


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple = field(default_factory=tuple)

    @property
    def ok(self):
        """True iff every hard check passed (unverified checks do not count)."""
        return all(chk.passed for chk in self.checks)

    def __getitem__(self, name):
        for chk in self.checks:
            if chk.name == name:
                return chk
        raise KeyError(name)

    def format(self):
        width = max(len(chk.name) for chk in self.checks)
        lines = []
        for chk in self.checks:
            line = f"{chk.name:<{width}}  {chk.status}"
            if chk.detail:
                line += f"  ({chk.detail})"
            lines.append(line)
        return "\n".join(lines)


def validate(problem, tol_feas=TOL_FEAS):
    """Check the canonical-form assumptions of ``problem``.

    The report always contains the feasibility of the centre, the rank of
    ``[A; e^T]``, the sign of ``c'e`` and an UNVERIFIED-HERE entry for the
    zero-optimum assumption (see :mod:`karmarkar.oracle`).

    Raises
    ------
    DimensionMismatch
        If ``A`` and ``c`` disagree on ``n`` or the row count leaves no
        interior (``m + 1 >= n``).
    RankDeficient
        If ``[A; e^T]`` loses rank. The full report is attached as
        ``exc.report``.
    """
    A, c = problem.A, problem.c
    if A.ndim != 2 or A.shape[1] != c.shape[0]:
        raise DimensionMismatch(f"A has shape {A.shape} but c has {c.shape[0]} entries")
    n, m = problem.n, problem.m
    if m + 1 > n:
        raise DimensionMismatch(f"m + 1 = {m + 1} constraints exceed n = {n} variables")

    checks = []
    resid = float(np.max(np.abs(A @ np.ones(n)), initial=0.0))
    checks.append(Check(
        "centre feasible (Ae = 0)",
        PASS if resid <= tol_feas else FAIL,
        f"max |Ae| = {resid:.3g}, tol {tol_feas:.3g}",
    ))

    rank_exc = None
    try:
        build_basis(problem.stacked())
        checks.append(Check("rank [A; e'] = m + 1", PASS, f"m + 1 = {m + 1}"))
    except RankDeficient as exc:
        rank_exc = exc
        rows = ", ".join("e'" if i == m else f"A[{i}]" for i in exc.dependent_rows)
        checks.append(Check("rank [A; e'] = m + 1", FAIL, f"dependent rows: {rows}"))

    ce = problem.c_dot_e()
    checks.append(Check("c'e >= 0", PASS if ce >= -tol_feas else FAIL, f"c'e = {ce:.17g}"))
    checks.append(Check("optimal value is zero", UNVERIFIED, "certify with the vertex oracle"))

    report = ValidationReport(tuple(checks))
    if rank_exc is not None:
        raise RankDeficient(str(rank_exc), rank_exc.dependent_rows, report=report)
    return report


def rescale_unit_simplex(x, n=None, tol_feas=TOL_FEAS):
    """Map a point of ``{e'x = 1, x >= 0}`` to ``{e'x = n, x >= 0}``."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise DimensionMismatch(f"x must be a vector, got shape {x.shape}")
    if n is None:
        n = x.shape[0]
    if x.shape[0] != n:
        raise DimensionMismatch(f"x has {x.shape[0]} entries, expected n = {n}")
    if abs(x.sum() - 1.0) > tol_feas or np.any(x < -tol_feas):
        raise NotOnSimplex(f"x is not on the unit simplex (sum = {x.sum():.17g})")
    return n * x


# -- file format -------------------------------------------------------------

def _finite(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ProblemFormatError(f"{where}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise ProblemFormatError(f"{where}: non-finite value {value!r}")
    return float(value)


def _integer(data, key):
    if key not in data:
        raise ProblemFormatError(f"{key}: missing field")
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ProblemFormatError(f"{key}: expected an integer, got {value!r}")
    return value


def problem_from_dict(data):
    """Build a problem from the decoded JSON object, checking every field."""
    if not isinstance(data, dict):
        raise ProblemFormatError("top level: expected a JSON object")
    n = _integer(data, "n")
    m = _integer(data, "m")
    if n < 2:
        raise ProblemFormatError(f"n: must be >= 2, got {n}")
    if m < 0:
        raise ProblemFormatError(f"m: must be >= 0, got {m}")

    if "c" not in data:
        raise ProblemFormatError("c: missing field")
    c = data["c"]
    if not isinstance(c, list):
        raise ProblemFormatError("c: expected a list of numbers")
    if len(c) != n:
        raise ProblemFormatError(f"c: has {len(c)} entries, expected n = {n}")
    c = [_finite(v, f"c[{j}]") for j, v in enumerate(c)]

    if "A" not in data:
        raise ProblemFormatError("A: missing field")
    rows = data["A"]
    if not isinstance(rows, list):
        raise ProblemFormatError("A: expected a list of rows")
    if len(rows) != m:
        raise ProblemFormatError(f"A: has {len(rows)} rows, expected m = {m}")
    A = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ProblemFormatError(f"A[{i}]: expected a list of numbers")
        if len(row) != n:
            raise ProblemFormatError(f"A[{i}]: has {len(row)} entries, expected n = {n}")
        A.append([_finite(v, f"A[{i}][{j}]") for j, v in enumerate(row)])

    comment = data.get("comment", "")
    if not isinstance(comment, str):
        raise ProblemFormatError("comment: expected a string")
    return KarmarkarProblem(np.array(A, dtype=float).reshape(m, n), np.array(c), comment)


def problem_to_dict(problem):
    data = {
        "n": problem.n,
        "m": problem.m,
        "A": problem.A.tolist(),
        "c": problem.c.tolist(),
    }
    if problem.comment:
        data["comment"] = problem.comment
    return data


def loads(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return problem_from_dict(data)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(problem, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(problem_to_dict(problem), fh, indent=2)
        fh.write("\n")
