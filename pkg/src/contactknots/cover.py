"""Cyclic branched covers over closed braids.

Two kinds of output live here:

* overtwistedness certificates: when a transverse braid is shown, by a
  replayable move witness, to be a negative braid stabilization, every
  n-fold cyclic branched cover (n >= 2) over its closure is overtwisted,
  with n overtwisted disks lying off the lifted branch locus;
* topological labels for the covers: the Alexander polynomial from the
  reduced Burau matrix, and |H_1| of the n-fold cover from the product
  of |Delta| over the nontrivial n-th roots of unity.

Reduced Burau convention (rows and columns 1..n-1): sigma_i equals the
identity except in row i, which has ``t`` at column i-1, ``-t`` at column
i and ``1`` at column i+1 (entries outside the matrix dropped). A word
maps to the product of its generator matrices in word order. With this
choice det(I - B(beta)) = Delta(t) (1 + t + ... + t^(n-1)) up to a unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import replay
from .braid import (
    DEFAULT_BUDGET,
    BraidError,
    BraidWord,
    MoveWitness,
    SearchBudget,
    closure_components,
    find_destabilization,
    format_braid,
    parse_braid,
    parse_step,
)
from .laurent import LaurentPolynomial
from .transverse import TransverseBraid, self_linking

CERT_HEADER = "otw-cert v1"


class CoverError(ValueError):
    pass


# -- matrices over an arbitrary commutative ring -------------------------------

def _matmul(a, b):
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(m)), 0) for j in range(p)] for i in range(n)]


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def determinant(matrix, divide=lambda x, y: x // y):
    """Fraction-free (Bareiss) determinant over an integral domain.

    ``divide`` must perform exact division in the ring; the default suits
    Python integers.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0 * m[0][0]
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def _generator(size: int, i: int, t, t_inv, inverse: bool):
    g = _identity(size)
    r = i - 1
    if inverse:
        if r > 0:
            g[r][r - 1] = 1
        g[r][r] = -t_inv
        if r + 1 < size:
            g[r][r + 1] = t_inv
    else:
        if r > 0:
            g[r][r - 1] = t
        g[r][r] = -t
        if r + 1 < size:
            g[r][r + 1] = 1
    return g


def _inverse_of(t):
    if isinstance(t, LaurentPolynomial):
        return t ** -1
    if isinstance(t, int):
        return Fraction(1, t)
    return 1 / t


def burau_reduced(b: BraidWord, t=None):
    """Reduced Burau matrix of ``b`` as a list of rows.

    ``t`` may be an int, ``Fraction``, complex number, or a
    ``LaurentPolynomial`` (the default is the variable ``t`` itself).
    """
    if b.strands < 2:
        raise CoverError("the reduced Burau representation needs at least 2 strands")
    if t is None:
        t = LaurentPolynomial.t()
    size = b.strands - 1
    t_inv = _inverse_of(t)
    cache = {}
    out = _identity(size)
    for k in b.letters:
        if k not in cache:
            cache[k] = _generator(size, abs(k), t, t_inv, k < 0)
        out = _matmul(out, cache[k])
    return out


def _require_knot(b: BraidWord) -> None:
    c = closure_components(b)
    if c != 1:
        raise CoverError(f"closure has {c} components; a knot is required")


def alexander_polynomial(b: BraidWord) -> LaurentPolynomial:
    """Symmetric Alexander polynomial of the closure, normalized to Delta(1) = 1."""
    _require_knot(b)
    n = b.strands
    if n == 1:
        return LaurentPolynomial(1)
    t = LaurentPolynomial.t()
    burau = burau_reduced(b, t)
    size = n - 1
    a = [[(1 if i == j else 0) - burau[i][j] for j in range(size)] for i in range(size)]
    det = determinant(a, lambda x, y: LaurentPolynomial._lift(x).divide_exact(y))
    det = LaurentPolynomial._lift(det)
    delta = det.divide_exact(LaurentPolynomial.from_list([1] * n))
    delta = delta.normalized()
    if sum(delta.coeffs.values()) != 1:
        raise ArithmeticError(f"Alexander polynomial {delta} has Delta(1) != 1")
    return delta


def _resultant(f: list[int], g: list[int]) -> int:
    """Resultant of two integer polynomials given low-degree-first."""
    m, k = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** k
    if k == 0:
        return g[0] ** m
    size = m + k
    rows = []
    for i in range(k):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return determinant(rows)


def fox_product_exact(delta: LaurentPolynomial, n: int) -> int:
    """prod_{j=1}^{n-1} |Delta(zeta^j)| with zeta = exp(2 pi i / n), exactly.

    The product of f over the roots of the monic polynomial
    1 + t + ... + t^(n-1) is their resultant, an integer.
    """
    if n < 2:
        raise CoverError(f"cover degree must be at least 2, got {n}")
    return abs(_resultant(delta.to_list(), [1] * n))


def fox_product_numeric(delta: LaurentPolynomial, n: int, bits: int = 100,
                        residual: float = 1e-20) -> int:
    """Same product by high-precision evaluation, rounded and checked."""
    if n < 2:
        raise CoverError(f"cover degree must be at least 2, got {n}")
    with mpmath.workprec(bits):
        total = mpmath.mpf(1)
        for j in range(1, n):
            z = mpmath.expjpi(mpmath.mpf(2 * j) / n)
            total *= abs(sum(c * z ** e for e, c in delta.coeffs.items()))
        nearest = int(mpmath.nint(total))
        if abs(total - nearest) >= residual:
            raise ArithmeticError(
                f"product {mpmath.nstr(total, 30)} is not within {residual} of an integer")
    return nearest


def cyclic_cover_homology_order(b: BraidWord, n: int) -> int:
    """Order of H_1 of the n-fold cyclic branched cover; 0 means infinite."""
    _require_knot(b)
    if n < 2:
        raise CoverError(f"cover degree must be at least 2, got {n}")
    return fox_product_exact(alexander_polynomial(b), n)


# -- certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class OvertwistedCertificate:
    input: TransverseBraid
    witness: MoveWitness
    search_budget: SearchBudget
    destabilized: BraidWord

    @staticmethod
    def disk_count(n: int) -> int:
        if n < 2:
            raise CoverError("covers of degree n >= 2 only")
        return n

    @staticmethod
    def conclusion(n: int | str = "n") -> str:
        if isinstance(n, int) and n < 2:
            raise CoverError("covers of degree n >= 2 only")
        return (f"the {n}-fold cyclic branched cover of (S^3, xi_std) over the closure "
                f"is overtwisted; {n} embedded overtwisted disks lie in the complement "
                f"of the lifted branch locus")


def certify_overtwisted(k: TransverseBraid | BraidWord,
                        budget: SearchBudget = DEFAULT_BUDGET) -> OvertwistedCertificate | None:
    """Certificate for ``k`` if it is found to be a negative braid stabilization.

    ``None`` means the search ran out of budget; it is not a tightness claim.
    """
    if isinstance(k, BraidWord):
        k = TransverseBraid(k)
    witness = find_destabilization(k.braid, budget)
    if witness is None:
        return None
    strands, letters = replay.check_destabilization(
        k.braid.strands, k.braid.letters, witness.steps, witness.terminal)
    return OvertwistedCertificate(k, witness, budget, BraidWord(strands, letters))


def format_certificate(cert: OvertwistedCertificate) -> str:
    b = cert.input.braid
    lines = [
        CERT_HEADER,
        f"input: {format_braid(b)}",
        f"label: {cert.input.label or '-'}",
        f"components: {closure_components(b)}",
        f"self-linking: {self_linking(b)}",
        f"budget: {cert.search_budget.describe()}",
        f"steps: {len(cert.witness.steps)}",
    ]
    lines += [f"step: {s}" for s in cert.witness.steps]
    lines += [
        f"terminal: {cert.witness.terminal}",
        f"destabilized: {format_braid(cert.destabilized)}",
        "disks: n",
        f"conclusion: for every n >= 2, {cert.conclusion('n')}",
        "end",
    ]
    return "\n".join(lines) + "\n"


def _parse_budget(text: str) -> SearchBudget:
    fields = dict(part.split("=", 1) for part in text.split())
    return SearchBudget(
        max_depth=int(fields["depth"]),
        max_states=int(fields["states"]),
        braid_relations=fields.get("braid-relations", "off") == "on",
        extra_strands=int(fields.get("extra-strands", 3)),
    )


def parse_certificate(text: str) -> OvertwistedCertificate:
    lines = [ln.rstrip() for ln in text.strip().splitlines()]
    if not lines or lines[0] != CERT_HEADER:
        raise CoverError(f"missing '{CERT_HEADER}' header")
    if lines[-1] != "end":
        raise CoverError("certificate is not terminated by 'end'")
    fields: dict[str, str] = {}
    steps = []
    for ln in lines[1:-1]:
        key, sep, value = ln.partition(": ")
        if not sep:
            raise CoverError(f"malformed line {ln!r}")
        if key == "step":
            steps.append(parse_step(value))
        else:
            fields[key] = value
    try:
        braid = parse_braid(fields["input"])
        if int(fields["steps"]) != len(steps):
            raise CoverError("step count does not match the listed steps")
        label = None if fields["label"] == "-" else fields["label"]
        return OvertwistedCertificate(
            TransverseBraid(braid, label),
            MoveWitness(tuple(steps), int(fields["terminal"])),
            _parse_budget(fields["budget"]),
            parse_braid(fields["destabilized"]),
        )
    except KeyError as exc:
        raise CoverError(f"certificate lacks field {exc}") from None
    except BraidError as exc:
        raise CoverError(str(exc)) from None


def verify_certificate(cert: OvertwistedCertificate | str) -> bool:
    """Replay the witness independently of the search that produced it."""
    if isinstance(cert, str):
        cert = parse_certificate(cert)
    b = cert.input.braid
    try:
        strands, letters = replay.check_destabilization(
            b.strands, b.letters, cert.witness.steps, cert.witness.terminal)
    except replay.ReplayError:
        return False
    return (strands, letters) == (cert.destabilized.strands, cert.destabilized.letters)


def homology_orders(b: BraidWord, degrees) -> dict[int, int]:
    delta = alexander_polynomial(b)
    return {n: fox_product_exact(delta, n) for n in degrees}
