"""Amicability of binary words and Sturmian morphisms, and ternarization.

A ternary word projects to two binary words through ``sigma01`` (A->0,
B->01, C->1) and ``sigma10`` (A->0, B->10, C->1).  Two binary words are
amicable when they arise as the two projections of a common ternary word
that is a factor of a 3iet word; that ternary word -- their
ternarization -- is unique and is recovered here by a single synchronous
scan.  Lifting the construction letterwise to Sturmian morphisms yields
ternary morphisms that preserve the set of 3iet words.

Finite surrogate used throughout: a binary word is accepted as a factor
of some 3iet-projected word exactly when it is balanced; prefix-scale
Sturmian behaviour additionally demands factor complexity m+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import AlphabetError, DegenerateParametersError, NotAmicableError
from .iet import ThreeIET, is_nondegenerate_params, three_iet_code
from .morphisms import Morphism, is_sturmian_morphism
from .quadratic import QuadNumber
from .words import Alphabet, FiniteWord, factor_complexity, is_balanced

_SIGMA_TABLES = {
    "01": (b"\x00", b"\x00\x01", b"\x01"),
    "10": (b"\x00", b"\x01\x00", b"\x01"),
}


def sigma(word: FiniteWord, which: str) -> FiniteWord:
    """Project a ternary word to a binary one; ``which`` selects whether
    B maps to 01 or to 10."""
    if word.alphabet is not Alphabet.TERNARY:
        raise AlphabetError("sigma projections act on ternary words")
    try:
        table = _SIGMA_TABLES[which]
    except KeyError:
        raise ValueError(f"projection must be '01' or '10', got {which!r}") from None
    return FiniteWord(Alphabet.BINARY, b"".join(map(table.__getitem__, word.letters)))


@dataclass(frozen=True)
class AmicabilityWitness:
    """The ternarization of an amicable pair of words and its B-count."""

    v: FiniteWord
    b: int


def ternarize_words(word: FiniteWord, other: FiniteWord) -> AmicabilityWitness:
    """Recover the unique ternary word projecting to ``word`` / ``other``.

    The scan emits A where both words carry 0, C where both carry 1, and
    consumes a 01-against-10 block as a single B.  Any other mismatch,
    or an unbalanced input, means the words are not amicable and raises
    :class:`NotAmicableError`.
    """
    for w in (word, other):
        if w.alphabet is not Alphabet.BINARY:
            raise AlphabetError("amicability is defined for binary words")
    left, right = word.letters, other.letters
    if len(left) != len(right):
        raise NotAmicableError(
            f"words of different lengths {len(left)} and {len(right)}"
        )
    if not is_balanced(word):
        raise NotAmicableError(f"left word {word} is not balanced")
    if not is_balanced(other):
        raise NotAmicableError(f"right word {other} is not balanced")
    out = bytearray()
    i, n, b = 0, len(left), 0
    while i < n:
        x, y = left[i], right[i]
        if x == y:
            out.append(0 if x == 0 else 2)
            i += 1
            continue
        if x == 1:
            raise NotAmicableError(f"mismatch 1 against 0 at position {i}")
        if i + 1 == n:
            raise NotAmicableError(f"unpaired 01/10 block at final position {i}")
        if left[i + 1] != 1 or right[i + 1] != 0:
            raise NotAmicableError(f"broken 01/10 block at position {i}")
        out.append(1)
        b += 1
        i += 2
    return AmicabilityWitness(FiniteWord(Alphabet.TERNARY, bytes(out)), b)


def amicable_words_b(word: FiniteWord, other: FiniteWord) -> int | None:
    """B-count of the ternarization when the words are amicable, else None."""
    try:
        return ternarize_words(word, other).b
    except NotAmicableError:
        return None


_W01 = FiniteWord(Alphabet.BINARY, b"\x00\x01")
_W10 = FiniteWord(Alphabet.BINARY, b"\x01\x00")


def amicable_morphisms(
    phi: Morphism, psi: Morphism
) -> tuple[int, int, int] | None:
    """B-counts ``(b0, b1, b)`` of the three defining ternarizations when
    ``phi`` is amicable to ``psi``, else ``None``.

    Both arguments are assumed Sturmian; the relation requires
    ``phi(0) ~ psi(0)``, ``phi(01) ~ psi(10)`` and ``phi(1) ~ psi(1)``.
    """
    try:
        w0 = ternarize_words(phi.images[0], psi.images[0])
        w1 = ternarize_words(phi.images[1], psi.images[1])
        wb = ternarize_words(phi(_W01), psi(_W10))
    except NotAmicableError:
        return None
    return w0.b, w1.b, wb.b


def ternarize_morphisms(phi: Morphism, psi: Morphism) -> Morphism:
    """The ternary morphism with images ``ter(phi(0), psi(0))``,
    ``ter(phi(01), psi(10))`` and ``ter(phi(1), psi(1))``.

    Raises :class:`NotAmicableError` when any of the three scans fails.
    """
    image_a = ternarize_words(phi.images[0], psi.images[0]).v
    image_b = ternarize_words(phi(_W01), psi(_W10)).v
    image_c = ternarize_words(phi.images[1], psi.images[1]).v
    return Morphism(Alphabet.TERNARY, (image_a, image_b, image_c))


@dataclass(frozen=True)
class AmicablePair:
    """An ordered amicable pair with its ternarization and indices.

    ``k`` and ``kbar`` are the rotation indices of ``phi`` and ``psi``;
    ``b = b0 + b1 + det`` ties the three B-counts to the determinant of
    the shared incidence matrix.
    """

    phi: Morphism
    psi: Morphism
    eta: Morphism
    b0: int
    b1: int
    b: int
    k: int
    kbar: int


@dataclass(frozen=True)
class TernarizationMembership:
    """Outcome of testing whether a ternary morphism is a ternarization."""

    member: bool
    phi: Morphism | None
    psi: Morphism | None
    reason: str | None


def ternarization_membership(eta: Morphism) -> TernarizationMembership:
    """Decide membership of ``eta`` in the ternarization monoid.

    The two projection identities ``sigma01(eta(B)) == sigma01(eta(AC))``
    and ``sigma10(eta(B)) == sigma10(eta(CA))`` are checked first; the
    candidate pair read off the images of A and C must then be Sturmian
    and amicable.  The first failure is reported verbatim.
    """
    if eta.alphabet is not Alphabet.TERNARY:
        raise AlphabetError("ternarization membership is for ternary morphisms")
    if not eta.is_nonerasing:
        raise NotAmicableError("erasing morphism cannot be a ternarization")
    img_a, img_b, img_c = eta.images

    def fail(reason: str) -> TernarizationMembership:
        return TernarizationMembership(False, None, None, reason)

    b01, ac01 = sigma(img_b, "01"), sigma(img_a + img_c, "01")
    if b01 != ac01:
        return fail(f"sigma01(B)={b01} != {ac01}")
    b10, ca10 = sigma(img_b, "10"), sigma(img_c + img_a, "10")
    if b10 != ca10:
        return fail(f"sigma10(B)={b10} != {ca10}")
    phi = Morphism(Alphabet.BINARY, (sigma(img_a, "01"), sigma(img_c, "01")))
    psi = Morphism(Alphabet.BINARY, (sigma(img_a, "10"), sigma(img_c, "10")))
    if not is_sturmian_morphism(phi):
        return fail(f"recovered first morphism {phi} is not Sturmian")
    if not is_sturmian_morphism(psi):
        return fail(f"recovered second morphism {psi} is not Sturmian")
    if amicable_morphisms(phi, psi) is None:
        return fail(f"recovered pair {phi} / {psi} is not amicable")
    return TernarizationMembership(True, phi, psi, None)


def is_ternarization(eta: Morphism) -> tuple[Morphism, Morphism] | None:
    """The recovered amicable pair when ``eta`` is a ternarization."""
    outcome = ternarization_membership(eta)
    if not outcome.member:
        return None
    return outcome.phi, outcome.psi


@dataclass(frozen=True)
class PreservationResult:
    ok: bool
    detail: str | None


@lru_cache(maxsize=None)
def _sturmian_prefix_violation(word: FiniteWord, kmax: int) -> str | None:
    """First reason ``word`` fails the finite Sturmian test, if any:
    balance plus factor complexity m+1 for 1 <= m <= kmax."""
    if not is_balanced(word):
        return "projection is not balanced"
    for m in range(1, kmax + 1):
        c = factor_complexity(word, m)
        if c != m + 1:
            return f"complexity {c} at factor length {m}, expected {m + 1}"
    return None


@lru_cache(maxsize=1024)
def check_3iet_preservation(
    eta: Morphism,
    transform: ThreeIET,
    x0: QuadNumber,
    n: int = 1000,
    kmax: int = 20,
) -> PreservationResult:
    """Empirical prefix-scale test that ``eta`` maps a 3iet word to a
    3iet word.

    Codes the length-``n`` orbit prefix, applies ``eta``, and requires
    both binary projections of the image to be balanced with factor
    complexity m+1 up to ``kmax``.  Degenerate parameters are rejected
    outright.
    """
    if not is_nondegenerate_params(transform):
        raise DegenerateParametersError(
            "parameters are degenerate: (1-alpha)/(1+beta) is rational"
        )
    prefix = three_iet_code(transform, x0, n)
    image = eta(prefix)
    for which in ("01", "10"):
        violation = _sturmian_prefix_violation(sigma(image, which), kmax)
        if violation is not None:
            return PreservationResult(False, f"sigma{which}: {violation}")
    return PreservationResult(True, None)
