"""Exact scalar, polynomial and matrix types shared by the rest of the package.

Entries of real families are kept as plain Python ``int``; a
:class:`GaussInt` only appears when an imaginary part is present.  Both
compare and hash identically when the imaginary part is zero, so code that
only needs ``+ - * //`` works over either.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

__all__ = [
    "GaussInt",
    "Scalar",
    "I",
    "Population",
    "POPULATIONS",
    "SubdiagAngle",
    "UHMatrix",
    "UHTMatrix",
    "Poly",
    "FamilySpec",
    "Height",
    "PolyHeight",
    "matrix_height",
    "poly_height",
    "parse_scalar",
    "scalar_to_json",
    "scalar_from_json",
    "normalize",
    "sqmag",
    "conj",
    "exact_div",
    "to_dense",
    "matrix_to_json",
    "matrix_from_json",
    "poly_to_json",
    "poly_from_json",
]

# JSON numbers beyond this magnitude are written as decimal strings.
JSON_SAFE_INT = 2**53


class GaussInt:
    """Gaussian integer ``re + im*i`` with unbounded integer parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        object.__setattr__(self, "re", int(re))
        object.__setattr__(self, "im", int(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussInt is immutable")

    def __reduce__(self):
        return (GaussInt, (self.re, self.im))

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussInt):
            return other
        if isinstance(other, int):
            return GaussInt(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussInt(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussInt(self.re * other, self.im * other)
        if isinstance(other, GaussInt):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussInt(a * c - b * d, a * d + b * c)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result, base = GaussInt(1, 0), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        """Squared magnitude ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def __divmod__(self, other):
        # Euclidean division rounding the exact quotient to the nearest lattice point.
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("GaussInt division by zero")
        num = self * o.conjugate()
        q = GaussInt(_round_div(num.re, n), _round_div(num.im, n))
        return q, self - q * o

    def __rdivmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return divmod(o, self)

    def __floordiv__(self, other):
        r = divmod(self, other)
        return r if r is NotImplemented else r[0]

    def __rfloordiv__(self, other):
        r = self.__rdivmod__(other)
        return r if r is NotImplemented else r[0]

    def __mod__(self, other):
        r = divmod(self, other)
        return r if r is NotImplemented else r[1]

    def __eq__(self, other):
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re or self.im)

    def __complex__(self):
        return complex(self.re, self.im)

    def __repr__(self):
        return f"GaussInt({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return _imag_str(self.im, leading=True)
        return f"{self.re}{_imag_str(self.im, leading=False)}"


def _round_div(a: int, b: int) -> int:
    """Nearest integer to a/b for b > 0 (ties toward +inf)."""
    return (2 * a + b) // (2 * b)


def _imag_str(im: int, leading: bool) -> str:
    sign = "-" if im < 0 else ("" if leading else "+")
    mag = abs(im)
    return f"{sign}{'' if mag == 1 else mag}i"


Scalar = Union[int, GaussInt]
I = GaussInt(0, 1)


def normalize(x: Scalar) -> Scalar:
    """Collapse a GaussInt with zero imaginary part to ``int``."""
    if isinstance(x, GaussInt) and x.im == 0:
        return x.re
    return x


def sqmag(x: Scalar) -> int:
    if isinstance(x, GaussInt):
        return x.norm()
    return x * x


def conj(x: Scalar) -> Scalar:
    return x.conjugate() if isinstance(x, GaussInt) else x


def exact_div(a: Scalar, b: Scalar) -> Scalar:
    """Quotient a/b, raising ArithmeticError unless the division is exact."""
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


_SCALAR_RE = re.compile(
    r"""^\s*
    (?:(?P<re>[+-]?\d+)(?=\s*$|\s*[+-]))?   # optional real part
    \s*
    (?:(?P<im>[+-]?\s*\d*)\s*[ij])?          # optional imaginary part
    \s*$""",
    re.VERBOSE,
)


def parse_scalar(text: Union[str, int]) -> Scalar:
    """Parse ``"3"``, ``"-i"``, ``"2-5i"`` or an int into an exact scalar."""
    if isinstance(text, bool):
        raise ValueError(f"not a Gaussian integer: {text!r}")
    if isinstance(text, int):
        return text
    if isinstance(text, GaussInt):
        return normalize(text)
    if not isinstance(text, str):
        raise ValueError(f"not a Gaussian integer: {text!r}")
    m = _SCALAR_RE.match(text)
    if not m or (m.group("re") is None and m.group("im") is None):
        raise ValueError(f"not a Gaussian integer: {text!r}")
    re_part = int(m.group("re")) if m.group("re") is not None else 0
    im_txt = m.group("im")
    if im_txt is None:
        return re_part
    im_txt = im_txt.replace(" ", "")
    if im_txt in ("", "+"):
        im_part = 1
    elif im_txt == "-":
        im_part = -1
    else:
        im_part = int(im_txt)
    return normalize(GaussInt(re_part, im_part))


def scalar_to_json(x: Scalar):
    x = normalize(x)
    if isinstance(x, GaussInt):
        return str(x)
    return x if abs(x) <= JSON_SAFE_INT else str(x)


def scalar_from_json(v) -> Scalar:
    return parse_scalar(v)


# ---------------------------------------------------------------------------
# populations and subdiagonal units
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Population:
    elements: tuple
    name: str = ""

    def __post_init__(self):
        elems = tuple(normalize(parse_scalar(e)) for e in self.elements)
        if len(set(elems)) != len(elems):
            raise ValueError(f"population elements must be distinct: {elems}")
        if not elems:
            raise ValueError("population must be nonempty")
        object.__setattr__(self, "elements", elems)
        if not self.name:
            object.__setattr__(self, "name", "{" + ",".join(map(str, elems)) + "}")

    @classmethod
    def parse(cls, text: str) -> "Population":
        """Parse a comma-separated list such as ``"-1,0,1"`` or ``"0,i,-i"``."""
        parts = [p for p in text.split(",") if p.strip()]
        return cls(tuple(parse_scalar(p) for p in parts))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements

    @property
    def is_real(self) -> bool:
        return all(isinstance(e, int) for e in self.elements)

    @property
    def max_sqmag(self) -> int:
        return max(sqmag(e) for e in self.elements)


POPULATIONS = {
    "pm1": Population((-1, 0, 1), "{-1,0,1}"),
    "01": Population((0, 1), "{0,1}"),
    "pm1_nozero": Population((-1, 1), "{-1,1}"),
    "0pmi": Population((0, I, -I), "{0,i,-i}"),
    "units0": Population((0, 1, I, -1, -I), "{0,1,i,-1,-i}"),
}

_UNIT_VALUES = (1, I, -1, -I)


@dataclass(frozen=True, order=True)
class SubdiagAngle:
    """A fourth root of unity ``i**quarter_turns`` used on the subdiagonal."""

    quarter_turns: int = 0

    def __post_init__(self):
        if self.quarter_turns not in (0, 1, 2, 3):
            raise ValueError(f"quarter_turns must be in 0..3, got {self.quarter_turns}")

    @property
    def value(self) -> Scalar:
        return _UNIT_VALUES[self.quarter_turns]

    @classmethod
    def from_value(cls, v: Scalar) -> "SubdiagAngle":
        v = normalize(v)
        for q, u in enumerate(_UNIT_VALUES):
            if v == u:
                return cls(q)
        raise ValueError(f"{v} is not a fourth root of unity")

    def __mul__(self, other: "SubdiagAngle") -> "SubdiagAngle":
        return SubdiagAngle((self.quarter_turns + other.quarter_turns) % 4)

    def negated(self) -> "SubdiagAngle":
        return SubdiagAngle((self.quarter_turns + 2) % 4)

    def inverse(self) -> "SubdiagAngle":
        return SubdiagAngle((-self.quarter_turns) % 4)


def _as_angle(a) -> SubdiagAngle:
    return a if isinstance(a, SubdiagAngle) else SubdiagAngle(int(a))


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


def _upper_index(n: int, i: int, j: int) -> int:
    # row-major offset of (i, j), 0-based, i <= j
    return i * n - i * (i - 1) // 2 + (j - i)


@dataclass(frozen=True)
class UHMatrix:
    """Upper Hessenberg matrix with unit subdiagonal.

    ``upper`` holds h[i][j] for i <= j in row-major order (0-based indices
    here, the row length shrinks by one each row); ``subdiag[k]`` is the
    entry at (k+1, k).
    """

    n: int
    upper: tuple
    subdiag: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        upper = tuple(normalize(parse_scalar(x)) for x in self.upper)
        if len(upper) != self.n * (self.n + 1) // 2:
            raise ValueError(
                f"upper must have n(n+1)/2 = {self.n * (self.n + 1) // 2} entries, got {len(upper)}"
            )
        sub = self.subdiag
        if sub == () and self.n > 1:
            sub = (SubdiagAngle(0),) * (self.n - 1)
        sub = tuple(_as_angle(a) for a in sub)
        if len(sub) != self.n - 1:
            raise ValueError(f"subdiag must have n-1 = {self.n - 1} angles, got {len(sub)}")
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "subdiag", sub)

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        if i <= j:
            return self.upper[_upper_index(self.n, i, j)]
        if i == j + 1:
            return self.subdiag[j].value
        return 0

    def subdiag_value(self, k: int) -> Scalar:
        return self.subdiag[k].value

    def dense(self) -> list:
        n = self.n
        return [[self[i, j] for j in range(n)] for i in range(n)]

    def __neg__(self) -> "UHMatrix":
        return UHMatrix(self.n, tuple(-x for x in self.upper), tuple(a.negated() for a in self.subdiag))

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Scalar]]) -> "UHMatrix":
        n = len(rows)
        rows = [[normalize(parse_scalar(x)) for x in r] for r in rows]
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i - 1):
                if rows[i][j]:
                    raise ValueError(f"entry ({i},{j}) below the subdiagonal is nonzero")
        upper = tuple(rows[i][j] for i in range(n) for j in range(i, n))
        sub = tuple(SubdiagAngle.from_value(rows[k + 1][k]) for k in range(n - 1))
        return cls(n, upper, sub)

    @classmethod
    def zero(cls, n: int, angle: int = 0) -> "UHMatrix":
        return cls(n, (0,) * (n * (n + 1) // 2), (SubdiagAngle(angle),) * (n - 1))


@dataclass(frozen=True)
class UHTMatrix:
    """Upper Hessenberg Toeplitz matrix given by its first row ``t``."""

    n: int
    t: tuple
    subdiag_angle: SubdiagAngle = SubdiagAngle(0)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        t = tuple(normalize(parse_scalar(x)) for x in self.t)
        if len(t) != self.n:
            raise ValueError(f"t must have n = {self.n} entries, got {len(t)}")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "subdiag_angle", _as_angle(self.subdiag_angle))

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        if i <= j:
            return self.t[j - i]
        if i == j + 1:
            return self.subdiag_angle.value
        return 0

    def expand(self) -> UHMatrix:
        n = self.n
        upper = tuple(self.t[j - i] for i in range(n) for j in range(i, n))
        return UHMatrix(n, upper, (self.subdiag_angle,) * (n - 1))

    def dense(self) -> list:
        n = self.n
        return [[self[i, j] for j in range(n)] for i in range(n)]

    def __neg__(self) -> "UHTMatrix":
        return UHTMatrix(self.n, tuple(-x for x in self.t), self.subdiag_angle.negated())


def to_dense(m) -> list:
    """Dense list-of-rows view of a UHMatrix, UHTMatrix or nested sequence."""
    if isinstance(m, (UHMatrix, UHTMatrix)):
        return m.dense()
    rows = [list(r) for r in m]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return rows


# ---------------------------------------------------------------------------
# polynomials and heights
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    """Polynomial with exact coefficients, ``coeffs[j]`` multiplying ``z**j``.

    No trailing-zero trimming is applied: a monic degree-n polynomial always
    stores n+1 coefficients.
    """

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(normalize(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.coeffs)

    def __str__(self):
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            mono = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                cs = f"({c})" if isinstance(c, GaussInt) else str(c)
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ") or "0"


class Height(NamedTuple):
    """Height reported exactly via its square.

    ``value`` is an int when ``sq`` is a perfect square (``is_integer``)
    and a float approximation otherwise.
    """

    sq: int
    value: Union[int, float]
    is_integer: bool


class PolyHeight(NamedTuple):
    sq: int
    value: Union[int, float]
    is_integer: bool
    indices: tuple


def _height_from_sq(sq: int) -> Height:
    r = math.isqrt(sq)
    if r * r == sq:
        return Height(sq, r, True)
    return Height(sq, math.sqrt(sq), False)


def matrix_height(m) -> Height:
    """Largest entry magnitude (subdiagonal units included)."""
    sq = max(sqmag(x) for row in to_dense(m) for x in row)
    return _height_from_sq(sq)


def poly_height(p) -> PolyHeight:
    """Largest coefficient magnitude and every index attaining it."""
    coeffs = p.coeffs if isinstance(p, Poly) else tuple(p)
    if not coeffs:
        raise ValueError("polynomial has no coefficients")
    sqs = [sqmag(c) for c in coeffs]
    top = max(sqs)
    h = _height_from_sq(top)
    return PolyHeight(h.sq, h.value, h.is_integer, tuple(j for j, s in enumerate(sqs) if s == top))


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

SHAPES = ("full", "upper_hessenberg", "uh_toeplitz")
_SHAPE_ALIASES = {
    "full": "full",
    "uh": "upper_hessenberg",
    "upper_hessenberg": "upper_hessenberg",
    "uht": "uh_toeplitz",
    "uh_toeplitz": "uh_toeplitz",
}


@dataclass(frozen=True)
class FamilySpec:
    """A Bohemian family: shape, dimension, entry population, subdiagonal.

    Matrices are indexed by a mixed-radix integer whose digit ``p`` (least
    significant first) selects the population element at ``positions()[p]``.
    Position order is row-major over the free entries: all n*n entries for
    ``full``, the upper triangle for ``upper_hessenberg``, and t_1..t_n for
    ``uh_toeplitz``; diagonal positions are skipped when ``zero_diagonal``.
    """

    shape: str
    n: int
    population: Population
    subdiag: object = SubdiagAngle(0)
    zero_diagonal: bool = False

    def __post_init__(self):
        shape = _SHAPE_ALIASES.get(self.shape)
        if shape is None:
            raise ValueError(f"unknown shape {self.shape!r}; expected one of {SHAPES}")
        object.__setattr__(self, "shape", shape)
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        if self.zero_diagonal and 0 not in self.population:
            raise ValueError("zero_diagonal requires 0 in the population")
        sub = self.subdiag
        if isinstance(sub, (list, tuple)):
            sub = tuple(_as_angle(a) for a in sub)
            if len(sub) != self.n - 1:
                raise ValueError(f"per-position subdiag needs {self.n - 1} angles")
            if shape == "uh_toeplitz" and len(set(sub)) > 1:
                raise ValueError("Toeplitz families need a single subdiagonal angle")
        else:
            sub = _as_angle(sub)
        object.__setattr__(self, "subdiag", sub)

    @property
    def subdiag_angles(self) -> tuple:
        if isinstance(self.subdiag, tuple):
            return self.subdiag
        return (self.subdiag,) * (self.n - 1)

    def positions(self) -> list:
        n = self.n
        if self.shape == "full":
            pos = [(i, j) for i in range(n) for j in range(n)]
        elif self.shape == "upper_hessenberg":
            pos = [(i, j) for i in range(n) for j in range(i, n)]
        else:
            pos = [(0, k) for k in range(n)]
        if self.zero_diagonal:
            pos = [(i, j) for i, j in pos if i != j]
        return pos

    @property
    def free_count(self) -> int:
        n = self.n
        e = {"full": n * n, "upper_hessenberg": n * (n + 1) // 2, "uh_toeplitz": n}[self.shape]
        if self.zero_diagonal:
            e -= 1 if self.shape == "uh_toeplitz" else n
        return e

    @property
    def cardinality(self) -> int:
        return len(self.population) ** self.free_count

    def digits(self, index: int) -> list:
        if not 0 <= index < self.cardinality:
            raise IndexError(f"index {index} outside family of size {self.cardinality}")
        r = len(self.population)
        out = []
        for _ in range(self.free_count):
            index, d = divmod(index, r)
            out.append(d)
        return out

    def matrix_from_digits(self, digits: Sequence[int]):
        """Build the matrix whose free entries are ``population[digits[p]]``."""
        pop = self.population.elements
        n = self.n
        if self.shape == "full":
            rows = [[0] * n for _ in range(n)]
            for (i, j), d in zip(self.positions(), digits):
                rows[i][j] = pop[d]
            return rows
        if self.shape == "upper_hessenberg":
            upper = [0] * (n * (n + 1) // 2)
            for (i, j), d in zip(self.positions(), digits):
                upper[_upper_index(n, i, j)] = pop[d]
            return UHMatrix(n, tuple(upper), self.subdiag_angles)
        t = [0] * n
        for (_, k), d in zip(self.positions(), digits):
            t[k] = pop[d]
        angle = self.subdiag if isinstance(self.subdiag, SubdiagAngle) else (
            self.subdiag[0] if self.subdiag else SubdiagAngle(0))
        return UHTMatrix(n, tuple(t), angle)

    def matrix_at(self, index: int):
        return self.matrix_from_digits(self.digits(index))

    def __iter__(self):
        for idx in range(self.cardinality):
            yield self.matrix_at(idx)

    def describe(self) -> dict:
        sub = self.subdiag
        return {
            "shape": self.shape,
            "n": self.n,
            "population": [scalar_to_json(e) for e in self.population],
            "subdiag": [a.quarter_turns for a in sub] if isinstance(sub, tuple) else sub.quarter_turns,
            "zero_diagonal": self.zero_diagonal,
        }


# ---------------------------------------------------------------------------
# JSON codecs
# ---------------------------------------------------------------------------


def matrix_to_json(m) -> dict:
    if isinstance(m, UHMatrix):
        return {"n": m.n, "shape": "uh", "upper": [scalar_to_json(x) for x in m.upper],
                "subdiag": [a.quarter_turns for a in m.subdiag]}
    if isinstance(m, UHTMatrix):
        return {"n": m.n, "shape": "uht", "t": [scalar_to_json(x) for x in m.t],
                "subdiag": [m.subdiag_angle.quarter_turns] * (m.n - 1)}
    rows = to_dense(m)
    return {"n": len(rows), "shape": "full",
            "entries": [scalar_to_json(x) for r in rows for x in r]}


def matrix_from_json(obj: dict):
    """Decode a matrix object; raises ValueError on any malformed field."""
    if not isinstance(obj, dict):
        raise ValueError("matrix JSON must be an object")
    try:
        n = obj["n"]
        shape = obj.get("shape", "uh")
    except KeyError as exc:
        raise ValueError(f"missing field {exc}") from None
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("n must be a positive integer")
    sub = obj.get("subdiag", [])
    if isinstance(sub, int):
        sub = [sub] * (n - 1)
    if not isinstance(sub, list) or any(not isinstance(a, int) for a in sub):
        raise ValueError("subdiag must be a list of quarter-turn integers")
    if shape == "uh":
        return UHMatrix(n, tuple(scalar_from_json(x) for x in obj["upper"]), tuple(sub))
    if shape == "uht":
        if len(set(sub)) > 1:
            raise ValueError("Toeplitz subdiag must be uniform")
        if sub and len(sub) != n - 1 and len(sub) != 1:
            raise ValueError("subdiag length mismatch")
        angle = sub[0] if sub else 0
        return UHTMatrix(n, tuple(scalar_from_json(x) for x in obj["t"]), SubdiagAngle(angle))
    if shape == "full":
        flat = [scalar_from_json(x) for x in obj["entries"]]
        if len(flat) != n * n:
            raise ValueError(f"full matrix needs {n * n} entries")
        return [flat[i * n:(i + 1) * n] for i in range(n)]
    raise ValueError(f"unknown shape {shape!r}")


def poly_to_json(p: Poly) -> dict:
    return {"coeffs": [scalar_to_json(c) for c in p.coeffs]}


def poly_from_json(obj: dict) -> Poly:
    return Poly(tuple(scalar_from_json(c) for c in obj["coeffs"]))


def units() -> Iterable[Scalar]:
    return _UNIT_VALUES
