"""SL(2,C) representations of the cable-exterior group and their adjoint actions.

The four families are tagged by whether the restriction to the torus-knot
piece (first letter) and to the pattern piece (second letter) has Abelian
image:

* AA: every generator diagonal, z = exp(xi/2) on the meridian p;
* AN: x = y abelian with eigenvalues omega2^{+-1}, omega2^(2b+1) = -1;
* NA: pattern side abelian, torus side irreducible, omega1^(2a+1) = -1;
* NN: both sides non-abelian, omega1^(2a+1) = -1 and
  omega3^(2b+1-4(2a+1)) = -1.

Roots of unity come straight from their index (omega = exp(i pi (2j+1)/den)),
never from root finding.  The NN matrices are built from their theta1-tilde
conjugated forms, which avoids the half-integer powers z^(1/2) that the other
conjugator would introduce.

Conventions for the twisted chain complex: sl(2,C) carries the basis {E,H,F};
the adjoint action is Ad(g)(v) = rho(g)^-1 v rho(g), written as a 3x3 matrix
acting from the left.  Because of the inverse in Ad, the letter-by-letter
evaluation of a word is an anti-homomorphism: a word u v maps to the matrix
product Ad(v) Ad(u) (so p t evaluates to T P).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from .presentations import (
    Presentation,
    abelianization_exponents,
    cable_exterior_presentation,
)
from .words import Generator, GroupRingElement, Word

E_MAT = np.array([[0, 1], [0, 0]], dtype=complex)
H_MAT = np.array([[1, 0], [0, -1]], dtype=complex)
F_MAT = np.array([[0, 0], [1, 0]], dtype=complex)

FAMILIES = ("AA", "AN", "NA", "NN")

RELATION_TOL = 1e-10
XI_REAL_GUARD = 1e-3          # theta2 contains z^2/(z^4-1); keep z^4 off 1
ABELIAN_GUARD = 1e-6          # |z^2 - 1| must exceed this in the AA family


class RepresentationError(ValueError):
    pass


def _mat(a, b, c, d) -> np.ndarray:
    return np.array([[a, b], [c, d]], dtype=complex)


# 2x2 helpers over a generic scalar domain (complex or mpmath.mpc): the family
# formulas are written once, in scalar arithmetic, so the float constructors
# and the extended-precision path cannot drift apart.


def _m2(a, b, c, d):
    return [[a, b], [c, d]]


def _mul2(x, y):
    return [
        [x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]],
        [x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]],
    ]


def _inv2(x):
    det = x[0][0] * x[1][1] - x[0][1] * x[1][0]
    return [[x[1][1] / det, -x[0][1] / det], [-x[1][0] / det, x[0][0] / det]]


def _pow2(x, n: int):
    if n < 0:
        return _pow2(_inv2(x), -n)
    out = _m2(1, 0, 0, 1)
    for _ in range(n):
        out = _mul2(out, x)
    return out


def _neg2(x):
    return [[-e for e in row] for row in x]


def _family_entries(family, z, a, b, omega1=None, omega2=None, omega3=None):
    """Generator matrices as nested lists of scalars, one formula per family."""
    if family == "AA":
        return {
            "p": _m2(z, 0, 0, 1 / z),
            "x": _m2(z ** 2, 0, 0, z ** -2),
            "y": _m2(z ** 2, 0, 0, z ** -2),
            "t": _m2(z ** (2 * b), 0, 0, z ** (-2 * b)),
        }
    if family == "AN":
        w = omega2
        p = _m2(z, 1, 0, 1 / z)
        q = _m2(z, 0, w + 1 / w - z ** 2 - z ** -2, 1 / z)
        x = _mul2(p, q)
        th = _m2(1, 0, z / w - 1 / z, 1)
        t_model = _m2(w ** b, (w ** b - w ** -b) / (w - 1 / w) / z, 0, w ** -b)
        t = _mul2(_mul2(_inv2(th), t_model), th)
        return {"p": p, "x": x, "y": [row[:] for row in x], "t": t}
    if family == "NA":
        w = omega1
        p = _m2(z, 1 / (z + 1 / z), 0, 1 / z)
        x = _m2(z ** 2, 1, 0, z ** -2)
        y = _m2(z ** 2, 0, w + 1 / w - z ** 4 - z ** -4, z ** -2)
        t = _neg2(_pow2(p, -8 * a + 2 * b - 4))
        return {"p": p, "x": x, "y": y, "t": t}
    if family == "NN":
        w1, w3 = omega1, omega3
        p = _m2(z, 1, 0, 1 / z)
        th = _m2(1, 0, z / w3 - 1 / z, 1)
        th_inv = _inv2(th)
        x = _mul2(_mul2(th_inv, _m2(w3, 1 / z, 0, 1 / w3)), th)
        y_model = _m2(w3, 0, (w1 + 1 / w1 - w3 ** 2 - w3 ** -2) * z, 1 / w3)
        y = _mul2(_mul2(th_inv, y_model), th)
        e = 4 * a - b + 1
        t_model = _m2(w3 ** e, (w3 ** e - w3 ** -e) / (w3 - 1 / w3) / z, 0, w3 ** -e)
        t = _mul2(_mul2(th_inv, t_model), th)
        return {"p": p, "x": x, "y": y, "t": t}
    raise RepresentationError(f"unknown family {family!r}")


def _invariant_entries(case, z, omega=None):
    if case == "H":
        return [0, 1, 0]
    if case in ("U", "Ut"):
        return [
            2,
            z * (omega + 1 / omega) - 2 / z,
            2 * (omega + 1 / omega - z ** 2 - z ** -2),
        ]
    if case in ("V", "Vt"):
        return [2, z - 1 / z, 0]
    return [2, z ** 2 - z ** -2, 0]  # W


def _adjoint_entries(m):
    """Generic-scalar version of adjoint_matrix on a 2x2 nested list."""
    inv = _inv2(m)
    cols = []
    for basis in (_m2(0, 1, 0, 0), _m2(1, 0, 0, -1), _m2(0, 0, 1, 0)):
        conj = _mul2(_mul2(inv, basis), m)
        cols.append((conj[0][1], conj[0][0], conj[1][0]))
    return [[cols[0][i], cols[1][i], cols[2][i]] for i in range(3)]


def _mat3_mul(x, y):
    return [
        [sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3)] for i in range(3)
    ]


def _mat3_vec(x, v):
    return [sum(x[i][k] * v[k] for k in range(3)) for i in range(3)]


def _inv3(m):
    """Adjugate-over-determinant inverse of a 3x3 nested list (generic scalars)."""
    c = [
        [
            m[(i + 1) % 3][(j + 1) % 3] * m[(i + 2) % 3][(j + 2) % 3]
            - m[(i + 1) % 3][(j + 2) % 3] * m[(i + 2) % 3][(j + 1) % 3]
            for j in range(3)
        ]
        for i in range(3)
    ]
    det = m[0][0] * c[0][0] + m[0][1] * c[0][1] + m[0][2] * c[0][2]
    return [[c[j][i] / det for j in range(3)] for i in range(3)]


def hp_assignment(rep: "Representation", dps: int = 40):
    """The representation's generator matrices rebuilt at ``dps`` digits.

    Returns nested lists of mpmath scalars, reconstructed from the defining
    data (xi, family, indices) with mpmath transcendentals, so downstream
    extended-precision evaluation does not inherit float64 rounding from the
    stored matrices.
    """
    import mpmath

    with mpmath.mp.workdps(dps):
        z = mpmath.exp(mpmath.mpc(rep.xi) / 2)
        roots = {}
        if rep.family == "AN":
            (j,) = rep.index
            roots["omega2"] = mpmath.expjpi(mpmath.mpf(2 * j + 1) / (2 * rep.b + 1))
        elif rep.family == "NA":
            (k,) = rep.index
            roots["omega1"] = mpmath.expjpi(mpmath.mpf(2 * k + 1) / (2 * rep.a + 1))
        elif rep.family == "NN":
            l, m = rep.index
            roots["omega1"] = mpmath.expjpi(mpmath.mpf(2 * m + 1) / (2 * rep.a + 1))
            span = 2 * rep.b + 1 - 4 * (2 * rep.a + 1)
            roots["omega3"] = mpmath.expjpi(mpmath.mpf(2 * l + 1) / span)
        return _family_entries(rep.family, z, rep.a, rep.b, **roots)


def hp_invariant_vector(case: str, rep: "Representation", dps: int = 40):
    """Extended-precision counterpart of invariant_vector (list of mpmath scalars)."""
    import mpmath

    with mpmath.mp.workdps(dps):
        z = mpmath.exp(mpmath.mpc(rep.xi) / 2)
        omega = None
        if case in ("U",):
            (j,) = rep.index
            omega = mpmath.expjpi(mpmath.mpf(2 * j + 1) / (2 * rep.b + 1))
        elif case in ("Ut",):
            l, _ = rep.index
            span = 2 * rep.b + 1 - 4 * (2 * rep.a + 1)
            omega = mpmath.expjpi(mpmath.mpf(2 * l + 1) / span)
        return _invariant_entries(case, z, omega)


def check_sl2(m: np.ndarray, tol: float = 1e-9) -> None:
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if abs(det - 1) > tol:
        raise RepresentationError(f"matrix determinant {det} is not 1 within {tol}")


def adjoint_matrix(m) -> np.ndarray:
    """3x3 matrix of v -> m^-1 v m on sl(2,C) in the basis {E, H, F}.

    A traceless [[h, e], [f, -h]] has coordinates (e, h, f), so the columns
    are read off the conjugates of E, H, F directly.
    """
    arr = np.asarray(m, dtype=complex)
    inv = np.linalg.inv(arr)
    cols = []
    for basis in (E_MAT, H_MAT, F_MAT):
        conj = inv @ basis @ arr
        cols.append((conj[0, 1], conj[0, 0], conj[1, 0]))
    return np.array(cols, dtype=complex).T


@dataclass
class Representation:
    """Generator-to-SL(2,C) assignment, with family bookkeeping.

    ``assignment`` is keyed by generator name.  Adjoint matrices and their
    inverses are cached at construction; instances are treated as immutable.
    """

    family: str
    assignment: Dict[str, np.ndarray]
    xi: complex = 0.0
    a: int = 0
    b: int = 0
    index: Tuple[int, ...] = ()
    z: complex = 1.0
    omega1: complex | None = None
    omega2: complex | None = None
    omega3: complex | None = None
    _adjoints: Dict[str, np.ndarray] = field(default_factory=dict, repr=False)
    _adjoint_invs: Dict[str, np.ndarray] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for name, m in self.assignment.items():
            check_sl2(m)
            adj = adjoint_matrix(m)
            self._adjoints[name] = adj
            self._adjoint_invs[name] = np.linalg.inv(adj)

    def _name(self, gen) -> str:
        return gen.name if isinstance(gen, Generator) else gen

    def matrix(self, gen) -> np.ndarray:
        return self.assignment[self._name(gen)]

    def adjoint(self, gen) -> np.ndarray:
        return self._adjoints[self._name(gen)]

    def assigns(self, gen) -> bool:
        return self._name(gen) in self.assignment


# -- evaluation ----------------------------------------------------------------


def sl2_word_value(rep: Representation, word: Word) -> np.ndarray:
    """Plain (covariant) evaluation of a word: letters multiply left to right."""
    out = np.eye(2, dtype=complex)
    for gen, sign in word.letters:
        m = rep.matrix(gen)
        out = out @ (m if sign == 1 else np.linalg.inv(m))
    return out


def evaluate_word(rep: Representation, word: Word) -> np.ndarray:
    """Adjoint evaluation of a word; anti-homomorphic, so u v goes to Ad(v) Ad(u)."""
    out = np.eye(3, dtype=complex)
    for gen, sign in word.letters:
        name = gen.name
        step = rep._adjoints[name] if sign == 1 else rep._adjoint_invs[name]
        out = step @ out
    return out


def evaluate_ring(rep: Representation, elem: GroupRingElement) -> np.ndarray:
    """Z-linear extension of evaluate_word to group-ring elements."""
    out = np.zeros((3, 3), dtype=complex)
    for word, coeff in elem.terms.items():
        out += coeff * evaluate_word(rep, word)
    return out


# -- relation verification ------------------------------------------------------


@dataclass(frozen=True)
class RelationReport:
    deviations: Tuple[float, ...]
    tol: float

    @property
    def max_deviation(self) -> float:
        return max(self.deviations, default=0.0)

    @property
    def ok(self) -> bool:
        return self.max_deviation <= self.tol


def verify_relations(pres: Presentation, rep: Representation, tol: float = RELATION_TOL) -> RelationReport:
    """Max-entry deviation of each relator's SL(2,C) value from the identity."""
    for g in pres.generators:
        if not rep.assigns(g):
            raise RepresentationError(f"representation does not assign generator {g.name!r}")
    devs = []
    for rel in pres.relators:
        value = sl2_word_value(rep, rel)
        devs.append(float(np.max(np.abs(value - np.eye(2)))))
    return RelationReport(tuple(devs), tol)


def ensure_relations(pres: Presentation, rep: Representation, tol: float = RELATION_TOL, context: str = "") -> None:
    """Raise unless every relator holds, rechecking in extended precision.

    The fast float64 screen can fall short of the 1e-10 gate on long relators
    at the edge of the xi range even when the relation holds exactly; when the
    representation carries family data, extended precision gets the last word.
    """
    report = verify_relations(pres, rep, tol)
    if not report.ok and _has_defining_data(rep):
        report = _verify_relations_hp(pres, rep, tol)
    if not report.ok:
        prefix = f"{context or pres.label} relators fail verification"
        raise RepresentationError(f"{prefix}: deviations {report.deviations}")


def _has_defining_data(rep: Representation) -> bool:
    """Whether the matrices can be rebuilt from (family, xi, a, b, index).

    Hand-built assignments (perturbed tests, partial maps) carry no such data
    and must stand or fall with the float64 check.
    """
    if rep.family not in FAMILIES or rep.a < 1 or rep.b < 1:
        return False
    expected = {"AA": 0, "AN": 1, "NA": 1, "NN": 2}[rep.family]
    return len(rep.index) == expected


def _verify_relations_hp(pres: Presentation, rep: Representation, tol: float, dps: int = 40) -> RelationReport:
    """Relator check with matrices rebuilt at ``dps`` digits.

    Long relators multiply entries of size z^(+-4b) and float64 cannot always
    certify the identity to 1e-10 at the edge of the xi range; the deviation
    at extended precision decides whether the relation genuinely holds.
    """
    import mpmath

    with mpmath.mp.workdps(dps):
        entries = hp_assignment(rep, dps)
        inverses = {name: _inv2(m) for name, m in entries.items()}
        devs = []
        for rel in pres.relators:
            value = _m2(1, 0, 0, 1)
            for gen, sign in rel.letters:
                step = entries[gen.name] if sign == 1 else inverses[gen.name]
                value = _mul2(value, step)
            dev = max(
                abs(value[i][j] - (1 if i == j else 0)) for i in range(2) for j in range(2)
            )
            devs.append(float(dev))
    return RelationReport(tuple(devs), tol)


# -- family constructors ---------------------------------------------------------


def theta1_matrix(z: complex, omega: complex) -> np.ndarray:
    """3x3 conjugator carrying the upper-triangular adjoint models of the x-action."""
    d = omega ** -1 * z - z ** -1
    return np.array(
        [[1, 0, 0], [d, 1, 0], [-d * d, -2 * d, 1]], dtype=complex
    )


def _to_numpy_assignment(entries) -> Dict[str, np.ndarray]:
    return {name: np.array(m, dtype=complex) for name, m in entries.items()}


def an_matrices(z: complex, omega2: complex, b: int) -> Dict[str, np.ndarray]:
    """Generator matrices of the AN family for explicit z, omega2 (tests may perturb)."""
    return _to_numpy_assignment(_family_entries("AN", z, 0, b, omega2=omega2))


def na_matrices(z: complex, omega1: complex, a: int, b: int) -> Dict[str, np.ndarray]:
    """Generator matrices of the NA family; t = -p^(2b-8a-4) on the abelian side."""
    return _to_numpy_assignment(_family_entries("NA", z, a, b, omega1=omega1))


def nn_matrices(z: complex, omega1: complex, omega3: complex, a: int, b: int) -> Dict[str, np.ndarray]:
    """Generator matrices of the NN family in their theta1-tilde conjugated form."""
    return _to_numpy_assignment(_family_entries("NN", z, a, b, omega1=omega1, omega3=omega3))


def index_range(family: str, a: int, b: int) -> list[tuple[int, ...]]:
    """Admissible representation indices: AN j, NA k, NN (l, m)."""
    if family == "AA":
        return [()]
    if family == "AN":
        return [(j,) for j in range(b)]
    if family == "NA":
        return [(k,) for k in range(a)]
    if family == "NN":
        return [(l, m) for l in range(b - 4 * a - 2) for m in range(a)]
    raise RepresentationError(f"unknown family {family!r}")


def _normalize_index(family: str, index) -> Tuple[int, ...]:
    if index is None:
        index = ()
    if isinstance(index, int):
        index = (index,)
    index = tuple(index)
    expected = {"AA": 0, "AN": 1, "NA": 1, "NN": 2}[family]
    if len(index) != expected:
        raise RepresentationError(
            f"family {family} takes {expected} index value(s), got {index}"
        )
    return index


def rep_build(family: str, xi: complex, a: int, b: int, index=None) -> Representation:
    """Build a verified representation of the cable-exterior group.

    The returned assignment covers the generators x, y, p, t of the cable
    presentation; every relator is checked to the identity within 1e-10
    before the representation is handed back.
    """
    if family not in FAMILIES:
        raise RepresentationError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if 2 * b + 1 <= 4 * (2 * a + 1):
        raise RepresentationError(
            f"parameters need 2b+1 > 4(2a+1): got 2b+1={2 * b + 1}, 4(2a+1)={4 * (2 * a + 1)}"
        )
    xi = complex(xi)
    if abs(xi.real) < XI_REAL_GUARD:
        raise RepresentationError(
            f"|Re xi| = {abs(xi.real):.2e} below the degeneracy guard {XI_REAL_GUARD}"
        )
    index = _normalize_index(family, index)
    if index not in index_range(family, a, b) and family != "AA":
        raise RepresentationError(
            f"index {index} outside the admissible range for {family} at (a,b)=({a},{b})"
        )
    z = cmath.exp(xi / 2)
    omega1 = omega2 = omega3 = None
    if family == "AA":
        if abs(z * z - 1) <= ABELIAN_GUARD:
            raise RepresentationError("z^2 too close to 1 for the abelian family")
        assignment = _to_numpy_assignment(_family_entries("AA", z, a, b))
    elif family == "AN":
        (j,) = index
        omega2 = cmath.exp(1j * cmath.pi * (2 * j + 1) / (2 * b + 1))
        assignment = an_matrices(z, omega2, b)
    elif family == "NA":
        (k,) = index
        omega1 = cmath.exp(1j * cmath.pi * (2 * k + 1) / (2 * a + 1))
        assignment = na_matrices(z, omega1, a, b)
    else:
        l, m = index
        omega1 = cmath.exp(1j * cmath.pi * (2 * m + 1) / (2 * a + 1))
        omega3 = cmath.exp(1j * cmath.pi * (2 * l + 1) / (2 * b + 1 - 4 * (2 * a + 1)))
        assignment = nn_matrices(z, omega1, omega3, a, b)
    rep = Representation(
        family=family, assignment=assignment, xi=xi, a=a, b=b, index=index,
        z=z, omega1=omega1, omega2=omega2, omega3=omega3,
    )
    pres, _ = cable_exterior_presentation(a, b)
    ensure_relations(pres, rep, context=family)
    return rep


def abelian_representation(xi: complex, pres: Presentation) -> Representation:
    """Diagonal representation g -> diag(z^e(g), z^-e(g)) along the abelianization.

    On a meridional (Wirtinger-style) presentation every generator gets
    diag(z, 1/z); on the cable presentation this reproduces the AA family.
    """
    xi = complex(xi)
    z = cmath.exp(xi / 2)
    if abs(z * z - 1) <= ABELIAN_GUARD:
        raise RepresentationError("z^2 too close to 1 for an abelian representation")
    exps = abelianization_exponents(pres)
    assignment = {g.name: _mat(z ** e, 0, 0, z ** -e) for g, e in exps.items()}
    return Representation(family="AA", assignment=assignment, xi=xi, z=z)


# -- distinguished invariant vectors ---------------------------------------------


def invariant_vector(case: str, rep: Representation) -> np.ndarray:
    """The canonically normalized sl(2,C) vector fixed by a peripheral subgroup.

    H is the AA case (fixed by everything diagonal); U and V belong to the AN
    family (gluing torus and outer torus); W to NA (both tori); Ut and Vt are
    U and V with omega2 replaced by omega3 (NN family).  The exact
    normalizations matter: the torsion scales with the homology basis, and the
    closed-form theorem values are tied to these vectors.
    """
    z = rep.z
    compatible = {
        "H": ("AA",), "U": ("AN",), "V": ("AN",),
        "W": ("NA",), "Ut": ("NN",), "Vt": ("NN",),
    }
    if case not in compatible:
        raise ValueError(f"unknown invariant-vector case {case!r}")
    if rep.family not in compatible[case]:
        raise ValueError(f"case {case!r} is incompatible with family {rep.family}")
    omega = rep.omega2 if case == "U" else rep.omega3
    return np.array(_invariant_entries(case, z, omega), dtype=complex)
