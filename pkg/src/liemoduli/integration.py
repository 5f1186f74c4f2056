"""Integrate algebraic subalgebras to parametrized matrix groups.

A group is the image of a product of factors, in this fixed order:
unipotent one-parameter factors exp(a N), then one-parameter tori
Q diag(t^w) Q^-1, then at most one semisimple factor. Membership is decided
by recovering parameters exactly and re-evaluating.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Sequence

from .algebraicity import WeightVector, algebraic_hull, rational_eigenbasis
from .errors import InputError, NotIntegrableError, PreconditionError, UnsupportedError
from .grassmann import SubspacePoint, canonicalize
from .lie_core.algebra import LieAlgebra
from .lie_core.jordan import jordan_decompose
from .lie_core.structure import (
    find_sl2_triple,
    levi_semisimple_class,
    nilpotent_ideal,
    solvable_radical,
    unipotent_radical_via_killing,
)
from .lie_core.subalgebra import Subalgebra, centralizer, radical_series
from .linalg import (
    ONE,
    ZERO,
    Matrix,
    Q,
    coordinates_in,
    diag,
    elementary,
    identity,
    integer_right_inverse,
    inverse,
    is_nilpotent,
    is_upper_triangular,
    mat,
    matmul,
    matvec,
    nilpotent_exp,
    nullspace,
    rref,
    saturated_basis,
    solve,
    span_basis,
    transpose,
    unipotent_log,
)


def exp_nilpotent(n, t=ONE) -> Matrix:
    """exp(t n) = I + t n + (t n)^2/2! + ..., exact for nilpotent n."""
    n = mat(n)
    if not is_nilpotent(n):
        raise PreconditionError("exp_nilpotent needs a nilpotent matrix")
    return nilpotent_exp(n, t)


def one_param_torus(w, t) -> Matrix:
    """diag(t^w_1, ..., t^w_m) for an integral weight vector w and t != 0."""
    t = Q(t)
    if t == 0:
        raise InputError("torus parameter must be nonzero")
    ws = w.weights if isinstance(w, WeightVector) else tuple(w)
    if any(Q(x).denominator != 1 for x in ws):
        raise InputError("torus weights must be integers")
    return diag([t ** int(x) for x in ws])


def _conj(p: Matrix, pinv: Matrix, a: Matrix) -> Matrix:
    if p == pinv and p == identity(len(p)):
        return a
    return matmul(matmul(p, a), pinv)


def _recover_torus(weights: Sequence[Sequence[int]], d: Sequence[Fraction]):
    """Parameters t with prod_i t_i^{w_i} = d entrywise, or None."""
    if not weights:
        return () if all(x == 1 for x in d) else None
    if any(x == 0 for x in d):
        return None
    c = integer_right_inverse([list(w) for w in weights])
    if c is None:
        return None
    ts = []
    for i in range(len(weights)):
        t = ONE
        for j, x in enumerate(d):
            e = int(c[j][i])
            if e:
                t *= x ** e
        ts.append(t)
    check = [ONE] * len(d)
    for t, w in zip(ts, weights):
        for j, e in enumerate(w):
            check[j] *= t ** e
    return tuple(ts) if tuple(check) == tuple(d) else None


def _udl(a: Matrix):
    """a = U D L with U unit upper, D diagonal, L unit lower; None on a zero pivot."""
    m = len(a)
    rev = [[a[m - 1 - i][m - 1 - j] for j in range(m)] for i in range(m)]
    low = [[ZERO] * m for _ in range(m)]
    up = [[ZERO] * m for _ in range(m)]
    d = [ZERO] * m
    work = [row[:] for row in rev]
    for k in range(m):
        piv = work[k][k]
        if piv == 0:
            return None
        d[k] = piv
        low[k][k] = ONE
        up[k][k] = ONE
        for i in range(k + 1, m):
            low[i][k] = work[i][k] / piv
        for j in range(k + 1, m):
            up[k][j] = work[k][j] / piv
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                work[i][j] -= low[i][k] * piv * up[k][j]
    # reversing the order turns (lower, upper) of the flipped matrix into (upper, lower)
    flip = lambda x: tuple(tuple(x[m - 1 - i][m - 1 - j] for j in range(m)) for i in range(m))
    return flip(low), tuple(reversed(d)), flip(up)


def _multiple_of(x: Matrix, g: Matrix):
    """The scalar c with x = c g, or None."""
    c = None
    for rx, rg in zip(x, g):
        for a, b in zip(rx, rg):
            if b == 0:
                if a != 0:
                    return None
            elif c is None:
                c = a / b
            elif a != c * b:
                return None
    return ZERO if c is None else c


# -- factors ---------------------------------------------------------------

@dataclass(frozen=True)
class UnipotentFactor:
    generator: Matrix
    kind: str = field(default="unipotent", init=False)
    arity: int = field(default=1, init=False)

    def identity(self):
        return (ZERO,)

    def evaluate(self, params) -> Matrix:
        return nilpotent_exp(self.generator, params[0])

    def tangent(self) -> list[Matrix]:
        return [self.generator]


@dataclass(frozen=True)
class TorusFactor:
    weight: WeightVector
    frame: Matrix
    kind: str = field(default="torus", init=False)
    arity: int = field(default=1, init=False)

    def identity(self):
        return (ONE,)

    @cached_property
    def frame_inverse(self) -> Matrix:
        return inverse(self.frame)

    def evaluate(self, params) -> Matrix:
        return _conj(self.frame, self.frame_inverse, one_param_torus(self.weight, params[0]))

    def tangent(self) -> list[Matrix]:
        return [_conj(self.frame, self.frame_inverse, diag(self.weight.weights))]


@dataclass(frozen=True)
class SemisimpleFactor:
    """A1 as exp(a e) · Q diag(s^w) Q^-1 · exp(c f), or the SL_m big cell ("ambient")."""

    label: str
    e: Matrix | None = None
    h: Matrix | None = None
    f: Matrix | None = None
    weight: WeightVector | None = None
    frame: Matrix | None = None
    size: int = 0
    kind: str = field(default="catalog-semisimple", init=False)

    @cached_property
    def frame_inverse(self) -> Matrix:
        return inverse(self.frame)

    @property
    def is_ambient(self) -> bool:
        return self.e is None

    @property
    def arity(self) -> int:
        return 3 if not self.is_ambient else self.size * self.size - 1

    def _upper(self):
        m = self.size
        return [(i, j) for i in range(m) for j in range(i + 1, m)]

    def _coroots(self):
        m = self.size
        return [tuple(1 if k == i else -1 if k == i + 1 else 0 for k in range(m)) for i in range(m - 1)]

    def identity(self):
        if not self.is_ambient:
            return (ZERO, ONE, ZERO)
        n = len(self._upper())
        return (ZERO,) * n + (ONE,) * (self.size - 1) + (ZERO,) * n

    def evaluate(self, params) -> Matrix:
        if not self.is_ambient:
            a, s, c = params
            t = _conj(self.frame, self.frame_inverse, one_param_torus(self.weight, s))
            return matmul(matmul(nilpotent_exp(self.e, a), t), nilpotent_exp(self.f, c))
        m = self.size
        pairs = self._upper()
        n = len(pairs)
        up = [list(r) for r in identity(m)]
        low = [list(r) for r in identity(m)]
        for (i, j), x in zip(pairs, params[:n]):
            up[i][j] = Q(x)
        for (i, j), x in zip(pairs, params[n + m - 1:]):
            low[j][i] = Q(x)
        t = identity(m)
        for w, x in zip(self._coroots(), params[n:n + m - 1]):
            t = matmul(t, one_param_torus(w, x))
        return matmul(matmul(mat(up), t), mat(low))

    def tangent(self) -> list[Matrix]:
        if not self.is_ambient:
            return [self.e, self.h, self.f]
        m = self.size
        out = [elementary(m, i, j) for i, j in self._upper()]
        out += [diag(w) for w in self._coroots()]
        out += [elementary(m, j, i) for i, j in self._upper()]
        return out

    def solve(self, g: Matrix):
        """Big-cell parameters of g, or None when g is outside the big cell."""
        if self.is_ambient:
            dec = _udl(g)
            if dec is None:
                return None
            up, d, low = dec
            ts = _recover_torus(self._coroots(), d)
            if ts is None:
                return None
            pairs = self._upper()
            return tuple(up[i][j] for i, j in pairs) + ts + tuple(low[j][i] for i, j in pairs)
        p, pinv = self.frame, self.frame_inverse
        dec = _udl(_conj(pinv, p, g))
        if dec is None:
            return None
        up, d, low = dec
        ts = _recover_torus([self.weight.weights], d)
        if ts is None:
            return None
        lu, ll = unipotent_log(up), unipotent_log(low)
        a = _multiple_of(lu, _conj(pinv, p, self.e))
        c = _multiple_of(ll, _conj(pinv, p, self.f))
        if a is None or c is None:
            return None
        return (a, ts[0], c)

    def translates(self) -> list[Matrix]:
        """A few group elements used to move g into the big cell."""
        if not self.is_ambient:
            gens = [nilpotent_exp(self.e, k) for k in (1, 2)] + [nilpotent_exp(self.f, k) for k in (1, 2)]
        else:
            m = self.size
            gens = [nilpotent_exp(elementary(m, i, j), 1) for i in range(m) for j in range(m) if i != j]
        out = list(gens)
        out += [matmul(x, y) for x in gens for y in gens]
        return out


Factor = UnipotentFactor | TorusFactor | SemisimpleFactor


@dataclass(frozen=True)
class ParametrizedGroup:
    """The image of a product of one-parameter and catalog factors.

    ``frame`` has columns making the solvable part upper triangular (torus
    diagonal, unipotent part strictly upper). ``layers`` groups the
    unipotent factors along the lower central series of their span, which
    is what makes the parameters recoverable one layer at a time.
    """

    ambient: LieAlgebra
    factors: tuple
    frame: Matrix
    layers: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        for f in self.factors:
            if isinstance(f, UnipotentFactor) and not is_nilpotent(f.generator):
                raise InputError("unipotent generator is not nilpotent")
        if self.layers == () and self.unipotent_factors():
            object.__setattr__(self, "layers", (tuple(range(len(self.unipotent_factors()))),))

    @property
    def m(self) -> int:
        return len(self.frame)

    @property
    def arity(self) -> int:
        return sum(f.arity for f in self.factors)

    def unipotent_factors(self) -> list[UnipotentFactor]:
        return [f for f in self.factors if isinstance(f, UnipotentFactor)]

    def torus_factors(self) -> list[TorusFactor]:
        return [f for f in self.factors if isinstance(f, TorusFactor)]

    def semisimple_factor(self) -> SemisimpleFactor | None:
        return next((f for f in self.factors if isinstance(f, SemisimpleFactor)), None)

    @property
    def unipotent_generators(self) -> tuple[Matrix, ...]:
        return tuple(f.generator for f in self.unipotent_factors())

    @property
    def torus_weights(self) -> tuple[WeightVector, ...]:
        return tuple(f.weight for f in self.torus_factors())

    def identity_parameters(self) -> tuple[Fraction, ...]:
        out = ()
        for f in self.factors:
            out += f.identity()
        return out

    def split(self, params) -> list[tuple]:
        params = tuple(Q(x) for x in params)
        if len(params) != self.arity:
            raise InputError(f"expected {self.arity} parameters, got {len(params)}")
        out, i = [], 0
        for f in self.factors:
            out.append(params[i:i + f.arity])
            i += f.arity
        return out

    def evaluate(self, params) -> Matrix:
        g = identity(self.m)
        for f, p in zip(self.factors, self.split(params)):
            g = matmul(g, f.evaluate(p))
        return g

    def solve(self, g) -> tuple[Fraction, ...] | None:
        """Parameters whose evaluation is g, or None.

        For a semisimple factor only the big cell is covered, so None does
        not rule out membership there; use ``contains``.
        """
        g = mat(g)
        ss = self.semisimple_factor()
        if ss is not None:
            if self.unipotent_factors() or self.torus_factors():
                raise UnsupportedError("membership for a semisimple factor times a solvable part is not implemented")
            p = ss.solve(g)
            return p if p is not None and ss.evaluate(p) == g else None
        return self._solve_solvable(g)

    def contains(self, g) -> bool:
        g = mat(g)
        if self.solve(g) is not None:
            return True
        ss = self.semisimple_factor()
        if ss is None:
            return False
        # g is in the group iff y g is, for any group element y
        return any(self.solve(matmul(y, g)) is not None for y in ss.translates())

    @cached_property
    def _solver(self):
        """Frame inverse, torus weights in the frame, and their integer right inverse."""
        p = self.frame
        pinv = inverse(p)
        wts = []
        for f in self.torus_factors():
            x = _conj(pinv, p, f.tangent()[0])
            d = [x[i][i] for i in range(len(x))]
            if any(v.denominator != 1 for v in d):
                return pinv, None
            wts.append([int(v) for v in d])
        gens = self.unipotent_generators
        return pinv, wts, tuple(_flat(x) for x in gens)

    def _solve_solvable(self, g: Matrix):
        p = self.frame
        pinv, wts, *rest = self._solver
        if wts is None:
            return None
        flat_gens = rest[0]
        gp = _conj(pinv, p, g)
        if not is_upper_triangular(gp):
            return None
        d = [gp[i][i] for i in range(self.m)]
        ts = _recover_torus(wts, d)
        if ts is None:
            return None
        torus = identity(self.m)
        for f, t in zip(self.torus_factors(), ts):
            torus = matmul(torus, f.evaluate((t,)))
        u = matmul(g, inverse(torus))
        gens = self.unipotent_generators
        params = [ZERO] * len(gens)
        rest_u = u
        for layer in self.layers:
            log = unipotent_log(rest_u)
            if log is None:
                return None
            coeffs = coordinates_in(flat_gens, _flat(log))
            if coeffs is None:
                return None
            step = identity(self.m)
            for i in layer:
                params[i] = coeffs[i]
                step = matmul(step, nilpotent_exp(gens[i], coeffs[i]))
            rest_u = matmul(inverse(step), rest_u)
        if rest_u != identity(self.m):
            return None
        out = []
        it_u, it_t = iter(params), iter(ts)
        for f in self.factors:
            out.append(next(it_u) if isinstance(f, UnipotentFactor) else next(it_t))
        sol = tuple(out)
        return sol if self.evaluate(sol) == g else None


def _flat(a: Matrix):
    return tuple(x for r in a for x in r)


# -- integration -----------------------------------------------------------

def _unipotent_radical(h: Subalgebra) -> Subalgebra:
    if h.ambient.is_semisimple():
        return unipotent_radical_via_killing(h)
    return nilpotent_ideal(h)


def _layered_basis(n: Subalgebra) -> tuple[list, tuple[tuple[int, ...], ...]]:
    """Basis of n adapted to its lower central series, echelon order per layer."""
    series = list(radical_series(n).lower_central) if n.dim else []
    basis, layers = [], []
    for i, c in enumerate(series):
        below = list(series[i + 1].basis) if i + 1 < len(series) else []
        layer: list = []
        for b in c.basis:
            if len(rref(below + layer + [b], n.ambient.dim)[0]) > len(below) + len(layer):
                layer.append(b)
        if layer:
            layers.append(tuple(range(len(basis), len(basis) + len(layer))))
            basis.extend(layer)
    return basis, tuple(layers)


def _maximal_torus(h: Subalgebra, n: Subalgebra) -> list:
    """Commuting semisimple elements spanning a complement of n in h."""
    L = h.ambient
    torus: list = []
    current = h
    while len(torus) + n.dim < h.dim:
        span = list(n.basis) + torus
        pick = None
        for b in current.basis:
            if len(rref(span + [b], L.dim)[0]) > len(span):
                pick = b
                break
        if pick is None:
            raise PreconditionError("could not complete a maximal torus")
        s = L.coordinates(jordan_decompose(L.realize(pick)).semisimple_part)
        if s is None or not current.contains(s):
            raise NotIntegrableError("semisimple part escapes the subalgebra", witness=pick)
        torus.append(s)
        current = centralizer(current, [s])
    return torus


def _joint_eigenspaces(mats: Sequence[Matrix], m: int) -> list[list]:
    spaces = [list(identity(m))]
    for s in mats:
        nxt = []
        for basis in spaces:
            cols = transpose(tuple(basis))
            restricted = transpose(tuple(solve(cols, matvec(s, v)) for v in basis))
            p, vals = rational_eigenbasis(restricted)
            for lam in sorted(set(vals)):
                vecs = [matvec(cols, tuple(p[i][j] for i in range(len(p)))) for j, v in enumerate(vals) if v == lam]
                nxt.append(vecs)
        spaces = nxt
    return spaces


def _flag_frame(torus_mats: Sequence[Matrix], nil_mats: Sequence[Matrix], m: int) -> Matrix:
    """Columns v_1..v_m: torus eigenvectors with N v_i in span(v_1..v_{i-1})."""
    spaces = _joint_eigenspaces(torus_mats, m)
    flag: list = []
    while len(flag) < m:
        ann = nullspace(flag, m) if flag else list(identity(m))
        found = None
        # standard basis vectors first, so an already triangular input keeps its frame
        for v in identity(m):
            if len(span_basis(flag + [v], m)) == len(flag):
                continue
            if all(len(span_basis([v, matvec(s, v)], m)) == 1 for s in torus_mats) and all(
                all(sum(a[i] * matvec(nm, v)[i] for i in range(m)) == 0 for a in ann) for nm in nil_mats
            ):
                found = v
                break
        for space in spaces if found is None else ():
            cols = transpose(tuple(space))
            eqs = []
            for nmat in nil_mats:
                img = matmul(nmat, cols)
                eqs.extend(tuple(sum(a[i] * img[i][j] for i in range(m)) for j in range(len(space))) for a in ann)
            for c in nullspace(eqs, len(space)) if eqs else list(identity(len(space))):
                v = matvec(cols, c)
                if len(span_basis(flag + [v], m)) > len(flag):
                    found = v
                    break
            if found is not None:
                break
        if found is None:
            raise PreconditionError("subalgebra is not triangularizable over Q")
        flag.append(found)
    return transpose(tuple(flag))


def _check_algebraic(h: Subalgebra):
    hull = algebraic_hull(h)
    if not hull.is_algebraic:
        raise NotIntegrableError(f"subalgebra is not algebraic: {hull.witness}", witness=hull.witness)


def _solvable_factors(h: Subalgebra):
    L = h.ambient
    m = L.matrix_size
    n = _unipotent_radical(h)
    torus = _maximal_torus(h, n)
    nil_basis, layers = _layered_basis(n)
    nil_mats = [L.realize(x) for x in nil_basis]
    tor_mats = [L.realize(x) for x in torus]
    frame = _flag_frame(tor_mats, nil_mats, m)
    finv = inverse(frame)
    diags = []
    for s in tor_mats:
        d = _conj(finv, frame, s)
        diags.append(tuple(d[i][i] for i in range(m)))
    weights = [WeightVector(w) for w in saturated_basis(diags, m)] if diags else []
    factors = [UnipotentFactor(x) for x in nil_mats]
    factors += [TorusFactor(w, frame) for w in weights]
    return factors, frame, layers


def integrate_solvable(h: Subalgebra) -> ParametrizedGroup:
    """exp(unipotent radical) · (maximal torus with integral weights)."""
    L = h.ambient
    if not L.has_realization:
        raise PreconditionError(f"{L.name} has no matrix realization")
    if not radical_series(h).is_solvable:
        raise PreconditionError("integrate_solvable needs a solvable subalgebra")
    _check_algebraic(h)
    factors, frame, layers = _solvable_factors(h)
    return ParametrizedGroup(L, tuple(factors), frame, layers)


def _a1_factor(L: LieAlgebra, s: Subalgebra) -> SemisimpleFactor:
    triple = find_sl2_triple(s)
    if triple is None:
        raise UnsupportedError("no sl2-triple found in the Levi factor")
    e, hh, f = (L.realize(x) for x in triple)
    p, vals = rational_eigenbasis(hh)
    m = len(hh)
    order = sorted(range(m), key=lambda j: -vals[j])
    frame = tuple(tuple(p[i][j] for j in order) for i in range(m))
    weight = WeightVector(tuple(vals[j] for j in order))
    return SemisimpleFactor("A1", e, hh, f, weight, frame, m)


def _is_full_sl(L: LieAlgebra, s: Subalgebra) -> bool:
    m = L.matrix_size
    return s.dim == m * m - 1 and all(
        L.coordinates(x) is not None and s.contains(L.coordinates(x))
        for x in [elementary(m, i, j) for i in range(m) for j in range(m) if i != j]
    )


def integrate_algebraic(h: Subalgebra) -> ParametrizedGroup:
    """(solvable radical integrated) · (catalog semisimple factor)."""
    L = h.ambient
    if not L.has_realization:
        raise PreconditionError(f"{L.name} has no matrix realization")
    _check_algebraic(h)
    levi = levi_semisimple_class(h)
    label = levi.semisimple_class.label
    if label == "0":
        return integrate_solvable(h)
    if levi.complement is None:
        raise UnsupportedError(f"Levi class {label} found but no explicit Levi subalgebra")
    rad = solvable_radical(h)
    m = L.matrix_size
    if label == "A1":
        ss = _a1_factor(L, levi.complement)
    elif label == "A2" and _is_full_sl(L, levi.complement):
        ss = SemisimpleFactor("A2", size=m)
    else:
        raise UnsupportedError(f"semisimple factor {label} is not integrated")
    if rad.dim:
        factors, frame, layers = _solvable_factors(rad)
        return ParametrizedGroup(L, tuple(factors) + (ss,), frame, layers)
    frame = ss.frame if ss.frame is not None else identity(m)
    return ParametrizedGroup(L, (ss,), frame)


def tangent_space_at_identity(g: ParametrizedGroup) -> SubspacePoint:
    """Span of the derivatives of all factors at the identity parameters."""
    L = g.ambient
    rows = []
    for f in g.factors:
        for x in f.tangent():
            c = L.coordinates(x)
            if c is None:
                raise InputError("a factor's tangent is outside the ambient realization")
            rows.append(c)
    basis = span_basis(rows, L.dim)
    return canonicalize(basis, L.dim) if basis else SubspacePoint(L.dim, 0, (), (ONE,))


# -- sampled group axioms --------------------------------------------------

@dataclass(frozen=True)
class GroupCheckReport:
    trials: int
    seed: int
    status: str  # "pass" | "fail" | "unsupported"
    checks: int
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _random_parameters(g: ParametrizedGroup, rng: random.Random) -> tuple:
    out = []
    for f in g.factors:
        for base in f.identity():
            if base == 1:
                num = rng.choice([x for x in range(-4, 5) if x])
                out.append(Fraction(num, rng.randint(1, 3)))
            else:
                out.append(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
    return tuple(out)


def group_axiom_sample_check(g: ParametrizedGroup, trials: int = 100, seed: int = 0) -> GroupCheckReport:
    """Identity, products and inverses of sampled elements stay in the group."""
    if trials < 1:
        raise InputError("trials must be positive")
    rng = random.Random(seed)
    checks = 0
    try:
        if g.evaluate(g.identity_parameters()) != identity(g.m):
            return GroupCheckReport(trials, seed, "fail", 1, {"trial": 0, "check": "identity"})
        checks += 1
        for trial in range(1, trials + 1):
            p, q = _random_parameters(g, rng), _random_parameters(g, rng)
            x, y = g.evaluate(p), g.evaluate(q)
            for name, z in (("product", matmul(x, y)), ("inverse", inverse(x))):
                checks += 1
                if not g.contains(z):
                    return GroupCheckReport(
                        trials, seed, "fail", checks,
                        {"trial": trial, "check": name, "p": p, "q": q if name == "product" else None},
                    )
    except UnsupportedError as exc:
        return GroupCheckReport(trials, seed, "unsupported", checks, {"reason": str(exc)})
    return GroupCheckReport(trials, seed, "pass", checks)


def corrupt_torus_frame(g: ParametrizedGroup, frame: Matrix) -> ParametrizedGroup:
    """Replace every torus factor's eigenframe; a negative control for the checks."""
    frame = mat(frame)
    factors = tuple(TorusFactor(f.weight, frame) if isinstance(f, TorusFactor) else f for f in g.factors)
    return ParametrizedGroup(g.ambient, factors, g.frame, g.layers)


__all__ = [
    "GroupCheckReport",
    "ParametrizedGroup",
    "SemisimpleFactor",
    "TorusFactor",
    "UnipotentFactor",
    "corrupt_torus_frame",
    "exp_nilpotent",
    "group_axiom_sample_check",
    "integrate_algebraic",
    "integrate_solvable",
    "one_param_torus",
    "tangent_space_at_identity",
]
