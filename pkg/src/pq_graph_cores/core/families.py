"""
Constructors for the imprimitive symmetric families of order pq.

Each constructor returns a FamilyInstance: the Graph, its FamilySpec (the
parameter record, also printable as a CLI family string) and a GeneratorSet
of automorphisms used to verify vertex- and arc-transitivity.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Any, Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .algebra import (
    choose_t,
    divisors,
    element_order,
    is_prime,
    prime_factors,
    subgroup,
)
from .designs import (
    DesignKind,
    ProjectiveDesign,
    h11_design,
    h11_point_permutations,
    pg_design,
    pg_point_permutations,
)
from .finite_field import MAX_FIELD_DEGREE, make_field
from .graph import (
    Graph,
    deleted_lexicographic_product,
    empty_graph,
    lexicographic_product,
    to_mask,
)
from .isomorphism import find_isomorphism, is_isomorphic
from .orbits import GeneratorSet

logger = logging.getLogger(__name__)

INFINITY = "inf"


class FamilyParameterError(ValueError):
    """Raised when a family's definitional precondition is violated."""


class FamilyTag(Enum):
    GPR = "gpr"
    G2QR = "g2qr"
    G2_Q_R = "g2_q_r"
    G3QR = "g3qr"
    GPQRSU = "gpqrsu"
    LEX = "lex"
    DELLEX = "dellex"
    MS = "ms"
    INC = "inc"
    NONINC = "noninc"


@dataclass(frozen=True)
class FamilySpec:
    tag: FamilyTag
    params: Dict[str, Any] = field(default_factory=dict, hash=False)

    def __getitem__(self, key: str) -> Any:
        return self.params[key]

    def get(self, key: str, default: Any = None) -> Any:
        return self.params.get(key, default)

    @property
    def text(self) -> str:
        """Canonical family string, accepted back by the spec parser."""
        p = self.params
        tag = self.tag
        if tag is FamilyTag.GPR:
            return f"gpr:{p['p']},{p['r']}"
        if tag in (FamilyTag.G2QR, FamilyTag.G2_Q_R, FamilyTag.G3QR):
            return f"{tag.value}:{p['q']},{p['r']}"
        if tag is FamilyTag.GPQRSU:
            return f"gpqrsu:{p['p']},{p['q']},{p['r']},{p['s']},{p['t']}"
        if tag is FamilyTag.MS:
            s_text = "/".join(str(x) for x in p["S"])
            u_text = ",".join(str(x) for x in p["U"])
            return f"ms:{p['a']},{p['m']},{s_text},{u_text}"
        if tag in (FamilyTag.INC, FamilyTag.NONINC):
            if p["design"] == DesignKind.HADAMARD_11.value:
                return f"{tag.value}:h11"
            return f"{tag.value}:pg,{p['d']},{p['r']}"
        return f"{tag.value}:{p['base'].text},q={p['fiber']}"

    def __str__(self) -> str:
        return self.text


class FamilyInstance(NamedTuple):
    graph: Graph
    spec: FamilySpec
    generators: GeneratorSet


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FamilyParameterError(message)


def _instance(
    rows: Sequence[int],
    labels: Sequence[Any],
    name: str,
    spec: FamilySpec,
    gens: List[Tuple[str, Sequence[int]]],
) -> FamilyInstance:
    graph = Graph(tuple(rows), tuple(labels), name)
    logger.debug(f"built {spec.text}: {graph!r}")
    return FamilyInstance(graph, spec, GeneratorSet.from_pairs(gens))


# --- circulants and bipartite doubles ---------------------------------------


def g_pr(p: int, r: int) -> FamilyInstance:
    """G(p, r): circulant on Z_p with connection set H(p, r)."""
    _require(is_prime(p), f"p={p} is not prime")
    _require(r >= 1 and (p - 1) % r == 0, f"r={r} does not divide p-1={p - 1}")
    _require(p == 2 or r % 2 == 0, f"-1 is not in H({p},{r}): r must be even")
    h = subgroup(p, r)
    rows = [to_mask((x + y) % p for y in h) for x in range(p)]
    gens = [("translation", [(x + 1) % p for x in range(p)])]
    if r > 1:
        gens.append(("multiplication", [h.generator * x % p for x in range(p)]))
    spec = FamilySpec(FamilyTag.GPR, {"p": p, "r": r})
    return _instance(rows, range(p), f"G({p},{r})", spec, gens)


def _check_odd_prime_divisor(q: int, r: int) -> None:
    _require(is_prime(q) and q > 2, f"q={q} is not an odd prime")
    _require(r >= 1 and (q - 1) % r == 0, f"r={r} does not divide q-1={q - 1}")


def _double_cover_gens(q: int, a: int) -> List[Tuple[str, List[int]]]:
    """tau, rho and tau_a on A (0..q-1) and A' (q..2q-1)."""
    tau = [(x + 1) % q for x in range(q)] + [q + (x + 1) % q for x in range(q)]
    rho = [q + (-x) % q for x in range(q)] + [(-x) % q for x in range(q)]
    tau_a = [(a * x + 1) % q for x in range(q)] + [q + (a * x + 1) % q for x in range(q)]
    return [("tau", tau), ("rho", rho), ("tau_a", tau_a)]


def g_2q_r(q: int, r: int) -> FamilyInstance:
    """G(2q, r): x ~ y' iff y - x in H(q, r)."""
    _check_odd_prime_divisor(q, r)
    h = subgroup(q, r)
    rows = [to_mask(q + (x + y) % q for y in h) for x in range(q)]
    rows += [to_mask((x - y) % q for y in h) for x in range(q)]
    labels = [(x, 0) for x in range(q)] + [(x, 1) for x in range(q)]
    spec = FamilySpec(FamilyTag.G2QR, {"q": q, "r": r})
    return _instance(rows, labels, f"G(2*{q},{r})", spec, _double_cover_gens(q, h.generator))


def g_2_q_r(q: int, r: int) -> FamilyInstance:
    """G(2, q, r): x, x' both adjacent to y, y' when y - x in H(q, r)."""
    _check_odd_prime_divisor(q, r)
    _require(r % 2 == 0, f"r={r} must be even")
    h = subgroup(q, r)
    row = [to_mask((x + y) % q for y in h) for x in range(q)]
    rows = [m | (m << q) for m in row] * 2
    labels = [(x, 0) for x in range(q)] + [(x, 1) for x in range(q)]
    gens = _double_cover_gens(q, h.generator)
    gens.append(("twin_swap", [q] + list(range(1, q)) + [0] + list(range(q + 1, 2 * q))))
    spec = FamilySpec(FamilyTag.G2_Q_R, {"q": q, "r": r})
    return _instance(rows, labels, f"G(2,{q},{r})", spec, gens)


# --- Z_p x Z_q families -----------------------------------------------------


def _grid_perm(p: int, q: int, f: Callable[[int, int], Tuple[int, int]]) -> List[int]:
    perm = []
    for i in range(p):
        for x in range(q):
            j, y = f(i, x)
            perm.append((j % p) * q + y % q)
    return perm


def g_3q_r(q: int, r: int) -> FamilyInstance:
    """G(3q, r): (i,x) ~ (i+1,y) iff y - x in H(q, r)."""
    _require(is_prime(q) and q >= 5, f"q={q} must be a prime >= 5")
    _require(r >= 1 and (q - 1) % r == 0, f"r={r} does not divide q-1={q - 1}")
    h = subgroup(q, r)
    rows = []
    for i in range(3):
        for x in range(q):
            forward = to_mask(((i + 1) % 3) * q + (x + y) % q for y in h)
            backward = to_mask(((i - 1) % 3) * q + (x - y) % q for y in h)
            rows.append(forward | backward)
    labels = [(i, x) for i in range(3) for x in range(q)]
    gens = [
        ("shift_i", _grid_perm(3, q, lambda i, x: (i + 1, x))),
        ("shift_x", _grid_perm(3, q, lambda i, x: (i, x + 1))),
        ("reversal", _grid_perm(3, q, lambda i, x: (-i, -x))),
    ]
    if r > 1:
        c = h.generator
        gens.append(("scale_x", _grid_perm(3, q, lambda i, x: (i, c * x))))
    u = r if r % 2 == 0 else 2 * r
    spec = FamilySpec(FamilyTag.G3QR, {"q": q, "r": r, "u": u, "t": q - 1})
    return _instance(rows, labels, f"G(3*{q},{r})", spec, gens)


def g_pq_rsu(p: int, q: int, r: int, s: int, t: int) -> FamilyInstance:
    """
    G(pq; r, s, u): (i,x) ~ (j,y) iff j - i = a^l and y - x in t^l H(q, r)
    for some l, with a the smallest generator of H(p, s).
    """
    _require(is_prime(p) and is_prime(q), f"p={p} and q={q} must be prime")
    _require(3 <= p < q, f"need 3 <= p < q, got p={p}, q={q}")
    _require(s % 2 == 0 and (p - 1) % s == 0, f"s={s} must be an even divisor of p-1")
    _require(r >= 1 and (q - 1) % r == 0, f"r={r} does not divide q-1={q - 1}")
    admissible = dict(choose_t(p, q, r, s))
    _require(t % q in admissible, f"t={t} fails t^(s/2) in -H({q},{r})")
    t %= q
    u = admissible[t]
    h = subgroup(q, r)
    a = subgroup(p, s).generator

    steps = [(pow(a, l, p), h.coset(pow(t, l, q))) for l in range(s)]
    rows = []
    for i in range(p):
        for x in range(q):
            rows.append(
                to_mask(((i + di) % p) * q + (x + y) % q for di, coset in steps for y in coset)
            )
    labels = [(i, x) for i in range(p) for x in range(q)]
    gens = [
        ("shift_i", _grid_perm(p, q, lambda i, x: (i + 1, x))),
        ("shift_x", _grid_perm(p, q, lambda i, x: (i, x + 1))),
        ("mu", _grid_perm(p, q, lambda i, x: (a * i, t * x))),
    ]
    if r > 1:
        c = h.generator
        gens.append(("nu", _grid_perm(p, q, lambda i, x: (i, c * x))))
    spec = FamilySpec(
        FamilyTag.GPQRSU, {"p": p, "q": q, "r": r, "s": s, "t": t, "u": u, "a": a}
    )
    return _instance(rows, labels, f"G({p}*{q};{r},{s},{u})", spec, gens)


# --- MS graphs ---------------------------------------------------------------


def _normalize_set(values: Iterable[int], m: int) -> Tuple[int, ...]:
    return tuple(sorted({v % m for v in values}))


def ms_graph(a: int, m: int, S: Iterable[int], U: Iterable[int]) -> FamilyInstance:
    """
    Gamma(a, m, S, U) on PG(1, 2^a) x Z_m.

    (inf, r) ~ (inf, r+s), (x, r+u); (x, r) ~ (x, r+s), (inf, r-u),
    (x + w^i, -r + u + 2i) for s in S, u in U, i in Z_{2^a-1}.
    """
    _require(1 < a <= MAX_FIELD_DEGREE, f"a={a} outside 2..{MAX_FIELD_DEGREE}")
    _require(m > 1 and ((1 << a) - 1) % m == 0, f"m={m} does not divide 2^{a}-1")
    S = _normalize_set(S, m)
    U = _normalize_set(U, m)
    _require(all(gcd(s, m) == 1 for s in S), f"S={S} is not a subset of Z_{m}*")
    _require(set(S) == {(-s) % m for s in S}, f"S={S} is not closed under negation")

    field_ = make_field(a)
    size = field_.size
    units = field_.unit_order

    def point(x) -> int:
        if x == INFINITY:
            return 0
        return size if x == 0 else 1 + field_.log(x)

    def vid(x, r: int) -> int:
        return point(x) * m + r % m

    finite = [field_.w_power(k) for k in range(units)] + [0]
    points = [INFINITY] + finite

    edges = []
    for r in range(m):
        for x in points:
            for s in S:
                edges.append((vid(x, r), vid(x, r + s)))
        for x in finite:
            for u in U:
                edges.append((vid(INFINITY, r), vid(x, r + u)))
            for i in range(units):
                y = x ^ field_.w_power(i)
                for u in U:
                    edges.append((vid(x, r), vid(y, -r + u + 2 * i)))

    n = (size + 1) * m
    rows = [0] * n
    for v, w in edges:
        rows[v] |= 1 << w
        rows[w] |= 1 << v
    labels = [(x, r) for x in points for r in range(m)]

    def perm(f: Callable[[Any, int], Tuple[Any, int]]) -> List[int]:
        return [vid(*f(x, r)) for x in points for r in range(m)]

    gens: List[Tuple[str, List[int]]] = []
    for bit in range(a):
        b = 1 << bit
        gens.append(
            (f"lambda_{b}", perm(lambda x, r, b=b: (x, r) if x == INFINITY else (x ^ b, r)))
        )
    def rotation(x, r):
        if x in (INFINITY, 0):
            return x, r + 1
        return field_.mul(x, field_.w), r + 1

    gens.append(("rho", perm(rotation)))

    def inversion(x, r):
        if x == INFINITY:
            return 0, -r
        if x == 0:
            return INFINITY, -r
        return field_.inv(x), r - 2 * field_.log(x)

    gens.append(("sigma", perm(inversion)))

    for e in range(1, a):
        k = 1 << e
        if set(_normalize_set((k * s for s in S), m)) == set(S) and set(
            _normalize_set((k * u for u in U), m)
        ) == set(U):
            def frobenius(x, r, e=e, k=k):
                return (x if x == INFINITY else field_.frobenius(x, e)), k * r

            gens.append((f"frobenius_{e}", perm(frobenius)))
            break

    spec = FamilySpec(FamilyTag.MS, {"a": a, "m": m, "S": S, "U": U})
    return _instance(rows, labels, f"Gamma({a},{m},{S},{U})", spec, gens)


def symmetric_ms_enumerate(a: int, p: int) -> List[FamilySpec]:
    """
    Symmetric MS specs Gamma(a, p, {}, U): U = {0}, every U_{e,i} with
    e | gcd(d, a) and 1 < d/e < p-1 (d the order of 2 mod p), and U = {1,2}
    when p = 3. Equal sets are listed once.
    """
    q = (1 << a) + 1
    _require(a >= 2 and a & (a - 1) == 0, f"a={a} must be a power of 2 (at least 2)")
    _require(is_prime(q), f"2^{a}+1={q} is not prime")
    _require(is_prime(p) and ((1 << a) - 1) % p == 0, f"p={p} is not a prime dividing 2^{a}-1")

    d = element_order(2, p)
    sets: List[Tuple[int, ...]] = [(0,)]
    for e in divisors(gcd(d, a)):
        if not 1 < d // e < p - 1:
            continue
        for i in range(1, p):
            u_set = _normalize_set((i * pow(2, e * j, p) for j in range(d // e)), p)
            if u_set not in sets:
                sets.append(u_set)
    if p == 3 and (1, 2) not in sets:
        sets.append((1, 2))
    return [FamilySpec(FamilyTag.MS, {"a": a, "m": p, "S": (), "U": u}) for u in sets]


# --- incidence graphs ---------------------------------------------------------


def _design_rows(design: ProjectiveDesign, incident: bool) -> List[int]:
    size = design.size
    point_rows = [0] * size
    block_rows = [0] * size
    for j, block in enumerate(design.blocks):
        members = block if incident else frozenset(range(size)) - block
        for i in members:
            point_rows[i] |= 1 << (size + j)
            block_rows[j] |= 1 << i
    return point_rows + block_rows


def _design_labels(design: ProjectiveDesign) -> List[Tuple[str, Any]]:
    return [("P", x) for x in design.points] + [("B", h) for h in design.block_labels]


def incidence_graph(design: ProjectiveDesign) -> Graph:
    return Graph(tuple(_design_rows(design, True)), tuple(_design_labels(design)), "X(D)")


def nonincidence_graph(design: ProjectiveDesign) -> Graph:
    return Graph(tuple(_design_rows(design, False)), tuple(_design_labels(design)), "X'(D)")


def _lift_point_perm(design: ProjectiveDesign, perm: Tuple[int, ...]) -> List[int]:
    size = design.size
    return list(perm) + [size + design.block_image(perm, j) for j in range(size)]


def design_family(kind: str, d: int = 0, r: int = 0, incident: bool = True) -> FamilyInstance:
    """X(D) or X'(D) for D = PG(d-1, r) or H(11), with design automorphisms."""
    tag = FamilyTag.INC if incident else FamilyTag.NONINC
    if kind == DesignKind.HADAMARD_11.value:
        design = h11_design()
        params: Dict[str, Any] = {"design": kind}
    elif kind == DesignKind.PROJECTIVE.value:
        _require(d >= 3, f"d={d} must be at least 3")
        _require(is_prime(r), f"r={r} is not prime")
        design = pg_design(d, r)
        params = {"design": kind, "d": d, "r": r}
    else:
        raise FamilyParameterError(f"unknown design '{kind}'")

    size = design.size
    graph = incidence_graph(design) if incident else nonincidence_graph(design)
    if kind == DesignKind.HADAMARD_11.value:
        point_perms = h11_point_permutations(_h11_point_stabilizer(design))
        duality = [size + (-x) % 11 for x in range(11)] + [(-i) % 11 for i in range(11)]
    else:
        point_perms = pg_point_permutations(design)
        duality = [size + i for i in range(size)] + list(range(size))
    gens = [(name, _lift_point_perm(design, perm)) for name, perm in point_perms]
    gens.append(("duality", duality))

    name = ("X" if incident else "X'") + (
        "(H(11))" if kind == DesignKind.HADAMARD_11.value else f"(PG({d - 1},{r}))"
    )
    return _instance(graph.rows, graph.labels, name, FamilySpec(tag, params), gens)


def _h11_point_stabilizer(design: ProjectiveDesign) -> Tuple[int, ...]:
    """An automorphism fixing point 0 and sending block 0 to block 1, as a point map."""
    graph = incidence_graph(design)
    result = find_isomorphism(graph, graph, seed={0: 0, design.size: design.size + 1})
    if not result.found:
        raise FamilyParameterError("no point stabiliser moving block 0 to block 1")
    return tuple(result.witness[: design.size])


# --- lexicographic families --------------------------------------------------


def lex_family(base: FamilySpec, fiber: int, deleted: bool = False) -> FamilyInstance:
    """
    G[E_fiber] (or the deleted product, equal to G x K_fiber) for a circulant
    base G = G(n, r); K_2 = G(2,1), K_3 = G(3,2).
    """
    _require(base.tag is FamilyTag.GPR, f"base must be a G(p,r) circulant, got {base.text}")
    inner = g_pr(base["p"], base["r"])
    n = base["p"]
    if deleted:
        _require(is_prime(fiber) and fiber >= 5, f"fiber {fiber} must be a prime >= 5")
        _require(
            n >= 5 and n != fiber, f"base order {n} must be a prime >= 5 distinct from {fiber}"
        )
    elif fiber != 1:
        _require(is_prime(fiber) and fiber >= 3, f"fiber {fiber} must be a prime >= 3")
        _require(n != fiber, f"base order and fiber must differ, both are {n}")

    fibre_graph = empty_graph(fiber)
    product = deleted_lexicographic_product if deleted else lexicographic_product
    graph = product(inner.graph, fibre_graph)
    f = fiber

    def lift(perm: Sequence[int]) -> List[int]:
        return [perm[v] * f + x for v in range(n) for x in range(f)]

    gens = [(name, lift(perm)) for name, perm in inner.generators]
    if f > 1:
        gens.append(("fibre_shift", [v * f + (x + 1) % f for v in range(n) for x in range(f)]))
        if deleted:
            swap = [1, 0] + list(range(2, f))
            gens.append(("fibre_swap", [v * f + swap[x] for v in range(n) for x in range(f)]))
        else:
            local = [(x + 1) % f for x in range(f)] + list(range(f, n * f))
            gens.append(("local_fibre_shift", local))

    tag = FamilyTag.DELLEX if deleted else FamilyTag.LEX
    name = f"{inner.graph.name} x K_{f}" if deleted else f"{inner.graph.name}[E_{f}]"
    spec = FamilySpec(tag, {"base": base, "fiber": fiber})
    return _instance(graph.rows, graph.labels, name, spec, gens)


# --- dispatch and enumeration ------------------------------------------------


def build(spec: FamilySpec) -> FamilyInstance:
    p = spec.params
    tag = spec.tag
    if tag is FamilyTag.GPR:
        return g_pr(p["p"], p["r"])
    if tag is FamilyTag.G2QR:
        return g_2q_r(p["q"], p["r"])
    if tag is FamilyTag.G2_Q_R:
        return g_2_q_r(p["q"], p["r"])
    if tag is FamilyTag.G3QR:
        return g_3q_r(p["q"], p["r"])
    if tag is FamilyTag.GPQRSU:
        return g_pq_rsu(p["p"], p["q"], p["r"], p["s"], p["t"])
    if tag is FamilyTag.MS:
        return ms_graph(p["a"], p["m"], p["S"], p["U"])
    if tag in (FamilyTag.INC, FamilyTag.NONINC):
        return design_family(
            p["design"], p.get("d", 0), p.get("r", 0), incident=tag is FamilyTag.INC
        )
    return lex_family(p["base"], p["fiber"], deleted=tag is FamilyTag.DELLEX)


def gpr_spec(p: int, r: int) -> FamilySpec:
    return FamilySpec(FamilyTag.GPR, {"p": p, "r": r})


def _even_divisors(n: int) -> List[int]:
    return [d for d in divisors(n) if d % 2 == 0]


def _pg_parameters(q: int) -> List[Tuple[int, int]]:
    """(d, r) with (r^d - 1)/(r - 1) = q, d >= 3."""
    found = []
    for r in range(2, q):
        if not is_prime(r):
            continue
        d, total = 1, 1
        while total < q:
            total = total * r + 1
            d += 1
        if total == q and d >= 3:
            found.append((d, r))
    return found


def _ms_parameters(p: int, q: int) -> Optional[int]:
    """a with q = 2^a + 1 and p | 2^a - 1, else None."""
    a = (q - 1).bit_length() - 1
    if q == (1 << a) + 1 and a >= 2 and a & (a - 1) == 0 and ((1 << a) - 1) % p == 0:
        return a
    return None


def enumerate_family_specs(order: int) -> List[FamilySpec]:
    """Every classified FamilySpec of order pq (p < q primes)."""
    factors = prime_factors(order)
    _require(
        len(factors) == 2 and factors[0] * factors[1] == order,
        f"order {order} is not a product of two distinct primes",
    )
    p, q = factors
    specs: List[FamilySpec] = []

    if p == 2:
        for r in divisors(q - 1):
            specs.append(FamilySpec(FamilyTag.G2QR, {"q": q, "r": r}))
        for r in _even_divisors(q - 1):
            specs.append(FamilySpec(FamilyTag.G2_Q_R, {"q": q, "r": r}))
        specs.append(FamilySpec(FamilyTag.LEX, {"base": gpr_spec(2, 1), "fiber": q}))
        for d, r in _pg_parameters(q):
            for tag in (FamilyTag.INC, FamilyTag.NONINC):
                specs.append(FamilySpec(tag, {"design": "pg", "d": d, "r": r}))
        if q == 11:
            for tag in (FamilyTag.INC, FamilyTag.NONINC):
                specs.append(FamilySpec(tag, {"design": "h11"}))
        return specs

    if p == 3 and q >= 5:
        for r in divisors(q - 1):
            specs.append(FamilySpec(FamilyTag.G3QR, {"q": q, "r": r}))

    for s in _even_divisors(p - 1):
        specs.append(FamilySpec(FamilyTag.LEX, {"base": gpr_spec(p, s), "fiber": q}))
    for r in _even_divisors(q - 1):
        specs.append(FamilySpec(FamilyTag.LEX, {"base": gpr_spec(q, r), "fiber": p}))
    if p >= 5:
        for s in _even_divisors(p - 1):
            specs.append(FamilySpec(FamilyTag.DELLEX, {"base": gpr_spec(p, s), "fiber": q}))
        for r in _even_divisors(q - 1):
            specs.append(FamilySpec(FamilyTag.DELLEX, {"base": gpr_spec(q, r), "fiber": p}))

    for s in _even_divisors(p - 1):
        for r in divisors(q - 1):
            for t, _u in choose_t(p, q, r, s):
                specs.append(g_pq_rsu(p, q, r, s, t).spec)

    a = _ms_parameters(p, q)
    if a is not None:
        specs.extend(symmetric_ms_enumerate(a, p))
    logger.info(f"order {order}: {len(specs)} classified family specs")
    return specs


def find_isomorphism_collisions(specs: Sequence[FamilySpec]) -> List[Tuple[str, str]]:
    """Pairs of specs (by text) whose graphs are isomorphic."""
    graphs = [(spec.text, build(spec).graph) for spec in specs]
    collisions = []
    for i, (text_i, g_i) in enumerate(graphs):
        for text_j, g_j in graphs[i + 1 :]:
            if is_isomorphic(g_i, g_j) is not None:
                collisions.append((text_i, text_j))
                logger.info(f"isomorphic family pair: {text_i} ~ {text_j}")
    return collisions
