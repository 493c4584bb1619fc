"""Cox-ring pipeline: divisor orders, the unit ideal, section semigroups,
Hilbert bases, generators, and relation checking.

Generator symbols ``W1, W2, ...`` are bound in this order:

1. generators from the first piece (``w1 = 0``) that involve x2 or y1,
2. the same from the second piece (``w2 = 0``),
3. generators that are pure t-monomials, sorted by t-degree (descending),
4. the lineality generator with positive pivot, then its inverse.

Within each group the order is the Hilbert-basis order.  This binding is
written into every report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import AlgebraElement, Monomial, _tadd, unit_group
from .errors import ParseError, UnboundSymbol
from .hilbert import HilbertResult, IneqSystem, box_oracle, hilbert
from .lattice import Chart, check_s
from .parse import evaluate_terms, parse_algebra, parse_polynomial
from .points import PointTriple, evaluate_on_mvec, point_from_triple

GENERATOR_ORDER = (
    "piece-1 generators involving x2 or y1, then piece-2 generators involving x1 or y1, "
    "then pure t-monomials, then the lineality generator and its inverse"
)


@dataclass(frozen=True)
class CoxInstance:
    s: int
    points: Tuple[PointTriple, ...]

    @classmethod
    def make(cls, s: int, points) -> "CoxInstance":
        check_s(s)
        return cls(s, tuple(point_from_triple(s, *p) for p in points))

    @property
    def ell(self) -> int:
        return len(self.points)


def ord_along(s: int, p, m: Monomial) -> int:
    if m.t:
        raise ValueError("order of vanishing is defined for t-free monomials")
    return evaluate_on_mvec(s, p, m.mvec(s))


def ord_vector(inst: CoxInstance, m: Monomial) -> Tuple[int, ...]:
    return tuple(ord_along(inst.s, p, m) for p in inst.points)


def unit_ideal(inst: CoxInstance) -> List[AlgebraElement]:
    u = unit_group(inst.s)
    d = ord_vector(inst, u)
    return [AlgebraElement(inst.s, {u: 1, Monomial(0, 0, 0, d): -1})]


def section_semigroup(inst: CoxInstance, piece: Chart) -> IneqSystem:
    """Inequalities for ``b_m t^r`` in the Cox ring, ``m`` in one maximal cone.

    Coordinates are ``(w, z1, r_1, ..., r_l)`` where ``w`` is ``w2`` on the
    first piece (``w1 = 0``) and ``w1`` on the second (``w2 = 0``).
    """
    s, ell = inst.s, inst.ell
    rows = [(1, 0) + (0,) * ell]
    for i, (a, b, c) in enumerate(inst.points):
        # chart-1 image: piece 1 gives (x, y) = (-z1 - s*w2, -w2), piece 2 gives (-z1, w1)
        if Chart(piece) is Chart.ONE:
            coeffs = (b - c * s, -c)
        else:
            coeffs = (a, -c)
        r = [0] * ell
        r[i] = 1
        rows.append(tuple(int(x) for x in coeffs) + tuple(r))
    return IneqSystem(2 + ell, tuple(rows))


def vector_to_monomial(piece: Chart, v) -> Monomial:
    w, z1, *r = v
    if Chart(piece) is Chart.ONE:
        return Monomial(0, w, z1, tuple(r))
    return Monomial(w, 0, z1, tuple(r))


@dataclass
class Generators:
    monomials: List[Monomial]
    hilbert: Dict[Chart, HilbertResult]

    def symbols(self) -> List[str]:
        return [f"W{i}" for i in range(1, len(self.monomials) + 1)]


def compute_generators(inst: CoxInstance) -> Generators:
    hb = {ch: hilbert(section_semigroup(inst, ch)) for ch in Chart}
    groups: List[List[Monomial]] = [[], [], [], []]
    seen = set()

    def put(k, m):
        if m not in seen:
            seen.add(m)
            groups[k].append(m)

    pure_t = []
    for k, ch in enumerate(Chart):
        for v in hb[ch].pointed:
            m = vector_to_monomial(ch, v)
            if m.w1 == 0 and m.w2 == 0 and m.z1 == 0:
                pure_t.append(m)
            else:
                put(k, m)
    for m in sorted(set(pure_t), key=lambda m: m.t, reverse=True):
        put(2, m)
    for ch in Chart:
        for b in hb[ch].lineality:
            put(3, vector_to_monomial(ch, b))
            put(3, vector_to_monomial(ch, tuple(-x for x in b)))
    return Generators([m for grp in groups for m in grp], hb)


def cox_generators(inst: CoxInstance) -> List[Monomial]:
    return compute_generators(inst).monomials


def reduce_mod_J(f: AlgebraElement, inst: CoxInstance) -> AlgebraElement:
    """Normal form modulo the unit ideal: trade each y1 power for t-monomials."""
    d = ord_vector(inst, unit_group(inst.s))
    out: Dict[Monomial, object] = {}
    for m, c in f.terms.items():
        t = _tadd(m.t, tuple(m.z1 * x for x in d))
        key = Monomial(m.w1, m.w2, 0, t)
        out[key] = out.get(key, 0) + c
    return AlgebraElement(inst.s, out)


def bind_word(word: str, gens: Sequence[Monomial], s: int) -> AlgebraElement:
    terms = parse_polynomial(word)
    table = {f"W{i}": m for i, m in enumerate(gens, 1)}

    def bind(name, e):
        if name not in table:
            raise UnboundSymbol(name)
        if e < 0:
            raise ParseError(f"negative exponent on generator {name}", word.find(name))
        return AlgebraElement.monomial(s, table[name]) ** e

    return evaluate_terms(terms, bind, AlgebraElement.const(s, 1))


def relation_check(word: str, inst: CoxInstance, gens: Optional[Sequence[Monomial]] = None,
                   quotient: bool = True) -> Tuple[bool, AlgebraElement]:
    """Substitute the generators into ``word``; report whether it vanishes."""
    gens = cox_generators(inst) if gens is None else gens
    f = bind_word(word, gens, inst.s)
    if quotient:
        f = reduce_mod_J(f, inst)
    return f.is_zero(), f


# --- presentation ----------------------------------------------------------

def _monomial_word(exps: Dict[str, int]) -> str:
    parts = []
    for name in sorted(exps, key=lambda n: int(n[1:])):
        e = exps[name]
        if e:
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _express_t(target, basis: List[Tuple[str, Tuple[int, ...]]], depth: int = 12):
    """Write the t-degree ``target`` as a nonnegative combination of ``basis``."""
    n = max([len(target)] + [len(b) for _, b in basis])
    pad = lambda v: tuple(v) + (0,) * (n - len(v))
    target = pad(target)
    basis = [(name, pad(b)) for name, b in basis]

    def go(rest, i, budget):
        if not any(rest):
            return {}
        if i == len(basis) or budget == 0:
            return None
        name, b = basis[i]
        for k in range(budget, -1, -1):
            left = tuple(x - k * y for x, y in zip(rest, b))
            sub = go(left, i + 1, budget - k)
            if sub is not None:
                if k:
                    sub = dict(sub)
                    sub[name] = k
                return sub
        return None

    return go(target, 0, depth)


def derive_presentation(inst: CoxInstance, gens: Sequence[Monomial]) -> Dict:
    """Eliminate generators equal to constants mod J, then derive the relations
    coming from products of an x1-generator with an x2-generator."""
    s = inst.s
    syms = [f"W{i}" for i in range(1, len(gens) + 1)]
    reduced = [reduce_mod_J(AlgebraElement.monomial(s, m), inst) for m in gens]
    eliminated = {}
    for sym, r in zip(syms, reduced):
        if len(r.terms) == 1:
            (m, c), = r.terms.items()
            if m == Monomial():
                eliminated[sym] = c
    kept = [sym for sym in syms if sym not in eliminated]
    pure = [(sym, m.t) for sym, m, r in zip(syms, gens, reduced)
            if sym in kept and all(k.w1 == 0 and k.w2 == 0 for k in r.terms)
            and len(r.terms) == 1]
    pure = [(sym, next(iter(reduced[syms.index(sym)].terms)).t) for sym, _ in pure]
    xs1 = [i for i, m in enumerate(gens) if syms[i] in kept and m.w1 > 0]
    xs2 = [i for i, m in enumerate(gens) if syms[i] in kept and m.w2 > 0]
    relations = []
    for i in xs2:
        for j in xs1:
            prod = reduce_mod_J(AlgebraElement.monomial(s, gens[i]) * AlgebraElement.monomial(s, gens[j]), inst)
            if any(m.w1 or m.w2 for m in prod.terms):
                continue
            rhs = []
            ok = True
            for m, c in sorted(prod.terms.items(), key=lambda kv: kv[0].t, reverse=True):
                combo = _express_t(m.t, pure)
                if combo is None:
                    ok = False
                    break
                rhs.append((c, combo))
            if not ok:
                continue
            lo, hi = sorted((syms[i], syms[j]), key=lambda n: int(n[1:]))
            word = f"{lo}*{hi}"
            for c, combo in rhs:
                sign = "-" if c > 0 else "+"
                mag = abs(c)
                body = _monomial_word(combo)
                if mag != 1:
                    body = f"{mag}*{body}" if body != "1" else str(mag)
                word += f" {sign} {body}"
            zero, _ = relation_check(word, inst, gens)
            relations.append({"word": word, "zero": zero})
    return {"generators": kept, "eliminated": {k: str(v) for k, v in eliminated.items()},
            "relations": relations}


# --- report ----------------------------------------------------------------

# Published values for the three-divisor instance (s = 1) to check against.
PUBLISHED = {
    "s": 1,
    "points": [(1, -1, 1), (-2, 2, 1), (1, -3, -2)],
    "ord": (-1, -1, 2),
    "J": "y1*y2^-1 - t1^-1*t2^-1*t3^2",
    "rows": {
        1: [(1, 0, 0, 0, 0), (-2, -1, 1, 0, 0), (1, -1, 0, 1, 0), (-1, 2, 0, 0, 1)],
        2: [(1, 0, 0, 0, 0), (1, -1, 1, 0, 0), (-2, -1, 0, 1, 0), (1, 2, 0, 0, 1)],
    },
    "hilbert": {
        1: [(1, 0, 2, -1, 1), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1),
            (0, -1, -1, -1, 2), (0, 1, 1, 1, -2)],
        2: [(1, 0, -1, 2, -1), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1),
            (0, -1, -1, -1, 2), (0, 1, 1, 1, -2)],
    },
    "generators": [
        "x2*y1^-1*t1^2*t2^-1*t3", "x1*t1^-1*t2^2*t3^-1", "t1", "t2", "t3",
        "y1*y2^-1*t1*t2*t3^-2", "y1^-1*y2*t1^-1*t2^-1*t3^2",
    ],
    "kernel": ["W6 - 1", "W5 - 1", "W2*W3 - W1*W7 + W4"],
    "presentation": "W2*W3 - W1*W5 + W4",
}

# Relations whose status is part of the verification.
CHECKED_RELATIONS = [
    ("W1*W2 - W5^2*W6 - W3*W4", False),
    ("W6*W7 - 1", False),
    ("W6 - 1", False),
    ("W6 - 1", True),
    ("W7 - 1", True),
]


def _vec(v):
    return [int(x) for x in v]


def _t_degree(m: Monomial, ell: int) -> List[int]:
    return list(m.t) + [0] * (ell - len(m.t))


def cox_report(inst: CoxInstance, box: int = 6, published: Optional[Dict] = None) -> Dict:
    """Recompute the whole pipeline and, if ``published`` is given, compare."""
    s, ell = inst.s, inst.ell
    u = unit_group(s)
    d = ord_vector(inst, u)
    J = unit_ideal(inst)
    gens = compute_generators(inst)
    mons = gens.monomials
    syms = gens.symbols()
    report: Dict = {
        "instance": {"s": s, "points": [_vec(p) for p in inst.points]},
        "units": {"generator": AlgebraElement.monomial(s, u).pretty(), "ord": list(d)},
        "J": [g.pretty() for g in J],
        "T": [],
        "hilbert": [],
        "generator_order": GENERATOR_ORDER,
        "generators": [],
        "relations": [],
        "presentation": None,
        "discrepancies": [],
        "oracle_ok": True,
    }
    coords = {Chart.ONE: ["w2", "z1"], Chart.TWO: ["w1", "z1"]}
    for ch in Chart:
        sysm = section_semigroup(inst, ch)
        names = coords[ch] + [f"r{i}" for i in range(1, ell + 1)]
        report["T"].append({"piece": int(ch), "coords": names, "rows": [_vec(r) for r in sysm.rows]})
        basis = gens.hilbert[ch].basis
        oracle = box_oracle(sysm, basis, box) if sysm.n <= 5 else None
        if oracle is not None and not all(oracle.values()):
            report["oracle_ok"] = False
        report["hilbert"].append({"piece": int(ch), "basis": [_vec(b) for b in basis],
                                  "oracle_box": box if oracle is not None else None,
                                  "oracle": oracle})
    for sym, m in zip(syms, mons):
        report["generators"].append({"symbol": sym, "monomial": AlgebraElement.monomial(s, m).pretty(),
                                     "t_degree": _t_degree(m, ell)})
    words = [w for w, _ in CHECKED_RELATIONS] if len(mons) >= 7 else []
    for word, quotient in (CHECKED_RELATIONS if len(mons) >= 7 else []):
        zero, nf = relation_check(word, inst, mons, quotient=quotient)
        report["relations"].append({"word": word, "quotient": quotient, "zero": zero,
                                    "normal_form": nf.pretty(), "source": "recomputed"})
    pres = derive_presentation(inst, mons)
    report["presentation"] = pres
    for rel in pres["relations"]:
        if rel["word"] not in words:
            report["relations"].append({"word": rel["word"], "quotient": True, "zero": rel["zero"],
                                        "normal_form": relation_check(rel["word"], inst, mons)[1].pretty(),
                                        "source": "derived"})
        if not rel["zero"]:
            report["oracle_ok"] = False

    if published is not None:
        _compare(report, inst, mons, published)
    return report


def _compare(report: Dict, inst: CoxInstance, mons: List[Monomial], pub: Dict) -> None:
    s, ell = inst.s, inst.ell
    disc = report["discrepancies"]
    checks = report.setdefault("checks", [])

    def record(item, ok, published, recomputed, evidence=None):
        checks.append({"item": item, "match": ok})
        if not ok:
            entry = {"item": item, "published": published, "recomputed": recomputed}
            if evidence is not None:
                entry["evidence"] = evidence
            disc.append(entry)

    ordv = report["units"]["ord"]
    record("ord vector of the unit", tuple(ordv) == tuple(pub["ord"]), list(pub["ord"]), ordv)

    J_pub = parse_algebra(pub["J"], s)
    J_ours = unit_ideal(inst)[0]
    record("unit ideal J", J_pub == J_ours or J_pub == -J_ours, pub["J"], J_ours.pretty())

    for entry in report["T"]:
        ch = entry["piece"]
        rows = [tuple(r) for r in entry["rows"]]
        record(f"T{ch} inequality rows", rows == [tuple(r) for r in pub["rows"][ch]],
               [list(r) for r in pub["rows"][ch]], [list(r) for r in rows])
    for entry in report["hilbert"]:
        ch = entry["piece"]
        ours = sorted(tuple(b) for b in entry["basis"])
        theirs = sorted(tuple(b) for b in pub["hilbert"][ch])
        record(f"T{ch} Hilbert basis", ours == theirs, [list(b) for b in pub["hilbert"][ch]], entry["basis"])

    report_gens = report["generators"]
    count_ok = len(mons) == len(pub["generators"])
    record("number of generators", count_ok, len(pub["generators"]), len(mons))
    for i, text in enumerate(pub["generators"]):
        sym = f"W{i + 1}"
        pub_el = parse_algebra(text, s)
        (pm, _), = pub_el.terms.items()
        ours = report_gens[i] if i < len(report_gens) else None
        tdeg_ok = ours is not None and _t_degree(pm, ell) == ours["t_degree"]
        record(f"{sym} t-degree", tdeg_ok, _t_degree(pm, ell), ours["t_degree"] if ours else None)
        same = ours is not None and pm == mons[i]
        if not same and ours is not None:
            same_mod_J = reduce_mod_J(pub_el, inst) == reduce_mod_J(AlgebraElement.monomial(s, mons[i]), inst)
            record(f"{sym} monomial", False, pub_el.pretty(), ours["monomial"],
                   {"published_as_basis_key": [pm.w1, pm.w2, pm.z1, list(pm.t)],
                    "recomputed_basis_key": [mons[i].w1, mons[i].w2, mons[i].z1, list(mons[i].t)],
                    "equal_modulo_J": same_mod_J})
        else:
            record(f"{sym} monomial", same, text, ours["monomial"] if ours else None)

    for word in pub["kernel"]:
        zero, nf = relation_check(word, inst, mons)
        record(f"kernel element {word}", zero, "zero in the quotient",
               "zero" if zero else "nonzero", {"normal_form": nf.pretty()})
    zero, nf = relation_check(pub["presentation"], inst, mons)
    record(f"presentation relation {pub['presentation']}", zero, "zero in the quotient",
           "zero" if zero else "nonzero", {"normal_form": nf.pretty()})


def verify_published_claims(inst: CoxInstance, box: int = 6) -> Dict:
    return cox_report(inst, box=box, published=PUBLISHED)
