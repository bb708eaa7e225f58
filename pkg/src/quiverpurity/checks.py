"""Property suites shared by ``verify`` and the test-suite.

Every check is a pure function of its seed and returns a :class:`Check`
whose details are deterministic ``key=value`` pairs (no timings).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable

from .classes import ClassDescriptor, parse_class
from .closure import NotDefinable, fsc_closure, generic_status, is_definable, pinj_basis
from .constructions import (
    ar_translate,
    construct_D,
    construct_L,
    presentation_matrix,
    transpose,
)
from .decomp import decompose, is_isomorphic, is_local_probe
from .exactlin import GF, QQ, Mat, inverse, kernel_basis, rank, solve
from .kronecker import INF, I, P, R, classify, elem, make, points
from .purity import METHODS, MatrixSet, ShapeFamily, implies, ind_of_shape, ind_set, is_pure
from .quiver import AlgebraElement, AlgebraMatrix, kronecker, parse_element
from .randgen import random_algebra_matrix, random_conjugate, random_rep, random_ses
from .repmod import (
    LEFT,
    RIGHT,
    direct_sum,
    dual,
    element_action,
    free_module,
    gen_rel,
    hom_dim,
    projective,
    radical,
    submodule_generated,
    tensor,
)

DEFAULT_SEED = 20240601
SMALL_FIELDS = (GF(2), GF(3), GF(5))


@dataclass
class Check:
    name: str
    passed: bool
    details: list[tuple[str, object]] = dc_field(default_factory=list)

    def lines(self) -> list[str]:
        out = [f"check.{self.name}={'pass' if self.passed else 'fail'}"]
        out += [f"{self.name}.{k}={str(v).lower() if isinstance(v, bool) else v}"
                for k, v in self.details]
        return out


def _kq():
    return kronecker()


def _multiset(m) -> Counter:
    out: Counter = Counter()
    if m.total == 0:
        return out
    for rep, k in decompose(m).classes:
        out[classify(rep)] += k
    return out


def _fmt_multiset(c: Counter) -> str:
    return " ".join(f"{d}" + (f"^{k}" if k > 1 else "") for d, k in sorted(c.items())) or "0"


def _elem(text: str, f) -> AlgebraElement:
    return parse_element(text, _kq(), f)


def _one_by_one(text: str, f) -> AlgebraMatrix:
    return AlgebraMatrix(_kq(), f, [[_elem(text, f)]], 1, 1)


def _random_pool(f, max_n: int = 3) -> list:
    pool = [P(n) for n in range(max_n + 1)] + [I(n) for n in range(max_n + 1)]
    pool += [R(pt, n) for pt in points(f) for n in range(1, max_n + 1)]
    return pool


def _random_sum(f, rng, k_max: int = 3, max_n: int = 3):
    pool = _random_pool(f, max_n)
    ds = [rng.choice(pool) for _ in range(rng.randint(1, k_max))]
    total, _, _ = direct_sum(*[make(d, f) for d in ds])
    conj, _ = random_conjugate(total, rng)
    return ds, conj


# acceptance criteria -------------------------------------------------------------


def crit1_six_methods(seed: int) -> Check:
    """Six purity methods agree on 500 random (sequence, matrix set) instances."""
    rng = random.Random(seed)
    q = _kq()
    counts: Counter = Counter()
    disagree = 0
    for _ in range(500):
        f = rng.choice(SMALL_FIELDS)
        s = random_ses(q, f, rng, 5)
        hs = [random_algebra_matrix(q, f, rng.randint(1, 3), rng.randint(1, 3), rng,
                                    rng.choice((0.3, 0.5, 0.7)))
              for _ in range(rng.randint(1, 3))]
        rep = is_pure(s, hs, METHODS)
        counts[rep.verdict] += 1
        if not rep.agree:
            disagree += 1
    return Check("crit1", disagree == 0, [("instances", 500), ("pure", counts["pure"]),
                                          ("impure", counts["impure"]), ("disagreements", disagree)])


def _shape_members(n: int, f) -> list:
    out = [P(i) for i in range(n + 1)] + [I(i) for i in range(n)]
    out += [R(pt, i) for pt in points(f) for i in range(1, n + 1)]
    return out


def shape_claim(n: int, f, seed: int, samples: int = 200) -> tuple[bool, list]:
    """Members of the (aleph0, n) class: gen/rel bounds, realisation, and random L_H inside it."""
    q = _kq()
    rng = random.Random(seed)
    members = _shape_members(n, f)
    worst = 0
    bounds_ok = True
    for d in members:
        g = gen_rel(make(d, f))
        bounds_ok &= g.gen <= n and g.rel <= 2 * n + 1
        worst = max(worst, g.rel)
    sym = ind_of_shape(ShapeFamily(None, n), f)
    outside = 0
    for _ in range(samples):
        h = random_algebra_matrix(q, f, rng.randint(1, 2 * n + 3), n, rng, rng.choice((0.3, 0.5)))
        outside += sum(d not in sym for d in ind_set([h], seed))
    # every member is a summand of some L_H with H of shape (2n+1) x n
    realised = sum(d in ind_set([_pad(presentation_matrix(make(d, f)), 2 * n + 1, n)], seed)
                   for d in members)
    ok = bounds_ok and outside == 0 and realised == len(members)
    return ok, [(f"n{n}.bounds", "ok" if bounds_ok else "violated"), (f"n{n}.max_rel", worst),
                (f"n{n}.sample_outside", outside), (f"n{n}.realised", f"{realised}/{len(members)}")]


def crit2_shape_bounds(seed: int) -> Check:
    ok, det = True, []
    for n in (1, 2):
        good, d = shape_claim(n, GF(5), seed)
        ok &= good
        det += d
    return Check("crit2", ok, det)


def s4_claim(f) -> tuple[bool, list]:
    """The 1x1 matrices a + mu b and b realise every degree-one point, with no other summands."""
    s4 = [_one_by_one(f"a+{mu}*b", f) for mu in f.elements()] + [_one_by_one("b", f)]
    found = set()
    extra = set()
    for h in s4:
        for d in ind_set([h]):
            (found if d.family == "R" and d.n == 1 else extra).add(d)
    hit = {d.point for d in found}
    ok = hit == set(points(f)) and extra <= {P(0), P(1)}
    return ok, [("points_realised", f"{len(hit)}/{len(points(f))}"),
                ("other_summands", " ".join(map(str, sorted(extra))) or "none")]


def literal_matches(f) -> tuple[int, int]:
    """How many mu give L_(a + mu b) = R[mu,1] + P0 (plus the b case against R[inf,1] + P0)."""
    hits = sum(_multiset(construct_L(_one_by_one(f"a+{mu}*b", f))) == Counter({R(elem(mu)): 1, P(0): 1})
               for mu in f.elements())
    hits += _multiset(construct_L(_one_by_one("b", f))) == Counter({R(INF): 1, P(0): 1})
    return hits, len(list(f.elements())) + 1


def compare_claim(n: int, f, seed: int) -> tuple[bool, list]:
    """(1,1)-purity is strictly weaker than (aleph0, n)-purity, witnessed by I0."""
    fwd = implies(ShapeFamily(1, 1), ShapeFamily(None, n), f, seed)
    back = implies(ShapeFamily(None, n), ShapeFamily(1, 1), f, seed)
    s4 = MatrixSet([_one_by_one(f"a+{mu}*b", f) for mu in f.elements()] + [_one_by_one("b", f)])
    conc = implies(s4, ShapeFamily(None, n), f, seed)
    s4_plus = ind_of_shape(ShapeFamily(1, 1), f).union(ClassDescriptor.of(f, [P(0), P(1)]))
    i0_missing = I(0) in ind_of_shape(ShapeFamily(None, n), f) and I(0) not in s4_plus
    # for n = 1, I0 is the only missing member, so it is the witness
    ok = not fwd and bool(back) and not conc and i0_missing
    if n == 1:
        ok = ok and str(fwd.witness) == "I0" and str(conc.witness) == "I0"
    return ok, [("s4_implies_shape", bool(fwd)), ("witness", fwd.witness),
                ("shape_implies_s4", bool(back)), ("concrete_s4_witness", conc.witness),
                ("i0_missing_from_s4", i0_missing)]


def _pad(h: AlgebraMatrix, rows: int, cols: int) -> AlgebraMatrix:
    if h.n > rows or h.m > cols:
        raise ValueError("matrix larger than requested shape")
    z = AlgebraElement.zero(h.quiver, h.field)
    entries = [list(r) + [z] * (cols - h.m) for r in h.entries]
    entries += [[z] * cols for _ in range(rows - h.n)]
    return AlgebraMatrix(h.quiver, h.field, entries, rows, cols)


def crit3_literal(seed: int) -> Check:
    """L_(a + lam b) against R[lam,1] + P0 for lam in GF(7), and L_(b) against R[inf,1] + P0."""
    f = GF(7)
    cases = [(str(lam), f"a+{lam}*b", R(elem(lam))) for lam in range(7)] + [("b", "b", R(INF))]
    observed, misses = [], 0
    for label, text, want in cases:
        got = _multiset(construct_L(_one_by_one(text, f)))
        misses += got != Counter({want: 1, P(0): 1})
        observed.append(f"{label}:{_fmt_multiset(got)}")
    return Check("crit3", misses == 0, [("matches", len(cases) - misses), ("mismatches", misses),
                                        ("observed", "; ".join(observed))])


def crit3_corrected(seed: int) -> Check:
    """Observed law: L_(a + lam b) = R[-1/lam,1] + P0, L_(a) = R[inf,1] + P0, L_(b) = R[0,1] + P0."""
    f = GF(7)
    bad = 0
    seen = set()
    for lam in range(1, 7):
        got = _multiset(construct_L(_one_by_one(f"a+{lam}*b", f)))
        pt = elem(f(-f.inv(lam)))
        bad += got != Counter({R(pt): 1, P(0): 1})
        seen.add(pt)
    bad += _multiset(construct_L(_one_by_one("a", f))) != Counter({R(INF): 1, P(0): 1})
    bad += _multiset(construct_L(_one_by_one("b", f))) != Counter({R(elem(0)): 1, P(0): 1})
    seen |= {INF, elem(0)}
    every_point = seen == set(points(f))
    return Check("crit3_corrected", bad == 0 and every_point,
                 [("mismatches", bad), ("all_points_hit", every_point)])


def crit4_compare(seed: int) -> Check:
    f = GF(5)
    ok, det = compare_claim(1, f, seed)
    g = gen_rad_right_projective(f)
    return Check("crit4", ok and g == 2, det + [("gen_rad_right_projective", g)])


def gen_rad_right_projective(f) -> int:
    """gen of the radical of the right projective with dimension vector (1, 2)."""
    q = _kq()
    for v in range(q.num_vertices):
        pv = projective(q, f, v, RIGHT)
        if pv.dims == (1, 2):
            rad = radical(pv)
            sub, _ = submodule_generated(pv, [(u, rad[u]) for u in range(len(rad)) if rad[u].cols])
            return gen_rel(sub).gen
    raise AssertionError("no right projective with dimension vector (1, 2)")


def _cartan(q) -> list[list[int]]:
    """Column j is the dimension vector of the left projective at vertex j (path counts)."""
    nv = q.num_vertices
    return [[len(q.paths_between(j, i)) for j in range(nv)] for i in range(nv)]


def coxeter_matrix(q) -> list[list[Fraction]]:
    """``-C^T C^-1``, computed over the rationals from path counts alone."""
    c = Mat.from_rows(QQ, _cartan(q))
    return (-(c.T @ inverse(c))).tolist()


def _apply(phi, dims) -> tuple:
    return tuple(int(sum(phi[i][j] * dims[j] for j in range(len(dims)))) for i in range(len(dims)))


def crit5_translate(seed: int) -> Check:
    rng = random.Random(seed)
    f5 = GF(5)
    q = _kq()
    det = []
    # Tr Tr on projective-free modules
    trtr_bad = 0
    for _ in range(100):
        f = rng.choice(SMALL_FIELDS)
        pieces = [d for d in _random_pool(f, 2) if d.family != "P" or d.n >= 2]
        ds = [rng.choice(pieces) for _ in range(rng.randint(1, 2))]
        m, _ = random_conjugate(direct_sum(*[make(d, f) for d in ds])[0], rng)
        if not is_isomorphic(transpose(transpose(m)), m):
            trtr_bad += 1
    det.append(("trtr_failures", trtr_bad))
    proj_ok = all(ar_translate(projective(q, f5, v)).total == 0 for v in range(2))
    det.append(("tau_projectives_zero", proj_ok))
    reg_ok = all(is_isomorphic(ar_translate(make(R(pt), f5)), make(R(pt), f5)) for pt in points(f5))
    det.append(("tau_regular_fixed", reg_ok))
    phi = coxeter_matrix(q)
    cox_ok = True
    for n in range(4):
        ti = ar_translate(make(I(n), f5))
        tp = ar_translate(make(P(n + 2), f5))
        cox_ok &= classify(ti) == I(n + 2) and ti.dims == _apply(phi, make(I(n), f5).dims)
        cox_ok &= classify(tp) == P(n) and tp.dims == _apply(phi, make(P(n + 2), f5).dims)
    det.append(("coxeter", cox_ok))
    inj = {I(0), I(1)}
    law_bad = 0
    for _ in range(100):
        f = rng.choice(SMALL_FIELDS)
        h = random_algebra_matrix(q, f, rng.randint(1, 3), rng.randint(1, 3), rng, rng.choice((0.3, 0.5)))
        a = _multiset(dual(construct_D(h)))
        b = _multiset(ar_translate(construct_L(h)))
        for c in (a, b):
            for d in inj:
                c.pop(d, None)
        law_bad += a != b
    det.append(("tau_L_vs_dual_D_failures", law_bad))
    return Check("crit5", trtr_bad == 0 and proj_ok and reg_ok and cox_ok and law_bad == 0, det)


def _without_projectives(c: Counter) -> Counter:
    return Counter({d: k for d, k in c.items() if d not in (P(0), P(1))})


def crit6_presentations(seed: int) -> Check:
    rng = random.Random(seed)
    q = _kq()
    transpose_bad = 0
    for _ in range(50):
        f = rng.choice(SMALL_FIELDS)
        m = rng.randint(1, 4)
        h = random_algebra_matrix(q, f, 1, m, rng, rng.choice((0.3, 0.5, 0.7)))
        tr = transpose(construct_D(h))
        # h itself is a one-relation, m-generator presentation of Tr(D_h) up to projectives
        same = _without_projectives(_multiset(tr)) == _without_projectives(_multiset(construct_L(h)))
        transpose_bad += not (gen_rel(tr).gen <= m and same and tr.side == LEFT)
    summand_bad = 0
    for _ in range(200):
        f = rng.choice(SMALL_FIELDS)
        pool = _random_pool(f, 3)
        ds = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
        sub = [d for d in ds if rng.random() < 0.5] or ds[:1]
        m, _ = random_conjugate(direct_sum(*[make(d, f) for d in ds])[0], rng)
        n = direct_sum(*[make(d, f) for d in sub])[0]
        gm, gn = gen_rel(m), gen_rel(n)
        summand_bad += not (gn.gen <= gm.gen and gn.rel <= gm.rel + gm.gen)
    return Check("crit6", transpose_bad == 0 and summand_bad == 0,
                 [("transpose_cases", 50), ("transpose_failures", transpose_bad), ("pairs", 200),
                  ("summand_failures", summand_bad)])


def crit7_krull_schmidt(seed: int) -> Check:
    rng = random.Random(seed)
    bad = 0
    for k in range(200):
        f = rng.choice(SMALL_FIELDS)
        ds, m = _random_sum(f, rng)
        got: Counter = Counter()
        dec = decompose(m, seed + k)
        for rep, mult in dec.classes:
            got[classify(rep)] += mult
        bad += got != Counter(ds) or not dec.verify()
    return Check("crit7", bad == 0, [("sums", 200), ("mismatches", bad)])


CLOSURE_BATTERY = [
    # input, closure, definable, generic (None: not definable)
    ("P3 I0 R[2,1]", "P3 I0 R[2,1]", True, False),
    ("P0 P1", "P0 P1", True, False),
    ("R[inf,3] adic[1]", "R[inf,3] adic[1]", True, False),
    ("tube[0]>=1", "adic[0] tube[0]>=1", False, None),
    ("tube[inf]>=2", "adic[inf] tube[inf]>=2", False, None),
    ("I*>=0", "generic I*>=0 prufer[*]", True, True),
    ("I*>=3", "generic I*>=3 prufer[*]", True, True),
    ("P*>=2", "P*>=2", False, None),
    ("I*>=1 P0 R[3,2]", "P0 R[3,2] generic I*>=1 prufer[*]", True, True),
    ("tube[0]>=1 tube[2]>=3 I0", "I0 adic[0] adic[2] tube[0]>=1 tube[2]>=3", False, None),
    ("I*>=0 tube[1]>=1 P*>=0", "adic[1] generic P*>=0 I*>=0 tube[1]>=1 prufer[*]", False, None),
    ("R[x^2+2,1] I2 prufer[3]", "R[x^2+2,1] I2 prufer[3]", True, False),
]


def crit8_closure(seed: int) -> Check:
    f = GF(5)
    bad = []
    for text, want, definable, generic in CLOSURE_BATTERY:
        c = parse_class(text, f)
        got = fsc_closure(c)
        try:
            gen = generic_status(c)
        except NotDefinable:
            gen = None
        if str(got) != str(parse_class(want, f)) or is_definable(c) != definable or gen != generic:
            bad.append(text)
    return Check("crit8", not bad, [("battery", len(CLOSURE_BATTERY)), ("failures", len(bad))]
                 + ([("failed", "; ".join(bad))] if bad else []))


def crit9_adjunction(seed: int) -> Check:
    rng = random.Random(seed)
    q = _kq()
    bad = 0
    for _ in range(200):
        f = rng.choice(SMALL_FIELDS)
        w = random_rep(q, f, [rng.randint(0, 3) for _ in range(2)], rng, RIGHT)
        a = random_rep(q, f, [rng.randint(0, 3) for _ in range(2)], rng, LEFT)
        bad += hom_dim(a, dual(w)) != tensor(w, a).dim
    return Check("crit9", bad == 0, [("pairs", 200), ("failures", bad)])


ACCEPTANCE: dict[str, Callable[[int], Check]] = {
    "1": crit1_six_methods,
    "2": crit2_shape_bounds,
    "3": crit3_literal,
    "4": crit4_compare,
    "5": crit5_translate,
    "6": crit6_presentations,
    "7": crit7_krull_schmidt,
    "8": crit8_closure,
    "9": crit9_adjunction,
}


# module invariants ----------------------------------------------------------------


def suite_exactlin(seed: int) -> list[Check]:
    rng = random.Random(seed)
    rn_bad = solve_bad = 0
    for f in (GF(2), GF(5), QQ):
        for _ in range(1000):
            r, c = rng.randint(0, 5), rng.randint(0, 5)
            a = Mat.random(f, r, c, rng)
            rn_bad += rank(a) + kernel_basis(a).cols != c
            x = Mat.random(f, c, 1, rng)
            b = a @ x
            sol = solve(a, b)
            solve_bad += a @ sol.particular != b or not (a @ sol.kernel).is_zero()
    agree_bad = 0
    for _ in range(200):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.choice((-1, 0, 1)) for _ in range(c)] for _ in range(r)]
        agree_bad += rank(Mat.from_rows(GF(10007), rows)) != rank(Mat.from_rows(QQ, rows))
    return [Check("exactlin.rank_nullity", rn_bad == 0, [("failures", rn_bad)]),
            Check("exactlin.solve", solve_bad == 0, [("failures", solve_bad)]),
            Check("exactlin.gf_q_rank", agree_bad == 0, [("failures", agree_bad)])]


def suite_quiver(seed: int) -> list[Check]:
    rng = random.Random(seed)
    q = _kq()
    bad = 0
    for _ in range(100):
        f = rng.choice(SMALL_FIELDS)
        m = random_rep(q, f, [rng.randint(0, 3) for _ in range(2)], rng)
        x = random_algebra_matrix(q, f, 1, 1, rng)[0, 0]
        y = random_algebra_matrix(q, f, 1, 1, rng)[0, 0]
        bad += element_action(x * y, m) != element_action(x, m) @ element_action(y, m)
    free_bad = 0
    for r in range(4):
        f = GF(3)
        parts = [free_module(q, f, 1) for _ in range(r)]
        s = direct_sum(*parts)[0] if parts else free_module(q, f, 0)
        free_bad += not is_isomorphic(free_module(q, f, r), s)
    return [Check("quiver.action_multiplicative", bad == 0, [("failures", bad)]),
            Check("quiver.free_additive", free_bad == 0, [("failures", free_bad)])]


def suite_repmod(seed: int) -> list[Check]:
    rng = random.Random(seed)
    q = _kq()
    proj_bad = add_bad = 0
    for _ in range(200):
        f = rng.choice(SMALL_FIELDS)
        m = random_rep(q, f, [rng.randint(0, 4) for _ in range(2)], rng)
        proj_bad += any(hom_dim(projective(q, f, v), m) != m.dims[v] for v in range(2))
    for _ in range(50):
        f = rng.choice(SMALL_FIELDS)
        a, b, c = (random_rep(q, f, [rng.randint(0, 2) for _ in range(2)], rng) for _ in range(3))
        w = random_rep(q, f, [rng.randint(0, 2) for _ in range(2)], rng, RIGHT)
        bc = direct_sum(b, c)[0]
        add_bad += hom_dim(a, bc) != hom_dim(a, b) + hom_dim(a, c)
        add_bad += tensor(w, bc).dim != tensor(w, b).dim + tensor(w, c).dim
    gen_bad = 0
    for _ in range(50):
        f = rng.choice(SMALL_FIELDS)
        cols = rng.randint(1, 3)
        k = random_algebra_matrix(q, f, rng.randint(1, 3), cols, rng)
        g_r = gen_rel(free_module(q, f, 1)).Gen
        gl = gen_rel(construct_L(k))
        # L_K is a quotient of R^cols, and Gen(M) <= Gen(R) * gen(M)
        gen_bad += not (gl.gen <= cols and gl.Gen <= g_r * gl.gen)
    return [Check("repmod.projective_hom", proj_bad == 0, [("failures", proj_bad)]),
            Check("repmod.additivity", add_bad == 0, [("failures", add_bad)]),
            Check("repmod.warfield_bound", gen_bad == 0, [("failures", gen_bad)]),
            crit9_adjunction(seed + 1),
            crit6_presentations(seed + 2)]


def suite_constructions(seed: int) -> list[Check]:
    rng = random.Random(seed)
    q = _kq()
    bad = 0
    for _ in range(100):
        f = rng.choice(SMALL_FIELDS)
        h = random_algebra_matrix(q, f, rng.randint(1, 3), rng.randint(1, 3), rng)
        bad += construct_L(h).total != _l_dim_oracle(h)
    return [Check("constructions.dimension", bad == 0, [("failures", bad)]), crit5_translate(seed)]


def _l_dim_oracle(h: AlgebraMatrix) -> int:
    """dim R^m minus the dimension of the span of the row-module {x H}."""
    q, f = h.quiver, h.field
    paths = q.paths
    index = {(p.source, p.target, p.arrows): i for i, p in enumerate(paths)}
    cols = []
    for i in range(h.n):
        for p in paths:  # x = p e_i in row i, times H
            vec = [0] * (len(paths) * h.m)
            for j in range(h.m):
                for path, c in (AlgebraElement.path(q, f, p) * h[i, j]).terms:
                    k = index[(path.source, path.target, path.arrows)]
                    vec[j * len(paths) + k] = f(vec[j * len(paths) + k] + c)
            cols.append(vec)
    span = rank(Mat.from_rows(f, cols, len(cols), len(paths) * h.m)) if cols else 0
    return len(paths) * h.m - span


def suite_decomp(seed: int) -> list[Check]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(30):
        f = rng.choice(SMALL_FIELDS)
        _, m = _random_sum(f, rng)
        bad += not all(is_local_probe(p, 50, seed) for p in decompose(m, seed).pieces)
    f = GF(3)
    _, m = _random_sum(f, random.Random(seed))
    a, b = decompose(m, seed), decompose(m, seed)
    det_ok = [x.mats for x in a.pieces] == [x.mats for x in b.pieces]
    return [crit7_krull_schmidt(seed),
            Check("decomp.local_probe", bad == 0, [("failures", bad)]),
            Check("decomp.deterministic", det_ok)]


def suite_kronecker(seed: int) -> list[Check]:
    rng = random.Random(seed)
    rt_bad = conj_bad = 0
    for f in (GF(2), GF(5), GF(7)):
        for n in range(7):
            ds = [P(n), I(n)] + ([R(pt, n) for pt in points(f)] if n else [])
            for d in ds:
                m = make(d, f)
                rt_bad += classify(m) != d
                conj_bad += classify(random_conjugate(m, rng)[0]) != d
    q = _kq()
    tri_bad = 0
    for _ in range(500):
        f = rng.choice(SMALL_FIELDS)
        d1 = rng.randint(0, 5)
        d2 = rng.randint(0, min(5, 10 - d1))
        m = random_rep(q, f, [d1, d2], rng)
        try:
            if m.total:
                for rep, _ in decompose(m, seed).classes:
                    classify(rep)
        except ValueError:
            tri_bad += 1
    f = GF(5)
    brick_ok = all(hom_dim(make(R(x), f), make(R(y), f)) == (1 if x == y else 0)
                   for x in points(f) for y in points(f))
    return [Check("kronecker.round_trip", rt_bad == 0, [("failures", rt_bad)]),
            Check("kronecker.conjugation", conj_bad == 0, [("failures", conj_bad)]),
            Check("kronecker.trichotomy", tri_bad == 0, [("samples", 500), ("failures", tri_bad)]),
            Check("kronecker.regular_bricks", brick_ok)]


def suite_purity(seed: int) -> list[Check]:
    rng = random.Random(seed)
    q = _kq()
    dual_bad = mono_bad = pad_bad = 0
    for _ in range(100):
        f = rng.choice(SMALL_FIELDS)
        s = random_ses(q, f, rng, 4)
        t_mats = [random_algebra_matrix(q, f, rng.randint(1, 2), rng.randint(1, 2), rng)
                  for _ in range(rng.randint(1, 2))]
        s_mats = [random_algebra_matrix(q, f, rng.randint(1, 2), rng.randint(1, 2), rng)]
        pure = is_pure(s, t_mats, ("hom",)).verdict == "pure"
        dual_bad += pure != _dual_purity(s, t_mats)
        if pure and implies(t_mats, s_mats, seed=seed):
            mono_bad += is_pure(s, s_mats, ("hom",)).verdict != "pure"
        # padding by zero rows and columns adds a free summand to L_H
        h = t_mats[0]
        padded = _pad(h, h.n + 1, h.m + 1)
        pad_bad += (is_pure(s, [h], ("hom",)).verdict
                    != is_pure(s, [padded], ("hom",)).verdict)
    return [crit1_six_methods(seed),
            Check("purity.duality", dual_bad == 0, [("failures", dual_bad)]),
            Check("purity.monotone", mono_bad == 0, [("failures", mono_bad)]),
            Check("purity.padding", pad_bad == 0, [("failures", pad_bad)]),
            crit2_shape_bounds(seed)]


def _dual_purity(s, mats) -> bool:
    d = s.dual()
    return all(hom_dim(dh, d.b) == hom_dim(dh, d.a) + hom_dim(dh, d.c)
               for dh in map(construct_D, mats))


def suite_closure(seed: int) -> list[Check]:
    rng = random.Random(seed)
    f = GF(5)
    tokens = ["P0", "P2", "I0", "I3", "R[0,1]", "R[inf,2]", "adic[1]", "prufer[0]", "generic",
              "I*>=2", "P*>=3", "tube[0]>=2", "tube[inf]>=1"]
    idem_bad = mono_bad = reg_bad = 0
    for _ in range(100):
        c = parse_class(" ".join(rng.sample(tokens, rng.randint(0, 5))), f)
        bigger = c.union(parse_class(" ".join(rng.sample(tokens, rng.randint(0, 3))), f))
        cl = fsc_closure(c)
        idem_bad += str(fsc_closure(cl)) != str(cl)
        mono_bad += not fsc_closure(c).issubset(fsc_closure(bigger))
        regular = parse_class(" ".join(t for t in rng.sample(tokens, 4) if t.startswith(("R[", "tube"))), f)
        rc = fsc_closure(regular)
        reg_bad += any(d.family in ("generic", "prufer") for d in rc.members) or rc.all_prufer
    pp = parse_class("P0 P2 P*>=5", f)
    pre_ok = str(fsc_closure(pp)) == str(pp)
    inj_bad = 0
    for _ in range(20):
        ds, m = _random_sum(f, rng, 2, 2)
        basis = pinj_basis([m], seed)
        inj_bad += not {I(0), I(1)} <= set(basis)
    return [crit8_closure(seed),
            Check("closure.idempotent", idem_bad == 0, [("failures", idem_bad)]),
            Check("closure.monotone", mono_bad == 0, [("failures", mono_bad)]),
            Check("closure.regular_no_generic", reg_bad == 0, [("failures", reg_bad)]),
            Check("closure.preprojective_fixed", pre_ok),
            Check("closure.pinj_has_injectives", inj_bad == 0, [("failures", inj_bad)])]


def example_claims(n: int, f, seed: int) -> list[Check]:
    """The four claims at one field and column bound."""
    ok1, d1 = shape_claim(n, f, seed)
    ok2, d2 = s4_claim(f)
    hits, total = literal_matches(f)
    ok3, d3 = compare_claim(n, f, seed)
    g = gen_rad_right_projective(f)
    return [Check("i", ok1, d1),
            Check("ii", ok2, d2 + [("literal_mapping_matches", f"{hits}/{total}")]),
            Check("iii", ok3, d3),
            Check("iv", g == 2, [("gen_rad_right_projective", g)])]


def suite_example(seed: int) -> list[Check]:
    return [crit2_shape_bounds(seed), crit3_literal(seed), crit3_corrected(seed), crit4_compare(seed)]


def suite_acceptance(seed: int) -> list[Check]:
    return [fn(seed) for fn in ACCEPTANCE.values()] + [crit3_corrected(seed)]


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "exactlin": suite_exactlin,
    "quiver": suite_quiver,
    "repmod": suite_repmod,
    "constructions": suite_constructions,
    "decomp": suite_decomp,
    "kronecker": suite_kronecker,
    "purity": suite_purity,
    "closure": suite_closure,
    "example": suite_example,
    "acceptance": suite_acceptance,
}
