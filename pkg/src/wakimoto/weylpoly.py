"""The finite Weyl algebra A_nbar tensor U(h), the homomorphism pi_g, the
p/q polynomials, the Fock realizations F_nbar and F_{nbar,alpha}, twisted
characters and Gamma_alpha multiplicities.

Polynomials are sparse dicts {exponent tuple: Fraction}.  A WeylElement is a
dict {(x-exponents, d-exponents): h-polynomial}; the normal form has all x's
to the left of all d's, and the commutation rule is [x_a, d_b] = -delta_ab
(so d.x = x.d + 1 as operators).
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import liealg
from .errors import (EmptyWindow, ModuleMismatch, NotInNilradical,
                     NotSimpleRoot)
from .linalg import charpoly, rational_roots
from .liealg import LieElement, bracket_symbols
from .rootdata import Weight, rho, root_label

ZERO = Fraction(0)
ONE = Fraction(1)


# -- sparse polynomial helpers ------------------------------------------------

def poly_add(p, q):
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, ZERO) + c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def poly_scale(p, c):
    c = Fraction(c)
    if c == 0:
        return {}
    return {e: c * v for e, v in p.items()}


def poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, ZERO) + c1 * c2
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def poly_one(nvars):
    return {(0,) * nvars: ONE}


def poly_var(nvars, i):
    return {tuple(1 if j == i else 0 for j in range(nvars)): ONE}


def poly_eval(p, values):
    acc = ZERO
    for e, c in p.items():
        term = c
        for x, k in zip(values, e):
            if k:
                term *= x ** k
        acc += term
    return acc


# -- Weyl algebra -------------------------------------------------------------

class WeylElement:
    """Normal-form element of A_nbar tensor U(h)."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs, terms=None):
        self.rs = rs
        self.terms = {}
        if terms:
            for key, hp in terms.items():
                if hp:
                    self.terms[key] = hp

    @classmethod
    def zero(cls, rs):
        return cls(rs)

    @classmethod
    def const(cls, rs, c=1):
        npos = len(rs.positive_roots)
        z = (0,) * npos
        return cls(rs, {(z, z): {(0,) * rs.rank: Fraction(c)}})

    def __add__(self, other):
        out = dict(self.terms)
        for key, hp in other.terms.items():
            merged = poly_add(out.get(key, {}), hp)
            if merged:
                out[key] = merged
            elif key in out:
                del out[key]
        return WeylElement(self.rs, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, c):
        c = Fraction(c)
        return WeylElement(self.rs, {k: poly_scale(hp, c)
                                     for k, hp in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return "WeylElement(%s)" % (render_weyl(self),)


def weyl_mul(A, B):
    """Product in normal form; CCR [x_a, d_b] = -delta_ab, i.e. d x = x d + 1."""
    rs = A.rs
    npos = len(rs.positive_roots)
    out = {}
    for (a1, b1), h1 in A.terms.items():
        for (a2, b2), h2 in B.terms.items():
            hp = poly_mul(h1, h2)
            # reorder d^{b1} x^{a2} per variable:
            # d^b x^a = sum_k C(b,k) C(a,k) k! x^{a-k} d^{b-k}
            combos = [((), ONE)]
            for v in range(npos):
                b, a = b1[v], a2[v]
                kmax = min(a, b)
                new = []
                for ks, coef in combos:
                    for k in range(kmax + 1):
                        new.append((ks + (k,),
                                    coef * comb(b, k) * comb(a, k) * factorial(k)))
                combos = new
            for ks, coef in combos:
                xa = tuple(a1[v] + a2[v] - ks[v] for v in range(npos))
                db = tuple(b1[v] + b2[v] - ks[v] for v in range(npos))
                key = (xa, db)
                merged = poly_add(out.get(key, {}), poly_scale(hp, coef))
                if merged:
                    out[key] = merged
                elif key in out:
                    del out[key]
    return WeylElement(rs, out)


# -- series kernels -----------------------------------------------------------

def bernoulli_series(name, order):
    """Exact Taylor coefficients of the operator kernels, orders 0..order.

    Names: 't/(e^t-1)', 't*e^t/(e^t-1)', 't/(e^t-1)-1', '(e^t-1)/t'.
    Computed by inverting the series (e^t-1)/t.
    """
    base = [Fraction(1, factorial(k + 1)) for k in range(order + 1)]
    if name == "(e^t-1)/t":
        return base
    # invert: K0 * base = 1
    k0 = [ONE]
    for m in range(1, order + 1):
        s = sum((k0[j] * base[m - j] for j in range(m)), ZERO)
        k0.append(-s)
    if name == "t/(e^t-1)":
        return k0
    if name == "t/(e^t-1)-1":
        out = list(k0)
        out[0] -= 1
        return out
    if name == "t*e^t/(e^t-1)":
        # t e^t/(e^t-1) = t/(1 - e^{-t}) = K0(-t)
        return [c if k % 2 == 0 else -c for k, c in enumerate(k0)]
    raise ValueError("unknown kernel %r" % (name,))


# -- C[nbar] tensor g and the series machinery --------------------------------

class PolyGValued:
    """Element of C[nbar] tensor g: map basis symbol -> polynomial in x_alpha."""

    __slots__ = ("rs", "components")

    def __init__(self, rs, components=None):
        self.rs = rs
        self.components = {s: p for s, p in (components or {}).items() if p}

    @classmethod
    def from_lie(cls, a):
        npos = len(a.rs.positive_roots)
        one = (0,) * npos
        return cls(a.rs, {s: {one: c} for s, c in a.coeffs.items()})

    def is_zero(self):
        return not self.components

    def scale_add(self, other, c):
        out = dict(self.components)
        for s, p in other.components.items():
            merged = poly_add(out.get(s, {}), poly_scale(p, c))
            if merged:
                out[s] = merged
            elif s in out:
                del out[s]
        return PolyGValued(self.rs, out)


def ad_u(elem):
    """ad(u) with u = sum_gamma x_gamma f_gamma, acting on C[nbar] tensor g."""
    rs = elem.rs
    npos = len(rs.positive_roots)
    out = {}
    for sym, p in elem.components.items():
        for g in range(npos):
            br = bracket_symbols(rs, ("f", g), sym)
            if not br:
                continue
            xp = poly_mul(poly_var(npos, g), p)
            for s2, c2 in br.items():
                merged = poly_add(out.get(s2, {}), poly_scale(xp, c2))
                if merged:
                    out[s2] = merged
                elif s2 in out:
                    del out[s2]
    return PolyGValued(rs, out)


def apply_kernel(coeffs, elem):
    """sum_i coeffs[i] ad(u)^i elem, truncated when the power vanishes."""
    acc = PolyGValued(elem.rs).scale_add(elem, coeffs[0])
    power = elem
    for i in range(1, len(coeffs)):
        power = ad_u(power)
        if power.is_zero():
            break
        acc = acc.scale_add(power, coeffs[i])
    else:
        if not ad_u(power).is_zero():
            raise RuntimeError("kernel order too small for nilpotency index")
    return acc


def _order_bound(rs):
    # ad(u) raises height by at least 1 on the e->h->f chain; 2n is safe.
    return 2 * rs.n + 2


def exp_minus_ad_u(a):
    rs = a.rs
    N = _order_bound(rs)
    coeffs = [Fraction((-1) ** i, factorial(i)) for i in range(N)]
    return apply_kernel(coeffs, PolyGValued.from_lie(a))


def T_poly(a):
    """T(a,x) = [t/(e^t-1)](ad u) a, for a in nbar."""
    if a.support_kinds() - {"f"}:
        raise NotInNilradical("T_poly needs a in nbar")
    rs = a.rs
    k0 = bernoulli_series("t/(e^t-1)", _order_bound(rs))
    out = apply_kernel(k0, PolyGValued.from_lie(a))
    if {s[0] for s in out.components} - {"f"}:
        raise RuntimeError("kernel did not preserve nbar")
    return out


def pi_g(a):
    """The finite free-field homomorphism, basis elements -> WeylElement.

    pi_g(a) = -sum_alpha [K1(ad u)(e^{-ad u}a)_nbar]_alpha d_alpha
              + (e^{-ad u}a)_h,  K1(t) = t e^t/(e^t-1).
    """
    rs = a.rs
    npos = len(rs.positive_roots)
    v = exp_minus_ad_u(a)
    nbar = PolyGValued(rs, {s: p for s, p in v.components.items() if s[0] == "f"})
    hpart = {s: p for s, p in v.components.items() if s[0] == "h"}
    k1 = bernoulli_series("t*e^t/(e^t-1)", _order_bound(rs))
    w = apply_kernel(k1, nbar)
    terms = {}
    zero_h = (0,) * rs.rank

    def add(xexp, dexp, hp):
        key = (xexp, dexp)
        merged = poly_add(terms.get(key, {}), hp)
        if merged:
            terms[key] = merged
        elif key in terms:
            del terms[key]

    for (kind, alpha), p in w.components.items():
        assert kind == "f"
        dexp = tuple(1 if t == alpha else 0 for t in range(npos))
        for e, c in p.items():
            add(e, dexp, {zero_h: -c})
    zero_d = (0,) * npos
    for (kind, i), p in hpart.items():
        hvar = tuple(1 if t == i else 0 for t in range(rs.rank))
        for e, c in p.items():
            add(e, zero_d, {hvar: c})
    return WeylElement(rs, terms)


def pi_g_elem(a):
    """pi_g extended linearly to an arbitrary LieElement."""
    rs = a.rs
    out = WeylElement.zero(rs)
    for s, c in a.coeffs.items():
        out = out + c * pi_g(LieElement.basis(rs, s))
    return out


def pq_polynomials(rs, gamma_idx):
    """(p^gamma, q^gamma) for a simple root gamma; maps alpha -> polynomial."""
    alpha = rs.positive_roots[gamma_idx]
    if alpha.height != 1:
        raise NotSimpleRoot("gamma must be simple")
    N = _order_bound(rs)
    k0m1 = bernoulli_series("t/(e^t-1)-1", N)
    k1 = bernoulli_series("t*e^t/(e^t-1)", N)
    fel = PolyGValued.from_lie(LieElement.basis(rs, ("f", gamma_idx)))
    pres = apply_kernel(k0m1, fel)
    p_map = {s[1]: p for s, p in pres.components.items() if s[0] == "f"}
    eel = exp_minus_ad_u(LieElement.basis(rs, ("e", gamma_idx)))
    nbar = PolyGValued(rs, {s: p for s, p in eel.components.items() if s[0] == "f"})
    qres = apply_kernel(k1, nbar)
    q_map = {s[1]: p for s, p in qres.components.items() if s[0] == "f"}
    return p_map, q_map


def verify_pi_hom(n):
    """Check pi_g([a,b]) = [pi_g(a), pi_g(b)] for all basis pairs; returns
    the list of failing pairs (expected empty)."""
    from .rootdata import build_root_system

    rs = build_root_system(n)
    syms = liealg.basis_symbols(rs)
    images = {s: pi_g(LieElement.basis(rs, s)) for s in syms}
    failures = []
    for s1 in syms:
        for s2 in syms:
            lhs = pi_g_elem(liealg.bracket(LieElement.basis(rs, s1),
                                           LieElement.basis(rs, s2)))
            rhs = weyl_mul(images[s1], images[s2]) - weyl_mul(images[s2], images[s1])
            if lhs != rhs:
                failures.append((s1, s2))
    return failures


# -- Fock realizations --------------------------------------------------------

class FockVector:
    """Vector of F_nbar or F_{nbar,alpha}, twisted by C_{lambda+2rho}.

    Monomials are exponent tuples over the positive roots.  For kind 'V'
    (F_nbar) the exponent at position gamma is the d_gamma power.  For kind
    ('GT', alpha) the exponent at position alpha is the x_alpha power and
    at gamma != alpha the d_gamma power.
    """

    __slots__ = ("rs", "kind", "lam", "terms")

    def __init__(self, rs, kind, lam, terms=None):
        self.rs = rs
        self.kind = kind
        self.lam = lam
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def vacuum(cls, rs, kind, lam):
        return cls(rs, kind, lam, {(0,) * len(rs.positive_roots): ONE})

    def __add__(self, other):
        if self.kind != other.kind or self.lam != other.lam:
            raise ModuleMismatch("incompatible Fock vectors")
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, ZERO) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return FockVector(self.rs, self.kind, self.lam, out)

    def __rmul__(self, c):
        return FockVector(self.rs, self.kind, self.lam,
                          poly_scale(self.terms, c))

    def __eq__(self, other):
        return (isinstance(other, FockVector) and self.kind == other.kind
                and self.lam == other.lam and self.terms == other.terms)

    def is_zero(self):
        return not self.terms

    def weight_of(self, mono):
        """h-weight of a monomial (includes the lambda twist)."""
        rs = self.rs
        wt = self.lam
        if self.kind == "V":
            for g, b in enumerate(mono):
                if b:
                    wt = wt - b * rs.root_to_weight(rs.positive_roots[g])
        else:
            alpha = self.kind[1]
            aw = rs.root_to_weight(rs.positive_roots[alpha])
            wt = wt + (mono[alpha] + 1) * aw
            for g, b in enumerate(mono):
                if g != alpha and b:
                    wt = wt - b * rs.root_to_weight(rs.positive_roots[g])
        return wt


def _lam_2rho_values(rs, lam):
    r2 = lam + 2 * rho(rs)
    return [r2.coords[i] for i in range(rs.rank)]


def act_F(w, v):
    """Apply a WeylElement to a Fock vector.

    On F_nbar: d_gamma multiplies, x_gamma acts as -d/d(d_gamma).
    On F_{nbar,alpha}: x_alpha multiplies, d_alpha = d/dx_alpha, the other
    x_gamma act as -d/d(d_gamma), the other d_gamma multiply.  h acts on the
    twist by (lambda+2rho)(h).
    """
    if w.rs.n != v.rs.n:
        raise ModuleMismatch("root system mismatch")
    rs = v.rs
    hvals = _lam_2rho_values(rs, v.lam)
    alpha = None if v.kind == "V" else v.kind[1]
    out = {}
    for (xa, db), hp in w.terms.items():
        scal = poly_eval(hp, hvals)
        if scal == 0:
            continue
        for mono, c in v.terms.items():
            coef = c * scal
            m = list(mono)
            ok = True
            # d-part first (the operator x^a d^b acts d's-first)
            for g, b in enumerate(db):
                if not b:
                    continue
                if g == alpha:
                    # d/dx_alpha, b times
                    for _ in range(b):
                        if m[g] == 0:
                            ok = False
                            break
                        coef *= m[g]
                        m[g] -= 1
                    if not ok:
                        break
                else:
                    m[g] += b
            if not ok:
                continue
            # x-part
            for g, a in enumerate(xa):
                if not a:
                    continue
                if g == alpha:
                    m[g] += a
                else:
                    for _ in range(a):
                        if m[g] == 0:
                            ok = False
                            break
                        coef *= -m[g]
                        m[g] -= 1
                    if not ok:
                        break
            if not ok or coef == 0:
                continue
            key = tuple(m)
            val = out.get(key, ZERO) + coef
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return FockVector(rs, v.kind, v.lam, out)


# -- characters ---------------------------------------------------------------

def window_box(rs, lam, radius):
    """Predicate: is mu inside the box |(mu - lam) root coordinates| <= radius?
    Returns a function Weight -> bool and a root-coordinate extractor."""
    if radius <= 0:
        raise EmptyWindow("window radius must be positive")
    inv_cartan = _inverse_cartan(rs)

    def root_coords(mu):
        d = mu - lam
        return tuple(
            sum((inv_cartan[i][j] * d.coords[j] for j in range(rs.rank)), ZERO)
            for i in range(rs.rank)
        )

    def inside(mu):
        return all(abs(c) <= radius for c in root_coords(mu))

    return inside, root_coords


@lru_cache(maxsize=None)
def _inverse_cartan_cached(n):
    from .rootdata import build_root_system
    rs = build_root_system(n)
    from .rootdata import _invert
    return _invert([[Fraction(x) for x in row] for row in rs.cartan_matrix])


def _inverse_cartan(rs):
    return _inverse_cartan_cached(rs.n)


def count_root_decompositions(rs, target, gammas):
    """Number of ways target (integer coeff tuple) = sum b_g * gamma_g, b >= 0."""
    gammas = list(gammas)

    def rec(idx, remaining):
        if all(c == 0 for c in remaining):
            return 1
        if idx == len(gammas):
            return 0
        if any(c < 0 for c in remaining):
            return 0
        g = gammas[idx].coeffs
        # max multiple of g fitting in remaining
        bmax = min(remaining[t] // g[t] for t in range(len(g)) if g[t])
        total = 0
        for b in range(bmax + 1):
            total += rec(idx + 1, tuple(remaining[t] - b * g[t]
                                        for t in range(len(g))))
        return total

    return rec(0, tuple(target))


def twist_character(rs, lam, alpha_idx, radius, kcap=60):
    """Character of T_alpha M(lambda) inside the window.

    Returns {Weight: mult} where mult is an int or ('ge', n) when the
    window multiplicity is not finite (possible only for non-simple alpha).
    char = e^lam (sum_{k>=1} e^{k alpha}) prod_{gamma != alpha}(1-e^{-gamma})^{-1}.
    """
    alpha = rs.positive_roots[alpha_idx]
    others = [g for i, g in enumerate(rs.positive_roots) if i != alpha_idx]
    simple = alpha.height == 1
    table = {}
    flagged = set()
    aw = rs.root_to_weight(alpha)

    def contributions(k):
        """weights hit by e^{k alpha} * monomials in e^{-gamma}, with counts,
        restricted to the window box."""
        out = {}
        # mu = lam + k*alpha - sum b_g gamma; root coords of mu - lam are
        # k*alpha.coeffs - sum b_g g.coeffs, each in [-radius, radius].
        base = tuple(k * c for c in alpha.coeffs)

        def rec(idx, cur):
            if idx == len(others):
                if all(abs(c) <= radius for c in cur):
                    wt = lam + sum(
                        (Fraction(cur[i]) * rs.root_to_weight(rs.simple_roots[i])
                         for i in range(rs.rank)),
                        Weight((0,) * rs.rank),
                    )
                    out[wt] = out.get(wt, 0) + 1
                return
            g = others[idx].coeffs
            # b bounded: subtracting b*g must keep all coords >= -radius
            bmax = min(
                (cur[t] + radius) // g[t] for t in range(rs.rank) if g[t]
            )
            for b in range(int(bmax) + 1):
                rec(idx + 1, tuple(cur[t] - b * g[t] for t in range(rs.rank)))

        rec(0, base)
        return out

    kmax = kcap if not simple else (2 * radius + 2 * rs.n)
    for k in range(1, kmax + 1):
        for wt, c in contributions(k).items():
            table[wt] = table.get(wt, 0) + c
    if not simple:
        # one step past the cap: any weight still being hit grows forever
        for wt in contributions(kmax + 1):
            flagged.add(wt)
    return {wt: (("ge", c) if wt in flagged else c) for wt, c in table.items()}


def fock_character(rs, lam, kind, radius, kcap=60):
    """Character of the Fock realization (F_nbar or F_{nbar,alpha}) inside the
    window, by direct monomial enumeration; same flag convention as
    twist_character."""
    table = {}
    flagged = set()
    if kind == "V":
        # monomials prod d^{b_g}: weight lam - sum b_g gamma
        def rec(idx, cur):
            if idx == len(rs.positive_roots):
                wt = _wt_from_root_coords(rs, lam, cur)
                table[wt] = table.get(wt, 0) + 1
                return
            g = rs.positive_roots[idx].coeffs
            bmax = min((cur[t] + radius) // g[t] for t in range(rs.rank) if g[t])
            for b in range(int(bmax) + 1):
                rec(idx + 1, tuple(cur[t] - b * g[t] for t in range(rs.rank)))

        rec(0, (0,) * rs.rank)
        return dict(table)
    alpha_idx = kind[1]
    alpha = rs.positive_roots[alpha_idx]
    simple = alpha.height == 1
    others = [i for i in range(len(rs.positive_roots)) if i != alpha_idx]
    amax = kcap if not simple else (2 * radius + 2 * rs.n)

    def sweep(a, record_flag):
        base = tuple((a + 1) * c for c in alpha.coeffs)

        def rec(idx, cur):
            if idx == len(others):
                if all(abs(c) <= radius for c in cur):
                    wt = _wt_from_root_coords(rs, lam, cur)
                    if record_flag:
                        flagged.add(wt)
                    else:
                        table[wt] = table.get(wt, 0) + 1
                return
            g = rs.positive_roots[others[idx]].coeffs
            bmax = min((cur[t] + radius) // g[t] for t in range(rs.rank) if g[t])
            for b in range(int(bmax) + 1):
                rec(idx + 1, tuple(cur[t] - b * g[t] for t in range(rs.rank)))

        rec(0, base)

    for a in range(amax):
        sweep(a, False)
    if not simple:
        sweep(amax, True)
    return {wt: (("ge", c) if wt in flagged else c) for wt, c in table.items()}


def _wt_from_root_coords(rs, lam, coords):
    acc = lam
    for i, c in enumerate(coords):
        if c:
            acc = acc + Fraction(c) * rs.root_to_weight(rs.simple_roots[i])
    return acc


# -- Gamma_alpha multiplicities ------------------------------------------------

def gamma_alpha_multiplicity(rs, lam, alpha_idx, mu, D):
    """Eigenvalue multiplicities of c_alpha on the degree-<=D slice of the
    mu-weight space of F_{nbar,alpha} tensor C_{lambda+2rho}."""
    from .errors import EmptyWeightSpace

    kind = ("GT", alpha_idx)
    probe = FockVector(rs, kind, lam)
    basis = []
    npos = len(rs.positive_roots)

    def rec(idx, mono, deg):
        if idx == npos:
            if probe.weight_of(tuple(mono)) == mu:
                basis.append(tuple(mono))
            return
        for e in range(D - deg + 1):
            mono.append(e)
            rec(idx + 1, mono, deg + e)
            mono.pop()

    rec(0, [], 0)
    if not basis:
        raise EmptyWeightSpace("mu is not a weight of the truncated slice")
    index = {m: i for i, m in enumerate(basis)}
    cas = liealg.casimir_s_alpha(rs, alpha_idx)
    op = WeylElement.zero(rs)
    for coef, factors in cas:
        prod = WeylElement.const(rs)
        for f in factors:
            prod = weyl_mul(prod, pi_g_elem(f))
        op = op + coef * prod
    mat = [[ZERO] * len(basis) for _ in range(len(basis))]
    for j, m in enumerate(basis):
        img = act_F(op, FockVector(rs, kind, lam, {m: ONE}))
        for m2, c in img.terms.items():
            i = index.get(m2)
            if i is not None:  # projection P_D
                mat[i][j] = c
    cp = charpoly(mat)
    roots, residual = rational_roots(cp)
    if residual:
        raise ArithmeticError("non-rational eigenvalues in c_alpha spectrum")
    return roots


# -- rendering ----------------------------------------------------------------

def render_weyl(w):
    rs = w.rs
    if not w.terms:
        return "0"
    pieces = []
    for (xa, db) in sorted(w.terms, key=lambda k: (sum(k[0]) + sum(k[1]), k)):
        hp = w.terms[(xa, db)]
        mono = []
        for g, a in enumerate(xa):
            if a:
                lab = root_label(rs.positive_roots[g])
                mono.append("x_{%s}" % lab if a == 1 else "x_{%s}^%d" % (lab, a))
        for g, b in enumerate(db):
            if b:
                lab = root_label(rs.positive_roots[g])
                mono.append("d_{%s}" % lab if b == 1 else "d_{%s}^%d" % (lab, b))
        for he in sorted(hp):
            c = hp[he]
            hm = list(mono)
            for i, e in enumerate(he):
                if e:
                    hm.append("h%d" % (i + 1) if e == 1 else "h%d^%d" % (i + 1, e))
            body = " ".join(hm) if hm else "1"
            if c == 1 and hm:
                pieces.append(body)
            elif c == -1 and hm:
                pieces.append("-" + body)
            else:
                pieces.append("%s %s" % (c, body) if hm else str(c))
    return " + ".join(pieces).replace("+ -", "- ")
