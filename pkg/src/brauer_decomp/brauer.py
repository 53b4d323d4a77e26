"""Formal Brauer-class arithmetic on symbol expressions.

A ``BrauerExpr`` is an integer combination of symbols (a, b)_n over one field
node.  Slots may carry a formal factorization over named atoms; normalize
then works with the alternating bilinear form those factorizations define,
which is how telescoping identities are proved without any field
arithmetic.  All symbol degrees used here are odd, so every symbol with a
slot equal to -1 is trivial and (x, x)_n = (x, -1)_n vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace

from .fields.base import Field, FieldError
from .fields.kummer import KummerField
from .fields.linalg import solve
from .fields.poly import Poly, coordinates, factor_low_degree, minimal_polynomial

Factorization = tuple  # ((atom name, exponent), ...)


@dataclass(frozen=True)
class SymbolTerm:
    a: object
    b: object
    n: int
    coeff: int = 1
    provenance: str = ""
    fa: Factorization | None = None
    fb: Factorization | None = None

    def to_json(self, field: Field) -> dict:
        out = {
            "a": field.element_to_json(self.a),
            "b": field.element_to_json(self.b),
            "degree": self.n,
            "coefficient": self.coeff,
            "provenance": self.provenance,
        }
        if self.fa is not None:
            out["fa"] = [list(x) for x in self.fa]
        if self.fb is not None:
            out["fb"] = [list(x) for x in self.fb]
        return out


@dataclass(frozen=True)
class BrauerExpr:
    field: Field
    terms: tuple = ()
    atoms: dict = dc_field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def symbol(cls, field, a, b, n, coeff=1, provenance="") -> BrauerExpr:
        return cls(field, (SymbolTerm(field(a), field(b), n, coeff, provenance),))

    @classmethod
    def zero(cls, field) -> BrauerExpr:
        return cls(field, ())

    def __add__(self, other: BrauerExpr) -> BrauerExpr:
        if other.field != self.field:
            raise FieldError(f"cannot add expressions over {self.field} and {other.field}")
        return BrauerExpr(self.field, self.terms + other.terms, {**self.atoms, **other.atoms})

    def scale(self, k: int) -> BrauerExpr:
        return BrauerExpr(self.field, tuple(replace(t, coeff=t.coeff * k) for t in self.terms), self.atoms)

    def __neg__(self) -> BrauerExpr:
        return self.scale(-1)

    def __sub__(self, other: BrauerExpr) -> BrauerExpr:
        return self + (-other)

    def tag(self, provenance: str) -> BrauerExpr:
        return BrauerExpr(self.field, tuple(replace(t, provenance=provenance) for t in self.terms), self.atoms)

    def __len__(self) -> int:
        return len(self.terms)

    def degrees(self) -> list[int]:
        return [t.n for t in self.terms]

    def to_json(self) -> list[dict]:
        return [t.to_json(self.field) for t in self.terms]

    @classmethod
    def from_json(cls, field: Field, data) -> BrauerExpr:
        terms = []
        for r in data:
            terms.append(
                SymbolTerm(
                    field.element_from_json(r["a"]),
                    field.element_from_json(r["b"]),
                    int(r["degree"]),
                    int(r["coefficient"]),
                    r.get("provenance", ""),
                    tuple(tuple(x) for x in r["fa"]) if "fa" in r else None,
                    tuple(tuple(x) for x in r["fb"]) if "fb" in r else None,
                )
            )
        return cls(field, tuple(terms))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            c = "" if t.coeff == 1 else f"{t.coeff}*"
            parts.append(f"{c}({t.a},{t.b})_{t.n}")
        return " + ".join(parts)


def _trivial_slot_pair(a, b) -> bool:
    one = a.field.one
    return a == one or b == one or a + b == a.field.zero or a + b == one or a == -one or b == -one


# -- normalize -------------------------------------------------------------


def _atom_table(e: BrauerExpr):
    """Atom values, plus the atom (and sign) each unfactored slot maps to.

    Unfactored slots are their own atoms; a slot whose inverse is already an
    atom reuses it with exponent -1.  Slots are visited in string order so the
    choice does not depend on term order.
    """
    table: dict[str, object] = {}
    canon: dict[str, tuple[str, int]] = {}
    loose = {}
    for t in e.terms:
        for s, f in ((t.a, t.fa), (t.b, t.fb)):
            if f is None:
                loose[str(s)] = s
            else:
                for name, _ in f:
                    table[name] = e.atoms[name]
    for key in sorted(loose):
        if key in canon:
            continue
        s = loose[key]
        canon[key] = ("#" + key, 1)
        table["#" + key] = s
        canon.setdefault(str(s.inverse()), ("#" + key, -1))
    return table, canon


def _exponents(slot, fact, canon) -> dict[str, int]:
    if fact is None:
        k, e = canon[str(slot)]
        return {k: e}
    out: dict[str, int] = {}
    for name, e in fact:
        out[name] = out.get(name, 0) + e
    return out


def normalize(e: BrauerExpr, steinberg: bool = True) -> BrauerExpr:
    """Steinberg drops, bilinear expansion over atoms, antisymmetry, merge by first atom.

    With steinberg=False only bilinearity and antisymmetry are used.
    """
    table, canon = _atom_table(e)
    forms: dict[int, dict[tuple[str, str], int]] = {}
    prov: dict[int, str] = {}
    for t in e.terms:
        if t.coeff % t.n == 0 or (steinberg and _trivial_slot_pair(t.a, t.b)):
            continue
        fa = _exponents(t.a, t.fa, canon)
        fb = _exponents(t.b, t.fb, canon)
        form = forms.setdefault(t.n, {})
        prov.setdefault(t.n, t.provenance)
        for x, ex in fa.items():
            for y, ey in fb.items():
                if x == y:
                    continue
                c = t.coeff * ex * ey
                if x < y:
                    form[(x, y)] = form.get((x, y), 0) + c
                else:
                    form[(y, x)] = form.get((y, x), 0) - c
    out = []
    for n in sorted(forms):
        byfirst: dict[str, list[tuple[str, int]]] = {}
        for (x, y), c in sorted(forms[n].items()):
            c %= n
            if c:
                byfirst.setdefault(x, []).append((y, c))
        for x, pairs in byfirst.items():
            a = table[x]
            b = a.field.one
            for y, c in pairs:
                b = b * table[y] ** c
            if steinberg and _trivial_slot_pair(a, b):
                continue
            named = not x.startswith("#") and all(not y.startswith("#") for y, _ in pairs)
            fa = ((x, 1),) if named else None
            fb = tuple(pairs) if named else None
            out.append(SymbolTerm(a, b, n, 1, prov.get(n, ""), fa, fb))
    return BrauerExpr(e.field, tuple(out), dict(e.atoms))


def is_formally_zero(e: BrauerExpr, steinberg: bool = True) -> bool:
    return len(normalize(e, steinberg).terms) == 0


# -- power rule ------------------------------------------------------------


def power_rule(term: SymbolTerm) -> SymbolTerm:
    """3k (a,b)_9 -> k (a,b)_3, using rho_3 = rho_9^3."""
    if term.n % 3 or term.coeff % 3:
        raise ValueError(f"power rule needs a degree and a coefficient divisible by 3, got {term.coeff}*(.,.)_{term.n}")
    return replace(term, n=term.n // 3, coeff=term.coeff // 3)


def apply_power_rule(e: BrauerExpr) -> BrauerExpr:
    terms = []
    for t in e.terms:
        while t.n == 9 and t.coeff % 3 == 0 and t.coeff % 9:
            t = power_rule(t)
        terms.append(t)
    return BrauerExpr(e.field, tuple(terms), e.atoms)


# -- extensions ------------------------------------------------------------


@dataclass(frozen=True)
class ExtensionDescriptor:
    lower: Field
    upper: Field
    generator: object
    minpoly: Poly
    degree: int
    kind: str

    @classmethod
    def kummer(cls, upper: KummerField) -> ExtensionDescriptor:
        d = upper.degree
        K = upper.parent
        g = Poly(K, [-upper.radicand] + [0] * (d - 1) + [1])
        kind = {2: "kummer-quadratic", 3: "kummer-cubic"}.get(d, "general-simple")
        return cls(K, upper, upper.gen(), g, d, kind)

    @classmethod
    def trivial(cls, F: Field) -> ExtensionDescriptor:
        return cls(F, F, F.zero, Poly(F, [0, 1]), 1, "trivial")

    def to_json(self) -> dict:
        return {
            "lower": self.lower.describe(),
            "upper": self.upper.describe(),
            "degree": self.degree,
            "kind": self.kind,
            "minpoly": self.minpoly.to_json(),
        }


def restrict(e: BrauerExpr, E: ExtensionDescriptor) -> BrauerExpr:
    if e.field != E.lower:
        raise FieldError(f"expression lives over {e.field}, not {E.lower}")
    U = E.upper
    atoms = {k: U(v) for k, v in e.atoms.items()}
    terms = tuple(replace(t, a=U(t.a), b=U(t.b)) for t in e.terms)
    return BrauerExpr(U, terms, atoms)


def _in_lower(x, E: ExtensionDescriptor):
    if E.degree == 1:
        return x
    if x.field == E.lower:
        return x
    if x.in_parent():
        return x.coeffs[0]
    return None


def projection_cor(term: SymbolTerm, E: ExtensionDescriptor) -> BrauerExpr:
    """cor (x, b) = (N x, b) for b in the lower field; the other orientation via a swap."""
    F = E.lower
    if E.degree == 1:
        return BrauerExpr(F, (replace(term, a=F(term.a), b=F(term.b)),))
    U = E.upper
    a, b = U(term.a), U(term.b)
    bl = _in_lower(b, E)
    if bl is not None:
        return BrauerExpr(F, (SymbolTerm(a.norm(), bl, term.n, term.coeff, term.provenance),))
    al = _in_lower(a, E)
    if al is not None:
        # (a, y) = -(y, a)
        return BrauerExpr(F, (SymbolTerm(b.norm(), al, term.n, -term.coeff, term.provenance),))
    raise FieldError("projection formula needs a slot in the lower field")


# -- Rosset-Tate -----------------------------------------------------------


def _weil_cor(P: Poly, g: Poly, n: int, coeff: int, prov: str, F: Field) -> list[SymbolTerm]:
    """cor_{F(theta)/F} {theta, g(theta)} for theta a root of the monic irreducible P.

    Weil reciprocity for {P, x, g} on F(x) gives
        cor {theta, g(theta)} = {P(0), g~(0)} + sum_{Q | g, Q != x} m_Q cor_{F(beta)/F} {beta, P(beta)}
    modulo symbols with a slot -1 (trivial for odd n), where g = x^k g~.
    """
    out: list[SymbolTerm] = []
    if P.degree == 1:
        beta = -P[0]
        if not g.is_zero() and g.degree <= 0:
            out.append(SymbolTerm(beta, g[0], n, coeff, prov))
            return out
        raise FieldError("remainder has wrong degree")
    k = 0
    while g[k].is_zero():
        k += 1
    gt0 = g[k]
    out.append(SymbolTerm(P[0], gt0, n, coeff, prov))
    rest = Poly(F, g.coeffs[k:])
    if rest.degree <= 0:
        return out
    _, factors = factor_low_degree(rest) if rest.degree <= 2 else (None, None)
    if factors is None:
        raise FieldError("Rosset-Tate recursion needs degree <= 3 extensions")
    for Q, m in factors:
        out.extend(_weil_cor(Q, P % Q, n, coeff * m, prov, F))
    return out


def _as_poly_in(b, a, P: Poly, E: ExtensionDescriptor) -> Poly:
    """g over the lower field with b = g(a), deg g < deg P."""
    F = E.lower
    d = P.degree
    pw = [E.upper.one]
    for _ in range(d - 1):
        pw.append(pw[-1] * a)
    cols = [coordinates(x, F) for x in pw]
    rows = [[cols[j][i] for j in range(d)] for i in range(len(cols[0]))]
    sol = solve(rows, coordinates(E.upper(b), F), F)
    if sol is None:
        raise FieldError("slot is not a polynomial in the other slot")
    return Poly(F, sol)


def rosset_tate_cor(term: SymbolTerm, E: ExtensionDescriptor, check: bool = True) -> BrauerExpr:
    """Corestriction of one symbol along a simple extension of degree d <= 3, as at most d symbols.

    With ``check`` the output is compared against the pushforward of the
    input's invariants whenever the oracle supports the upper field, and a
    mismatch raises.
    """
    F = E.lower
    if E.degree == 1:
        return BrauerExpr(F, (replace(term, a=F(term.a), b=F(term.b)),))
    U = E.upper
    a, b = U(term.a), U(term.b)
    al, bl = _in_lower(a, E), _in_lower(b, E)
    if al is not None and bl is not None:
        out = BrauerExpr(F, (SymbolTerm(al, bl ** E.degree, term.n, term.coeff, term.provenance),))
    elif al is not None or bl is not None:
        out = projection_cor(SymbolTerm(a, b, term.n, term.coeff, term.provenance), E)
        t = out.terms[0]
        if t.coeff != term.coeff:
            # undo the swap so the first slot stays the norm
            out = BrauerExpr(F, (SymbolTerm(t.b, t.a, t.n, term.coeff, t.provenance),))
    else:
        P = minimal_polynomial(a, F)
        if P.degree != E.degree:
            raise FieldError("slot does not generate the extension")
        g = _as_poly_in(b, a, P, E)
        raw = _weil_cor(P, g, term.n, term.coeff, term.provenance, F)
        out = BrauerExpr(F, tuple(t for t in raw if not _trivial_slot_pair(t.a, t.b)))
    if len(out.terms) > E.degree:
        raise AssertionError("Rosset-Tate output exceeds [L:F] symbols")
    if check:
        verify_pushforward(BrauerExpr(U, (replace(term, a=a, b=b),)), out)
    return out


def verify_pushforward(upper: BrauerExpr, lower: BrauerExpr) -> bool | None:
    """Raise on a pushforward mismatch; None when the oracle cannot see the fields."""
    from .oracle.invariants import pushforward_check
    from .oracle.places import OracleUnsupported

    try:
        ok = pushforward_check(upper, lower)
    except OracleUnsupported:
        return None
    if not ok:
        raise AssertionError(f"corestriction self-check failed: {upper} -> {lower}")
    return True


def corestrict(e: BrauerExpr, E: ExtensionDescriptor, check: bool = True) -> BrauerExpr:
    terms: tuple = ()
    for t in e.terms:
        terms += rosset_tate_cor(t, E, check).terms
    return BrauerExpr(E.lower, terms)


# -- slot powering ---------------------------------------------------------


def scale_by_slot_power(e: BrauerExpr, k: int) -> BrauerExpr:
    """k * e realized by powering first slots, keeping one symbol per term."""
    terms = []
    for t in e.terms:
        kk = k % t.n
        terms.append(replace(t, a=t.a**kk, fa=None, fb=None))
    return BrauerExpr(e.field, tuple(terms), e.atoms)
