"""The bundled family catalog and the end-to-end rank pipeline.

The catalog file is line-oriented text (grammar documented at the top of
``data/families.cat``): 42 ``family`` rows, each mapping to one of 11
``representative`` records that carry the divisibility assumption, the
closed-form Lefschetz count, the singular-fiber configuration and the
Weierstrass data. ``representative_rank`` runs the whole pipeline
(exponent matrix -> Lefschetz number, fibers -> Euler number -> h2 and
trivial-lattice rank -> Mordell-Weil rank) and ``reproduce_table``
replays every table row through its representative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import CatalogError, DivisibilityError
from .fibers import Kodaira, euler_number, mordell_weil_rank, rho_triv, second_betti
from .lattice import group_order, homogenize, lefschetz_number
from .polygon import classify_one_interior, convex_hull
from .weierstrass import SparsePoly, WeierstrassData, discriminant

DEFAULT_CATALOG = Path(__file__).with_name("data") / "families.cat"


@dataclass(frozen=True)
class Affine:
    """Affine function const + slope*n of the family parameter."""

    const: Fraction = Fraction(0)
    slope: Fraction = Fraction(0)

    def value(self, n) -> Fraction:
        return self.const + self.slope * n

    def eval_int(self, n) -> int:
        value = self.value(n)
        if value.denominator != 1:
            raise ValueError(f"{self} is not an integer at n={n}")
        return int(value)

    def __str__(self):
        parts = []
        if self.slope:
            num, den = self.slope.numerator, self.slope.denominator
            head = "n" if abs(num) == 1 else f"{abs(num)}n"
            if den != 1:
                head += f"/{den}"
            parts.append(("-" if num < 0 else "") + head)
        if self.const or not self.slope:
            sign = "-" if self.const < 0 else ("+" if parts else "")
            parts.append(f"{sign}{abs(self.const)}")
        return "".join(parts)


_AFFINE_PIECE = re.compile(r"^([+-]?)(?:(\d+)?n(?:/(\d+))?|(\d+))$")


def parse_affine(text: str) -> Affine:
    """Parse forms like '0', '12', 'n', '3n', '2n-72', 'n/3'."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty affine expression")
    pieces = re.findall(r"[+-]?[^+-]+", text)
    const = slope = Fraction(0)
    for piece in pieces:
        match = _AFFINE_PIECE.match(piece)
        if match is None:
            raise ValueError(f"bad affine expression {text!r}")
        sign = -1 if match.group(1) == "-" else 1
        if match.group(4) is not None:
            const += sign * Fraction(match.group(4))
        else:
            num = Fraction(match.group(2) or 1)
            den = Fraction(match.group(3) or 1)
            slope += sign * num / den
    return Affine(const, slope)


# --- closed-form polynomial expressions -------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[tn^*+\-()/])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ValueError(f"bad character {text[pos]!r} in {text!r}")
        tokens.append(match.group(1))
        pos = match.end()
    return tokens


class PolyExpr:
    """A parsed closed-form polynomial in t with exponents affine in n."""

    def __init__(self, text: str):
        self.text = text
        tokens = _tokenize(text)
        self._pos = 0
        self._tokens = tokens
        node = self._expr()
        if self._pos != len(tokens):
            raise ValueError(f"trailing input in {text!r}")
        self._node = node
        del self._pos, self._tokens

    def _peek(self):
        return self._tokens[self._pos] if self._pos < len(self._tokens) else None

    def _take(self, expected=None):
        tok = self._peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected or 'token'}, got {tok!r} in {self.text!r}")
        self._pos += 1
        return tok

    def _expr(self):
        node = ("neg", self._term()) if self._try("-") else self._term()
        while self._peek() in ("+", "-"):
            if self._take() == "+":
                node = ("add", node, self._term())
            else:
                node = ("sub", node, self._term())
        return node

    def _term(self):
        node = self._factor()
        while self._try("*"):
            node = ("mul", node, self._factor())
        return node

    def _factor(self):
        node = self._base()
        if self._try("^"):
            power = self._take()
            if not power.isdigit():
                raise ValueError(f"non-integer power in {self.text!r}")
            node = ("pow", node, int(power))
        return node

    def _base(self):
        tok = self._peek()
        if tok == "(":
            self._take()
            node = self._expr()
            self._take(")")
            return node
        if tok == "t":
            self._take()
            return ("t", self._exponent())
        if tok is not None and tok.isdigit():
            self._take()
            if self._try("/"):
                den = self._take()
                if not den.isdigit():
                    raise ValueError(f"bad rational in {self.text!r}")
                return ("num", Fraction(int(tok), int(den)))
            return ("num", Fraction(int(tok)))
        raise ValueError(f"unexpected token {tok!r} in {self.text!r}")

    def _exponent(self):
        # t without ^ means exponent 1
        if not self._try("^"):
            return Affine(Fraction(1))
        if self._try("("):
            parts = []
            while self._peek() != ")":
                if self._peek() is None:
                    raise ValueError(f"unbalanced exponent in {self.text!r}")
                parts.append(self._take())
            self._take(")")
            return parse_affine("".join(parts))
        tok = self._take()
        if tok == "n":
            return Affine(slope=Fraction(1))
        if tok.isdigit():
            if self._try("n"):
                return Affine(slope=Fraction(int(tok)))
            return Affine(Fraction(int(tok)))
        raise ValueError(f"bad exponent in {self.text!r}")

    def _try(self, token):
        if self._peek() == token:
            self._pos += 1
            return True
        return False

    def evaluate(self, n: int) -> SparsePoly:
        return self._eval(self._node, n)

    def _eval(self, node, n):
        kind = node[0]
        if kind == "num":
            return SparsePoly(node[1])
        if kind == "t":
            return SparsePoly.monomial(node[1].eval_int(n))
        if kind == "neg":
            return -self._eval(node[1], n)
        if kind == "add":
            return self._eval(node[1], n) + self._eval(node[2], n)
        if kind == "sub":
            return self._eval(node[1], n) - self._eval(node[2], n)
        if kind == "mul":
            return self._eval(node[1], n) * self._eval(node[2], n)
        if kind == "pow":
            return self._eval(node[1], n) ** node[2]
        raise AssertionError(f"unknown node {kind}")

    def __repr__(self):
        return f"PolyExpr({self.text!r})"


# --- catalog records ---------------------------------------------------------

@dataclass(frozen=True)
class FamilyRow:
    """One table row: a four-term family with its rank data and mapping."""

    id: str
    terms: tuple  # ((t: Affine, x: int, y: int), ...) exactly 4
    polygon: str
    table_n: int
    max_rank: int
    rep: str
    nmap: Fraction
    neff: int | None = None


@dataclass(frozen=True)
class Representative:
    """A family with full invariant data, valid when divisibility | n."""

    id: str
    divisibility: int
    lambda_formula: Affine
    fibers: tuple  # ((family, index Affine | None, count Affine), ...)
    a: PolyExpr
    b: PolyExpr
    delta: PolyExpr
    j_num: PolyExpr
    j_den: PolyExpr


@dataclass(frozen=True)
class RankReport:
    """Full pipeline output for one representative at one parameter."""

    family: str
    n: int
    group_order: int
    lefschetz: int
    euler: int
    h2: int
    rho_triv: int
    rank: int
    checks: tuple

    def to_dict(self):
        return {
            "family": self.family,
            "n": self.n,
            "group_order": self.group_order,
            "lambda": self.lefschetz,
            "euler": self.euler,
            "h2": self.h2,
            "rho_triv": self.rho_triv,
            "rank": self.rank,
            "checks": [{"name": name, "passed": ok} for name, ok in self.checks],
        }


@dataclass(frozen=True)
class TableEntry:
    """One row of the reproduced table."""

    id: str
    polygon: str
    table_n: int
    rep: str
    rep_n: int
    own_lambda: int
    computed_rank: int
    expected_rank: int
    match: bool

    def to_dict(self):
        return {
            "id": self.id,
            "polygon": self.polygon,
            "table_n": self.table_n,
            "rep": self.rep,
            "rep_n": self.rep_n,
            "own_lambda": self.own_lambda,
            "computed_rank": self.computed_rank,
            "expected_rank": self.expected_rank,
            "match": self.match,
        }


_FIBER_ENTRY = re.compile(r"^(I\*?|II\*?|III\*?|IV\*?)(?:\(([^)]*)\))?:(.+)$")


def _parse_fibers(text: str):
    entries = []
    for chunk in text.split(","):
        match = _FIBER_ENTRY.match(chunk)
        if match is None:
            raise ValueError(f"bad fiber entry {chunk!r}")
        family, index, count = match.groups()
        if family in ("I", "I*"):
            if index is None:
                raise ValueError(f"type {family} needs an index in {chunk!r}")
            entries.append((family, parse_affine(index), parse_affine(count)))
        else:
            if index is not None:
                raise ValueError(f"type {family} takes no index in {chunk!r}")
            entries.append((family, None, parse_affine(count)))
    return tuple(entries)


_TERM_ENTRY = re.compile(r"^\(t:([^,]+),x:(\d+),y:(\d+)\)$")


def _parse_terms(text: str):
    chunks = text.split(";")
    if len(chunks) != 4:
        raise ValueError(f"need 4 terms, got {len(chunks)}")
    terms = []
    for chunk in chunks:
        match = _TERM_ENTRY.match(chunk)
        if match is None:
            raise ValueError(f"bad term {chunk!r}")
        terms.append((parse_affine(match.group(1)), int(match.group(2)), int(match.group(3))))
    return tuple(terms)


_ROW_FIELDS = {"id", "terms", "polygon", "table_n", "rank", "rep", "nmap", "neff"}
_REP_FIELDS = {"id", "div", "lambda", "fibers", "a", "b", "delta", "jnum", "jden"}


class Catalog:
    """Immutable-after-load catalog with a memoized rank pipeline."""

    def __init__(self, rows, representatives):
        self.rows = rows
        self.representatives = representatives
        self._rank_cache = {}

    def row(self, family_id: str) -> FamilyRow:
        try:
            return self.rows[family_id]
        except KeyError:
            raise KeyError(f"unknown family id {family_id!r}") from None

    def representative(self, rep_id: str) -> Representative:
        try:
            return self.representatives[rep_id]
        except KeyError:
            raise KeyError(f"unknown representative id {rep_id!r}") from None

    def family_terms(self, family_id: str, n: int):
        """The four exponent triples (t, x, y) of a family at parameter n."""
        if n < 1:
            raise ValueError("n must be at least 1")
        row = self.row(family_id)
        return tuple((t.eval_int(n), x, y) for t, x, y in row.terms)

    def support(self, family_id: str):
        """The (x, y) support set; independent of n."""
        row = self.row(family_id)
        return sorted({(x, y) for _, x, y in row.terms})

    def representative_of(self, family_id: str):
        """(representative id, parameter multiplier q): row at n maps to rep at q*n."""
        row = self.row(family_id)
        return row.rep, row.nmap

    def fibers_at(self, rep_id: str, n: int):
        rep = self.representative(rep_id)
        return tuple(
            (Kodaira(family, index.eval_int(n) if index is not None else 0), count.eval_int(n))
            for family, index, count in rep.fibers
        )

    def weierstrass_at(self, rep_id: str, n: int) -> WeierstrassData:
        rep = self.representative(rep_id)
        return WeierstrassData(rep.a.evaluate(n), rep.b.evaluate(n))

    def delta_at(self, rep_id: str, n: int) -> SparsePoly:
        return self.representative(rep_id).delta.evaluate(n)

    def j_at(self, rep_id: str, n: int):
        rep = self.representative(rep_id)
        return rep.j_num.evaluate(n), rep.j_den.evaluate(n)

    def representative_rank(self, rep_id: str, n: int) -> RankReport:
        """Full pipeline for a representative; requires divisibility | n."""
        rep = self.representative(rep_id)
        n = int(n)
        if n < 1 or n % rep.divisibility:
            raise DivisibilityError(
                f"representative {rep.id} requires {rep.divisibility} | n; got n = {n}"
            )
        key = (rep_id, n)
        if key not in self._rank_cache:
            matrix = homogenize(self.family_terms(rep.id, n))
            lam = lefschetz_number(matrix)
            order = group_order(matrix)
            config = self.fibers_at(rep.id, n)
            euler = euler_number(config)
            h2 = second_betti(config)
            rho = rho_triv(config)
            rank = mordell_weil_rank(h2, lam, rho)
            checks = (
                ("divisibility", True),
                ("lambda-formula", lam == rep.lambda_formula.eval_int(n)),
                (
                    "delta-identity",
                    discriminant(self.weierstrass_at(rep.id, n)) == self.delta_at(rep.id, n),
                ),
            )
            self._rank_cache[key] = RankReport(
                rep.id, n, order, lam, euler, h2, rho, rank, checks
            )
        return self._rank_cache[key]

    def table_parameter(self, family_id: str) -> int:
        """The representative parameter used to reproduce a table row."""
        row = self.row(family_id)
        if row.neff is not None:
            return row.neff
        value = row.nmap * row.table_n
        if value.denominator != 1:
            raise CatalogError(f"row {row.id}: nmap*table_n is not an integer")
        return int(value)

    def reproduce_table(self):
        """Recompute every table row through its representative mapping."""
        entries = []
        for row in self.rows.values():
            rep_n = self.table_parameter(row.id)
            report = self.representative_rank(row.rep, rep_n)
            own = lefschetz_number(homogenize(self.family_terms(row.id, row.table_n)))
            match = report.rank == row.max_rank and all(ok for _, ok in report.checks)
            entries.append(
                TableEntry(
                    row.id,
                    row.polygon,
                    row.table_n,
                    row.rep,
                    rep_n,
                    own,
                    report.rank,
                    row.max_rank,
                    match,
                )
            )
        return entries


def _parse_record(kind, fields, line_no):
    def need(key):
        if key not in fields:
            raise CatalogError(f"{kind} record missing {key}=", line_no)
        return fields[key]

    try:
        if kind == "family":
            unknown = set(fields) - _ROW_FIELDS
            if unknown:
                raise ValueError(f"unknown fields {sorted(unknown)}")
            return FamilyRow(
                id=need("id"),
                terms=_parse_terms(need("terms")),
                polygon=need("polygon"),
                table_n=int(need("table_n")),
                max_rank=int(need("rank")),
                rep=need("rep"),
                nmap=Fraction(need("nmap")),
                neff=int(fields["neff"]) if "neff" in fields else None,
            )
        unknown = set(fields) - _REP_FIELDS
        if unknown:
            raise ValueError(f"unknown fields {sorted(unknown)}")
        return Representative(
            id=need("id"),
            divisibility=int(need("div")),
            lambda_formula=parse_affine(need("lambda")),
            fibers=_parse_fibers(need("fibers")),
            a=PolyExpr(need("a")),
            b=PolyExpr(need("b")),
            delta=PolyExpr(need("delta")),
            j_num=PolyExpr(need("jnum")),
            j_den=PolyExpr(need("jden")),
        )
    except CatalogError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise CatalogError(str(exc), line_no) from exc


def load_catalog(path=None) -> Catalog:
    """Parse and validate a catalog file (the bundled one by default).

    Raises CatalogError with a line number on parse problems and on
    violated invariants (wrong counts, unknown representative, polygon
    label mismatch, inconsistent parameter mapping).
    """
    path = Path(path) if path is not None else DEFAULT_CATALOG
    rows: dict[str, FamilyRow] = {}
    reps: dict[str, Representative] = {}
    row_lines: dict[str, int] = {}
    for line_no, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind not in ("family", "representative"):
            raise CatalogError(f"unknown record type {kind!r}", line_no)
        fields = {}
        for token in tokens[1:]:
            if "=" not in token:
                raise CatalogError(f"expected key=value, got {token!r}", line_no)
            key, value = token.split("=", 1)
            if key in fields:
                raise CatalogError(f"duplicate field {key!r}", line_no)
            fields[key] = value
        record = _parse_record(kind, fields, line_no)
        target = rows if kind == "family" else reps
        if record.id in target:
            raise CatalogError(f"duplicate {kind} id {record.id!r}", line_no)
        target[record.id] = record
        if kind == "family":
            row_lines[record.id] = line_no

    if len(rows) != 42:
        raise CatalogError(f"expected 42 family rows, found {len(rows)}")
    if len(reps) != 11:
        raise CatalogError(f"expected 11 representatives, found {len(reps)}")

    catalog = Catalog(rows, reps)
    for row in rows.values():
        line_no = row_lines[row.id]
        if row.rep not in reps:
            raise CatalogError(f"row {row.id}: unknown representative {row.rep!r}", line_no)
        try:
            homogenize(catalog.family_terms(row.id, row.table_n))
            hull = convex_hull(catalog.support(row.id))
            label = classify_one_interior(hull).label
        except Exception as exc:
            raise CatalogError(f"row {row.id}: {exc}", line_no) from exc
        if label != row.polygon:
            raise CatalogError(
                f"row {row.id}: hull classifies as {label}, catalog says {row.polygon}",
                line_no,
            )
        rep_n = row.nmap * row.table_n
        if rep_n.denominator != 1 or rep_n < 1:
            raise CatalogError(f"row {row.id}: bad parameter mapping {rep_n}", line_no)
        target = row.neff if row.neff is not None else int(rep_n)
        if row.neff is not None and row.neff % int(rep_n):
            raise CatalogError(
                f"row {row.id}: neff={row.neff} is not a multiple of {int(rep_n)}", line_no
            )
        if target % reps[row.rep].divisibility:
            raise CatalogError(
                f"row {row.id}: parameter {target} violates divisibility "
                f"{reps[row.rep].divisibility} of representative {row.rep}",
                line_no,
            )
    for rep_id in reps:
        if rep_id not in rows:
            raise CatalogError(f"representative {rep_id!r} has no family row")
    return catalog
