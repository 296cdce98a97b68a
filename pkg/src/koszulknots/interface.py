"""External knot-homology tables and the model/data comparator.

External tables index cells by (t, ddagger) with ddagger = q - 2t; the
comparator realigns the q-grading (automatically or by an explicit
shift) and reports the first cell, in (t, then q) order, where ranks or
torsion disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import CoefficientRing, Degree
from .homology import HomologyTable, _parse_ring


class TableFormatError(ValueError):
    """Malformed external table input; message carries the line number."""


@dataclass
class ExternalTable:
    """Cells of an independently computed knot-homology table.

    cells maps (t, ddagger) to (rank, torsion) where torsion is a tuple of
    (prime_power, count) pairs as written in the source, e.g. 5^1.
    """

    knot: tuple | None = None  # (n, m) torus parameters, if declared
    ring: CoefficientRing | None = None
    cells: dict = field(default_factory=dict)

    def qt_cells(self):
        """Cells re-keyed by (q, t) with q = ddagger + 2t, torsion expanded."""
        out = {}
        for (t, dd), (rank, torsion) in self.cells.items():
            expanded = []
            for power, count in torsion:
                expanded.extend([power] * count)
            out[(dd + 2 * t, t)] = (rank, tuple(sorted(expanded)))
        return out


def _parse_torsion(text: str, lineno: int):
    entries = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        base, _, count = piece.partition("^")
        try:
            entries.append((int(base), int(count) if count else 1))
        except ValueError:
            raise TableFormatError(
                f"line {lineno}: bad torsion entry {piece!r}") from None
        if entries[-1][0] < 2 or entries[-1][1] < 1:
            raise TableFormatError(
                f"line {lineno}: bad torsion entry {piece!r}")
    return tuple(entries)


def parse_table(text: str) -> ExternalTable:
    """Parse the documented text format.

    Records look like ``t=3, dd=6, rank=1`` with an optional
    ``tor=5^1,...`` field (torsion entries separated by commas after the
    tor key); ``#`` starts a comment; optional headers ``coeff=<tag>`` and
    ``knot=<n>,<m>``.
    """
    table = ExternalTable()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("coeff="):
            table.ring = _parse_ring(line[len("coeff="):])
            continue
        if line.startswith("knot="):
            try:
                n, m = (int(x) for x in line[len("knot="):].split(","))
            except ValueError:
                raise TableFormatError(
                    f"line {lineno}: bad knot header {line!r}") from None
            table.knot = (n, m)
            continue
        fields = {}
        key = None
        for chunk in line.split(","):
            if "=" in chunk:
                key, val = chunk.split("=", 1)
                key = key.strip()
                if key in fields:
                    raise TableFormatError(
                        f"line {lineno}: duplicate field {key!r}")
                fields[key] = val.strip()
            elif key == "tor":
                # continuation of a comma-separated torsion list
                fields["tor"] += "," + chunk.strip()
            else:
                raise TableFormatError(
                    f"line {lineno}: stray token {chunk.strip()!r}")
        missing = {"t", "dd", "rank"} - set(fields)
        if missing:
            raise TableFormatError(
                f"line {lineno}: missing field(s) {sorted(missing)}")
        unknown = set(fields) - {"t", "dd", "rank", "tor"}
        if unknown:
            raise TableFormatError(
                f"line {lineno}: unknown field(s) {sorted(unknown)}")
        try:
            t = int(fields["t"])
            dd = int(fields["dd"])
            rank = int(fields["rank"])
        except ValueError:
            raise TableFormatError(
                f"line {lineno}: non-integer entry in {line!r}") from None
        if rank < 0:
            raise TableFormatError(f"line {lineno}: negative rank")
        if (t, dd) in table.cells:
            raise TableFormatError(
                f"line {lineno}: duplicate cell (t={t}, dd={dd})")
        torsion = _parse_torsion(fields["tor"], lineno) \
            if "tor" in fields else ()
        table.cells[(t, dd)] = (rank, torsion)
    return table


def _prime_power_multiset(factors, primes=None):
    """Invariant factors -> sorted prime-power list, optionally filtered."""
    out = []
    for f in factors:
        d = 2
        rest = f
        while d * d <= rest:
            if rest % d == 0:
                power = 1
                while rest % d == 0:
                    rest //= d
                    power *= d
                out.append((d, power))
            d += 1
        if rest > 1:
            out.append((rest, rest))
    return tuple(sorted(pw for p, pw in out
                        if primes is None or p in primes))


@dataclass
class DiffReport:
    shift: int
    first_divergence: tuple | None  # (t, q) in the external frame
    mismatches: list  # [(t, q, model_cell, data_cell)], (t, q) ordered
    compared_cells: int
    agreeing_region: tuple | None  # (tmin, tmax) fully matched t-range

    @property
    def agree(self):
        return not self.mismatches

    def text(self) -> str:
        lines = [f"comparison: shift q -> q + {self.shift}, "
                 f"{self.compared_cells} cells"]
        if self.agreeing_region:
            lines.append(f"  agreement for t in "
                         f"[{self.agreeing_region[0]}, "
                         f"{self.agreeing_region[1]}]")
        if self.agree:
            lines.append("  no divergence")
        else:
            t, q = self.first_divergence
            lines.append(f"  first divergence at t={t}, q={q}")
            for t, q, mc, dc in self.mismatches[:10]:
                lines.append(f"    t={t}, q={q}: model {mc}, data {dc}")
            if len(self.mismatches) > 10:
                lines.append(f"    ... {len(self.mismatches) - 10} more")
        return "\n".join(lines)


def compare(model: HomologyTable, ext: ExternalTable, shift="auto",
            torsion_primes=None) -> DiffReport:
    """Match a model table against external data after a q-shift.

    shift="auto" aligns the lowest nonzero cells in (t, q) order;
    otherwise the model's q is mapped to q + shift.  torsion_primes, when
    given, restricts the torsion comparison to those primes (for sources
    that print torsion selectively).
    """
    if ext.ring is not None and ext.ring != model.ring:
        raise ValueError(f"coefficient ring mismatch: model {model.ring}, "
                         f"data {ext.ring}")
    data = ext.qt_cells()
    if torsion_primes is not None:
        data = {k: (r, tuple(pw for pw in tor
                             if any(pw % p == 0 and _pure_power(pw, p)
                                    for p in torsion_primes)))
                for k, (r, tor) in data.items()}

    def model_cell(deg):
        g = model.groups.get(deg)
        if g is None:
            return (0, ())
        return (g.free_rank,
                _prime_power_multiset(g.torsion, torsion_primes))

    model_cells = {(d.q, d.t): model_cell(d)
                   for d in model.groups
                   if model_cell(d) != (0, ())}

    if shift == "auto":
        if not model_cells or not data:
            s = 0
        else:
            mq, mt = min(((q, t) for q, t in model_cells),
                         key=lambda k: (k[1], k[0]))
            dq, dt = min(((q, t) for (q, t), c in data.items()
                          if c != (0, ())), key=lambda k: (k[1], k[0]))
            if mt != dt:
                raise ValueError(
                    "cannot auto-align: lowest cells differ in t "
                    f"(model t={mt}, data t={dt})")
            s = dq - mq
    else:
        s = int(shift)

    keys = {(q + s, t) for q, t in model_cells} | set(data)
    mismatches = []
    for q, t in sorted(keys, key=lambda k: (k[1], k[0])):
        mdl = model.groups.get(Degree(q - s, t))
        mc = (mdl.free_rank, _prime_power_multiset(mdl.torsion,
                                                   torsion_primes)) \
            if mdl else (0, ())
        dc = data.get((q, t), (0, ()))
        if mc != dc:
            mismatches.append((t, q, mc, dc))

    first = (mismatches[0][0], mismatches[0][1]) if mismatches else None
    if data:
        tmin = min(t for _q, t in data)
        tmax = (first[0] - 1) if first else max(t for _q, t in data)
        region = (tmin, tmax) if tmax >= tmin else None
    else:
        region = None
    return DiffReport(s, first, mismatches, len(keys), region)


def _pure_power(value: int, p: int) -> bool:
    while value % p == 0:
        value //= p
    return value == 1
