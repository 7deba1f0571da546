"""Text format for series and tables, plus seeded random generators.

Format (one record per line, ``#`` starts a comment)::

    gv-table v1
    kind GW                      # GW | BPS | E | FANO | FANO-BPS
    rank 2
    mass 1/1 1/1
    masscap 4/1
    tmin -2
    tmax 6
    GW (1,0) : -2 1/1 ; 0 1/12
    BPS (1,0) g=0 : 1/1
    E (1,1) g=2 : -3/1
    FANO c1=1 g=3 : 5/1

The ``kind`` line is optional when the body has at least one row.  FANO
files carry ``c1`` and ``tmin``/``tmax`` but no lattice lines.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import Union

from .errors import DimensionMismatch, ParseError
from .fano import FanoBPS, FanoSeries
from .gv import BPSTable
from .lattice import LatticeClass, LatticeConfig
from .qseries import QSeries
from .structure import ETable
from .tpoly import TPoly

FORMAT_HEADER = "gv-table v1"
KINDS = ("GW", "BPS", "E", "FANO", "FANO-BPS")
LATTICE_KINDS = ("GW", "BPS", "E")

Value = Union[QSeries, BPSTable, ETable, FanoSeries, FanoBPS]

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")
_INT = re.compile(r"[+-]?\d+")
_CLASS = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)")
_GENUS = re.compile(r"g=(\d+)")
_C1 = re.compile(r"c1=(\d+)")


def fmt_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(tok: str, line: int = 0, col: int = 1) -> Fraction:
    if not _RATIONAL.fullmatch(tok):
        raise ParseError(f"expected a rational p/q, got {tok!r}", line, col)
    num, _, den = tok.partition("/")
    if den and int(den) == 0:
        raise ParseError("zero denominator", line, col)
    return Fraction(int(num), int(den) if den else 1)


def _fmt_class(A: LatticeClass) -> str:
    return "(" + ",".join(str(c) for c in A.coords) + ")"


# -- printing ----------------------------------------------------------------

def _lattice_header(kind: str, cfg: LatticeConfig) -> list[str]:
    return [
        FORMAT_HEADER,
        f"kind {kind}",
        f"rank {cfg.rank}",
        "mass " + " ".join(fmt_rational(m) for m in cfg.mass_vector),
        f"masscap {fmt_rational(cfg.mass_cap)}",
        "tmin -2",
        f"tmax {cfg.t_order}",
    ]


def dumps(value: Value) -> str:
    """Canonical text of a value; ends with a newline."""
    if isinstance(value, QSeries):
        if value.const:
            raise ValueError("series with a q^0 term cannot be written as a GW table")
        lines = _lattice_header("GW", value.config)
        for A, p in value.items():
            body = " ; ".join(f"{e} {fmt_rational(c)}" for e, c in p.items())
            lines.append(f"GW {_fmt_class(A)} : {body}")
    elif isinstance(value, BPSTable):
        tag = "E" if isinstance(value, ETable) else "BPS"
        lines = _lattice_header(tag, value.config)
        cfg = value.config
        for (A, g), c in sorted(value.entries.items(), key=lambda kv: (cfg.sort_key(kv[0][0]),
                                                                       kv[0][1])):
            lines.append(f"{tag} {_fmt_class(A)} g={g} : {fmt_rational(c)}")
    elif isinstance(value, (FanoSeries, FanoBPS)):
        is_gw = isinstance(value, FanoSeries)
        coeffs = value.gw_coeffs if is_gw else value.bps_coeffs
        lines = [
            FORMAT_HEADER,
            f"kind {'FANO' if is_gw else 'FANO-BPS'}",
            f"c1 {value.c1}",
            "tmin -2",
            f"tmax {2 * value.window - 2}",
        ]
        for g, c in sorted(coeffs.items()):
            if c:
                lines.append(f"FANO c1={value.c1} g={g} : {fmt_rational(c)}")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    return "\n".join(lines) + "\n"


# -- parsing -----------------------------------------------------------------

def _strip_comment(raw: str) -> str:
    i = raw.find("#")
    return raw if i < 0 else raw[:i]


class _Row:
    __slots__ = ("kind", "line", "cls", "cls_col", "genus", "c1", "payload", "payload_col")


def _parse_row(kind: str, rest: str, offset: int, lineno: int) -> _Row:
    row = _Row()
    row.kind, row.line = kind, lineno
    row.cls = row.genus = row.c1 = None
    head, sep, payload = rest.partition(":")
    if not sep:
        raise ParseError("missing ':' separator", lineno, offset + len(rest) + 1)
    row.payload = payload
    row.payload_col = offset + len(head) + 2
    pos = 0
    if kind in LATTICE_KINDS:
        m = _CLASS.match(head.lstrip())
        lead = len(head) - len(head.lstrip())
        if not m:
            raise ParseError("expected a class like (a1,...,aR)", lineno, offset + lead + 1)
        row.cls = tuple(int(x) for x in m.group(1).split(","))
        row.cls_col = offset + lead + 1
        pos = lead + m.end()
    tail = head[pos:].split()
    col = offset + pos + (len(head[pos:]) - len(head[pos:].lstrip())) + 1
    expect = []
    if kind == "FANO":
        expect.append("c1")
    if kind in ("BPS", "E", "FANO"):
        expect.append("g")
    if len(tail) != len(expect):
        raise ParseError(f"expected fields {expect or 'none'} before ':'", lineno, col)
    for name, tok in zip(expect, tail):
        col = offset + head.index(tok, pos) + 1
        pat = _C1 if name == "c1" else _GENUS
        m = pat.fullmatch(tok)
        if not m:
            raise ParseError(f"expected {name}=N, got {tok!r}", lineno, col)
        setattr(row, "c1" if name == "c1" else "genus", int(m.group(1)))
    return row


def _parse_gw_payload(row: _Row) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    text = row.payload
    col = row.payload_col
    if not text.strip():
        return out
    start = 0
    for piece in text.split(";"):
        pcol = col + start
        start += len(piece) + 1
        toks = piece.split()
        if len(toks) != 2:
            raise ParseError("expected 'exponent coefficient' pair", row.line, pcol)
        e_col = pcol + piece.index(toks[0])
        c_col = pcol + piece.index(toks[1], piece.index(toks[0]) + len(toks[0]))
        if not _INT.fullmatch(toks[0]):
            raise ParseError(f"bad exponent {toks[0]!r}", row.line, e_col)
        e = int(toks[0])
        if e % 2:
            raise ParseError(f"odd t-exponent {e}", row.line, e_col)
        if e in out:
            raise ParseError(f"exponent {e} repeated", row.line, e_col)
        out[e] = parse_rational(toks[1], row.line, c_col)
    return out


def _parse_scalar_payload(row: _Row) -> Fraction:
    tok = row.payload.strip()
    col = row.payload_col + (len(row.payload) - len(row.payload.lstrip()))
    return parse_rational(tok, row.line, col)


def loads(text: str, expect: str | None = None, config: LatticeConfig | None = None) -> Value:
    """Parse a table file.

    ``expect`` fixes the kind when the body is empty and no ``kind`` line is
    given.  ``config``, when passed, must agree with the header.
    """
    header: dict[str, tuple[str, int]] = {}
    rows: list[_Row] = []
    seen_magic = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        offset = len(line) - len(line.lstrip())
        stripped = line.strip()
        if not seen_magic:
            if stripped != FORMAT_HEADER:
                raise ParseError(f"expected '{FORMAT_HEADER}'", lineno, offset + 1)
            seen_magic = True
            continue
        key, _, rest = stripped.partition(" ")
        rest_offset = offset + len(key) + 1
        if key in ("GW", "BPS", "E", "FANO"):
            rows.append(_parse_row(key, rest, rest_offset, lineno))
        elif key in ("kind", "rank", "mass", "masscap", "tmin", "tmax", "c1"):
            if rows:
                raise ParseError(f"header line '{key}' after table rows", lineno, offset + 1)
            if key in header:
                raise ParseError(f"duplicate header line '{key}'", lineno, offset + 1)
            header[key] = (rest.strip(), lineno)
        else:
            raise ParseError(f"unknown record '{key}'", lineno, offset + 1)
    if not seen_magic:
        raise ParseError(f"missing '{FORMAT_HEADER}' line", 1, 1)

    kind = _resolve_kind(header, rows, expect)
    t_min, t_max = _t_range(header)
    if kind in LATTICE_KINDS:
        cfg = _lattice_config(header, t_max)
        if config is not None and config != cfg:
            raise DimensionMismatch(f"file header describes {cfg}, caller expects {config}")
        return _build_lattice(kind, cfg, t_min, rows)
    return _build_fano(kind, header, t_min, t_max, rows)


def _resolve_kind(header, rows, expect) -> str:
    if "kind" in header:
        kind, ln = header["kind"]
        if kind not in KINDS:
            raise ParseError(f"unknown kind {kind!r}", ln, 6)
    elif rows:
        kind = rows[0].kind
    elif expect:
        kind = expect
    else:
        raise ParseError("empty table without a 'kind' line", 1, 1)
    row_kind = "FANO" if kind == "FANO-BPS" else kind
    for r in rows:
        if r.kind != row_kind:
            raise ParseError(f"{r.kind} row in a {kind} table", r.line, 1)
    if expect is not None and expect != kind:
        raise DimensionMismatch(f"expected a {expect} table, file holds {kind}")
    return kind


def _int_field(header, key) -> int:
    val, ln = header[key]
    if not _INT.fullmatch(val):
        raise ParseError(f"'{key}' needs an integer", ln, len(key) + 2)
    return int(val)


def _t_range(header) -> tuple[int, int]:
    if "tmax" not in header:
        raise ParseError("missing 'tmax' header line", 1, 1)
    t_max = _int_field(header, "tmax")
    t_min = _int_field(header, "tmin") if "tmin" in header else -2
    for key, v in (("tmin", t_min), ("tmax", t_max)):
        if v % 2:
            ln = header[key][1] if key in header else 1
            raise ParseError(f"{key} must be even", ln, len(key) + 2)
    if t_min < -2 or t_max < t_min:
        raise ParseError("need -2 <= tmin <= tmax", header["tmax"][1], 6)
    return t_min, t_max


def _lattice_config(header, t_max: int) -> LatticeConfig:
    for key in ("rank", "mass", "masscap"):
        if key not in header:
            raise ParseError(f"missing '{key}' header line", 1, 1)
    rank = _int_field(header, "rank")
    mval, mln = header["mass"]
    masses = []
    col = 6
    for tok in mval.split():
        masses.append(parse_rational(tok, mln, col))
        col += len(tok) + 1
    if len(masses) != rank:
        raise DimensionMismatch(f"rank {rank} but {len(masses)} masses", mln)
    cval, cln = header["masscap"]
    cap = parse_rational(cval, cln, 9)
    try:
        return LatticeConfig(rank, tuple(masses), cap, t_max)
    except ValueError as exc:
        raise ParseError(str(exc), mln, 1) from None


def _build_lattice(kind: str, cfg: LatticeConfig, t_min: int, rows: list[_Row]) -> Value:
    seen = set()
    if kind == "GW":
        terms = {}
        for r in rows:
            A = _row_class(r, cfg)
            if A in seen:
                raise ParseError(f"class {A} listed twice", r.line, r.cls_col)
            seen.add(A)
            coeffs = _parse_gw_payload(r)
            for e in coeffs:
                if e < t_min or e > cfg.t_order:
                    raise DimensionMismatch(
                        f"t-exponent {e} outside [{t_min}, {cfg.t_order}]", r.line)
            terms[A] = TPoly(coeffs, -2, cfg.t_order)
        return QSeries(cfg, terms)
    entries = {}
    for r in rows:
        A = _row_class(r, cfg)
        if (A, r.genus) in seen:
            raise ParseError(f"entry ({A}, g={r.genus}) listed twice", r.line, r.cls_col)
        seen.add((A, r.genus))
        if 2 * r.genus - 2 > cfg.t_order or 2 * r.genus - 2 < t_min:
            raise DimensionMismatch(f"genus {r.genus} outside the t-window", r.line)
        entries[(A, r.genus)] = _parse_scalar_payload(r)
    cls = ETable if kind == "E" else BPSTable
    table = cls(cfg, entries)
    table.integrality_ok = table.all_integral()
    return table


def _row_class(r: _Row, cfg: LatticeConfig) -> LatticeClass:
    if len(r.cls) != cfg.rank:
        raise DimensionMismatch(f"class has {len(r.cls)} coordinates, rank is {cfg.rank}",
                                r.line)
    if not any(r.cls):
        raise ParseError("the zero class is not allowed", r.line, r.cls_col)
    A = LatticeClass(r.cls)
    if cfg.mass(A) > cfg.mass_cap:
        raise DimensionMismatch(f"class {A} has mass {cfg.mass(A)} above the cap", r.line)
    return A


def _build_fano(kind: str, header, t_min: int, t_max: int, rows: list[_Row]) -> Value:
    c1 = _int_field(header, "c1") if "c1" in header else None
    for r in rows:
        if c1 is None:
            c1 = r.c1
        elif r.c1 != c1:
            raise DimensionMismatch(f"row has c1={r.c1}, table has c1={c1}", r.line)
    if c1 is None:
        raise ParseError("FANO table needs a 'c1' line or at least one row", 1, 1)
    window = (t_max + 2) // 2
    coeffs = {}
    for r in rows:
        if r.genus in coeffs:
            raise ParseError(f"genus {r.genus} listed twice", r.line, 1)
        if 2 * r.genus - 2 > t_max or 2 * r.genus - 2 < t_min:
            raise DimensionMismatch(f"genus {r.genus} outside the t-window", r.line)
        coeffs[r.genus] = _parse_scalar_payload(r)
    if kind == "FANO":
        return FanoSeries(c1, coeffs, window)
    return FanoBPS(c1, {g: c for g, c in sorted(coeffs.items()) if c}, window)


def canonical(text: str, expect: str | None = None) -> str:
    return dumps(loads(text, expect))


# -- generators --------------------------------------------------------------

def _nonzero_int(rng: random.Random, magnitude: int) -> int:
    v = rng.randint(1, magnitude)
    return v if rng.random() < 0.5 else -v


def gen_bps_table(seed: int, config: LatticeConfig, density: float, genus_max: int,
                  magnitude: int = 9, table_type: type = BPSTable) -> BPSTable:
    """Deterministic random integer table on (class, genus <= genus_max)."""
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    if 2 * genus_max - 2 > config.t_order:
        raise ValueError(f"genus {genus_max} does not fit the t-window t^{config.t_order}")
    rng = random.Random(seed)
    entries = {}
    for A in config.classes():
        for g in range(genus_max + 1):
            if rng.random() < density:
                entries[(A, g)] = Fraction(_nonzero_int(rng, magnitude))
    return table_type(config, entries)


def gen_e_table(seed: int, config: LatticeConfig, density: float, genus_max: int,
                magnitude: int = 9) -> ETable:
    return gen_bps_table(seed, config, density, genus_max, magnitude, ETable)


def gen_config(rng: random.Random, max_rank: int = 2, max_cap: int = 8,
               max_t: int = 14) -> LatticeConfig:
    rank = rng.randint(1, max_rank)
    masses = tuple(Fraction(rng.randint(1, 3), rng.randint(1, 2)) for _ in range(rank))
    cap = Fraction(rng.randint(1, max_cap))
    t_order = 2 * rng.randint(-1, max_t // 2)
    return LatticeConfig(rank, masses, cap, t_order)


def _rand_rational(rng: random.Random) -> Fraction:
    return Fraction(_nonzero_int(rng, 50), rng.randint(1, 12))


def gen_value(seed: int) -> Value:
    """A random value of a random kind, used for serialization round trips."""
    rng = random.Random(seed)
    kind = rng.choice(KINDS)
    if kind in LATTICE_KINDS:
        cfg = gen_config(rng)
        density = rng.choice([0.0, 0.2, 0.5, 1.0])
        if kind == "GW":
            terms = {}
            for A in cfg.classes():
                if rng.random() < density:
                    terms[A] = TPoly({e: _rand_rational(rng) for e in range(-2, cfg.t_order + 1, 2)
                                      if rng.random() < 0.6}, -2, cfg.t_order)
            return QSeries(cfg, terms)
        entries = {}
        for A in cfg.classes():
            for g in range(cfg.genus_window + 1):
                if rng.random() < density / 2:
                    entries[(A, g)] = _rand_rational(rng)
        return (ETable if kind == "E" else BPSTable)(cfg, entries)
    c1 = rng.randint(0, 3)
    window = rng.randint(0, 10)
    coeffs = {g: _rand_rational(rng) for g in range(window + 1) if rng.random() < 0.5}
    if kind == "FANO":
        return FanoSeries(c1, coeffs, window)
    return FanoBPS(c1, coeffs, window)


def gen_file(seed: int) -> str:
    return dumps(gen_value(seed))
