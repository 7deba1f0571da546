"""Exit criteria.  Each test records one PASS/FAIL line (see conftest)."""

import random
from fractions import Fraction as F

import pytest

from gvseries.errors import ParseError
from gvseries.fano import FanoSeries, fano_bps_from_gw, fano_gw_from_bps
from gvseries.gv import bps_from_gw, gw_from_bps
from gvseries.kernels import decompose_in_genus_basis, sin_kernel
from gvseries.lattice import LatticeClass, LatticeConfig
from gvseries.localcurves import g_series, local_bps
from gvseries.structure import extract_e, series_from_e
from gvseries.tableio import dumps, gen_bps_table, gen_e_table, gen_file, loads
from gvseries.tpoly import TPoly, mul

import oracles

GENUS_MAX = 6
T_ORDER = 2 * GENUS_MAX - 2 + 4


def random_configs(seed: int, n: int):
    rng = random.Random(seed)
    for _ in range(n):
        rank = rng.randint(1, 2)
        masses = tuple(rng.choice([F(1), F(3, 2), F(2)]) for _ in range(rank))
        cap = F(rng.randint(1, 8))
        yield rng, LatticeConfig(rank, masses, cap, T_ORDER)


def test_1_gv_roundtrip(record):
    bad = []
    nonempty = 0
    for i, (rng, cfg) in enumerate(random_configs(1001, 200)):
        table = gen_bps_table(rng.randrange(2**32), cfg, rng.choice([0.1, 0.3, 0.6]), GENUS_MAX)
        nonempty += bool(table.entries)
        back = bps_from_gw(gw_from_bps(table))
        if back.entries != table.entries:
            bad.append(i)
    ok = record(1, "GV roundtrip on 200 random integer tables", not bad and nonempty > 150,
                f"{200 - len(bad)}/200 exact, {nonempty} non-empty")
    assert ok, bad


def test_2_local_curve_genus_zero(record):
    d_max, T = 6, 10
    G = g_series(0, d_max, T)
    oracle_ok = True
    for d in range(1, d_max + 1):
        expect = {e: c / d for e, c in oracles.kernel(d, 0, T).items()}
        oracle_ok &= G[LatticeClass((d,))].coeffs == expect
    L = local_bps(0, d_max, T)
    ok = record(2, "local curve h=0: BPS_{1,0}(0)=1, all else 0",
                oracle_ok and L.entries == {(1, 0): 1} and L.integrality_ok,
                f"window g<={L.genus_window}, oracle match={oracle_ok}")
    assert ok


def test_3_local_curve_genus_one(record):
    d_max, T = 8, 10
    G = g_series(1, d_max, T)
    oracle_ok = all(G[LatticeClass((d,))].coeffs == {0: oracles.divisor_sum_over_d(d)}
                    for d in range(1, d_max + 1))
    L = local_bps(1, d_max, T)
    ok = record(3, "local curve h=1: BPS_{d,1}(1)=1 for d<=8, all else 0",
                oracle_ok and L.entries == {(d, 1): 1 for d in range(1, d_max + 1)},
                f"window g<={L.genus_window}, oracle match={oracle_ok}")
    assert ok


# window reaching past the largest observed genus at d = 6 for each h
AUDIT_WINDOWS = {h: 2 * (max(h - 1, 0) * 21 + 1) + 4 for h in range(5)}


def test_4_integrality_audit(record):
    problems = []
    summary = []
    for h in range(5):
        L = local_bps(h, 6, AUDIT_WINDOWS[h])
        if not all(c.denominator == 1 for c in L.entries.values()):
            problems.append(f"h={h}: non-integer entry")
        for d in range(1, 7):
            g0 = L.observed_genus_cutoffs[d]
            if not g0 < L.genus_window:
                problems.append(f"h={h} d={d}: cutoff {g0} not inside window {L.genus_window}")
        summary.append(f"h={h}:max cutoff {max(L.observed_genus_cutoffs.values())}"
                       f"/window {L.genus_window}")
    ok = record(4, "integrality and observed finiteness for h<=4, d<=6", not problems,
                "; ".join(problems or summary))
    assert ok


@pytest.fixture(scope="module")
def e_tables():
    out = []
    for rng, cfg in random_configs(2002, 100):
        out.append(gen_e_table(rng.randrange(2**32), cfg, rng.choice([0.1, 0.3]), GENUS_MAX))
    return out


@pytest.fixture(scope="module")
def e_series(e_tables):
    return [series_from_e(e) for e in e_tables]


def test_5_structure_uniqueness(record, e_tables, e_series):
    bad = [i for i, (e, s) in enumerate(zip(e_tables, e_series)) if extract_e(s).entries != e.entries]
    nonempty = sum(bool(e.entries) for e in e_tables)
    ok = record(5, "extract_e o series_from_e = id on 100 random e-tables",
                not bad and nonempty > 75, f"{100 - len(bad)}/100 exact, {nonempty} non-empty")
    assert ok, bad


def test_6_composite_integrality(record, e_series):
    bad = []
    for i, s in enumerate(e_series):
        t = bps_from_gw(s)
        if not (t.integrality_ok and all(c.denominator == 1 for c in t.entries.values())):
            bad.append(i)
    ok = record(6, "bps_from_gw(series_from_e(T)) integral", not bad, f"{100 - len(bad)}/100")
    assert ok, bad


def test_7_fano_roundtrip(record):
    rng = random.Random(3003)
    bad = []
    for c1 in (1, 2, 3):
        T = 2 * (8 + c1) - 2
        for i in range(100):
            b = {g: F(rng.randint(-50, 50)) for g in range(9)}
            b = {g: c for g, c in b.items() if c}
            gw = fano_gw_from_bps(c1, b, T)
            if fano_bps_from_gw(FanoSeries(c1, gw, (T + 2) // 2)) != b:
                bad.append((c1, i))
    shift_bad = 0
    for i in range(100):
        gw = {g: F(rng.randint(-50, 50), rng.randint(1, 9)) for g in range(9)}
        f = FanoSeries(0, gw, 8)
        if fano_bps_from_gw(f) != decompose_in_genus_basis(f.as_tpoly())[0]:
            shift_bad += 1
    ok = record(7, "Fano roundtrip c1 in {1,2,3}; c1=0 equals genus-basis peel",
                not bad and not shift_bad, f"{300 - len(bad)}/300 roundtrips, "
                f"{100 - shift_bad}/100 shift checks")
    assert ok


def test_8_kernel_correctness(record):
    s2 = sin_kernel(1, 2, 6)
    g2_ok = s2.coeffs == {2: 1, 4: F(-1, 12), 6: F(1, 360)} == oracles.kernel(1, 2, 6)
    s0 = sin_kernel(1, 0, 2)
    back = mul(s0, sin_kernel(1, 2, 6))
    g0_ok = (s0.coeffs == {-2: 1, 0: F(1, 12), 2: F(1, 240)}
             and back.agrees_with(TPoly({0: 1}, 0, back.valid_to)) and back.valid_to >= 2)
    scaling_ok = True
    for k in range(1, 6):
        for g in range(0, 5):
            base = sin_kernel(1, g, 12)
            scaled = {e: c * F(k) ** e for e, c in base.coeffs.items()}
            scaling_ok &= sin_kernel(k, g, 12).coeffs == scaled == oracles.kernel(k, g, 12)
    ok = record(8, "kernel expansions and k-scaling law", g2_ok and g0_ok and scaling_ok,
                f"genus2={g2_ok} genus0={g0_ok} scaling={scaling_ok}")
    assert ok


def _corrupt(text: str, rng: random.Random) -> tuple[str, int]:
    lines = text.splitlines()
    rows = [i for i, ln in enumerate(lines) if ln.split(" ", 1)[0] in ("GW", "BPS", "E", "FANO")]
    if rows:
        i = rng.choice(rows)
        ln = lines[i]
        how = rng.randrange(3)
        if how == 0:
            ln = ln.replace(" : ", " ", 1)
        elif how == 1:
            ln = ln.rsplit(" ", 1)[0] + " 1/0"
        else:
            ln = ln + (" ; 3 1/1" if ln.startswith("GW") else " extra")
        lines[i] = ln
    else:
        lines.append("BPS (1) g=0 1/1")
        i = len(lines) - 1
    return "\n".join(lines) + "\n", i + 1


def test_9_serialization(record):
    rng = random.Random(4004)
    identity_bad, line_bad = [], []
    for seed in range(100):
        text = gen_file(seed)
        if dumps(loads(text)) != text:
            identity_bad.append(seed)
        broken, line_no = _corrupt(text, rng)
        try:
            loads(broken)
        except ParseError as exc:
            if exc.line != line_no:
                line_bad.append((seed, exc.line, line_no))
        else:
            line_bad.append((seed, None, line_no))
    ok = record(9, "print o parse identity; corrupted rows give ParseError at the right line",
                not identity_bad and not line_bad,
                f"{100 - len(identity_bad)}/100 identical, {100 - len(line_bad)}/100 errors located")
    assert ok, (identity_bad, line_bad)
