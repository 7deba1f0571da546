"""Seeded round-trip checks shared by the ``verify`` command."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .fano import FanoSeries, fano_bps_from_gw, fano_gw_from_bps
from .gv import bps_from_gw, gw_from_bps
from .lattice import LatticeConfig
from .structure import extract_e, series_from_e
from .tableio import dumps, gen_bps_table, gen_e_table, gen_file, loads


@dataclass
class CheckResult:
    name: str
    passed: int
    failed: int
    first_failure: str = ""

    @property
    def ok(self) -> bool:
        return self.failed == 0


def random_config(rng: random.Random, max_rank: int = 2, max_cap: int = 8,
                  genus_max: int = 6) -> LatticeConfig:
    rank = rng.randint(1, max_rank)
    masses = tuple(Fraction(rng.randint(1, 2)) for _ in range(rank))
    cap = Fraction(rng.randint(1, max_cap))
    return LatticeConfig(rank, masses, cap, 2 * genus_max - 2 + 4)


def check_gv_roundtrip(seed: int, count: int, genus_max: int = 6) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("gv-roundtrip", 0, 0)
    for i in range(count):
        cfg = random_config(rng, genus_max=genus_max)
        table = gen_bps_table(rng.randrange(2**32), cfg, rng.choice([0.1, 0.3, 0.6]), genus_max)
        back = bps_from_gw(gw_from_bps(table))
        if back.entries == table.entries:
            res.passed += 1
        else:
            res.failed += 1
            res.first_failure = res.first_failure or f"table #{i} over {cfg}"
    return res


def check_structure_roundtrip(seed: int, count: int, genus_max: int = 6) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("structure-roundtrip", 0, 0)
    for i in range(count):
        cfg = random_config(rng, genus_max=genus_max)
        table = gen_e_table(rng.randrange(2**32), cfg, rng.choice([0.1, 0.3]), genus_max)
        s = series_from_e(table)
        back = extract_e(s)
        bps = bps_from_gw(s)
        if back.entries == table.entries and bps.integrality_ok:
            res.passed += 1
        else:
            res.failed += 1
            res.first_failure = res.first_failure or f"e-table #{i} over {cfg}"
    return res


def check_fano_roundtrip(seed: int, count: int, genus_max: int = 8) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("fano-roundtrip", 0, 0)
    for i in range(count):
        c1 = rng.randint(1, 3)
        b = {g: Fraction(rng.randint(-20, 20)) for g in range(genus_max + 1)}
        b = {g: c for g, c in b.items() if c}
        T = 2 * (genus_max + c1) - 2
        gw = fano_gw_from_bps(c1, b, T)
        back = fano_bps_from_gw(FanoSeries(c1, gw, (T + 2) // 2))
        if back == b:
            res.passed += 1
        else:
            res.failed += 1
            res.first_failure = res.first_failure or f"vector #{i} with c1={c1}"
    return res


def check_serialization(seed: int, count: int) -> CheckResult:
    res = CheckResult("serialization", 0, 0)
    for i in range(count):
        text = gen_file(seed * 100_003 + i)
        if dumps(loads(text)) == text:
            res.passed += 1
        else:
            res.failed += 1
            res.first_failure = res.first_failure or f"file #{i}"
    return res


def run_all(seed: int, count: int = 20) -> list[CheckResult]:
    return [
        check_gv_roundtrip(seed, count),
        check_structure_roundtrip(seed, max(1, count // 2)),
        check_fano_roundtrip(seed, count),
        check_serialization(seed, count),
    ]
