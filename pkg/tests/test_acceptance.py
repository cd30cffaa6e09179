"""Acceptance checks, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible with ``-s``) and
then asserts.  ``python3 tests/test_acceptance.py`` runs all of them and
prints the eleven lines without stopping at the first failure.
"""

import math
import subprocess
import sys
import time

import numpy as np

from revdragon.alphabet import angle_from_fraction
from revdragon.ifs import PRESET_PARAMS, family_ifs
from revdragon.revrep import GaussianInt, decode, encode
from revdragon.sequences import Condition, FirstDigitPolicy, RevolvingSequence, compute_bss, enumerate_words
from revdragon.series import Family, FamilyParams, evaluate
from revdragon.verify import (
    check_convergence,
    check_cross_representation,
    check_rotation_union,
    check_scaling,
    check_set_equation,
    count_check,
    hausdorff,
)

ONE = FirstDigitPolicy.MUST_BE_ONE
SQRT3_6 = math.sqrt(3) / 6
TER = FamilyParams(complex(0.5, -SQRT3_6), angle_from_fraction(1, 3), complex(0.5, SQRT3_6))
LEVY = FamilyParams(complex(0.5, -0.5), angle_from_fraction(1, 4))
TILING = FamilyParams(complex(0.5, -0.5), angle_from_fraction(1, 4, -1))
HEIGHWAY = FamilyParams(complex(0.5, 0.5), angle_from_fraction(1, 4))
TWIN = FamilyParams(complex(0.5, 0.5), angle_from_fraction(1, 2))


def _line(number, title, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}: {detail}")
    return ok


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def _brute_set_equation(f, p, depth):
    """Per-word scalar evaluation of C_n and of the union of map images of C_{n-1}."""
    ifs = family_ifs(f, p)
    prev = [evaluate(f, p, w) for w in enumerate_words(f.condition, p.angle, depth - 1, f.policy)]
    cloud = [evaluate(f, p, w) for w in enumerate_words(f.condition, p.angle, depth, f.policy)]
    image = [m(z) for m in ifs.maps for z in prev]
    return hausdorff(cloud, image)


def criterion_1():
    brute = [_brute_set_equation(Family.T1, TER, n) for n in (1, 2, 3, 4)]
    report, secs = _timed(check_set_equation, Family.T1, TER, 6, 1e-10)
    ok = report.max_mismatch <= 1e-10 and secs < 5 and all(b <= 1e-10 for b in brute)
    detail = (
        f"depth 6 max_mismatch={report.max_mismatch:.6g} (tol 1e-10), "
        f"cloud->image={report.extras['cloud_to_image']:.3g}, "
        f"image->cloud={report.extras['image_to_cloud']:.6g}, "
        f"brute depths 1-4={[float(f'{b:.4g}') for b in brute]}, {secs:.2f}s"
    )
    return ok, detail


def criterion_2():
    parts, ok = [], True
    for name, p in (("levy", LEVY), ("tiling", TILING)):
        report, secs = _timed(check_set_equation, Family.X1, p, 10, 1e-10)
        ok &= report.max_mismatch <= 1e-10 and secs < 2
        parts.append(f"{name} {report.max_mismatch:.3g} in {secs:.2f}s")
    return ok, ", ".join(parts)


def criterion_3():
    report = check_scaling(HEIGHWAY, 10, 1e-12)
    return report.max_mismatch <= 1e-12, f"pointwise max {report.max_mismatch:.3g}"


def criterion_4():
    p = FamilyParams(complex(0.5, SQRT3_6), angle_from_fraction(1, 12))
    report = check_scaling(p, 8, 1e-12)
    src = report.extras["src_set"]
    return src <= 1e-12, f"set mismatch {src:.3g}"


def criterion_5():
    parts, ok = [], True
    for name, p in (("levy", LEVY), ("twindragon", TWIN)):
        for f in (Family.H, Family.X):
            r = check_rotation_union(f, p, 8, 1e-10)
            ok &= r.max_mismatch <= 1e-10
            parts.append(f"{name}/{f.value} {r.max_mismatch:.3g}")
    return ok, ", ".join(parts)


def criterion_6():
    levy = check_cross_representation(Family.X1, LEVY, 12, 12, 0.02)
    ter = check_cross_representation(Family.T1, TER, 8, 8, 0.05)
    ok = levy.max_mismatch <= 0.02 and ter.max_mismatch <= 0.05
    detail = (
        f"levy series {levy.extras['series_vs_orbit']:.4g} williams {levy.extras['williams_vs_orbit']:.4g} (<=0.02); "
        f"terdragon series {ter.extras['series_vs_orbit']:.4g} williams {ter.extras['williams_vs_orbit']:.4g} (<=0.05)"
    )
    return ok, detail


def criterion_7():
    parts, ok = [], True
    for name in ("levy", "tiling", "heighway", "twindragon", "terdragon"):
        f, p = PRESET_PARAMS[name]
        r = check_convergence(f, p, range(4, 11))
        ok &= r.passed
        parts.append(f"{name} max ratio {r.max_mismatch:.3f} (<= {r.tolerance:.3f})")
    return ok, ", ".join(parts)


def criterion_8():
    lengths = range(0, 11)
    ok, parts = True, []
    for c, angle, formula in (
        (Condition.GRC, angle_from_fraction(1, 4), lambda n: 2**n),
        (Condition.SRC, angle_from_fraction(1, 3), lambda n: 2**n),
        (Condition.TRC, angle_from_fraction(1, 3), lambda n: (3**n + 1) // 2),
    ):
        r = count_check(c, lengths, angle, ONE)
        brute = r.extras["brute_force"]
        confirmed = r.extras["closed_form_holds"] and brute == [formula(n) for n in lengths]
        ok &= r.passed and confirmed
        parts.append(f"{c.value} n=10: {r.extras['enumerated'][-1]}={brute[-1]}")
    return ok, ", ".join(parts)


def criterion_9():
    s = RevolvingSequence(angle_from_fraction(1, 4), (0, None, 0, 1, 1, 2))
    bits = tuple(compute_bss(s))
    return bits == (1, 0, 0, 1, 0, 0), f"bss={bits}"


def criterion_10():
    t0 = time.perf_counter()
    bad, longest = [], 0
    for x in range(-5, 6):
        for y in range(-5, 6):
            z = GaussianInt(x, y)
            w = encode(z, max_len=12)
            longest = max(longest, len(w))
            if decode(w) != z:
                bad.append(z)
    secs = time.perf_counter() - t0
    return not bad and secs < 30, f"121 values, {len(bad)} mismatches, longest word {longest}, {secs:.2f}s"


def _cli(*argv):
    res = subprocess.run([sys.executable, "-m", "revdragon", *argv], capture_output=True, check=False)
    return res.returncode, res.stdout


def criterion_11(tmp_dir):
    csv_path = f"{tmp_dir}/levy.csv"
    runs = {
        "cloud": ("cloud", "--preset", "terdragon", "--depth", "7"),
        "verify": ("verify", "set-equation", "--preset", "levy", "--depth", "9"),
        "chaos": ("attract", "--preset", "levy", "--method", "chaos", "--iterations", "20000", "--seed", "11"),
        "render": ("render", "--in", csv_path, "--width", "96", "--height", "64", "--mode", "log_density"),
    }
    code, _ = _cli("cloud", "--preset", "levy", "--depth", "10", "--out", csv_path)
    ok, parts = code == 0, []
    for name, argv in runs.items():
        first, second = _cli(*argv), _cli(*argv)
        same = first == second and len(first[1]) > 0
        ok &= same
        parts.append(f"{name} {'identical' if same else 'DIFFERS'} ({len(first[1])} bytes)")
    return ok, ", ".join(parts)


TITLES = {
    1: "terdragon set equation at depth 6",
    2: "levy and tiling set equations at depth 10",
    3: "heighway scaling at depth 10",
    4: "signed-family scaling at depth 8",
    5: "rotation unions at depth 8",
    6: "cross-representation",
    7: "convergence ratios, depths 4-10",
    8: "enumeration counts n <= 10",
    9: "binary static sequence example",
    10: "gaussian integer round trip",
    11: "determinism",
}


def _check(number, *args):
    ok, detail = globals()[f"criterion_{number}"](*args)
    assert _line(number, TITLES[number], ok, detail), detail


def test_criterion_01_terdragon_set_equation():
    _check(1)


def test_criterion_02_two_map_set_equations():
    _check(2)


def test_criterion_03_heighway_scaling():
    _check(3)


def test_criterion_04_signed_scaling():
    _check(4)


def test_criterion_05_rotation_unions():
    _check(5)


def test_criterion_06_cross_representation():
    _check(6)


def test_criterion_07_convergence():
    _check(7)


def test_criterion_08_counts():
    _check(8)


def test_criterion_09_bss_example():
    _check(9)


def test_criterion_10_revrep_round_trip():
    _check(10)


def test_criterion_11_determinism(tmp_path):
    _check(11, tmp_path)


if __name__ == "__main__":
    import tempfile

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for n in TITLES:
            args = (tmp,) if n == 11 else ()
            ok, detail = globals()[f"criterion_{n}"](*args)
            failures += not _line(n, TITLES[n], ok, detail)
    sys.exit(1 if failures else 0)
