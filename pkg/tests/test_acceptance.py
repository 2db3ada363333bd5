"""Exit criteria.  Each test prints one ``ACCEPT <k> PASS|FAIL`` line.

All comparisons are exact integer or set equality; each criterion also has
a wall-clock budget.
"""

import random
import time
from itertools import product

import pytest

from tnets.bijection import NuInput, nu, nu_inverse
from tnets.debruijn import b_unsplit, rho, stanley_decode, stanley_encode
from tnets.euler import count_cycles_best, enumerate_cycles
from tnets.graph_core import debruijn_graph, double, validate_tnet
from tnets.harness import random_tnet, verify_cascade
from tnets.splitting import build_levels

from conftest import corpus_nets


@pytest.fixture
def report(capsys):
    def emit(k, title, ok, started, budget):
        elapsed = time.perf_counter() - started
        verdict = "PASS" if ok and elapsed < budget else "FAIL"
        with capsys.disabled():
            print(f"\nACCEPT {k} {verdict} {title} ({elapsed:.2f}s, budget {budget}s)")
        assert ok, title
        assert elapsed < budget, f"{title}: {elapsed:.1f}s over {budget}s"

    return emit


def windows_ok(bits, n):
    ext = bits + bits[: n - 1]
    return len({ext[k:k + n] for k in range(len(bits))}) == 1 << n


def test_1_counting_formula(report):
    t0 = time.perf_counter()
    expected = {2: 1, 3: 2, 4: 16, 5: 2048}
    ok = all(len(enumerate_cycles(debruijn_graph(n))) == v for n, v in expected.items())
    ok &= all(v == 2 ** (2 ** (n - 1) - n) for n, v in expected.items())
    ok &= count_cycles_best(debruijn_graph(6)) == 67_108_864
    report(1, "|Theta(H_n)| = 2^(2^(n-1)-n), n=2..5 enumerated, n=6 by BEST", ok, t0, 60)


def test_2_doubling_identity(report):
    t0 = time.perf_counter()
    nets = [debruijn_graph(n) for n in (2, 3, 4)] + corpus_nets(50)
    ok = True
    zero = 0
    for net in nets:
        base = len(enumerate_cycles(net))
        zero += base == 0
        ok &= len(enumerate_cycles(double(net))) == 2 ** (net.m - 1) * base
    ok &= zero > 0
    report(2, f"|Theta(N*)| = 2^(m-1)|Theta(N)| on {len(nets)} nets ({zero} with zero cycles)", ok, t0, 60)


def test_3_cascade_identities(report):
    t0 = time.perf_counter()
    nets = [debruijn_graph(3)] + corpus_nets(20)
    ok = True
    for net in nets:
        levels = build_levels(net)
        counts = [[len(enumerate_cycles(w.graph)) for w in level] for level in levels]
        for i in range(net.m - 1):
            for k in range(len(levels[i])):
                ok &= counts[i][k] == 2 * counts[i + 1][2 * k] + 2 * counts[i + 1][2 * k + 1]
        sums = [sum(c) for c in counts]
        ok &= all(sums[i - 1] == 2 * sums[i] for i in range(1, net.m))
        ok &= sums[net.m - 1] == sums[net.m]
        ok &= verify_cascade(net).passed
    report(3, f"|w| = 2|w0| + 2|w1| per graph and halving level sums on {len(nets)} nets", ok, t0, 120)


def test_4_bound(report):
    t0 = time.perf_counter()
    pair = validate_tnet(2, [(0, 1), (0, 1), (1, 0), (1, 0)])
    nets = [debruijn_graph(n) for n in (2, 3, 4, 5)] + corpus_nets(60) + [pair]
    ok = all(count_cycles_best(net) <= 2 ** (net.m - 1) for net in nets)
    ok &= all(len(enumerate_cycles(net)) <= 2 ** (net.m - 1) for net in nets if net.m <= 5)
    tight = len(enumerate_cycles(pair)) == 2 == 2 ** (pair.m - 1)
    report(4, f"|Theta(N)| <= 2^(m-1) on {len(nets)} nets, tight on parallel pair", ok and tight, t0, 10)


def test_5_nu_bijectivity(report):
    t0 = time.perf_counter()
    ok = True
    sizes = []
    for n in (2, 3, 4):
        net = debruijn_graph(n)
        seen = {}
        for p in enumerate_cycles(net):
            for bits in product("01", repeat=net.m - 1):
                inp = NuInput(p, "".join(bits))
                c = nu(net, inp)
                ok &= c not in seen
                seen[c] = inp
                ok &= nu_inverse(net, c) == inp
        ok &= set(seen) == enumerate_cycles(double(net))
        sizes.append(len(seen))
    ok &= sizes == [2, 16, 2048]
    report(5, f"nu bijective on H_2, H_3, H_4 (image sizes {sizes})", ok, t0, 120)


def test_6_rho_bijectivity(report):
    t0 = time.perf_counter()
    ok = True
    for n in (3, 4, 5):
        k = 2 ** (n - 1) - n
        image = set()
        for bits in product("01", repeat=k):
            b = rho(n, "".join(bits)).bits
            ok &= b.startswith("0" * n) and windows_ok(b, n)
            image.add(b)
        ok &= len(image) == 2**k
    report(6, "rho_n bijective onto B0(n) for n = 3, 4, 5", ok, t0, 120)


def test_7_stanley_codec(report):
    t0 = time.perf_counter()
    ok = True
    b3 = sorted({b_unsplit(r, rho(3, s)).bits for s in "01" for r in range(8)})
    ok &= len(b3) == 16
    for b1 in b3:
        for b2 in b3:
            d1, d2 = stanley_decode(stanley_encode(b1, b2, 3), 3)
            ok &= (d1.bits, d2.bits) == (b1, b2)
    for bits in product("01", repeat=8):
        bits = "".join(bits)
        d1, d2 = stanley_decode(bits, 3)
        ok &= stanley_encode(d1.bits, d2.bits, 3) == bits
    rng = random.Random(2024)
    for n in (4, 5):
        for _ in range(1000):
            bits = "".join(rng.choice("01") for _ in range(1 << n))
            d1, d2 = stanley_decode(bits, n)
            ok &= stanley_encode(d1.bits, d2.bits, n) == bits
            ok &= stanley_decode(stanley_encode(d1.bits, d2.bits, n), n) == (d1, d2)
    report(7, "Stanley codec: 256 pairs + 256 strings at n=3, 1000 samples each at n=4, 5", ok, t0, 60)


def test_8_oracle_agreement(report):
    t0 = time.perf_counter()
    pair = validate_tnet(2, [(0, 1), (0, 1), (1, 0), (1, 0)])
    loops = validate_tnet(1, [(0, 0), (0, 0)])
    nets = [debruijn_graph(2), debruijn_graph(3), pair, loops] + corpus_nets(60)
    nets += [random_tnet(5, seed) for seed in range(100, 140)]
    ok = all(len(enumerate_cycles(net)) == count_cycles_best(net) for net in nets)
    report(8, f"enumeration = BEST on {len(nets)} nets with m <= 5", ok, t0, 60)
