"""Loxodromic classification and geodesic-spectrum enumeration."""

import cmath
import math
import random

import pytest

from cuspedzeta import words as W
from cuspedzeta.errors import FormatError, ValidationError
from cuspedzeta.spectrum import (GeodesicClass, MoebiusMatrix, Spectrum,
                                 classify, enumerate_classes,
                                 figure_eight_generators, load_spectrum,
                                 save_spectrum)

from conftest import FIXTURES

# frozen first length values of the figure-eight spectrum (oracle:
# tr = 2 cosh((l + i theta)/2) inverted on the shortest loxodromic traces)
FIG8_SYSTOLE = 1.0870701449957394
FIG8_LENGTHS = (1.0870701449957394, 1.6628858910586211, 1.7251092553241218)


def _random_loxodromic(rng):
    lam = cmath.rect(math.exp(rng.uniform(0.2, 1.2)), rng.uniform(-3, 3))
    a = rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)
    m = MoebiusMatrix(lam, 0, a, 1 / lam)
    return m


def test_classification_basics():
    assert classify(MoebiusMatrix(1, 1, 0, 1)).kind == "parabolic"
    assert classify(MoebiusMatrix(1, 0, 0, 1)).kind == "identity"
    rot = cmath.exp(0.3j)
    assert classify(MoebiusMatrix(rot, 0, 0, rot.conjugate())).kind == "elliptic"
    lox = classify(MoebiusMatrix(2, 0, 0, 0.5))
    assert lox.kind == "loxodromic"
    assert abs(lox.length - 2 * math.log(2)) < 1e-12
    assert abs(lox.holonomy) < 1e-12


def test_length_and_holonomy_from_eigenvalue():
    rng = random.Random(3)
    for _ in range(25):
        m = _random_loxodromic(rng)
        et = classify(m)
        assert et.kind == "loxodromic"
        lam = m.a
        assert abs(et.length - 2 * math.log(abs(lam))) < 1e-10
        assert abs(cmath.exp(1j * et.holonomy) - (lam / abs(lam)) ** 2) < 1e-10


def test_classification_is_conjugation_invariant():
    rng = random.Random(5)
    for _ in range(25):
        m = _random_loxodromic(rng)
        g = MoebiusMatrix(1, rng.uniform(-2, 2) + 1j * rng.uniform(-2, 2), 0, 1)
        conj = (g @ m) @ g.inverse()
        a, b = classify(m), classify(conj)
        assert abs(a.length - b.length) < 1e-9
        assert abs(a.holonomy - b.holonomy) < 1e-9


def test_inverse_has_same_length_and_holonomy():
    rng = random.Random(9)
    for _ in range(25):
        m = _random_loxodromic(rng)
        a, b = classify(m), classify(m.inverse())
        assert abs(a.length - b.length) < 1e-10
        assert abs(a.holonomy - b.holonomy) < 1e-10


# --- enumeration -----------------------------------------------------------

@pytest.fixture(scope="module")
def fig8():
    gens = figure_eight_generators()
    return enumerate_classes(gens, [1.0, 1.0], max_word_len=8,
                             cutoff_length=3.0,
                             covolume=2 * math.sqrt(3),
                             volume=2.029883212819307, complete=True)


def test_fig8_systole_and_lengths(fig8):
    prim = sorted({round(c.length, 10) for c in fig8.primitives()})
    assert abs(prim[0] - FIG8_SYSTOLE) < 1e-9
    for got, want in zip(prim, FIG8_LENGTHS):
        assert abs(got - want) < 1e-9


def test_fig8_oriented_multiplicity(fig8):
    # amphichirality: 4 oriented primitive classes at the systole
    at_systole = [c for c in fig8.primitives()
                  if abs(c.length - FIG8_SYSTOLE) < 1e-9]
    assert len(at_systole) == 4
    holos = sorted(c.holonomy for c in at_systole)
    assert abs(holos[0] + holos[3]) < 1e-9   # conjugate pair of traces


def test_fig8_classes_close_under_inverse(fig8):
    keys = {(round(c.length, 9), round(c.holonomy, 9)): 0
            for c in fig8.classes}
    for c in fig8.classes:
        keys[(round(c.length, 9), round(c.holonomy, 9))] += 1
    assert all(v % 2 == 0 for v in keys.values())


def test_fig8_powers_match_primitives(fig8):
    prim_lengths = sorted(c.length for c in fig8.primitives())
    for c in fig8.classes:
        if c.is_primitive:
            continue
        k = round(c.length / c.primitive_length)
        assert k >= 2
        assert abs(c.length - k * c.primitive_length) < 1e-9
        assert any(abs(c.primitive_length - l0) < 1e-9 for l0 in prim_lengths)


def test_enumeration_is_deterministic():
    gens = figure_eight_generators()
    a = enumerate_classes(gens, [1.0, 1.0], max_word_len=6, cutoff_length=2.5)
    b = enumerate_classes(gens, [1.0, 1.0], max_word_len=6, cutoff_length=2.5)
    assert [(c.word, c.length, c.char_value) for c in a.classes] == \
           [(c.word, c.length, c.char_value) for c in b.classes]


def test_character_weights_are_unit_modulus(fig8):
    for c in fig8.classes:
        assert abs(abs(c.char_value) - 1) < 1e-12


# --- persistence -----------------------------------------------------------

def test_round_trip_is_byte_identical(fig8, tmp_path):
    p1 = tmp_path / "a.csv"
    p2 = tmp_path / "b.csv"
    save_spectrum(fig8, p1)
    save_spectrum(load_spectrum(p1), p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_frozen_fixture_matches_enumeration(fig8, tmp_path):
    p = tmp_path / "fresh.csv"
    save_spectrum(fig8, p)
    assert p.read_bytes() == (FIXTURES / "fig8_spectrum.csv").read_bytes()


def test_load_rejects_malformed_rows(tmp_path):
    good = (FIXTURES / "fig8_spectrum.csv").read_text().splitlines()
    bad = tmp_path / "bad.csv"
    bad.write_text("\n".join(good[:2] + ["1.0,nope,1,0,1.0,1,ab"]) + "\n")
    with pytest.raises(FormatError) as exc:
        load_spectrum(bad)
    assert "line 3" in str(exc.value)


def test_validate_rejects_inconsistent_class():
    c = GeodesicClass(word=((0, 1),), length=1.0, holonomy=0.0,
                      char_value=1.0 + 0j, primitive_length=0.3,
                      multiplicity=1)
    s = Spectrum(classes=(c,), cutoff_length=2.0)
    with pytest.raises(FormatError):
        s.validate()
