import pytest
from hypothesis import given, strategies as st

from cdawg_arrays.errors import TextError
from cdawg_arrays.text import (
    MAX_N_ENV, Text, fibonacci, fibonacci_length, normalize, random_text, read_text,
    render, thue_morse, write_body,
)


@pytest.mark.parametrize("raw, shown, n", [
    ("aabaababb", "aabaababb$", 10),
    ("", "$", 1),
    ("a", "a$", 2),
])
def test_normalize(raw, shown, n):
    t = normalize(raw)
    assert t.render() == shown
    assert t.n == n
    assert t.data[-1] == 0


def test_normalize_rejects_sentinel():
    with pytest.raises(TextError):
        normalize(b"ab\x00c")


def test_text_constructor_checks_termination():
    with pytest.raises(TextError):
        Text(b"abc")
    with pytest.raises(TextError):
        Text(b"a\x00b\x00")


def test_positions_are_one_based():
    t = normalize("abc")
    assert t.at(1) == ord("a")
    assert t.at(4) == 0
    assert t.factor(2, 2) == b"bc"
    with pytest.raises(IndexError):
        t.at(0)


@given(st.binary(max_size=40).map(lambda b: b.replace(b"\x00", b"")))
def test_normalize_length_and_injective(raw):
    t = normalize(raw)
    assert t.n == len(raw) + 1
    assert t.body == raw
    assert normalize(raw + b"x") != t


@pytest.mark.parametrize("k, shown", [(0, "0$"), (2, "0110$"), (3, "01101001$")])
def test_thue_morse(k, shown):
    assert thue_morse(k).render() == shown


def test_thue_morse_is_the_morphism_fixpoint():
    phi = {ord("0"): b"01", ord("1"): b"10"}
    word = b"0"
    for k in range(1, 11):
        word = b"".join(phi[c] for c in word)
        assert thue_morse(k).body == word
        assert len(thue_morse(k).body) == 2 ** k


@pytest.mark.parametrize("k, shown", [(1, "a$"), (2, "ab$"), (3, "aba$"), (5, "abaababa$")])
def test_fibonacci(k, shown):
    assert fibonacci(k).render() == shown


def test_fibonacci_lengths():
    fib = [1, 2]
    while len(fib) < 30:
        fib.append(fib[-1] + fib[-2])
    for k in range(1, 25):
        assert len(fibonacci(k).body) == fib[k - 1] == fibonacci_length(k)


def test_generator_preconditions():
    with pytest.raises(TextError):
        thue_morse(-1)
    with pytest.raises(TextError):
        fibonacci(0)
    with pytest.raises(TextError):
        random_text(5, 1, 0)
    with pytest.raises(TextError):
        random_text(5, 256, 0)


def test_random_text_contract():
    assert random_text(0, 2, 7).render() == "$"
    t = random_text(5, 2, 7)
    assert t.n == 6 and t.data[-1] == 0
    assert set(t.body) <= set(b"ab")
    assert random_text(40, 16, 3).sigma <= 17


def test_random_text_reproducible():
    assert random_text(200, 4, 11) == random_text(200, 4, 11)
    assert random_text(200, 4, 11) != random_text(200, 4, 12)


def test_random_text_large():
    assert random_text(10 ** 6, 4, 1).n == 10 ** 6 + 1


def test_size_cap(monkeypatch):
    with pytest.raises(TextError):
        thue_morse(5, cap=16)
    monkeypatch.setenv(MAX_N_ENV, "8")
    with pytest.raises(TextError):
        normalize("abcdefgh")
    assert normalize("abcdefg").n == 8


def test_file_roundtrip(tmp_path):
    t = fibonacci(6)
    path = tmp_path / "fib.txt"
    write_body(t, path)
    assert path.read_bytes() == t.body
    assert read_text(path) == t


def test_render_shows_sentinel():
    assert render(b"ab\x00") == "ab$"
