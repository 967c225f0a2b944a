import json

import pytest

from polyadic import (Grid, PeriodicFunction, ResidueClaim, char_of, embed,
                      indicator)
from polyadic import jsonio


def test_polyadic_round_trip():
    for depth in (0, 3, 8, 20):
        alpha = embed(-12345, depth)
        obj = json.loads(jsonio.dumps(jsonio.polyadic_to_json(alpha)))
        assert jsonio.polyadic_from_json(obj) == alpha


def test_polyadic_depth_must_match():
    with pytest.raises(ValueError):
        jsonio.polyadic_from_json({"depth": 3, "digits": [1, 2]})
    with pytest.raises(ValueError):
        jsonio.polyadic_from_json({"depth": 2, "digits": [1, 3]})


def test_character_tag():
    psi = char_of(embed(9, 4))
    obj = jsonio.character_to_json(psi)
    assert obj["kind"] == "character"
    assert jsonio.character_from_json(obj) == psi
    with pytest.raises(ValueError):
        jsonio.character_from_json({**obj, "kind": "grid"})


def test_large_integers_become_strings():
    big = 2 ** 70
    assert jsonio.encode_int(big) == str(big)
    assert jsonio.encode_int(12) == 12
    assert jsonio.decode_int(str(big)) == big
    claim = ResidueClaim(big, big - 1)
    assert jsonio.claim_from_json(jsonio.claim_to_json(claim)) == claim
    with pytest.raises(ValueError):
        jsonio.decode_int(True)


def test_complex_encoding():
    assert jsonio.encode_complex(3) == [3, 0]
    assert jsonio.encode_complex(0.5 - 2j) == [0.5, -2]
    assert jsonio.decode_complex([1, -1]) == 1 - 1j
    assert jsonio.decode_complex(4) == 4
    with pytest.raises(ValueError):
        jsonio.decode_complex([1, 2, 3])


def test_function_and_grid_round_trip():
    u = PeriodicFunction.from_values([1j, 2, -0.25])
    assert jsonio.function_from_json(jsonio.function_to_json(u)) == u
    assert jsonio.function_to_json(indicator(2, 1)) == \
        {"period": 2, "values": [[0, 0], [1, 0]]}
    g = Grid(6, embed(5, 3))
    assert jsonio.grid_from_json(jsonio.grid_to_json(g)) == g


def test_dumps_is_canonical():
    assert jsonio.dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
