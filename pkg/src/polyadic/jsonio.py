"""JSON forms of the value types.

Integers that may not fit in 64 bits are written as decimal strings;
readers accept either form.  Complex numbers are ``[re, im]`` pairs, with
integral parts written as JSON integers.
"""

from __future__ import annotations

import json
from typing import Any

from .arith import FactorialDigits, PolyadicInt, ResidueClaim
from .characters import Character
from .periodic import PeriodicFunction
from .topology import Grid

_INT64_MAX = 2 ** 63 - 1


def dumps(obj: Any) -> str:
    """Compact, key-sorted JSON: identical inputs give identical bytes."""
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def encode_int(n: int):
    return n if -_INT64_MAX <= n <= _INT64_MAX else str(n)


def decode_int(x) -> int:
    if isinstance(x, bool):
        raise ValueError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return int(x.strip())
    if isinstance(x, float) and x.is_integer():
        return int(x)
    raise ValueError(f"expected an integer, got {x!r}")


def _real(x: float):
    if x.is_integer() and abs(x) < 2 ** 53:
        return int(x)
    return x


def encode_complex(z: complex) -> list:
    z = complex(z)
    return [_real(z.real), _real(z.imag)]


def decode_complex(x) -> complex:
    if isinstance(x, (list, tuple)):
        if len(x) != 2:
            raise ValueError(f"complex pair needs two entries, got {x!r}")
        return complex(float(x[0]), float(x[1]))
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(x)
    raise ValueError(f"cannot read a complex number from {x!r}")


def polyadic_to_json(alpha: PolyadicInt) -> dict:
    return {"depth": alpha.depth, "digits": list(alpha.digits)}


def polyadic_from_json(obj: dict) -> PolyadicInt:
    digits = FactorialDigits(tuple(decode_int(d) for d in obj["digits"]))
    depth = decode_int(obj.get("depth", digits.depth))
    if depth != digits.depth:
        raise ValueError(
            f"depth {depth} disagrees with {digits.depth} digits")
    return PolyadicInt(digits)


def character_to_json(psi: Character) -> dict:
    return {"kind": "character", **polyadic_to_json(psi.tower)}


def character_from_json(obj: dict) -> Character:
    kind = obj.get("kind", "character")
    if kind != "character":
        raise ValueError(f"expected kind 'character', got {kind!r}")
    return Character(polyadic_from_json(obj))


def claim_to_json(claim: ResidueClaim) -> dict:
    return {"mod": encode_int(claim.modulus), "res": encode_int(claim.residue)}


def claim_from_json(obj: dict) -> ResidueClaim:
    return ResidueClaim(decode_int(obj["mod"]), decode_int(obj["res"]))


def function_to_json(u: PeriodicFunction) -> dict:
    return {"period": u.period,
            "values": [encode_complex(v) for v in u.values]}


def function_from_json(obj: dict) -> PeriodicFunction:
    values = tuple(decode_complex(v) for v in obj["values"])
    return PeriodicFunction(decode_int(obj.get("period", len(values))), values)


def grid_to_json(g: Grid) -> dict:
    return {"width": encode_int(g.width), "center": polyadic_to_json(g.center)}


def grid_from_json(obj: dict) -> Grid:
    return Grid(decode_int(obj["width"]), polyadic_from_json(obj["center"]))
