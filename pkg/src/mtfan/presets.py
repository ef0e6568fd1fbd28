"""Built-in example algebras and modules."""
from __future__ import annotations

from .quiver import build_algebra, build_module


def _a2():
    return build_algebra(
        {
            "p": 2,
            "vertices": ["1", "2"],
            "arrows": [{"name": "a", "from": "1", "to": "2"}],
        }
    )


def _a2_p1():
    A = _a2()
    return build_module(A, {"1": 1, "2": 1}, {"a": [[1]]})


def _a2_s1():
    A = _a2()
    return build_module(A, {"1": 1}, {})


def _nakayama2_121():
    A = build_algebra(
        {
            "p": 2,
            "vertices": ["1", "2"],
            "arrows": [
                {"name": "a", "from": "1", "to": "2"},
                {"name": "b", "from": "2", "to": "1"},
            ],
            "relations": [
                [{"coeff": 1, "path": ["a", "b", "a"]}],
                [{"coeff": 1, "path": ["b", "a", "b"]}],
            ],
        }
    )
    return build_module(A, {"1": 2, "2": 1}, {"a": [[1, 0]], "b": [[0], [1]]})


def _square_lambda():
    A = build_algebra(
        {
            "p": 3,
            "vertices": ["1", "2", "3", "4"],
            "arrows": [
                {"name": "a", "from": "1", "to": "2"},
                {"name": "b", "from": "2", "to": "4"},
                {"name": "c", "from": "1", "to": "3"},
                {"name": "d", "from": "3", "to": "4"},
            ],
        }
    )
    return build_module(
        A,
        {"1": 1, "2": 1, "3": 1, "4": 1},
        {"a": [[1]], "b": [[1]], "c": [[1]], "d": [[2]]},
    )


PRESETS = {
    "a2-P1": _a2_p1,
    "a2-S1": _a2_s1,
    "nakayama2-121": _nakayama2_121,
    "square-lambda": _square_lambda,
}


def preset_names():
    return tuple(sorted(PRESETS))


def preset_module(name):
    if name not in PRESETS:
        raise KeyError(
            f"unknown preset {name!r}; available: {', '.join(preset_names())}"
        )
    return PRESETS[name]()
