"""Upper half-plane geometry, ping-pong generator selection and
numerical certificates for a family of free Fuchsian groups.

The C++ extension does the work; this wrapper turns its JSON payloads
into plain dicts.
"""

from __future__ import annotations

import json
from typing import Any

from ._core import (  # noqa: F401
    Isometry,
    below_hypercycle,
    bisector,
    busemann,
    constant_C,
    dist,
    family_matrix,
)
from . import _core

C = constant_C()

__all__ = [
    "C",
    "Isometry",
    "below_hypercycle",
    "bisector",
    "busemann",
    "constant_C",
    "construct",
    "dirichlet_contains",
    "dist",
    "family_matrix",
    "inj_estimate",
    "injectivity_check",
    "render_svg",
    "verify_pingpong",
    "witness",
]


def construct(count: int, n_max: int = 128) -> dict[str, Any]:
    """Select `count` generators and return the group spec as a dict."""
    return json.loads(_core.construct_json(count, n_max))


def _spec_text(spec: dict[str, Any] | str) -> str:
    return spec if isinstance(spec, str) else json.dumps(spec)


def verify_pingpong(spec: dict[str, Any] | str) -> dict[str, Any]:
    return json.loads(_core.verify_pingpong_json(_spec_text(spec)))


def injectivity_check(spec: dict[str, Any] | str, word_len: int = 4,
                      samples: int = 200) -> dict[str, Any]:
    return json.loads(_core.injectivity_json(_spec_text(spec), word_len, samples))


def witness(spec: dict[str, Any] | str, q: str, count: int = 3,
            tol: float = 1e-8) -> dict[str, Any]:
    return json.loads(_core.witness_json(_spec_text(spec), q, count, tol))


def dirichlet_contains(spec: dict[str, Any] | str, z: complex) -> bool:
    return _core.dirichlet_contains(_spec_text(spec), z)


def inj_estimate(spec: dict[str, Any] | str, t_min: float = 1.0, t_max: float = 1e5,
                 points: int = 1000, word_len: int = 3, window: float = 2.0) -> float:
    return _core.inj_estimate(_spec_text(spec), t_min, t_max, points, word_len, window)


def render_svg(spec: dict[str, Any] | str, what: str = "all", log_y: bool = False) -> str:
    return _core.render_svg(_spec_text(spec), what, log_y)
