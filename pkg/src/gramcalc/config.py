"""Size caps for brute-force enumeration, with file and environment overrides.

Caps keep exhaustive enumeration (permutations, cyclically ordered
partitions, signed permutations, perfect matchings) and derivative depth
within desk-scale runtimes.  Precedence, lowest to highest: built-in
defaults, config file entries, environment variables.

A config file holds ``key = value`` lines; ``#`` starts a comment.
Environment variables use the ``GRAMCALC_CAP_`` prefix, for example
``GRAMCALC_CAP_PERMUTATIONS=10``.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

from .errors import BoundExceeded, GramcalcError

ENV_PREFIX = "GRAMCALC_CAP_"


@dataclass(frozen=True)
class Caps:
    """Maximum sizes accepted by the brute-force and derivative layers.

    permutations: largest n for enumerating the symmetric group S_n.
    cops: largest n for enumerating cyclically ordered partitions of [n].
    signed: largest n for enumerating signed permutations of [n].
    matchings: largest n for enumerating perfect matchings of [2n].
    derive: largest derivative depth accepted by the CLI.
    verify: largest nmax accepted by the verification suites.
    """

    permutations: int = 9
    cops: int = 8
    signed: int = 5
    matchings: int = 7
    derive: int = 100
    verify: int = 10


CAP_KEYS = tuple(f.name for f in dataclasses.fields(Caps))

_active = Caps()


def get_caps() -> Caps:
    return _active


def set_caps(caps: Caps) -> None:
    global _active
    _active = caps


def reset_caps() -> None:
    set_caps(Caps())


def _parse_value(key: str, raw: str, origin: str) -> int:
    try:
        value = int(raw.strip())
    except ValueError:
        raise GramcalcError(f"{origin}: cap {key!r} needs an integer, got {raw.strip()!r}")
    if value < 0:
        raise GramcalcError(f"{origin}: cap {key!r} must be nonnegative, got {value}")
    return value


def load_caps(path: str | None = None, environ=None) -> Caps:
    """Build a Caps value from defaults, an optional file, and the environment."""
    values = dataclasses.asdict(Caps())
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                text = line.split("#", 1)[0].strip()
                if not text:
                    continue
                if "=" not in text:
                    raise GramcalcError(
                        f"{path}:{lineno}: expected 'key = value', got {text!r}"
                    )
                key, raw = (part.strip() for part in text.split("=", 1))
                if key not in values:
                    raise GramcalcError(
                        f"{path}:{lineno}: unknown cap {key!r}; known caps: "
                        + ", ".join(CAP_KEYS)
                    )
                values[key] = _parse_value(key, raw, f"{path}:{lineno}")
    env = os.environ if environ is None else environ
    for key in values:
        raw = env.get(ENV_PREFIX + key.upper())
        if raw is not None:
            values[key] = _parse_value(key, raw, ENV_PREFIX + key.upper())
    return Caps(**values)


def check(kind: str, n: int) -> None:
    """Raise BoundExceeded when n is above the active cap for kind."""
    cap = getattr(get_caps(), kind)
    if n > cap:
        hint = (
            f"raise it with {ENV_PREFIX}{kind.upper()}={n} or a config file line "
            f"'{kind} = {n}'"
        )
        raise BoundExceeded(kind, n, cap, hint)
