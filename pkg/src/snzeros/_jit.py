"""Numba switch.

Every hot kernel in the package exists in two forms: a numba-compiled one
and a pure Python/numpy one.  The JIT path is used when numba imports and
the environment variable ``SNZEROS_DISABLE_NUMBA`` is unset (or ``0``).
Both paths are importable side by side so tests and the benchmark can
compare them directly.
"""

from __future__ import annotations

import os

DISABLE_ENV = "SNZEROS_DISABLE_NUMBA"

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

HAVE_NUMBA = _numba is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get(DISABLE_ENV, "0") in ("", "0")


def njit(func=None, **options):
    """``numba.njit(cache=True)`` when numba is importable, identity otherwise.

    The returned object is always callable; under numba the original Python
    function stays reachable as ``.py_func``.
    """
    options.setdefault("cache", True)

    def wrap(f):
        if not HAVE_NUMBA:
            return f
        return _numba.njit(**options)(f)

    if func is None:
        return wrap
    return wrap(func)


def pick(jitted, fallback):
    """Return the implementation selected by the environment flag."""
    return jitted if USE_NUMBA else fallback


def compile_namespace(module, names, overrides=None):
    """Jitted copies of ``module``'s functions ``names``, calling each other.

    Each function is rebuilt over a private globals dict in which the
    listed names (and any ``overrides``) refer to jitted versions, then
    compiled.  The module itself stays untouched and serves as the pure
    Python path.  Returns the dict, or ``None`` without numba.
    """
    if not HAVE_NUMBA:
        return None
    import types

    ns = dict(vars(module))
    ns.update(overrides or {})
    for name in names:
        f = getattr(module, name)
        g = types.FunctionType(f.__code__, ns, name, f.__defaults__, f.__closure__)
        g.__module__ = f.__module__
        g.__qualname__ = f.__qualname__
        ns[name] = _numba.njit(cache=True)(g)
    return ns
