"""Validate user-supplied parameter bags against callable signatures."""

from __future__ import annotations

import inspect
from typing import Any, Callable, Iterable

from .errors import ParameterError, UnknownMethodError


def accepted_params(fn: Callable, skip: Iterable[str] = ()) -> dict[str, inspect.Parameter]:
    sig = inspect.signature(fn)
    skip = set(skip)
    return {name: par for name, par in sig.parameters.items()
            if name not in skip and name != "self"
            and par.kind in (par.POSITIONAL_OR_KEYWORD, par.KEYWORD_ONLY)}


def validate_kwargs(fn: Callable, params: dict[str, Any], *,
                    skip: Iterable[str] = (), what: str = "call") -> dict[str, Any]:
    """Check a parameter dict against a callable's keyword surface.

    Unknown names raise ``UnknownMethodError`` (the registry-surface error);
    missing required parameters raise ``ParameterError``.
    """
    allowed = accepted_params(fn, skip)
    unknown = sorted(set(params) - set(allowed))
    if unknown:
        raise UnknownMethodError(
            f"unknown parameter(s) {', '.join(unknown)} for {what}; "
            f"valid parameters: {', '.join(sorted(allowed)) or '(none)'}")
    missing = sorted(name for name, par in allowed.items()
                     if par.default is inspect.Parameter.empty and name not in params)
    if missing:
        raise ParameterError(f"{what} requires parameter(s): {', '.join(missing)}")
    return dict(params)


def coerce_value(text: str) -> Any:
    """Interpret a command-line parameter value as int, float, or string."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    return text
