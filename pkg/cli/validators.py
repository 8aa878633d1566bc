"""Validation helpers for command-line options."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from config import settings
from algebra.errors import AlgebraError, ConfigError
from algebra.finite_field import prime_power


@dataclass(frozen=True)
class RunConfig:
    """Validated options shared by every subcommand."""
    command: str
    action: str | None
    d: int
    q: int
    r: int
    precision: int
    seed: int
    input_path: str | None = None
    output_path: str | None = None
    pretty: bool = False
    verbose: bool = False
    options: dict[str, Any] = field(default_factory=dict)


def validate_rank(d: int | None, default: int = 1) -> tuple[bool, str | None, int | None]:
    """Validate the Weyl group rank d."""
    if d is None:
        return True, None, default
    if d < 1:
        return False, "d must be at least 1", None
    if d > settings.MAX_WEYL_RANK:
        return False, f"d must be at most {settings.MAX_WEYL_RANK}", None
    return True, None, d


def validate_field_size(q: int | None, default: int = 2) -> tuple[bool, str | None, int | None]:
    """Validate q as a prime power within the configured bound."""
    if q is None:
        return True, None, default
    if q < 2 or q > settings.MAX_FIELD_SIZE:
        return False, f"q must lie in 2..{settings.MAX_FIELD_SIZE}", None
    try:
        prime_power(q)
    except AlgebraError as e:
        return False, str(e), None
    return True, None, q


def validate_amplitude(r: int | None, default: int = 1) -> tuple[bool, str | None, int | None]:
    """Validate the amplitude r."""
    if r is None:
        return True, None, default
    if r < 1:
        return False, "r must be at least 1", None
    return True, None, r


def validate_precision(value: int | None) -> tuple[bool, str | None, int | None]:
    """Validate the Laurent series working precision."""
    if value is None:
        return True, None, settings.DEFAULT_PRECISION
    if value < settings.MIN_PRECISION:
        return False, f"precision must be at least {settings.MIN_PRECISION}", None
    return True, None, value


def build_run_config(args) -> RunConfig:
    """Turn parsed arguments into a RunConfig, raising ConfigError on the first invalid value."""
    checks = (
        validate_rank(args.d),
        validate_field_size(args.q),
        validate_amplitude(args.r),
        validate_precision(args.precision),
    )
    for ok, message, _ in checks:
        if not ok:
            raise ConfigError(message)
    (_, _, d), (_, _, q), (_, _, r), (_, _, precision) = checks

    common = {"command", "action", "d", "q", "r", "precision", "seed", "input", "out", "pretty", "verbose", "handler"}
    options = {key: value for key, value in vars(args).items() if key not in common}
    return RunConfig(
        command=args.command,
        action=getattr(args, "action", None),
        d=d,
        q=q,
        r=r,
        precision=precision,
        seed=settings.DEFAULT_SEED if args.seed is None else args.seed,
        input_path=args.input,
        output_path=args.out,
        pretty=args.pretty,
        verbose=args.verbose,
        options=options,
    )
