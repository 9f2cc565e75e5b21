"""Run configuration: flat key=value config files merged with CLI flags.

Recognized keys:

    eps_ladder   comma-separated decreasing positive floats
    probe        probe catalog name (gaussian, cauchy, bump, const)
    out          output path
    format       json | csv | md
    parallel     true | false
    tol          global tolerance override (applies to every ASSERT claim)
    tol.<claim>  per-claim tolerance override

Unknown keys are errors.  Flags win over file values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexfn import DomainError
from .distrib import PROBES, EpsilonLadder

__all__ = ["RunConfig", "load_config_file", "build_run_config"]

_FORMATS = ("json", "csv", "md")
_SCALAR_KEYS = ("eps_ladder", "probe", "out", "format", "parallel", "tol")


@dataclass
class RunConfig:
    eps_ladder: EpsilonLadder | None = None
    probe: str = "gaussian"
    out: str | None = None
    format: str = "json"
    parallel: bool = False
    global_tol: float | None = None
    tol_overrides: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.format not in _FORMATS:
            raise DomainError("format in {json, csv, md}",
                              f"unknown format {self.format!r}")
        if self.probe not in PROBES:
            raise DomainError("probe in catalog",
                              f"unknown probe {self.probe!r}; "
                              f"choices: {sorted(PROBES)}")
        if self.global_tol is not None and not self.global_tol > 0.0:
            raise DomainError("tol > 0")

    def ladder(self) -> EpsilonLadder:
        return self.eps_ladder or EpsilonLadder.default()

    def tolerance_for(self, claim_id: str, default: float) -> float:
        if claim_id in self.tol_overrides:
            return self.tol_overrides[claim_id]
        if self.global_tol is not None:
            return self.global_tol
        return default


def _parse_ladder(text: str) -> EpsilonLadder:
    try:
        values = tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise DomainError("eps_ladder numeric",
                          f"cannot parse ladder {text!r}") from None
    return EpsilonLadder(values)


def _parse_bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "1", "yes", "on"):
        return True
    if t in ("false", "0", "no", "off"):
        return False
    raise DomainError("boolean value", f"cannot parse boolean {text!r}")


def load_config_file(path: str) -> dict:
    """Parse flat `key = value` lines; '#' starts a comment."""
    values: dict = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError("key = value lines",
                                  f"{path}:{lineno}: missing '=' in {raw!r}")
            key, _, val = line.partition("=")
            key = key.strip()
            val = val.strip()
            if key in _SCALAR_KEYS or key.startswith("tol."):
                values[key] = val
            else:
                raise DomainError("known config keys",
                                  f"{path}:{lineno}: unknown key {key!r}")
    return values


def build_run_config(file_values: dict | None = None,
                     flag_values: dict | None = None) -> RunConfig:
    """Merge config-file values and flag values; flags win."""
    merged = dict(file_values or {})
    for k, v in (flag_values or {}).items():
        if v is not None:
            merged[k] = v

    kwargs: dict = {}
    overrides: dict = {}
    for key, val in merged.items():
        if key == "eps_ladder":
            kwargs["eps_ladder"] = (val if isinstance(val, EpsilonLadder)
                                    else _parse_ladder(val))
        elif key == "probe":
            kwargs["probe"] = val
        elif key == "out":
            kwargs["out"] = val
        elif key == "format":
            kwargs["format"] = val
        elif key == "parallel":
            kwargs["parallel"] = (val if isinstance(val, bool)
                                  else _parse_bool(val))
        elif key == "tol":
            kwargs["global_tol"] = float(val)
        elif key.startswith("tol."):
            overrides[key[4:]] = float(val)
        else:
            raise DomainError("known config keys", f"unknown key {key!r}")
    cfg = RunConfig(**kwargs)
    cfg.tol_overrides.update(overrides)
    return cfg
