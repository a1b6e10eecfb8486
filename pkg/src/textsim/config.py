"""Plain ``key=value`` configuration files and the effective-config fingerprint.

Recognized keys (all optional)::

    stopwords = default | none | <path to word list>
    lowercase = true
    stem = false
    token_pattern = alnum | whitespace
    ngram_n = 2
    skip = 4
    ngram_unit = word | character
    pre_normalize = true
    rouge_clip = true
    jw_prefix_weight = 0.1
    jw_boost_threshold = 0.7
    jw_max_prefix = 4
    threshold = 0.2          # phrase linking threshold for align-eval
    t_low = 0.3              # paraphrase level thresholds
    t_high = 0.7
"""

from __future__ import annotations

import hashlib
import json
import os
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path

from textsim.editdist import EditParams
from textsim.errors import ConfigError
from textsim.metrics import MetricParams
from textsim.textproc import PipelineConfig, load_stopwords

ENV_VAR = "TEXTSIM_CONFIG"

DEFAULTS: dict[str, str] = {
    "stopwords": "default",
    "lowercase": "true",
    "stem": "false",
    "token_pattern": "alnum",
    "ngram_n": "2",
    "skip": "4",
    "ngram_unit": "word",
    "pre_normalize": "true",
    "rouge_clip": "true",
    "jw_prefix_weight": "0.1",
    "jw_boost_threshold": "0.7",
    "jw_max_prefix": "4",
    "threshold": "0.2",
    "t_low": "0.3",
    "t_high": "0.7",
}

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _bool(key: str, value: str) -> bool:
    v = value.strip().lower()
    if v in _TRUE:
        return True
    if v in _FALSE:
        return False
    raise ConfigError(f"{key}: expected a boolean, got {value!r}")


def _number(key: str, value: str, kind=float):
    try:
        return kind(value)
    except ValueError:
        raise ConfigError(f"{key}: expected {kind.__name__}, got {value!r}") from None


def parse_config_text(text: str) -> dict[str, str]:
    values = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ConfigError(f"line {line_no}: expected key=value, got {raw!r}")
        if key not in DEFAULTS:
            raise ConfigError(f"line {line_no}: unknown key {key!r}")
        values[key] = value.strip()
    return values


def read_config_file(path: str | Path) -> dict[str, str]:
    return parse_config_text(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class EffectiveConfig:
    values: Mapping[str, str]
    pipeline: PipelineConfig
    params: MetricParams
    threshold: float
    level_thresholds: tuple[float, float]
    description: Mapping[str, object] = field(default_factory=dict)

    def fingerprint(self) -> str:
        blob = json.dumps(self.description, sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()[:16]


def build_config(
    file_values: Mapping[str, str] | None = None, overrides: Mapping[str, str] | None = None
) -> EffectiveConfig:
    """Merge defaults, file values and flag overrides (in that precedence)."""
    values = dict(DEFAULTS)
    for source in (file_values or {}, overrides or {}):
        for key, value in source.items():
            if key not in DEFAULTS:
                raise ConfigError(f"unknown key {key!r}")
            if value is not None:
                values[key] = str(value)

    sw = values["stopwords"]
    stopwords = frozenset() if sw == "none" else load_stopwords(None if sw == "default" else sw)
    lowercase = _bool("lowercase", values["lowercase"])
    try:
        pipeline = PipelineConfig(
            lowercase=lowercase,
            stopwords=stopwords if not lowercase else frozenset(w.lower() for w in stopwords),
            stem=_bool("stem", values["stem"]),
            token_pattern=values["token_pattern"],
        )
        params = MetricParams(
            skip=_number("skip", values["skip"], int),
            pre_normalize=_bool("pre_normalize", values["pre_normalize"]),
            ngram_unit=values["ngram_unit"],
            ngram_n=_number("ngram_n", values["ngram_n"], int),
            rouge_clip=_bool("rouge_clip", values["rouge_clip"]),
            edit=EditParams(
                _number("jw_prefix_weight", values["jw_prefix_weight"]),
                _number("jw_boost_threshold", values["jw_boost_threshold"]),
                _number("jw_max_prefix", values["jw_max_prefix"], int),
            ),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    threshold = _number("threshold", values["threshold"])
    levels = (_number("t_low", values["t_low"]), _number("t_high", values["t_high"]))
    description = {
        **pipeline.describe(),
        **params.describe(),
        "threshold": threshold,
        "t_low": levels[0],
        "t_high": levels[1],
    }
    return EffectiveConfig(values, pipeline, params, threshold, levels, description)


def load_config(path: str | Path | None = None, overrides: Mapping[str, str] | None = None):
    """Read ``path``, or the file named by ``$TEXTSIM_CONFIG``, then apply overrides."""
    if path is None:
        path = os.environ.get(ENV_VAR) or None
    file_values = read_config_file(path) if path else {}
    return build_config(file_values, overrides)
