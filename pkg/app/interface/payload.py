from __future__ import annotations

import hashlib
import json
from typing import Any

from xlog.format.base import FormatLike

from app.base.component import Component
from app.base.errors import ConfigError


class Payload(Component):
    """
    Run configuration as a dict-like object.

    Merges the resolved settings (environment variables and constants) with
    the parsed command-line arguments into a dotted view.

    Attrs:
        origin: Flat mapping of settings and arguments.
        content: Structured content with ``app``, ``work`` and ``io`` sections.

    Methods:
        build(data): Build structured configuration from the flat mapping.
        get(key, default): Retrieve value by dotted key notation.
        has(key): Check if key exists in payload.
        require(key): Retrieve a value or raise ConfigError.
        fingerprint(): Short hash of the configuration for log lines.
        describe(): Get comprehensive description of payload.

    Example:
    ```python
        data = {"JLP_APP_NAME": "jacklpr", "action": "simulate", "n": 576, "d": 0.25}
        payload = Payload(data=data)
        payload.get("work.action")      # 'simulate'
        payload.get("work.model.d")     # 0.25
        payload.fingerprint()           # 'a1b2c3d4'
    ```
    """

    def __init__(
        self,
        data: dict[str, Any],
        parent: Component | None = None,
        logformat: FormatLike | None = None,
    ) -> None:
        super().__init__(
            parent=parent,
            logformat=logformat,
        )
        self.origin: dict[str, Any] = data
        self.content: dict[str, dict[str, Any]] = self.build(data)

    def _resolve_key(
        self,
        key: str,
    ) -> list[str]:
        if "." in key:
            return key.split(".")
        else:
            return [key]

    def _first(
        self,
        data: dict[str, Any],
        *keys: str,
    ) -> Any:
        for key in keys:
            if data.get(key) is not None:
                return data[key]
        return None

    def build(
        self,
        data: dict[str, Any],
    ) -> dict[str, dict[str, Any]]:
        self.debug(
            "Received context Ok.",
            context=data,
        )
        action = data.get("action")
        if not action:
            msg = "An action (simulate, estimate, mc) is required in payload"
            raise self.fail(msg, ConfigError)

        result = {
            "app": {
                "name": data.get("JLP_APP_NAME"),
                "level": data.get("JLP_APP_LEVEL"),
                "logformat": data.get("JLP_LOG_FORMAT"),
            },
            "work": {
                "action": action,
                "model": {
                    "d": data.get("d"),
                    "phi": data.get("phi") or [],
                    "theta": data.get("theta") or [],
                    "sigma2": data.get("sigma2"),
                    "mu": data.get("mu"),
                    "given": any(data.get(k) is not None for k in ("d", "phi", "theta")),
                },
                "n": data.get("n"),
                # CLI value, then the environment default
                "seed": self._first(data, "seed", "JLP_SEED"),
                "threads": self._first(data, "threads", "JLP_THREADS"),
                "alpha": self._first(data, "alpha", "JLP_DEFAULT_ALPHA"),
                "reps": data.get("JLP_DEFAULT_REPS"),
                "estimator": data.get("estimator"),
                "m": data.get("m"),
                "scheme": data.get("scheme"),
                "p": data.get("p"),
                "q": data.get("q"),
                "tau": data.get("tau"),
                "max_iter": data.get("max_iter"),
            },
            "io": {
                "input": data.get("input"),
                "output": data.get("out"),
                "config": data.get("config"),
                "format": data.get("format"),
            },
        }
        self.info(
            "Payload built successfully.",
            context=result,
        )
        return result

    def __contains__(self, key: str) -> bool:
        return self.has(key)

    def get(
        self,
        key: str,
        default: Any = None,
    ) -> Any:
        keys = self._resolve_key(key)
        value = self.content
        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def has(self, key: str) -> bool:
        return self.get(key, _MISSING) is not _MISSING

    def require(self, key: str) -> Any:
        value = self.get(key)
        if value is None:
            msg = f"Key '{key}' is required."
            raise self.fail(msg, ConfigError)
        return value

    def fingerprint(self) -> str:
        content_str = json.dumps(self.origin, sort_keys=True, default=str)
        hash_obj = hashlib.sha256(content_str.encode())
        return hash_obj.hexdigest()[:8]

    def describe(self) -> dict[str, Any]:
        return {
            "fingerprint": self.fingerprint(),
            "origin": self.origin,
            "content": self.content,
        }


_MISSING = object()
