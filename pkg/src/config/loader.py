"""
Configuration Discovery and Loading
Layered configuration from packaged defaults, config files, .env files and
environment variables.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

from dotenv import dotenv_values


logger = logging.getLogger(__name__)

ENV_PREFIX = 'LINREP_'
PACKAGED_DEFAULTS = Path(__file__).with_name('default.json')


class ConfigLoader:
    """
    Configuration loader with hierarchical merging.

    Load order (later sources override earlier):
    1. Packaged defaults (src/config/default.json)
    2. config/default.{json,yaml} under the base directory
    3. Environment-specific configs (config/{env}.{json,yaml})
    4. Local overrides (config/local.{json,yaml})
    5. The first of .env.{env}, .env.local, .env
    6. Environment variables with the LINREP_ prefix
    """

    def __init__(
        self,
        base_dir: Optional[Path] = None,
        env: str = "development",
        config_dirs: Optional[List[str]] = None,
        environ: Optional[Dict[str, str]] = None
    ):
        self.base_dir = Path(base_dir) if base_dir else Path.cwd()
        self.env = env
        self.config_dirs = config_dirs or ['config', '.config']
        self._environ = environ if environ is not None else os.environ
        self._merged_config: Dict[str, Any] = {}

        logger.debug(f"ConfigLoader initialized (env={env}, base={self.base_dir})")

    def discover_and_load(self) -> Dict[str, Any]:
        """
        Load every configuration source in priority order.

        Returns:
            Merged configuration dictionary
        """
        self._load_config_file(PACKAGED_DEFAULTS)

        config_dir = self._find_config_dir()
        if config_dir:
            logger.info(f"Found config directory: {config_dir}")
            for stem in ('default', self.env, 'local'):
                self._load_config_file(config_dir / f"{stem}.json")
                self._load_config_file(config_dir / f"{stem}.yaml")

        self._load_env_file()
        self._load_env_variables(self._environ)

        logger.debug(f"Loaded {len(self._merged_config)} top-level configuration keys")
        return self._merged_config

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value using dot notation (e.g., 'oracle.max_m')"""
        value: Any = self._merged_config
        for k in key.split('.'):
            if not isinstance(value, dict) or k not in value:
                return default
            value = value[k]
        return value

    def get_all(self) -> Dict[str, Any]:
        return json.loads(json.dumps(self._merged_config))

    def set(self, key: str, value: Any):
        """Set configuration value using dot notation"""
        keys = key.split('.')
        config = self._merged_config
        for k in keys[:-1]:
            if k not in config or not isinstance(config[k], dict):
                config[k] = {}
            config = config[k]
        config[keys[-1]] = value

    def _find_config_dir(self) -> Optional[Path]:
        for dir_name in self.config_dirs:
            config_dir = self.base_dir / dir_name
            if config_dir.is_dir():
                return config_dir
        return None

    def _load_config_file(self, file_path: Path):
        """Merge a JSON or YAML file if it exists"""
        if not file_path.exists():
            return

        try:
            with open(file_path, 'r') as f:
                if file_path.suffix == '.json':
                    config = json.load(f)
                else:
                    import yaml
                    config = yaml.safe_load(f) or {}
        except Exception as e:
            logger.error(f"Failed to load config file {file_path}: {e}")
            return

        self._deep_merge(self._merged_config, config)
        logger.debug(f"Loaded config file: {file_path}")

    def _load_env_file(self):
        """Apply LINREP_ keys from the first .env file found"""
        env_files = [
            self.base_dir / f".env.{self.env}",
            self.base_dir / ".env.local",
            self.base_dir / ".env"
        ]

        for env_file in env_files:
            if env_file.exists():
                logger.info(f"Loading .env file: {env_file}")
                values = {k: v for k, v in dotenv_values(env_file).items() if v is not None}
                self._load_env_variables(values)
                break

    def _load_env_variables(self, environ: Dict[str, str]):
        for key, value in environ.items():
            if key.startswith(ENV_PREFIX):
                self._set_from_env_key(key[len(ENV_PREFIX):], value)
                logger.debug(f"Loaded env var: {key}")

    def _set_from_env_key(self, key: str, value: str):
        """
        Map KEY_SUBKEY onto the existing key path it names.

        Underscores may separate levels or belong to a key, so
        ORACLE_MAX_M resolves to oracle.max_m when that key exists.
        Unknown names fall back to one level per underscore.
        """
        parts = key.lower().split('_')
        path = self._match_path(self._merged_config, parts) or parts
        self.set('.'.join(path), self._parse_value(value))

    def _match_path(self, node: Dict[str, Any], parts: List[str]) -> Optional[List[str]]:
        for k in range(len(parts), 0, -1):
            candidate = '_'.join(parts[:k])
            if candidate not in node:
                continue
            if k == len(parts):
                return [candidate]
            child = node[candidate]
            if isinstance(child, dict):
                rest = self._match_path(child, parts[k:])
                if rest:
                    return [candidate] + rest
        return None

    @staticmethod
    def _parse_value(value: str) -> Any:
        try:
            return json.loads(value)
        except (json.JSONDecodeError, ValueError):
            pass
        if value.lower() in ('true', 'false'):
            return value.lower() == 'true'
        return value

    def _deep_merge(self, base: Dict, update: Dict):
        for key, value in update.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._deep_merge(base[key], value)
            else:
                base[key] = value


_global_loader: Optional[ConfigLoader] = None


def get_config_loader(
    base_dir: Optional[Path] = None,
    env: Optional[str] = None
) -> ConfigLoader:
    """Get or create the global config loader"""
    global _global_loader

    if _global_loader is None:
        _global_loader = ConfigLoader(
            base_dir=base_dir,
            env=env or os.getenv('LINREP_ENV', 'development')
        )
        _global_loader.discover_and_load()

    return _global_loader


def reset_config_loader():
    """Drop the global loader so the next access reloads every source"""
    global _global_loader
    _global_loader = None


def get_config(key: str, default: Any = None) -> Any:
    """Get configuration value using the global loader"""
    return get_config_loader().get(key, default)
