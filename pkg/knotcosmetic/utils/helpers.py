import copy
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class FileHelper:
    """File utilities for diagram and census input"""

    @staticmethod
    def safe_read_file(file_path: str, encoding: str = 'utf-8') -> str:
        """Read a text file, raising ValueError with the path on failure"""
        try:
            with open(file_path, 'r', encoding=encoding) as f:
                return f.read()
        except UnicodeDecodeError:
            try:
                with open(file_path, 'r', encoding='latin-1') as f:
                    return f.read()
            except OSError as e:
                raise ValueError(f"Cannot read file {file_path}: {e}")
        except OSError as e:
            raise ValueError(f"Cannot read file {file_path}: {e}")


class ConfigHelper:
    """Configuration management utilities"""

    @staticmethod
    def load_config(config_path: str) -> Dict[str, Any]:
        """Load configuration from JSON file"""
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except FileNotFoundError:
            logger.warning(f"Config file not found: {config_path}")
            return {}
        except json.JSONDecodeError as e:
            logger.error(f"Invalid JSON in config file {config_path}: {e}")
            return {}

    @staticmethod
    def save_config(config_path: str, config: Dict[str, Any]) -> bool:
        """Save configuration to JSON file"""
        try:
            with open(config_path, 'w', encoding='utf-8') as f:
                json.dump(config, f, indent=2, ensure_ascii=False)
            return True
        except OSError as e:
            logger.error(f"Failed to save config {config_path}: {e}")
            return False

    @staticmethod
    def get_default_config() -> Dict[str, Any]:
        """Get default configuration"""
        return {
            'engine': {
                'bracket_method': 'contraction',
                'max_workers': 4,
                'executor': 'thread'
            },
            'census': {
                'tau_source': 'unspecified',
                'reference_csv': None
            },
            'verify': {
                'grid_max': 2,
                'genus_max': 3,
                'twist_range': 4,
                'slope_pmax': 10000,
                'genus2_grid': 3,
                'genus3_xmax': 5
            },
            'logging': {
                'level': 'INFO',
                'file': None
            }
        }

    @staticmethod
    def merge_configs(user_config: Dict[str, Any], default_config: Dict[str, Any]) -> Dict[str, Any]:
        """Merge user config with default config"""
        merged = copy.deepcopy(default_config)

        def deep_merge(source, destination):
            for key, value in source.items():
                if isinstance(value, dict) and key in destination and isinstance(destination[key], dict):
                    deep_merge(value, destination[key])
                else:
                    destination[key] = value

        deep_merge(user_config, merged)
        return merged

    @classmethod
    def resolve(cls, config_path: Optional[str] = None) -> Dict[str, Any]:
        """Defaults, overlaid with the JSON file at config_path when given"""
        user_config = cls.load_config(config_path) if config_path else {}
        return cls.merge_configs(user_config, cls.get_default_config())


def setup_logging(level: str = 'INFO', log_file: Optional[str] = None) -> None:
    """Log to stderr (stdout carries command output) and optionally to a file"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True
    )
