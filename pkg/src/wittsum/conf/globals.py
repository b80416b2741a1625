"""
This modules contains primitives that merge settings from all sources
into a single global settings object for internal use by the library.

Settings are sought sequentially in :
- user-defined settings: env, then the project settings module (`$WITTSUM_SETTINGS_MODULE`)
- default settings: in `wittsum.conf.settings.Wittsum`

Usage:
    >>> from wittsum.conf import get_setting
    >>> get_setting("WITTSUM.field_cap")
    1048576
"""
import contextlib
from functools import reduce

from ..exceptions import ImproperlyConfigured

__all__ = (
    "configure", "get_setting", "get_settings", "override_settings"
)


# caches the settings object, populated by `configure()`
_settings = None


def configure(project_settings=None):
    """
    Initialize settings prior to using this library. Call it exactly once;
    `get_setting()` otherwise configures lazily from env and defaults.

    :param str project_settings: dotted path to the project settings module
    """
    from .settings import configure_wittsum

    global _settings

    if _settings is not None:
        raise ImproperlyConfigured(
            "`wittsum` settings already initialized. "
            "You must call `configure()` exactly once!"
        )
    _settings = configure_wittsum(project_settings)
    return _settings.settings


def get_settings():
    """ The configured settings object, configured lazily. """
    if _settings is None:
        configure()
    return _settings


def get_setting(keypath):
    """
    Get a setting's value from its key's dotted-path name
    eg. "WITTSUM.field_cap", "LOG_LEVEL"

    :param str keypath: setting key, as a dotted path
    """
    root, *children = keypath.split(".")
    return reduce(lambda _, key: _[key], children, get_settings().settings[root])


@contextlib.contextmanager
def override_settings(**config):
    """
    Override `WITTSUM` config items for the duration of the block.
    `None` values are ignored, so that unset command-line flags keep defaults.
    """
    settings = get_settings()
    key = settings.config_key
    saved = dict(settings.settings[key])
    try:
        settings.update(**{k: v for k, v in config.items() if v is not None})
        yield settings
    finally:
        settings.settings[key] = saved
