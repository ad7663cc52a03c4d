import os
import logging

from functools import lru_cache
from typing import Optional
from pyhocon import ConfigFactory
from pyhocon.config_tree import ConfigTree

log = logging.getLogger(__name__)

INTERNAL_CONF_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'internal',
                                  'suncount-internal.conf')


class CapacityError(Exception):
    """Raised when a request exceeds one of the configured enumeration, dense or rank limits

    Args:
        message: Error message
    """

    def __init__(self, message: str) -> None:
        super().__init__(message)


def get_configs(conf_path: str) -> Optional[ConfigTree]:
    """Parse a hocon file into a ConfigTree"""
    return ConfigFactory.parse_file(conf_path)


@lru_cache(maxsize=1)
def internal_conf() -> ConfigTree:
    """The packaged internal configuration, parsed once"""
    log.debug('Loading internal configuration from {}'.format(INTERNAL_CONF_PATH))
    return get_configs(INTERNAL_CONF_PATH)


def enumeration_cap(cap: Optional[int] = None) -> int:
    return int(cap) if cap is not None else int(internal_conf()['enumeration.cap'])


def dense_budget(budget: Optional[int] = None) -> int:
    return int(budget) if budget is not None else int(internal_conf()['dense.budget'])


def rank_cap(cap: Optional[int] = None) -> int:
    return int(cap) if cap is not None else int(internal_conf()['rank.cap'])


def check_capacity(what: str, value: int, limit: int) -> None:
    """Raise a CapacityError if `value` exceeds `limit`

    Args:
        what: Human readable name of the bounded quantity, used in the message
        value: Requested size
        limit: Largest admissible size
    """
    if value > limit:
        raise CapacityError('{} = {} exceeds the configured limit of {}'.format(what, value, limit))


def invariance_tolerance(tol: Optional[float] = None) -> float:
    return float(tol) if tol is not None else float(internal_conf()['invariance.tolerance'])


def control_threshold() -> float:
    return float(internal_conf()['invariance.control_threshold'])


def log_level() -> str:
    return str(internal_conf()['logging.level'])
