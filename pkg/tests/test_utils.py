import os
import pytest

from pyhocon import ConfigFactory

from context import (CapacityError, INTERNAL_CONF_PATH, check_capacity, get_configs, internal_conf, enumeration_cap,
                     dense_budget, rank_cap)


@pytest.fixture
def conf():
    return ConfigFactory.parse_string("""
        {
            enumeration.cap = 4
            dense {
                budget = 16
            }
        }
        """)


def test_internal_conf_defaults():
    conf = get_configs(INTERNAL_CONF_PATH)

    assert conf['enumeration.cap'] == 10
    assert conf['dense.budget'] == 4096
    assert conf['rank.cap'] == 6
    assert conf['invariance.tolerance'] == pytest.approx(1e-10)
    assert conf['console.column_gap'] == 2


def test_internal_conf_is_cached():
    assert internal_conf() is internal_conf()


def test_limits_default_to_internal_conf():
    assert enumeration_cap() == 10
    assert dense_budget() == 4096
    assert rank_cap() == 6


def test_explicit_limits_win(conf):
    assert enumeration_cap(conf['enumeration.cap']) == 4
    assert dense_budget(conf['dense.budget']) == 16
    assert rank_cap(3) == 3


def test_check_capacity():
    check_capacity('k', 10, 10)

    with pytest.raises(CapacityError) as e:
        check_capacity('k', 11, 10)

    assert str(e.value) == 'k = 11 exceeds the configured limit of 10'


def test_internal_conf_is_read_through_pyhocon(mocker):
    get_configs_spy = mocker.spy(ConfigFactory, 'parse_file')
    get_configs(INTERNAL_CONF_PATH)

    get_configs_spy.assert_called_once_with(INTERNAL_CONF_PATH)


def test_sty_requirement_is_pinned():
    import sty

    setup_path = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'setup.py')
    with open(setup_path, encoding='utf-8') as f:
        setup_source = f.read()

    # later sty releases dropped Rule and Render, which the console colour relies on
    assert "'sty==1.0.0b7'" in setup_source
    assert hasattr(sty, 'Rule') and hasattr(sty, 'Render')
    assert sty.fg.suncount_magenta
