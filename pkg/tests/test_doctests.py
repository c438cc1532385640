import doctest
import importlib
import pkgutil

import pytest

import commuting_classes

MODULES = [m.name for m in pkgutil.iter_modules(commuting_classes.__path__, "commuting_classes.")]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    result = doctest.testmod(importlib.import_module(name))
    assert result.failed == 0
