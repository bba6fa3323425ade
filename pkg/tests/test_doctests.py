import doctest

import pipedream.perms
import pipedream.polynomials


def test_module_doctests():
    for module in (pipedream.perms, pipedream.polynomials):
        result = doctest.testmod(module)
        assert result.failed == 0, module.__name__
        assert result.attempted > 0, module.__name__
