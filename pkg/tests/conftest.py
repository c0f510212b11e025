"""Shared fixtures: the five example algebras, as parsed files and objects."""

import json

import pytest

from tautilt import fileio

# Fixture algebras, in the on-disk JSON schema.  Relation paths are written
# in traversal order (first arrow traversed first).
ALGEBRA_FILES = {
    # one vertex, one loop a with a^2 = 0; dim 2, basis {e1, a}
    "loc": {
        "quiver": {
            "vertices": ["1"],
            "arrows": [{"name": "a", "from": "1", "to": "1"}],
        },
        "relations": [[{"coeff": "1", "path": ["a", "a"]}]],
        "nilpotency_bound": 3,
    },
    # hereditary A2 quiver 1 -> 2; dim 3
    "a2": {
        "quiver": {
            "vertices": ["1", "2"],
            "arrows": [{"name": "a", "from": "1", "to": "2"}],
        },
        "relations": [],
        "nilpotency_bound": 2,
    },
    # two-cycle with both length-2 paths zero; dim 4
    "cyc2": {
        "quiver": {
            "vertices": ["1", "2"],
            "arrows": [
                {"name": "a1", "from": "1", "to": "2"},
                {"name": "a2", "from": "2", "to": "1"},
            ],
        },
        "relations": [
            [{"coeff": "1", "path": ["a1", "a2"]}],
            [{"coeff": "1", "path": ["a2", "a1"]}],
        ],
        "nilpotency_bound": 3,
    },
    # linear A3 quiver 1 -> 2 -> 3 with the length-2 path zero; dim 5
    "lin3": {
        "quiver": {
            "vertices": ["1", "2", "3"],
            "arrows": [
                {"name": "al", "from": "1", "to": "2"},
                {"name": "be", "from": "2", "to": "3"},
            ],
        },
        "relations": [[{"coeff": "1", "path": ["al", "be"]}]],
        "nilpotency_bound": 3,
    },
    # cyclic triangle with all length-2 paths zero; dim 6
    "ct3": {
        "quiver": {
            "vertices": ["1", "2", "3"],
            "arrows": [
                {"name": "a", "from": "1", "to": "2"},
                {"name": "b", "from": "2", "to": "3"},
                {"name": "c", "from": "3", "to": "1"},
            ],
        },
        "relations": [
            [{"coeff": "1", "path": ["a", "b"]}],
            [{"coeff": "1", "path": ["b", "c"]}],
            [{"coeff": "1", "path": ["c", "a"]}],
        ],
        "nilpotency_bound": 3,
    },
}

FIXTURE_NAMES = ["loc", "a2", "cyc2", "lin3", "ct3"]

_cache = {}


def get_algebra(name):
    if name not in _cache:
        _cache[name] = fileio.load_algebra(ALGEBRA_FILES[name])
    return _cache[name]


@pytest.fixture(scope="session")
def loc():
    return get_algebra("loc")


@pytest.fixture(scope="session")
def a2():
    return get_algebra("a2")


@pytest.fixture(scope="session")
def cyc2():
    return get_algebra("cyc2")


@pytest.fixture(scope="session")
def lin3():
    return get_algebra("lin3")


@pytest.fixture(scope="session")
def ct3():
    return get_algebra("ct3")


@pytest.fixture
def algebra_file(tmp_path):
    """Write a named fixture algebra to disk and return the path."""

    def write(name):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(ALGEBRA_FILES[name]))
        return str(path)

    return write
