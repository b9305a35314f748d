import pytest

from vtstruct.core import LabeledDigraph


def digraph(arcs, vertices=None, oriented=True):
    verts = vertices or sorted({v for a in arcs for v in a})
    return LabeledDigraph(tuple(verts), frozenset(arcs), oriented)


@pytest.fixture
def emit_line(request):
    """Write a line to the terminal even when output is captured."""
    reporter = request.config.pluginmanager.getplugin("terminalreporter")

    def emit(text):
        if reporter is not None:
            reporter.write_line(text)
        else:
            print(text)

    return emit
