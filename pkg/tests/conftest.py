import subprocess
import sys

import pytest

from graphsum import build_document

# Sentences 0, 2, 4 paraphrase one theme; 1, 3, 5 are pairwise-disjoint noise.
THEME_TEXT = (
    "Honey bees store golden honey in waxy hive cells. "
    "Quartz clocks tick quietly. "
    "Worker bees fill hive cells with golden honey wax. "
    "Violet kites drift above dunes. "
    "The hive cells hold honey that worker bees store. "
    "Copper pots simmer on stoves."
)


@pytest.fixture(scope="session")
def theme_doc():
    return build_document(THEME_TEXT)


def run_cli(*argv, stdin=None, cwd=None):
    """Run the CLI in a subprocess; returns (returncode, stdout, stderr) bytes."""
    proc = subprocess.run(
        [sys.executable, "-m", "graphsum", *argv],
        input=stdin,
        capture_output=True,
        cwd=cwd,
    )
    return proc.returncode, proc.stdout, proc.stderr
