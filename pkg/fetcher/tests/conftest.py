import shutil
import subprocess
import sys

import pytest


def primary_cli(*argv):
    """Run the cvikit CLI (the primary component's external interface)."""
    exe = shutil.which("cvikit")
    cmd = [exe, *argv] if exe else [sys.executable, "-m", "cvikit.cli", *argv]
    return subprocess.run(cmd, capture_output=True, text=True)


@pytest.fixture
def validate_csv():
    """Assert a CSV loads and scores through the primary CLI with no warnings."""

    def check(path):
        result = primary_cli("dsi", str(path), "--subsample-cap", "400")
        assert result.returncode == 0, result.stderr
        assert result.stderr.strip() == ""
        return float(result.stdout.split()[0])

    return check
