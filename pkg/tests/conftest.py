import os
import pathlib

import pytest


@pytest.fixture(autouse=True, scope="session")
def _run_from_repo_root():
    # fixture files are referenced by repo-relative paths in tests and docs
    os.chdir(pathlib.Path(__file__).resolve().parent.parent)
