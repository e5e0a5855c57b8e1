"""Python bindings for the pagegeom C++ core."""

import json

from ._pagegeom import *  # noqa: F401,F403
from ._pagegeom import __version__, run_suite_json


def run_suite(suite, metric, samples=500):
    """Run a verification suite and return the report as a dict."""
    return json.loads(run_suite_json(suite, metric, samples))
