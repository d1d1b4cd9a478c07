"""Python access to the floerkit core."""

import json

from ._floerkit import *  # noqa: F401,F403
from ._floerkit import run_cli


def cli_json(*args):
    """Run a CLI subcommand and decode its JSON report."""
    code, out, err = run_cli([str(a) for a in args])
    if code != 0:
        raise RuntimeError(f"floerkit exited with {code}: {err.strip()}")
    return json.loads(out)
