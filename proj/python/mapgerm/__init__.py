"""Python access to the mapgerm engine.

Every command returns the same report the ``mapgerm`` CLI prints with
``--format json``, as a dictionary. The process exit code the CLI would use is
stored under ``"exit_code"``: 0 success, 1 error, 2 inconclusive.
"""

import json

from ._mapgerm import (
    EXIT_ERROR,
    EXIT_INCONCLUSIVE,
    EXIT_SUCCESS,
    SCHEMA_VERSION,
    commands,
    parse,
    render_text,
)
from ._mapgerm import run_command as _run_command

__all__ = [
    "EXIT_ERROR",
    "EXIT_INCONCLUSIVE",
    "EXIT_SUCCESS",
    "SCHEMA_VERSION",
    "commands",
    "parse",
    "run",
    "render_text",
    "ke_codim",
    "nf",
    "ae_codim",
    "opsu",
    "minimal_unfolding",
    "mather_unfolding",
    "opsu_normal_form",
    "marar_tari",
    "analyze",
    "c",
    "multiplicity",
    "corank",
    "family_scan",
]


def run(command, germ="", **options):
    code, report = _run_command(command, germ, **options)
    result = json.loads(report)
    result["exit_code"] = code
    return result


def _command(name):
    def call(germ, **options):
        return run(name, germ, **options)

    call.__name__ = name.replace("-", "_")
    call.__qualname__ = call.__name__
    call.__doc__ = f"Report of the '{name}' command for a germ such as '(x, y^4 + x*y)'."
    return call


ke_codim = _command("ke-codim")
nf = _command("nf")
ae_codim = _command("ae-codim")
opsu = _command("opsu")
minimal_unfolding = _command("minimal-unfolding")
mather_unfolding = _command("mather")
opsu_normal_form = _command("opsu-normal-form")
marar_tari = _command("marar-tari")
analyze = _command("analyze")
c = _command("c")
multiplicity = _command("multiplicity")
corank = _command("corank")


def family_scan(p_values=(5, 6, 7), samples=5, seed=0, **options):
    return run("family-scan", "", p_values=list(p_values), samples=samples, seed=seed, **options)
