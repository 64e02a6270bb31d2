"""Monomial ideals, lex-embeddings, distractions and their homological invariants."""

import json

from ._lexdist import (
    DEFAULT_CHARACTERISTIC,
    LexdistError,
    betti_numbers,
    betti_numbers_general,
    distract,
    groebner_basis,
    hilbert_function,
    hilbert_function_general,
    is_o_sequence,
    lex_embed,
    lex_ideal,
    local_cohomology,
    minimalize,
    polarize,
    run_cli,
)

__all__ = [
    "DEFAULT_CHARACTERISTIC",
    "LexdistError",
    "betti_numbers",
    "betti_numbers_general",
    "distract",
    "groebner_basis",
    "hilbert_function",
    "hilbert_function_general",
    "is_o_sequence",
    "lex_embed",
    "lex_ideal",
    "local_cohomology",
    "minimalize",
    "polarize",
    "run_cli",
    "verify",
]


def _arg(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    return str(value)


def verify(theorem, **options):
    """Run a theorem check through the command-line front end.

    Keyword options map to flags: ``dmax=4`` becomes ``--dmax 4`` and
    ``max_degree=3`` becomes ``--max-degree 3``.  Dicts and lists are passed
    as inline JSON.  Returns ``(exit_code, report)``.
    """
    args = ["verify", theorem]
    for key, value in options.items():
        args += ["--" + key.replace("_", "-"), _arg(value)]
    code, out, err = run_cli(args)
    if not out:
        raise LexdistError(err.strip())
    return code, json.loads(out)
