"""Finite groups, formations and subnormal chains."""

import json

from ._core import (
    FormcheckError,
    Group,
    chief_factor_orders,
    contains,
    group,
    hypercentre,
    kf_chain,
    normal_subgroups,
    parse_group,
    residual,
    verify_json,
)


def verify(claim, max_order=24, formation=None, sigma=None, threads=1):
    """Run a named claim over the generated catalog; returns the structured report."""
    return json.loads(verify_json(claim, max_order, formation, sigma, threads))


__all__ = [
    "FormcheckError",
    "Group",
    "chief_factor_orders",
    "contains",
    "group",
    "hypercentre",
    "kf_chain",
    "normal_subgroups",
    "parse_group",
    "residual",
    "verify",
]
