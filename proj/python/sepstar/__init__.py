"""Exact star products with separation of variables, around the chart origin."""

import json

from . import _sepstar
from ._sepstar import (
    DegenerateMetric,
    Geometry,
    Jet,
    NotInImage,
    OrderExhausted,
    ParseError,
    builtin_potential,
    conservative_phi_order,
    random_potential,
    run_command,
)

__all__ = [
    "DegenerateMetric",
    "Geometry",
    "Jet",
    "NotInImage",
    "OrderExhausted",
    "ParseError",
    "builtin_potential",
    "coefficients",
    "conservative_phi_order",
    "closed_form_t",
    "left_symbol",
    "random_potential",
    "run_command",
    "star",
    "tensor_t",
    "verify",
]


def coefficients(jet):
    """{monomial: "p/q" or ["p/q", "r/s"]} in graded order."""
    return json.loads(jet._coefficients_json())


def _geometry(potential, n, jet_order, nu_order, phi_order):
    if phi_order is None:
        phi_order = conservative_phi_order(jet_order, nu_order)
    return Geometry(potential, n, phi_order)


def star(f, g, potential="flat", n=1, nu_order=2, jet_order=2, phi_order=None):
    """f * g as a list of jets, one per power of nu."""
    geom = _geometry(potential, n, jet_order, nu_order, phi_order)
    return geom.star(f, g, nu_order, jet_order)


def tensor_t(potential="flat", n=1, nu_order=2, jet_order=2, phi_order=None):
    geom = _geometry(potential, n, jet_order, nu_order, phi_order)
    return json.loads(geom._tensor_t_json(nu_order, jet_order))


def closed_form_t(potential="flat", n=1, jet_order=2, phi_order=None):
    geom = _geometry(potential, n, jet_order, 4, phi_order)
    return json.loads(geom._closed_form_t_json(jet_order))


def left_symbol(f, potential="flat", n=1, nu_order=2, jet_order=2, phi_order=None):
    geom = _geometry(potential, n, jet_order, nu_order, phi_order)
    return json.loads(geom._left_symbol_json(f, nu_order, jet_order))


def verify(potential="flat", n=1, nu_order=2, seed=1, samples=3, jet_order=2, phi_order=None):
    """Report of the identity, star-law and cross-check suites."""
    geom = _geometry(potential, n, jet_order, nu_order, phi_order)
    return json.loads(geom._verify_json(nu_order, seed, samples, jet_order))
