#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Copyright 2026 The genvar developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

r"""Discounted time-averaged expectations of per-state quantities.

Swap legs are expectations of the form:

.. math::

    e^{-rT} \frac{1}{T} \int_0^T \mathbb{E}[f(x_t)] \,\mathrm{d}t

Two rules are available to evaluate the expectation. In
:attr:`ExpectationMode.GENERATOR` mode the integrand is :math:`e^{tQ} f`,
integrated by adaptive quadrature. In :attr:`ExpectationMode.ONE_STEP` mode
the integrand is held constant at the one-step value :math:`\Pi f`, which is
how daily-estimated chains are usually evaluated.
"""

import enum
import logging
from typing import Optional

import numpy as np
from scipy.integrate import quad_vec

from .exceptions import ConfigurationError, DimensionError, DomainError
from .generator import GeneratorModel, matrix_exponential
from .regimes import TransitionModel
from .regimes.transition import InitialState

logger = logging.getLogger(__name__)


class ExpectationMode(enum.Enum):
    """Rule used to propagate expectations to maturity."""

    ONE_STEP = "one-step"
    GENERATOR = "generator"


def discount_factor(maturity: float, rate: float) -> float:
    r"""Discount factor :math:`e^{-rT}`.

    Args:
        maturity: Maturity :math:`T` in trading days.
        rate: Interest rate :math:`r` per trading day.

    Returns:
        Discount factor.
    """
    return float(np.exp(-rate * maturity))


def time_averaged_operator(
    model: TransitionModel,
    gen: Optional[GeneratorModel],
    maturity: float,
    mode: ExpectationMode = ExpectationMode.ONE_STEP,
) -> np.ndarray:
    r"""Matrix mapping per-state values to time-averaged expectations.

    The operator is :math:`\Pi` in one-step mode and

    .. math::

        \frac{1}{T} \int_0^T e^{tQ} \,\mathrm{d}t
        = \int_0^1 e^{u T Q} \,\mathrm{d}u

    in generator mode. The integral is not computed through
    :math:`Q^{-1}` since generators are singular.

    Args:
        model: Transition model.
        gen: Generator model, required in generator mode.
        maturity: Maturity :math:`T` in trading days.
        mode: Expectation rule.

    Returns:
        Row-stochastic matrix :math:`M` such that :math:`(M f)_i` is the
        time-averaged expectation of :math:`f` starting from state :math:`i`.

    Raises:
        ConfigurationError: if generator mode is requested without a
            generator.
    """
    if not maturity > 0.0:
        raise DomainError(f"maturity should be positive, got {maturity}")
    if mode is ExpectationMode.ONE_STEP:
        return np.array(model.pi)
    if gen is None:
        raise ConfigurationError(
            "generator mode requires a generator model, derive one first"
        )
    if gen.n_states != model.n_states:
        raise DimensionError(
            f"generator has {gen.n_states} states, "
            f"transition model has {model.n_states}"
        )
    operator, error = quad_vec(
        lambda u: matrix_exponential(gen.q, u * maturity),
        0.0,
        1.0,
        epsabs=1e-12,
        epsrel=0.0,
        limit=500,
    )
    logger.debug("Time-averaged operator quadrature error %.2e", error)
    return np.asarray(operator)


def expected_by_initial_state(
    model: TransitionModel,
    gen: Optional[GeneratorModel],
    f: np.ndarray,
    maturity: float,
    rate: float,
    mode: ExpectationMode = ExpectationMode.ONE_STEP,
) -> np.ndarray:
    """Discounted time-averaged expectation from each initial state.

    Args:
        model: Transition model.
        gen: Generator model, required in generator mode.
        f: Value of the quantity in each state.
        maturity: Maturity in trading days.
        rate: Interest rate per trading day.
        mode: Expectation rule.

    Returns:
        Vector whose entry :math:`i` is the value when the chain starts in
        state :math:`i`.
    """
    f = np.asarray(f, dtype=float)
    if f.shape != (model.n_states,):
        raise DimensionError(
            f"expected {model.n_states} per-state values, got {f.shape}"
        )
    operator = time_averaged_operator(model, gen, maturity, mode)
    return discount_factor(maturity, rate) * (operator @ f)


def time_averaged_discounted_expectation(
    model: TransitionModel,
    gen: Optional[GeneratorModel],
    f: np.ndarray,
    maturity: float,
    rate: float,
    mode: ExpectationMode = ExpectationMode.ONE_STEP,
    initial: InitialState = None,
) -> float:
    r"""Discounted time-averaged expectation of a per-state quantity.

    The result is the mixture over the initial distribution :math:`\pi_0`
    of the per-state values:

    .. math::

        e^{-rT} \, \pi_0^T M f

    where :math:`M` is the :func:`time_averaged_operator`. The discount factor
    is applied last, so that the result is exactly the undiscounted value
    times :math:`e^{-rT}`.

    Args:
        model: Transition model.
        gen: Generator model, required in generator mode.
        f: Value of the quantity in each state.
        maturity: Maturity :math:`T` in trading days.
        rate: Interest rate :math:`r` per trading day.
        mode: Expectation rule.
        initial: Initial state, index or distribution. Defaults to the
            stationary distribution.

    Returns:
        Discounted expectation.
    """
    f = np.asarray(f, dtype=float)
    if f.shape != (model.n_states,):
        raise DimensionError(
            f"expected {model.n_states} per-state values, got {f.shape}"
        )
    distribution = model.initial_distribution(initial)
    operator = time_averaged_operator(model, gen, maturity, mode)
    undiscounted = float(distribution @ operator @ f)
    return discount_factor(maturity, rate) * undiscounted
