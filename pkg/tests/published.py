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

"""Published values of the three-asset example used across tests."""

import numpy as np

#: Transition probabilities between Down, Middle and Up.
PI = np.array(
    [
        [0.3250000, 0.2875000, 0.3875000],
        [0.3636364, 0.3376623, 0.2987013],
        [0.2795699, 0.3010753, 0.4193548],
    ]
)

#: Outgoing transitions of each state.
ROW_TOTALS = (80, 77, 93)

COUNTS = np.array([[26, 23, 31], [28, 26, 23], [26, 28, 39]])

STD_ERR = np.array(
    [
        [0.06373774, 0.05994789, 0.06959705],
        [0.06872081, 0.06622103, 0.06228353],
        [0.05482817, 0.05689788, 0.06715052],
    ]
)

#: Printed stationary distribution, exact value is (80, 77, 93) / 250.
STATIONARY = np.array([0.32000, 0.30783, 0.37217])

#: Expected covariance matrix in variance points.
OMEGA = np.array(
    [
        [42.978, 40.911, 39.477],
        [40.911, 43.275, 41.234],
        [39.477, 41.234, 40.240],
    ]
)

MEANS = np.array([0.000664, 0.000873, 0.000725])
K = 0.0007
MATURITY = 63
RATE = 0.0004
TRACE_STRIKE = 90.0
EIGEN_STRIKE = 30.0
DISCOUNT = 0.9751148

R = np.array([[0.001315, 1.720445], [0.0, 0.2001735]])
P1 = np.array(
    [
        [0.505023, 0.6551103],
        [0.6639542, -0.7108661],
        [0.5514677, 0.2559293],
    ]
)
P2 = np.array([0.561945, 0.232022, -0.793967])
Q = np.array([0.5322577, 0.4210340])
S = 0.7344604
WEIGHTS = np.array([0.9569597, 0.2239916, -0.1822877])
ROW_VECTOR = np.array([43.095, 41.327, 39.678])

TRACE_LEG = 126.493
TRACE_PRICE = 38.733

#: Quadratic form of the printed weights, whose entries sum to 0.99866.
PRINTED_EIGEN_LEG = 43.264
PRINTED_EIGEN_PRICE = 14.011

#: Leg and price at the exact optimum for the matrix above.
EIGEN_LEG = 43.376
EIGEN_PRICE = 14.123
