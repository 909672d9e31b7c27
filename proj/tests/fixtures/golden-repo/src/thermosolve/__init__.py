# SPDX-License-Identifier: Apache-2.0
"""Transient heat-conduction solver for layered media."""

__version__ = "1.2.3"
