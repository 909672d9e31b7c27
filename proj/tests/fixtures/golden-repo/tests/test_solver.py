# SPDX-License-Identifier: Apache-2.0
from thermosolve.solver import step


def test_uniform_profile_is_stationary():
    profile = [300.0] * 5
    assert step(profile, alpha=1e-5, dt=0.1, dx=0.01) == profile
