"""Shared fixtures.

Expensive objects (large Gevrey horizons, the block construction) are built
once per session; tests must not mutate them.
"""
import numpy as np
import pytest

from weightseq import build_counterexample, gevrey, verify_blocks


@pytest.fixture(scope="session")
def gevrey2_64():
    return gevrey(2, 64)


@pytest.fixture(scope="session")
def gevrey2_128():
    return gevrey(2, 128)


@pytest.fixture(scope="session")
def gevrey2_256():
    return gevrey(2, 256)


@pytest.fixture(scope="session")
def gevrey1_64():
    return gevrey(1, 64)


@pytest.fixture(scope="session")
def ones_64():
    from weightseq import Unknown, from_quotients
    return from_quotients(np.zeros(64), Unknown, label="ones")


@pytest.fixture(scope="session")
def ce_default():
    """Two-block construction with its verification report."""
    result = build_counterexample(2)
    report = verify_blocks(result.sequence, result.blocks)
    return result, report
