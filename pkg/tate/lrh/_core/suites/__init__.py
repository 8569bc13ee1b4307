"""Verification suites run by LocalRHVerifier."""

from tate.lrh._core.suites.lrh_suite import LRHSuite, lrh_verify, verify_grid
from tate.lrh._core.suites.oracle_suite import OracleSuite, random_w_element, random_w_instances
from tate.lrh._core.suites.ortho_suite import OrthoSuite
from tate.lrh._core.suites.strip_suite import (
    StripInstance,
    StripSuite,
    sample_instance,
    shrink_image,
    strip_shrink_property,
)
from tate.lrh._core.suites.weil_suite import WeilSuite

__all__ = [
    "LRHSuite",
    "OracleSuite",
    "OrthoSuite",
    "StripInstance",
    "StripSuite",
    "WeilSuite",
    "lrh_verify",
    "random_w_element",
    "random_w_instances",
    "sample_instance",
    "shrink_image",
    "strip_shrink_property",
    "verify_grid",
]
