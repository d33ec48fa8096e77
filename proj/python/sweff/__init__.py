"""Exact efficiency analysis of lotteries over social-choice alternatives."""

from ._sweff import (
    InternalDisagreement,
    ParseError,
    Profile,
    check,
    corollary_check,
    ex_post_efficient,
    is_degenerate,
    is_interesting,
    lift_assignment,
    parse_lottery,
    sd_dominates,
    sd_efficient,
    separating_utilities,
    sw_dominates,
    sw_efficient,
    sw_efficient_by_enumeration,
)

__all__ = [
    "InternalDisagreement",
    "ParseError",
    "Profile",
    "check",
    "corollary_check",
    "ex_post_efficient",
    "is_degenerate",
    "is_interesting",
    "lift_assignment",
    "parse_lottery",
    "sd_dominates",
    "sd_efficient",
    "separating_utilities",
    "sw_dominates",
    "sw_efficient",
    "sw_efficient_by_enumeration",
]
