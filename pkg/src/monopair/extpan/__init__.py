"""Extensions and variegated extensions of finite abelian groups."""

from .cocycles import (
    Cocycle,
    ExtClass,
    baer_sum,
    carry_cocycle,
    class_negate,
    coboundary_of,
    coboundary_witness,
    cocycle_from_values,
    ext1_classes,
    ext1_order,
    is_coboundary,
    parse_class_spec,
    pullback_cocycle,
    split_class,
    zero_cocycle,
)
from .groups import FinAbGroup, TwistedGroup, homomorphisms, parse_group_spec
from .variegated import (
    TorsorReport,
    VariegatedClass,
    act,
    connecting_image,
    difference,
    extpan_fiber,
    pushforward,
    torsor_report,
    twisted_middle,
)

__all__ = [
    "Cocycle",
    "ExtClass",
    "FinAbGroup",
    "TorsorReport",
    "TwistedGroup",
    "VariegatedClass",
    "act",
    "baer_sum",
    "carry_cocycle",
    "class_negate",
    "coboundary_of",
    "coboundary_witness",
    "cocycle_from_values",
    "connecting_image",
    "difference",
    "ext1_classes",
    "ext1_order",
    "extpan_fiber",
    "homomorphisms",
    "is_coboundary",
    "parse_class_spec",
    "parse_group_spec",
    "pullback_cocycle",
    "pushforward",
    "split_class",
    "torsor_report",
    "twisted_middle",
    "zero_cocycle",
]
