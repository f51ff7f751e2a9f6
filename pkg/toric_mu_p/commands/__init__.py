"""Commands component for the toric-mu-p package."""

from toric_mu_p.commands.fan import fan_group
from toric_mu_p.commands.quotient import quotient
from toric_mu_p.commands.sections import sections
from toric_mu_p.commands.vector_field import vf_group

__all__ = [
    "fan_group",
    "quotient",
    "sections",
    "vf_group",
]
