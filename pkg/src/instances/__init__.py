"""Instance files, their models and the built-in catalog."""

from .builder import Instance, InstanceBuilder
from .catalog import BUILTIN, all_specs, builtin_names, get_spec
from .loader import emit_instance, load_instance, load_instance_spec, parse_instance_text, write_instance
from .models import InstanceSpec

__all__ = [
    "BUILTIN",
    "Instance",
    "InstanceBuilder",
    "InstanceSpec",
    "all_specs",
    "builtin_names",
    "emit_instance",
    "get_spec",
    "load_instance",
    "load_instance_spec",
    "parse_instance_text",
    "write_instance",
]
