from .bitcore import BitString, StringSet
from .check_registry import CheckRegistry, register_check
from .tag_filter import TagFilter

__all__ = ['BitString', 'StringSet', 'CheckRegistry', 'register_check', 'TagFilter']
