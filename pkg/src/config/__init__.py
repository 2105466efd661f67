from .config_manager import ConfigurationManager, ConfigPaths, ConfigurationError, Limits

__all__ = ['ConfigurationManager', 'ConfigPaths', 'ConfigurationError', 'Limits']
