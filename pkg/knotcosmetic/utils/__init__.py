from .helpers import ConfigHelper, FileHelper, setup_logging

__all__ = ['ConfigHelper', 'FileHelper', 'setup_logging']
