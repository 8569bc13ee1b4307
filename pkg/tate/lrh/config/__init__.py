"""Config package init."""
from tate.lrh.config.run_config import RunConfig
from tate.lrh.config.validator import ConfigValidator
__all__ = ["RunConfig", "ConfigValidator"]
