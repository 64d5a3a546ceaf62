from .config import Config, RunConfig
from .errors import ModuliLabError
