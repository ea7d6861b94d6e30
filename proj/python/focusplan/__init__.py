from ._focusplan import *  # noqa: F401,F403
from ._focusplan import INFINITY_MM  # noqa: F401
