from ._zetapair import *  # noqa: F401,F403
from ._zetapair import __doc__  # noqa: F401
