from .session import *  # noqa: F401,F403
