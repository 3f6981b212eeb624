from ._stabsim import *  # noqa: F401,F403
