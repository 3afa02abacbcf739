"""Shared exception types.

PreconditionError marks inputs outside an operation's supported range
(size bounds, unsupported n, and the like).  The command line maps it to
exit code 3, distinguishing "refused to start" from "ran and failed".
"""


class PreconditionError(ValueError):
    pass


class NotASubgroupError(ValueError):
    pass
