class CharkitError(Exception):
    """Base class for errors raised by this package."""


class ParseError(CharkitError, ValueError):
    """Malformed group spec, cycle notation, or unknown catalog name."""


class CapExceeded(CharkitError, RuntimeError):
    """A group is too large for the requested operation's enumeration cap."""


class GroupMismatch(CharkitError, ValueError):
    """Operands belong to different groups or act on different point sets."""


class NotACharacter(CharkitError, ValueError):
    """A class function required to be a character is not one."""
