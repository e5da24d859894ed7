"""Exception types shared across the library.

Every error raised by graphgroups derives from :class:`GraphGroupsError`,
so callers (in particular the CLI) can catch domain errors uniformly.
"""


class GraphGroupsError(Exception):
    """Base class for all graphgroups errors."""


# -- word parsing / word operations -----------------------------------------

class UnknownGenerator(GraphGroupsError):
    pass


class MalformedToken(GraphGroupsError):
    pass


class ZeroExponent(GraphGroupsError):
    pass


class EmptyWord(GraphGroupsError):
    pass


class NotCyclicallyReduced(GraphGroupsError):
    pass


# -- graphs ------------------------------------------------------------------

class MalformedGraph(GraphGroupsError):
    pass


class DuplicateVertex(GraphGroupsError):
    pass


class UnknownEndpoint(GraphGroupsError):
    pass


class LoopEdge(GraphGroupsError):
    pass


class DuplicateEdge(GraphGroupsError):
    pass


class ZeroVertices(GraphGroupsError):
    pass


class EmptyGraph(GraphGroupsError):
    pass


# -- trace / raag ------------------------------------------------------------

class InvalidLetter(GraphGroupsError):
    pass


class GraphMismatch(GraphGroupsError):
    pass


class TooFewVertices(GraphGroupsError):
    pass


# -- stallings ---------------------------------------------------------------

class RankMismatch(GraphGroupsError):
    pass


class TrivialElement(GraphGroupsError):
    pass


class PowersShareRoot(GraphGroupsError):
    pass


# -- concrete groups ---------------------------------------------------------

class ModulusMismatch(GraphGroupsError):
    pass


# -- gbs ---------------------------------------------------------------------

class Disconnected(GraphGroupsError):
    pass


# -- one-relator presentations -----------------------------------------------

class MalformedPresentation(GraphGroupsError):
    pass


# -- embeddings --------------------------------------------------------------

class WrongGraph(GraphGroupsError):
    pass


class NotForest(GraphGroupsError):
    pass


class DiameterOutOfRange(GraphGroupsError):
    pass


class CommutationViolation(GraphGroupsError):
    pass
