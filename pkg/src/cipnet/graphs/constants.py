"""Graph-core constants."""

COMMENT_PREFIXES: tuple[str, ...] = ("#", "%")

GRAPH_FORMATS: tuple[str, ...] = ("edge-list", "graphml")

GENERATOR_KINDS: tuple[str, ...] = ("er", "ba")
