from typing import TYPE_CHECKING, Union

from tabulate import tabulate

from ..model import Database, Query, Schema

if TYPE_CHECKING:
    from ..classifier import Classification


def serialize_schema(schema: Schema) -> str:
    """Serializes a schema as `rel` declarations sorted by name"""
    return "\n".join(str(relation) for relation in schema)


def _undeclared_header(schema: Schema, used: frozenset[str]) -> str:
    return serialize_schema(Schema(frozenset(r for r in schema.relations if r.name not in used)))


def serialize_query(q: Query) -> str:
    """Serializes a query in canonical form.

    Atoms are sorted lexicographically and joined by ", ". Schema relations without atoms are emitted as
    `rel` declarations on preceding lines so that the schema survives a round trip.
    """
    header = _undeclared_header(q.schema, frozenset(a.relation.name for a in q.atoms))
    body = str(q)
    return f"{header}\n{body}" if header else body


def serialize_database(db: Database) -> str:
    """Serializes a database in canonical form, one fact per line"""
    header = _undeclared_header(db.schema, frozenset(f.relation.name for f in db.facts))
    body = str(db)
    return "\n".join(part for part in (header, body) if part)


def serialize(x: Union[Query, Database, Schema, "Classification"]) -> str:
    """Serializes a query, a database, a schema or a classification.

    Queries, databases and schemas use the canonical text format; classifications are emitted as a JSON
    object with stable key order.

    Args:
        x (Union[Query, Database, Schema, Classification]): the object to serialize.

    Returns:
        str: the canonical text.
    """
    if isinstance(x, Query):
        return serialize_query(x)
    if isinstance(x, Database):
        return serialize_database(x)
    if isinstance(x, Schema):
        return serialize_schema(x)
    return x.report().model_dump_json(indent=2)


def tabulate_trace(classification: "Classification") -> str:
    """Renders the trace of a classification as a two-column table"""
    rows = [[step.name, step.detail] for step in classification.trace]
    return tabulate(rows, headers=["step", "result"], tablefmt="simple")
