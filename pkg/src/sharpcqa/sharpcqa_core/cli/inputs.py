"""Reading command-line QUERY, DATABASE and SCHEMA arguments, each either a file path or literal text"""
from typing import Optional

from ...model import Database, Query, Schema
from ...options import read_path_or_literal
from ...qparse import parse_database, parse_query, parse_schema
from ..logger import log


def read_schema(argument: Optional[str]) -> Optional[Schema]:
    """The schema given by `argument`, `None` if no schema argument was passed"""
    return None if argument is None else parse_schema(read_path_or_literal(argument))


def read_query(argument: str, schema: Optional[Schema] = None) -> Query:
    """The query given by `argument`, read against `schema` when there is one"""
    q = parse_query(read_path_or_literal(argument), schema)
    log.debug(f"Read query {q} over {', '.join(sorted(q.schema.names))}")
    return q


def read_database(argument: str, schema: Optional[Schema] = None) -> Database:
    """The database given by `argument`.

    Relations of `schema` must be used with their declared signatures; other relations are inferred.
    """
    db = parse_database(read_path_or_literal(argument), schema, allow_inference=True)
    log.debug(f"Read {len(db)} facts")
    return db
