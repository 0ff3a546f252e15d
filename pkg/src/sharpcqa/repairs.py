"""Brute-force repair enumeration and #CQA counting.

Repairs are enumerated by a mixed-radix counter over the blocks of a database: blocks and the facts inside
each block are in canonical order, and the last block varies fastest. Index ranges of that counter can be
counted independently, which is how `count_satisfying` splits the work across threads.
"""
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import groupby
from math import prod

from .model import Database, Fact, Query, Term, evaluate
from .sharpcqa_core.constants import CQA_REPAIR_CAP
from .sharpcqa_core.exceptions import RepairSpaceTooLargeError
from .sharpcqa_core.logger import log

BlockKey = tuple[str, tuple[Term, ...]]


@dataclass(frozen=True)
class BlockDecomposition:
    """The partition of a database into maximal sets of key-equal facts.

    Attributes:
        db (Database): the decomposed database.
        blocks (dict[BlockKey, tuple[Fact, ...]]): every block keyed by (relation name, key tuple), blocks and
            facts in canonical order.
    """

    db: Database
    blocks: dict[BlockKey, tuple[Fact, ...]]

    @property
    def sizes(self) -> tuple[int, ...]:
        """The size of each block, in block order"""
        return tuple(len(block) for block in self.blocks.values())

    @property
    def repair_count(self) -> int:
        """The number of repairs, the product of block sizes"""
        return prod(self.sizes)

    def __len__(self) -> int:
        return len(self.blocks)


def _block_sort_key(fact: Fact) -> tuple[str, tuple[str, ...], str]:
    return fact.relation.name, tuple(str(t) for t in fact.key), str(fact)


def blocks(db: Database) -> BlockDecomposition:
    """Partitions `db` by key-equality.

    Args:
        db (Database): a database.

    Returns:
        BlockDecomposition: the blocks of `db`. An empty database has no blocks.
    """
    facts = sorted(db.facts, key=_block_sort_key)
    grouped = {
        key: tuple(group)  # type: ignore[arg-type]
        for key, group in groupby(facts, key=lambda f: f.block_key)
    }
    return BlockDecomposition(db, grouped)


def repair_count(db: Database) -> int:
    """The number of repairs of `db`, computed without enumeration"""
    return blocks(db).repair_count


def repair_at(decomposition: BlockDecomposition, index: int) -> Database:
    """The `index`-th repair in enumeration order.

    Args:
        decomposition (BlockDecomposition): the blocks of a database.
        index (int): a position in `range(decomposition.repair_count)`.

    Raises:
        IndexError: if `index` is out of range.

    Returns:
        Database: the repair choosing, from each block, the fact given by the mixed-radix digits of `index`.
    """
    if not 0 <= index < decomposition.repair_count:
        raise IndexError(f"Repair index {index} is out of range for {decomposition.repair_count} repairs")
    chosen: list[Fact] = []
    for block in reversed(list(decomposition.blocks.values())):
        index, digit = divmod(index, len(block))
        chosen.append(block[digit])
    return decomposition.db.with_facts(chosen)


def _checked_blocks(db: Database, cap: int) -> BlockDecomposition:
    decomposition = blocks(db)
    total = decomposition.repair_count
    if total > cap:
        raise RepairSpaceTooLargeError(total, cap)
    return decomposition


def repairs(db: Database, cap: int = CQA_REPAIR_CAP) -> Iterator[Database]:
    """Streams every repair of `db`: one fact chosen from each block.

    Args:
        db (Database): a database.
        cap (int, optional): the largest number of repairs allowed. Defaults to `CQA_REPAIR_CAP`.

    Raises:
        RepairSpaceTooLargeError: if `db` has more than `cap` repairs. Raised before anything is yielded.

    Yields:
        Database: each repair exactly once, in mixed-radix order.
    """
    decomposition = _checked_blocks(db, cap)

    def stream() -> Iterator[Database]:
        for index in range(decomposition.repair_count):
            yield repair_at(decomposition, index)

    return stream()


def _count_range(decomposition: BlockDecomposition, q: Query, start: int, stop: int) -> int:
    return sum(evaluate(q, repair_at(decomposition, index)) for index in range(start, stop))


def count_satisfying(db: Database, q: Query, cap: int = CQA_REPAIR_CAP, jobs: int = 1) -> int:
    """Counts the repairs of `db` that satisfy `q`.

    Args:
        db (Database): a database.
        q (Query): a Boolean conjunctive query.
        cap (int, optional): the largest number of repairs allowed. Defaults to `CQA_REPAIR_CAP`.
        jobs (int, optional): the number of threads the repair index range is split across. Defaults to 1.

    Raises:
        RepairSpaceTooLargeError: if `db` has more than `cap` repairs.

    Returns:
        int: #CQA(q) on `db`, the same for every value of `jobs`.
    """
    decomposition = _checked_blocks(db, cap)
    if not evaluate(q, db):
        # every repair is a subset of db
        return 0
    total = decomposition.repair_count
    if jobs <= 1 or total < 2:
        return _count_range(decomposition, q, 0, total)

    step = -(-total // jobs)
    bounds = [(start, min(start + step, total)) for start in range(0, total, step)]
    log.debug(f"Counting {total} repairs in {len(bounds)} ranges")
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(_count_range, decomposition, q, start, stop) for start, stop in bounds]
        return sum(future.result() for future in futures)
