"""The reduction cases checked by the verification harness and the checks run on them.

Both reductions are many-one reductions given by a fact map f: a case holds a source query and database,
the target query, the image database and f itself, and every registered check compares the two sides
against the brute-force repair oracle.
"""
import random
from collections.abc import Callable
from dataclasses import dataclass

from ..encoder import EncodingContext, new_encode
from ..enums import Lemma
from ..minimizer import minimize
from ..model import Database, Fact, evaluate
from ..options import VerificationOptions
from ..reducer import CoupleReduction, key_equality_transfer_holds, pad_database, pad_fact
from ..repairs import count_satisfying, repair_count, repairs
from ..sharpcqa_core.logger import log
from .generator import (
    Instance,
    constant_pool,
    padding_instance,
    random_database,
    random_satisfiable_query,
    random_schema,
)


@dataclass(frozen=True)
class ReductionCase:
    """A source instance, its image under a fact map and the target query.

    Attributes:
        source (Instance): the source query and database.
        target (Instance): the target query and the image of the source database.
        fact_map (Callable[[Fact], Fact]): the fact map f.
        cap (int): the repair cap of the oracle.
    """

    source: Instance
    target: Instance
    fact_map: Callable[[Fact], Fact]
    cap: int

    def image(self, db: Database) -> frozenset[Fact]:
        """f applied to every fact of `db`"""
        return frozenset(self.fact_map(fact) for fact in db.facts)


Check = Callable[[ReductionCase], bool]
CHECKS: dict[Lemma, dict[str, Check]] = {lemma: {} for lemma in Lemma}


def register_check(*lemmas: Lemma) -> Callable[[Check], Check]:
    """Registers a check for the given reductions. Checks run in registration order.

    Use this function as a decorator:
    @register_check(Lemma.PADDING)
    def some_property(case: ReductionCase) -> bool:
        ...
    """

    def decorator(check: Check) -> Check:
        for lemma in lemmas:
            if check.__name__ in CHECKS[lemma]:
                log.debug_warning(f"Overwriting existing check for {lemma}: {check.__name__}")
            CHECKS[lemma][check.__name__] = check
        return check

    return decorator


@register_check(Lemma.COUPLE, Lemma.PADDING)
def count_preserved(case: ReductionCase) -> bool:
    """#CQA of the source equals #CQA of the target on the image"""
    return count_satisfying(case.source.db, case.source.query, case.cap) == count_satisfying(
        case.target.db, case.target.query, case.cap
    )


@register_check(Lemma.COUPLE, Lemma.PADDING)
def repair_count_preserved(case: ReductionCase) -> bool:
    """The source and the image have the same number of repairs"""
    return repair_count(case.source.db) == repair_count(case.target.db)


@register_check(Lemma.COUPLE, Lemma.PADDING)
def repairs_transferred(case: ReductionCase) -> bool:
    """The repairs of the image are exactly the images of the repairs"""
    images = {case.image(r) for r in repairs(case.source.db, case.cap)}
    return images == {r.facts for r in repairs(case.target.db, case.cap)}


@register_check(Lemma.COUPLE, Lemma.PADDING)
def satisfaction_transferred(case: ReductionCase) -> bool:
    """Every repair r satisfies the source query iff f(r) satisfies the target query"""
    return all(
        evaluate(case.source.query, r) == evaluate(case.target.query, case.target.db.with_facts(case.image(r)))
        for r in repairs(case.source.db, case.cap)
    )


@register_check(Lemma.COUPLE, Lemma.PADDING)
def key_equality_transferred(case: ReductionCase) -> bool:
    """A ∼ B iff f(A) ∼ f(B) on the source database"""
    return key_equality_transfer_holds(case.source.db.facts, case.fact_map)


def padding_case(rng: random.Random, options: VerificationOptions) -> ReductionCase:
    """A random q and db over a schema S, mapped to the corrected encoding of q and the padded db"""
    instance = padding_instance(rng, options)
    ctx = EncodingContext.from_schema(instance.query.schema)
    target = Instance(new_encode(instance.query, instance.query.schema), pad_database(instance.db, ctx))
    return ReductionCase(instance, target, lambda fact: pad_fact(fact, ctx), options.repair_cap)


def couple_case(rng: random.Random, options: VerificationOptions) -> ReductionCase:
    """A random minimal q with its rewrite q', a random db over q', and the coupled image of db"""
    schema = random_schema(rng, options)
    minimal = minimize(random_satisfiable_query(rng, schema, options))
    reduction = CoupleReduction.from_query(minimal)
    rewritten = reduction.rewritten
    db = random_database(rng, rewritten.schema, options, constant_pool(options.constant_pool))
    return ReductionCase(
        Instance(rewritten, db),
        Instance(minimal, reduction.couple_database(db)),
        reduction.couple_fact,
        options.repair_cap,
    )


CASE_BUILDERS: dict[Lemma, Callable[[random.Random, VerificationOptions], ReductionCase]] = {
    Lemma.COUPLE: couple_case,
    Lemma.PADDING: padding_case,
}


def checks_for(lemma: Lemma) -> dict[str, Check]:
    """The registered checks of a reduction"""
    return CHECKS[lemma]


def run_checks(lemma: Lemma, case: ReductionCase) -> list[str]:
    """The names of the registered checks that fail on `case`"""
    return [name for name, check in checks_for(lemma).items() if not check(case)]
