from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from tabulate import tabulate
from tqdm import tqdm

from ..options import VerificationOptions
from ..sharpcqa_core.exceptions import SharpCQAError
from ..sharpcqa_core.logger import log
from .checks import CASE_BUILDERS, checks_for, run_checks
from .generator import trial_rng


@dataclass(frozen=True)
class TrialResult:
    """The outcome of one trial.

    Attributes:
        index (int): the trial index; with the run seed it reproduces the instance.
        failed_checks (tuple[str, ...]): the checks that failed, empty if the trial passed.
        instance (str): the serialized source instance, kept only for failed trials.
    """

    index: int
    failed_checks: tuple[str, ...] = ()
    instance: str = ""

    @property
    def passed(self) -> bool:
        """Whether every check passed"""
        return not self.failed_checks


@dataclass(frozen=True)
class VerificationReport:
    """The results of a verification run, ordered by trial index"""

    options: VerificationOptions
    results: tuple[TrialResult, ...]

    @property
    def passed(self) -> int:
        """The number of passing trials"""
        return sum(result.passed for result in self.results)

    @property
    def failures(self) -> list[TrialResult]:
        """The failing trials"""
        return [result for result in self.results if not result.passed]

    @property
    def summary(self) -> str:
        """The result line, "passed/total pass" """
        return f"{self.passed}/{len(self.results)} pass"

    def render(self) -> str:
        """The full report: one reproducer per failing trial, a per-check table and the result line"""
        options = self.options
        lines = [f"{options.lemma}: {options.trials} trials, seed {options.seed}"]
        for failure in self.failures:
            lines.append(
                f"FAIL trial {failure.index} (seed {options.seed}): {', '.join(failure.failed_checks)}"
            )
            lines.append(failure.instance)
        failed = Counter(name for result in self.results for name in result.failed_checks)
        rows = [[name, len(self.results) - failed[name], failed[name]] for name in checks_for(options.lemma)]
        rows.extend([name, 0, n] for name, n in failed.items() if name not in checks_for(options.lemma))
        lines.append(tabulate(rows, headers=["check", "pass", "fail"], tablefmt="simple"))
        lines.append(self.summary)
        return "\n".join(lines)


def run_trial(options: VerificationOptions, index: int) -> TrialResult:
    """Builds and checks the instance of trial `index`"""
    rng = trial_rng(options.seed, index)
    try:
        case = CASE_BUILDERS[options.lemma](rng, options)
    except (SharpCQAError, RuntimeError) as e:
        log.debug(f"Trial {index} could not build an instance: {e}")
        return TrialResult(index, (type(e).__name__,), str(e))
    try:
        failed = run_checks(options.lemma, case)
    except SharpCQAError as e:
        failed = [type(e).__name__]
    if not failed:
        return TrialResult(index)
    log.debug(f"Trial {index} failed {', '.join(failed)}")
    return TrialResult(index, tuple(failed), str(case.source))


def run_verification(options: VerificationOptions, progress: bool = False) -> VerificationReport:
    """Runs `options.trials` seeded trials of a reduction, `options.jobs` at a time.

    Args:
        options (VerificationOptions): the reduction, the seed and the instance bounds.
        progress (bool, optional): show a progress bar on stderr. Defaults to False.

    Returns:
        VerificationReport: the trial results ordered by index, independent of `options.jobs`.
    """
    log.debug(f"Verifying {options.lemma} with {options.trials} trials, seed {options.seed}, {options.jobs} jobs")
    indices = range(options.trials)
    with ThreadPoolExecutor(max_workers=options.jobs) as executor:
        results = tuple(
            tqdm(
                executor.map(lambda index: run_trial(options, index), indices),
                total=options.trials,
                desc=str(options.lemma),
                disable=not progress,
            )
        )
    return VerificationReport(options, results)
