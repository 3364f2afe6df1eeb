import threading
from threading import Event
from typing import Optional, Sequence

from stanley_reisner_toolkit.claims import VerificationReport, get_claim, verify
from stanley_reisner_toolkit.field_linalg import FieldSpec
from stanley_reisner_toolkit.utils.guards import DEFAULT_MAX_TURAN_SETS
from stanley_reisner_toolkit.utils.logger import logger
from stanley_reisner_toolkit.utils.threadsafe_deque import ThreadSafeDeque


class ClaimVerifierWorker:
    def __init__(
        self,
        stop_event: Event,
        claim_queue: ThreadSafeDeque,
        report_queue: ThreadSafeDeque,
        fields: Optional[Sequence[FieldSpec]] = None,
        jobs: int = 1,
        max_families: Optional[int] = None,
        max_turan_sets: int = DEFAULT_MAX_TURAN_SETS,
        progress: bool = False,
    ):
        self.stop_event = stop_event
        self.claim_queue = claim_queue
        self.report_queue = report_queue
        self.fields = fields
        self.jobs = jobs
        self.max_families = max_families
        self.max_turan_sets = max_turan_sets
        self.progress = progress
        self.finished = Event()
        self.verify_thread = None

    def run(self):
        self.verify_thread = threading.Thread(target=self._verify_loop, daemon=True)
        self.verify_thread.start()
        logger.info("Claim verifier worker started.")
        return True

    def _verify_loop(self):
        while not self.stop_event.is_set():
            claim_id = self.claim_queue.popleft()
            if claim_id is None:
                break
            try:
                report = verify(
                    claim_id,
                    fields=self.fields,
                    jobs=self.jobs,
                    max_families=self.max_families,
                    max_turan_sets=self.max_turan_sets,
                    progress=self.progress,
                )
            except Exception as e:
                logger.error(f"Error verifying {claim_id}: {e}", exc_info=True)
                record = get_claim(claim_id)
                report = VerificationReport(
                    claim_id=claim_id,
                    group=record.group,
                    ranges=record.default_range,
                    fields=[],
                    result="SKIPPED",
                    detail=f"{type(e).__name__}: {e}",
                )
            self.report_queue.append(report)
        self.finished.set()

    def wait(self, timeout: float) -> bool:
        """True once every queued claim has a report (or the worker was stopped)."""
        return self.finished.wait(timeout)

    def stop(self):
        self.stop_event.set()
        if self.verify_thread:
            self.verify_thread.join()
        logger.info("Claim verifier worker stopped.")
