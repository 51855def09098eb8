#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Batch Processor

This module provides functionality for sweeping family instances on a
worker pool. Results come back strictly in input order.
"""

import logging
import threading
from collections import deque
from concurrent.futures import ThreadPoolExecutor

from .errors import DomainError
from .families import evaluate_instance

logger = logging.getLogger(__name__)


class BatchProcessor:
    """
    Class for batch evaluation of family instances.
    """

    def __init__(self, worker_cap=4, options=None, evaluator=None):
        """
        Initialize the batch processor.

        Args:
            worker_cap: Maximum number of instances evaluated concurrently
            options: AnalysisOptions shared by every instance
            evaluator: Callable (instance, options) -> MonogenityReport,
                defaults to families.evaluate_instance
        """
        if worker_cap < 1:
            raise DomainError(f"worker cap must be positive, got {worker_cap}")
        self.worker_cap = worker_cap
        self.options = options
        self.evaluator = evaluator or evaluate_instance
        self.progress_callback = None # Expected signature: callback(progress, stage_text, current_task, status)
        self.cancel_flag = threading.Event()
        self.processed = 0

    def set_progress_callback(self, callback):
        """
        Set progress callback function.

        Args:
            callback: Callback function taking progress (0.0-1.0), stage_text, current_task, and status
        """
        self.progress_callback = callback

    def _evaluate(self, instance):
        if self.cancel_flag.is_set():
            return None
        return self.evaluator(instance, self.options)

    def process(self, instances):
        """
        Evaluate instances concurrently.

        Args:
            instances: Sequence of FamilyInstance

        Yields:
            (instance, MonogenityReport) pairs in input order; stops early
            once cancel() is called
        """
        instances = list(instances)
        total = len(instances)
        stage_text = "Evaluating instances"
        self.cancel_flag.clear()
        self.processed = 0
        self._update_progress(0.0, stage_text, "Starting...", f"{total} instances")
        if total == 0:
            self._update_progress(1.0, stage_text, "No instances to evaluate", "")
            return

        window = 2 * self.worker_cap
        pending = deque()
        feed = iter(instances)

        with ThreadPoolExecutor(max_workers=self.worker_cap, thread_name_prefix="monocheck") as executor:
            try:
                for instance in feed:
                    pending.append((instance, executor.submit(self._evaluate, instance)))
                    if len(pending) >= window:
                        break
                while pending:
                    instance, future = pending.popleft()
                    report = future.result()
                    if report is None or self.cancel_flag.is_set():
                        logger.info(f"Batch Processor: cancelled after {self.processed} of {total} instances")
                        self._update_progress(self.processed / total, stage_text, "Processing cancelled",
                                              f"Processed {self.processed} of {total} instances")
                        break
                    self.processed += 1
                    logger.debug(f"Batch Processor: {self.processed} of {total} instances")
                    self._update_progress(self.processed / total, stage_text, instance.key(),
                                          f"Processed {self.processed} of {total} instances")
                    yield instance, report
                    next_instance = next(feed, None)
                    if next_instance is not None:
                        pending.append((next_instance, executor.submit(self._evaluate, next_instance)))
            finally:
                self.cancel_flag.set()
                for _, future in pending:
                    future.cancel()

        if self.processed == total:
            logger.info(f"Batch Processor: {total} of {total} instances evaluated")

    def _update_progress(self, progress, stage_text, current=None, status=None):
        """
        Update progress callback if available.

        Args:
            progress: Progress value (0.0-1.0)
            stage_text: Text describing the current major stage
            current: Current specific operation text
            status: Status text (e.g., instance count)
        """
        if self.progress_callback:
            self.progress_callback(progress, stage_text, current, status)

    def cancel(self):
        """
        Cancel ongoing processing. Instances already running finish; no
        further result is yielded.
        """
        self.cancel_flag.set()
