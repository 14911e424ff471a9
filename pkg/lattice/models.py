"""
Persisted verification runs.
"""

from typing import Any, Dict, Iterable, List, Optional
from django.db import models

from .choices import Suite
from .results import BoundReport


class VerificationRun(models.Model):
    class Status(models.TextChoices):
        PENDING = 'pending', 'Pending'
        HOLDS = 'holds', 'Holds'
        VIOLATED = 'violated', 'Violated'
        FAILED = 'failed', 'Failed'

    suite: str = models.CharField(max_length=20, choices=Suite.choices)
    status: str = models.CharField(max_length=20, choices=Status.choices, default=Status.PENDING)
    seed: Optional[int] = models.BigIntegerField(null=True, blank=True)
    dim: Optional[int] = models.PositiveSmallIntegerField(null=True, blank=True)
    box: Optional[int] = models.PositiveSmallIntegerField(null=True, blank=True)
    corpus_size: int = models.PositiveIntegerField(default=0)
    expression: str = models.TextField(blank=True)
    violated_count: int = models.PositiveIntegerField(default=0)
    report: List[Dict[str, Any]] = models.JSONField(default=list, blank=True)
    error: str = models.TextField(blank=True)
    created_at: models.DateTimeField = models.DateTimeField(auto_now_add=True)
    updated_at: models.DateTimeField = models.DateTimeField(auto_now=True)

    class Meta:
        db_table = 'verification_runs'
        ordering = ['-created_at']

    def __str__(self) -> str:
        source = self.expression or f"random(dim={self.dim}, seed={self.seed})"
        return f"{self.suite} on {source}: {self.status}"

    def is_clean(self) -> bool:
        return self.status == self.Status.HOLDS and self.violated_count == 0

    def record_reports(self, reports: Iterable[BoundReport]) -> None:
        ordered = sorted(reports, key=lambda r: r.polytope_id)
        self.violated_count = sum(1 for r in ordered if r.violated)
        self.status = self.Status.VIOLATED if self.violated_count else self.Status.HOLDS
        self.report = [r.to_json() for r in ordered]
        self.save(update_fields=['status', 'violated_count', 'report', 'updated_at'])

    def record_documents(self, documents: Iterable[Dict[str, Any]]) -> None:
        """Same as record_reports for reports already rendered to JSON by a worker."""
        ordered = sorted(documents, key=lambda doc: doc['id'])
        self.violated_count = sum(1 for doc in ordered if doc['kind'] == 'theorem' and doc['verdict'] == 'violated')
        self.status = self.Status.VIOLATED if self.violated_count else self.Status.HOLDS
        self.report = ordered
        self.save(update_fields=['status', 'violated_count', 'report', 'updated_at'])

    def mark_failed(self, message: str) -> None:
        self.status = self.Status.FAILED
        self.error = message
        self.save(update_fields=['status', 'error', 'updated_at'])
