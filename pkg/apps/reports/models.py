import uuid
from django.db import models


class RunReport(models.Model):
    """
    A recorded run of one of the memoria commands.
    Holds the results table the command printed, row by row.
    """

    class Status(models.TextChoices):
        PASS = 'PASS', 'Pass'
        FAIL = 'FAIL', 'Fail'
        ERROR = 'ERROR', 'Input error'

    # Primary identification
    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)

    # Invocation
    command = models.CharField(max_length=255, help_text='Command line as typed')
    inputs_digest = models.CharField(
        max_length=64,
        blank=True,
        help_text='SHA-256 of the input files and parameters'
    )

    # Outcome
    results = models.JSONField(default=list, help_text='Rows of name, value, expected, passed, note')
    status = models.CharField(
        max_length=10,
        choices=Status.choices,
        default=Status.PASS
    )
    duration = models.FloatField(default=0.0, help_text='Wall-clock seconds')

    # Metadata
    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        db_table = 'run_reports'
        verbose_name = 'Run report'
        verbose_name_plural = 'Run reports'
        ordering = ['-created_at']
        indexes = [
            models.Index(fields=['status'], name='run_reports_status_idx'),
            models.Index(fields=['created_at'], name='run_reports_created_idx'),
        ]

    def __str__(self):
        return f"{self.command} ({self.status})"

    @property
    def row_count(self):
        """Return the number of result rows."""
        return len(self.results)

    @property
    def failed_rows(self):
        """Return the rows whose expectation failed."""
        return [row for row in self.results if row.get('passed') is False]

    @property
    def is_passing(self):
        """Return True if the run met every expectation."""
        return self.status == self.Status.PASS
