import logging

from core.models.report import PropertyReport
from core.models.run import CheckRun
from core.services.db import BaseService


logger = logging.getLogger(__name__)


class RunService(BaseService):
    def record(self, command: str, source: str, report: PropertyReport) -> CheckRun:
        witness = report.first_violation
        run = CheckRun(
            command=command,
            source=source[:255],
            passed=report.passed,
            checked=report.checked,
            violations=report.violations,
            worst_slack=report.worst_slack,
            witness=witness.describe() if witness else None,
        )
        self.db_session.add(run)
        self.db_session.commit()
        logger.info("Recorded %s run #%d on %s", command, run.id, source)
        return run

    def get_recent(self, limit: int = 20, command: str | None = None) -> list[CheckRun]:
        query = self.db_session.query(CheckRun)
        if command:
            query = query.filter(CheckRun.command == command)

        return query.order_by(CheckRun.id.desc()).limit(limit).all()
