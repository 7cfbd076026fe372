import datetime

from sqlalchemy import Boolean, DateTime, Float, Integer, String, Text
from sqlalchemy.orm import mapped_column

from core.db import Base


class CheckRun(Base):
    __tablename__ = "check_run"

    id = mapped_column(Integer, primary_key=True, autoincrement=True)
    command = mapped_column(String(64), nullable=False, index=True)
    source = mapped_column(String(255), nullable=False)
    passed = mapped_column(Boolean, nullable=False)
    checked = mapped_column(Integer, nullable=False, default=0)
    violations = mapped_column(Integer, nullable=False, default=0)
    worst_slack = mapped_column(Float, nullable=True)
    witness = mapped_column(Text, nullable=True)

    created_at = mapped_column(
        DateTime(timezone=True),
        default=lambda: datetime.datetime.now(datetime.timezone.utc),
    )

    @property
    def status(self) -> str:
        return "pass" if self.passed else "FAIL"
