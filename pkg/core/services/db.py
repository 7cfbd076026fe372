import logging
from collections.abc import Generator
from contextlib import contextmanager

from sqlalchemy import Engine
from sqlalchemy.orm import Session

from core.db import Base, engine as default_engine

logger = logging.getLogger(__name__)


class DBService:
    def __init__(self, engine: Engine | None = None) -> None:
        self.engine = engine or default_engine

    def create_tables(self) -> None:
        # registers the mapped classes on Base.metadata
        import core.models.run  # noqa: F401

        Base.metadata.create_all(self.engine)

    def drop_tables(self) -> None:
        Base.metadata.drop_all(self.engine)

    @contextmanager
    def db_session(self) -> Generator[Session, None, None]:
        session = Session(bind=self.engine)
        try:
            yield session
            session.commit()
        except Exception as exc:
            logger.warning(
                "Internal Error: %s. Rolling back session.", exc.__class__.__name__
            )
            session.rollback()
            raise
        finally:
            session.close()


class BaseService:
    def __init__(self, db_session: Session) -> None:
        self.db_session = db_session
