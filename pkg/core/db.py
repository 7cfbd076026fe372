from sqlalchemy import create_engine
from sqlalchemy.orm import declarative_base

from core.settings import Config


# Database setup
DATABASE_URL = Config.DATABASE_URL
engine = create_engine(DATABASE_URL)
Base = declarative_base()
