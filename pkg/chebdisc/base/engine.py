import logging
from typing import Any, Dict, Optional

from sqlalchemy.engine import create_engine
from sqlalchemy.schema import MetaData

logger = logging.getLogger(__name__)


class EngineContext:
    def __init__(self,
                 name: str,
                 url: str,
                 schema: Optional[str] = None,
                 engine_params: Optional[Dict[str, Any]] = None,
                 metadata_params: Optional[Dict[str, Any]] = None,
                 ):
        """
        Database engine that sweep results are written to.

        :param name: name of the engine context, used in log messages.
        :param url: SQLAlchemy database url, e.g. `sqlite:///results.db`.
        :param schema: schema to create result tables in.
        :param engine_params: additional kwargs passed to `create_engine`.
        :param metadata_params: additional kwargs passed to `MetaData`.
        """
        self.name = name
        self.schema = schema
        self.engine_params = engine_params or {}
        self.metadata_params = metadata_params or {}
        self.engine = create_engine(url, **self.engine_params)
        self.metadata = MetaData(schema=schema, **self.metadata_params)
        logger.info(f"Created engine `{name}` using dialect "
                    f"`{self.engine.dialect.name}`")
