"""Base model module for shared schema configuration.

``BaseSchema`` is the common parent of every JSON schema in hypalg so that
they all serialize and validate the same way.
"""

from pydantic import BaseModel, ConfigDict


class BaseSchema(BaseModel):
    """Base pydantic model for all hypalg schemas.

    Exact rationals travel as strings ("3/4", "-1"), so no float rounding
    happens between the services and the wire.
    """

    model_config = ConfigDict(
        from_attributes=True,
        populate_by_name=True,
        arbitrary_types_allowed=True,
    )
