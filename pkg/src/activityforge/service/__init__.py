from .config import ServiceConfig, load_config
from .store import ActivityStore
from .activities import Activity, ActivityService, canonical_json

__all__ = [
    "Activity",
    "ActivityService",
    "ActivityStore",
    "ServiceConfig",
    "canonical_json",
    "load_config",
]
