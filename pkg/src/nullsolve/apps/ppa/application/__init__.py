from nullsolve.apps.ppa.application.path_service import (
    PathFollowingService, PathResult, PathStep, follow_path, get_path_service
)

__all__ = [
    'PathFollowingService',
    'PathResult',
    'PathStep',
    'follow_path',
    'get_path_service',
]
