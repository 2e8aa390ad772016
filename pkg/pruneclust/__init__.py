# Dendrogram pruning toolkit
from pruneclust.config import settings

__version__ = settings.VERSION
