"""Tag filtering for the audit check catalog"""

import pandas as pd
from typing import Set, List, Optional
from ..logging_config import get_main_logger

class TagFilter:
    """Filter checks by tags with AND/OR logic"""

    def __init__(self, include_tags: Optional[List[str]] = None,
                 exclude_tags: Optional[List[str]] = None,
                 require_all: bool = False):
        self.include_tags = set(include_tags or [])
        self.exclude_tags = set(exclude_tags or [])
        self.require_all = require_all  # True = AND logic, False = OR logic
        self.logger = get_main_logger()

    @staticmethod
    def split_tags(tags: str) -> Set[str]:
        if not tags:
            return set()
        return {tag.strip() for tag in tags.split(',') if tag.strip()}

    def matches(self, check_tags: str) -> bool:
        """Check if a tag string matches the filter criteria"""
        tag_set = self.split_tags(check_tags)

        if self.exclude_tags and (tag_set & self.exclude_tags):
            return False

        if self.include_tags:
            if self.require_all:
                return self.include_tags.issubset(tag_set)
            return bool(tag_set & self.include_tags)

        return True

    def filter_checks(self, catalog: pd.DataFrame) -> pd.DataFrame:
        """Filter the check catalog by its tags column"""
        if not self.include_tags and not self.exclude_tags:
            return catalog

        mask = catalog['tags'].fillna('').apply(self.matches)
        filtered = catalog[mask]

        self.logger.info(f"Tag filter applied: {len(catalog)} -> {len(filtered)} checks")
        if self.include_tags:
            self.logger.debug(f"Include tags: {sorted(self.include_tags)} ({'AND' if self.require_all else 'OR'} logic)")
        if self.exclude_tags:
            self.logger.debug(f"Exclude tags: {sorted(self.exclude_tags)}")

        return filtered

    @classmethod
    def get_all_tags(cls, catalog: pd.DataFrame) -> Set[str]:
        """Every tag used in the catalog"""
        all_tags = set()
        for tags in catalog['tags'].fillna(''):
            all_tags.update(cls.split_tags(tags))
        return all_tags
