"""Test the results dashboard layout"""

import pandas as pd

from src.core.check_registry import CheckOutcome
from src.dashboard import build_app, load_tables
from src.results_handler import create_check_result, save_results
from src.utils import get_db_engine


class TestDashboard:
    def test_empty_database(self, tmp_path):
        """Test a fresh database gives empty frames and still builds"""
        results, samples = load_tables(get_db_engine(str(tmp_path / 'bitrep.db')))
        assert results.empty and samples.empty
        app = build_app(results, samples)
        assert app.layout is not None

    def test_with_saved_results(self, tmp_path):
        """Test saved rows and samples reach the layout"""
        db_path = str(tmp_path / 'bitrep.db')
        rows = [create_check_result('count_oracle', ['oracle'], CheckOutcome(10, 0), 2.0, 0)]
        samples = [{'check': 'decide_scaling', 'm': 256, 'n': 256, 'seconds': 0.01},
                   {'check': 'decide_scaling', 'm': 512, 'n': 512, 'seconds': 0.05}]
        save_results(rows, samples, outputs_dir=str(tmp_path), db_path=db_path)

        results, loaded = load_tables(get_db_engine(db_path))
        assert len(results) == 1
        assert list(loaded['m']) == [256, 512]

        app = build_app(results, loaded)
        graphs = [child for child in app.layout.children if type(child).__name__ == 'Graph']
        assert len(graphs) == 2
        assert isinstance(results, pd.DataFrame)
