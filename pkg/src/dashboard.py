from dash import Dash, html, dcc
import pandas as pd
import plotly.express as px
import plotly.graph_objects as go
from sqlalchemy import inspect

from .utils import get_db_engine
from .logging_config import get_main_logger

TABLE_ROWS = 20


def build_app(results: pd.DataFrame, samples: pd.DataFrame) -> Dash:
    """Dash app with the decide-scaling chart, pass rates per check and the latest results"""
    app = Dash(__name__)

    if len(samples):
        timing = samples.groupby('m', as_index=False).agg({'seconds': 'min'})
        scaling = px.line(timing, x='m', y='seconds', markers=True, log_x=True, log_y=True,
                          title='decide runtime for m = n (best of repeats)')
    else:
        scaling = go.Figure(layout_title_text='decide runtime for m = n (no samples recorded)')

    if len(results):
        rates = results.assign(passed=results['pass'].astype(bool)).groupby('check', as_index=False)['passed'].mean()
        pass_rates = px.bar(rates, x='check', y='passed', title='Pass rate per check', range_y=[0, 1])
    else:
        pass_rates = go.Figure(layout_title_text='Pass rate per check (no results recorded)')

    latest = results.tail(TABLE_ROWS)
    app.layout = html.Div([
        html.H1('bitrep Audit Dashboard'),
        dcc.Graph(figure=scaling),
        dcc.Graph(figure=pass_rates),
        html.H2('Results Table'),
        html.Table(
            [html.Tr([html.Th(col) for col in latest.columns])] +
            [html.Tr([html.Td(str(latest.iloc[i][col])) for col in latest.columns]) for i in range(len(latest))]
        )
    ])
    return app


def load_tables(engine):
    """check_results and benchmark_samples, empty frames when a table is missing"""
    tables = set(inspect(engine).get_table_names())
    results = pd.read_sql('SELECT * FROM check_results', engine) if 'check_results' in tables else pd.DataFrame(
        columns=['check', 'pass'])
    samples = pd.read_sql('SELECT * FROM benchmark_samples', engine) if 'benchmark_samples' in tables else pd.DataFrame(
        columns=['m', 'seconds'])
    return results, samples


def main():
    engine = get_db_engine()
    results, samples = load_tables(engine)
    get_main_logger().info(f"Dashboard: {len(results)} results, {len(samples)} samples")
    build_app(results, samples).run(debug=True)


if __name__ == '__main__':
    main()
