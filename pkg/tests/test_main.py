"""Test the command-line surface: documents, exit codes and the audit runner"""

import io
import json

import numpy as np
import pytest

from src.core.check_registry import CheckInterface, CheckOutcome, CheckRegistry
from src.main import parse_arguments, render_document, run, run_checks


def invoke(*argv):
    """Run the CLI and return (status, stdout text, stderr text)"""
    stdout, stderr = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=stdout, stderr=stderr)
    return status, stdout.getvalue(), stderr.getvalue()


@pytest.fixture
def w1_file(write_file):
    return write_file('w1.txt', "1100\n0110\n0011\n")


class FailingCheck(CheckInterface):
    @staticmethod
    def run(rng, limits):
        return CheckOutcome(1, 1, 'always fails')

    @staticmethod
    def get_tags():
        return ['failing_fixture']

    @staticmethod
    def describe():
        return 'fails on purpose'


class TestParseArguments:
    """Test argument parsing"""

    def test_shared_options_follow_subcommand(self):
        """Test --log-level and --output are accepted after the subcommand"""
        args = parse_arguments(['count', 'w.txt', '--log-level', 'DEBUG', '--output', 'plain'])
        assert args.command == 'count'
        assert args.log_level == 'DEBUG'
        assert args.output == 'plain'

    def test_audit_defaults(self):
        """Test audit runs single-threaded with seed 0 and saves nothing"""
        args = parse_arguments(['audit'])
        assert args.threads == 1 and args.seed == 0 and not args.save


class TestRenderDocument:
    """Test document rendering"""

    def test_json_separators(self):
        """Test one line with ', ' and ': ' separators"""
        assert render_document({'count': '4', 'classes': 2}, 'json') == '{"count": "4", "classes": 2}\n'

    def test_plain(self):
        """Test plain output prints one key: value line per field"""
        assert render_document({'count': '4', 'indices': [0, 1]}, 'plain') == 'count: 4\nindices: [0, 1]\n'


class TestDecideCommand:
    """Test decide"""

    def test_w1_target_0100(self, w1_file):
        """Test the W1 witness and an empty stderr"""
        status, out, err = invoke('decide', w1_file, '--target', '0100')
        assert status == 0
        assert json.loads(out) == {
            'representable': True,
            'witness': {'type': 'cnf', 'clauses': [['1', '2'], ['0'], ['0', '1']]},
        }
        assert err == ''

    def test_not_representable_still_succeeds(self, write_file):
        """Test a negative verdict is a normal answer"""
        status, out, _ = invoke('decide', write_file('one.txt', "11\n"), '--target', '00')
        assert status == 0
        assert out == '{"representable": false, "witness": null}\n'

    def test_negation(self, w1_file):
        """Test --negation reaches a target AND/OR alone cannot"""
        status, out, _ = invoke('decide', w1_file, '--target', '1000', '--negation')
        assert status == 0
        assert json.loads(out)['representable'] is True

    def test_bad_target(self, w1_file):
        """Test malformed literals exit 2 with a JSON error on stderr"""
        status, out, err = invoke('decide', w1_file, '--target', '01a0')
        assert status == 2
        assert out == ''
        assert json.loads(err)['error'] == 'malformed_input'

    def test_width_mismatch(self, w1_file):
        """Test a target of the wrong width exits 2"""
        status, _, err = invoke('decide', w1_file, '--target', '010')
        assert status == 2
        assert json.loads(err)['error'] == 'length_mismatch'

    def test_missing_file(self, tmp_path):
        """Test an absent input file is malformed input"""
        status, _, err = invoke('decide', str(tmp_path / 'absent.txt'), '--target', '01')
        assert status == 2
        assert json.loads(err)['error'] == 'malformed_input'

    def test_empty_file(self, write_file):
        """Test a file with only comments is an empty set"""
        status, _, err = invoke('decide', write_file('empty.txt', "# none\n"), '--target', '01')
        assert status == 2
        assert json.loads(err)['error'] == 'empty_set'


class TestCountCommand:
    """Test count"""

    def test_two_strings(self, write_file):
        """Test two disjoint strings generate all four strings"""
        status, out, _ = invoke('count', write_file('two.txt', "10\n01\n"))
        assert status == 0
        assert out == '{"count": "4", "classes": 2}\n'

    def test_w1_with_negation(self, w1_file):
        """Test NOT gives 2 to the number of classes"""
        status, out, _ = invoke('count', w1_file, '--negation')
        assert json.loads(out) == {'count': '16', 'classes': 4, 'negation': True}

    def test_enumeration_bound_from_config(self, w1_file, write_file):
        """Test a lowered bound in an alternative config exits 3"""
        config = write_file('limits.csv', "setting,value\nenumeration_bound,2\n")
        status, _, err = invoke('count', w1_file, '--config', config)
        assert status == 3
        assert json.loads(err)['error'] == 'too_large'

    def test_bad_config(self, w1_file, write_file):
        """Test an unknown limit setting exits 2"""
        config = write_file('limits.csv', "setting,value\nno_such_limit,2\n")
        status, _, err = invoke('count', w1_file, '--config', config)
        assert status == 2
        assert json.loads(err)['error'] == 'configuration_error'


class TestMinimumSubsetCommands:
    """Test minrep and minspan"""

    def test_minrep_exact(self, w1_file):
        """Test the exact subset for 0100"""
        status, out, _ = invoke('minrep', w1_file, '--target', '0100', '--exact')
        assert status == 0
        assert json.loads(out) == {'indices': [0, 1], 'size': 2, 'method': 'exact', 'certified': True}

    def test_minrep_greedy(self, w1_file):
        """Test greedy is the default method"""
        status, out, _ = invoke('minrep', w1_file, '--target', '0100')
        assert json.loads(out)['method'] == 'greedy'

    def test_minrep_unreachable_target(self, w1_file):
        """Test unreachable targets exit 4"""
        status, _, err = invoke('minrep', w1_file, '--target', '1010')
        assert status == 4
        assert json.loads(err)['error'] == 'not_representable'

    def test_minspan(self, write_file):
        """Test the redundant join 11 is dropped"""
        status, out, _ = invoke('minspan', write_file('w.txt', "10\n01\n11\n"))
        assert status == 0
        assert json.loads(out)['indices'] == [0, 1]


class TestClosureCommand:
    """Test closure"""

    def test_lists_strings(self, write_file):
        """Test small closures list their strings in order"""
        status, out, _ = invoke('closure', write_file('two.txt', "10\n01\n"))
        assert status == 0
        assert json.loads(out) == {'size': 4, 'strings': ['00', '01', '10', '11']}

    def test_limit_exceeded(self, write_file):
        """Test a closure past --limit exits 3"""
        status, _, err = invoke('closure', write_file('four.txt', "1000\n0100\n0010\n0001\n"), '--limit', '5')
        assert status == 3
        assert json.loads(err)['error'] == 'limit_exceeded'

    def test_non_positive_limit(self, write_file):
        """Test --limit 0 is a usage error"""
        status, _, err = invoke('closure', write_file('two.txt', "10\n01\n"), '--limit', '0')
        assert status == 2
        assert json.loads(err)['error'] == 'usage_error'


class TestFromPosetCommand:
    """Test from-poset"""

    def test_chain_round_trip(self, write_file):
        """Test the emitted strings count back to the antichain count"""
        status, out, _ = invoke('from-poset', write_file('chain.txt', "2\n1 2\n"))
        assert status == 0
        assert out == "00\n10\n11\n"
        status, out, _ = invoke('count', write_file('strings.txt', out))
        assert json.loads(out)['count'] == '3'


class TestUsageErrors:
    """Test argument errors exit 2"""

    def test_unknown_subcommand(self):
        """Test an unknown subcommand reports usage_error"""
        status, _, err = invoke('frobnicate')
        assert status == 2
        assert json.loads(err)['error'] == 'usage_error'

    def test_missing_target(self, w1_file):
        """Test decide without --target exits 2"""
        status, _, _ = invoke('decide', w1_file)
        assert status == 2

    def test_threads_must_be_positive(self):
        """Test --threads 0 is rejected"""
        status, _, err = invoke('audit', '--threads', '0')
        assert status == 2
        assert json.loads(err)['error'] == 'usage_error'


class TestStableOutput:
    """Test repeated runs print byte-identical documents"""

    INPUTS = {
        'w1.txt': "1100\n0110\n0011\n",
        'two.txt': "10\n01\n",
        'join.txt': "10\n01\n11\n",
        'four.txt': "1000\n0100\n0010\n0001\n",
        'chain.txt': "2\n1 2\n",
    }

    @pytest.fixture
    def inputs(self, write_file):
        return {name: write_file(name, text) for name, text in self.INPUTS.items()}

    @pytest.mark.parametrize('argv,expected', [
        (['decide', 'w1.txt', '--target', '0100'],
         '{"representable": true, "witness": {"type": "cnf", "clauses": [["1", "2"], ["0"], ["0", "1"]]}}\n'),
        (['count', 'w1.txt'], '{"count": "9", "classes": 4}\n'),
        (['count', 'w1.txt', '--negation'], '{"count": "16", "classes": 4, "negation": true}\n'),
        (['minrep', 'w1.txt', '--target', '0100', '--exact'],
         '{"indices": [0, 1], "size": 2, "method": "exact", "certified": true}\n'),
        (['minspan', 'join.txt'], '{"indices": [0, 1], "size": 2, "method": "greedy", "certified": true}\n'),
        (['closure', 'two.txt'], '{"size": 4, "strings": ["00", "01", "10", "11"]}\n'),
        (['from-poset', 'chain.txt'], "00\n10\n11\n"),
    ])
    def test_documents_repeat_exactly(self, inputs, argv, expected):
        """Test two consecutive runs print the same bytes, matching the recorded document"""
        argv = [inputs.get(arg, arg) for arg in argv]
        first = invoke(*argv)
        second = invoke(*argv)
        assert first == second
        assert first == (0, expected, '')

    @pytest.mark.parametrize('argv,status,error', [
        (['decide', 'w1.txt', '--target', '01a0'], 2, 'malformed_input'),
        (['closure', 'four.txt', '--limit', '5'], 3, 'limit_exceeded'),
        (['minrep', 'w1.txt', '--target', '1010'], 4, 'not_representable'),
    ])
    def test_errors_repeat_exactly(self, inputs, argv, status, error):
        """Test error documents and exit codes repeat byte for byte"""
        argv = [inputs.get(arg, arg) for arg in argv]
        first = invoke(*argv)
        second = invoke(*argv)
        assert first == second
        assert first[:2] == (status, '')
        assert json.loads(first[2])['error'] == error


class TestAuditCommand:
    """Test the audit runner"""

    def test_list_checks(self):
        """Test the catalog is sorted by name"""
        status, out, _ = invoke('audit', '--list-checks')
        assert status == 0
        names = [entry['name'] for entry in json.loads(out)['checks']]
        assert 'table_construction' in names
        assert names == sorted(names)

    def test_failing_check_exits_5(self, monkeypatch):
        """Test one failed check makes the audit exit 5"""
        CheckRegistry.get_all_checks()
        monkeypatch.setitem(CheckRegistry._checks, 'failing_fixture', FailingCheck)
        status, out, _ = invoke('audit', '--tags', 'failing_fixture')
        document = json.loads(out)
        assert status == 5
        assert document['failed'] == 1
        assert document['checks'][0]['detail'] == 'always fails'

    def test_run_checks_independent_of_threads(self, limits):
        """Test sequential and threaded runs give identical rows"""
        names = ['table_construction', 'formula_laws']
        sequential, _ = run_checks(names, threads=1, seed=3, limits=limits)
        threaded, _ = run_checks(names, threads=2, seed=3, limits=limits)
        strip = lambda rows: [{k: v for k, v in r.items() if k not in ('duration_ms', 'timestamp')} for r in rows]
        assert strip(sequential) == strip(threaded)
        assert [r['check'] for r in sequential] == names

    def test_errors_become_failed_rows(self, monkeypatch, limits):
        """Test a raising check yields a failed row instead of aborting"""
        class RaisingCheck(FailingCheck):
            @staticmethod
            def run(rng, limits):
                raise RuntimeError('boom')

        CheckRegistry.get_all_checks()
        monkeypatch.setitem(CheckRegistry._checks, 'raising_fixture', RaisingCheck)
        rows, samples = run_checks(['raising_fixture'], limits=limits)
        assert rows[0]['pass'] is False
        assert rows[0]['error_type'] == 'RuntimeError'
        assert samples == []

    @pytest.mark.slow
    @pytest.mark.integration
    def test_full_audit_passes(self):
        """Test every registered check passes with the default seed"""
        status, out, _ = invoke('audit', '--threads', '4')
        document = json.loads(out)
        assert document['failed'] == 0, document
        assert status == 0
