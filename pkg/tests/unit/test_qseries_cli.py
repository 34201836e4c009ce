import pytest
import sys
import os
import json

# Add the project root to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'python'))

from cli.qseries_cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from cli.serialization import series_from_json, series_to_text
from harness.comparator import IdentityReport, Mismatch, Status
from hecke.hecke_sums import HeckeParams, hecke_f_monomial
from qfunctions.monomial import q_pow
from qfunctions.special_functions import poch_inf


class TestExpand:
    """Test cases for the expand command"""

    def test_fabc_text(self, capsys):
        """Test that expand prints the same series the library computes"""
        code = main(['expand', 'fabc', '--a', '3', '--b', '2', '--c', '3',
                     '--x', 'q^3', '--y', 'q^4', '--order', '12'])
        assert code == EXIT_OK
        expected = hecke_f_monomial(HeckeParams(3, 2, 3), q_pow(3), q_pow(4), 12)
        assert capsys.readouterr().out.strip() == series_to_text(expected)

    def test_theta_json(self, capsys):
        """Test Theta(q; q^3) in JSON equals (q)_inf"""
        code = main(['expand', 'theta', '--x', 'q^1', '--base', '3', '--order', '20', '--format', 'json'])
        assert code == EXIT_OK
        assert series_from_json(capsys.readouterr().out) == poch_inf(q_pow(1), 20)

    def test_negative_monomial_with_equals(self, capsys):
        """Test that --x=-q^1 parses as a negative monomial"""
        assert main(['expand', 'false-theta', '--x=-q^1', '--order', '5']) == EXIT_OK

    def test_appell_theta_vanishes(self, capsys):
        """Test that a vanishing theta denominator exits with a usage code"""
        code = main(['expand', 'appell', '--x', 'q^1', '--z', 'q^3', '--base', '3', '--order', '5'])
        assert code == EXIT_USAGE
        assert 'ThetaVanishes' in capsys.readouterr().err

    def test_missing_parameters(self, capsys):
        """Test that a target without its parameters exits 2"""
        assert main(['expand', 'fabc', '--a', '1']) == EXIT_USAGE
        assert '--b' in capsys.readouterr().err

    def test_bad_monomial(self, capsys):
        """Test that argparse rejects a malformed monomial"""
        assert main(['expand', 'theta', '--x', 'q2']) == EXIT_USAGE

    @pytest.mark.parametrize("base", ["0", "-1"])
    def test_nonpositive_base(self, capsys, base):
        """Test that --base below 1 is a usage error for every theta target"""
        for target in ("theta", "false-theta"):
            assert main(["expand", target, "--x", "q^1", f"--base={base}", "--order", "5"]) == EXIT_USAGE
        assert "must be at least 1" in capsys.readouterr().err

    def test_negative_order(self, capsys):
        """Test that a negative order is a usage error"""
        assert main(['expand', 'phi', '--order=-1']) == EXIT_USAGE


class TestVerify:
    """Test cases for the verify command"""

    def test_single_identity(self, capsys):
        """Test an identity that holds"""
        assert main(['verify', 'theta-zero:2', '--order', '30']) == EXIT_OK
        assert 'theta-zero:2: EQUAL through q^30' in capsys.readouterr().out

    def test_unknown_identity(self, capsys):
        """Test that an unknown id exits 2"""
        assert main(['verify', 'nonsense']) == EXIT_USAGE
        assert 'UnknownIdentity' in capsys.readouterr().err

    def test_needs_a_selection(self, capsys):
        """Test verify without an id, --all or --prefix"""
        assert main(['verify']) == EXIT_USAGE

    def test_id_and_prefix_conflict(self, capsys):
        """Test that an id together with --prefix is rejected"""
        assert main(['verify', 'theta-zero:2', '--prefix', 'jtp']) == EXIT_USAGE

    def test_json_output(self, capsys):
        """Test the JSON report list"""
        assert main(['verify', 'theta-euler:1', '--order', '20', '--format', 'json']) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data == [{'identity': 'theta-euler:1', 'order': 20, 'status': 'EQUAL',
                         'experiment': False, 'first_mismatch': None}]

    def test_mismatch_exits_one(self, capsys, mocker):
        """Test that a failing mandatory identity exits 1"""
        report = IdentityReport('jtp:q^1,1', 10, Status.MISMATCH,
                                Mismatch(2, None, 1, 0))
        mocker.patch('cli.qseries_cli.run_identity', return_value=report)
        assert main(['verify', 'jtp:q^1,1', '--order', '10']) == EXIT_FAILED

    def test_experiment_does_not_fail(self, capsys):
        """Test that the family 2 discrepancy is reported but does not fail the run"""
        assert main(['verify', 'habiro:2,1', '--order', '20']) == EXIT_OK
        assert '[experiment]' in capsys.readouterr().out

    def test_prefix_suite_with_summary(self, capsys):
        """Test a small suite prints the per-family table"""
        assert main(['verify', '--prefix', 'theta-euler', '--order', '20', '--workers', '2']) == EXIT_OK
        out = capsys.readouterr().out
        assert 'theta-euler:1: EQUAL' in out
        assert 'theta-euler:2: EQUAL' in out
        assert 'MISMATCH' in out
