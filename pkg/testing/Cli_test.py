import contextlib
import io
import json
import os
import tempfile
import unittest
from k3invariants.cli import main


class CliTest(unittest.TestCase):

    def run_main(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            try:
                code = main(['-q', *argv])
            except SystemExit as e:
                code = e.code
        return code, out.getvalue()

    def test_verify_all(self):
        code, out = self.run_main('verify')
        self.assertEqual(0, code)
        self.assertTrue(out.splitlines()[-1].endswith(" 0 fail, 10 stored, 1 disputed"))

    def test_verify_filter_text(self):
        code, out = self.run_main('verify', '--claims', 'S3.2-fibre-g1-3-k2')
        self.assertEqual(0, code)
        self.assertEqual("S3.2-fibre-g1-3-k2  §3.2 table  expected 10  computed 10  PASS\n"
                         "1 pass, 0 fail, 0 stored, 0 disputed\n", out)

    def test_verify_json(self):
        code, out = self.run_main('verify', '--claims', 'EQ1.6.1,T1.5', '--format', 'json', '--sequential')
        self.assertEqual(0, code)
        self.assertEqual({'pass': 13, 'fail': 0, 'stored': 0, 'disputed': 0}, json.loads(out)['summary'])

    def test_verify_out(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'report.json')
            code, out = self.run_main('verify', '--claims', 'S4.7', '--format', 'json', '--out', path)
            self.assertEqual(0, code)
            self.assertEqual('', out)
            with open(path, encoding='utf-8') as f:
                self.assertEqual(4, len(json.load(f)['claims']))

    def test_verify_byte_identical(self):
        self.assertEqual(self.run_main('verify', '--format', 'json'), self.run_main('verify', '--format', 'json'))

    def test_verify_failure_exit_code(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'claims.json')
            with open(path, 'w', encoding='utf-8') as f:
                json.dump({'claims': [{'id': 'A', 'paper_ref': 'r', 'expected': 11,
                                       'recipe': {'op': 'h_proj', 'args': [3, 3]}}]}, f)
            code, out = self.run_main('verify', '--manifest', path)
        self.assertEqual(1, code)
        self.assertTrue(out.endswith("0 pass, 1 fail, 0 stored, 0 disputed\n"))

    def test_usage_errors(self):
        self.assertEqual(2, self.run_main('verify', '--claims', 'NOPE')[0])
        self.assertEqual(2, self.run_main('verify', '--format', 'xml')[0])
        self.assertEqual(2, self.run_main('verify', '--manifest', '/nonexistent/claims.json')[0])
        self.assertEqual(2, self.run_main('frobnicate')[0])
        self.assertEqual(2, self.run_main('hilbert', '--weights', '1,x', '--upto', '3')[0])
        self.assertEqual(2, self.run_main('hilbert', '--weights', '1,0', '--upto', '3')[0])
        self.assertEqual(2, self.run_main('fibre', '--g1', '7', '--k', '2')[0])

    def test_hilbert(self):
        code, out = self.run_main('hilbert', '--weights', '1,1,1,1,3,3,3,3', '--degrees', '4', '--upto', '4')
        self.assertEqual(0, code)
        self.assertEqual("0\t1\n1\t4\n2\t10\n3\t24\n4\t50\n", out)

    def test_hilbert_ambient(self):
        code, out = self.run_main('hilbert', '--weights', '1,2', '--upto', '3')
        self.assertEqual("0\t1\n1\t1\n2\t2\n3\t2\n", out)

    def test_fibre(self):
        self.assertEqual((0, "10\n"), self.run_main('fibre', '--g1', '3', '--k', '2'))

    def test_fibre_explain(self):
        code, out = self.run_main('fibre', '--g1', '4', '--k', '2', '--explain')
        lines = out.splitlines()
        self.assertEqual("6", lines[0])
        self.assertEqual(3, len(lines))
        self.assertTrue(lines[1].strip().startswith("+1"))

    def test_claims_listing(self):
        code, out = self.run_main('claims', 'S5.13')
        self.assertEqual(0, code)
        self.assertEqual("S5.13-dim-D17-2\t§5.13  [DISPUTED]\n", out)

    def test_claims_listing_quote(self):
        code, out = self.run_main('claims', 'P5.12-h0-4H', '--quote')
        self.assertEqual(0, code)
        self.assertEqual("P5.12-h0-4H\t(5.12)\n"
                         "    We have $h^0(4H) = 35$.\n"
                         "    F_1 with H = C0 + 2f, so 4H = 4C0 + 8f\n", out)
