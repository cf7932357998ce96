#!/usr/bin/env python3
"""Exit codes, report schema and determinism of the zhukit CLI."""
import json
import os
import subprocess
import tempfile
import unittest

import jsonschema

CLI = os.environ.get("ZHUKIT_CLI", "zhukit")
SOURCE = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

with open(os.path.join(SOURCE, "schemas", "report-1.schema.json")) as f:
    SCHEMA = json.load(f)
BAD_ALGEBRA = os.path.join(SOURCE, "tests", "data", "virasoro_bad_bracket.json")


def zhukit(*args, env=None):
    e = dict(os.environ)
    e.pop("ZHUKIT_JOBS", None)
    if env:
        e.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=e, timeout=300)


def report(*args, **kw):
    r = zhukit(*args, "--format", "json", **kw)
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, SCHEMA)
    return r.returncode, doc


class ExitCodes(unittest.TestCase):
    def test_passing_runs_exit_zero(self):
        runs = [
            ("present", "--algebra", "vir", "--p", "1", "--cutoff", "4"),
            ("present", "--algebra", "sl2", "--p", "0", "--ideal", "e[0]^2", "--max-filtration", "5"),
            ("verify", "--suite", "skew", "--algebra", "vir", "--p", "0,1", "--weight-cutoff", "6"),
            ("verify", "--suite", "modn", "--algebra", "vir", "--p", "0", "--series-order", "8", "--hbar", "sym"),
            ("identities", "--lemma", "A2", "--gamma", "sym", "--X", "0..3", "--Y", "1..3", "--n", "-4..8"),
            ("identities", "--suite", "appendix-b", "--gamma-group", "1/2", "--P", "0,1/2,1,3/2"),
            ("identities", "--lemma", "star-delta", "--p", "0..4"),
            ("reduce", "--algebra", "sl2", "--p", "0", "f[1] e[-1]", "--membership"),
        ]
        for args in runs:
            with self.subTest(args=args):
                code, doc = report(*args)
                self.assertEqual(code, 0)
                self.assertEqual(doc["summary"]["fail"] + doc["summary"]["error"], 0)

    def test_failures_exit_one(self):
        code, doc = report("verify", "--algebra", BAD_ALGEBRA, "--suite", "modules", "--p", "0",
                           "--depth", "2", "--module-weight", "2")
        self.assertEqual(code, 1)
        self.assertGreater(doc["summary"]["fail"], 0)
        failed = [c for c in doc["cases"] if c["status"] == "fail"]
        self.assertTrue(all(c.get("defect") for c in failed))

    def test_usage_errors_exit_two(self):
        for args in [
            ("verify", "--bogus"),
            ("verify", "--algebra", "nosuch"),
            ("verify", "--hbar", "0"),
            ("verify", "--suite", "nosuch"),
            ("identities", "--lemma", "A2", "--chi", "1"),
            ("present", "--algebra", "vir", "--p", "-1"),
            ("reduce", "--algebra", "sl2", "f[1]"),
            ("reduce", "--algebra", "sl2", "f[1] x[-1]"),
            (),
        ]:
            with self.subTest(args=args):
                r = zhukit(*args)
                self.assertEqual(r.returncode, 2, r.stderr)
                self.assertEqual(r.stdout, "")

    def test_bad_algebra_file_names_the_field(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            f.write('{"format": "lca/1", "name": "x", "generators": [{"id": "L", "weight": "two"}], '
                    '"centrals": [], "brackets": {}}')
        try:
            r = zhukit("present", "--algebra", f.name)
            self.assertEqual(r.returncode, 2)
            self.assertIn("generators[0].weight", r.stderr)
        finally:
            os.unlink(f.name)


class Output(unittest.TestCase):
    def test_parse_error_caret(self):
        r = zhukit("reduce", "--algebra", "sl2", "f[1] x[-1]")
        lines = r.stderr.splitlines()
        self.assertIn("unknown generator 'x'", lines[0])
        self.assertEqual(lines[1], "  f[1] x[-1]")
        self.assertEqual(lines[2], "       ^")

    def test_reduce_values(self):
        cases = [
            (("--algebra", "vir", "--p", "1", "L[-1] L[1] L[-1] L[1]"), "2 L[-1] L[0] L[1]"),
            (("--algebra", "sl2", "--p", "0", "e[-1] f[1]"), "0"),
            (("--algebra", "sl2", "--p", "0", "f[1] e[-1]"), "-h[0] + k"),
        ]
        for args, expected in cases:
            with self.subTest(args=args):
                _, doc = report("reduce", *args)
                self.assertEqual(doc["results"]["normal_form"], expected)

    def test_deterministic_across_jobs(self):
        args = ("verify", "--algebra", "vir", "--suite", "all", "--p", "0,1", "--weight-cutoff", "4",
                "--depth", "3", "--module-weight", "3", "--format", "json")
        one = zhukit(*args, "--jobs", "1").stdout
        three = zhukit(*args, "--jobs", "3").stdout
        env = zhukit(*args, env={"ZHUKIT_JOBS": "2"}).stdout
        self.assertEqual(one, three)
        self.assertEqual(one, env)
        self.assertNotIn("timing", json.loads(one))

    def test_timing_only_on_request(self):
        _, doc = report("identities", "--lemma", "star-delta", "--p", "0..2", "--timing")
        self.assertIn("wall_seconds", doc["timing"])

    def test_output_file_matches_stdout(self):
        args = ("identities", "--lemma", "star-delta", "--p", "0..2", "--format", "json")
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "r.json")
            self.assertEqual(zhukit(*args, "-o", path).returncode, 0)
            with open(path) as f:
                self.assertEqual(f.read(), zhukit(*args).stdout)

    def test_version(self):
        r = zhukit("--version")
        self.assertEqual(r.returncode, 0)
        self.assertRegex(r.stdout.strip(), r"^\d+\.\d+\.\d+$")


if __name__ == "__main__":
    unittest.main(verbosity=2)
