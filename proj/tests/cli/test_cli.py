# Copyright 2026 The qinst Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the qinst executable.

Usage: test_cli.py QINST_BINARY DOCS_DIR
"""

import json
import pathlib
import random
import subprocess
import sys
import tempfile
import unittest

import jsonschema

QINST = None
DOCS = None


def run(*args):
    return subprocess.run([QINST, *map(str, args)], capture_output=True, text=True)


def random_cnot_qasm(n, m, seed):
    rng = random.Random(seed)
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{n}];"]
    for _ in range(m):
        if rng.random() < 0.6:
            a, b = rng.sample(range(n), 2)
            lines.append(f"cx q[{a}],q[{b}];")
        else:
            t, p, l = (rng.uniform(-3.1, 3.1) for _ in range(3))
            lines.append(f"u3({t:.6f},{p:.6f},{l:.6f}) q[{rng.randrange(n)}];")
    return "\n".join(lines) + "\n"


class CliTest(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = pathlib.Path(self._tmp.name)
        self.report_schema = json.loads((DOCS / "report-schema.json").read_text())
        self.verify_schema = json.loads((DOCS / "verification-schema.json").read_text())

    def tearDown(self):
        self._tmp.cleanup()

    def write(self, name, text):
        path = self.dir / name
        path.write_text(text)
        return path

    def test_usage_errors(self):
        self.assertEqual(run().returncode, 1)
        self.assertEqual(run("bogus").returncode, 1)
        self.assertEqual(run("optimize", "--in", "x").returncode, 1)
        self.assertEqual(run("--help").returncode, 0)

    def test_double_cnot_optimizes_to_empty(self):
        src = self.write("in.qasm", "qreg q[2];\ncx q[0],q[1];\ncx q[0],q[1];\n")
        out, rep = self.dir / "out.qasm", self.dir / "rep.json"
        r = run("optimize", "--in", src, "--out", out, "--report", rep)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("2q 2 -> 0", r.stdout)
        stats = run("stats", "--in", out)
        self.assertEqual(stats.stdout, "qubits: 2\n2q: 0, 1q: 0\ndepth: 0\n")
        report = json.loads(rep.read_text())
        jsonschema.validate(report, self.report_schema)
        self.assertEqual(report["passes"][0]["two_qubit_ratio"], 0)

    def test_sweep_limit(self):
        src = self.write("in.qasm", random_cnot_qasm(4, 30, 1))
        rep = self.dir / "rep.json"
        r = run("optimize", "--in", src, "--out", self.dir / "o.qasm", "--report", rep,
                "--max-sweeps", "1")
        self.assertEqual(r.returncode, 0, r.stderr)
        report = json.loads(rep.read_text())
        self.assertLessEqual(report["passes"][0]["sweeps"], 1)
        for block in report["passes"][0]["blocks"]:
            self.assertLessEqual(block["sweeps"], 1)

    def test_jobs_do_not_change_output(self):
        src = self.write("in.qasm", random_cnot_qasm(6, 40, 2))
        for command, extra in (("optimize", []), ("retarget", ["--target", "sqisw"])):
            outputs = []
            for jobs in (1, 3):
                out, rep = self.dir / f"o{jobs}.qasm", self.dir / f"r{jobs}.json"
                r = run(command, "--in", src, "--out", out, "--report", rep, "--jobs", jobs,
                        "--seed", 7, *extra)
                self.assertEqual(r.returncode, 0, r.stderr)
                report = json.loads(rep.read_text())
                for p in report["passes"]:
                    p["wall_ms"] = 0
                report["output"] = ""
                outputs.append((out.read_bytes(), report))
            self.assertEqual(outputs[0], outputs[1], command)

    def test_unknown_target(self):
        src = self.write("in.qasm", "qreg q[2];\ncx q[0],q[1];\n")
        r = run("retarget", "--in", src, "--out", self.dir / "o.qasm", "--target", "nope")
        self.assertEqual(r.returncode, 1)
        self.assertIn("cz", r.stderr)

    def test_parse_error_has_position(self):
        src = self.write("in.qasm", "qreg q[1];\ncreg c[1];\nmeasure q[0] -> c[0];\n")
        r = run("stats", "--in", src)
        self.assertEqual(r.returncode, 2)
        self.assertIn("line 3, column 1", r.stderr)
        self.assertEqual(run("stats", "--in", self.dir / "missing.qasm").returncode, 2)

    def test_verify_detects_corruption(self):
        src = self.write("in.qasm", random_cnot_qasm(4, 20, 3))
        out, rep = self.dir / "o.qasm", self.dir / "r.json"
        self.assertEqual(run("optimize", "--in", src, "--out", out, "--report", rep).returncode, 0)
        good = self.dir / "good.json"
        r = run("verify", "--in", src, "--compiled", out, "--out", good)
        self.assertEqual(r.returncode, 0, r.stdout + r.stderr)
        jsonschema.validate(json.loads(good.read_text()), self.verify_schema)

        lines = out.read_text().splitlines()
        idx = next(i for i, l in enumerate(lines) if l.startswith("u3("))
        lines[idx] = "x" + lines[idx][lines[idx].index(" "):]
        bad = self.write("bad.qasm", "\n".join(lines) + "\n")
        bad_json = self.dir / "bad.json"
        r = run("verify", "--in", src, "--compiled", bad, "--out", bad_json)
        self.assertEqual(r.returncode, 4)
        self.assertIn("result fail", r.stdout)
        doc = json.loads(bad_json.read_text())
        jsonschema.validate(doc, self.verify_schema)
        self.assertFalse(doc["passed"])

        bound = run("verify", "--in", src, "--compiled", bad, "--report", rep, "--mode", "bound")
        self.assertEqual(bound.returncode, 4)

    def test_bound_mode_on_wide_circuit(self):
        src = self.write("in.qasm", random_cnot_qasm(12, 60, 4))
        out, rep = self.dir / "o.qasm", self.dir / "r.json"
        self.assertEqual(run("optimize", "--in", src, "--out", out, "--report", rep).returncode, 0)
        self.assertEqual(run("verify", "--in", src, "--compiled", out).returncode, 1)
        vj = self.dir / "v.json"
        r = run("verify", "--in", src, "--compiled", out, "--report", rep, "--out", vj)
        self.assertEqual(r.returncode, 0, r.stdout + r.stderr)
        doc = json.loads(vj.read_text())
        jsonschema.validate(doc, self.verify_schema)
        self.assertEqual(doc["mode"], "upper_bound")

    def test_gate_set_file_and_list(self):
        src = self.write("in.qasm", random_cnot_qasm(3, 12, 5))
        for target in (DOCS / "examples" / "google.json", "sqisw,syc"):
            out = self.dir / "o.qasm"
            r = run("retarget", "--in", src, "--out", out, "--target", target)
            self.assertEqual(r.returncode, 0, r.stderr)
            body = out.read_text()
            self.assertNotIn("cx ", body)
            self.assertEqual(run("verify", "--in", src, "--compiled", out).returncode, 0)

    def test_examples_match_schemas(self):
        examples = DOCS / "examples"
        for path in examples.glob("*.report.json"):
            jsonschema.validate(json.loads(path.read_text()), self.report_schema)
        for path in examples.glob("*.verify.json"):
            jsonschema.validate(json.loads(path.read_text()), self.verify_schema)
        for path in examples.glob("*.qasm"):
            self.assertEqual(run("stats", "--in", path).returncode, 0, path.name)


if __name__ == "__main__":
    QINST = sys.argv[1]
    DOCS = pathlib.Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0], "-v"])
