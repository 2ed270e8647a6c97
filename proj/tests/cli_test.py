import json
import subprocess
import sys

BINARY = sys.argv[1]
failures = []


def run(*args):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def check(name, condition):
    print(("PASS " if condition else "FAIL ") + name)
    if not condition:
        failures.append(name)


code, out, _ = run("--fixture", "hopf_pos", "lk")
check("lk on hopf", code == 0 and json.loads(out)["lk"] == [[0, 1], [1, 0]])
check("schema version present", code == 0 and json.loads(out)["schema_version"] == 1)

code, out, _ = run("massey3", "--order", "1,2,3", "--fixture", "borromean")
result = json.loads(out) if code == 0 else {}
check("borromean massey3", result.get("value") == 1 and result.get("term_first") == 1 and result.get("term_second") == 0)

code, out, err = run("--fixture", "hopf_unknot", "massey3", "--order", "1,2,3")
check("linked components are undefined", code == 2 and out == "" and json.loads(err)["error"] == "MasseyUndefined")

code, out, err = run("--code", "X(1,2", "lk")
check("malformed code exits 1", code == 1 and out == "")

code, out, err = run("--code", "O1+ U1+ | O2+ U2+", "trace", "--pair", "1,2")
check("unsupported embedding exits 3", code == 3 and out == "")

code, out, err = run("--fixture", "borromean", "massey3", "--order", "1,2,4")
check("unknown component exits 1", code == 1 and out == "")

code, out, err = run("lk")
check("missing input exits 1", code == 1 and out == "")

first = run("--fixture", "brunn_2", "massey3", "--order", "2,3,1", "--dump-trace", "--seed", "3")
second = run("--fixture", "brunn_2", "massey3", "--order", "2,3,1", "--dump-trace", "--seed", "3")
check("identical runs are byte-identical", first[0] == 0 and first[1] == second[1])
dump = json.loads(first[1])["trace_dump"]
check("trace dump carries derived boundaries", [d["type"] for d in dump] == ["derived_boundary"] * 2)

code, out, _ = run("--fixture", "borromean", "trace", "--pair", "1,2", "--geometry")
result = json.loads(out) if code == 0 else {}
labels = result.get("trace", {}).get("pierce_labels", [[1]])
check("trace labels balance", code == 0 and sum(labels[0]) == 0 and len(labels[0]) % 2 == 0)
check("geometry dump present", result.get("geometry", {}).get("type") == "embedded_link")

code, out, _ = run("--grid-scale", "2", "--fixture", "borromean", "massey3", "--order", "1,2,3")
check("grid scale keeps the value", code == 0 and json.loads(out)["value"] == 1)

code, out, _ = run("--code", '{"components":4,"crossings":[]}', "massey4", "--order", "1,2,3,4")
result = json.loads(out) if code == 0 else {}
check("unlink fourth order", result.get("status") == "computed" and result.get("value") == 0)

code, out, _ = run("--fixture", "borromean", "milnor", "--indices", "1,2,3")
check("milnor oracle", code == 0 and abs(json.loads(out)["mu"]) == 1)

code, out, _ = run("--fixture", "hopf_pos", "seifert")
result = json.loads(out) if code == 0 else {}
check("seifert circles", len(result.get("seifert", {}).get("circles", [])) == 2)

code, out, _ = run("chains-verify", "--complex", "torus", "--cases", "10")
check("chains verify", code == 0 and json.loads(out)["pass"] is True)

sys.exit(1 if failures else 0)
