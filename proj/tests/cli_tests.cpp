// Integration checks for the command-line tool. The binary under test is
// argv[1]; everything runs in a scratch directory of the current build tree.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "[PASS] " << what << "\n";
  } else {
    std::cout << "[FAIL] " << what << "\n";
    ++failures;
  }
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  // determinism of generation
  run(cli + " gen random --objects 5 --seed 7 --out cli_r1.json");
  run(cli + " gen random --objects 5 --seed 7 --out cli_r2.json");
  run(cli + " gen random --objects 5 --seed 8 --out cli_r3.json");
  check(!slurp("cli_r1.json").empty(), "gen random writes a file");
  check(slurp("cli_r1.json") == slurp("cli_r2.json"), "gen random is byte-identical per seed");
  check(slurp("cli_r1.json") != slurp("cli_r3.json"), "different seeds give different instances");
  check(run(cli + " validate cli_r1.json").code == 0, "generated random instance validates");

  // the counterexample fixture
  check(run(cli + " gen counterexample --tnorm godel --a 0.5 --b 0.7 --out cli_ce.json").code == 0,
        "gen counterexample succeeds");
  check(run(cli + " validate cli_ce.json").code == 0, "counterexample fixture validates");

  const RunResult cls = run(cli + " classify cli_ce.json --weight phi --json --seed 3");
  check(cls.code == 0, "classify runs");
  check(cls.out.find("\"cauchy\": true") != std::string::npos, "phi is Cauchy");
  check(cls.out.find("\"forward_cauchy\": false") != std::string::npos, "phi is not forward Cauchy");
  check(cls.out.find("certified_flat") != std::string::npos, "phi is certified flat");
  const RunResult cls2 = run(cli + " classify cli_ce.json --weight phi --json --seed 3");
  check(cls.out == cls2.out, "classify output is deterministic for a fixed seed");

  const RunResult seqr = run(cli + " classify cli_ce.json --seq sx --json");
  check(seqr.code == 0 && seqr.out.find("\"forward_cauchy\": true") != std::string::npos,
        "constant sequence classifies as forward Cauchy");

  check(run(cli + " classify cli_ce.json --weight nope").code == 1, "unknown weight exits 1");

  const RunResult comp = run(cli + " completeness cli_ce.json --mode cauchy --json");
  check(comp.code == 0 && comp.out.find("\"complete\": \"no\"") != std::string::npos,
        "counterexample is not Cauchy complete");
  check(comp.out.find("witness") != std::string::npos, "refutation carries a witness");
  const RunResult compy = run(cli + " completeness cli_ce.json --mode yoneda --json");
  check(compy.out.find("\"complete\": \"yes\"") != std::string::npos,
        "counterexample is Yoneda complete");

  // min fixture through gen + completeness
  run(cli + " gen min --tnorm godel --values 0.2,0.6 --out cli_min.json");
  const RunResult compm = run(cli + " completeness cli_min.json --mode yoneda --json");
  check(compm.out.find("\"complete\": \"yes\"") != std::string::npos, "min category is Yoneda complete");

  // invalid and malformed files
  {
    std::ofstream bad("cli_bad.json");
    bad << R"({"tnorm":{"kind":"godel"},"objects":["x","y"],"hom":[[0.4,0.35],[0.1,0.3]]})";
  }
  const RunResult vbad = run(cli + " validate cli_bad.json --json");
  check(vbad.code == 1, "axiom violation exits 1");
  check(vbad.out.find("(i)") != std::string::npos, "violated condition is named");
  {
    std::ofstream mal("cli_malformed.json");
    mal << "{ not json at all";
  }
  check(run(cli + " validate cli_malformed.json").code == 2, "malformed JSON exits 2");

  // residuum-grid fixture classifies as expected
  run(cli + " gen residuum-grid --tnorm godel --a 0.5 --resolution 8 --out cli_grid.json");
  const RunResult gridc = run(cli + " classify cli_grid.json --weight phi --json");
  check(gridc.code == 0 && gridc.out.find("\"forward_cauchy\": false") != std::string::npos,
        "grid weight is not forward Cauchy");

  // a refuted weight carries a machine-checkable evidence payload
  {
    std::ofstream single("cli_single.json");
    single << R"({"tnorm":{"kind":"godel"},"objects":["x"],"hom":[[1.0]],)"
           << R"("weights":[{"name":"phi","type":1.0,"values":[0.5]}]})";
  }
  const RunResult ref = run(cli + " classify cli_single.json --weight phi --json");
  check(ref.code == 0 && ref.out.find("\"cauchy\": false") != std::string::npos,
        "half-level singleton weight is not Cauchy");
  check(ref.out.find("refuted_flat") != std::string::npos, "half-level singleton weight is refuted flat");
  check(ref.out.find("\"b\":") != std::string::npos && ref.out.find("\"lhs\":") != std::string::npos &&
            ref.out.find("\"rhs\":") != std::string::npos,
        "refutation payload names the failure point and both sides");
  const RunResult ref2 = run(cli + " classify cli_single.json --weight phi --json");
  check(ref.out == ref2.out, "refutation evidence reproduces byte-identically");

  for (const char* f : {"cli_r1.json", "cli_r2.json", "cli_r3.json", "cli_ce.json", "cli_min.json",
                        "cli_bad.json", "cli_malformed.json", "cli_grid.json", "cli_single.json"})
    std::remove(f);

  if (failures) {
    std::cout << failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
