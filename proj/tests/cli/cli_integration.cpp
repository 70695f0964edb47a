// End-to-end checks of the command-line tool. argv[1] is the binary under
// test, argv[2] a scratch directory this runner may fill with files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int failures = 0;
std::string scenario;

void expect(bool cond, const std::string& msg) {
  if (!cond) {
    ++failures;
    std::printf("FAIL  %s: %s\n", scenario.c_str(), msg.c_str());
  }
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);) lines.push_back(line);
  return lines;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string g_cli;
fs::path g_scratch;

RunResult run(const std::string& args) {
  static int counter = 0;
  fs::path out = g_scratch / ("stdout." + std::to_string(counter));
  fs::path err = g_scratch / ("stderr." + std::to_string(counter));
  ++counter;
  std::string cmd =
      "\"" + g_cli + "\" " + args + " > \"" + out.string() + "\" 2> \"" + err.string() + "\"";
  int status = std::system(cmd.c_str());
  RunResult r;
  if (status >= 0 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::printf("usage: cli_integration <cli-binary> <scratch-dir>\n");
    return 2;
  }
  g_cli = argv[1];
  g_scratch = argv[2];
  fs::create_directories(g_scratch);

  scenario = "bell under the computational product basis";
  {
    RunResult r = run("basis-entropy --input bell --basis product:compxcomp");
    expect(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
    expect(r.out == "1.000000\n", "stdout was '" + r.out + "'");
  }

  scenario = "entropies of named states";
  {
    RunResult r = run("entropy --input maximally-mixed:4");
    expect(r.exit_code == 0 && r.out == "2.000000\n", "I/4 should cost two bits: '" + r.out + "'");
    r = run("entropy --input bell");
    expect(r.exit_code == 0 && r.out == "0.000000\n", "pure state: '" + r.out + "'");
    r = run("entropy --input bloch:0.433012701892219,0,0.25");
    expect(r.exit_code == 0 && r.out == "0.000000\n", "pure point: '" + r.out + "'");
  }

  scenario = "extremal search is deterministic and writes the frame";
  {
    fs::path f1 = g_scratch / "frame1.mat", f2 = g_scratch / "frame2.mat";
    RunResult a = run("extremal --input werner:0.7 --mode min --class samelocal --starts 8 --out \"" +
                      f1.string() + "\"");
    RunResult b = run("extremal --input werner:0.7 --mode min --class samelocal --starts 8 --out \"" +
                      f2.string() + "\"");
    expect(a.exit_code == 0 && b.exit_code == 0, "both runs should succeed");
    expect(a.out == b.out, "values differ between identical runs");
    std::string t1 = slurp(f1), t2 = slurp(f2);
    expect(!t1.empty() && t1 == t2, "frame files differ between identical runs");
    expect(contains(t1, "\"dim\": 4"), "frame file should hold a 4x4 matrix");
  }

  scenario = "depolarized-family sweep shape and determinism";
  {
    RunResult a = run("werner-sweep --steps 4 --starts 6");
    RunResult b = run("werner-sweep --steps 4 --starts 6");
    expect(a.exit_code == 0, "exit code " + std::to_string(a.exit_code));
    expect(a.out == b.out, "sweep should be reproducible");
    auto lines = lines_of(a.out);
    expect(lines.size() == 6, "expected header plus 5 rows, got " + std::to_string(lines.size()));
    expect(!lines.empty() && lines[0] == "z,discord,min_basis_entropy", "header line");
  }

  scenario = "one-sided example, measuring the classical side";
  {
    RunResult r = run("discord --input c10-example --side A");
    expect(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
    auto lines = lines_of(r.out);
    expect(!lines.empty() && lines[0] == "delta 0.000000", "no discord expected: '" +
           (lines.empty() ? std::string() : lines[0]) + "'");
    expect(contains(r.out, "axis "), "axis line missing");
  }

  scenario = "period-finding output";
  {
    RunResult r = run("shor");
    expect(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
    expect(r.out == "r 4\nstep,basis_entropy\n2,8\n3,8\n4,2\n", "stdout was '" + r.out + "'");
  }

  scenario = "single search iteration";
  {
    RunResult r = run("grover --n 4 --k 3");
    expect(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
    auto lines = lines_of(r.out);
    expect(lines.size() == 2 && lines[0].rfind("p_success 0.9", 0) == 0,
           "success probability line: '" + r.out + "'");
    expect(lines.size() == 2 && lines[1].rfind("basis_entropy 0.", 0) == 0,
           "entropy line: '" + r.out + "'");
    RunResult both = run("grover --n 4 --k 1 --full-trace");
    expect(both.exit_code != 0, "--k plus --full-trace must be rejected");
    RunResult neither = run("grover --n 4");
    expect(neither.exit_code != 0, "one of --k / --full-trace is required");
  }

  scenario = "full search trace";
  {
    RunResult r = run("grover --n 4 --full-trace");
    expect(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
    auto lines = lines_of(r.out);
    expect(lines.size() == 6, "header plus k = 0..4, got " + std::to_string(lines.size()));
    expect(!lines.empty() && lines[0] == "k,p_success,basis_entropy", "header line");
    expect(lines.size() > 1 && lines[1] == "0,0.0625,4", "first row: '" + lines[1] + "'");
  }

  scenario = "walk-through notice path";
  {
    RunResult r = run("decohere --paper-exact --bases \"axis:0,0,1;axis:0,1,0\"");
    expect(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
    expect(contains(r.err, "rejected") && contains(r.err, "NotPositiveSemidefinite"),
           "stderr should explain the rejection: '" + r.err + "'");
    expect(contains(r.err, "sqrt(3)/4"), "stderr should name the corrected state");
    auto lines = lines_of(r.out);
    expect(lines.size() == 3, "two steps plus classification");
    expect(lines.size() == 3 && lines[0] == "step 1 basis_entropy 0.811278", "first step: '" +
           (lines.empty() ? std::string() : lines[0]) + "'");
    expect(lines.size() == 3 && lines[1] == "step 2 basis_entropy 0.188722", "second step");
    expect(lines.size() == 3 && lines[2] == "classification MaximallyMixed", "classification");
  }

  scenario = "invalid state file is rejected before any output is written";
  {
    fs::path bad = g_scratch / "bad_state.json";
    {
      std::ofstream f(bad);
      f << "{\"dim\": 2, \"re\": [[0.75, 0.8660254037844386], [0.8660254037844386, 0.25]], "
           "\"im\": [[0, 0], [0, 0]]}\n";
    }
    RunResult r = run("entropy --input \"" + bad.string() + "\"");
    expect(r.exit_code == 1, "exit code " + std::to_string(r.exit_code));
    expect(contains(r.err, "state rejected (NotPositiveSemidefinite)"),
           "stderr was '" + r.err + "'");

    fs::path never = g_scratch / "never.mat";
    RunResult e = run("extremal --input \"" + bad.string() +
                      "\" --mode min --class general --out \"" + never.string() + "\"");
    expect(e.exit_code == 1, "exit code " + std::to_string(e.exit_code));
    expect(!fs::exists(never), "no output file may appear for a rejected input");
  }

  scenario = "invalid specs fail cleanly";
  {
    RunResult r = run("basis-entropy --input bell --basis bogus");
    expect(r.exit_code == 1, "exit code " + std::to_string(r.exit_code));
    expect(r.err.rfind("error:", 0) == 0, "stderr was '" + r.err + "'");
    r = run("entropy --input werner:1.5");
    expect(r.exit_code == 1, "out-of-range family parameter must fail");
    r = run("classify --input maximally-mixed:3");
    expect(r.exit_code == 0 && r.out == "MaximallyMixed\n", "classify output: '" + r.out + "'");
  }

  scenario = "asymmetric example in the computational product basis";
  {
    RunResult r = run("basis-entropy --input c10-example --basis product:compxcomp");
    expect(r.exit_code == 0 && r.out == "0.500000\n", "stdout was '" + r.out + "'");
  }

  if (failures == 0) {
    std::printf("all command-line scenarios hold\n");
    return 0;
  }
  std::printf("%d command-line check(s) failed\n", failures);
  return 1;
}
