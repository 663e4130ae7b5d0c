// Exercises the command-line tool end to end: exit codes 0 (pass),
// 1 (verification failure), 2 (parse/usage error), plus JSON determinism.
// argv[1] = path to the binary, argv[2] = directory with sample configs.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

int run(const std::string& cmd) {
  int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

void expect_code(const std::string& cmd, int want) {
  int got = run(cmd);
  if (got != want) {
    ++failures;
    std::cerr << "FAIL: '" << cmd << "' exited " << got << ", expected " << want << "\n";
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_exitcodes <binary> <config-dir>\n";
    return 2;
  }
  std::string bin = argv[1];
  std::string configs = argv[2];
  std::string tmp = "cli_exitcodes_tmp";

  // pass
  expect_code(bin + " cartan show --family sl --m 2 --n 1", 0);
  expect_code(bin + " cartan show --family b0n --n 2 --json", 0);
  expect_code(bin + " gram --family sl --m 2 --n 1 --weight 1,1", 0);
  expect_code(bin + " gram --family sl --m 2 --n 2 --weight 1,2,1 --verbose --json", 0);
  expect_code(bin + " check serre --family sl --m 2 --n 1 --cap 3", 0);
  expect_code(bin + " double --input " + configs + "/sl2_borel.toml", 0);
  expect_code(bin + " hadic --seed sl2_borel", 0);
  expect_code(bin + " oracle cartan --m 2 --n 1", 0);

  // parse / usage errors
  expect_code(bin + " nosuchcommand", 2);
  expect_code(bin + " cartan show --family nosuch", 2);
  expect_code(bin + " cartan show --family d21 --alpha -1", 2);
  expect_code(bin + " gram --family sl --m 2 --n 1 --weight 1,2,3", 2);
  expect_code(bin + " gram --family sl --m 2 --n 1 --weight a,b", 2);
  expect_code(bin + " double --input /nonexistent.toml", 2);
  expect_code(bin + " hadic --seed nosuchseed", 2);

  // verification failure: structure constants that are not a Lie bracket
  {
    std::ofstream bad(tmp + "_bad.toml");
    bad << "name = \"not_antisymmetric\"\n"
        << "dim = 2\n"
        << "parity = [0, 0]\n"
        << "bracket = [[1, 2, 2, 1]]\n"
        << "cobracket = []\n";
  }
  expect_code(bin + " double --input " + tmp + "_bad.toml", 1);

  // JSON reports are deterministic
  std::string c = bin + " gram --family sl --m 2 --n 1 --weight 2,1 --verbose --json --out ";
  expect_code(c + tmp + "_a.json", 0);
  expect_code(c + tmp + "_b.json", 0);
  std::string a = slurp(tmp + "_a.json");
  if (a.empty() || a != slurp(tmp + "_b.json")) {
    ++failures;
    std::cerr << "FAIL: JSON gram reports differ between runs\n";
  }

  std::remove((tmp + "_bad.toml").c_str());
  std::remove((tmp + "_a.json").c_str());
  std::remove((tmp + "_b.json").c_str());

  if (failures) {
    std::cerr << failures << " CLI check(s) failed\n";
    return 1;
  }
  std::puts("all CLI exit-code checks passed");
  return 0;
}
