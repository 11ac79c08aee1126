#include "doctest.h"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run qgate(const std::string& args) {
  const std::string cmd = std::string(QGATE_BIN) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "qgate_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("compile emits a graph document") {
  const auto r = qgate("compile \"a NAND b\"");
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["sites"].size() == 3);  // one gate node, two single-site inputs
  CHECK(doc["bonds"].size() == 2);
  CHECK(doc["meta"]["gate_nodes"] == "1");
  CHECK(doc["meta"]["slots"] == "2");
}

TEST_CASE("compile reports parse errors with a position") {
  const auto r = qgate("compile \"((\"");
  CHECK(r.status == 1);
  CHECK(r.out.find("position 2") != std::string::npos);
}

TEST_CASE("compiled graph round-trips through truth-table --graph") {
  const auto path = scratch("not.json");
  REQUIRE(qgate("compile \"!a\" --out " + path.string()).status == 0);
  const auto r = qgate("truth-table --graph " + path.string());
  REQUIRE(r.status == 0);
  CHECK(r.out == "qst,oracle\n1,\n");  // !0 = 1
}

TEST_CASE("De Morgan form reproduces the NAND table") {
  const auto nand = qgate("truth-table \"a NAND b\"");
  const auto demorgan = qgate("truth-table \"!a | !b\"");
  REQUIRE(nand.status == 0);
  REQUIRE(demorgan.status == 0);
  CHECK(nand.out == "a,b,qst,oracle\n0,0,1,1\n0,1,1,1\n1,0,1,1\n1,1,0,0\n");
  CHECK(demorgan.out == nand.out);
}

TEST_CASE("depth-3 tree with a single input vector") {
  const auto r = qgate("truth-table --tree 3 --bits 00011011 --engine both --preset huckel");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("0,0,0,1,1,0,1,1,1,1,") != std::string::npos);
}

TEST_CASE("truth-table json output") {
  const auto r = qgate("--format json truth-table \"!a\" --engine both");
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["qst"] == "1");
  CHECK(doc["rows"][0]["negf"] == "1");
}

TEST_CASE("transmit: interference dip, bare chain, runtime") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = qgate("transmit --molecule tree-c --emin -2 --emax 2 --count 1001");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  REQUIRE(r.status == 0);
  CHECK(secs < 5.0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "E,T");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const double e = std::stod(line.substr(0, line.find(',')));
    const double t = std::stod(line.substr(line.find(',') + 1));
    if (e == 0.0) CHECK(t < 1e-12);
    if (std::abs(std::abs(e) - 0.5) < 1e-12) CHECK(t > 1e-3);
  }
  CHECK(rows == 1001);

  const auto chain = qgate("transmit --molecule chain --emin -1.9 --emax 1.9 --count 39");
  REQUIRE(chain.status == 0);
  std::istringstream cin(chain.out);
  std::getline(cin, line);
  while (std::getline(cin, line)) CHECK(std::stod(line.substr(line.find(',') + 1)) > 1.0 - 1e-6);
}

TEST_CASE("CSV numbers carry at least 12 significant digits") {
  const auto r = qgate("transmit --molecule tree-a --energies 0.1");
  REQUIRE(r.status == 0);
  const auto row = r.out.substr(r.out.find('\n') + 1);
  CHECK(row.find("e-01,") != std::string::npos);
  CHECK(row.find('.') == 1);
  CHECK(row.find('e') >= 14);  // d.ddddddddddddd
}

TEST_CASE("sweeps are byte-identical across runs and thread counts") {
  const auto a = scratch("a.csv"), b = scratch("b.csv");
  REQUIRE(qgate("--threads 1 --out " + a.string() + " sweep --molecule tree-a --var alpha_N --from 0 --to -3 --count 61")
              .status == 0);
  REQUIRE(qgate("--threads 3 --out " + b.string() + " sweep --molecule tree-a --var alpha_N --from 0 --to -3 --count 61")
              .status == 0);
  const auto text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.rfind("alpha_N,E,T\n", 0) == 0);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::vector<double> t;
  while (std::getline(in, line)) t.push_back(std::stod(line.substr(line.rfind(',') + 1)));
  REQUIRE(t.size() == 61);
  CHECK(t.front() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(t.back() > 0.02);
  CHECK(t.back() < 0.08);
  for (std::size_t k = 1; k < t.size(); ++k) CHECK(t[k] <= t[k - 1] + 1e-12);
}

TEST_CASE("sweep on the second tree rises then falls") {
  const auto r = qgate("--format json sweep --molecule tree-b --var alpha_N --from 0 --to -3 --count 61");
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& pts = doc["points"];
  REQUIRE(pts.size() == 61);
  double peak = 0.0;
  for (const auto& p : pts) peak = std::max(peak, p["T"].get<double>());
  CHECK(pts[0]["T"].get<double>() < 1e-12);
  CHECK(peak > 0.5);
  CHECK(pts[60]["T"].get<double>() == doctest::Approx(0.04).epsilon(1.0));
}

TEST_CASE("usage errors exit with status 1") {
  CHECK(qgate("sweep --molecule tree-a --var alpha_N --count 0").status == 1);
  CHECK(qgate("sweep --molecule tree-a --var alpha_X --values 1").status == 1);
  CHECK(qgate("transmit --molecule nope").status == 1);
  CHECK(qgate("transmit --molecule tree-a --tree 2 --bits 0000").status == 1);
  CHECK(qgate("--format xml verify --list").status == 1);
  CHECK(qgate("frobnicate").status == 1);
  CHECK(qgate("transmit --molecule tree-a --gnuplot").status == 1);
}

TEST_CASE("computation errors exit with status 2") {
  // The closed-form engine has no propagating state outside the band.
  CHECK(qgate("transmit --tree 1 --bits 01 --engine qst --energies 3.0").status == 2);
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << R"({"sites":[{"id":0,"alpha":0}],"bonds":[{"i":0,"j":5,"beta":-1}],"root":0})";
  CHECK(qgate("transmit --graph " + bad.string()).status == 2);
}

TEST_CASE("gnuplot script accompanies the data") {
  const auto out = scratch("t.csv");
  std::filesystem::remove(out.string() + ".gp");
  REQUIRE(qgate("--out " + out.string() + " --gnuplot transmit --molecule tree-c --count 11").status == 0);
  const auto gp = slurp(out.string() + ".gp");
  CHECK(gp.find("plot 't.csv'") != std::string::npos);
}

TEST_CASE("config file values yield to flags") {
  const auto cfg = scratch("run.toml");
  std::ofstream(cfg) << "format = \"json\"\n[sweep]\nvar = \"alpha_N\"\nvalues = [0.0, -3.0]\nmolecule = \"tree-a\"\n";
  const auto from_file = qgate("--config " + cfg.string() + " sweep");
  REQUIRE(from_file.status == 0);
  CHECK(nlohmann::json::parse(from_file.out)["points"].size() == 2);
  const auto overridden = qgate("--config " + cfg.string() + " --format csv sweep --values 0");
  REQUIRE(overridden.status == 0);
  CHECK(overridden.out.rfind("alpha_N,E,T\n", 0) == 0);
  CHECK(std::count(overridden.out.begin(), overridden.out.end(), '\n') == 2);
}

TEST_CASE("verify --list and a corrupted preset") {
  const auto list = qgate("verify --list");
  REQUIRE(list.status == 0);
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 9);

  const auto preset = scratch("flipped.json");
  std::ofstream(preset) << R"({"base":"huckel","name":"flipped","beta_NC":1.08})";
  const auto r = qgate("verify --preset " + preset.string());
  CHECK(r.status == 2);
  CHECK(r.out.find("coupling-sign validation") != std::string::npos);
  CHECK(r.out.find("beta_NC") != std::string::npos);
}

TEST_CASE("verify runs selected criteria") {
  const auto r = qgate("verify --criterion 1,7");
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS [1]") != std::string::npos);
  CHECK(r.out.find("PASS [7]") != std::string::npos);
}
