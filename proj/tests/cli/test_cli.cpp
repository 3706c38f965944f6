#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(EXPBOUND_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double json_number(const std::string& text, const std::string& key) {
  const auto at = text.find("\"" + key + "\":");
  REQUIRE(at != std::string::npos);
  return std::stod(text.substr(at + key.size() + 3));
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("--format xml uhrig --n 2").code == 2);
  CHECK(run("uhrig").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("uhrig") {
  const Run r = run("uhrig --n 2 --T 1");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"times\":[0,0.25,0.75,1],\"T\":1}\n");
  const Run csv = run("--format csv uhrig --n 1 --T 2");
  CHECK(csv.out == "j,t\n0,0\n1,1\n2,2\n");
  CHECK(run("uhrig --n 0").code == 2);
  CHECK(run("uhrig --n 2 --T -1").code == 2);
}

TEST_CASE("verify-multiplicity") {
  const Run r = run("verify-multiplicity --n 4");
  CHECK(r.code == 0);
  CHECK(json_number(r.out, "order") == 5);
  CHECK(run("verify-multiplicity --n 10 --tol 1e-12").code == 0);
  CHECK(run("verify-multiplicity --n 3").code == 2);
  const Run csv = run("--format csv verify-multiplicity --n 2");
  const auto rows = csv_rows(csv.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"m", "ratio", "vanishes"});
  CHECK(rows[4][2] == "0");
  CHECK(rows[3][2] == "1");
}

TEST_CASE("bounds-scan") {
  const Run taylor = run("--out scan25.csv bounds-scan --family remark25 --a-grid 1/9,1/18,1/36");
  CHECK(taylor.code == 0);
  CHECK(taylor.out.empty());
  const auto rows = csv_rows(read_file("scan25.csv"));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"a", "value", "envelope", "passes"});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][3] == "1");
  const std::string fit = read_file("scan25.csv.fit.json");
  CHECK(json_number(fit, "r2") >= 0.99);
  CHECK(json_number(fit, "c_est") > 0.0);
  CHECK(json_number(fit, "n_points") == 3);

  const double edge = 1.0 / (2.0 * std::exp(2.0));
  char args[256];
  std::snprintf(args, sizeof args, "bounds-scan --family remark26 --a-min %.17g --a-max %.17g --count 5 --fit f26.json",
                edge / 20, edge * 0.999);
  const Run stirling = run(args);
  CHECK(stirling.code == 0);
  CHECK(csv_rows(stirling.out).size() == 6);
  CHECK(json_number(read_file("f26.json"), "n_points") == 5);

  const Run json = run("--format json bounds-scan --family taylor --a-grid 1/9,1/18,1/36");
  CHECK(json.out.find("\"fit\":{\"c_est\"") != std::string::npos);
  CHECK(run("bounds-scan --family remark25").code == 2);
  CHECK(run("bounds-scan --family other --a-grid 0.1").code == 2);
}

TEST_CASE("chi") {
  write_file("free.json", R"({"times":[0,1],"T":1})");
  write_file("flat.json", R"({"kind":"hard-cutoff-flat","amplitude":1,"cutoff":1})");
  write_file("silent.json", R"({"kind":"hard-cutoff-flat","amplitude":0,"cutoff":1})");
  write_file("broken.json", R"({"times":[0,)");
  const Run r = run("chi --sequence free.json --density flat.json");
  CHECK(r.code == 0);
  CHECK(std::abs(json_number(r.out, "chi") - (2.0 - 2.0 * std::sin(1.0))) <= 1e-10);
  CHECK(json_number(run("chi --sequence free.json --density silent.json").out, "chi") == 0.0);
  CHECK(run("chi --sequence broken.json --density flat.json").code == 2);
  CHECK(run("chi --sequence missing.json --density flat.json").code == 2);

  write_file("u2.json", run("uhrig --n 2 --T 1").out);
  write_file("u4.json", run("uhrig --n 4 --T 1").out);
  const double chi2 = json_number(run("chi --sequence u2.json --density flat.json").out, "chi");
  const double chi4 = json_number(run("chi --sequence u4.json --density flat.json").out, "chi");
  CHECK(chi4 < chi2);

  // an unreachable tolerance exhausts the subdivision budget
  CHECK(run("--tol 1e-300 chi --sequence free.json --density flat.json").code == 3);
}

TEST_CASE("l1-scan") {
  const Run r = run("l1-scan --b-grid 1,1/2,1/4");
  CHECK(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"b", "a", "l1", "implied_c"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][2]) > 0.0);
    CHECK(std::isfinite(std::stod(rows[i][3])));
  }
  CHECK(run("l1-scan --b-grid 1").out == run("l1-scan --b-grid 1").out);
  CHECK(run("l1-scan --b-grid 4").code == 2);
  CHECK(run("l1-scan --b-grid 1 --policy odd").code == 2);
}

TEST_CASE("filter") {
  const Run r = run("filter --uhrig 3 --omega-min 0 --omega-max 5 --points 11");
  CHECK(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == std::vector<std::string>{"omega", "abs"});
  CHECK(std::stod(rows[1][1]) == 0.0);
  write_file("free.json", R"({"times":[0,1],"T":1})");
  const auto free_rows = csv_rows(run("filter --sequence free.json --omega-min 1 --omega-max 2 --points 2").out);
  CHECK(std::stod(free_rows[1][1]) == doctest::Approx(2.0 * std::sin(0.5)));
  CHECK(run("filter --omega-max 1").code == 2);
}

TEST_CASE("sum and scan") {
  CHECK(run("sum --family uhrig --n 2").out ==
        "{\"exponents\":[0,0.25,0.75,1],\"coefficients_re\":[1,-2,2,-1],\"coefficients_im\":[0,0,0,0]}\n");
  write_file("g.json", run("sum --family gap-scaled --b 1").out);
  const auto rows = csv_rows(run("scan --sum g.json --from 0 --to 1 --points 3").out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"t", "re", "im", "abs"});
  CHECK(std::stod(rows[1][3]) == 0.0);
}

TEST_CASE("every subcommand is deterministic") {
  write_file("u4.json", run("uhrig --n 4 --T 1").out);
  write_file("flat.json", R"({"kind":"hard-cutoff-flat","amplitude":1,"cutoff":1})");
  for (const char* args : {"uhrig --n 7 --T 3", "verify-multiplicity --n 6", "bounds-scan --family remark25 --a-grid 1/9,1/27,1/81",
                           "l1-scan --b-grid 1,1/8", "filter --uhrig 4 --omega-min 0.001 --omega-max 1 --points 50 --log --digits 40",
                           "chi --sequence u4.json --density flat.json"}) {
    const Run first = run(args);
    const Run second = run(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}
