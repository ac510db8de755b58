#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = "cli_stdout.tmp";
  const std::string cmd =
      std::string(RAJLAB_BIN) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  return r;
}

std::string data(const std::string& name) {
  return std::string(RAJ_DATA_DIR) + "/" + name;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    if (!line.empty() && line[0] == '"') {
      const auto close = line.find('"', 1);
      cells.push_back(line.substr(1, close - 1));
      line = close + 1 < line.size() ? line.substr(close + 2) : "";
    }
    std::stringstream cols(line);
    std::string cell;
    while (std::getline(cols, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_CASE("fourier: dirac at 1 has unit moduli") {
  const RunResult r = run("fourier --in " + data("dirac1.json") + " --K 5");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 12);  // header + 11
  CHECK(rows[0][0] == "k");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][3] == "1");
}

TEST_CASE("fourier: lebesgue is a delta at k = 0") {
  const RunResult r = run("fourier --in " + data("lebesgue.json") + " --K 5");
  REQUIRE(r.exit_code == 0);
  for (const auto& row : parse_csv(r.out)) {
    if (row[0] == "k") continue;
    CHECK(row[3] == (row[0] == "0" ? "1" : "0"));
  }
}

TEST_CASE("fourier: cantor table at K 999 satisfies the tripling identity") {
  const RunResult r = run("fourier --in " + data("cantor.json") + " --K 999");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2000);  // header + 1999 rows
  std::vector<double> abs_at(2 * 999 + 1);
  for (std::size_t i = 1; i < rows.size(); ++i)
    abs_at[static_cast<std::size_t>(std::stol(rows[i][0]) + 999)] =
        std::stod(rows[i][3]);
  for (long k = 1; k <= 333; ++k)
    CHECK(std::abs(abs_at[k + 999] - abs_at[3 * k + 999]) < 1e-10);
}

TEST_CASE("classify: cantor is continuous, quasi-rajchman, not rajchman") {
  const RunResult r =
      run("classify --in " + data("cantor.json") + " --K 2000 --eps 0.05");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  for (const auto& row : rows) {
    if (row[0] == "rajchman") CHECK(row[1] == "fails");
    if (row[0] == "quasi-rajchman") CHECK(row[1] == "holds");
    if (row[0] == "continuous-structural") CHECK(row[1] == "holds");
    if (row[0] == "continuity-agreement") CHECK(row[1] == "true");
  }
}

TEST_CASE("classify: symmetric diracs carry an odd witness") {
  const RunResult r =
      run("classify --in " + data("dirac_pm1.json") + " --K 400 --eps 0.05");
  REQUIRE(r.exit_code == 0);
  for (const auto& row : parse_csv(r.out)) {
    if (row[0] != "quasi-rajchman") continue;
    CHECK(row[1] == "holds");
    std::stringstream idx(row[5]);
    long n = 0;
    int seen = 0;
    while (idx >> n) {
      CHECK(n % 2 == 1);
      ++seen;
    }
    CHECK(seen >= 10);
  }
}

TEST_CASE("classify: json format is well formed") {
  const RunResult r = run("classify --in " + data("lebesgue.json") +
                          " --K 100 --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\"rajchman\"") != std::string::npos);
  CHECK(r.out.find("\"wiener-mean\"") != std::string::npos);
}

TEST_CASE("gram: lebesgue at K 3 prints the identity") {
  const RunResult r = run("gram --in " + data("lebesgue.json") + " --K 3");
  REQUIRE(r.exit_code == 0);
  for (const auto& row : parse_csv(r.out)) {
    if (row[0] == "j") continue;
    CHECK(row[2] == (row[0] == row[1] ? "1" : "0"));
    CHECK(row[3] == "0");
  }
}

TEST_CASE("facets: cantor fails all seven coherently") {
  const RunResult r = run("facets --in " + data("cantor.json") +
                          " --horizon 2000 --eps 0.05");
  REQUIRE(r.exit_code == 0);
  int fail_rows = 0;
  for (const auto& row : parse_csv(r.out)) {
    if (row[0] == "facet") continue;
    if (row[0] == "agreement") {
      CHECK(row[1] == "true");
    } else {
      CHECK(row[1] == "fails");
      ++fail_rows;
    }
  }
  CHECK(fail_rows == 7);
}

TEST_CASE("foguel scan flags the recursion ladder") {
  const RunResult r = run("foguel --horizon 60 --eps 0.5");
  REQUIRE(r.exit_code == 0);
  for (const auto& row : parse_csv(r.out)) {
    if (row[0] == "n") continue;
    const long n = std::stol(row[0]);
    const bool ladder = (n == 3 || n == 7 || n == 19 || n == 55);
    CHECK(row[1] == (ladder ? "1" : "0"));
    CHECK(row[2] == (ladder ? "0" : "1"));
  }
}

TEST_CASE("blocks report keeps coercive and stable sets apart") {
  const RunResult r = run("blocks --horizon 1000 --eps 1e-8 --M 10");
  REQUIRE(r.exit_code == 0);
  bool saw_common = false;
  for (const auto& row : parse_csv(r.out)) {
    if (row[0] == "common") {
      saw_common = true;
      CHECK(row[1] == "");  // empty intersection
    }
  }
  CHECK(saw_common);
}

TEST_CASE("exit codes: bad input is 2, resolution limits are 3") {
  CHECK(run("fourier --in no_such_file.json --K 5").exit_code == 2);

  std::ofstream bad("bad_measure.tmp.json");
  bad << "{\"atoms\": [[2.5, 1.0]]}";
  bad.close();
  CHECK(run("fourier --in bad_measure.tmp.json --K 5").exit_code == 2);

  std::ofstream sampled("sampled.tmp.json");
  sampled << "{\"density\": {\"kind\": \"samples\", \"values\": "
             "[1, 1, 1, 1, 1, 1, 1, 1]}}";
  sampled.close();
  CHECK(run("fourier --in sampled.tmp.json --K 2").exit_code == 0);
  CHECK(run("fourier --in sampled.tmp.json --K 100").exit_code == 3);

  CHECK(run("fourier --K 5").exit_code != 0);  // --in is required
  CHECK(run("no-such-subcommand").exit_code != 0);
}

TEST_CASE("identical runs produce byte-identical reports") {
  const std::string args =
      "fourier --in " + data("cantor.json") + " --K 500 --out ";
  CHECK(std::system((std::string(RAJLAB_BIN) + " " + args + "det_a.tmp").c_str()) == 0);
  CHECK(std::system((std::string(RAJLAB_BIN) + " " + args + "det_b.tmp").c_str()) == 0);
  const std::string a = slurp("det_a.tmp");
  const std::string b = slurp("det_b.tmp");
  CHECK(!a.empty());
  CHECK(a == b);
}

TEST_CASE("dump-canonical round trips through the parser") {
  const RunResult first = run("fourier --in " + data("cantor_q1.json") +
                              " --dump-canonical --K 1");
  REQUIRE(first.exit_code == 0);
  std::ofstream copy("canon.tmp.json");
  copy << first.out;
  copy.close();
  const RunResult second = run("fourier --in canon.tmp.json --dump-canonical --K 1");
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);

  const RunResult t1 = run("fourier --in " + data("cantor_q1.json") + " --K 64");
  const RunResult t2 = run("fourier --in canon.tmp.json --K 64");
  CHECK(t1.out == t2.out);
}
