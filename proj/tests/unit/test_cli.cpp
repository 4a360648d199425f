#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "hornlearn/formula_io.hpp"
#include "hornlearn/gd_basis.hpp"
#include "hornlearn/generator.hpp"
#include "hornlearn/horn.hpp"

using namespace hornlearn;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hornlearn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("hornlearn_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("gd prints the basis in file syntax") {
  TempDir dir;
  auto file = dir.write("b.horn", serialize_formula(bullet_example()));
  auto r = run({"gd", file});
  CHECK(r.code == 0);
  CHECK(r.out == "vars: a b c d\na -> a b c d\nc -> c d\n");
}

TEST_CASE("closure") {
  auto r = run({"closure", "gd-example", "a d"});
  CHECK(r.code == 0);
  CHECK(r.out == "{a b c d e}\n");
  CHECK(run({"closure", "gd-example", "-"}).out == "{}\n");
  CHECK(run({"closure", "gd-example", "z"}).code == 2);
}

TEST_CASE("equiv exit codes") {
  TempDir dir;
  auto a = dir.write("a.horn", "vars: a b c\na -> b\nb -> c\n");
  auto b = dir.write("b.horn", "vars: a b c\na -> b c\nb -> c\n");
  auto c = dir.write("c.horn", "vars: a b c\nb -> a\n");
  auto d = dir.write("d.horn", "vars: x y\n");
  CHECK(run({"equiv", a, a}).code == 0);
  auto same = run({"equiv", a, b});
  CHECK(same.code == 0);
  CHECK(same.out == "equivalent\n");
  auto diff = run({"equiv", a, c});
  CHECK(diff.code == 1);
  CHECK(diff.out.find("separating assignment") != std::string::npos);
  CHECK(run({"equiv", a, d}).code == 2);
}

TEST_CASE("learn prints the formula and a stats line") {
  auto r = run({"learn", "--algo", "clh", "--target", "gd-example"});
  REQUIRE(r.code == 0);
  auto stats_pos = r.out.rfind("seq=");
  REQUIRE(stats_pos != std::string::npos);
  const auto learned = parse_formula(r.out.substr(0, stats_pos));
  CHECK(same_implication_set(learned, gd_basis(gd_example())));
  unsigned seq = 0, cq = 0, smq = 0, emq = 0, eeq = 0;
  REQUIRE(std::sscanf(r.out.c_str() + stats_pos, "seq=%u cq=%u smq=%u emq=%u eeq=%u", &seq, &cq,
                      &smq, &emq, &eeq) == 5);
  CHECK(seq <= 37);
  CHECK(smq + emq + eeq == 0);

  for (const char* algo : {"afp", "clh-entail", "afp-closure"}) {
    for (const char* strategy : {"first", "random", "minimal"}) {
      auto q = run({"learn", "--algo", algo, "--target", "gd-example", "--strategy", strategy,
                    "--seed", "3", "--trace"});
      CHECK(q.code == 0);
      CHECK(q.out.rfind("seq=") != std::string::npos);
    }
  }
}

TEST_CASE("learn rejects bad input") {
  TempDir dir;
  auto bad = dir.write("bad.horn", "vars: a\na -> b\n");
  auto r = run({"learn", "--target", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"learn", "--target", dir.path("missing.horn")}).code == 2);
  CHECK(run({"learn", "--algo", "lrn", "--target", "gd-example"}).code == 2);
  CHECK(run({"learn"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bench writes the CSV schema in a stable order") {
  TempDir dir;
  const auto csv = dir.path("out.csv");
  auto r = run({"bench", "--algos", "clh,afp", "--n-range", "3:5", "--m-range", "1:4", "--trials",
                "2", "--seed", "9", "--out", csv, "--jobs", "4"});
  REQUIRE(r.code == 0);
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "algorithm,n,m,seed,seq,cq,smq,emq,eeq,wall_time_s");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line.substr(0, line.rfind(',')));
  CHECK(rows.size() == 2 * 3 * 4 * 2);

  auto serial = run({"bench", "--algos", "clh,afp", "--n-range", "3:5", "--m-range", "1:4",
                     "--trials", "2", "--seed", "9", "--jobs", "1"});
  std::istringstream s(serial.out);
  std::getline(s, line);
  std::vector<std::string> serial_rows;
  while (std::getline(s, line)) serial_rows.push_back(line.substr(0, line.rfind(',')));
  CHECK(rows == serial_rows);

  CHECK(run({"bench", "--n-range", "5:3"}).code == 2);
  CHECK(run({"bench", "--algos", "lrn"}).code == 2);
}

TEST_CASE("lowerbound") {
  auto r = run({"lowerbound", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ruled_out_when_determined=6") != std::string::npos);
  CHECK(r.out.find("invariant=held") != std::string::npos);
  CHECK(run({"lowerbound", "--n", "1"}).code == 2);
  CHECK(run({"lowerbound", "--n", "4", "--strategy", "top-first", "--summary-only"}).code == 0);
}
