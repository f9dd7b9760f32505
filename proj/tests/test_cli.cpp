#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "bqlong/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bqlong::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Scratch file removed at scope exit.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& contents) {
    path = std::filesystem::temp_directory_path() /
           ("bqlong_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt");
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

const std::string d1 = "U1+ U2+ O1+ O2+";
const std::string d2 = "O2+ O1+ U2+ U1+";

}  // namespace

TEST_CASE("cli: verify") {
  const Result ok = run({"verify", "--wada-sn", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "switch: ok\nbirack: ok\nbiquandle: ok\n");

  const Result bad = run({"verify", "--alexander", "6,2,1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("lambda not invertible mod 6 (gcd 2)") != std::string::npos);

  const Result level = run({"verify", "--wada-zn", "5", "--level", "switch"});
  CHECK(level.code == 0);
  CHECK(level.out == "switch: ok\nbirack: not requested\nbiquandle: not requested\n");
}

TEST_CASE("cli: verify localizes a mutated table cell") {
  bqlong::OperationTables t = bqlong::wada_tables(bqlong::symmetric_group(3));
  std::swap(t.up[1 * 6 + 0], t.up[2 * 6 + 0]);
  TempFile file(bqlong::write_table(t));
  const Result r = run({"verify", "--table", file.path.string()});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("switch: FAIL Yang-Baxter relation fails at (", 0) == 0);
  CHECK(r.out.find("birack: skipped") != std::string::npos);

  const Result json = run({"verify", "--table", file.path.string(), "--format", "json"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["switch"]["status"] == "FAIL");
  CHECK(j["switch"]["witness"].size() == 3);
  CHECK(j["biquandle"]["status"] == "skipped");
}

TEST_CASE("cli: verify JSON") {
  const auto j = nlohmann::json::parse(run({"verify", "--wada-sn", "3", "--format", "json"}).out);
  CHECK(j["source"] == "Wada S3");
  CHECK(j["n"] == 6);
  for (const char* level : {"switch", "birack", "biquandle"}) CHECK(j[level]["status"] == "ok");
}

TEST_CASE("cli: table file errors exit 2") {
  TempFile file("biquandle v1\nn=2\nup:\n0 1\n0 9\n");
  const Result r = run({"verify", "--table", file.path.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 5") != std::string::npos);
  CHECK(run({"verify", "--table", "/nonexistent/table.txt"}).code == 2);
}

TEST_CASE("cli: source selection") {
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--wada-zn", "3", "--wada-sn", "3"}).code == 2);
  CHECK(run({"verify", "--wada-sn", "9"}).code == 2);
  CHECK(run({"verify", "--alexander", "5,2"}).code == 2);
  CHECK(run({"verify", "--alexander", "5,2,3,4"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  // Global options may follow the subcommand.
  CHECK(run({"--wada-zn", "3", "verify"}).code == 0);
}

TEST_CASE("cli: colorings") {
  CHECK(run({"colorings", d1, "--wada-sn", "5"}).out == "colorings: 240\n");
  CHECK(run({"colorings", d1, "--wada-sn", "5", "--initial", "()"}).out ==
        "initial: ()\ncolorings: 1\n");
  CHECK(run({"colorings", "", "--alexander", "5,1,1"}).out == "colorings: 5\n");

  const Result listed = run({"colorings", "U1+ O1+", "--wada-zn", "3", "--list"});
  CHECK(listed.out == "colorings: 3\n[0, 0, 0]\n[1, 2, 1]\n[2, 1, 2]\n");

  CHECK(run({"colorings", "U1+ O1-", "--wada-zn", "3"}).code == 2);
  CHECK(run({"colorings", d1, "--wada-sn", "5", "--initial", "(1,6)"}).code == 2);
  // Axiom failure of the chosen biquandle is a semantic failure.
  TempFile constant("biquandle v1\nn=2\nup:\n0 0\n0 0\ndown:\n0 0\n0 0\n");
  CHECK(run({"colorings", d1, "--table", constant.path.string()}).code == 1);
}

TEST_CASE("cli: colorings JSON is canonical") {
  const std::vector<std::string> args{"colorings", "U1+ O1+", "--wada-zn", "3", "--format", "json"};
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["colorings"] == 3);
  CHECK(j["segment_colors"] == nlohmann::json::parse("[[0,0,0],[1,2,1],[2,1,2]]"));
}

TEST_CASE("cli: longitude") {
  const Result sum1 =
      run({"longitude", d1, "--wada-sn", "5", "--initial", "(1,2,3,4)", "--apply", "()"});
  CHECK(sum1.code == 0);
  CHECK(sum1.out == "sum: {(), (1,2,4,3,5), (1,3,2,5,4), (1,4,5,2,3), (1,5,3,4,2)}\n");
  const Result sum2 =
      run({"longitude", d2, "--wada-sn", "5", "--initial", "(1,2,3,4)", "--apply", "()"});
  CHECK(sum2.out == "sum: {(), (1,2,5,4,3), (1,3,4,5,2), (1,4,2,3,5), (1,5,3,2,4)}\n");

  CHECK(run({"longitude", "", "--wada-zn", "4", "--initial", "0", "--apply", "0"}).out ==
        "sum: {0}\n");

  const Result family = run({"longitude", d1, "--wada-sn", "5", "--initial", "()"});
  CHECK(family.out == "initial: ()\nfamily: 1\nmap: x -> x*()\n");

  const Result generic = run({"longitude", "", "--alexander", "3,1,2", "--initial", "1"});
  CHECK(generic.out == "initial: 1\nfamily: 1\nmap: [0, 1, 2]\n");

  CHECK(run({"longitude", d1, "--wada-sn", "5"}).code == 2);
  CHECK(run({"longitude", d1, "--wada-sn", "5", "--initial", "bogus"}).code == 2);
}

TEST_CASE("cli: compare") {
  const Result diff =
      run({"compare", d1, d2, "--wada-sn", "5", "--initial", "(1,2,3,4)", "--apply", "()"});
  CHECK(diff.code == 1);
  CHECK(diff.out.rfind("DIFFERENT\nwitness: sum entry 1:", 0) == 0);

  const Result same = run({"compare", d1, d1, "--wada-sn", "5", "--initial", "(1,2,3,4)"});
  CHECK(same.code == 0);
  CHECK(same.out == "EQUAL\n");

  const Result r2 = run({"compare", d1, "O5+ O6- U1+ U2+ U6- U5+ O1+ O2+", "--alexander", "5,2,3",
                         "--initial", "2"});
  CHECK(r2.code == 0);

  const Result json = run({"compare", d1, d2, "--wada-sn", "5", "--initial", "(1,2,3,4)",
                           "--format", "json"});
  CHECK(nlohmann::json::parse(json.out)["result"] == "DIFFERENT");
  CHECK(run({"compare", d1, "--wada-sn", "3", "--initial", "()"}).code == 2);
}

TEST_CASE("cli: moves") {
  const Result pass =
      run({"moves", d1, "--alexander", "5,2,3", "--trials", "100", "--seed", "7"});
  CHECK(pass.code == 0);
  CHECK(pass.out == "checks: 108\nfailures: 0\nresult: PASS\n");
  CHECK_FALSE(pass.err.empty());  // progress only on stderr

  const Result swap = run({"moves", d1, "--alexander", "3,1,1", "--trials", "20", "--seed", "1"});
  CHECK(swap.code == 0);

  const Result mutant = run({"moves", d1, "--wada-sn", "3", "--trials", "30", "--seed", "7",
                             "--flip-over-positive-token"});
  CHECK(mutant.code == 1);
  CHECK(mutant.out.find("result: FAIL") != std::string::npos);

  CHECK(run({"moves", d1, "--wada-sn", "3", "--seed", "7"}).code == 2);

  const std::vector<std::string> args{"moves", d1, "--wada-zn", "5", "--trials", "25",
                                      "--seed", "11", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("cli: trefoil example") {
  const Result r = run({"paper-example"});
  CHECK(r.code == 0);
  CHECK(r.out.find("D1 colorings: 240\n") != std::string::npos);
  CHECK(r.out.find("D2 colorings: 240\n") != std::string::npos);
  CHECK(r.out.find("noninvertible: YES\n") != std::string::npos);
  CHECK(r.out.find("expected-values: match\n") != std::string::npos);

  const Result other = run({"paper-example", "--alexander", "5,2,3"});
  CHECK(other.code == 0);
  CHECK(other.out.find("expected-values: skipped (non-paper biquandle)") != std::string::npos);

  const Result moved = run({"paper-example", "--initial", "(1,2,3)"});
  CHECK(moved.code == 0);
  CHECK(moved.out.find("expected-values: skipped (overridden initial or apply)") !=
        std::string::npos);

  const Result json = run({"paper-example", "--format", "json"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["d1_colorings"] == 240);
  CHECK(j["d1_fixed_colorings"] == 5);
  CHECK(j["noninvertible"] == true);
  CHECK(j["expected_values"] == "match");
  CHECK(json.out == run({"paper-example", "--format", "json"}).out);
}

TEST_CASE("cli: help") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("paper-example") != std::string::npos);
}
