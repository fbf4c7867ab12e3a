#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bidisk/cli.hpp"

using namespace bidisk;
namespace fs = std::filesystem;

namespace {

const std::string corpus_dir = BIDISK_CORPUS_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return corpus_dir + "/" + name + ".json"; }

std::string temp_file(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / ("bidisk_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("hash") {
  CHECK(cli::fnv1a64("") == "cbf29ce484222325");
  CHECK(cli::fnv1a64("a") == "af63dc4c8601ec8c");
}

TEST_CASE("report fields") {
  Run r = run({"stable", "--input", corpus("g2_two_z_w")});
  CHECK(r.code == cli::kPositive);
  json j = r.report();
  for (const char* key : {"command", "input", "input_digest", "verdicts", "tolerances", "runtime_ms", "version"})
    CHECK(j.contains(key));
  CHECK(j["command"] == "stable");
  CHECK(j["verdicts"]["verdict"] == "SCATTERING_STABLE");
  CHECK(j["tolerances"]["seed"] == 12345);
}

TEST_CASE("extremality exit codes") {
  Run g2 = run({"extreme", "--input", corpus("g2_two_z_w")});
  CHECK(g2.code == cli::kPositive);
  CHECK(g2.report()["verdicts"]["verdict"] == "EXTREME");
  Run g1 = run({"extreme", "--input", corpus("g1_three_z_w")});
  CHECK(g1.code == cli::kNegative);
  CHECK(g1.report()["verdicts"].contains("witness_v"));
  Run s7 = run({"extreme", "--input", corpus("sec7_p"), "--exact"});
  CHECK(s7.code == cli::kNegative);
  CHECK(s7.report()["verdicts"].contains("decomposition"));
}

TEST_CASE("saturation count") {
  for (bool exact : {false, true}) {
    std::vector<std::string> args = {"saturated", "--input", corpus("sec7_p")};
    if (exact) args.push_back("--exact");
    Run r = run(args);
    CHECK(r.code == cli::kNegative);
    json v = r.report()["verdicts"];
    CHECK(v["count"] == 2);
    CHECK(v["required"] == 4);
    CHECK(v["kp_dimension"] == 1);
  }
}

TEST_CASE("reflection of a constant") {
  Run r = run({"reflect", "--input", corpus("const")});
  CHECK(r.code == cli::kPositive);
  json in = r.report()["input"];
  json out = r.report()["verdicts"]["reflection"];
  CHECK(out["bidegree"] == in["bidegree"]);
  CHECK(out["coeffs"][0][0][0] == 1.0);
  CHECK(out["coeffs"][0][0][1] == 0.0);
  Run e = run({"reflect", "--exact", "--input", corpus("sec7_q_minus")});
  CHECK(e.report()["verdicts"]["reflection"]["coeffs"][1][1][0] == "-11/4");
}

TEST_CASE("input errors") {
  Run bad = run({"stable", "--input", temp_file("bad.json", "{\"bidegree\": [1,1],\n \"coeffs\": [[1, 2],")});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"stable", "--input", "/nonexistent/p.json"}).code == cli::kInputError);
  CHECK(run({"stable"}).code == cli::kInputError);
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"frobnicate", "--input", corpus("const")}).code == cli::kInputError);
  CHECK(run({"stable", "--input", corpus("const"), "--tol", "-1"}).code == cli::kInputError);
  CHECK(run({"classify11", "--input", corpus("sec7_p")}).code == cli::kInputError);
  Run shape = run({"stable", "--input", temp_file("shape.json", "{\"bidegree\": [1,1], \"coeffs\": [[1, 2]]}")});
  CHECK(shape.code == cli::kInputError);
  CHECK(shape.report().contains("verdicts"));
}

TEST_CASE("determinism and output file") {
  std::string path = (fs::temp_directory_path() / "bidisk_cli_report.json").string();
  Run a = run({"face", "--input", corpus("sec7_p"), "--seed", "7", "--output", path});
  Run b = run({"face", "--input", corpus("sec7_p"), "--seed", "7"});
  json ja = a.report(), jb = b.report();
  ja.erase("runtime_ms");
  jb.erase("runtime_ms");
  CHECK(ja == jb);
  CHECK(a.code == b.code);
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str() == a.out);
}

TEST_CASE("corpus exit codes match expectations") {
  for (const auto& e : fs::directory_iterator(corpus_dir)) {
    json doc = json::parse(std::ifstream(e.path()));
    if (!doc.contains("expect")) continue;
    CAPTURE(e.path().string());
    const std::string file = e.path().string();
    Run x = run({"extreme", "--input", file});
    int expected = doc["expect"]["extreme"] == "EXTREME" ? cli::kPositive : cli::kNegative;
    CHECK(x.code == expected);
    Run s = run({"saturated", "--input", file, "--exact"});
    CHECK(s.code == (doc["expect"]["saturated"].get<bool>() ? cli::kPositive : cli::kNegative));
  }
  Run all = run({"corpus"});
  CHECK(all.code == cli::kPositive);
  CHECK(all.out.find("FAIL") == std::string::npos);
}

TEST_CASE("remaining subcommands") {
  Run l2f = run({"l2", "--input", corpus("g2_two_z_w"), "--q", corpus("const")});
  CHECK(l2f.code == cli::kNegative);
  Run l2t = run({"l2", "--input", corpus("g1_three_z_w"), "--q", corpus("const")});
  CHECK(l2t.code == cli::kPositive);
  Run c11 = run({"classify11", "--input", corpus("g2_two_z_w")});
  CHECK(c11.code == cli::kPositive);
  CHECK(c11.report()["verdicts"]["saturated"] == true);
  Run ag = run({"agler", "--input", corpus("sec7_q_minus"), "--grid", "16"});
  CHECK(ag.code == cli::kPositive);
  CHECK(ag.report()["verdicts"]["A2"].size() == 1);
  Run re = run({"realize", "--input", corpus("sec7_q_minus")});
  CHECK(re.code == cli::kPositive);
  CHECK(re.report()["verdicts"]["realization"]["symmetric"] == true);
  CHECK(run({"face", "--input", corpus("g2_two_z_w")}).code == cli::kNegative);
}
