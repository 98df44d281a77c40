#include <doctest.h>

#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "derangebij/cli.hpp"
#include "derangebij/notation.hpp"
#include "golden.hpp"

using namespace derangebij;
using json = nlohmann::ordered_json;

namespace {

struct Result
{
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int const status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<json> json_lines(std::string const &text)
{
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty())
      out.push_back(json::parse(line));
  return out;
}

// "(i, cycles)"
std::pair<unsigned, Permutation> parse_pair(std::string const &text)
{
  auto const comma = text.find(',');
  return {static_cast<unsigned>(std::stoul(text.substr(1, comma - 1))),
          parse_cycles(text.substr(comma + 1, text.size() - comma - 2))};
}

} // namespace

TEST_CASE("count")
{
  Result const r = run({"count", "--seq", "inv000", "--n", "7"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out == "3641\n");
  CHECK(run({"count", "--seq", "dbar", "--n", "7", "--method", "alternate"}).out == "3186\n");
  CHECK(run({"count", "--seq", "inv000", "--n", "7", "--method", "formula"}).out == "3641\n");
  auto const j = json_lines(run({"count", "--seq", "d", "--n", "30", "--format", "json"}).out);
  CHECK(j.at(0)["value"] == "97581073836835777732377428235481");
}

TEST_CASE("usage errors exit 2")
{
  CHECK(run({"frobnicate"}).status == cli::kUsageError);
  CHECK(run({"count", "--seq", "nope", "--n", "3"}).status == cli::kUsageError);
  CHECK(run({"count", "--seq", "d"}).status == cli::kUsageError);
  CHECK(run({"count", "--seq", "d", "--n", "3", "--bogus"}).status == cli::kUsageError);
  CHECK(run({"map", "--bijection", "phi", "--input", "0001"}).status == cli::kUsageError);
  CHECK(run({"map", "--bijection", "phi", "--input", "0x"}).status == cli::kUsageError);
  CHECK(run({"map", "--bijection", "theta", "--input", "(1,2"}).status == cli::kUsageError);
  CHECK(run({"map", "--bijection", "theta", "--input", "2143"}).status == cli::kUsageError);
  CHECK(run({"verify", "--target", "nope", "--max", "3"}).status == cli::kUsageError);
  CHECK(run({"count", "--seq", "d", "--n", "20", "--method", "enumerate"}).status ==
        cli::kUsageError);
  Result const r = run({"map", "--bijection", "phi", "--input", "0001"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
  CHECK(run({"--help"}).status == cli::kOk);
}

TEST_CASE("map records")
{
  Result const r = run({"map", "--bijection", "phi", "--input", "001322", "--format", "json"});
  REQUIRE(r.status == cli::kOk);
  auto const rec = json_lines(r.out).at(0);
  CHECK(rec["word"] == "R133R");
  CHECK(rec["output_one_line"] == "21543");
  CHECK(parse_cycles(rec["output_cycles"].get<std::string>()) == parse_cycles("(2,1)(5,3)(4)"));
  CHECK(rec["component"] == "Dbar_5");
  CHECK(rec.dump() + "\n" == r.out);

  auto const back = json_lines(
    run({"map", "--bijection", "phi-inv", "--input", "21543", "--n", "6", "--format", "json"}).out);
  CHECK(back.at(0)["output"] == "001322");

  auto const ext = json_lines(
    run({"map", "--bijection", "ext", "--input", "(1, 010223)", "--format", "json"}).out);
  CHECK(ext.at(0)["output_one_line"] == "2574361");

  auto const theta = json_lines(
    run({"map", "--bijection", "theta", "--input", "(1,2)(3,6)(4,5)(7)", "--format", "json"}).out);
  CHECK(parse_marked(theta.at(0)["output"].get<std::string>()) ==
        parse_marked("(*1)(2,3)(4,6,5)(7)"));

  Result const text = run({"map", "--bijection", "varphi", "--input", "1234"});
  CHECK(text.out.find("(3, (1)(2))") != std::string::npos);
  Result const csv = run({"map", "--bijection", "encode", "--input", "0102230", "--format", "csv"});
  CHECK(csv.out.find("112R31") != std::string::npos);
}

TEST_CASE("trace matches the first step table")
{
  auto const rows = json_lines(run({"trace", "--input", "001322", "--format", "json"}).out);
  auto const expected = golden::read("table1.txt");
  REQUIRE(rows.size() == expected.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i]["k"] == std::stoi(expected[i][0]));
    CHECK(parse_cycles(rows[i]["cycles"].get<std::string>()) == parse_cycles(expected[i][5]));
  }
}

TEST_CASE("tables by value")
{
  auto const three = json_lines(run({"tables", "--which", "3", "--format", "json"}).out);
  std::set<std::pair<Permutation, std::pair<unsigned, Permutation>>> got3, want3;
  for (auto const &row : three)
    got3.insert({parse_cycles(row["pi"].get<std::string>()),
                 parse_pair(row["varphi"].get<std::string>())});
  for (auto const &row : golden::read("table3.txt"))
    want3.insert({parse_cycles(row[0]),
                  {static_cast<unsigned>(std::stoul(row[1])), parse_cycles(row[2])}});
  CHECK(three.size() == 15);
  CHECK(got3 == want3);

  auto const four = json_lines(run({"tables", "--which", "4", "--format", "json"}).out);
  std::set<std::pair<Permutation, MarkedPermutation>> got4, want4;
  for (auto const &row : four)
    got4.insert({parse_cycles(row["pi"].get<std::string>()),
                 parse_marked(row["theta"].get<std::string>())});
  for (auto const &row : golden::read("table4.txt"))
    want4.insert({parse_cycles(row[0]), parse_marked(row[1])});
  CHECK(four.size() == 15);
  CHECK(got4 == want4);

  CHECK(run({"tables", "--which", "5"}).status == cli::kUsageError);
}

TEST_CASE("enumerate")
{
  Result const r = run({"enumerate", "--set", "inv000", "--n", "4"});
  CHECK(r.out.rfind("0010", 0) == 0);
  std::size_t lines = 0;
  for (char c : r.out)
    lines += c == '\n';
  CHECK(lines == 19);
  CHECK(json_lines(run({"enumerate", "--set", "marked", "--n", "4", "--format", "json"}).out)
          .size() == 4 * 4);
}

TEST_CASE("verify exit status")
{
  CHECK(run({"verify", "--target", "all", "--max", "8", "--jobs", "4"}).status == cli::kOk);

  auto const bad = std::filesystem::temp_directory_path() / "derangebij_cli_fixtures";
  std::filesystem::create_directories(bad);
  std::ofstream(bad / "A052169.txt") << "1 1\n2 3\n";
  std::ofstream(bad / "A002467.txt") << "1 1\n";
  Result const r = run({"verify", "--target", "oeis", "--max", "4", "--fixtures", bad.string()});
  CHECK(r.status == cli::kVerificationFailed);
  CHECK(r.out.find("FAIL") != std::string::npos);
  std::filesystem::remove_all(bad);
}
