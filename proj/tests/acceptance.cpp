// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "derangebij/cli.hpp"
#include "derangebij/fixtures.hpp"
#include "derangebij/inversion_sequence.hpp"
#include "derangebij/notation.hpp"
#include "derangebij/oracle.hpp"
#include "derangebij/phi.hpp"
#include "golden.hpp"

using namespace derangebij;
using json = nlohmann::ordered_json;

namespace {

// Outcome of one criterion: ok plus a short detail for the log line.
struct Outcome
{
  bool ok = true;
  std::string detail;

  void expect(bool cond, std::string const &what)
  {
    if (!cond) {
      ok = false;
      if (!detail.empty())
        detail += "; ";
      detail += what;
    }
  }
};

std::string cli_out(std::vector<std::string> const &args, int &status)
{
  std::ostringstream out, err;
  status = cli::run(args, out, err);
  return out.str();
}

std::vector<json> json_lines(std::string const &text)
{
  std::vector<json> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty())
      rows.push_back(json::parse(line));
  return rows;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome sequence_prefix(std::string const &seq, std::vector<std::string> const &expected)
{
  Outcome o;
  auto const start = std::chrono::steady_clock::now();
  for (unsigned n = 1; n <= expected.size(); ++n) {
    int status = 0;
    std::string const out = cli_out({"count", "--seq", seq, "--n", std::to_string(n)}, status);
    o.expect(status == cli::kOk && out == expected[n - 1] + "\n",
             "n=" + std::to_string(n) + " gave '" + out.substr(0, out.find('\n')) + "'");
  }
  double const t = seconds_since(start);
  o.expect(t < 1.0, "took " + std::to_string(t) + " s");
  if (o.ok)
    o.detail = "n=1..7 exact in " + std::to_string(t) + " s";
  return o;
}

std::pair<Element, Element> swap_pair(std::string const &text)
{
  auto const comma = text.find(',');
  return {static_cast<Element>(std::stoul(text.substr(1, comma - 1))),
          static_cast<Element>(std::stoul(text.substr(comma + 1)))};
}

void compare_trace(Outcome &o, std::string const &file, std::string const &input)
{
  auto const rows = golden::read(file);
  auto const trace = trace_avoider_to_nonderangement(parse_inversion_sequence(input));
  o.expect(rows.size() == trace.size(), file + ": row count");
  for (std::size_t i = 0; i < std::min(rows.size(), trace.size()); ++i) {
    auto const &row = rows[i];
    auto const &step = trace[i];
    std::string const where = file + " k=" + row[0];
    o.expect(step.k == std::stoul(row[0]), where + ": k");
    std::string const letter =
      !step.letter ? "-" : *step.letter == RWord::kRepeat ? "R" : std::to_string(*step.letter);
    o.expect(letter == row[1], where + ": w_k");
    if (row[2] == "-") {
      o.expect(!step.transposition, where + ": unexpected transposition");
    } else {
      auto const [a, b] = swap_pair(row[2]);
      o.expect(step.transposition &&
                 std::set{step.transposition->first, step.transposition->second} == std::set{a, b},
               where + ": transposition");
      o.expect(step.operand && *step.operand == parse_permutation(row[3]), where + ": operand");
    }
    o.expect(step.sigma == parse_one_line(row[4]), where + ": one-line");
    o.expect(step.sigma == parse_cycles(row[5]), where + ": cycles");
  }
}

Outcome golden_examples()
{
  Outcome o;
  auto const first = avoider_to_nonderangement(parse_inversion_sequence("001322"));
  o.expect(first.perm() == parse_one_line("21543"), "phi(001322) one-line");
  o.expect(first.perm() == parse_cycles("(2,1)(5,3)(4)"), "phi(001322) cycles");
  auto const second = avoider_to_nonderangement(parse_inversion_sequence("0102230"));
  o.expect(second.perm() == parse_one_line("2574361"), "phi(0102230) one-line");
  o.expect(second.perm() == parse_cycles("(2,5,3,7,1)(4)(6)"), "phi(0102230) cycles");
  compare_trace(o, "table1.txt", "001322");
  compare_trace(o, "table2.txt", "0102230");
  if (o.ok)
    o.detail = "both examples and 13 trace rows match by value";
  return o;
}

std::pair<unsigned, Permutation> parse_split_pair(std::string const &text)
{
  auto const comma = text.find(',');
  return {static_cast<unsigned>(std::stoul(text.substr(1, comma - 1))),
          parse_cycles(text.substr(comma + 1, text.size() - comma - 2))};
}

Outcome golden_tables()
{
  Outcome o;
  int status = 0;
  auto const three = json_lines(cli_out({"tables", "--which", "3", "--format", "json"}, status));
  o.expect(status == cli::kOk, "tables 3 exit status");
  std::set<std::pair<Permutation, std::pair<unsigned, Permutation>>> got3, want3;
  for (auto const &row : three)
    got3.insert({parse_permutation(row["pi"].get<std::string>()),
                 parse_split_pair(row["varphi"].get<std::string>())});
  for (auto const &row : golden::read("table3.txt"))
    want3.insert({parse_permutation(row[0]),
                  {static_cast<unsigned>(std::stoul(row[1])), parse_cycles(row[2])}});
  o.expect(three.size() == 15 && want3.size() == 15, "table 3 row count");
  o.expect(got3 == want3, "table 3 values");

  auto const four = json_lines(cli_out({"tables", "--which", "4", "--format", "json"}, status));
  o.expect(status == cli::kOk, "tables 4 exit status");
  std::set<std::pair<Permutation, MarkedPermutation>> got4, want4;
  for (auto const &row : four)
    got4.insert({parse_permutation(row["pi"].get<std::string>()),
                 parse_marked(row["theta"].get<std::string>())});
  for (auto const &row : golden::read("table4.txt"))
    want4.insert({parse_permutation(row[0]), parse_marked(row[1])});
  o.expect(four.size() == 15 && want4.size() == 15, "table 4 row count");
  o.expect(got4 == want4, "table 4 values");
  if (o.ok)
    o.detail = "15 + 15 rows match by value";
  return o;
}

void absorb(Outcome &o, VerificationReport const &r)
{
  std::string what = r.subject + " n<=" + std::to_string(r.n_max);
  if (!r.counterexamples.empty())
    what += " (" + r.counterexamples.front() + ")";
  o.expect(r.passed, what);
}

Outcome bijectivity()
{
  Outcome o;
  auto const start = std::chrono::steady_clock::now();
  std::ostringstream timing;
  for (auto const &[name, n] : std::vector<std::pair<char const *, unsigned>>{
         {"phi", 9}, {"varphi", 9}, {"varphi-alt", 9}, {"split", 9}, {"theta", 9}, {"ext", 8}}) {
    VerificationReport const r = verify_bijection(name, n, {.max_counterexamples = 10, .jobs = 1});
    absorb(o, r);
    timing << name << ' ' << std::fixed;
    timing.precision(2);
    timing << r.seconds << "s ";
  }
  double const t = seconds_since(start);
  o.expect(t < 30.0, "took " + std::to_string(t) + " s single-threaded");
  if (o.ok)
    o.detail = timing.str() + "total " + std::to_string(t) + " s";
  return o;
}

Outcome identities()
{
  Outcome o;
  for (auto const &name : identity_names())
    absorb(o, verify_identity(name, 9));
  if (o.ok)
    o.detail = std::to_string(identity_names().size()) + " identities exact for n<=9";
  return o;
}

Outcome single(char const *name, unsigned n)
{
  Outcome o;
  VerificationReport const r = verify_bijection(name, n);
  absorb(o, r);
  if (o.ok) {
    std::size_t items = 0;
    for (auto const &s : r.sizes)
      items += s.domain;
    o.detail = std::string(name) + " n<=" + std::to_string(n) + ", " + std::to_string(items) +
               " inputs";
  }
  return o;
}

Outcome fixtures()
{
  Outcome o;
  std::filesystem::path const dir = DERANGEBIJ_FIXTURE_DIR;
  absorb(o, verify_fixtures(dir, 9));
  std::size_t const a = load_fixture(dir / "A052169.txt").values.size();
  std::size_t const b = load_fixture(dir / "A002467.txt").values.size();
  o.expect(a >= 7 && b >= 7, "fixtures too short");
  if (o.ok)
    o.detail = "A052169 (" + std::to_string(a) + " terms) and A002467 (" + std::to_string(b) +
               " terms) match";
  return o;
}

} // namespace

int main()
{
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
    {"inv000 prefix", [] { return sequence_prefix("inv000", {"1", "2", "5", "19", "91", "531", "3641"}); }},
    {"dbar prefix", [] { return sequence_prefix("dbar", {"1", "1", "4", "15", "76", "455", "3186"}); }},
    {"phi examples and traces", golden_examples},
    {"split and marked tables", golden_tables},
    {"exhaustive bijectivity", bijectivity},
    {"counting identities", identities},
    {"word codec", [] { return single("codec", 9); }},
    {"phi formulations agree", [] { return single("phi-cyclic", 9); }},
    {"OEIS fixtures", fixtures},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const &e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
