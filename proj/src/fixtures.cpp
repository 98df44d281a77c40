#include "derangebij/fixtures.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace derangebij {

Fixture load_fixture(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open fixture " + path.string());
  Fixture fixture{path.stem().string(), {}};
  std::string line;
  unsigned line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    unsigned n;
    std::string value;
    if (!(fields >> n))
      continue;
    if (!(fields >> value))
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": missing value");
    try {
      fixture.values[n] = BigInt(value);
    } catch (std::exception const &) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": malformed value '" + value + "'");
    }
  }
  return fixture;
}

VerificationReport verify_fixtures(std::filesystem::path const &directory, unsigned enumerate_max)
{
  auto const start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.subject = "oeis";
  report.n_max = enumerate_max;

  struct Entry
  {
    char const *id;
    BigInt (*count)(unsigned, CountMethod);
  };
  for (Entry const entry : {Entry{"A052169", count_inv000}, Entry{"A002467", count_non_derangements}}) {
    Fixture const fixture = load_fixture(directory / (std::string(entry.id) + ".txt"));
    for (auto const &[n, expected] : fixture.values) {
      std::vector<CountMethod> methods{CountMethod::recurrence};
      if (n <= enumerate_max && n <= kMaxEnumeration)
        methods.push_back(CountMethod::enumerate);
      for (CountMethod m : methods) {
        BigInt const got = entry.count(n, m);
        if (got != expected) {
          ++report.failures;
          if (report.counterexamples.size() < 10)
            report.counterexamples.push_back(
              std::string(entry.id) + " n=" + std::to_string(n) + ": fixture " + expected.str() +
              ", " + (m == CountMethod::enumerate ? "enumeration " : "recurrence ") + got.str());
        }
      }
    }
  }
  report.passed = report.failures == 0;
  report.seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace derangebij
