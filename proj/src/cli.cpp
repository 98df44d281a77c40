#include "derangebij/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "derangebij/enumerate.hpp"
#include "derangebij/fixtures.hpp"
#include "derangebij/inversion_sequence.hpp"
#include "derangebij/notation.hpp"
#include "derangebij/oracle.hpp"
#include "derangebij/phi.hpp"
#include "derangebij/recurrences.hpp"

#ifndef DERANGEBIJ_FIXTURE_DIR
#define DERANGEBIJ_FIXTURE_DIR "data/oeis"
#endif

namespace derangebij::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format
{
  text,
  json,
  csv
};

// One record is an ordered list of named string fields. Text renders as
// "key: value" lines (or aligned columns for tables), JSON as one object per
// line, CSV as a header plus rows.
using Record = std::vector<std::pair<std::string, json>>;

std::string plain(json const &v)
{
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_field(std::string const &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + '"';
}

json to_json(Record const &r)
{
  json j = json::object();
  for (auto const &[k, v] : r)
    j[k] = v;
  return j;
}

void emit_record(std::ostream &out, Format format, Record const &r)
{
  switch (format) {
  case Format::text:
    for (auto const &[k, v] : r)
      out << k << ": " << plain(v) << '\n';
    break;
  case Format::json:
    out << to_json(r).dump() << '\n';
    break;
  case Format::csv: {
    std::string head, row;
    for (std::size_t i = 0; i < r.size(); ++i) {
      head += (i ? "," : "") + csv_field(r[i].first);
      row += (i ? "," : "") + csv_field(plain(r[i].second));
    }
    out << head << '\n' << row << '\n';
    break;
  }
  }
}

void emit_table(std::ostream &out, Format format, std::vector<Record> const &rows)
{
  if (rows.empty())
    return;
  switch (format) {
  case Format::json:
    for (auto const &r : rows)
      out << to_json(r).dump() << '\n';
    break;
  case Format::csv: {
    bool first = true;
    for (auto const &[k, v] : rows.front()) {
      out << (first ? "" : ",") << csv_field(k);
      first = false;
    }
    out << '\n';
    for (auto const &r : rows) {
      first = true;
      for (auto const &[k, v] : r) {
        out << (first ? "" : ",") << csv_field(plain(v));
        first = false;
      }
      out << '\n';
    }
    break;
  }
  case Format::text: {
    std::vector<std::size_t> width;
    for (auto const &[k, v] : rows.front())
      width.push_back(k.size());
    for (auto const &r : rows)
      for (std::size_t i = 0; i < r.size(); ++i)
        width[i] = std::max(width[i], plain(r[i].second).size());
    auto line = [&](std::function<std::string(std::size_t)> const &cell) {
      std::string s;
      for (std::size_t i = 0; i < width.size(); ++i) {
        std::string c = cell(i);
        c.resize(width[i], ' ');
        s += (i ? " | " : "") + c;
      }
      while (!s.empty() && s.back() == ' ')
        s.pop_back();
      out << s << '\n';
    };
    line([&](std::size_t i) { return rows.front()[i].first; });
    std::string rule;
    for (std::size_t i = 0; i < width.size(); ++i)
      rule += (i ? "-+-" : "") + std::string(width[i], '-');
    out << rule << '\n';
    for (auto const &r : rows)
      line([&](std::size_t i) { return plain(r[i].second); });
    break;
  }
  }
}

std::string component_name(Permutation const &p)
{
  return "Dbar_" + std::to_string(p.size());
}

Record permutation_fields(std::string const &prefix, Permutation const &p)
{
  Record r;
  if (p.standard())
    r.emplace_back(prefix + "one_line", to_one_line_string(p));
  r.emplace_back(prefix + "cycles", to_cycle_string(p));
  return r;
}

void append(Record &r, Record const &more)
{
  r.insert(r.end(), more.begin(), more.end());
}

std::string show(SplitPair const &s)
{
  return "(" + std::to_string(s.label) + ", " + to_cycle_string(s.perm) + ")";
}

std::string trim(std::string s)
{
  auto const not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

/// "(label, rest)" -> {label, rest}
std::pair<unsigned, std::string> parse_labelled(std::string const &raw)
{
  std::string const text = trim(raw);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError("expected '(label, ...)', got '" + raw + "'");
  std::string const inner = text.substr(1, text.size() - 2);
  auto const comma = inner.find(',');
  if (comma == std::string::npos)
    throw ParseError("expected '(label, ...)', got '" + raw + "'");
  std::string const label = trim(inner.substr(0, comma));
  unsigned value = 0;
  auto [end, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
  if (label.empty() || ec != std::errc{} || end != label.data() + label.size())
    throw ParseError("malformed label '" + label + "'");
  return {value, trim(inner.substr(comma + 1))};
}

SplitPair parse_split_pair(std::string const &raw, std::optional<unsigned> n)
{
  auto [label, rest] = parse_labelled(raw);
  Permutation perm = parse_permutation(rest);
  return {n.value_or(perm.size() + 1), label, std::move(perm)};
}

struct MapOptions
{
  std::string bijection;
  std::string input;
  std::optional<unsigned> n;
};

int run_map(MapOptions const &o, Format format, std::ostream &out)
{
  std::string const &b = o.bijection;
  Record r{{"bijection", b}, {"input", o.input}};

  if (b == "phi" || b == "phi-cyclic") {
    InversionSequence const e = parse_inversion_sequence(o.input);
    auto const result =
      b == "phi" ? avoider_to_nonderangement(e) : avoider_to_nonderangement_cyclic(e);
    r.emplace_back("word", to_string(encode_word(e)));
    append(r, permutation_fields("output_", result.perm()));
    r.emplace_back("component", component_name(result.perm()));
  } else if (b == "phi-inv") {
    Permutation const p = parse_permutation(o.input);
    TaggedNonDerangement const tagged(o.n.value_or(p.size()), p);
    InversionSequence const e = nonderangement_to_avoider(tagged);
    r.emplace_back("component", component_name(p));
    r.emplace_back("word", to_string(encode_word(e)));
    r.emplace_back("output", to_string(e));
  } else if (b == "ext") {
    auto const [a, rest] = parse_labelled(o.input);
    InversionSequence const e = parse_inversion_sequence(rest);
    r.emplace_back("extended", to_string(extend_avoider(a, e)));
    append(r, permutation_fields("output_", pair_to_nonderangement(a, e)));
  } else if (b == "ext-inv") {
    auto const [a, e] = nonderangement_to_pair(parse_permutation(o.input));
    r.emplace_back("output", "(" + std::to_string(a) + ", " + to_string(e) + ")");
  } else if (b == "split" || b == "varphi" || b == "varphi-alt") {
    Permutation const p = parse_permutation(o.input);
    SplitPair const s = b == "split"    ? derangement_split(p)
                        : b == "varphi" ? split_nonderangement(p)
                                        : split_nonderangement_alt(p);
    r.emplace_back("output", show(s));
    r.emplace_back("label", s.label);
    append(r, permutation_fields("output_", s.perm));
  } else if (b == "split-inv" || b == "varphi-inv" || b == "varphi-alt-inv") {
    SplitPair const s = parse_split_pair(o.input, o.n);
    Permutation const p = b == "split-inv"    ? derangement_split_inverse(s)
                          : b == "varphi-inv" ? join_nonderangement(s)
                                              : join_nonderangement_alt(s);
    append(r, permutation_fields("output_", p));
  } else if (b == "theta") {
    MarkedPermutation const m = to_marked(parse_permutation(o.input));
    r.emplace_back("output", to_string(m));
    r.emplace_back("mark", m.mark());
  } else if (b == "theta-inv") {
    append(r, permutation_fields("output_", from_marked(parse_marked(o.input))));
  } else if (b == "encode") {
    r.emplace_back("output", to_string(encode_word(parse_inversion_sequence(o.input))));
  } else if (b == "decode") {
    r.emplace_back("output", to_string(decode_word(parse_rword(o.input))));
  } else {
    throw std::invalid_argument("unknown bijection '" + b + "'");
  }
  emit_record(out, format, r);
  return kOk;
}

int run_trace(std::string const &input, Format format, std::ostream &out)
{
  InversionSequence const e = parse_inversion_sequence(input);
  std::vector<Record> rows;
  for (auto const &step : trace_avoider_to_nonderangement(e)) {
    std::string letter;
    if (step.letter)
      letter = *step.letter == RWord::kRepeat ? "R" : std::to_string(*step.letter);
    std::string one_line = to_one_line_string(step.sigma);
    Record row{{"k", step.k}, {"w_k", letter}};
    if (format == Format::text && step.transposition) {
      auto const [a, b] = *step.transposition;
      one_line = "(" + std::to_string(a) + "," + std::to_string(b) + ")" +
                 to_one_line_string(*step.operand) + "=" + one_line;
    }
    row.emplace_back("one_line", one_line);
    row.emplace_back("cycles", to_cycle_string(step.sigma));
    if (format != Format::text && step.transposition)
      row.emplace_back("transposition", "(" + std::to_string(step.transposition->first) + "," +
                                          std::to_string(step.transposition->second) + ")");
    else if (format != Format::text)
      row.emplace_back("transposition", "");
    rows.push_back(std::move(row));
  }
  emit_table(out, format, rows);
  return kOk;
}

int run_tables(unsigned which, unsigned n, Format format, std::ostream &out)
{
  std::vector<Record> rows;
  if (which == 3) {
    for (auto const &p : nonderangements(n))
      rows.push_back({{"pi", to_cycle_string(p)}, {"varphi", show(split_nonderangement(p))}});
  } else if (which == 4) {
    for (auto const &p : theta_domain(n))
      rows.push_back({{"pi", to_cycle_string(p)}, {"theta", to_string(to_marked(p))}});
  } else {
    throw std::invalid_argument("--which must be 3 or 4");
  }
  emit_table(out, format, rows);
  return kOk;
}

Record report_record(VerificationReport const &r)
{
  json examples = json::array();
  for (auto const &c : r.counterexamples)
    examples.push_back(c);
  json sizes = json::array();
  for (auto const &s : r.sizes)
    sizes.push_back({{"n", s.n}, {"domain", s.domain}, {"codomain", s.codomain}});
  return {{"subject", r.subject},
          {"n_min", r.n_min},
          {"n_max", r.n_max},
          {"status", r.passed ? "pass" : "fail"},
          {"failures", r.failures},
          {"counterexamples", examples},
          {"sizes", sizes},
          {"seconds", r.seconds}};
}

struct VerifyOptions
{
  std::string target;
  unsigned max = 8;
  unsigned jobs = 1;
  std::size_t cap = 10;
  std::string fixtures = DERANGEBIJ_FIXTURE_DIR;
};

int run_verify(VerifyOptions const &o, Format format, std::ostream &out)
{
  std::vector<VerificationReport> reports;
  VerificationOptions const options{o.cap, o.jobs};
  auto const &bij = bijection_names();
  auto const &ids = identity_names();
  auto const known = [](auto const &names, std::string const &t) {
    return std::find(names.begin(), names.end(), t) != names.end();
  };

  if (o.target == "all") {
    for (auto const &name : bij) {
      // keeps every codomain inside S_max
      unsigned const top = name == "ext" ? std::max(1u, o.max) - 1 : o.max;
      reports.push_back(verify_bijection(name, top, options));
    }
    for (auto const &name : ids)
      reports.push_back(verify_identity(name, o.max));
    reports.push_back(verify_fixtures(o.fixtures, o.max));
  } else if (o.target == "identities") {
    for (auto const &name : ids)
      reports.push_back(verify_identity(name, o.max));
  } else if (o.target == "oeis") {
    reports.push_back(verify_fixtures(o.fixtures, o.max));
  } else if (known(bij, o.target)) {
    reports.push_back(verify_bijection(o.target, o.max, options));
  } else if (known(ids, o.target)) {
    reports.push_back(verify_identity(o.target, o.max));
  } else {
    throw std::invalid_argument("unknown verification target '" + o.target + "'");
  }

  bool ok = true;
  if (format == Format::text) {
    for (auto const &r : reports) {
      std::ostringstream line;
      line.precision(3);
      line << std::fixed << (r.passed ? "PASS " : "FAIL ") << r.subject << " n=" << r.n_min
           << ".." << r.n_max << " failures=" << r.failures << " time=" << r.seconds << "s";
      out << line.str() << '\n';
      for (auto const &c : r.counterexamples)
        out << "  " << c << '\n';
    }
  } else {
    std::vector<Record> rows;
    for (auto const &r : reports) {
      Record rec = report_record(r);
      if (format == Format::csv)
        rec.erase(std::remove_if(rec.begin(), rec.end(),
                                 [](auto const &f) { return f.second.is_array(); }),
                  rec.end());
      rows.push_back(std::move(rec));
    }
    emit_table(out, format, rows);
  }
  for (auto const &r : reports)
    ok = ok && r.passed;
  return ok ? kOk : kVerificationFailed;
}

int run_count(std::string const &seq, unsigned n, std::string const &method_name, Format format,
              std::ostream &out)
{
  static std::map<std::string, CountMethod> const methods{
    {"enumerate", CountMethod::enumerate},
    {"recurrence", CountMethod::recurrence},
    {"alternate", CountMethod::alternate_recurrence},
    {"formula", CountMethod::formula}};
  CountMethod const method = methods.at(method_name);
  BigInt value;
  if (seq == "d")
    value = count_derangements(n, method);
  else if (seq == "dbar")
    value = count_non_derangements(n, method);
  else
    value = count_inv000(n, method);

  if (format == Format::text)
    out << value.str() << '\n';
  else
    emit_record(out, format,
                {{"seq", seq}, {"n", n}, {"method", method_name}, {"value", value.str()}});
  return kOk;
}

int run_enumerate(std::string const &set, unsigned n, Format format, std::ostream &out)
{
  std::vector<Record> rows;
  if (set == "inv000") {
    for_each_avoider(n, [&](InversionSequence const &e) {
      rows.push_back({{"sequence", to_string(e)}, {"word", to_string(encode_word(e))}});
    });
  } else if (set == "nonderangements" || set == "derangements") {
    for (auto const &p : set == "derangements" ? derangements(n) : nonderangements(n))
      rows.push_back(permutation_fields("", p));
  } else {
    for (auto const &m : marked_permutations(n))
      rows.push_back({{"one_line", to_one_line_string(m.perm())},
                      {"marked", to_string(m)},
                      {"mark", m.mark()}});
  }
  if (format == Format::text) {
    for (auto const &r : rows) {
      std::string line;
      for (auto const &[k, v] : r)
        line += (line.empty() ? "" : " ") + plain(v);
      out << line << '\n';
    }
  } else {
    emit_table(out, format, rows);
  }
  return kOk;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Bijections between 000-avoiding inversion sequences and non-derangements",
               "derangebij"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::map<std::string, Format> const formats{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  auto add_format = [&](CLI::App *sub) {
    sub->add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  std::string seq, method = "recurrence";
  unsigned n = 0;
  auto *count = app.add_subcommand("count", "Exact d_n, dbar_n or |I_n(000)|");
  count->add_option("--seq", seq)->required()->check(CLI::IsMember({"d", "dbar", "inv000"}));
  count->add_option("--n", n)->required();
  count->add_option("--method", method)
    ->check(CLI::IsMember({"enumerate", "recurrence", "alternate", "formula"}));
  add_format(count);

  std::string set;
  auto *enumerate = app.add_subcommand("enumerate", "List a combinatorial set");
  enumerate->add_option("--set", set)
    ->required()
    ->check(CLI::IsMember({"inv000", "nonderangements", "derangements", "marked"}));
  enumerate->add_option("--n", n)->required()->check(CLI::Range(0u, kMaxEnumeration));
  add_format(enumerate);

  MapOptions map_options;
  unsigned map_n = 0;
  auto *map = app.add_subcommand("map", "Apply one bijection to one input");
  map->add_option("--bijection", map_options.bijection)
    ->required()
    ->check(CLI::IsMember({"phi", "phi-cyclic", "phi-inv", "ext", "ext-inv", "split",
                           "split-inv", "varphi", "varphi-inv", "varphi-alt", "varphi-alt-inv",
                           "theta", "theta-inv", "encode", "decode"}));
  map->add_option("--input", map_options.input)->required();
  auto *map_n_opt = map->add_option("--n", map_n, "Index of the codomain for inverse maps");
  add_format(map);

  std::string trace_input;
  auto *trace = app.add_subcommand("trace", "Step-by-step construction of phi(e)");
  trace->add_option("--input", trace_input)->required();
  add_format(trace);

  unsigned which = 3, table_n = 4;
  auto *tables = app.add_subcommand("tables", "Full table of varphi (3) or theta (4)");
  tables->add_option("--which", which)->required()->check(CLI::IsMember({3u, 4u}));
  tables->add_option("--n", table_n, "Permutation size")->check(CLI::Range(1u, 8u));
  add_format(tables);

  VerifyOptions verify_options;
  auto *verify = app.add_subcommand("verify", "Exhaustive bijection and identity checks");
  verify->add_option("--target", verify_options.target)->required();
  verify->add_option("--max", verify_options.max)->required();
  verify->add_option("--jobs", verify_options.jobs)->check(CLI::Range(1u, 256u));
  verify->add_option("--cap", verify_options.cap, "Counterexamples kept per report")
    ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  verify->add_option("--fixtures", verify_options.fixtures, "Directory of OEIS fixtures");
  add_format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &e) {
    app.exit(e, out, err);
    return kOk;
  } catch (CLI::CallForAllHelp const &e) {
    app.exit(e, out, err);
    return kOk;
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  Format const format = formats.at(format_name);
  try {
    if (*count)
      return run_count(seq, n, method, format, out);
    if (*enumerate)
      return run_enumerate(set, n, format, out);
    if (*map) {
      if (*map_n_opt)
        map_options.n = map_n;
      return run_map(map_options, format, out);
    }
    if (*trace)
      return run_trace(trace_input, format, out);
    if (*tables)
      return run_tables(which, table_n, format, out);
    return run_verify(verify_options, format, out);
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (std::out_of_range const &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

} // namespace derangebij::cli
