#include "pinnacle/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinnacle/admissibility.hpp"
#include "pinnacle/bench.hpp"
#include "pinnacle/counting.hpp"
#include "pinnacle/fs_action.hpp"
#include "pinnacle/permutation.hpp"

namespace pinnacle::cli {

namespace {

using nlohmann::json;

enum class Format { plain, json, csv };

struct GlobalOptions {
  Format format = Format::plain;
  bool sorted = false;
  std::size_t runs = 3;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Numbers that fit in 64 bits are written as JSON numbers, larger ones as strings.
json count_to_json(const BigInt &value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return value.str();
}

json word_to_json(std::span<const Value> w) { return json(std::vector<Value>(w.begin(), w.end())); }

ValueSet pinnacles_from(const std::string &text) {
  try {
    return parse_value_set(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("bad pinnacle set: ") + e.what());
  }
}

int cmd_count(const GlobalOptions &g, std::size_t n, const std::string &p_text,
              const std::string &method, std::ostream &out) {
  const ValueSet pins = pinnacles_from(p_text);
  BigInt count;
  if (method == "enumerate") {
    std::uint64_t hits = 0;
    for_each_naive(pins, n, [&](std::span<const Value>) { ++hits; });
    count = hits;
  } else {
    count = count_pin(pins, n);
  }
  switch (g.format) {
  case Format::plain:
    out << count.str() << '\n';
    break;
  case Format::json:
    out << json{{"n", n}, {"pinnacles", pins}, {"method", method}, {"count", count_to_json(count)}}
               .dump()
        << '\n';
    break;
  case Format::csv:
    out << "n,pinnacles,count\n"
        << n << ',' << format_word(pins, ';') << ',' << count.str() << '\n';
    break;
  }
  return kOk;
}

int cmd_generate(const GlobalOptions &g, std::size_t n, const std::string &p_text,
                 const std::string &method, std::ostream &out, std::ostream &err) {
  const ValueSet pins = pinnacles_from(p_text);
  std::uint64_t emitted = 0;
  const bool as_json = g.format == Format::json;
  json array = json::array();
  const auto emit = [&](std::span<const Value> w) {
    ++emitted;
    if (as_json) {
      array.push_back(word_to_json(w));
    } else {
      out << format_word(w) << '\n';
    }
  };
  if (method == "naive") {
    // already lexicographic
    for_each_naive(pins, n, emit);
  } else if (g.sorted) {
    for (const auto &p : generate_constructive(pins, n)) {
      emit(p.values());
    }
  } else {
    for_each_constructive(pins, n, emit);
  }
  if (as_json) {
    out << array.dump() << '\n';
  }
  err << "count: " << emitted << '\n';
  return kOk;
}

int cmd_orbits(const GlobalOptions &g, std::size_t n, const std::string &p_text, std::ostream &out) {
  const ValueSet pins = pinnacles_from(p_text);
  std::vector<Permutation> reps;
  for_each_fs_minimal(pins, n, [&](std::span<const Value> w) {
    reps.push_back(adopt_unchecked(std::vector<Value>(w.begin(), w.end())));
  });
  if (g.sorted) {
    std::sort(reps.begin(), reps.end());
  }
  json array = json::array();
  if (g.format == Format::csv) {
    out << "representative,orbit_size\n";
  }
  for (const auto &rep : reps) {
    const BigInt size = BigInt(1) << static_cast<unsigned>(n - vale_set(rep).size());
    switch (g.format) {
    case Format::plain:
      out << format(rep) << ' ' << size.str() << '\n';
      break;
    case Format::csv:
      out << format_word(rep.values(), ';') << ',' << size.str() << '\n';
      break;
    case Format::json:
      array.push_back({{"representative", word_to_json(rep.values())},
                       {"orbit_size", count_to_json(size)}});
      break;
    }
  }
  if (g.format == Format::json) {
    out << array.dump() << '\n';
  }
  return kOk;
}

int cmd_vale_sets(const GlobalOptions &g, std::size_t n, const std::string &p_text,
                  std::ostream &out) {
  const ValueSet pins = pinnacles_from(p_text);
  const auto sets = vale_sets(pins, n);
  if (g.format == Format::json) {
    out << json(sets).dump() << '\n';
    return kOk;
  }
  for (const auto &v : sets) {
    out << format_word(v, g.format == Format::csv ? ';' : ',') << '\n';
  }
  return kOk;
}

int cmd_act(const GlobalOptions &g, const std::string &perm_text, Value x, bool classic,
            std::ostream &out) {
  Permutation p = [&] {
    try {
      return parse_permutation(perm_text);
    } catch (const std::invalid_argument &e) {
      throw UsageError(std::string("bad permutation: ") + e.what());
    }
  }();
  if (x < 1 || static_cast<std::size_t>(x) > p.size()) {
    throw UsageError("-x must lie in [1, " + std::to_string(p.size()) + "]");
  }
  const Permutation result = classic ? classical_fs(p, x) : dual_fs(p, x);
  if (g.format == Format::json) {
    out << word_to_json(result.values()).dump() << '\n';
  } else {
    out << format(result) << '\n';
  }
  return kOk;
}

int cmd_bench(const GlobalOptions &g, std::size_t n, const std::optional<std::string> &p_text,
              bool all, std::ostream &out, std::ostream &err) {
  if (all == p_text.has_value()) {
    throw UsageError("bench needs exactly one of -P or --all");
  }
  const std::vector<ValueSet> scope = all ? admissible_pinnacle_sets(n)
                                          : std::vector<ValueSet>{pinnacles_from(*p_text)};
  const std::size_t limit = max_naive_n();
  bool agree = true;
  json array = json::array();
  if (g.format != Format::json) {
    out << kBenchCsvHeader << '\n';
  }
  for (const auto &pins : scope) {
    const BenchRow row = bench_pinnacle_set(pins, n, g.runs, limit);
    agree = agree && row.counts_agree;
    if (g.format == Format::json) {
      const auto ratio = row.speedup();
      array.push_back({{"n", row.n},
                       {"pinnacles", row.pinnacles},
                       {"count", count_to_json(row.count)},
                       {"naive_ms", row.naive_ms ? json(*row.naive_ms) : json(nullptr)},
                       {"construct_ms", row.construct_ms},
                       {"speedup", ratio ? json(*ratio) : json(nullptr)}});
    } else {
      out << bench_csv_row(row) << '\n';
    }
  }
  if (g.format == Format::json) {
    out << array.dump() << '\n';
  }
  if (!agree) {
    err << "error: generators disagree on at least one pinnacle set\n";
    return kFailure;
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Permutations with a prescribed pinnacle set", "pinnacle"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{
              {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}},
          CLI::ignore_case))
      ->option_text("plain|json|csv");
  app.add_flag("--sorted", g.sorted, "Emit permutations in lexicographic order");
  app.add_option("--runs", g.runs, "Timed runs per benchmark leg (median reported)")
      ->check(CLI::PositiveNumber);

  std::size_t n = 0;
  std::string p_text;
  std::optional<std::string> bench_p;
  std::string method;
  std::string perm_text;
  Value x = 0;
  bool dual = false;
  bool classic = false;
  bool all = false;

  const auto add_n = [&](CLI::App *sub) {
    sub->add_option("-n", n, "Size of the permutations")->required()->check(CLI::Range(1, 62));
  };
  const auto add_p = [&](CLI::App *sub) {
    sub->add_option("-P,--pinnacles", p_text, "Pinnacle set, e.g. 4,8,11 (\"\" or none for empty)")
        ->required();
  };

  auto *count = app.add_subcommand("count", "Count permutations with pinnacle set P");
  add_n(count);
  add_p(count);
  method = "formula";
  count->add_option("--method", method)->check(CLI::IsMember({"formula", "enumerate"}));

  auto *generate = app.add_subcommand("generate", "List permutations with pinnacle set P");
  add_n(generate);
  add_p(generate);
  std::string gen_method = "construct";
  generate->add_option("--method", gen_method)->check(CLI::IsMember({"naive", "construct"}));

  auto *orbits = app.add_subcommand("orbits", "FS-minimal orbit representatives for P");
  add_n(orbits);
  add_p(orbits);

  auto *vales = app.add_subcommand("vale-sets", "Admissible vale sets for P");
  add_n(vales);
  add_p(vales);

  auto *act = app.add_subcommand("act", "Apply one Foata-Strehl map");
  act->add_option("--perm", perm_text, "Permutation, e.g. 6,5,3,4,1,2,7")->required();
  act->add_option("-x", x, "Letter to act on")->required();
  auto *dual_flag = act->add_flag("--dual", dual, "Dual map (default)");
  act->add_flag("--classic", classic, "Classical map")->excludes(dual_flag);

  auto *bench = app.add_subcommand("bench", "Time naive scan versus orbit construction");
  add_n(bench);
  bench->add_option("-P,--pinnacles", bench_p, "Single pinnacle set");
  bench->add_flag("--all", all, "Every admissible pinnacle set for n");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) {
      return cmd_count(g, n, p_text, method, out);
    }
    if (generate->parsed()) {
      return cmd_generate(g, n, p_text, gen_method, out, err);
    }
    if (orbits->parsed()) {
      return cmd_orbits(g, n, p_text, out);
    }
    if (vales->parsed()) {
      return cmd_vale_sets(g, n, p_text, out);
    }
    if (act->parsed()) {
      return cmd_act(g, perm_text, x, classic, out);
    }
    if (bench->parsed()) {
      return cmd_bench(g, n, bench_p, all, out, err);
    }
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError &e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

} // namespace pinnacle::cli
