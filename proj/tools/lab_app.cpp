#include "lab_app.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stacksort/stacksort.hpp"

namespace stacksort::lab {

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto body = std::string(detail::trim(line));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
    out[std::string(detail::trim(std::string_view(body).substr(0, eq)))] =
        std::string(detail::trim(std::string_view(body).substr(eq + 1)));
  }
  return out;
}

std::string resolve_setting(const std::optional<std::string>& flag, const char* env_name,
                            const std::map<std::string, std::string>& config, const std::string& key,
                            const std::string& fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv(env_name); env && *env) return env;
  if (auto it = config.find(key); it != config.end()) return it->second;
  return fallback;
}

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw DomainError(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

struct Settings {
  std::string patterns;
  EnumerationOptions options;
  std::string format;
  std::string out;
  bool patterns_explicit = false;  // set by flag, environment or config file
};

struct GlobalFlags {
  std::optional<std::string> patterns, threads, ceiling, format, out, config;
};

Settings resolve(const GlobalFlags& g) {
  std::map<std::string, std::string> config;
  std::string config_path = g.config.value_or("");
  if (config_path.empty())
    if (const char* env = std::getenv("STACKSORT_CONFIG")) config_path = env;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw DomainError("cannot read config file '" + config_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    config = parse_config_text(ss.str());
  }
  Settings s;
  s.patterns = resolve_setting(g.patterns, "STACKSORT_PATTERNS", config, "patterns", "");
  s.patterns_explicit = !s.patterns.empty();
  if (!s.patterns_explicit) s.patterns = "123,132";
  s.options.threads = parse_count(resolve_setting(g.threads, "STACKSORT_THREADS", config, "threads", "0"), "thread count");
  s.options.ceiling = parse_count(
      resolve_setting(g.ceiling, "STACKSORT_CEILING", config, "ceiling", std::to_string(kDefaultCeiling)), "ceiling");
  s.format = resolve_setting(g.format, "STACKSORT_FORMAT", config, "format", "csv");
  if (s.format != "csv" && s.format != "json") throw DomainError("format must be csv or json, got '" + s.format + "'");
  s.out = g.out.value_or("");
  return s;
}

void emit_report(EnumerationReport& report, const Settings& s, std::ostream& out) {
  report.timestamp = utc_timestamp();
  const std::string text = s.format == "json" ? to_json(report).dump(2) + "\n" : to_csv(report);
  if (s.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(s.out);
  if (!f) throw DomainError("cannot write '" + s.out + "'");
  f << text;
}

/// Opens the dump sink: a file when `path` is set, nothing otherwise.
std::unique_ptr<std::ofstream> open_dump(const std::string& path) {
  if (path.empty()) return nullptr;
  auto f = std::make_unique<std::ofstream>(path);
  if (!*f) throw DomainError("cannot write '" + path + "'");
  return f;
}

int cmd_sort(const Settings& s, const std::string& perm, std::size_t passes, bool trace, std::ostream& out) {
  const auto p = parse_permutation(perm);
  StackSorter sorter(PatternSet::parse(s.patterns));
  Permutation cur = p;
  MachineTrace last;
  for (std::size_t i = 0; i < passes; ++i) {
    if (trace && i + 1 == passes) {
      auto [next, tr] = sorter.apply_traced(cur);
      cur = std::move(next);
      last = std::move(tr);
    } else {
      cur = sorter.apply(cur);
    }
  }
  out << to_string(cur) << '\n';
  if (trace && passes > 0) out << to_string(last);
  return kExitOk;
}

int cmd_orbit(const Settings& s, const std::string& perm, std::ostream& out) {
  const auto p = parse_permutation(perm);
  const auto t = PatternSet::parse(s.patterns);
  const auto o = orbit(p, t);
  out << "patterns: " << to_string(t) << '\n'
      << "start: " << to_string(o.start) << '\n'
      << "tail: " << o.tail_length << '\n'
      << "cycle: " << o.cycle_length << '\n'
      << "entry: " << to_string(o.entry_point) << '\n';
  return kExitOk;
}

int cmd_structure(const std::string& perm, std::ostream& out) {
  const auto p = parse_permutation(perm);
  const auto d = decompose(p);
  out << format_decomposition(p, d) << '\n';
  out << "valleys:";
  for (auto v : d.valleys) out << ' ' << v;
  out << "\nboundary: " << d.boundary << (d.has_region ? "" : " (no region)") << '\n';
  out << "half-decreasing: " << (is_half_decreasing(p) ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_enumerate(const Settings& s, const std::string& quantity, std::size_t n, std::size_t passes,
                  SortableReading reading, const std::string& dump_path, std::ostream& out) {
  const auto t = PatternSet::parse(s.patterns);
  const auto ts = to_string(t);
  check_ceiling(n, s.options);
  EnumerationReport report;
  report.command = "enumerate " + quantity;
  report.patterns = ts;
  report.n_min = report.n_max = n;
  auto dump = open_dump(dump_path);

  if (quantity == "ord-distribution") {
    const auto hist = ord_distribution(n, t, s.options);
    for (std::size_t k = 0; k < hist.size(); ++k) report.add(n, ts, "ord=" + std::to_string(k), std::to_string(hist[k]));
  } else if (quantity == "minimally-sorted") {
    if (!(t == patterns_123_132())) throw DomainError("minimally-sorted is defined for patterns 123,132");
    const auto count = for_each_minimally_sorted(n, s.options, [&](const Permutation& p) {
      if (dump) *dump << to_string(p) << '\n';
    });
    report.add(n, ts, "minimally-sorted-count", std::to_string(count));
  } else if (quantity == "periodic-points") {
    const auto pts = periodic_points(n, t, PeriodicMethod::generic, s.options);
    if (dump)
      for (const auto& p : pts) *dump << to_string(p) << '\n';
    report.add(n, ts, "periodic-count", std::to_string(pts.size()));
  } else if (quantity == "sortable-count") {
    const auto c = sortable_count(passes, n, t, reading, s.options);
    report.add(n, ts, "sortable-count[t=" + std::to_string(passes) + "]", std::to_string(c));
  } else {
    throw DomainError("unknown quantity '" + quantity + "'");
  }
  report.sort_records();
  emit_report(report, s, out);
  return kExitOk;
}

int cmd_families(const std::string& kind, std::size_t n_min, std::size_t n_max, std::ostream& out) {
  FamilyKind k;
  if (kind == "gamma")
    k = FamilyKind::gamma;
  else if (kind == "delta")
    k = FamilyKind::delta;
  else
    throw DomainError("kind must be gamma or delta");
  for (std::size_t n = n_min; n <= n_max; ++n) out << to_string(family_element(k, n).value) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laboratory for pattern-avoiding stack-sorting maps", "stacksort-lab"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--patterns", g.patterns, "Pattern set T, e.g. 123,132 or 21 (default 123,132)");
  app.add_option("--threads", g.threads, "Worker threads for enumeration (0 = all cores)");
  app.add_option("--ceiling", g.ceiling, "Largest n allowed for full S_n enumeration (default 11)");
  app.add_option("--format", g.format, "Report format: csv or json");
  app.add_option("--out", g.out, "Write the report to this file instead of stdout");
  app.add_option("--config", g.config, "Flat key = value config file");

  std::string perm;
  std::size_t passes = 1;
  bool trace = false;
  auto* sort = app.add_subcommand("sort", "Apply s_T to a permutation");
  sort->add_option("--perm", perm, "Permutation, e.g. 52431 or 10,2,3,...")->required();
  sort->add_option("--passes", passes, "Number of passes");
  sort->add_flag("--trace", trace, "Print the push/pop log of the final pass");

  auto* orb = app.add_subcommand("orbit", "Tail length, cycle length and entry point under s_T");
  orb->add_option("--perm", perm, "Permutation")->required();

  auto* structure = app.add_subcommand("structure", "Valleys, valley-blocks and the valley-boundary");
  structure->add_option("--perm", perm, "Standard permutation")->required();

  std::string target;
  std::size_t n_min = 1, n_max = 7;
  std::vector<std::size_t> t_values{1, 2};
  std::string reading_name = "periodic";
  auto* verify = app.add_subcommand("verify", "Run an exhaustive check and write a report");
  verify->add_option("target", target, "Check to run")->required()->check(CLI::IsMember(verify_targets()));
  verify->add_option("--n-min", n_min, "Smallest n");
  verify->add_option("--n-max", n_max, "Largest n");
  verify->add_option("--t", t_values, "Pass counts t for the sortable-ratio check")->delimiter(',');
  verify->add_option("--sortable-reading", reading_name, "periodic or identity")
      ->check(CLI::IsMember({"periodic", "identity"}));

  std::string quantity, dump_path;
  std::size_t n = 5;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate a quantity over S_n");
  enumerate->add_option("quantity", quantity, "ord-distribution, minimally-sorted, periodic-points, sortable-count")
      ->required()
      ->check(CLI::IsMember({"ord-distribution", "minimally-sorted", "periodic-points", "sortable-count"}));
  enumerate->add_option("--n", n, "Permutation length")->required();
  enumerate->add_option("--t", passes, "Pass count for sortable-count");
  enumerate->add_option("--sortable-reading", reading_name, "periodic or identity")
      ->check(CLI::IsMember({"periodic", "identity"}));
  enumerate->add_option("--dump", dump_path, "Write the permutations (one per line) to this file");

  std::string kind = "gamma";
  std::size_t family_min = 5, family_max = 9;
  auto* families = app.add_subcommand("families", "Print gamma_n or delta_n, one per line");
  families->add_option("--kind", kind, "gamma or delta")->check(CLI::IsMember({"gamma", "delta"}));
  families->add_option("--n-min", family_min, "Smallest n");
  families->add_option("--n-max", family_max, "Largest n");

  std::vector<const char*> argv{"stacksort-lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Settings s = resolve(g);
    const auto reading = reading_name == "identity" ? SortableReading::identity : SortableReading::periodic;
    if (*sort) return cmd_sort(s, perm, passes, trace, out);
    if (*orb) return cmd_orbit(s, perm, out);
    if (*structure) return cmd_structure(perm, out);
    if (*families) return cmd_families(kind, family_min, family_max, out);
    if (*enumerate) return cmd_enumerate(s, quantity, n, passes, reading, dump_path, out);
    if (*verify) {
      VerifyRequest req;
      req.target = target;
      req.n_min = n_min;
      req.n_max = n_max;
      if (s.patterns_explicit) req.patterns = PatternSet::parse(s.patterns);
      req.passes = t_values;
      req.reading = reading;
      req.options = s.options;
      auto report = run_verify(req);
      emit_report(report, s, out);
      return report.has_failure() ? kExitCounterexample : kExitOk;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace stacksort::lab
