// acmtetra: command-line front end for the tetrahedral-curve ACM deciders.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "acmtetra/acmtetra.hpp"

namespace {

using namespace acmtetra;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagree = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string p_text;
  std::string method_text;
  std::string format = "text";
  std::string out_path;
  std::string general_file;
  long long max = -1;
  bool with_homology = false;
  unsigned jobs = 0;
  Limits limits;
};

ExponentVector parse_vector(const std::string& text) {
  std::vector<std::uint32_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    long long x = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw UsageError("--p: '" + item + "' is not an integer");
    if (x < 0) throw UsageError("--p: exponents must be nonnegative");
    if (x > kMaxInputExponent) throw UsageError("--p: exponents are limited to " + std::to_string(kMaxInputExponent));
    values.push_back(static_cast<std::uint32_t>(x));
  }
  if (!text.empty() && text.back() == ',') throw UsageError("--p: trailing comma");
  if (values.size() != 6) throw UsageError("--p expects six comma-separated integers, got " + std::to_string(values.size()));
  ExponentVector p{};
  std::copy(values.begin(), values.end(), p.p.begin());
  return p;
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") {
      out.assign(std::begin(kAllMethods), std::end(kAllMethods));
      continue;
    }
    Method m;
    if (item == "closed") m = Method::closed_form;
    else if (item == "witness") m = Method::witness;
    else if (item == "chordal") m = Method::chordal;
    else if (item == "betti") m = Method::linear_resolution;
    else if (item == "reisner") m = Method::reisner;
    else throw UsageError("unknown method '" + item + "' (closed|witness|chordal|betti|reisner|all)");
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  if (out.empty()) throw UsageError("no method selected");
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open output file " + path);
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

json vector_json(const ExponentVector& p) { return json(std::vector<std::uint32_t>(p.p.begin(), p.p.end())); }

bool verdicts_agree(const std::vector<AcmVerdict>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](const AcmVerdict& v) { return v.acm == vs.front().acm; });
}

void print_verdicts(std::ostream& os, const std::string& format, const json& input, const std::vector<AcmVerdict>& vs,
                    const Universe& names, const ExponentVector* p) {
  const bool agree = verdicts_agree(vs);
  if (format == "json") {
    json out;
    out["input"] = input;
    out["verdicts"] = json::array();
    for (const auto& v : vs) out["verdicts"].push_back(to_json(v, names));
    out["agree"] = agree;
    os << out.dump(2) << "\n";
  } else if (format == "csv") {
    if (!p) throw UsageError("csv output needs an exponent vector");
    os << kCsvHeader << "\n";
    for (const auto& v : vs) os << csv_row(*p, v) << "\n";
  } else {
    for (const auto& v : vs) {
      os << render(v, names) << "\n";
      if (v.betti) os << render(*v.betti);
    }
    if (vs.size() > 1) os << (agree ? "all methods agree" : "METHODS DISAGREE") << "\n";
  }
}

int cmd_classify(const RunConfig& cfg) {
  const ExponentVector p = parse_vector(cfg.p_text);
  const auto methods = parse_methods(cfg.method_text.empty() ? "all" : cfg.method_text);
  std::vector<AcmVerdict> vs;
  for (Method m : methods) vs.push_back(classify(p, m, cfg.limits));
  Output out(cfg.out_path);
  print_verdicts(out.stream(), cfg.format, vector_json(p), vs, tetrahedral_names(), &p);
  return verdicts_agree(vs) ? kExitOk : kExitDisagree;
}

std::string render_certificate(const ChordalityCertificate& c, const Universe& names) {
  if (c.chordal) return "chordal, perfect elimination order: " + render_vertices(names, *c.elimination_order);
  return "not chordal, chordless cycle: " + render_vertices(names, *c.chordless_cycle, " - ");
}

json graph_json(const Graph& g) {
  json out;
  out["vertices"] = json::array();
  for (VarId v : g.vertices()) out["vertices"].push_back(g.universe().name(v));
  out["edges"] = json::array();
  for (auto [u, v] : g.edges())
    out["edges"].push_back({g.universe().name(g.vertex(u)), g.universe().name(g.vertex(v))});
  return out;
}

int cmd_pipeline(const RunConfig& cfg) {
  const ExponentVector p = parse_vector(cfg.p_text);
  const PipelineStages s = run_pipeline(p, cfg.limits);
  const Universe& names = s.polarization.universe();
  Output out(cfg.out_path);
  std::ostream& os = out.stream();
  if (cfg.format == "json") {
    json j;
    j["input"] = vector_json(p);
    j["ideal"] = render(s.ideal);
    j["polarization"] = render(s.polarization);
    j["dual"] = render(s.dual);
    j["graph"] = graph_json(s.graph);
    j["complement"] = graph_json(s.complement_graph);
    j["certificate"] = to_json(s.certificate, names);
    j["acm"] = s.acm;
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    throw UsageError("pipeline supports text and json output");
  } else {
    os << "ideal: " << render(s.ideal) << "\n";
    os << "polarization: " << render(s.polarization) << "\n";
    os << "dual: " << render(s.dual) << "\n";
    os << "graph:\n" << render(s.graph);
    os << "complement:\n" << render(s.complement_graph);
    os << "certificate: " << render_certificate(s.certificate, names) << "\n";
    os << "verdict: " << (s.acm ? "ACM" : "not ACM") << "\n";
  }
  return kExitOk;
}

unsigned job_count(const RunConfig& cfg) {
  unsigned n = cfg.jobs ? cfg.jobs : std::thread::hardware_concurrency();
  return std::max(1u, n);
}

// Runs work(p1) for every leading coordinate on a pool of threads; results are
// indexed by p1 so callers can emit them in order.
template <class Result, class Work>
std::vector<Result> by_leading_coordinate(std::uint32_t max, unsigned jobs, Work work) {
  std::vector<Result> results(max + 1);
  std::atomic<std::uint32_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint32_t p1; (p1 = next.fetch_add(1)) <= max;) {
      try {
        results[p1] = work(p1);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<unsigned>(jobs, max + 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

template <class F>
void for_each_tail(std::uint32_t p1, std::uint32_t max, F f) {
  ExponentVector p{};
  p.p[0] = p1;
  for (p.p[1] = 0; p.p[1] <= max; ++p.p[1])
    for (p.p[2] = 0; p.p[2] <= max; ++p.p[2])
      for (p.p[3] = 0; p.p[3] <= max; ++p.p[3])
        for (p.p[4] = 0; p.p[4] <= max; ++p.p[4])
          for (p.p[5] = 0; p.p[5] <= max; ++p.p[5]) f(p);
}

std::uint32_t checked_max(const RunConfig& cfg) {
  if (cfg.max < 0) throw UsageError("--max must be given and nonnegative");
  if (cfg.max > kMaxInputExponent) throw UsageError("--max is limited to " + std::to_string(kMaxInputExponent));
  return static_cast<std::uint32_t>(cfg.max);
}

int cmd_enumerate(const RunConfig& cfg) {
  const std::uint32_t max = checked_max(cfg);
  const auto methods = parse_methods(cfg.method_text.empty() ? "closed" : cfg.method_text);
  if (methods.size() != 1) throw UsageError("enumerate takes a single method");
  const Method method = methods.front();

  using Rows = std::vector<std::pair<ExponentVector, AcmVerdict>>;
  auto chunks = by_leading_coordinate<Rows>(max, job_count(cfg), [&](std::uint32_t p1) {
    Rows rows;
    for_each_tail(p1, max, [&](const ExponentVector& p) { rows.emplace_back(p, classify(p, method, cfg.limits)); });
    return rows;
  });

  Output out(cfg.out_path);
  std::ostream& os = out.stream();
  std::size_t total = 0, acm = 0;
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& chunk : chunks)
      for (const auto& [p, v] : chunk) rows.push_back({{"p", vector_json(p)}, {"verdict", to_json(v)}});
    os << rows.dump(2) << "\n";
    return kExitOk;
  }
  if (cfg.format == "csv") os << kCsvHeader << "\n";
  for (const auto& chunk : chunks)
    for (const auto& [p, v] : chunk) {
      ++total;
      acm += v.acm;
      os << (cfg.format == "csv" ? csv_row(p, v) : render(p) + "  " + render(v)) << "\n";
    }
  if (cfg.format == "text") os << total << " vectors, " << acm << " ACM\n";
  return kExitOk;
}

struct CrosscheckRow {
  ExponentVector p;
  std::vector<std::pair<Method, std::optional<bool>>> verdicts;  // nullopt: skipped at resource limit
  bool disagree = false;
};

struct CrosscheckChunk {
  std::size_t checked = 0, skipped = 0;
  std::vector<CrosscheckRow> discrepancies;
};

int cmd_crosscheck(const RunConfig& cfg) {
  const std::uint32_t max = checked_max(cfg);
  std::vector<Method> methods = {Method::closed_form, Method::witness, Method::chordal};
  if (cfg.with_homology) {
    methods.push_back(Method::linear_resolution);
    methods.push_back(Method::reisner);
  }

  auto chunks = by_leading_coordinate<CrosscheckChunk>(max, job_count(cfg), [&](std::uint32_t p1) {
    CrosscheckChunk chunk;
    for_each_tail(p1, max, [&](const ExponentVector& p) {
      CrosscheckRow row{p, {}, false};
      std::optional<bool> first;
      for (Method m : methods) {
        std::optional<bool> acm;
        try {
          acm = classify(p, m, cfg.limits).acm;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::resource_limit) throw;
          ++chunk.skipped;
        }
        if (acm && first && *acm != *first) row.disagree = true;
        if (acm && !first) first = acm;
        row.verdicts.emplace_back(m, acm);
      }
      ++chunk.checked;
      if (row.disagree) chunk.discrepancies.push_back(std::move(row));
    });
    return chunk;
  });

  std::size_t checked = 0, skipped = 0;
  std::vector<CrosscheckRow> bad;
  for (auto& c : chunks) {
    checked += c.checked;
    skipped += c.skipped;
    for (auto& r : c.discrepancies) bad.push_back(std::move(r));
  }

  Output out(cfg.out_path);
  std::ostream& os = out.stream();
  auto verdict_word = [](const std::optional<bool>& b) { return b ? (*b ? "ACM" : "not_ACM") : "skipped"; };
  if (cfg.format == "json") {
    json j;
    j["max"] = max;
    j["vectors"] = checked;
    j["methods"] = json::array();
    for (Method m : methods) j["methods"].push_back(to_string(m));
    j["skipped"] = skipped;
    j["discrepancies"] = json::array();
    for (const auto& r : bad) {
      json row{{"p", vector_json(r.p)}};
      for (const auto& [m, b] : r.verdicts) row[to_string(m)] = verdict_word(b);
      j["discrepancies"].push_back(row);
    }
    os << j.dump(2) << "\n";
  } else {
    for (const auto& r : bad) {
      os << "discrepancy at " << render(r.p) << ":";
      for (const auto& [m, b] : r.verdicts) os << " " << to_string(m) << "=" << verdict_word(b);
      os << "\n";
    }
    os << checked << " vectors, " << methods.size() << " methods, " << bad.size() << " discrepancies";
    if (skipped) os << ", " << skipped << " homology evaluations skipped at the resource limit";
    os << "\n";
  }
  return bad.empty() ? kExitOk : kExitDisagree;
}

int cmd_general(const RunConfig& cfg) {
  std::ifstream in(cfg.general_file);
  if (!in) throw UsageError("cannot read " + cfg.general_file);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed input file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("p") || !doc["n"].is_number_integer() ||
      !doc["p"].is_array())
    throw UsageError("input file must be a JSON object {\"n\": int, \"p\": [[...], ...]}");
  std::vector<std::vector<long long>> rows;
  try {
    rows = doc["p"].get<std::vector<std::vector<long long>>>();
  } catch (const json::exception&) {
    throw UsageError("\"p\" must be a matrix of integers");
  }
  if (doc["n"].get<long long>() != static_cast<long long>(rows.size()))
    throw UsageError("\"n\" does not match the number of rows of \"p\"");
  const PairExponents pairs = PairExponents::from_rows(rows);

  const auto methods = parse_methods(cfg.method_text.empty() ? "chordal" : cfg.method_text);
  std::vector<AcmVerdict> vs;
  std::optional<ExponentVector> p;
  if (pairs.n() == 4) p = pairs.to_vector();
  for (Method m : methods) {
    if (m == Method::closed_form || m == Method::witness) {
      if (!p) throw UsageError(std::string("method ") + to_string(m) + " only applies to four variables (n = 4)");
      vs.push_back(classify(*p, m, cfg.limits));
    } else if (m == Method::chordal) {
      vs.push_back(acm_via_chordality(pairs));
    } else if (m == Method::linear_resolution) {
      vs.push_back(acm_via_linear_resolution(pairs, cfg.limits));
    } else {
      vs.push_back(acm_via_reisner(pairs, cfg.limits));
    }
  }
  Output out(cfg.out_path);
  print_verdicts(out.stream(), cfg.format, doc, vs, polarized_universe(pairs), p ? &*p : nullptr);
  return verdicts_agree(vs) ? kExitOk : kExitDisagree;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool methods) {
  if (methods) cmd->add_option("--method", cfg.method_text, "closed|witness|chordal|betti|reisner|all, comma separated");
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", cfg.out_path, "write output to this file");
  cmd->add_option("--jobs", cfg.jobs, "worker threads (default: all cores)")->envname("ACMTETRA_JOBS")->check(CLI::PositiveNumber);
  cmd->add_option("--homology-max-vertices", cfg.limits.homology_max_vertices, "vertex cap for homology methods")
      ->check(CLI::Range(1, 20));
  cmd->add_option("--transversal-cap", cfg.limits.transversal_cap, "candidate cap for minimal transversals")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide arithmetic Cohen-Macaulayness of tetrahedral curves"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* classify_cmd = app.add_subcommand("classify", "classify one exponent vector");
  classify_cmd->add_option("--p", cfg.p_text, "six comma-separated exponents p1..p6")->required();
  add_common(classify_cmd, cfg, true);

  auto* pipeline_cmd = app.add_subcommand("pipeline", "print every stage of the graph reduction");
  pipeline_cmd->add_option("--p", cfg.p_text, "six comma-separated exponents p1..p6")->required();
  add_common(pipeline_cmd, cfg, false);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "classify every vector with entries <= max");
  enumerate_cmd->add_option("--max", cfg.max, "largest exponent")->required();
  add_common(enumerate_cmd, cfg, true);

  auto* crosscheck_cmd = app.add_subcommand("crosscheck", "compare deciders on every vector with entries <= max");
  crosscheck_cmd->add_option("--max", cfg.max, "largest exponent")->required();
  crosscheck_cmd->add_flag("--with-homology", cfg.with_homology, "also run the Betti and Reisner deciders");
  add_common(crosscheck_cmd, cfg, false);

  auto* general_cmd = app.add_subcommand("general", "classify an n-variable pair exponent matrix");
  general_cmd->add_option("file", cfg.general_file, "JSON file {\"n\": int, \"p\": [[...]]}")->required();
  add_common(general_cmd, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg);
    if (*pipeline_cmd) return cmd_pipeline(cfg);
    if (*enumerate_cmd) return cmd_enumerate(cfg);
    if (*crosscheck_cmd) return cmd_crosscheck(cfg);
    return cmd_general(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands()) std::cerr << sub->help();
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
