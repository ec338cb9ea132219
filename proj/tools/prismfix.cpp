// prismfix: command-line front end for the prism domination library.
//
// Exit codes: 0 success, 1 parse or usage error, 2 not applicable,
// 3 bad vertex, 4 guard exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prismfix/domination.hpp"
#include "prismfix/errors.hpp"
#include "prismfix/graph_io.hpp"
#include "prismfix/report.hpp"
#include "prismfix/verify.hpp"

namespace {

using namespace prismfix;

enum Exit : int { kOk = 0, kUsage = 1, kNotApplicable = 2, kBadVertex = 3, kGuard = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string g6;
  std::string edges;
  std::string input;
  std::string format = "g6";

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--g6", g6, "graph6 string");
    auto* b = cmd->add_option("--edges", edges, "edge-list file, or - for stdin");
    auto* c = cmd->add_option("--input", input, "graph file, or - for stdin");
    a->excludes(b, c);
    b->excludes(c);
    cmd->add_option("--format", format, "format of --input")->check(CLI::IsMember({"g6", "edges"}));
  }
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string first_line(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  return {};
}

Graph read_graph(const GraphInput& in) {
  if (!in.g6.empty()) return parse_graph6(in.g6);
  if (!in.edges.empty()) return parse_edge_list(slurp(in.edges));
  if (!in.input.empty()) {
    const std::string text = slurp(in.input);
    return in.format == "edges" ? parse_edge_list(text) : parse_graph6(first_line(text));
  }
  throw UsageError("no graph given; use --g6, --edges or --input");
}

std::string set_text(const VertexSet& s, bool primed = false) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    out += (first ? "" : ", ") + std::to_string(v) + (primed ? "'" : "");
    first = false;
  }
  return out + "}";
}

std::string opt_text(const std::optional<Vertex>& v) { return v ? std::to_string(*v) : "-"; }

void emit_json(const ReportRecord& r) { std::cout << serialize(r) << '\n'; }

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    if (!enabled_) return;
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << "time: " << ms << " ms\n";
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

int run_gamma(const GraphInput& in, bool all, bool json) {
  const Graph g = read_graph(in);
  const auto r = domination_number(g);
  std::optional<std::vector<VertexSet>> sets;
  if (all) sets = enumerate_gamma_sets(g, r.gamma);
  if (json) {
    emit_json(gamma_record(g, r, sets ? &*sets : nullptr));
    return kOk;
  }
  std::cout << "gamma: " << r.gamma << "\nwitness: " << set_text(r.witness) << '\n';
  if (sets) {
    std::cout << "gamma-sets: " << sets->size() << '\n';
    for (const auto& s : *sets) std::cout << "  " << set_text(s) << '\n';
  }
  return kOk;
}

int run_analyze(const GraphInput& in, bool json) {
  const Graph g = read_graph(in);
  if (json) {
    emit_json(analyze_record(g));
    return kOk;
  }
  const Girth gi = girth(g);
  const auto r = domination_number(g);
  std::cout << "order: " << g.order() << "\nedges: " << g.edge_count()
            << "\ngirth: " << (gi.is_infinite() ? std::string("infinite") : std::to_string(gi.length()))
            << "\nC3-free vertices: " << set_text(c3_free_vertices(g)) << "\ngamma: " << r.gamma
            << "\nwitness: " << set_text(r.witness)
            << "\nseparable gamma-sets: " << enumerate_separable(g, enumerate_gamma_sets(g, r.gamma)).size() << '\n';
  return kOk;
}

std::string contradiction_text(const Contradiction& c) {
  const bool copy_side = c.kind != ContradictionKind::SourcePackingOverlap;
  std::string out(to_string(c.kind));
  for (Vertex v : c.vertices) out += " " + std::to_string(v) + (copy_side ? "'" : "");
  return out;
}

void print_certificate(const AdversaryCertificate& cert) {
  auto ok = [](bool b) { return b ? "ok" : "FAILED"; };
  std::cout << "graph: " << cert.graph6 << " (n=" << cert.order << ")\n"
            << "x: " << cert.x << "\n"
            << "pi: " << cert.pi.to_image_notation() << "  cycles " << cert.pi.to_cycle_notation()
            << (cert.randomized ? "  (randomized)" : "") << "\n"
            << "gamma(G): " << cert.gamma << "\n"
            << "gamma(piG): " << cert.prism_gamma << "\n"
            << "adversary conditions: " << ok(cert.adversary_conditions_ok) << "\n"
            << "bounds gamma <= gamma(piG) <= 2 gamma: " << ok(cert.bounds_ok) << "\n"
            << "no effective separable gamma-set: " << ok(cert.no_effective_ok) << "\n"
            << "strict increase: " << ok(cert.gamma_strict_increase_ok) << "\n"
            << "every record classified: " << ok(cert.classification_ok) << "\n"
            << "separable gamma-sets: " << cert.records.size() << "\n";
  for (const auto& r : cert.records) {
    std::cout << "  A=" << set_text(r.sep.a) << " A1=" << set_text(r.sep.a1) << " A2=" << set_text(r.sep.a2) << "  ";
    if (!r.failure) {
      std::cout << "error: " << r.error << '\n';
      continue;
    }
    const auto& f = *r.failure;
    std::cout << to_string(f.tag) << " v=" << opt_text(f.v) << " u=" << opt_text(f.u) << " w=" << opt_text(f.w)
              << " z=" << opt_text(f.z) << "  " << contradiction_text(f.contradiction)
              << (f.proof_step_literal ? "" : "  (direct search)") << '\n';
  }
  for (const auto& a : cert.anomalies) std::cout << "anomaly: " << a << '\n';
  std::cout << "certificate: " << (cert.passed() ? "PASSED" : "FAILED") << '\n';
}

int run_adversary(const GraphInput& in, std::optional<Vertex> vertex, bool random, std::optional<std::uint64_t> seed,
                  std::optional<std::size_t> guard, bool json) {
  if (random && !seed) throw UsageError("--random-derangement requires --seed");
  if (seed && !random) throw UsageError("--seed only applies with --random-derangement");
  const Graph g = read_graph(in);
  CheckOptions opts;
  opts.vertex = vertex;
  if (random) opts.random_seed = seed;
  opts.guard = guard ? *guard : guard_from_env(kDefaultCheckGuard);
  const CheckOutcome outcome = check_graph(g, opts);
  if (json) emit_json(adversary_record(outcome));
  if (const auto* na = std::get_if<NotApplicable>(&outcome)) {
    if (!json) std::cout << "not applicable: " << na->reason << '\n';
    return kNotApplicable;
  }
  const auto& cert = std::get<AdversaryCertificate>(outcome);
  if (!json) print_certificate(cert);
  if (!cert.passed()) std::cerr << "certificate FAILED for " << cert.graph6 << '\n';
  return kOk;
}

int run_fixer(const GraphInput& in, std::optional<std::size_t> guard, bool reduce, bool json) {
  const Graph g = read_graph(in);
  FixerOptions opts;
  opts.guard = guard ? *guard : guard_from_env(kDefaultFixerGuard);
  opts.automorphism_reduction = reduce;
  const auto v = is_universal_fixer(g, opts);
  if (json) {
    emit_json(fixer_record(v));
    return kOk;
  }
  std::cout << "gamma: " << v.gamma << "\nuniversal fixer: " << (v.is_universal_fixer ? "yes" : "no") << '\n';
  if (v.witness_pi)
    std::cout << "witness: " << v.witness_pi->to_image_notation() << "\ngamma(piG): " << *v.witness_prism_gamma
              << '\n';
  std::cout << "permutations tested: " << v.permutations_tested << '\n';
  return kOk;
}

int run_sweep(const std::string& path, std::size_t jobs, const std::string& out_path, std::optional<std::size_t> guard,
              bool reduce) {
  std::vector<std::string> lines;
  {
    std::istringstream in(slurp(path));
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  SweepOptions opts;
  opts.jobs = jobs;
  opts.fixer.guard = guard ? *guard : guard_from_env(kDefaultFixerGuard);
  opts.fixer.automorphism_reduction = reduce;
  opts.check_guard = guard_from_env(kDefaultCheckGuard);
  const auto report = conjecture_sweep(lines, opts);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  for (const auto& r : sweep_records(report)) out << serialize(r) << '\n';

  const auto& s = report.summary;
  std::cerr << "fixers: " << s.universal_fixers << " / " << s.graphs << ", edgeless: " << s.edgeless
            << ", parse failures: " << s.parse_failures << ", guard failures: " << s.guard_failures
            << ", certificates passed: " << s.certificates_passed << " / " << s.applicable << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination in permutation prisms: gamma, fixer status and adversary certificates."};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "report wall-clock time on stderr");

  GraphInput gamma_in, analyze_in, adversary_in, fixer_in;
  bool all = false, json = false, random = false, reduce = false;
  std::optional<Vertex> vertex;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> guard;
  std::string sweep_path, out_path;
  std::size_t jobs = 1;

  auto* gamma = app.add_subcommand("gamma", "domination number and a witness set");
  gamma_in.attach(gamma);
  gamma->add_flag("--all", all, "list every minimum dominating set");
  gamma->add_flag("--json", json, "emit one JSON record");

  auto* analyze = app.add_subcommand("analyze", "structural summary of a graph");
  analyze_in.attach(analyze);
  analyze->add_flag("--json", json, "emit one JSON record");

  auto* adversary = app.add_subcommand("adversary", "build the adversary permutation and certify it");
  adversary_in.attach(adversary);
  adversary->add_option("--vertex", vertex, "C3-free vertex to use (default: smallest)");
  adversary->add_flag("--random-derangement", random, "draw a random conforming permutation (needs --seed)");
  adversary->add_option("--seed", seed, "seed for --random-derangement");
  adversary->add_option("--guard", guard, "largest order accepted");
  adversary->add_flag("--json", json, "emit one JSON record");

  auto* fixer = app.add_subcommand("fixer", "decide universal fixer status exhaustively");
  fixer_in.attach(fixer);
  fixer->add_option("--guard", guard, "largest order accepted");
  fixer->add_flag("--automorphism-reduction", reduce, "test one permutation per automorphism double coset");
  fixer->add_flag("--json", json, "emit one JSON record");

  auto* sweep = app.add_subcommand("sweep", "fixer verdicts and certificates for a graph6 corpus (JSON lines)");
  sweep->add_option("corpus", sweep_path, "graph6 file, or - for stdin")->required();
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_path, "write records here instead of stdout");
  sweep->add_option("--guard", guard, "largest order for the fixer test");
  sweep->add_flag("--automorphism-reduction", reduce, "test one permutation per automorphism double coset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Timer timer(timing);
  try {
    if (*gamma) return run_gamma(gamma_in, all, json);
    if (*analyze) return run_analyze(analyze_in, json);
    if (*adversary) return run_adversary(adversary_in, vertex, random, seed, guard, json);
    if (*fixer) return run_fixer(fixer_in, guard, reduce, json);
    if (*sweep) return run_sweep(sweep_path, jobs, out_path, guard, reduce);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotC3FreeError& e) {
    std::cerr << "bad vertex: " << e.what() << '\n';
    return kBadVertex;
  } catch (const GuardError& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
