#include "prismfix/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <string_view>
#include <thread>

#include "prismfix/domination.hpp"
#include "prismfix/errors.hpp"
#include "prismfix/graph_io.hpp"

namespace prismfix {

namespace {

void enforce_guard(const Graph& g, std::size_t guard, std::string_view what) {
  if (g.order() > guard)
    throw GuardError(std::string(what) + " is limited to " + std::to_string(guard) + " vertices, got " +
                     std::to_string(g.order()));
}

std::string graph6_or_blank(const Graph& g) { return g.order() <= kMaxGraph6Order ? to_graph6(g) : std::string{}; }

// Lehmer-code rank of a permutation among all n! in lexicographic order.
std::uint64_t permutation_rank(const Permutation& p) {
  const std::size_t n = p.size();
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = p(i);
    const auto smaller_unused = static_cast<std::uint64_t>(std::popcount(~used & ((1U << v) - 1)));
    rank = rank * (n - i) + smaller_unused;
    used |= 1U << v;
  }
  return rank;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// A generating set of the automorphism group, built greedily: an
// automorphism becomes a generator when the group generated so far misses it.
std::vector<Permutation> automorphism_generators(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Permutation> gens;
  std::vector<bool> in_group(factorial(n), false);
  auto close = [&] {
    std::fill(in_group.begin(), in_group.end(), false);
    std::vector<Permutation> stack{Permutation::identity(n)};
    in_group[permutation_rank(stack.back())] = true;
    while (!stack.empty()) {
      const Permutation p = stack.back();
      stack.pop_back();
      for (const auto& s : gens) {
        Permutation q = s.after(p);
        const auto r = permutation_rank(q);
        if (!in_group[r]) {
          in_group[r] = true;
          stack.push_back(std::move(q));
        }
      }
    }
  };
  close();
  for (const auto& a : automorphisms(g)) {
    if (in_group[permutation_rank(a)]) continue;
    gens.push_back(a);
    close();
  }
  return gens;
}

}  // namespace

std::size_t guard_from_env(std::size_t fallback) {
  const char* raw = std::getenv("PRISM_FIXER_GUARD");
  if (raw == nullptr) return fallback;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) return fallback;
  return value;
}

CheckOutcome check_graph(const Graph& g, const CheckOptions& options) {
  enforce_guard(g, options.guard, "check_graph");

  Vertex x = 0;
  if (options.vertex) {
    x = *options.vertex;
    if (x >= g.order() || !is_c3_free_vertex(g, x))
      throw NotC3FreeError("vertex " + std::to_string(x) + " is not a C3-free vertex");
  } else {
    const VertexSet candidates = c3_free_vertices(g);
    if (candidates.empty()) return NotApplicable{graph6_or_blank(g), "no C3-free vertex"};
    x = candidates.first();
  }

  AdversaryCertificate cert;
  cert.graph6 = graph6_or_blank(g);
  cert.order = g.order();
  cert.x = x;
  cert.randomized = options.random_seed.has_value();
  cert.pi = cert.randomized ? random_adversary_permutation(g, x, *options.random_seed) : adversary_permutation(g, x);

  cert.gamma = domination_number(g).gamma;
  const auto gamma_sets = enumerate_gamma_sets(g, cert.gamma);
  const auto records = enumerate_separable(g, gamma_sets);
  cert.prism_gamma = prism_gamma(g, cert.pi);

  cert.adversary_conditions_ok = check_adversary_conditions(g, x, cert.pi).all();
  cert.bounds_ok = cert.gamma <= cert.prism_gamma && cert.prism_gamma <= 2 * cert.gamma;
  cert.no_effective_ok = !exists_effective(g, records, cert.pi).has_value();
  cert.gamma_strict_increase_ok = cert.prism_gamma >= cert.gamma + 1;

  cert.classification_ok = true;
  for (std::size_t i = 0; i < records.size(); ++i) {
    ClassifiedRecord rec{records[i], std::nullopt, {}};
    const std::string where = "record " + std::to_string(i) + ": ";
    try {
      rec.failure = classify_failure(g, records[i], cert.pi, x);
      if (!rec.failure->anomaly.empty()) cert.anomalies.push_back(where + rec.failure->anomaly);
    } catch (const CounterexampleError& e) {
      rec.error = std::string("counterexample: ") + e.what();
    } catch (const ClassificationError& e) {
      rec.error = std::string("unclassified: ") + e.what();
    }
    if (!rec.failure) {
      cert.classification_ok = false;
      cert.anomalies.push_back(where + rec.error);
    }
    cert.records.push_back(std::move(rec));
  }
  return cert;
}

std::vector<Permutation> automorphisms(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Permutation> out;
  std::vector<Vertex> image(n);
  std::vector<bool> used(n, false);

  // Assign images in vertex order; each new pair must agree with all earlier ones.
  auto extend = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      out.push_back(Permutation::from_images(image));
      return;
    }
    for (Vertex c = 0; c < n; ++c) {
      if (used[c] || g.degree(c) != g.degree(v)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], c);
      if (!ok) continue;
      image[v] = c;
      used[c] = true;
      self(self, v + 1);
      used[c] = false;
    }
  };
  extend(extend, 0);
  return out;
}

FixerVerdict is_universal_fixer(const Graph& g, const FixerOptions& options) {
  enforce_guard(g, options.guard, "is_universal_fixer");
  FixerVerdict verdict;
  verdict.graph6 = graph6_or_blank(g);
  verdict.order = g.order();
  verdict.gamma = domination_number(g).gamma;
  verdict.automorphism_reduction = options.automorphism_reduction;
  verdict.is_universal_fixer = true;

  std::vector<Permutation> gens;
  std::vector<bool> seen;
  if (options.automorphism_reduction) {
    if (g.order() > 10) throw GuardError("automorphism reduction is limited to 10 vertices");
    gens = automorphism_generators(g);
    seen.assign(factorial(g.order()), false);
  }

  Permutation pi = Permutation::identity(g.order());
  do {
    if (options.automorphism_reduction) {
      const auto r = permutation_rank(pi);
      if (seen[r]) continue;
      // Mark the whole double coset Aut·π·Aut; prisms over it are isomorphic.
      seen[r] = true;
      std::vector<Permutation> stack{pi};
      while (!stack.empty()) {
        const Permutation p = stack.back();
        stack.pop_back();
        for (const auto& s : gens) {
          for (Permutation q : {s.after(p), p.after(s)}) {
            const auto rq = permutation_rank(q);
            if (!seen[rq]) {
              seen[rq] = true;
              stack.push_back(std::move(q));
            }
          }
        }
      }
    }
    ++verdict.permutations_tested;
    const std::size_t pg = prism_gamma(g, pi);
    if (pg > verdict.gamma) {
      verdict.is_universal_fixer = false;
      verdict.witness_pi = pi;
      verdict.witness_prism_gamma = pg;
      break;
    }
  } while (pi.advance());
  return verdict;
}

std::vector<Theorem2Discrepancy> theorem2_biconditional_probe(const Graph& g, std::size_t guard) {
  if (g.is_edgeless()) throw std::invalid_argument("the biconditional excludes edgeless graphs");
  enforce_guard(g, guard, "theorem2_biconditional_probe");

  const std::size_t gamma = domination_number(g).gamma;
  const auto records = enumerate_separable(g, enumerate_gamma_sets(g, gamma));
  std::vector<Theorem2Discrepancy> out;
  Permutation pi = Permutation::identity(g.order());
  do {
    const std::size_t pg = prism_gamma(g, pi);
    auto witness = exists_effective(g, records, pi);
    if ((pg == gamma) != witness.has_value()) out.push_back({pi, pg, gamma, std::move(witness)});
  } while (pi.advance());
  return out;
}

SweepReport conjecture_sweep(std::span<const std::string> lines, const SweepOptions& options) {
  std::vector<SweepEntry> entries;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view text = lines[i];
    while (!text.empty() && (text.back() == '\r' || text.back() == '\n' || text.back() == ' ')) text.remove_suffix(1);
    if (text.empty()) continue;
    SweepEntry e;
    e.line = i + 1;
    e.input = std::string(text);
    entries.push_back(std::move(e));
  }

  auto process = [&](SweepEntry& e) {
    Graph g;
    try {
      g = parse_graph6(e.input);
    } catch (const ParseError& err) {
      e.error = std::string("parse error: ") + err.what();
      return;
    }
    e.edgeless = g.is_edgeless();
    try {
      e.verdict = is_universal_fixer(g, options.fixer);
      e.adversary = check_graph(g, CheckOptions{std::nullopt, std::nullopt, options.check_guard});
    } catch (const GuardError& err) {
      e.error = std::string("guard: ") + err.what();
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, entries.size()));
  if (jobs == 1) {
    for (auto& e : entries) process(e);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (std::size_t j = 0; j < jobs; ++j)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) process(entries[i]);
      });
    for (auto& w : workers) w.join();
  }

  std::sort(entries.begin(), entries.end(), [](const SweepEntry& a, const SweepEntry& b) {
    return a.input != b.input ? a.input < b.input : a.line < b.line;
  });

  SweepReport report;
  auto& s = report.summary;
  for (const auto& e : entries) {
    if (e.error.rfind("parse error", 0) == 0) {
      ++s.parse_failures;
      continue;
    }
    ++s.graphs;
    if (e.edgeless) ++s.edgeless;
    if (!e.error.empty()) {
      ++s.guard_failures;
      continue;
    }
    if (e.verdict->is_universal_fixer) ++s.universal_fixers;
    if (e.verdict->is_universal_fixer != e.edgeless) s.fixers_are_edgeless = false;
    if (const auto* cert = std::get_if<AdversaryCertificate>(&*e.adversary)) {
      ++s.applicable;
      if (cert->passed()) ++s.certificates_passed;
      else ++s.certificates_failed;
    }
  }
  report.entries = std::move(entries);
  return report;
}

}  // namespace prismfix
