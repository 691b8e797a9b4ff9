#include "ybe/harness.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "ybe/catalog.hpp"
#include "ybe/perm_brace.hpp"

namespace ybe {

namespace {

// Runs check(i) for every i; each returns a counterexample or null. The
// reported counterexample is the first in index order, so output does not
// depend on scheduling.
void sweep(HarnessResult& r, std::size_t count, Exec exec, const std::function<Json(std::size_t)>& check) {
  std::vector<Json> bad(count);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i) bad[i] = check(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) bad[i] = check(i);
  }
  r.checked += count;
  for (auto& b : bad)
    if (!b.is_null()) {
      if (r.failures++ == 0) r.counterexample = std::move(b);
    }
}

std::size_t solution_bound(const HarnessOptions& o) { return o.max_order ? o.max_order : 4; }
std::size_t brace_bound(const HarnessOptions& o) { return o.max_order ? std::min<std::size_t>(o.max_order, 6) : 6; }

HarnessResult i_simple_equivalence(const HarnessOptions& o) {
  HarnessResult r;
  std::vector<FiniteSolution> corpus;
  for (auto& s : solution_corpus(solution_bound(o), o.exec))
    if (s.size() >= 2) corpus.push_back(std::move(s));
  sweep(r, corpus.size(), o.exec, [&](std::size_t i) -> Json {
    const auto& s = corpus[i];
    const bool i_simple = is_i_simple(s);
    const bool indecomposable = !is_decomposable(s).has_value();
    if (i_simple == indecomposable) return nullptr;
    return Json{{"solution", to_json(s)}, {"i_simple", i_simple}, {"indecomposable", indecomposable}};
  });
  return r;
}

HarnessResult strong_left_ideal_invariance(const HarnessOptions& o) {
  HarnessResult r;
  const auto corpus = brace_corpus(brace_bound(o));
  sweep(r, corpus.size(), o.exec, [&](std::size_t i) -> Json {
    const auto& b = corpus[i];
    for (const auto& s : enumerate_strong_left_ideals(b))
      for (Elem a = 0; a < b.size(); ++a)
        for (Elem x : s.members())
          if (!s.contains(b.lambda(a, x)) || !s.contains(b.rho(a, x)))
            return Json{{"brace", to_json(b)}, {"strong_left_ideal", s.members()}, {"a", a}, {"x", x}};
    return nullptr;
  });
  return r;
}

HarnessResult soluble_equivalence(const HarnessOptions& o) {
  HarnessResult r;
  const auto report = corollary_equivalence_harness(brace_bound(o), o.exec);
  r.checked = report.rows.size();
  r.failures = report.disagreements;
  for (const auto& row : report.rows)
    if (!row.agree()) {
      r.counterexample = Json{{"brace", to_json(row.brace)},
                              {"brace_soluble", row.brace_soluble},
                              {"search_soluble", row.search_soluble},
                              {"perm_brace_soluble", row.perm_brace_soluble}};
      break;
    }
  return r;
}

HarnessResult witness_roundtrip(const HarnessOptions& o) {
  HarnessResult r;
  const auto corpus = brace_corpus(brace_bound(o));
  sweep(r, corpus.size(), o.exec, [&](std::size_t i) -> Json {
    const auto& b = corpus[i];
    const auto chain = is_soluble_brace(b);
    if (!chain) return nullptr;
    const auto w = brace_chain_to_witness(b, *chain);
    const auto parsed = witness_from_json(to_json(w), w.source, {.strict = true});
    const auto check = verify_witness(parsed.source, parsed, {.injective_source = true});
    if (check.strict_pass()) return nullptr;
    return Json{{"brace", to_json(b)}, {"witness", to_json(w)}, {"check", to_json(check)}};
  });
  return r;
}

HarnessResult i_kernel_ideal(const HarnessOptions& o) {
  HarnessResult r;
  const auto epis = brace_i_epimorphisms(brace_bound(o));
  sweep(r, epis.size(), o.exec, [&](std::size_t i) -> Json {
    const auto& e = epis[i];
    const PermBraceOptions pbo{.exec = Exec::serial};
    const auto pb_s = PermBrace::build(e.map.source, pbo);
    const auto pb_t = PermBrace::build(e.map.target, pbo);
    for (const auto& x0 : e.i_kernels) {
      const auto rep = i_kernel_ideal_check(e.map, x0, pb_s, pb_t);
      if (!rep.ok())
        return Json{{"map", to_json(e.map)}, {"origin", e.origin}, {"i_kernel", x0}, {"detail", rep.detail}};
    }
    return nullptr;
  });
  return r;
}

HarnessResult i_epi_image_point(const HarnessOptions& o) {
  HarnessResult r;
  auto epis = brace_i_epimorphisms(brace_bound(o));
  for (const auto& s : solution_corpus(std::min<std::size_t>(solution_bound(o), 3), o.exec))
    for (auto& e : quotient_i_epimorphisms(s)) epis.push_back(std::move(e));
  sweep(r, epis.size(), o.exec, [&](std::size_t i) -> Json {
    const auto& e = epis[i];
    for (const auto& x0 : e.i_kernels)
      if (!image_point_is_trivial(e.map.target, e.map(x0.front())))
        return Json{{"map", to_json(e.map)}, {"origin", e.origin}, {"i_kernel", x0}};
    return nullptr;
  });
  return r;
}

Json perm_brace_failure(const FiniteSolution& s, const std::string& why) {
  return Json{{"solution", to_json(s)}, {"failure", why}};
}

HarnessResult perm_brace_selfcheck(const HarnessOptions& o) {
  HarnessResult r;
  std::vector<FiniteSolution> corpus = solution_corpus(solution_bound(o), o.exec);
  for (const auto& b : brace_corpus(brace_bound(o))) corpus.push_back(associated_solution(b));
  for (const auto& e : builtin_catalog()) corpus.push_back(e.solution());
  sweep(r, corpus.size(), o.exec, [&](std::size_t i) -> Json {
    const auto& s = corpus[i];
    PermBrace pb;
    try {
      pb = PermBrace::build(s, {.exec = Exec::serial});
    } catch (const InternalError& e) {
      return perm_brace_failure(s, e.what());
    }
    const SkewBrace& b = pb.brace();
    if (!validate_brace(b, Exec::serial).ok) return perm_brace_failure(s, "validate_brace");
    Subset gens(b.size());
    for (Elem x = 0; x < s.size(); ++x) gens.insert(pb.generator(x));
    if (additive_closure(b, gens) != multiplicative_closure(b, gens)) return perm_brace_failure(s, "closures differ");

    std::mt19937_64 rng(o.seed ^ (0x9e3779b97f4a7c15ull * (i + 1)));
    std::uniform_int_distribution<std::size_t> pick_len(0, 8);
    std::uniform_int_distribution<Elem> pick_elem(0, static_cast<Elem>(b.size() - 1));
    std::uniform_int_distribution<Elem> pick_gen(0, static_cast<Elem>(s.size() - 1));
    std::bernoulli_distribution pick_inverse(0.5);
    for (std::size_t trial = 0; trial < o.samples; ++trial) {
      const Elem g = pick_elem(rng);
      Word w(pick_len(rng));
      for (auto& l : w) l = letter_of(pick_gen(rng), pick_inverse(rng));
      const Elem k = pb.evaluate(w);
      const auto lw = pb.lam_eval(g, w), lk = pb.lam_eval(g, pb.witness(k));
      const auto rw = pb.rho_eval(g, w), rk = pb.rho_eval(g, pb.witness(k));
      if (lw.index != lk.index || lw.index != b.lambda(g, k) || lw.witness.size() > w.size())
        return perm_brace_failure(s, "lam_eval depends on the witness word");
      if (rw.index != rk.index || rw.index != b.rho(g, k) || rw.witness.size() > w.size())
        return perm_brace_failure(s, "rho_eval depends on the witness word");
    }
    return nullptr;
  });
  return r;
}

using Runner = HarnessResult (*)(const HarnessOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r{
      {"i-simple-equivalence", i_simple_equivalence},
      {"strong-left-ideal-invariance", strong_left_ideal_invariance},
      {"soluble-equivalence", soluble_equivalence},
      {"witness-roundtrip", witness_roundtrip},
      {"i-kernel-ideal", i_kernel_ideal},
      {"i-epi-image-point", i_epi_image_point},
      {"perm-brace-selfcheck", perm_brace_selfcheck},
  };
  return r;
}

}  // namespace

std::vector<std::string> harness_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

HarnessResult run_harness(const std::string& name, const HarnessOptions& options) {
  for (const auto& [n, run] : registry()) {
    if (n != name) continue;
    const auto t0 = std::chrono::steady_clock::now();
    HarnessResult r = run(options);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.name = name;
    if (r.checked == 0) r.warnings.push_back("empty corpus: vacuous pass");
    return r;
  }
  throw PreconditionError("unknown harness \"" + name + "\"");
}

std::vector<FiniteSolution> solution_corpus(std::size_t max_n, Exec exec) {
  std::vector<FiniteSolution> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, kMaxEnumerateAll); ++n)
    for (auto& s : enumerate_solutions(n, EnumerationMode::all, exec)) out.push_back(std::move(s));
  if (max_n >= 4)
    for (auto& s : enumerate_solutions(4, EnumerationMode::involutive, exec)) out.push_back(std::move(s));
  return out;
}

std::vector<SkewBrace> brace_corpus(std::size_t max_order) {
  std::vector<SkewBrace> out;
  for (std::size_t m = 1; m <= max_order; ++m)
    for (auto& b : enumerate_braces(m, Exec::serial)) out.push_back(std::move(b));
  return out;
}

std::vector<IEpimorphism> brace_i_epimorphisms(std::size_t max_order) {
  std::vector<IEpimorphism> out;
  for (const auto& b : brace_corpus(max_order)) {
    for (const auto& ideal : enumerate_ideals(b)) {
      const auto q = quotient_brace(b, ideal);
      auto ih = brace_hom_to_i_hom(q.projection, b, q.brace);
      auto ks = i_kernels(ih.map);
      out.push_back({std::move(ih.map), std::move(ks), "brace quotient", b, q.brace});
    }
    for (const auto& s : enumerate_strong_left_ideals(b)) {
      if (s.size() == b.size()) continue;
      auto ih = strong_left_ideal_to_i_hom(b, s);
      auto ks = i_kernels(ih.map);
      out.push_back({std::move(ih.map), std::move(ks), "strong left ideal", b, std::nullopt});
    }
  }
  return out;
}

std::vector<IEpimorphism> quotient_i_epimorphisms(const FiniteSolution& s) {
  std::vector<IEpimorphism> out;
  for (const auto& p : enumerate_congruences(s, Exec::serial)) {
    auto ks = i_kernels(s, p);
    if (ks.empty()) continue;
    auto q = quotient_solution(s, p);
    out.push_back({std::move(q->projection), std::move(ks), "solution quotient", std::nullopt, std::nullopt});
  }
  return out;
}

bool image_point_is_trivial(const FiniteSolution& target, Elem y0) {
  const auto m = static_cast<Elem>(target.size());
  for (Elem y = 0; y < m; ++y) {
    if (target.lam(y0, y) != y || target.rho(y0, y) != y) return false;
    if (target.lam(y, y0) != y0 || target.rho(y, y0) != y0) return false;
  }
  return true;
}

}  // namespace ybe
