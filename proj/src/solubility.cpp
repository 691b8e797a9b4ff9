#include "ybe/solubility.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace ybe {

std::string to_string(WitnessCondition c) {
  switch (c) {
    case WitnessCondition::none: return "none";
    case WitnessCondition::i_kernel: return "i-kernel";
    case WitnessCondition::epimorphism: return "epimorphism";
    case WitnessCondition::refinement: return "kernel refinement";
    case WitnessCondition::initial_level: return "initial level";
    case WitnessCondition::final_level: return "final level injectivity";
    case WitnessCondition::abelian_ideal: return "abelian ideal";
    case WitnessCondition::coset: return "coset";
  }
  return "unknown";
}

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::pass: return "pass";
    case WitnessStatus::conditional: return "conditional";
    case WitnessStatus::fail: return "fail";
  }
  return "unknown";
}

std::string verdict_name(const SolubilityVerdict& v) {
  if (std::holds_alternative<Soluble>(v)) return "soluble";
  if (std::holds_alternative<NotSoluble>(v)) return "not-soluble";
  return "unknown";
}

namespace {

void check_structure(const FiniteSolution& s, const SolubilityWitness& w) {
  if (w.levels.empty()) throw FormatError("witness has no levels");
  if (w.source != s) throw FormatError("witness source differs from the solution");
  const std::size_t n = s.size(), t = w.t();
  for (std::size_t k = 0; k <= t; ++k) {
    const auto& lv = w.levels[k];
    const std::string at = "level " + std::to_string(k) + ": ";
    if (lv.map.size() != n) throw FormatError(at + "map size differs from carrier size");
    for (Elem v : lv.map)
      if (v >= lv.brace.size()) throw FormatError(at + "map value out of range");
    if (lv.i_kernel.has_value() != (k < t)) throw FormatError(at + "i_kernel must be present exactly below the top level");
    if (lv.abelian_ideal.has_value() != (k >= 1)) throw FormatError(at + "abelian_ideal must be present exactly above level 0");
    if (lv.i_kernel)
      for (Elem x : *lv.i_kernel)
        if (x >= n) throw FormatError(at + "i_kernel element out of range");
    if (lv.abelian_ideal)
      for (Elem x : *lv.abelian_ideal)
        if (x >= lv.brace.size()) throw FormatError(at + "abelian_ideal element out of range");
    if (auto v = validate_brace(lv.brace, Exec::serial); !v.ok)
      throw FormatError(at + "invalid brace: " + v.first_violation);
  }
}

WitnessCheck failure(WitnessCondition c, std::size_t level, std::string detail) {
  WitnessCheck r;
  r.status = WitnessStatus::fail;
  r.failed = c;
  r.level = level;
  r.detail = std::move(detail);
  return r;
}

std::vector<Elem> sorted(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

WitnessCheck verify_witness(const FiniteSolution& s, const SolubilityWitness& w, const VerifyOptions& options) {
  check_structure(s, w);
  const std::size_t n = s.size(), t = w.t();
  std::vector<Partition> kers;
  kers.reserve(t + 1);
  for (const auto& lv : w.levels) kers.push_back(kernel_congruence(lv.map));

  if (!kers[0].is_one_block()) return failure(WitnessCondition::initial_level, 0, "ker f_0 is not a single block");

  for (std::size_t k = 0; k <= t; ++k) {
    const auto& lv = w.levels[k];
    SolutionMap f{s, associated_solution(lv.brace), lv.map};
    const auto cond = k < t ? WitnessCondition::i_kernel : WitnessCondition::epimorphism;
    if (!is_homomorphism(f)) return failure(cond, k, "map is not a homomorphism of solutions");
    if (!is_surjective(f)) return failure(cond, k, "map is not surjective");
    if (k < t) {
      const auto ks = i_kernels(f);
      if (std::find(ks.begin(), ks.end(), sorted(*lv.i_kernel)) == ks.end())
        return failure(WitnessCondition::i_kernel, k, "block is not an i-kernel of the map");
    }
  }

  for (std::size_t k = 1; k <= t; ++k) {
    const auto& lv = w.levels[k];
    const SkewBrace& b = lv.brace;
    if (!kers[k].refines(kers[k - 1]))
      return failure(WitnessCondition::refinement, k, "ker f_k is not contained in ker f_{k-1}");
    const Subset j = Subset::of(b.size(), *lv.abelian_ideal);
    if (!is_ideal(b, j)) return failure(WitnessCondition::abelian_ideal, k, "J is not an ideal");
    if (!is_abelian_subbrace(b, j)) return failure(WitnessCondition::abelian_ideal, k, "J is not an abelian brace");
    for (Elem x : *w.levels[k - 1].i_kernel)
      if (!j.contains(lv.map[x]))
        return failure(WitnessCondition::abelian_ideal, k, "f_k(X_{k-1}) is not inside J");
    const auto& prev = w.levels[k - 1].map;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (prev[x] == prev[y] && !j.contains(b.mul(b.inv(lv.map[x]), lv.map[y])))
          return failure(WitnessCondition::coset, k,
                         std::to_string(x) + " and " + std::to_string(y) + " land in different cosets of J");
  }

  WitnessCheck r;
  r.level = t;
  r.final_injective = kers[t].is_singletons();
  if (r.final_injective) {
    r.status = WitnessStatus::pass;
  } else if (options.injective_source) {
    r = failure(WitnessCondition::final_level, t, "f_t is not injective while ι is injective");
  } else {
    r.status = WitnessStatus::conditional;
    r.failed = WitnessCondition::final_level;
    r.detail = "f_t is not injective; containment in ker ι is not decided";
  }
  return r;
}

SolubilityWitness brace_chain_to_witness(const SkewBrace& b, const BraceChain& chain) {
  if (!is_valid_chain(b, chain)) throw PreconditionError("brace_chain_to_witness: invalid chain");
  const std::size_t t = chain.length();
  SolubilityWitness w;
  w.source = associated_solution(b);
  std::vector<Elem> prev_projection;
  for (std::size_t k = 0; k <= t; ++k) {
    auto q = quotient_brace(b, chain.ideals[k]);
    WitnessLevel lv{q.brace, q.projection, std::nullopt, std::nullopt};
    if (k < t) lv.i_kernel = chain.ideals[k].members();
    if (k >= 1) {
      std::vector<Elem> image;
      for (Elem a : chain.ideals[k - 1].members()) image.push_back(q.projection[a]);
      lv.abelian_ideal = sorted(std::move(image));
    }
    w.levels.push_back(std::move(lv));
  }
  const auto check = verify_witness(w.source, w, {.injective_source = true});
  if (!check.strict_pass())
    throw InternalError("chain witness failed verification: " + to_string(check.failed) + ": " + check.detail);
  return w;
}

namespace {

const std::vector<SkewBrace>& cached_braces(std::size_t m) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<SkewBrace>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, enumerate_braces(m, Exec::serial)).first;
  return it->second;
}

// All solution isomorphisms q -> r, by backtracking over the images of
// 0, 1, ... and checking every pair whose λ/ρ values are already placed.
void for_each_isomorphism(const FiniteSolution& q, const FiniteSolution& r,
                          const std::function<void(const std::vector<Elem>&)>& visit) {
  const auto m = static_cast<Elem>(q.size());
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> phi(m, unset);
  std::vector<std::uint8_t> used(m, 0);
  auto consistent = [&](Elem i) {
    for (Elem j = 0; j <= i; ++j) {
      for (auto [a, c] : {std::pair{i, j}, std::pair{j, i}}) {
        const Elem l = q.lam(a, c), p = q.rho(a, c);
        if (l <= i && r.lam(phi[a], phi[c]) != phi[l]) return false;
        if (p <= i && r.rho(phi[a], phi[c]) != phi[p]) return false;
      }
    }
    return true;
  };
  std::function<void(Elem)> rec = [&](Elem i) {
    if (i == m) {
      visit(phi);
      return;
    }
    for (Elem v = 0; v < m; ++v) {
      if (used[v]) continue;
      phi[i] = v;
      used[v] = 1;
      if (consistent(i)) rec(i + 1);
      used[v] = 0;
    }
    phi[i] = unset;
  };
  rec(0);
}

}  // namespace

std::vector<Realization> brace_realizations(const FiniteSolution& q) {
  const std::size_t m = q.size();
  if (m > kMaxEnumerateBraces) throw CapacityError("brace_realizations: order above 7");
  std::vector<Realization> out;
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> seen;
  for (const auto& b : cached_braces(m)) {
    const FiniteSolution rb = associated_solution(b);
    for_each_isomorphism(q, rb, [&](const std::vector<Elem>& phi) {
      // Distinct structures on q: compare the transported tables.
      std::vector<Elem> add(m * m), mul(m * m);
      for (Elem i = 0; i < m; ++i)
        for (Elem j = 0; j < m; ++j) {
          add[i * m + j] = b.add(phi[i], phi[j]);
          mul[i * m + j] = b.mul(phi[i], phi[j]);
        }
      std::vector<Elem> inv_phi(m);
      for (Elem i = 0; i < m; ++i) inv_phi[phi[i]] = i;
      for (auto& v : add) v = inv_phi[v];
      for (auto& v : mul) v = inv_phi[v];
      if (seen.emplace(std::move(add), std::move(mul)).second) out.push_back({b, phi});
    });
  }
  return out;
}

namespace {

struct SearchNode {
  std::size_t congruence;
  std::size_t block;        // i-kernel block, unused on the final level
  std::size_t level;
  std::size_t parent;
  SkewBrace brace;
  std::vector<Elem> map;
  std::vector<Elem> ideal;  // J, empty on level 0
};

std::optional<bool> perm_brace_insoluble(const FiniteSolution& s, std::string& note) {
  try {
    const auto pb = PermBrace::build(s, {.exec = Exec::serial});
    return !is_soluble_brace(pb.brace()).has_value();
  } catch (const CapacityError& e) {
    note += std::string(note.empty() ? "" : "; ") + "permutation brace: " + e.what();
    return std::nullopt;
  }
}

}  // namespace

SolubilityVerdict search_witness(const FiniteSolution& s, const SearchBounds& bounds) {
  const std::size_t n = s.size();
  const std::size_t target_cap = std::min(bounds.max_target_order, kMaxEnumerateBraces);
  std::string note;

  auto finish_without_witness = [&]() -> SolubilityVerdict {
    auto insoluble = perm_brace_insoluble(s, note);
    if (insoluble && *insoluble)
      return NotSoluble{std::string(kPermBraceInsoluble) +
                        ": soluble solutions have soluble structure braces, whose quotients are soluble"};
    return Unknown{bounds, note.empty() ? "no witness within bounds" : note};
  };

  if (n > bounds.congruence_bound || n > kMaxCongruenceCarrier) {
    note = "carrier size " + std::to_string(n) + " above congruence bound";
    return finish_without_witness();
  }
  if (n > target_cap) {
    note = "carrier size " + std::to_string(n) + " above target order bound";
    return finish_without_witness();
  }

  const auto congruences = enumerate_congruences(s, Exec::serial);
  const std::size_t one_block = 0;  // lexicographically first restricted growth string
  std::vector<std::vector<std::vector<Elem>>> kernels(congruences.size());
  std::vector<std::optional<QuotientSolution>> quotients(congruences.size());
  std::vector<std::optional<std::vector<Realization>>> realizations(congruences.size());
  for (std::size_t c = 0; c < congruences.size(); ++c) kernels[c] = i_kernels(s, congruences[c]);

  std::vector<SearchNode> nodes;
  std::set<std::pair<std::size_t, std::size_t>> visited;
  nodes.push_back({one_block, 0, 0, 0, singleton_brace(), std::vector<Elem>(n, 0), {}});
  visited.insert({one_block, 0});

  auto build_witness = [&](std::size_t leaf) {
    std::vector<std::size_t> path;
    for (std::size_t i = leaf;; i = nodes[i].parent) {
      path.push_back(i);
      if (nodes[i].level == 0) break;
    }
    std::reverse(path.begin(), path.end());
    SolubilityWitness w;
    w.source = s;
    for (std::size_t k = 0; k < path.size(); ++k) {
      const auto& node = nodes[path[k]];
      WitnessLevel lv{node.brace, node.map, std::nullopt, std::nullopt};
      if (k + 1 < path.size()) lv.i_kernel = congruences[node.congruence].blocks()[node.block];
      if (k >= 1) lv.abelian_ideal = node.ideal;
      w.levels.push_back(std::move(lv));
    }
    const auto check = verify_witness(s, w);
    if (!check.strict_pass())
      throw InternalError("search produced a witness failing verification: " + to_string(check.failed));
    return w;
  };

  if (congruences[one_block].is_singletons()) return Soluble{build_witness(0)};

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const SearchNode cur = nodes[head];
    if (cur.level >= bounds.max_depth) continue;
    const Partition& p = congruences[cur.congruence];
    const auto& x_block = p.blocks()[cur.block];
    for (std::size_t c = 0; c < congruences.size(); ++c) {
      const Partition& q = congruences[c];
      if (!q.refines(p)) continue;
      const bool final_level = q.is_singletons();
      if (!final_level && kernels[c].empty()) continue;
      if (q.block_count() > target_cap) {
        note = "quotients above target order " + std::to_string(target_cap) + " skipped";
        continue;
      }
      if (!realizations[c]) {
        quotients[c] = quotient_solution(s, q);
        realizations[c] = brace_realizations(quotients[c]->solution);
      }
      for (const auto& real : *realizations[c]) {
        const SkewBrace& b = real.brace;
        std::vector<Elem> map(n);
        for (Elem x = 0; x < n; ++x) map[x] = real.phi[q.block_of(x)];
        Subset needed(b.size());
        for (Elem x : x_block) needed.insert(map[x]);
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y)
            if (p.block_of(x) == p.block_of(y)) needed.insert(b.mul(b.inv(map[x]), map[y]));
        const Subset j = ideal_closure(b, needed);
        if (!is_abelian_subbrace(b, j)) continue;
        SearchNode next{c, 0, cur.level + 1, head, b, map, j.members()};
        if (final_level) {
          nodes.push_back(std::move(next));
          return Soluble{build_witness(nodes.size() - 1)};
        }
        for (std::size_t blk = 0; blk < q.block_count(); ++blk) {
          if (std::find(kernels[c].begin(), kernels[c].end(), q.blocks()[blk]) == kernels[c].end()) continue;
          if (!visited.insert({c, blk}).second) continue;
          next.block = blk;
          nodes.push_back(next);
        }
        break;  // the edge exists; later realizations only repeat it
      }
    }
  }
  return finish_without_witness();
}

namespace {

SolubilityWitness transport(const SolubilityWitness& wb, const FiniteSolution& s, const std::vector<Elem>& phi) {
  SolubilityWitness w;
  w.source = s;
  const auto n = static_cast<Elem>(s.size());
  for (const auto& lv : wb.levels) {
    WitnessLevel out{lv.brace, std::vector<Elem>(n), std::nullopt, lv.abelian_ideal};
    for (Elem x = 0; x < n; ++x) out.map[x] = lv.map[phi[x]];
    if (lv.i_kernel) {
      Subset k = Subset::of(n, *lv.i_kernel);
      std::vector<Elem> pre;
      for (Elem x = 0; x < n; ++x)
        if (k.contains(phi[x])) pre.push_back(x);
      out.i_kernel = pre;
    }
    w.levels.push_back(std::move(out));
  }
  return w;
}

}  // namespace

AttemptReport attempt_witness_via_perm_brace(const FiniteSolution& s) {
  AttemptReport report;
  report.route = "none";
  const std::size_t n = s.size();
  const auto pb = PermBrace::build(s);
  const SkewBrace& g = pb.brace();
  const auto chain = is_soluble_brace(g);
  if (!chain) {
    report.detail = kPermBraceInsoluble;
  } else {
    const std::size_t t = chain->length();
    SolubilityWitness w;
    w.source = s;
    for (std::size_t k = 0; k <= t; ++k) {
      const auto q = quotient_brace(g, chain->ideals[k]);
      WitnessLevel lv{q.brace, std::vector<Elem>(n), std::nullopt, std::nullopt};
      for (Elem x = 0; x < n; ++x) lv.map[x] = q.projection[pb.generator(x)];
      if (k < t) {
        std::vector<Elem> xk;
        for (Elem x = 0; x < n; ++x)
          if (chain->ideals[k].contains(pb.generator(x))) xk.push_back(x);
        lv.i_kernel = xk;
      }
      if (k >= 1) {
        std::vector<Elem> image;
        for (Elem a : chain->ideals[k - 1].members()) image.push_back(q.projection[a]);
        lv.abelian_ideal = sorted(std::move(image));
      }
      w.levels.push_back(std::move(lv));
    }
    report.perm_route_check = verify_witness(s, w);
    if (report.perm_route_check.strict_pass()) {
      report.witness = std::move(w);
      report.route = "permutation-brace";
      return report;
    }
    report.detail = "permutation-brace tower: " + to_string(report.perm_route_check.status) + " at " +
                    to_string(report.perm_route_check.failed) + " (level " +
                    std::to_string(report.perm_route_check.level) + ")";
    if (!report.perm_route_check.final_injective) report.detail += "; f_t not injective";
  }

  if (n > kMaxEnumerateBraces) {
    report.detail += "; no brace-solution fallback above order 7";
    return report;
  }
  const auto reals = brace_realizations(s);
  if (reals.empty()) {
    report.detail += "; not a brace solution";
    return report;
  }
  const auto& real = reals.front();
  const auto bchain = is_soluble_brace(real.brace);
  if (!bchain) {
    report.detail += "; realizing brace is insoluble";
    return report;
  }
  auto w = transport(brace_chain_to_witness(real.brace, *bchain), s, real.phi);
  const auto check = verify_witness(s, w, {.injective_source = true});
  if (!check.strict_pass()) throw InternalError("transported chain witness failed verification");
  report.witness = std::move(w);
  report.route = "brace-solution";
  return report;
}

CorollaryReport corollary_equivalence_harness(std::size_t order_bound, Exec exec) {
  if (order_bound > 6) throw CapacityError("corollary_equivalence_harness: order bound above 6");
  std::vector<SkewBrace> corpus;
  for (std::size_t m = 1; m <= order_bound; ++m)
    for (const auto& b : cached_braces(m)) corpus.push_back(b);
  CorollaryReport report;
  report.rows.resize(corpus.size());
  auto run = [&](std::size_t i) {
    const SkewBrace& b = corpus[i];
    CorollaryRow row;
    row.brace = b;
    row.brace_soluble = is_soluble_brace(b).has_value();
    const FiniteSolution rb = associated_solution(b);
    row.search_soluble = is_soluble_verdict(search_witness(rb, {3, b.size(), kMaxCongruenceCarrier}));
    row.perm_brace_soluble = is_soluble_brace(PermBrace::build(rb, {.exec = Exec::serial}).brace()).has_value();
    report.rows[i] = std::move(row);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(corpus.size()); ++i) run(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < corpus.size(); ++i) run(i);
  }
  for (const auto& row : report.rows)
    if (!row.agree()) ++report.disagreements;
  return report;
}

}  // namespace ybe
