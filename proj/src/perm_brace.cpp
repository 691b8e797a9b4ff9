#include "ybe/perm_brace.hpp"

#include <boost/container_hash/hash.hpp>
#include <algorithm>
#include <unordered_map>

namespace ybe {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const { return boost::hash_range(v.begin(), v.end()); }
};

std::vector<Elem> key_of(const PermPair& pp) {
  std::vector<Elem> k(pp.p);
  k.insert(k.end(), pp.q.begin(), pp.q.end());
  return k;
}

}  // namespace

PermGroup generate_perm_group(const FiniteSolution& s, std::size_t order_cap) {
  const std::size_t n = s.size();
  PermGroup g;
  g.degree = n;

  std::vector<PermPair> letters(2 * n);  // slot order: x, then x^{-1}
  for (Elem x = 0; x < n; ++x) {
    Perm lam(s.lambda_row(x).begin(), s.lambda_row(x).end());
    Perm rho(s.rho_row(x).begin(), s.rho_row(x).end());
    letters[x] = {lam, inverse(rho)};
    letters[n + x] = {inverse(lam), rho};
  }

  std::unordered_map<std::vector<Elem>, Elem, VecHash> index;
  auto add_element = [&](PermPair pp, Word w, Elem parent, Letter last) {
    const auto k = static_cast<Elem>(g.elements.size());
    index.emplace(key_of(pp), k);
    g.elements.push_back(std::move(pp));
    g.witnesses.push_back(std::move(w));
    g.parent.push_back(parent);
    g.last_letter.push_back(last);
    return k;
  };
  add_element({identity_perm(n), identity_perm(n)}, {}, 0, 0);

  for (std::size_t k = 0; k < g.elements.size(); ++k) {
    for (std::size_t sl = 0; sl < 2 * n; ++sl) {
      PermPair next{compose(g.elements[k].p, letters[sl].p), compose(g.elements[k].q, letters[sl].q)};
      const Letter l = sl < n ? letter_of(static_cast<Elem>(sl)) : letter_of(static_cast<Elem>(sl - n), true);
      auto it = index.find(key_of(next));
      Elem target;
      if (it != index.end()) {
        target = it->second;
      } else {
        if (g.elements.size() >= order_cap)
          throw CapacityError("generate_perm_group: group order exceeds cap " + std::to_string(order_cap));
        Word w = g.witnesses[k];
        w.push_back(l);
        target = add_element(std::move(next), std::move(w), static_cast<Elem>(k), l);
      }
      g.right_mul.push_back(target);
    }
  }
  g.generators.resize(n);
  for (Elem x = 0; x < n; ++x) g.generators[x] = g.times_letter(0, letter_of(x));
  return g;
}

Elem PermBrace::evaluate(const Word& w) const {
  Elem k = 0;
  for (Letter l : w) {
    if (l == 0 || letter_generator(l) >= group_.degree) throw PreconditionError("word letter out of range");
    k = group_.times_letter(k, l);
  }
  return k;
}

// λ_k(l) for a letter l, as a letter.
//   λ_k(y)      = g_{p_k(y)}
//   λ_k(y^{-1}) = λ_{v}(y)^{-1}  with v = ρ_{y^{-1}}(k)
// The second follows from 1 = λ_k(y^{-1} y) = λ_k(y^{-1}) λ_{ρ_{y^{-1}}(k)}(y).
Letter PermBrace::lambda_letter(Elem k, Letter l) const {
  const Elem y = letter_generator(l);
  if (!letter_is_inverse(l)) return letter_of(group_.elements[k].p[y]);
  const Elem v = rho_gen_inv_[y * order() + k];
  return letter_of(group_.elements[v].p[y], true);
}

// ρ_k(l) for a letter l, as a letter.
//   ρ_k(y)      = g_{q_k^{-1}(y)}
//   ρ_k(y^{-1}) = ρ_{v}(y)^{-1}  with v = λ_{y^{-1}}(k)
// from 1 = ρ_k(y y^{-1}) = ρ_{λ_{y^{-1}}(k)}(y) ρ_k(y^{-1}).
Letter PermBrace::rho_letter(Elem k, Letter l) const {
  const Elem y = letter_generator(l);
  if (!letter_is_inverse(l)) return letter_of(q_inverse_[k][y]);
  const Elem v = lam_gen_inv_[y * order() + k];
  return letter_of(q_inverse_[v][y], true);
}

Elem PermBrace::rho_by_letter(Letter l, Elem k) const {
  const Elem y = letter_generator(l);
  return letter_is_inverse(l) ? rho_gen_inv_[y * order() + k] : rho_gen_[y * order() + k];
}

Elem PermBrace::lambda_by_letter(Letter l, Elem k) const {
  const Elem y = letter_generator(l);
  return letter_is_inverse(l) ? lam_gen_inv_[y * order() + k] : lam_gen_[y * order() + k];
}

GElement PermBrace::lam_eval(Elem g, const Word& w) const {
  if (g >= order()) throw PreconditionError("lam_eval: element out of range");
  GElement out;
  out.witness.reserve(w.size());
  Elem sub = g;
  for (Letter l : w) {
    if (l == 0 || letter_generator(l) >= group_.degree) throw PreconditionError("lam_eval: letter out of range");
    out.witness.push_back(lambda_letter(sub, l));
    sub = rho_by_letter(l, sub);
  }
  out.index = evaluate(out.witness);
  return out;
}

GElement PermBrace::rho_eval(Elem g, const Word& w) const {
  if (g >= order()) throw PreconditionError("rho_eval: element out of range");
  GElement out;
  out.witness.assign(w.size(), 0);
  Elem sub = g;
  for (std::size_t i = w.size(); i-- > 0;) {
    const Letter l = w[i];
    if (l == 0 || letter_generator(l) >= group_.degree) throw PreconditionError("rho_eval: letter out of range");
    out.witness[i] = rho_letter(sub, l);
    sub = lambda_by_letter(l, sub);
  }
  out.index = evaluate(out.witness);
  return out;
}

PermBrace PermBrace::build(const FiniteSolution& s, const PermBraceOptions& options) {
  PermBrace pb;
  pb.source_ = s;
  pb.group_ = generate_perm_group(s, options.order_cap);
  const PermGroup& g = pb.group_;
  const std::size_t n = s.size(), order = g.order();
  if (order > options.table_budget / order)
    throw CapacityError("build_perm_brace: |G|^2 = " + std::to_string(order) + "^2 exceeds table budget");

  pb.q_inverse_.reserve(order);
  for (const auto& e : g.elements) pb.q_inverse_.push_back(inverse(e.q));

  // Multiplication: mul[a][b] = mul[a][parent(b)] · last_letter(b).
  std::vector<Elem> mul(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    mul[a * order] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < order; ++b)
      mul[a * order + b] = g.times_letter(mul[a * order + g.parent[b]], g.last_letter[b]);
  }

  // λ_{g_x} and ρ_{g_x} on every element, in BFS order (parents first):
  //   λ_x(k'm) = λ_x(k') · λ_{ρ_{k'}(x)}(m),  ρ_{k'}(x) = g_{q_{k'}^{-1}(x)}
  //   ρ_x(k'm) = ρ_{λ_m(x)}(k') · ρ_x(m),     λ_m(x) = g_{λ_m(x)} on X
  // with the letter cases for m = y^{-1} derived from λ_w(1) = ρ_w(1) = 1.
  pb.lam_gen_.assign(n * order, 0);
  pb.rho_gen_.assign(n * order, 0);
  Perm lam_x(n), lam_x_inv(n);
  for (std::size_t k = 1; k < order; ++k) {
    const Elem kp = g.parent[k];
    const Letter m = g.last_letter[k];
    const Elem y = letter_generator(m);
    const bool inv = letter_is_inverse(m);
    for (Elem x = 0; x < n; ++x) {
      // λ part: subscript generator sub = q_{k'}^{-1}(x), letter λ_sub(m).
      const Elem sub = pb.q_inverse_[kp][x];
      Letter lam_letter;
      if (!inv) {
        lam_letter = letter_of(s.lam(sub, y));
      } else {
        // λ_sub(y^{-1}) = λ_{ρ_y^{-1}(sub)}(y)^{-1}
        Elem rho_inv_sub = 0;
        for (Elem t = 0; t < n; ++t)
          if (s.rho(y, t) == sub) rho_inv_sub = t;
        lam_letter = letter_of(s.lam(rho_inv_sub, y), true);
      }
      pb.lam_gen_[x * order + k] = g.times_letter(pb.lam_gen_[x * order + kp], lam_letter);

      // ρ part: new subscript t = λ_m(x) on X, letter ρ_x(m).
      Elem t;
      Letter rho_letter;
      Elem lam_inv_x = 0;  // λ_y^{-1}(x)
      for (Elem z = 0; z < n; ++z)
        if (s.lam(y, z) == x) lam_inv_x = z;
      if (!inv) {
        t = s.lam(y, x);
        rho_letter = letter_of(s.rho(x, y));
      } else {
        t = lam_inv_x;
        // ρ_x(y^{-1}) = ρ_{λ_y^{-1}(x)}(y)^{-1}
        rho_letter = letter_of(s.rho(lam_inv_x, y), true);
      }
      pb.rho_gen_[x * order + k] = g.times_letter(pb.rho_gen_[t * order + kp], rho_letter);
    }
  }
  pb.lam_gen_inv_.assign(n * order, 0);
  pb.rho_gen_inv_.assign(n * order, 0);
  for (Elem x = 0; x < n; ++x) {
    const std::span<const Elem> lrow(pb.lam_gen_.data() + x * order, order);
    const std::span<const Elem> rrow(pb.rho_gen_.data() + x * order, order);
    if (!is_permutation(lrow, order) || !is_permutation(rrow, order))
      throw InternalError("generator action on the permutation group is not bijective");
    for (std::size_t k = 0; k < order; ++k) {
      pb.lam_gen_inv_[x * order + lrow[k]] = static_cast<Elem>(k);
      pb.rho_gen_inv_[x * order + rrow[k]] = static_cast<Elem>(k);
    }
  }

  // a + b = a · λ_{a^{-1}}(b)
  std::vector<Elem> inv(order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (mul[a * order + b] == 0) inv[a] = static_cast<Elem>(b);
  std::vector<Elem> add(order * order);
  auto fill_row = [&](std::size_t a) {
    for (std::size_t b = 0; b < order; ++b)
      add[a * order + b] = mul[a * order + pb.lam_eval(inv[a], g.witnesses[b]).index];
  };
  if (options.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long a = 0; a < static_cast<long long>(order); ++a) fill_row(static_cast<std::size_t>(a));
  } else {
    for (std::size_t a = 0; a < order; ++a) fill_row(a);
  }
  pb.brace_ = SkewBrace(order, std::move(add), std::move(mul), 0);

  // Self-checks.
  if (auto v = validate_brace(pb.brace_, options.exec); !v.ok)
    throw InternalError("permutation brace failed validation: " + v.first_violation);
  Subset gens(order);
  for (Elem x = 0; x < n; ++x) gens.insert(g.generators[x]);
  if (additive_closure(pb.brace_, gens).size() != order || multiplicative_closure(pb.brace_, gens).size() != order)
    throw InternalError("additive and multiplicative closures of the generators differ");
  for (std::size_t k = 0; k < order; ++k)
    for (Elem y = 0; y < n; ++y)
      if (pb.brace_.lambda(static_cast<Elem>(k), g.generators[y]) != g.generators[g.elements[k].p[y]])
        throw InternalError("brace lambda disagrees with the permutation action on generators");
  return pb;
}

SolutionMap h_map(const FiniteSolution& s, const PermBrace& pb) {
  SolutionMap h{s, associated_solution(pb.brace()), pb.group().generators};
  if (!is_homomorphism(h)) throw InternalError("h is not a homomorphism of solutions");
  return h;
}

InducedEpi induced_perm_epi(const SolutionMap& f, const PermBrace& pb_source, const PermBrace& pb_target) {
  if (!is_homomorphism(f) || !is_surjective(f))
    throw PreconditionError("induced_perm_epi: map is not an epimorphism of solutions");
  if (pb_source.source() != f.source || pb_target.source() != f.target)
    throw PreconditionError("induced_perm_epi: permutation braces do not match the map");
  const std::size_t order = pb_source.order();
  InducedEpi out;
  out.table.resize(order);
  for (std::size_t k = 0; k < order; ++k) {
    Word w = pb_source.witness(static_cast<Elem>(k));
    for (Letter& l : w) l = letter_of(f(letter_generator(l)), letter_is_inverse(l));
    out.table[k] = pb_target.evaluate(w);
  }
  for (Elem x = 0; x < f.source.size(); ++x)
    if (out.table[pb_source.generator(x)] != pb_target.generator(f(x)))
      throw InternalError("induced map is inconsistent on generators");
  if (!is_brace_hom(out.table, pb_source.brace(), pb_target.brace()))
    throw InternalError("induced map is not a brace homomorphism");
  out.kernel = brace_hom_kernel(out.table, pb_source.brace(), pb_target.brace()).members;
  return out;
}

IKernelIdealReport i_kernel_ideal_check(const SolutionMap& f, std::span<const Elem> x0,
                                        const PermBrace& pb_source, const PermBrace& pb_target) {
  const auto ks = i_kernels(f);
  std::vector<Elem> block(x0.begin(), x0.end());
  std::sort(block.begin(), block.end());
  if (std::find(ks.begin(), ks.end(), block) == ks.end())
    throw PreconditionError("i_kernel_ideal_check: block is not an i-kernel of the map");
  const auto epi = induced_perm_epi(f, pb_source, pb_target);
  const SkewBrace& b = pb_source.brace();
  const std::size_t order = b.size();

  IKernelIdealReport r;
  Subset seed(order);
  for (Elem x : block) seed.insert(pb_source.generator(x));
  const Subset by_mul = multiplicative_closure(b, seed);
  const Subset by_add = additive_closure(b, seed);
  r.closures_coincide = by_mul == by_add;
  r.generated = by_mul;
  r.strong_left_ideal = is_strong_left_ideal(b, by_mul);

  Subset product(order);
  for (Elem a : by_mul.members())
    for (Elem k : epi.kernel.members()) product.insert(b.mul(a, k));
  r.product = product;
  r.product_is_ideal = is_ideal(b, product);

  r.coset_separation = true;
  const auto n = static_cast<Elem>(f.source.size());
  for (Elem x = 0; x < n && r.coset_separation; ++x)
    for (Elem y = 0; y < n; ++y)
      if (f(x) == f(y) &&
          !product.contains(b.mul(b.inv(pb_source.generator(x)), pb_source.generator(y)))) {
        r.coset_separation = false;
        r.detail = "g_" + std::to_string(x) + " and g_" + std::to_string(y) + " lie in different cosets";
        break;
      }
  if (!r.closures_coincide) r.detail = "multiplicative and additive closures differ";
  else if (!r.strong_left_ideal) r.detail = "generated subbrace is not a strong left ideal";
  else if (!r.product_is_ideal) r.detail = "product with the induced kernel is not an ideal";
  return r;
}

}  // namespace ybe
