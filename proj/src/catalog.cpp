#include "ybe/catalog.hpp"

#include <charconv>

#include "ybe/group_catalog.hpp"

namespace ybe {

FiniteSolution CatalogEntry::solution() const {
  if (const auto* s = std::get_if<FiniteSolution>(&payload)) return *s;
  return associated_solution(std::get<SkewBrace>(payload));
}

FiniteSolution lyubashenko3() { return lyubashenko({1, 2, 0}, {2, 0, 1}); }

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    out.push_back({"lyubashenko3", "solution", lyubashenko3(),
                   "three-element Lyubashenko solution, sigma = (0 1 2), tau = sigma^-1"});
    for (std::size_t n = 1; n <= 4; ++n)
      out.push_back({"twist" + std::to_string(n), "solution", twist(n), "twist solution r(x,y) = (y,x)"});
    out.push_back({"union-twist1-lyubashenko3", "solution", disjoint_union(twist(1), lyubashenko3()),
                   "decomposable: a fixed point next to lyubashenko3"});
    auto names = catalog_group_names();
    for (const auto& g : names)
      out.push_back({"trivial-" + g, "brace", trivial_brace(catalog_group(g)), "trivial brace, add = mul"});
    return out;
  }();
  return entries;
}

std::optional<CatalogEntry> find_catalog_entry(const std::string& name) {
  for (const auto& e : builtin_catalog())
    if (e.name == name) return e;
  if (name.rfind("twist", 0) == 0 && name.size() > 5) {
    std::size_t n = 0;
    const char* first = name.data() + 5;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last && n >= 1)
      return CatalogEntry{name, "solution", twist(n), "twist solution r(x,y) = (y,x)"};
  }
  return std::nullopt;
}

}  // namespace ybe
