#include "cmreal/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace cmreal {

std::string to_string(const MultiPolyQ& p, const std::string& var_prefix) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<std::vector<int>, Gq>> terms(p.terms().begin(), p.terms().end());
  auto total = [](const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    int ta = total(a.first), tb = total(b.first);
    if (ta != tb) return ta < tb;
    size_t n = std::max(a.first.size(), b.first.size());
    for (size_t k = 0; k < n; ++k) {
      int x = k < a.first.size() ? a.first[k] : 0;
      int y = k < b.first.size() ? b.first[k] : 0;
      if (x != y) return x > y;
    }
    return false;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    std::string mono;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += var_prefix + std::to_string(v + 1);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    bool negative = false;
    std::string cs;
    if (c.is_real()) {
      negative = sgn(c.re) < 0;
      Rational a = abs(c.re);
      cs = (a == 1 && !mono.empty()) ? "" : rational_str(a);
    } else {
      cs = "(" + c.str() + ")";
    }
    std::string term = cs.empty() ? mono : (mono.empty() ? cs : cs + " " + mono);
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

PolyQ as_univariate(const MultiPolyQ& p, int var) {
  std::vector<Gq> c;
  for (const auto& [e, v] : p.terms()) {
    for (size_t k = 0; k < e.size(); ++k)
      if (static_cast<int>(k) != var && e[k] != 0)
        throw std::invalid_argument("polynomial depends on more than one variable");
    int d = var < static_cast<int>(e.size()) ? e[static_cast<size_t>(var)] : 0;
    if (static_cast<int>(c.size()) <= d) c.resize(static_cast<size_t>(d) + 1);
    c[static_cast<size_t>(d)] += v;
  }
  return PolyQ(std::move(c));
}

}  // namespace cmreal
