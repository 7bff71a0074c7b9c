#include "sfn/polynomial.hpp"

namespace sfn {

namespace {
void fill(const PolyRing& r, std::size_t i, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (i == r.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  const auto& v = r.var(i);
  int cap = v.parity == Parity::Odd ? 1 : (v.weight > 0 ? left / v.weight : 0);
  for (int e = 0; e <= cap; ++e) {
    if (e * v.weight > left) break;
    cur[i] = static_cast<std::uint8_t>(e);
    fill(r, i + 1, left - e * v.weight, cur, out);
  }
  cur[i] = 0;
}
}  // namespace

std::vector<Monomial> PolyRing::monomials_of_weight(int w) const {
  std::vector<Monomial> out;
  if (w < 0) return out;
  Monomial cur(vars_.size(), 0);
  fill(*this, 0, w, cur, out);
  return out;
}

std::string PolyRing::monomial_str(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += "*";
    out += vars_[i].name;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace sfn
