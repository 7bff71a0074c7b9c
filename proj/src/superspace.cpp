#include "sfn/superspace.hpp"

#include <stdexcept>

namespace sfn {

SuperSpace::SuperSpace(std::vector<BasisVector> basis) : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (basis_[i].id == basis_[j].id) throw std::invalid_argument("SuperSpace: duplicate id " + basis_[i].id);
}

SuperSpace SuperSpace::standard(int p, int q, const std::string& prefix) {
  std::vector<BasisVector> b;
  for (int i = 0; i < p + q; ++i)
    b.push_back({prefix + std::to_string(i + 1), i < p ? Parity::Even : Parity::Odd, std::nullopt, {}});
  return SuperSpace(std::move(b));
}

SuperDim SuperSpace::sdim() const {
  SuperDim d;
  for (const auto& v : basis_) (v.parity == Parity::Even ? d.even : d.odd)++;
  return d;
}

std::optional<std::size_t> SuperSpace::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].id == id) return i;
  return std::nullopt;
}

SuperSpace SuperSpace::dual() const {
  std::vector<BasisVector> b = basis_;
  for (auto& v : b) {
    if (!v.id.empty() && v.id.back() == '*')
      v.id.pop_back();
    else
      v.id += "*";
    if (v.degree) v.degree = -*v.degree;
    for (auto& w : v.weight) w = -w;
  }
  return SuperSpace(std::move(b));
}

SuperSpace SuperSpace::parity_flip() const {
  std::vector<BasisVector> b = basis_;
  for (auto& v : b) v.parity = v.parity + Parity::Odd;
  return SuperSpace(std::move(b));
}

namespace {
void enumerate(const std::vector<Parity>& par, int k, Parity rep, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < par.size(); ++i) {
    cur.push_back(i);
    enumerate(par, k, rep, par[i] == rep ? i : i + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<std::vector<std::size_t>> super_multi_indices(const std::vector<Parity>& parities, int k,
                                                          Parity repeat_parity) {
  std::vector<std::vector<std::size_t>> out;
  if (k < 0) return out;
  std::vector<std::size_t> cur;
  enumerate(parities, k, repeat_parity, 0, cur, out);
  return out;
}

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {
// number of multisets of size j from q elements
long multiset(long q, long j) {
  if (j == 0) return 1;
  return binomial(q + j - 1, j);
}
}  // namespace

SuperDim sdim_exterior(long p, long q, int k) {
  SuperDim d;
  for (long j = 0; j <= k; ++j) {
    long c = binomial(p, k - j) * multiset(q, j);
    (j % 2 == 0 ? d.even : d.odd) += c;
  }
  return d;
}

SuperDim sdim_symmetric(long p, long q, int k) {
  SuperDim d;
  for (long j = 0; j <= k; ++j) {
    long c = multiset(p, k - j) * binomial(q, j);
    (j % 2 == 0 ? d.even : d.odd) += c;
  }
  return d;
}

int koszul_sign(const std::vector<std::size_t>& perm, const std::vector<Parity>& parities) {
  std::vector<bool> seen(perm.size(), false);
  if (parities.size() != perm.size()) throw std::invalid_argument("koszul_sign: size mismatch");
  for (auto k : perm) {
    if (k >= perm.size() || seen[k]) throw std::invalid_argument("koszul_sign: malformed permutation");
    seen[k] = true;
  }
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign *= koszul_sign(parities[perm[i]], parities[perm[j]]);
  return sign;
}

int sort_with_sign(std::vector<std::size_t>& a, const std::vector<Parity>& par, bool alternating) {
  int sign = 1;
  for (std::size_t i = 1; i < a.size(); ++i) {
    for (std::size_t j = i; j > 0 && a[j - 1] > a[j]; --j) {
      int s = koszul_sign(par[a[j - 1]], par[a[j]]);
      sign *= alternating ? -s : s;
      std::swap(a[j - 1], a[j]);
    }
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] != a[i - 1]) continue;
    Parity p = par[a[i]];
    if (alternating && p == Parity::Even) return 0;
    if (!alternating && p == Parity::Odd) return 0;
  }
  return sign;
}

}  // namespace sfn
