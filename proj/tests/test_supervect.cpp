#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "sfn/superspace.hpp"

using namespace sfn;

namespace {

std::vector<Parity> parities(int p, int q) {
  std::vector<Parity> v(p, Parity::Even);
  v.insert(v.end(), q, Parity::Odd);
  return v;
}

// Brute force: all k-tuples, keep nondecreasing ones obeying the repeat rule.
SuperDim brute(int p, int q, int k, Parity rep) {
  auto par = parities(p, q);
  int n = p + q;
  SuperDim d;
  std::vector<int> t(k, 0);
  if (n == 0) {
    if (k == 0) d.even = 1;
    return d;
  }
  while (true) {
    bool ok = true;
    for (int i = 1; i < k && ok; ++i) {
      if (t[i] < t[i - 1]) ok = false;
      if (t[i] == t[i - 1] && par[t[i]] != rep) ok = false;
    }
    if (ok) {
      int odd = 0;
      for (int x : t) odd += par[x] == Parity::Odd;
      (odd % 2 ? d.odd : d.even)++;
    }
    int i = k - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) break;
  }
  return d;
}

}  // namespace

TEST_CASE("koszul signs of permutations") {
  std::vector<Parity> ee{Parity::Even, Parity::Even}, oo{Parity::Odd, Parity::Odd};
  CHECK(koszul_sign(std::vector<std::size_t>{1, 0}, ee) == 1);
  CHECK(koszul_sign(std::vector<std::size_t>{1, 0}, oo) == -1);
  CHECK(koszul_sign(std::vector<std::size_t>{0, 1, 2}, parities(1, 2)) == 1);
  CHECK_THROWS(koszul_sign(std::vector<std::size_t>{0, 0}, ee));
}

TEST_CASE("koszul signs compose") {
  auto par = parities(2, 3);
  std::vector<std::size_t> s(5), t(5);
  std::iota(s.begin(), s.end(), 0);
  std::iota(t.begin(), t.end(), 0);
  int checked = 0;
  do {
    std::vector<std::size_t> tt = {3, 0, 4, 1, 2};
    // (sigma then tau): rearranging the sigma-arrangement by tau
    std::vector<std::size_t> comp(5);
    for (int i = 0; i < 5; ++i) comp[i] = s[tt[i]];
    std::vector<Parity> spar(5);
    for (int i = 0; i < 5; ++i) spar[i] = par[s[i]];
    CHECK(koszul_sign(comp, par) == koszul_sign(s, par) * koszul_sign(tt, spar));
    ++checked;
  } while (std::next_permutation(s.begin(), s.end()) && checked < 120);
}

TEST_CASE("super exterior power examples") {
  CHECK(super_exterior_indices(parities(2, 0), 2).size() == 1);
  CHECK(super_exterior_indices(parities(0, 1), 2).size() == 1);
  // the 2|2 cube: 2 + 6 + 4 admissible multi-indices
  CHECK(super_exterior_indices(parities(2, 2), 3).size() == 12);
  CHECK(sdim_exterior(2, 2, 3).total() == 12);
}

TEST_CASE("super symmetric power examples") {
  CHECK(super_symmetric_indices(parities(1, 0), 2).size() == 1);
  CHECK(super_symmetric_indices(parities(0, 2), 2).size() == 1);
  CHECK(sdim_symmetric(2, 1, 3) == brute(2, 1, 3, Parity::Even));
}

TEST_CASE("closed forms match enumeration") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q)
      for (int k = 0; k <= 4; ++k) {
        CHECK(sdim_exterior(p, q, k) == brute(p, q, k, Parity::Odd));
        CHECK(sdim_symmetric(p, q, k) == brute(p, q, k, Parity::Even));
        CHECK(super_exterior_indices(parities(p, q), k).size() == static_cast<std::size_t>(sdim_exterior(p, q, k).total()));
        // exterior of the parity flip counts like the symmetric power
        CHECK(sdim_exterior(q, p, k).total() == sdim_symmetric(p, q, k).total());
      }
}

TEST_CASE("duals") {
  auto v = SuperSpace::standard(2, 2);
  CHECK(v.dual().sdim() == v.sdim());
  CHECK(v.dual()[0].id == "e1*");
  CHECK(v.dual().dual()[3].id == "e4");
  std::vector<BasisVector> b{{"Q", Parity::Odd, -1, {}}, {"T", Parity::Even, -2, {}}};
  auto g = SuperSpace(b).dual();
  CHECK(*g[0].degree == 1);
  CHECK(*g[1].degree == 2);
  CHECK_THROWS(SuperSpace(std::vector<BasisVector>{{"a", Parity::Even, {}, {}}, {"a", Parity::Odd, {}, {}}}));
}

TEST_CASE("sorting with signs") {
  auto par = parities(1, 2);
  std::vector<std::size_t> a{2, 1};
  CHECK(sort_with_sign(a, par, true) == 1);  // two odd elements commute under antisymmetrization
  std::vector<std::size_t> b{1, 0};
  CHECK(sort_with_sign(b, par, true) == -1);
  std::vector<std::size_t> c{0, 0};
  CHECK(sort_with_sign(c, par, true) == 0);
  std::vector<std::size_t> d{1, 1};
  CHECK(sort_with_sign(d, par, true) == 1);
  std::vector<std::size_t> e{1, 1};
  CHECK(sort_with_sign(e, par, false) == 0);
}
