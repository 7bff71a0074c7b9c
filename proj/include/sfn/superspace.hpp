#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfn/scalar.hpp"

namespace sfn {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity parity_of(int b) { return (b & 1) ? Parity::Odd : Parity::Even; }
inline Parity operator+(Parity a, Parity b) { return parity_of(bit(a) + bit(b)); }
inline const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

struct BasisVector {
  std::string id;
  Parity parity = Parity::Even;
  std::optional<int> degree;
  std::vector<Rational> weight;  // eigenvalues under the designated Cartan elements
};

struct SuperDim {
  long even = 0;
  long odd = 0;
  friend bool operator==(const SuperDim&, const SuperDim&) = default;
  long total() const { return even + odd; }
  std::string str() const { return std::to_string(even) + "|" + std::to_string(odd); }
};

class SuperSpace {
 public:
  SuperSpace() = default;
  explicit SuperSpace(std::vector<BasisVector> basis);
  // Even vectors named prefix1..prefixP, then odd ones.
  static SuperSpace standard(int p, int q, const std::string& prefix = "e");

  std::size_t dim() const { return basis_.size(); }
  SuperDim sdim() const;
  const std::vector<BasisVector>& basis() const { return basis_; }
  const BasisVector& operator[](std::size_t i) const { return basis_.at(i); }
  Parity parity(std::size_t i) const { return basis_.at(i).parity; }
  std::optional<std::size_t> index_of(const std::string& id) const;

  SuperSpace dual() const;  // toggles a trailing '*' on ids; degrees and weights negate
  SuperSpace parity_flip() const;

 private:
  std::vector<BasisVector> basis_;
};

// Sign for swapping two adjacent homogeneous elements: (-1)^{p(a) p(b)}.
inline int koszul_sign(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }

// Plain Koszul factor of a permutation: perm[i] is the element placed at
// position i; each inverted pair a, b contributes (-1)^{p(a)p(b)}.
int koszul_sign(const std::vector<std::size_t>& perm, const std::vector<Parity>& parities);

// Multi-indices i_1 <= ... <= i_k where repeats are allowed exactly for
// `repeat_parity` entries. Exterior power: repeats for odd; symmetric: for even.
std::vector<std::vector<std::size_t>> super_multi_indices(const std::vector<Parity>& parities, int k,
                                                          Parity repeat_parity);
inline std::vector<std::vector<std::size_t>> super_exterior_indices(const std::vector<Parity>& p, int k) {
  return super_multi_indices(p, k, Parity::Odd);
}
inline std::vector<std::vector<std::size_t>> super_symmetric_indices(const std::vector<Parity>& p, int k) {
  return super_multi_indices(p, k, Parity::Even);
}

// Closed-form superdimensions (p|q input).
SuperDim sdim_exterior(long p, long q, int k);
SuperDim sdim_symmetric(long p, long q, int k);
long binomial(long n, long k);

// Sorts args into nondecreasing order. Each transposition of neighbours a, b
// contributes -(-1)^{p(a)p(b)} when `alternating`, (-1)^{p(a)p(b)} otherwise.
// Returns 0 when alternating and an even element repeats.
int sort_with_sign(std::vector<std::size_t>& args, const std::vector<Parity>& parities, bool alternating);

}  // namespace sfn
