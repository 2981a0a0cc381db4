#ifndef HSP_LINCOMB_HPP
#define HSP_LINCOMB_HPP

#include "hsp/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hsp {

// Basis element of a tensor power: one canonical key string per tensor factor.
using BasisKey = std::vector<std::string>;

// Finitely supported rational linear combination; zero coefficients are never
// stored, so equality is plain map comparison.
struct LinComb {
  std::map<BasisKey, Rat> terms;

  void add(const BasisKey& k, const Rat& c);
  LinComb& operator+=(const LinComb& other);
  friend LinComb operator+(LinComb a, const LinComb& b) {
    a += b;
    return a;
  }
  LinComb scaled(const Rat& c) const;
  bool operator==(const LinComb& other) const { return terms == other.terms; }

  static LinComb single(BasisKey k, const Rat& c = Rat(1));
  std::string to_string() const;
};

// Tensor product: concatenates basis keys, multiplies coefficients.
LinComb tensor(const LinComb& a, const LinComb& b);

// Linear extension of f applied to one tensor factor; the factor's key is
// replaced by the (possibly longer) keys of f's output.
LinComb apply_to_factor(const LinComb& lc, size_t index,
                        const std::function<LinComb(const std::string&)>& f);

// Linear extension of a scalar-valued map on one tensor factor; the factor is
// removed and its value multiplies the coefficient.
LinComb contract_factor(const LinComb& lc, size_t index,
                        const std::function<Rat(const std::string&)>& f);

}  // namespace hsp

#endif
