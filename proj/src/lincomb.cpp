#include "hsp/lincomb.hpp"

#include <sstream>

namespace hsp {

void LinComb::add(const BasisKey& k, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

LinComb& LinComb::operator+=(const LinComb& other) {
  for (auto& [k, c] : other.terms) add(k, c);
  return *this;
}

LinComb LinComb::scaled(const Rat& c) const {
  LinComb out;
  if (c == 0) return out;
  for (auto& [k, v] : terms) out.terms.emplace(k, v * c);
  return out;
}

LinComb LinComb::single(BasisKey k, const Rat& c) {
  LinComb out;
  out.add(k, c);
  return out;
}

std::string LinComb::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c) << "·";
    for (size_t i = 0; i < k.size(); ++i) {
      if (i) os << " ⊗ ";
      os << k[i];
    }
  }
  return os.str();
}

LinComb tensor(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (auto& [ka, ca] : a.terms)
    for (auto& [kb, cb] : b.terms) {
      BasisKey k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add(k, ca * cb);
    }
  return out;
}

LinComb apply_to_factor(const LinComb& lc, size_t index,
                        const std::function<LinComb(const std::string&)>& f) {
  LinComb out;
  for (auto& [k, c] : lc.terms) {
    const LinComb& image = f(k[index]);
    for (auto& [ki, ci] : image.terms) {
      BasisKey nk(k.begin(), k.begin() + index);
      nk.insert(nk.end(), ki.begin(), ki.end());
      nk.insert(nk.end(), k.begin() + index + 1, k.end());
      out.add(nk, c * ci);
    }
  }
  return out;
}

LinComb contract_factor(const LinComb& lc, size_t index,
                        const std::function<Rat(const std::string&)>& f) {
  LinComb out;
  for (auto& [k, c] : lc.terms) {
    BasisKey nk(k.begin(), k.begin() + index);
    nk.insert(nk.end(), k.begin() + index + 1, k.end());
    out.add(nk, c * f(k[index]));
  }
  return out;
}

}  // namespace hsp
