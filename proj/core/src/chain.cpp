#include "koszul/chain.hpp"

#include <stdexcept>

namespace koszul {

void Chain::add(VarSet sigma, const Monomial& m, const Scalar& c) {
  if (sigma.size() != degree_) throw std::invalid_argument("term degree mismatch");
  if (c.is_zero()) return;
  const Key key{sigma, m};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string Chain::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : terms_) {
    const auto& [sigma, m] = key;
    std::string coeff = c.str();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    s += s.empty() ? (negative ? "- " : "") : (negative ? " - " : " + ");
    if (coeff != "1") s += coeff + "*";
    s += m.str() + " e" + sigma.str();
  }
  return s;
}

Chain chain_term(VarSet sigma, const Monomial& m, const Scalar& c) {
  Chain out(sigma.size());
  out.add(sigma, m, c);
  return out;
}

Chain reduce(const MonomialIdeal& I, const Chain& c) {
  Chain out(c.degree());
  for (const auto& [key, coeff] : c.terms())
    if (!I.contains(key.second)) out.add(key.first, key.second, coeff);
  return out;
}

Chain wedge(const Chain& a, const Chain& b) {
  Chain out(a.degree() + b.degree());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.first.intersects(kb.first)) continue;
      const int sign = shuffle_sign(ka.first, kb.first);
      Scalar c = ca * cb;
      if (sign < 0) c = -c;
      out.add(ka.first | kb.first, ka.second * kb.second, c);
    }
  return out;
}

std::optional<Multidegree> homogeneous_multidegree(const Chain& c) {
  std::optional<Multidegree> deg;
  for (const auto& [key, coeff] : c.terms()) {
    (void)coeff;
    Multidegree d = key.second * key.first.monomial(key.second.vars());
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

}  // namespace koszul
