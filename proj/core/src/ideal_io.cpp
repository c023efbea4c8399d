#include "koszul/ideal_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace koszul {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Monomial parse_exponent_vector(const std::string& text, int n) {
  std::vector<int> e;
  std::string body = text.substr(1, text.size() - 2);
  std::istringstream in(body);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    piece = strip(piece);
    if (piece.empty()) throw std::invalid_argument("empty exponent in " + text);
    e.push_back(std::stoi(piece));
  }
  if (static_cast<int>(e.size()) != n)
    throw std::invalid_argument("exponent vector length != n in " + text);
  return Monomial(std::move(e));
}

Monomial parse_power_product(const std::string& text, int n) {
  std::vector<int> e(n, 0);
  if (text == "1") return Monomial(std::move(e));
  std::istringstream in(text);
  std::string factor;
  while (std::getline(in, factor, '*')) {
    factor = strip(factor);
    if (factor.empty() || factor[0] != 'x')
      throw std::invalid_argument("bad monomial factor '" + factor + "'");
    const std::size_t caret = factor.find('^');
    const int index = std::stoi(factor.substr(1, caret == std::string::npos
                                                      ? std::string::npos
                                                      : caret - 1));
    const int power = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
    if (index < 1 || index > n)
      throw std::invalid_argument("variable index out of range in '" + factor + "'");
    if (power < 0) throw std::invalid_argument("negative exponent in '" + factor + "'");
    e[index - 1] += power;
  }
  return Monomial(std::move(e));
}

}  // namespace

Monomial parse_monomial(const std::string& raw, int n) {
  const std::string text = strip(raw);
  if (text.empty()) throw std::invalid_argument("empty monomial");
  if (text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unterminated exponent vector");
    return parse_exponent_vector(text, n);
  }
  return parse_power_product(text, n);
}

MonomialIdeal parse_ideal(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    if (n < 0) {
      if (line.rfind("n=", 0) != 0)
        throw std::invalid_argument("ideal file must start with an n=<count> header");
      n = std::stoi(line.substr(2));
      if (n < 1 || n > 31) throw std::invalid_argument("variable count out of range");
      continue;
    }
    gens.push_back(parse_monomial(line, n));
  }
  if (n < 0) throw std::invalid_argument("ideal file has no n=<count> header");
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal parse_ideal_text(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

MonomialIdeal load_ideal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ideal file: " + path);
  return parse_ideal(in);
}

std::string format_ideal(const MonomialIdeal& I) {
  std::string out = "n=" + std::to_string(I.vars()) + "\n";
  for (const Monomial& g : I.generators()) out += g.str() + "\n";
  return out;
}

}  // namespace koszul
