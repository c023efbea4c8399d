#include "koszul/boundary.hpp"

#include <stdexcept>

namespace koszul {

MonomialIdeal sector_ideal(const MonomialIdeal& I, VarSet sigma, VarSet sigma_prime) {
  if (sigma.size() != sigma_prime.size())
    throw std::invalid_argument("sector ideal needs |sigma| = |sigma'|");
  if (sigma == sigma_prime) return I;
  const Monomial in = sigma_prime.minus(sigma).monomial(I.vars());
  const Monomial out = sigma.minus(sigma_prime).monomial(I.vars());
  return scale(in, colon(I, out));
}

MonomialIdeal boundary_ideal_from_circuits(const MonomialIdeal& I, VarSet sigma,
                                           const std::vector<Circuit>& circuits) {
  if (circuits.empty())
    throw std::logic_error("no circuits through sigma; the sign matrices have no coloops");
  bool first = true;
  MonomialIdeal out = MonomialIdeal::zero(I.vars());
  for (const Circuit& c : circuits) {
    MonomialIdeal summed = MonomialIdeal::zero(I.vars());
    for (VarSet sp : c) summed = sum(summed, sector_ideal(I, sigma, sp));
    out = first ? summed : intersect(out, summed);
    first = false;
  }
  return out;
}

BoundaryIdealResult boundary_ideal(const MonomialIdeal& I, VarSet sigma, FieldSpec field) {
  validate(field);
  const int n = I.vars();
  if (sigma.empty()) throw std::invalid_argument("boundary ideal needs nonempty sigma");
  if (!sigma.subset_of(VarSet::full(n))) throw std::invalid_argument("sigma not within [n]");
  const int p = sigma.size();
  if (p == n) return {I, {}, BoundaryRoute::top};  // no boundaries in degree n

  const SignMatrixSpec spec{n, p, field};
  auto circuits = circuits_through(spec, sigma);
  switch (circuit_route(n, p)) {
    case CircuitRoute::p1: {
      // I + (x_j : j != i)[I : x_i]
      const int i = sigma.min();
      MonomialIdeal b = sum(I, scale(VarSet::full(n).without(i),
                                     colon(I, Monomial::variable(n, i))));
      return {std::move(b), std::move(circuits), BoundaryRoute::p1};
    }
    case CircuitRoute::pn1: {
      // I + x_j [I : (x_i : i in sigma)], j the missing index
      const int j = VarSet::full(n).minus(sigma).min();
      MonomialIdeal b = sum(I, scale(Monomial::variable(n, j), colon(I, sigma)));
      return {std::move(b), std::move(circuits), BoundaryRoute::pn1};
    }
    case CircuitRoute::p2_bonds:
      return {boundary_ideal_from_circuits(I, sigma, circuits), std::move(circuits),
              BoundaryRoute::p2_bonds};
    case CircuitRoute::pn2_cycles:
      return {boundary_ideal_from_circuits(I, sigma, circuits), std::move(circuits),
              BoundaryRoute::pn2_cycles};
    case CircuitRoute::brute:
      break;
  }
  return {boundary_ideal_from_circuits(I, sigma, circuits), std::move(circuits),
          BoundaryRoute::brute};
}

MonomialIdeal boundary_ideal_four_var_formula(const MonomialIdeal& I, VarSet sigma) {
  if (I.vars() != 4) throw std::invalid_argument("four-variable formula needs n = 4");
  const int n = 4;
  const VarSet rest = VarSet::full(n).minus(sigma);
  switch (sigma.size()) {
    case 1: {
      const int i = sigma.min();
      return sum(I, scale(rest, colon(I, Monomial::variable(n, i))));
    }
    case 2: {
      const int i = sigma.min(), j = sigma.max();
      const int k = rest.min(), l = rest.max();
      const Monomial xi = Monomial::variable(n, i), xj = Monomial::variable(n, j);
      const Monomial xk = Monomial::variable(n, k), xl = Monomial::variable(n, l);
      // I + (x_k,x_l)[I:(x_i,x_j)]
      //   + (x_k x_l)[I:x_i x_j] cap (x_k[I:x_i] cap x_l[I:x_j]
      //                              + x_k[I:x_j] cap x_l[I:x_i])
      const MonomialIdeal cross =
          sum(intersect(scale(xk, colon(I, xi)), scale(xl, colon(I, xj))),
              intersect(scale(xk, colon(I, xj)), scale(xl, colon(I, xi))));
      return sum(sum(I, scale(rest, colon(I, sigma))),
                 intersect(scale(xk * xl, colon(I, xi * xj)), cross));
    }
    case 3: {
      const int l = rest.min();
      return sum(I, scale(Monomial::variable(n, l), colon(I, sigma)));
    }
    default:
      throw std::invalid_argument("four-variable formula covers |sigma| in {1,2,3}");
  }
}

bool is_boundary_monomial_cycle(const MonomialIdeal& I, const Monomial& u, VarSet sigma,
                                FieldSpec field) {
  if (!colon(I, sigma).contains(u))
    throw std::invalid_argument("u e_sigma is not a cycle: u outside I : sigma");
  return boundary_ideal(I, sigma, field).ideal.contains(u);
}

}  // namespace koszul
