#include "wallcross/group.hpp"

namespace wallcross {

GroupElement::GroupElement(LieSeries log) : log_(std::move(log)) {
  if (log_.has_constant_term())
    fail(ErrorCode::NonzeroConstantTerm,
         "group logarithm must have zero constant term");
}

GroupElement GroupElement::identity(const ChargeLattice& lattice,
                                    const TruncationCone& cone) {
  return GroupElement(LieSeries(lattice, cone));
}

GroupElement exp_group(const LieSeries& h) { return GroupElement(h); }

ConeSeries GroupElement::apply(const ConeSeries& f) const {
  log_.require_same_context(f);
  ConeSeries result = f;
  ConeSeries term = f;
  const int D = cone().max_height();
  for (int k = 1; k <= D; ++k) {
    term = poisson_bracket(log_, term).scaled(Rat(1, k));
    if (term.is_zero()) break;
    result = result + term;
  }
  return result;
}

const BasisAction& GroupElement::basis_actions() const {
  if (!action_) {
    BasisAction act;
    const int n = lattice().rank();
    const int D = cone().max_height();
    act.reserve(n);
    for (int i = 0; i < n; ++i) {
      LatticeVector b = lattice().basis_vector(i);
      // {h, e_b * S} = e_b * (T_b * S + {h, S}) with
      // T_b = sum_g c_g <g, b> e_g.
      ConeSeries t_b(lattice(), cone());
      for (const auto& [g, c] : log_.terms()) {
        std::int64_t p = lattice().pairing(g, b);
        if (p != 0) t_b.accumulate(g, c * Rat(p));
      }
      ConeSeries s = ConeSeries::unit(lattice(), cone());
      ConeSeries term = s;
      for (int k = 1; k <= D; ++k) {
        term = (t_b * term + poisson_bracket(log_, term)).scaled(Rat(1, k));
        if (term.is_zero()) break;
        s = s + term;
      }
      act.push_back(std::move(s));
    }
    action_ = std::move(act);
  }
  return *action_;
}

const ConeSeries& GroupElement::basis_action(int i) const {
  return basis_actions().at(i);
}

BasisAction identity_action(const ChargeLattice& lattice,
                            const TruncationCone& cone) {
  BasisAction act;
  for (int i = 0; i < lattice.rank(); ++i)
    act.push_back(ConeSeries::unit(lattice, cone));
  return act;
}

BasisAction compose_action(const BasisAction& first,
                           const GroupElement& then) {
  BasisAction out;
  out.reserve(first.size());
  for (std::size_t i = 0; i < first.size(); ++i)
    out.push_back(then.basis_action(static_cast<int>(i)) *
                  then.apply(first[i]));
  return out;
}

LieSeries log_from_action(const ChargeLattice& lattice,
                          const TruncationCone& cone,
                          const BasisAction& action) {
  if (!lattice.nondegenerate())
    fail(ErrorCode::DegenerateForm,
         "log recovery needs a nondegenerate skew form; double the lattice");
  const int D = cone.max_height();
  const int n = lattice.rank();
  LieSeries h(lattice, cone);
  for (int d = 1; d <= D; ++d) {
    BasisAction current = GroupElement(h).basis_actions();
    // Height-d discrepancy determines the height-d log coefficients
    // linearly: first-order contribution of c_g e_g to the relative action
    // on e_{b_i} is c_g <g, b_i> e_g.
    LieSeries correction(lattice, cone);
    std::map<LatticeVector, Rat> assigned;
    for (int i = 0; i < n; ++i) {
      ConeSeries diff =
          (action[i] - current[i]).homogeneous_part(d);
      LatticeVector b = lattice.basis_vector(i);
      for (const auto& [g, c] : diff.terms()) {
        std::int64_t p = lattice.pairing(g, b);
        if (p == 0) {
          fail(ErrorCode::InconsistentAction,
               "discrepancy at " + vec_to_string(g) +
                   " with vanishing pairing against basis vector " +
                   std::to_string(i));
        }
        Rat cg = c / Rat(p);
        auto [it, inserted] = assigned.try_emplace(g, cg);
        if (!inserted && it->second != cg)
          fail(ErrorCode::InconsistentAction,
               "discrepancies disagree across basis indices at " +
                   vec_to_string(g));
      }
    }
    // Cross-check entries that vanished in some diffs but not others.
    for (int i = 0; i < n; ++i) {
      ConeSeries diff = (action[i] - current[i]).homogeneous_part(d);
      LatticeVector b = lattice.basis_vector(i);
      for (const auto& [g, cg] : assigned) {
        if (diff.coefficient(g) != cg * Rat(lattice.pairing(g, b)))
          fail(ErrorCode::InconsistentAction,
               "discrepancies disagree across basis indices at " +
                   vec_to_string(g));
      }
    }
    for (const auto& [g, cg] : assigned) correction.add_term(g, cg);
    h = h + correction;
  }
  // Full verification: the recovered log must reproduce the action exactly.
  BasisAction check = GroupElement(h).basis_actions();
  for (int i = 0; i < n; ++i)
    if (check[i] != action[i])
      fail(ErrorCode::InconsistentAction,
           "input action is not a Hamiltonian automorphism");
  return h;
}

GroupElement compose(const GroupElement& F, const GroupElement& G) {
  F.log().require_same_context(G.log());
  if (F.is_identity()) return G;
  if (G.is_identity()) return F;
  // In the product F * G the right factor acts first on functions.
  BasisAction act = compose_action(G.basis_actions(), F);
  return GroupElement(log_from_action(F.lattice(), F.cone(), act));
}

GroupElement compose(const std::vector<GroupElement>& factors) {
  if (factors.empty())
    fail(ErrorCode::InvalidInput, "compose of empty factor list");
  if (factors.size() == 1) return factors.front();
  const auto& lattice = factors.front().lattice();
  const auto& cone = factors.front().cone();
  BasisAction act = factors.back().basis_actions();
  for (std::size_t i = factors.size() - 1; i-- > 0;) {
    factors[i].log().require_same_context(factors.back().log());
    act = compose_action(act, factors[i]);
  }
  return GroupElement(log_from_action(lattice, cone, act));
}

GroupElement group_pow(const GroupElement& F, std::int64_t n) {
  return GroupElement(F.log().scaled(Rat(n)));
}

}  // namespace wallcross
