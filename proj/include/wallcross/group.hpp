#ifndef WALLCROSS_GROUP_HPP
#define WALLCROSS_GROUP_HPP

#include <optional>
#include <vector>

#include "wallcross/series.hpp"

namespace wallcross {

// Basis actions of a torus automorphism, stored relative to the basis
// monomials: entry i is the series S_i with F(e_{b_i}) = e_{b_i} * S_i,
// truncated at relative height D. Relative storage keeps the full height
// range of the logarithm visible even when h(b_i) > 0.
using BasisAction = std::vector<ConeSeries>;

// Element of the pronilpotent group G = exp(g), stored canonically by its
// logarithm. The basis action is a derived, lazily materialized cache.
class GroupElement {
 public:
  explicit GroupElement(LieSeries log);

  static GroupElement identity(const ChargeLattice& lattice,
                               const TruncationCone& cone);

  const LieSeries& log() const { return log_; }
  const ChargeLattice& lattice() const { return log_.lattice(); }
  const TruncationCone& cone() const { return log_.cone(); }
  bool is_identity() const { return log_.is_zero(); }

  // Image of f under the algebra automorphism exp({log, .}), truncated at
  // the ambient height bound.
  ConeSeries apply(const ConeSeries& f) const;

  // Relative action on e_{b_i}; idempotently cached.
  const ConeSeries& basis_action(int i) const;
  const BasisAction& basis_actions() const;

  GroupElement inverse() const { return GroupElement(-log_); }

  bool operator==(const GroupElement& o) const { return log_ == o.log_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }

 private:
  LieSeries log_;
  mutable std::optional<BasisAction> action_;
};

GroupElement exp_group(const LieSeries& h);

inline LieSeries log_group(const GroupElement& F) { return F.log(); }

BasisAction identity_action(const ChargeLattice& lattice,
                            const TruncationCone& cone);

// Composition of actions: the element acting as `then` after whatever
// produced `first`. Returns the relative basis action of the composite.
BasisAction compose_action(const BasisAction& first, const GroupElement& then);

// Recovers the logarithm of a Hamiltonian automorphism from its relative
// basis action. Requires a nondegenerate skew form; throws
// InconsistentAction when the input is not of the form exp({h, .}).
LieSeries log_from_action(const ChargeLattice& lattice,
                          const TruncationCone& cone,
                          const BasisAction& action);

// Group product F * G, acting on functions by f -> F(G(f)) (right factor
// applied first to functions; pinned by the pentagon identity).
GroupElement compose(const GroupElement& F, const GroupElement& G);

GroupElement compose(const std::vector<GroupElement>& factors);

inline ConeSeries apply(const GroupElement& F, const ConeSeries& f) {
  return F.apply(f);
}

// Integer power (negative allowed).
GroupElement group_pow(const GroupElement& F, std::int64_t n);

}  // namespace wallcross

#endif  // WALLCROSS_GROUP_HPP
