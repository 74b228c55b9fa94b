#pragma once

// Finite abelian groups, Q/Z-valued linking forms and metabolizer search.
//
// Groups are direct sums of cyclic groups Z_{o_1} + ... + Z_{o_k}. Elements are coefficient
// vectors; internally they are also numbered in lexicographic (mixed radix) order, which is
// the order every enumeration in this module returns.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hfsplit/rational.hpp"

namespace hfsplit::forms {

using Element = std::vector<std::int64_t>;

/// Default ceiling on |G| for exhaustive searches.
inline constexpr std::size_t kEnumerationBound = 10000;

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;  // trivial group
  /// Every order must be >= 2.
  explicit FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders);

  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::int64_t order() const { return order_; }
  bool is_trivial() const { return orders_.empty(); }

  std::int64_t index_of(const Element& x) const;
  Element element(std::int64_t index) const;
  Element reduce(Element x) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(std::int64_t k, const Element& x) const;
  std::int64_t add_index(std::int64_t x, std::int64_t y) const;

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 1;
};

/// Symmetric bilinear pairing G x G -> Q/Z given on generators.
class LinkingForm {
 public:
  LinkingForm() = default;
  /// `pairing` is row-major rank x rank. Entries are reduced mod 1. Throws InvalidInput if
  /// the matrix is not symmetric or some entry is not killed by the order of its generator.
  /// Nonsingularity is not required here; see is_nonsingular().
  LinkingForm(FiniteAbelianGroup group, const std::vector<Rational>& pairing);

  const FiniteAbelianGroup& group() const { return group_; }
  /// Entry (i, j) in [0, 1).
  Rational entry(std::size_t i, std::size_t j) const;
  std::vector<Rational> pairing() const;

  Rational pair(const Element& x, const Element& y) const;
  /// beta(x, y) * exponent, as an integer mod exponent (fast path).
  std::int64_t pair_scaled(std::int64_t x, std::int64_t y) const;
  std::int64_t exponent() const { return exponent_; }

  /// Adjoint G -> Hom(G, Q/Z) is injective (hence bijective).
  bool is_nonsingular() const;

  bool operator==(const LinkingForm&) const = default;

 private:
  void build_cache();

  FiniteAbelianGroup group_;
  std::int64_t exponent_ = 1;
  std::vector<std::int64_t> scaled_;  // entry(i,j) * exponent
  // For each element x, beta(x, e_j) * exponent for every generator e_j.
  std::vector<std::int64_t> characters_;
};

/// A subgroup stored as its sorted element indices, which makes equality syntactic.
class Subgroup {
 public:
  Subgroup(const FiniteAbelianGroup& ambient, std::vector<std::int64_t> sorted_indices);

  /// Closure of the given elements.
  static Subgroup generated_by(const FiniteAbelianGroup& ambient, const std::vector<Element>& gens);

  const FiniteAbelianGroup& ambient() const { return ambient_; }
  const std::vector<std::int64_t>& indices() const { return indices_; }
  std::size_t order() const { return indices_.size(); }
  bool contains(const Element& x) const;
  bool contains_index(std::int64_t i) const;
  std::vector<Element> elements() const;
  /// Greedy generators in element order: the first element not in the span of the earlier
  /// choices is taken. Determined by the subgroup alone.
  std::vector<Element> generators() const;

  bool operator==(const Subgroup& o) const { return indices_ == o.indices_ && ambient_ == o.ambient_; }
  bool operator<(const Subgroup& o) const { return indices_ < o.indices_; }

 private:
  FiniteAbelianGroup ambient_;
  std::vector<std::int64_t> indices_;
};

/// beta(1,1) = -n/m on Z_m.
LinkingForm lens_linking_form(std::int64_t m, std::int64_t n);

LinkingForm direct_sum(const LinkingForm& f1, const LinkingForm& f2);
LinkingForm negate(const LinkingForm& f);
/// f + f + ... + f (k copies).
LinkingForm multiple(const LinkingForm& f, int k);

/// Restriction to the p-torsion, re-presented on the cyclic generators (o_i / p^v) e_i.
LinkingForm primary_part(const LinkingForm& f, std::int64_t p);

/// Elements orthogonal to all of H.
Subgroup orthogonal_complement(const LinkingForm& f, const Subgroup& H);

bool is_isotropic(const LinkingForm& f, const Subgroup& H);
/// H isotropic and |H|^2 = |G|; for a nonsingular form this is H = H^perp.
bool is_metabolizer(const LinkingForm& f, const Subgroup& H);

/// Every metabolizer of f, in increasing order of element-index lists. Empty when none
/// exists (in particular when |G| is not a square). Throws TooLarge if |G| > bound.
std::vector<Subgroup> enumerate_metabolizers(const LinkingForm& f,
                                             std::size_t bound = kEnumerationBound);

/// First metabolizer found by the same search, or nullopt.
std::optional<Subgroup> find_metabolizer(const LinkingForm& f,
                                         std::size_t bound = kEnumerationBound);

/// Splitting of metabolizers through a metabolic summand:
/// {g in G1 : (g, h) in M for some h in M2}.
///
/// `M` must be a metabolizer of f1 + f2 and `M2` of f2 (NotAMetabolizer otherwise). The result
/// is checked to be a metabolizer of f1; std::logic_error signals a counterexample.
Subgroup split_projection_metabolizer(const LinkingForm& f1, const LinkingForm& f2,
                                      const Subgroup& M, const Subgroup& M2);

struct UnitCoordinateReport {
  bool holds = true;
  std::size_t metabolizers = 0;  ///< zero means the statement held vacuously
};

/// For f on Z_p + G: does every metabolizer contain some (1, a)?
UnitCoordinateReport verify_unit_first_coordinate(std::int64_t p, const LinkingForm& f,
                                                  std::size_t bound = kEnumerationBound);

struct MultipleMetabolizerReport {
  bool holds = true;
  std::size_t metabolizers = 0;
};

/// For f on Z_p + G: does every metabolizer of the 4k-fold sum contain an element whose
/// Z_p-coordinates in the first 2k copies all equal 1?
MultipleMetabolizerReport verify_multiple_metabolizer(std::int64_t p, int k, const LinkingForm& f,
                                                      std::size_t bound = kEnumerationBound);

/// Reduced row echelon form over Z_p (p prime). Zero rows are dropped.
struct Echelon {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::size_t> pivots;
};
Echelon echelon_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p);

/// Every nonsingular form on `group`, one per symmetric well-defined pairing matrix.
/// Throws TooLarge if more than `max_forms` matrices would have to be examined.
std::vector<LinkingForm> all_nonsingular_forms(const FiniteAbelianGroup& group,
                                               std::size_t max_forms = 200000);

/// Orthogonal sums of elementary forms (u/p^k on Z_{p^k}; for p = 2 also the two
/// hyperbolic-type planes on Z_{2^k}^2) over every abelian group of the given order. Every
/// nonsingular form of that order is isometric to at least one entry.
std::vector<LinkingForm> elementary_sum_forms(std::int64_t order);

/// Prime factorisation by trial division, ascending primes.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n);

}  // namespace hfsplit::forms
