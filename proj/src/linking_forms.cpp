#include "hfsplit/linking_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "hfsplit/errors.hpp"

namespace hfsplit::forms {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t lcm_of(const std::vector<std::int64_t>& v) {
  std::int64_t l = 1;
  for (auto x : v) l = std::lcm(l, x);
  return l;
}

std::int64_t isqrt_exact(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  // extended Euclid
  std::int64_t t = 0, new_t = 1, r = p, new_r = floor_mod(a, p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InvalidInput("element not invertible mod " + std::to_string(p));
  return floor_mod(t, p);
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// FiniteAbelianGroup

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  strides_.assign(orders_.size(), 1);
  order_ = 1;
  for (std::size_t k = orders_.size(); k-- > 0;) {
    if (orders_[k] < 2) throw InvalidInput("cyclic orders must be >= 2");
    strides_[k] = order_;
    if (order_ > std::numeric_limits<std::int64_t>::max() / orders_[k])
      throw TooLarge("group order overflows");
    order_ *= orders_[k];
  }
}

std::int64_t FiniteAbelianGroup::index_of(const Element& x) const {
  if (x.size() != orders_.size()) throw InvalidInput("element has wrong number of coordinates");
  std::int64_t idx = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) idx += floor_mod(x[k], orders_[k]) * strides_[k];
  return idx;
}

Element FiniteAbelianGroup::element(std::int64_t index) const {
  Element x(orders_.size());
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    x[k] = index / strides_[k];
    index %= strides_[k];
  }
  return x;
}

Element FiniteAbelianGroup::reduce(Element x) const {
  if (x.size() != orders_.size()) throw InvalidInput("element has wrong number of coordinates");
  for (std::size_t k = 0; k < orders_.size(); ++k) x[k] = floor_mod(x[k], orders_[k]);
  return x;
}

Element FiniteAbelianGroup::add(const Element& x, const Element& y) const {
  Element z(orders_.size());
  for (std::size_t k = 0; k < orders_.size(); ++k) z[k] = floor_mod(x[k] + y[k], orders_[k]);
  return z;
}

Element FiniteAbelianGroup::scale(std::int64_t c, const Element& x) const {
  Element z(orders_.size());
  for (std::size_t k = 0; k < orders_.size(); ++k) z[k] = floor_mod(c % orders_[k] * x[k], orders_[k]);
  return z;
}

std::int64_t FiniteAbelianGroup::add_index(std::int64_t x, std::int64_t y) const {
  std::int64_t z = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const std::int64_t a = x / strides_[k];
    const std::int64_t b = y / strides_[k];
    x %= strides_[k];
    y %= strides_[k];
    z += ((a + b) % orders_[k]) * strides_[k];
  }
  return z;
}

// ---------------------------------------------------------------------------------------------
// LinkingForm

LinkingForm::LinkingForm(FiniteAbelianGroup group, const std::vector<Rational>& pairing)
    : group_(std::move(group)) {
  const std::size_t r = group_.rank();
  if (pairing.size() != r * r) throw InvalidInput("pairing matrix must be rank x rank");
  exponent_ = lcm_of(group_.cyclic_orders());
  scaled_.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Rational v = mod_one(pairing[i * r + j]);
      if (v != mod_one(pairing[j * r + i])) throw InvalidInput("pairing matrix is not symmetric");
      if (!is_integer(v * group_.cyclic_orders()[i]))
        throw InvalidInput("pairing entry " + to_string(v) + " is not killed by the order of e_" +
                           std::to_string(i));
      scaled_[i * r + j] = to_int64(v * exponent_);
    }
  }
  build_cache();
}

void LinkingForm::build_cache() {
  characters_.clear();
  const std::size_t r = group_.rank();
  if (group_.order() > 4 * static_cast<std::int64_t>(kEnumerationBound)) return;
  characters_.assign(static_cast<std::size_t>(group_.order()) * r, 0);
  for (std::int64_t x = 0; x < group_.order(); ++x) {
    const Element e = group_.element(x);
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < r; ++i) acc = (acc + e[i] * scaled_[i * r + j]) % exponent_;
      characters_[static_cast<std::size_t>(x) * r + j] = acc;
    }
  }
}

Rational LinkingForm::entry(std::size_t i, std::size_t j) const {
  return Rational(scaled_.at(i * group_.rank() + j), exponent_);
}

std::vector<Rational> LinkingForm::pairing() const {
  std::vector<Rational> out;
  out.reserve(scaled_.size());
  for (auto v : scaled_) out.emplace_back(v, exponent_);
  return out;
}

std::int64_t LinkingForm::pair_scaled(std::int64_t x, std::int64_t y) const {
  const std::size_t r = group_.rank();
  if (!characters_.empty()) {
    const Element ey = group_.element(y);
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < r; ++j)
      acc = (acc + characters_[static_cast<std::size_t>(x) * r + j] * ey[j]) % exponent_;
    return acc;
  }
  const Element ex = group_.element(x);
  const Element ey = group_.element(y);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      acc = (acc + ex[i] * ey[j] % exponent_ * scaled_[i * r + j]) % exponent_;
  return acc;
}

Rational LinkingForm::pair(const Element& x, const Element& y) const {
  return Rational(pair_scaled(group_.index_of(x), group_.index_of(y)), exponent_);
}

bool LinkingForm::is_nonsingular() const {
  const std::size_t r = group_.rank();
  for (std::int64_t x = 1; x < group_.order(); ++x) {
    bool detected = false;
    for (std::size_t j = 0; j < r && !detected; ++j) {
      Element ej(r, 0);
      ej[j] = 1;
      detected = pair_scaled(x, group_.index_of(ej)) != 0;
    }
    if (!detected) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(const FiniteAbelianGroup& ambient, std::vector<std::int64_t> sorted_indices)
    : ambient_(ambient), indices_(std::move(sorted_indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

namespace {

// Adds g to the subgroup whose members are `elems` (flagged in `member`).
void extend_closure(const FiniteAbelianGroup& G, std::vector<std::int64_t>& elems,
                    std::vector<char>& member, std::int64_t g) {
  const std::vector<std::int64_t> base = elems;
  std::int64_t shift = g;
  while (!member[static_cast<std::size_t>(shift)]) {
    for (auto h : base) {
      const std::int64_t x = G.add_index(h, shift);
      member[static_cast<std::size_t>(x)] = 1;
      elems.push_back(x);
    }
    shift = G.add_index(shift, g);
  }
}

}  // namespace

Subgroup Subgroup::generated_by(const FiniteAbelianGroup& ambient, const std::vector<Element>& gens) {
  std::vector<char> member(static_cast<std::size_t>(ambient.order()), 0);
  std::vector<std::int64_t> elems{0};
  member[0] = 1;
  for (const auto& g : gens) extend_closure(ambient, elems, member, ambient.index_of(g));
  return Subgroup(ambient, std::move(elems));
}

bool Subgroup::contains_index(std::int64_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool Subgroup::contains(const Element& x) const { return contains_index(ambient_.index_of(x)); }

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(ambient_.element(i));
  return out;
}

std::vector<Element> Subgroup::generators() const {
  std::vector<char> member(static_cast<std::size_t>(ambient_.order()), 0);
  std::vector<std::int64_t> elems{0};
  member[0] = 1;
  std::vector<Element> gens;
  for (auto i : indices_) {
    if (member[static_cast<std::size_t>(i)]) continue;
    gens.push_back(ambient_.element(i));
    extend_closure(ambient_, elems, member, i);
  }
  return gens;
}

// ---------------------------------------------------------------------------------------------
// Constructions

LinkingForm lens_linking_form(std::int64_t m, std::int64_t n) {
  if (m < 2) throw InvalidInput("lens_linking_form: need m >= 2");
  if (std::gcd(m, n) != 1) throw InvalidInput("lens_linking_form: m and n must be coprime");
  return LinkingForm(FiniteAbelianGroup({m}), {Rational(-n, m)});
}

LinkingForm direct_sum(const LinkingForm& f1, const LinkingForm& f2) {
  const std::size_t r1 = f1.group().rank();
  const std::size_t r2 = f2.group().rank();
  std::vector<std::int64_t> orders = f1.group().cyclic_orders();
  orders.insert(orders.end(), f2.group().cyclic_orders().begin(), f2.group().cyclic_orders().end());
  const std::size_t r = r1 + r2;
  std::vector<Rational> mat(r * r, Rational(0));
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < r1; ++j) mat[i * r + j] = f1.entry(i, j);
  for (std::size_t i = 0; i < r2; ++i)
    for (std::size_t j = 0; j < r2; ++j) mat[(r1 + i) * r + r1 + j] = f2.entry(i, j);
  return LinkingForm(FiniteAbelianGroup(std::move(orders)), mat);
}

LinkingForm negate(const LinkingForm& f) {
  std::vector<Rational> mat = f.pairing();
  for (auto& v : mat) v = -v;
  return LinkingForm(f.group(), mat);
}

LinkingForm multiple(const LinkingForm& f, int k) {
  if (k < 1) throw InvalidInput("multiple: k must be positive");
  LinkingForm out = f;
  for (int c = 1; c < k; ++c) out = direct_sum(out, f);
  return out;
}

LinkingForm primary_part(const LinkingForm& f, std::int64_t p) {
  if (p < 2 || factor(p).size() != 1 || factor(p).front().second != 1)
    throw InvalidInput("primary_part: p must be prime");
  const auto& orders = f.group().cyclic_orders();
  std::vector<std::size_t> kept;
  std::vector<std::int64_t> new_orders, cofactor;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::int64_t pk = 1, o = orders[i];
    while (o % p == 0) {
      o /= p;
      pk *= p;
    }
    if (pk == 1) continue;
    kept.push_back(i);
    new_orders.push_back(pk);
    cofactor.push_back(o);
  }
  const std::size_t r = kept.size();
  std::vector<Rational> mat(r * r, Rational(0));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      mat[a * r + b] = f.entry(kept[a], kept[b]) * cofactor[a] * cofactor[b];
  return LinkingForm(FiniteAbelianGroup(std::move(new_orders)), mat);
}

Subgroup orthogonal_complement(const LinkingForm& f, const Subgroup& H) {
  const auto gens = H.generators();
  std::vector<std::int64_t> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(f.group().index_of(g));
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < f.group().order(); ++x) {
    bool orth = true;
    for (auto g : gen_idx)
      if (f.pair_scaled(x, g) != 0) {
        orth = false;
        break;
      }
    if (orth) out.push_back(x);
  }
  return Subgroup(f.group(), std::move(out));
}

bool is_isotropic(const LinkingForm& f, const Subgroup& H) {
  const auto gens = H.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b)
      if (f.pair(gens[a], gens[b]) != 0) return false;
  return true;
}

bool is_metabolizer(const LinkingForm& f, const Subgroup& H) {
  if (!(H.ambient() == f.group())) return false;
  const auto n = static_cast<std::int64_t>(H.order());
  return n * n == f.group().order() && is_isotropic(f, H);
}

// ---------------------------------------------------------------------------------------------
// Metabolizer search
//
// Depth-first over isotropic subgroups: a node is an isotropic subgroup H, its children are
// <H, g> for isotropic g orthogonal to H. A subgroup is expanded once. Subgroups whose order
// does not divide sqrt|G| cannot lie in a metabolizer and are pruned.

namespace {

class MetabolizerSearch {
 public:
  MetabolizerSearch(const LinkingForm& f, bool first_only) : f_(f), G_(f.group()), first_only_(first_only) {}

  std::vector<Subgroup> run() {
    const std::int64_t order = G_.order();
    target_ = isqrt_exact(order);
    if (target_ * target_ != order) return {};
    if (target_ == 1) return {Subgroup(G_, {0})};
    std::vector<std::int64_t> isotropic;
    for (std::int64_t x = 1; x < order; ++x)
      if (f_.pair_scaled(x, x) == 0) isotropic.push_back(x);
    std::vector<char> member(static_cast<std::size_t>(order), 0);
    member[0] = 1;
    dfs({0}, member, isotropic);
    std::vector<Subgroup> out(found_.begin(), found_.end());
    return out;
  }

 private:
  void dfs(const std::vector<std::int64_t>& elems, const std::vector<char>& member,
           const std::vector<std::int64_t>& candidates) {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (first_only_ && !found_.empty()) return;
      const std::int64_t g = candidates[c];
      if (member[static_cast<std::size_t>(g)]) continue;
      std::vector<std::int64_t> child = elems;
      std::vector<char> child_member = member;
      extend_closure(G_, child, child_member, g);
      const auto size = static_cast<std::int64_t>(child.size());
      if (target_ % size != 0) continue;
      std::sort(child.begin(), child.end());
      if (!visited_.insert(child).second) continue;
      if (size == target_) {
        found_.emplace(G_, child);
        continue;
      }
      std::vector<std::int64_t> next;
      for (std::size_t d = c + 1; d < candidates.size(); ++d) {
        const std::int64_t h = candidates[d];
        if (!child_member[static_cast<std::size_t>(h)] && f_.pair_scaled(g, h) == 0) next.push_back(h);
      }
      // Earlier candidates may still be needed: the same child can be reached from a
      // different generator, and `visited_` makes the second arrival free.
      for (std::size_t d = 0; d < c; ++d) {
        const std::int64_t h = candidates[d];
        if (!child_member[static_cast<std::size_t>(h)] && f_.pair_scaled(g, h) == 0) next.push_back(h);
      }
      dfs(child, child_member, next);
    }
  }

  const LinkingForm& f_;
  const FiniteAbelianGroup& G_;
  bool first_only_;
  std::int64_t target_ = 0;
  std::set<std::vector<std::int64_t>> visited_;
  std::set<Subgroup> found_;
};

void check_bound(const LinkingForm& f, std::size_t bound) {
  if (f.group().order() > static_cast<std::int64_t>(bound))
    throw TooLarge("group of order " + std::to_string(f.group().order()) +
                   " exceeds the enumeration bound " + std::to_string(bound));
}

}  // namespace

std::vector<Subgroup> enumerate_metabolizers(const LinkingForm& f, std::size_t bound) {
  check_bound(f, bound);
  auto out = MetabolizerSearch(f, false).run();
  for (const auto& H : out) {
    if (orthogonal_complement(f, H) != H && f.is_nonsingular())
      throw std::logic_error("metabolizer is not self-orthogonal");
  }
  return out;
}

std::optional<Subgroup> find_metabolizer(const LinkingForm& f, std::size_t bound) {
  check_bound(f, bound);
  auto out = MetabolizerSearch(f, true).run();
  if (out.empty()) return std::nullopt;
  return out.front();
}

Subgroup split_projection_metabolizer(const LinkingForm& f1, const LinkingForm& f2,
                                      const Subgroup& M, const Subgroup& M2) {
  const LinkingForm sum = direct_sum(f1, f2);
  if (!is_metabolizer(sum, M)) throw NotAMetabolizer("M is not a metabolizer of f1 + f2");
  if (!is_metabolizer(f2, M2)) throw NotAMetabolizer("M2 is not a metabolizer of f2");
  const std::size_t r1 = f1.group().rank();
  std::vector<std::int64_t> out;
  for (const auto& x : M.elements()) {
    const Element g(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r1));
    const Element h(x.begin() + static_cast<std::ptrdiff_t>(r1), x.end());
    if (M2.contains(h)) out.push_back(f1.group().index_of(g));
  }
  Subgroup result(f1.group(), std::move(out));
  if (!is_metabolizer(f1, result))
    throw std::logic_error("projection through a metabolizer is not a metabolizer");
  return result;
}

UnitCoordinateReport verify_unit_first_coordinate(std::int64_t p, const LinkingForm& f,
                                                  std::size_t bound) {
  const auto& orders = f.group().cyclic_orders();
  if (orders.empty() || orders.front() != p)
    throw InvalidInput("verify_unit_first_coordinate: first summand must be Z_p");
  UnitCoordinateReport report;
  const auto mets = enumerate_metabolizers(f, bound);
  report.metabolizers = mets.size();
  for (const auto& M : mets) {
    const auto elems = M.elements();
    const bool has_unit = std::any_of(elems.begin(), elems.end(), [](const Element& x) { return x[0] == 1; });
    if (!has_unit) report.holds = false;
  }
  return report;
}

MultipleMetabolizerReport verify_multiple_metabolizer(std::int64_t p, int k, const LinkingForm& f,
                                                      std::size_t bound) {
  const auto& orders = f.group().cyclic_orders();
  if (orders.empty() || orders.front() != p)
    throw InvalidInput("verify_multiple_metabolizer: first summand must be Z_p");
  if (k < 1) throw InvalidInput("verify_multiple_metabolizer: k must be positive");
  const LinkingForm big = multiple(f, 4 * k);
  const std::size_t r = f.group().rank();
  MultipleMetabolizerReport report;
  const auto mets = enumerate_metabolizers(big, bound);
  report.metabolizers = mets.size();
  for (const auto& M : mets) {
    bool ok = false;
    for (const auto& x : M.elements()) {
      bool ones = true;
      for (int c = 0; c < 2 * k && ones; ++c) ones = x[static_cast<std::size_t>(c) * r] == 1;
      if (ones) {
        ok = true;
        break;
      }
    }
    if (!ok) report.holds = false;
  }
  return report;
}

Echelon echelon_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  Echelon out;
  if (rows.empty()) return out;
  const std::size_t cols = rows.front().size();
  for (auto& row : rows) {
    if (row.size() != cols) throw InvalidInput("echelon_mod_p: ragged rows");
    for (auto& v : row) v = floor_mod(v, p);
  }
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const std::int64_t inv = inverse_mod(rows[lead][col], p);
    for (auto& v : rows[lead]) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      const std::int64_t c = rows[r][col];
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = floor_mod(rows[r][j] - c * rows[lead][j], p);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  out.rows = std::move(rows);
  return out;
}

// ---------------------------------------------------------------------------------------------
// Form catalogues

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<LinkingForm> all_nonsingular_forms(const FiniteAbelianGroup& group, std::size_t max_forms) {
  const auto& o = group.cyclic_orders();
  const std::size_t r = o.size();
  // Free entries (i <= j) and how many values each can take.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<std::int64_t> choices;
  double total = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      slots.emplace_back(i, j);
      choices.push_back(std::gcd(o[i], o[j]));
      total *= static_cast<double>(choices.back());
    }
  if (total > static_cast<double>(max_forms))
    throw TooLarge("too many pairing matrices on this group: " + std::to_string(total));
  std::vector<LinkingForm> out;
  std::vector<std::int64_t> digit(slots.size(), 0);
  while (true) {
    std::vector<Rational> mat(r * r, Rational(0));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto [i, j] = slots[s];
      mat[i * r + j] = mat[j * r + i] = Rational(digit[s], choices[s]);
    }
    LinkingForm f(group, mat);
    if (f.is_nonsingular()) out.push_back(std::move(f));
    std::size_t s = 0;
    while (s < digit.size() && ++digit[s] == choices[s]) digit[s++] = 0;
    if (s == digit.size()) break;
  }
  return out;
}

namespace {

struct Block {
  int exponent;  // log_p of the block order
  LinkingForm form;
};

std::int64_t smallest_nonresidue(std::int64_t p) {
  for (std::int64_t u = 2; u < p; ++u) {
    bool square = false;
    for (std::int64_t x = 1; x < p && !square; ++x) square = x * x % p == u;
    if (!square) return u;
  }
  return 1;
}

std::vector<Block> elementary_blocks(std::int64_t p, int max_exponent) {
  std::vector<Block> out;
  std::int64_t pk = 1;
  for (int k = 1; k <= max_exponent; ++k) {
    pk *= p;
    FiniteAbelianGroup cyc({pk});
    std::vector<std::int64_t> units;
    if (p == 2) {
      units = k == 1 ? std::vector<std::int64_t>{1}
              : k == 2 ? std::vector<std::int64_t>{1, 3}
                       : std::vector<std::int64_t>{1, 3, 5, 7};
    } else {
      units = {1, smallest_nonresidue(p)};
    }
    for (auto u : units) out.push_back({k, LinkingForm(cyc, {Rational(u, pk)})});
    if (p == 2 && 2 * k <= max_exponent) {
      FiniteAbelianGroup plane({pk, pk});
      const Rational h(1, pk);
      out.push_back({2 * k, LinkingForm(plane, {Rational(0), h, h, Rational(0)})});
      if (k >= 2) out.push_back({2 * k, LinkingForm(plane, {Rational(2, pk), h, h, Rational(2, pk)})});
    }
  }
  return out;
}

void block_multisets(const std::vector<Block>& blocks, std::size_t start, int remaining,
                     std::vector<std::size_t>& chosen, std::vector<LinkingForm>& out) {
  if (remaining == 0) {
    LinkingForm f = blocks[chosen.front()].form;
    for (std::size_t c = 1; c < chosen.size(); ++c) f = direct_sum(f, blocks[chosen[c]].form);
    out.push_back(std::move(f));
    return;
  }
  for (std::size_t b = start; b < blocks.size(); ++b) {
    if (blocks[b].exponent > remaining) continue;
    chosen.push_back(b);
    block_multisets(blocks, b, remaining - blocks[b].exponent, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<LinkingForm> elementary_sum_forms(std::int64_t order) {
  if (order < 1) throw InvalidInput("elementary_sum_forms: order must be positive");
  std::vector<LinkingForm> acc{LinkingForm()};
  for (const auto& [p, e] : factor(order)) {
    const auto blocks = elementary_blocks(p, e);
    std::vector<LinkingForm> primary;
    std::vector<std::size_t> chosen;
    block_multisets(blocks, 0, e, chosen, primary);
    std::vector<LinkingForm> next;
    for (const auto& a : acc)
      for (const auto& b : primary) next.push_back(a.group().is_trivial() ? b : direct_sum(a, b));
    acc = std::move(next);
  }
  return acc;
}

}  // namespace hfsplit::forms
