#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gkern {

/// A point of the finite set X = {0, ..., n-1}.
using Point = std::size_t;
/// Position of an element in FiniteGroup::elements().
using ElementIndex = std::size_t;

inline constexpr std::size_t kDefaultElementCap = 10'000;

/// A bijection of {0, ..., n-1}; images()[i] is the image of point i.
///
/// Composition follows the left-action convention: (a * b)(x) = a(b(x)).
class Permutation {
public:
  /// Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Cycle notation, e.g. {{0, 1, 2}} on `degree` points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  Point operator()(Point x) const { return images_[x]; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<std::uint32_t> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// A finite permutation group with an explicit, deterministically ordered
/// element list. Immutable; copies share the same underlying data, and two
/// handles refer to the same group iff same_group() is true.
class FiniteGroup {
public:
  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  const std::vector<Permutation>& elements() const noexcept;
  const Permutation& element(ElementIndex i) const;
  ElementIndex identity_index() const noexcept { return 0; }

  std::optional<ElementIndex> index_of(const Permutation& p) const;
  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const;
  /// a * b * a^-1
  ElementIndex conjugate(ElementIndex a, ElementIndex b) const;
  /// Image of point x under element a.
  Point act(ElementIndex a, Point x) const { return element(a)(x); }

  bool same_group(const FiniteGroup& other) const noexcept { return data_ == other.data_; }
  bool is_abelian() const;

  /// Every pairwise product lands in the element set.
  bool verify_closure() const;

  struct Data;

private:
  friend FiniteGroup group_from_generators(std::size_t, std::vector<Permutation>, std::size_t);
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// A subgroup stored as a sorted set of element indices of its parent.
class Subgroup {
public:
  /// Sorts and deduplicates; closure is not checked here (see is_closed()).
  Subgroup(FiniteGroup parent, std::vector<ElementIndex> members);

  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<ElementIndex>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(ElementIndex a) const;
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_subset_of(const Subgroup& other) const;
  /// Contains the identity and is closed under products and inverses.
  bool is_closed() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_group(b.parent_) && a.members_ == b.members_;
  }

private:
  FiniteGroup parent_;
  std::vector<ElementIndex> members_;
};

/// Closure of `generators` by breadth-first multiplication. Elements are
/// ordered identity first, then by BFS layer, each layer sorted
/// lexicographically by image array.
FiniteGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators,
                                  std::size_t cap = kDefaultElementCap);

std::vector<Point> orbit(const FiniteGroup& g, Point x);
bool is_transitive(const FiniteGroup& g);
Subgroup point_stabilizer(const FiniteGroup& g, Point x);
Subgroup subgroup_normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, ElementIndex beta);
/// First beta in element order with beta h1 beta^-1 = h2.
std::optional<ElementIndex> are_conjugate_subgroups(const FiniteGroup& g, const Subgroup& h1,
                                                    const Subgroup& h2);
Subgroup subgroup_intersection(const Subgroup& h1, const Subgroup& h2);
/// Subgroup generated by the given elements.
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const ElementIndex> gens);

/// Left-multiplication action of G on the left cosets of h. Cosets are
/// ordered by their smallest member index.
FiniteGroup coset_action(const FiniteGroup& g, const Subgroup& h);

/// The same action with points renamed by `sigma` (x -> sigma(x)); sigma
/// need not belong to g.
FiniteGroup relabel(const FiniteGroup& g, const Permutation& sigma);

/// Named families: cyclic:n, dihedral:n, symmetric:n, regular:<family>.
/// Throws InvalidArgument naming the bad key.
FiniteGroup named_group(std::string_view key, std::size_t cap = kDefaultElementCap);

/// Text format: degree on the first line, then one generator per line as
/// `[i0,i1,...]`. Blank lines and lines starting with '#' are ignored.
FiniteGroup parse_group_text(std::string_view text, std::size_t cap = kDefaultElementCap);

}  // namespace gkern
