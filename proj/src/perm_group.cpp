#include "gkern/perm_group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "gkern/error.hpp"

namespace gkern {

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) {
      std::ostringstream os;
      os << "not a bijection on " << images_.size() << " points: " << *this;
      throw Error(ErrorCode::InvalidPermutation, os.str());
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto from = cycle[i];
      if (from >= degree || used[from]) {
        throw Error(ErrorCode::InvalidPermutation, "cycles overlap or leave the point range");
      }
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "composing permutations of different degree");
  }
  std::vector<std::uint32_t> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[b.images_[i]];
  Permutation p = Permutation::identity(0);
  p.images_ = std::move(out);
  return p;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << '[';
  for (std::size_t i = 0; i < p.images().size(); ++i) {
    if (i) os << ',';
    os << p.images()[i];
  }
  return os << ']';
}

// ---------------------------------------------------------------------------
// FiniteGroup

struct FiniteGroup::Data {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::unordered_map<std::vector<std::uint32_t>, ElementIndex, ImagesHash> index;
  std::vector<ElementIndex> inverse;
};

std::size_t FiniteGroup::degree() const noexcept { return data_->degree; }
std::size_t FiniteGroup::order() const noexcept { return data_->elements.size(); }
const std::vector<Permutation>& FiniteGroup::generators() const noexcept { return data_->generators; }
const std::vector<Permutation>& FiniteGroup::elements() const noexcept { return data_->elements; }

const Permutation& FiniteGroup::element(ElementIndex i) const { return data_->elements.at(i); }

std::optional<ElementIndex> FiniteGroup::index_of(const Permutation& p) const {
  auto it = data_->index.find(p.images());
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

ElementIndex FiniteGroup::multiply(ElementIndex a, ElementIndex b) const {
  const auto& ea = element(a).images();
  const auto& eb = element(b).images();
  std::vector<std::uint32_t> prod(ea.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ea[eb[i]];
  return data_->index.at(prod);
}

ElementIndex FiniteGroup::inverse(ElementIndex a) const { return data_->inverse.at(a); }

ElementIndex FiniteGroup::conjugate(ElementIndex a, ElementIndex b) const {
  return multiply(multiply(a, b), inverse(a));
}

bool FiniteGroup::is_abelian() const {
  for (const auto& g : generators()) {
    for (const auto& h : generators()) {
      if (g * h != h * g) return false;
    }
  }
  return true;
}

bool FiniteGroup::verify_closure() const {
  for (const auto& a : elements()) {
    for (const auto& b : elements()) {
      if (!index_of(a * b)) return false;
    }
    if (!index_of(a.inverse())) return false;
  }
  return !elements().empty() && elements().front().is_identity();
}

FiniteGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators,
                                  std::size_t cap) {
  for (const auto& gen : generators) {
    if (gen.degree() != degree) {
      std::ostringstream os;
      os << "generator " << gen << " has degree " << gen.degree() << ", expected " << degree;
      throw Error(ErrorCode::InvalidPermutation, os.str());
    }
  }
  auto data = std::make_shared<FiniteGroup::Data>();
  data->degree = degree;
  data->generators = generators;

  auto add = [&](Permutation p) {
    if (data->elements.size() >= cap) {
      throw Error(ErrorCode::CapExceeded,
                  "group closure exceeds the element cap of " + std::to_string(cap));
    }
    data->index.emplace(p.images(), data->elements.size());
    data->elements.push_back(std::move(p));
  };

  add(Permutation::identity(degree));
  std::size_t layer_begin = 0;
  std::size_t layer_end = 1;
  while (layer_begin < layer_end) {
    std::set<Permutation> next;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& gen : generators) {
        Permutation p = data->elements[i] * gen;
        if (!data->index.contains(p.images())) next.insert(std::move(p));
      }
    }
    for (const auto& p : next) add(p);
    layer_begin = layer_end;
    layer_end = data->elements.size();
  }

  data->inverse.resize(data->elements.size());
  for (ElementIndex i = 0; i < data->elements.size(); ++i) {
    data->inverse[i] = data->index.at(data->elements[i].inverse().images());
  }
  return FiniteGroup(std::move(data));
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(FiniteGroup parent, std::vector<ElementIndex> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto m : members_) {
    if (m >= parent_.order()) {
      throw Error(ErrorCode::InvalidArgument, "subgroup member index out of range");
    }
  }
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return Subgroup(parent, {parent.identity_index()}); }

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<ElementIndex> all(parent.order());
  std::iota(all.begin(), all.end(), ElementIndex{0});
  return Subgroup(parent, std::move(all));
}

bool Subgroup::contains(ElementIndex a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool Subgroup::is_closed() const {
  if (!contains(parent_.identity_index())) return false;
  for (auto a : members_) {
    if (!contains(parent_.inverse(a))) return false;
    for (auto b : members_) {
      if (!contains(parent_.multiply(a, b))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Operations

std::vector<Point> orbit(const FiniteGroup& g, Point x) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{x};
  seen.at(x) = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& gen : g.generators()) {
      const Point y = gen(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(const FiniteGroup& g) {
  return g.degree() == 0 || orbit(g, 0).size() == g.degree();
}

Subgroup point_stabilizer(const FiniteGroup& g, Point x) {
  if (x >= g.degree()) throw Error(ErrorCode::InvalidArgument, "point out of range");
  std::vector<ElementIndex> members;
  for (ElementIndex a = 0; a < g.order(); ++a) {
    if (g.act(a, x) == x) members.push_back(a);
  }
  return Subgroup(g, std::move(members));
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, ElementIndex beta) {
  std::vector<ElementIndex> members;
  members.reserve(h.order());
  for (auto m : h.members()) members.push_back(g.conjugate(beta, m));
  return Subgroup(g, std::move(members));
}

Subgroup subgroup_normalizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<ElementIndex> members;
  for (ElementIndex b = 0; b < g.order(); ++b) {
    bool normalizes = true;
    for (auto m : h.members()) {
      if (!h.contains(g.conjugate(b, m))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) members.push_back(b);
  }
  return Subgroup(g, std::move(members));
}

std::optional<ElementIndex> are_conjugate_subgroups(const FiniteGroup& g, const Subgroup& h1,
                                                    const Subgroup& h2) {
  if (h1.order() != h2.order()) return std::nullopt;
  for (ElementIndex b = 0; b < g.order(); ++b) {
    if (conjugate_subgroup(g, h1, b) == h2) return b;
  }
  return std::nullopt;
}

Subgroup subgroup_intersection(const Subgroup& h1, const Subgroup& h2) {
  if (!h1.parent().same_group(h2.parent())) {
    throw Error(ErrorCode::ParentMismatch, "intersecting subgroups of different groups");
  }
  std::vector<ElementIndex> out;
  std::set_intersection(h1.members().begin(), h1.members().end(), h2.members().begin(),
                        h2.members().end(), std::back_inserter(out));
  return Subgroup(h1.parent(), std::move(out));
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const ElementIndex> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementIndex> members{g.identity_index()};
  in[g.identity_index()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : gens) {
      const auto p = g.multiply(members[i], s);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

FiniteGroup coset_action(const FiniteGroup& g, const Subgroup& h) {
  // coset_of[a] = index of the coset a h
  std::vector<std::size_t> coset_of(g.order(), SIZE_MAX);
  std::size_t count = 0;
  for (ElementIndex a = 0; a < g.order(); ++a) {
    if (coset_of[a] != SIZE_MAX) continue;
    for (auto m : h.members()) coset_of[g.multiply(a, m)] = count;
    ++count;
  }
  std::vector<ElementIndex> representative(count);
  for (ElementIndex a = g.order(); a-- > 0;) representative[coset_of[a]] = a;

  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    const ElementIndex si = *g.index_of(s);
    std::vector<std::uint32_t> images(count);
    for (std::size_t c = 0; c < count; ++c) {
      images[c] = static_cast<std::uint32_t>(coset_of[g.multiply(si, representative[c])]);
    }
    gens.emplace_back(std::move(images));
  }
  return group_from_generators(count, std::move(gens), std::max<std::size_t>(g.order(), 1));
}

FiniteGroup relabel(const FiniteGroup& g, const Permutation& sigma) {
  if (sigma.degree() != g.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "relabeling permutation has the wrong degree");
  }
  const Permutation inv = sigma.inverse();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(sigma * s * inv);
  return group_from_generators(g.degree(), std::move(gens), std::max<std::size_t>(g.order(), 1));
}

namespace {

std::size_t parse_count(std::string_view key, std::string_view digits) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value == 0) {
    throw Error(ErrorCode::InvalidArgument, "bad group family key '" + std::string(key) + "'");
  }
  return value;
}

Permutation cycle_generator(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Permutation(std::move(images));
}

}  // namespace

FiniteGroup named_group(std::string_view key, std::size_t cap) {
  const auto colon = key.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "bad group family key '" + std::string(key) + "'");
  }
  const std::string_view family = key.substr(0, colon);
  const std::string_view rest = key.substr(colon + 1);

  if (family == "regular") {
    const FiniteGroup base = named_group(rest, cap);
    return coset_action(base, Subgroup::trivial(base));
  }
  const std::size_t n = parse_count(key, rest);
  std::vector<Permutation> gens;
  if (family == "cyclic") {
    gens.push_back(cycle_generator(n));
  } else if (family == "dihedral") {
    gens.push_back(cycle_generator(n));
    std::vector<std::uint32_t> reflection(n);
    for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<std::uint32_t>((n - i) % n);
    gens.emplace_back(std::move(reflection));
  } else if (family == "symmetric") {
    if (n >= 2) {
      gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
      if (n >= 3) gens.push_back(cycle_generator(n));
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown group family '" + std::string(key) + "'");
  }
  return group_from_generators(n, std::move(gens), cap);
}

FiniteGroup parse_group_text(std::string_view text, std::size_t cap) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string body = line.substr(first, last - first + 1);
    if (!degree) {
      std::size_t d = 0;
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), d);
      if (ec != std::errc{} || ptr != body.data() + body.size()) fail("expected the degree");
      degree = d;
      continue;
    }
    if (body.front() != '[' || body.back() != ']') fail("expected [i0,i1,...]");
    std::vector<std::uint32_t> images;
    std::string_view inner(body.data() + 1, body.size() - 2);
    while (!inner.empty()) {
      const auto comma = inner.find(',');
      std::string_view tok = inner.substr(0, comma);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        fail("bad image entry '" + std::string(tok) + "'");
      }
      images.push_back(v);
      if (comma == std::string_view::npos) break;
      inner.remove_prefix(comma + 1);
    }
    if (images.size() != *degree) fail("generator length differs from the degree");
    gens.emplace_back(std::move(images));
  }
  if (!degree) throw Error(ErrorCode::ParseError, "missing degree line");
  return group_from_generators(*degree, std::move(gens), cap);
}

}  // namespace gkern
