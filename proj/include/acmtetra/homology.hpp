#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "acmtetra/error.hpp"
#include "acmtetra/polarization.hpp"
#include "acmtetra/variables.hpp"

namespace acmtetra {

inline constexpr std::size_t kDefaultComplexVertexLimit = 16;
inline constexpr std::size_t kDefaultHochsterVertexLimit = 14;
inline constexpr std::size_t kMaxStanleyReisnerVertices = 20;

// Faces are bit masks over the complex's vertex list.
using FaceMask = std::uint32_t;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(Universe universe, std::vector<VarId> vertices, std::vector<FaceMask> facets)
      : universe_(std::move(universe)), vertices_(std::move(vertices)), facets_(std::move(facets)) {
    if (vertices_.size() > 32) throw Error(ErrorKind::resource_limit, "complexes are limited to 32 vertices");
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    std::vector<FaceMask> maximal;
    for (FaceMask f : facets_) {
      bool contained = std::any_of(facets_.begin(), facets_.end(),
                                   [&](FaceMask g) { return g != f && (f & ~g) == 0; });
      if (!contained) maximal.push_back(f);
    }
    facets_ = std::move(maximal);
  }

  const Universe& universe() const { return universe_; }
  const std::vector<VarId>& vertices() const { return vertices_; }
  const std::vector<FaceMask>& facets() const { return facets_; }

  // No facets at all: not even the empty face.
  bool is_void() const { return facets_.empty(); }

  int dimension() const {
    int d = -1;
    for (FaceMask f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
  }

  std::vector<VarId> face_vertices(FaceMask f) const {
    std::vector<VarId> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if ((f >> i) & 1u) out.push_back(vertices_[i]);
    return out;
  }

  // Every face, closed downwards from the facets, sorted.
  std::vector<FaceMask> faces() const {
    std::vector<FaceMask> out;
    for (FaceMask f : facets_) {
      FaceMask sub = f;
      while (true) {
        out.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & f;
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  Universe universe_;
  std::vector<VarId> vertices_;
  std::vector<FaceMask> facets_;
};

// Graded Betti numbers beta_{i,d}; only nonzero entries are stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (homological index i, internal degree d)

  void add(int i, int d, std::uint64_t rank) {
    if (rank != 0) entries_[{i, d}] += rank;
  }
  std::uint64_t get(int i, int d) const {
    auto it = entries_.find({i, d});
    return it == entries_.end() ? 0 : it->second;
  }
  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, std::uint64_t> entries_;
};

namespace detail {

using BigInt = boost::multiprecision::cpp_int;
using SparseRow = std::vector<std::pair<std::uint32_t, BigInt>>;

inline void normalize_row(SparseRow& row) {
  BigInt g = 0;
  for (const auto& [c, x] : row) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& [c, x] : row) x /= g;
  if (!row.empty() && row.front().second < 0)
    for (auto& [c, x] : row) x = -x;
}

// rank over Q by fraction-free elimination on integer rows: each row is
// reduced against stored pivots by leading column, keeping contents primitive.
inline std::size_t rational_rank(std::vector<SparseRow> rows) {
  std::map<std::uint32_t, SparseRow> pivots;
  for (auto& row : rows) {
    normalize_row(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        std::uint32_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const SparseRow& p = it->second;
      BigInt a = p.front().second;
      BigInt b = row.front().second;
      BigInt g = boost::multiprecision::gcd(a, b);
      a /= g;
      b /= g;
      SparseRow next;
      next.reserve(row.size() + p.size());
      auto i = row.begin();
      auto j = p.begin();
      while (i != row.end() || j != p.end()) {
        std::uint32_t col;
        BigInt val;
        if (j == p.end() || (i != row.end() && i->first < j->first)) {
          col = i->first;
          val = a * i->second;
          ++i;
        } else if (i == row.end() || j->first < i->first) {
          col = j->first;
          val = -b * j->second;
          ++j;
        } else {
          col = i->first;
          val = a * i->second - b * j->second;
          ++i;
          ++j;
        }
        if (val != 0) next.emplace_back(col, std::move(val));
      }
      row = std::move(next);
      normalize_row(row);
    }
  }
  return pivots.size();
}

// Reduced homology ranks for dimensions -1..dim of the complex given by an
// explicit face list (which must contain the empty face unless void).
inline std::vector<std::uint64_t> reduced_homology_from_faces(const std::vector<FaceMask>& faces) {
  if (faces.empty()) return {};
  int top = -1;
  for (FaceMask f : faces) top = std::max(top, std::popcount(f) - 1);
  // by_dim[k + 1] = sorted faces of dimension k
  std::vector<std::vector<FaceMask>> by_dim(static_cast<std::size_t>(top + 2));
  for (FaceMask f : faces) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& level : by_dim) std::sort(level.begin(), level.end());

  // boundary_rank[k + 1] = rank of the boundary map from dimension k to k-1.
  std::vector<std::size_t> boundary_rank(by_dim.size() + 1, 0);
  for (std::size_t level = 1; level < by_dim.size(); ++level) {
    const auto& lower = by_dim[level - 1];
    std::vector<SparseRow> rows;
    rows.reserve(by_dim[level].size());
    for (FaceMask f : by_dim[level]) {
      SparseRow row;
      int sign = 1;
      for (FaceMask rest = f; rest != 0; rest &= rest - 1) {
        FaceMask bit = rest & (~rest + 1);
        auto it = std::lower_bound(lower.begin(), lower.end(), f & ~bit);
        row.emplace_back(static_cast<std::uint32_t>(it - lower.begin()), BigInt(sign));
        sign = -sign;
      }
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      rows.push_back(std::move(row));
    }
    boundary_rank[level] = rational_rank(std::move(rows));
  }
  std::vector<std::uint64_t> ranks(by_dim.size());
  for (std::size_t level = 0; level < by_dim.size(); ++level)
    ranks[level] = by_dim[level].size() - boundary_rank[level] - boundary_rank[level + 1];
  return ranks;
}

// Bitmap over all 2^n vertex subsets marking the faces of the complex.
inline std::vector<bool> face_bitmap(const SimplicialComplex& complex) {
  std::vector<bool> is_face(std::size_t{1} << complex.vertices().size(), false);
  for (FaceMask f : complex.faces()) is_face[f] = true;
  return is_face;
}

}  // namespace detail

// Complex whose faces are the vertex subsets containing no generator support.
inline SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal,
                                         std::size_t vertex_limit = kMaxStanleyReisnerVertices) {
  if (ideal.is_unit()) throw Error(ErrorKind::void_complex, "the unit ideal has the void complex");
  const Universe& u = ideal.universe();
  auto vars = u.variables();
  const std::size_t n = vars.size();
  if (n > std::min<std::size_t>(vertex_limit, 30))
    throw Error(ErrorKind::resource_limit,
                "Stanley-Reisner complex limited to " + std::to_string(vertex_limit) + " vertices");
  std::vector<FaceMask> nonfaces;
  for (const auto& g : ideal.generators()) {
    FaceMask m = 0;
    for (VarId v : g.support()) m |= FaceMask{1} << u.index_of(v);
    nonfaces.push_back(m);
  }
  const FaceMask full = n == 0 ? 0 : static_cast<FaceMask>((std::uint64_t{1} << n) - 1);
  std::vector<bool> is_face(std::size_t{1} << n, false);
  for (std::size_t f = 0; f < is_face.size(); ++f)
    is_face[f] = std::none_of(nonfaces.begin(), nonfaces.end(),
                              [&](FaceMask g) { return (g & ~static_cast<FaceMask>(f)) == 0; });
  std::vector<FaceMask> facets;
  for (std::size_t f = 0; f < is_face.size(); ++f) {
    if (!is_face[f]) continue;
    bool maximal = true;
    for (FaceMask rest = full & ~static_cast<FaceMask>(f); rest != 0 && maximal; rest &= rest - 1)
      maximal = !is_face[f | (rest & (~rest + 1))];
    if (maximal) facets.push_back(static_cast<FaceMask>(f));
  }
  return SimplicialComplex(u, std::move(vars), std::move(facets));
}

// Ranks of reduced rational homology in dimensions -1..dim K (index 0 holds
// dimension -1). The void complex has no homology and yields an empty list.
inline std::vector<std::uint64_t> reduced_homology_ranks(const SimplicialComplex& complex,
                                                         std::size_t vertex_limit = kDefaultComplexVertexLimit) {
  if (complex.vertices().size() > vertex_limit)
    throw Error(ErrorKind::resource_limit,
                "homology limited to " + std::to_string(vertex_limit) + " vertices");
  return detail::reduced_homology_from_faces(complex.faces());
}

// Hochster: beta_{i,|W|} = sum over W of dim H~_{|W|-i-2}(Delta restricted to W).
inline BettiTable graded_betti(const SquarefreeIdeal& ideal, std::size_t vertex_limit = kDefaultHochsterVertexLimit) {
  if (ideal.universe().size() > vertex_limit)
    throw Error(ErrorKind::resource_limit,
                "Betti numbers limited to " + std::to_string(vertex_limit) + " variables");
  const SimplicialComplex complex = stanley_reisner(ideal, vertex_limit);
  const auto is_face = detail::face_bitmap(complex);
  const std::size_t n = complex.vertices().size();
  BettiTable table;
  std::vector<FaceMask> restricted;
  for (std::size_t w = 1; w < (std::size_t{1} << n); ++w) {
    const auto subset = static_cast<FaceMask>(w);
    restricted.clear();
    for (FaceMask sub = subset;; sub = (sub - 1) & subset) {
      if (is_face[sub]) restricted.push_back(sub);
      if (sub == 0) break;
    }
    const int size = std::popcount(subset);
    const auto ranks = detail::reduced_homology_from_faces(restricted);
    for (std::size_t level = 0; level < ranks.size(); ++level) {
      const int dim = static_cast<int>(level) - 1;
      const int i = size - dim - 2;
      if (i >= 0) table.add(i, size, ranks[level]);
    }
  }
  return table;
}

// Generated in a single degree d with beta_{i,e} != 0 only for e = d + i.
// The zero ideal and the unit ideal count as linear.
inline bool has_linear_resolution(const SquarefreeIdeal& ideal,
                                  std::size_t vertex_limit = kDefaultHochsterVertexLimit) {
  if (ideal.is_zero() || ideal.is_unit()) return true;
  const std::size_t d = ideal.generators().front().degree();
  for (const auto& g : ideal.generators())
    if (g.degree() != d) return false;
  const BettiTable table = graded_betti(ideal, vertex_limit);
  for (const auto& [key, rank] : table.entries())
    if (key.second != static_cast<int>(d) + key.first) return false;
  return true;
}

// A face whose link has nonvanishing reduced homology below its dimension,
// or nullopt when the complex is Cohen-Macaulay over Q.
inline std::optional<std::vector<VarId>> reisner_obstruction(const SquarefreeIdeal& ideal,
                                                             std::size_t vertex_limit = kDefaultHochsterVertexLimit) {
  if (ideal.universe().size() > vertex_limit)
    throw Error(ErrorKind::resource_limit,
                "Reisner criterion limited to " + std::to_string(vertex_limit) + " variables");
  if (ideal.is_unit()) return std::nullopt;
  const SimplicialComplex complex = stanley_reisner(ideal, vertex_limit);
  const auto faces = complex.faces();
  const auto is_face = detail::face_bitmap(complex);
  std::vector<FaceMask> link;
  for (FaceMask face : faces) {
    link.clear();
    int top = -1;
    for (FaceMask g : faces) {
      if ((g & face) == 0 && is_face[g | face]) {
        link.push_back(g);
        top = std::max(top, std::popcount(g) - 1);
      }
    }
    const auto ranks = detail::reduced_homology_from_faces(link);
    // ranks[level] is dimension level - 1; everything below `top` must vanish.
    for (int level = 0; level < top + 1; ++level)
      if (ranks[static_cast<std::size_t>(level)] != 0) return complex.face_vertices(face);
  }
  return std::nullopt;
}

// Reisner's criterion over Q. The unit ideal is treated as Cohen-Macaulay.
inline bool is_cm_reisner(const SquarefreeIdeal& ideal, std::size_t vertex_limit = kDefaultHochsterVertexLimit) {
  return !reisner_obstruction(ideal, vertex_limit).has_value();
}

// Rows are internal degrees, columns homological indices.
inline std::string render(const BettiTable& table) {
  if (table.empty()) return "(no nonzero Betti numbers)\n";
  int max_i = 0, min_d = table.entries().begin()->first.second, max_d = min_d;
  for (const auto& [key, rank] : table.entries()) {
    max_i = std::max(max_i, key.first);
    min_d = std::min(min_d, key.second);
    max_d = std::max(max_d, key.second);
  }
  std::size_t width = 1;
  for (const auto& [key, rank] : table.entries()) width = std::max(width, std::to_string(rank).size());
  width = std::max<std::size_t>(width, std::to_string(max_i).size()) + 1;
  auto pad = [&](const std::string& s) { return std::string(width > s.size() ? width - s.size() : 0, ' ') + s; };
  const std::size_t label = std::max<std::size_t>(std::to_string(max_d).size() + 1, 3);
  auto pad_label = [&](const std::string& s) { return s + std::string(label > s.size() ? label - s.size() : 0, ' '); };
  std::string out = pad_label("d\\i");
  for (int i = 0; i <= max_i; ++i) out += pad(std::to_string(i));
  out += '\n';
  for (int d = min_d; d <= max_d; ++d) {
    out += pad_label(std::to_string(d) + ":");
    for (int i = 0; i <= max_i; ++i) {
      auto r = table.get(i, d);
      out += pad(r ? std::to_string(r) : ".");
    }
    out += '\n';
  }
  return out;
}

}  // namespace acmtetra
