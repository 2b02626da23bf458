#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "acmtetra/error.hpp"

namespace acmtetra {

// A variable of the polynomial ring: base letter plus copy index. Unpolarized
// variables always carry copy 1.
struct VarId {
  std::uint32_t base = 0;
  std::uint32_t copy = 1;

  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

// Describes the variables a monomial ideal lives over. For an unpolarized
// ring every base variable has exactly one copy; a polarized ring records how
// many copies x_1..x_c of each base variable exist (possibly zero).
class Universe {
 public:
  Universe() = default;

  static Universe plain(std::size_t base_count) {
    Universe u;
    u.copies_.assign(base_count, 1);
    return u;
  }

  static Universe polarized(std::vector<std::uint32_t> copies) {
    Universe u;
    u.copies_ = std::move(copies);
    u.polarized_ = true;
    return u;
  }

  std::size_t base_count() const { return copies_.size(); }
  bool is_polarized() const { return polarized_; }
  const std::vector<std::uint32_t>& copies() const { return copies_; }
  std::uint32_t copies(std::uint32_t base) const { return copies_.at(base); }

  std::size_t size() const {
    return std::accumulate(copies_.begin(), copies_.end(), std::size_t{0});
  }

  bool contains(VarId v) const {
    return v.base < copies_.size() && v.copy >= 1 && v.copy <= copies_[v.base];
  }

  // Position of v in the canonical variable order (base, then copy).
  std::size_t index_of(VarId v) const {
    if (!contains(v)) throw Error(ErrorKind::invalid_argument, "variable outside universe");
    std::size_t idx = 0;
    for (std::uint32_t b = 0; b < v.base; ++b) idx += copies_[b];
    return idx + (v.copy - 1);
  }

  std::vector<VarId> variables() const {
    std::vector<VarId> out;
    out.reserve(size());
    for (std::uint32_t b = 0; b < copies_.size(); ++b)
      for (std::uint32_t c = 1; c <= copies_[b]; ++c) out.push_back({b, c});
    return out;
  }

  std::string base_name(std::uint32_t base) const {
    if (copies_.size() <= 4) return std::string(1, static_cast<char>('a' + base));
    return "x" + std::to_string(base + 1);
  }

  // a, b, ... for unpolarized rings; a1, d2, ... (or x5_2 when n > 4) for
  // polarized ones.
  std::string name(VarId v) const {
    std::string s = base_name(v.base);
    if (!polarized_) return s;
    if (copies_.size() > 4) s += '_';
    return s + std::to_string(v.copy);
  }

  // Smallest universe containing both (per-base maximum of copy counts).
  static Universe common(const Universe& x, const Universe& y) {
    if (x.base_count() != y.base_count() || x.polarized_ != y.polarized_)
      throw Error(ErrorKind::invalid_argument, "incompatible universes");
    Universe u = x;
    for (std::size_t b = 0; b < u.copies_.size(); ++b)
      u.copies_[b] = std::max(u.copies_[b], y.copies_[b]);
    return u;
  }

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::uint32_t> copies_;
  bool polarized_ = false;
};

}  // namespace acmtetra
