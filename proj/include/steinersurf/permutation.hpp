#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace steinersurf {

// One-line permutation of {0, ..., size-1}. Point sets 1..n are carried with
// 0 as an extra fixed point, so the same type serves V and F_N.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t size);

  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  std::size_t size() const { return images_.size(); }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation inverse() const;
  // x -> next(this(x))
  Permutation then(const Permutation& next) const;
  bool is_identity() const;

  std::vector<std::vector<std::uint32_t>> cycles() const;
  // cycle length -> multiplicity, ignoring the points listed in skip
  std::map<std::size_t, std::size_t> cycle_type(const std::vector<std::uint32_t>& skip = {}) const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<std::uint32_t> images_;
};

// "T: [t1, t2, ...]" listing the images of first..size-1.
std::string format_permutation(const Permutation& p, std::uint32_t first = 1);
// Accepts the format above, with or without the "T:" prefix.
Permutation parse_permutation(std::string_view text, std::uint32_t first = 1);
std::string format_cycles(const Permutation& p, const std::vector<std::uint32_t>& skip = {});

}  // namespace steinersurf
