#include "steinersurf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "steinersurf/error.hpp"

namespace steinersurf {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto y : images_) {
    if (y >= images_.size() || seen[y])
      throw Error(ErrorCode::NotBijective, "image list is not a permutation");
    seen[y] = 1;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::uint32_t> im(size);
  std::iota(im.begin(), im.end(), 0u);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::uint32_t x = 0; x < images_.size(); ++x) p.images_[images_[x]] = x;
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw Error(ErrorCode::DomainMismatch, "composing permutations of different size");
  Permutation p;
  p.images_.resize(images_.size());
  for (std::uint32_t x = 0; x < images_.size(); ++x) p.images_[x] = next.images_[images_[x]];
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> c;
    for (std::uint32_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::map<std::size_t, std::size_t> Permutation::cycle_type(const std::vector<std::uint32_t>& skip) const {
  std::map<std::size_t, std::size_t> t;
  for (const auto& c : cycles()) {
    if (c.size() == 1 && std::find(skip.begin(), skip.end(), c[0]) != skip.end()) continue;
    ++t[c.size()];
  }
  return t;
}

std::string format_permutation(const Permutation& p, std::uint32_t first) {
  std::ostringstream os;
  os << "T: [";
  for (std::uint32_t x = first; x < p.size(); ++x) {
    if (x != first) os << ", ";
    os << p(x);
  }
  os << "]";
  return os.str();
}

Permutation parse_permutation(std::string_view text, std::uint32_t first) {
  auto colon = text.find(':');
  if (colon != std::string_view::npos) text.remove_prefix(colon + 1);
  std::vector<std::uint32_t> im(first);
  std::iota(im.begin(), im.end(), 0u);
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i >= text.size() || text[i] != '[') throw Error(ErrorCode::InvalidArgument, "permutation must start with '['");
  ++i;
  bool closed = false;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::uint32_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      im.push_back(v);
      continue;
    }
    if (ch == ']') {
      closed = true;
      break;
    }
    if (ch != ',' && !std::isspace(static_cast<unsigned char>(ch)))
      throw Error(ErrorCode::InvalidArgument, std::string("unexpected character '") + ch + "' in permutation");
    ++i;
  }
  if (!closed) throw Error(ErrorCode::InvalidArgument, "permutation missing ']'");
  return Permutation(std::move(im));
}

std::string format_cycles(const Permutation& p, const std::vector<std::uint32_t>& skip) {
  std::ostringstream os;
  for (const auto& c : p.cycles()) {
    if (c.size() == 1 && std::find(skip.begin(), skip.end(), c[0]) != skip.end()) continue;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
  }
  return os.str();
}

}  // namespace steinersurf
