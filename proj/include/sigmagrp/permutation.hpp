#ifndef SIGMAGRP_PERMUTATION_HPP
#define SIGMAGRP_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigmagrp
{

/// Raised for malformed textual input (cycles, sigma strings, group files).
class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition on groups or subgroups fails.
class GroupError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

using Point = std::uint32_t;

inline constexpr std::size_t max_degree = 1u << 16;

/// A bijection of {0, ..., degree-1}; printed and parsed 1-based.
///
/// Products are evaluated left to right: (a * b)(i) = b(a(i)). With this
/// convention the conjugate a^g = g^-1 * a * g is a right action, so
/// (a^g)^h = a^(g * h).
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree)
  : images_(degree)
  {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Takes 0-based images; throws GroupError unless they form a bijection.
  static Permutation from_images(std::vector<Point> images)
  {
    std::vector<bool> seen(images.size(), false);
    for (Point p : images) {
      if (p >= images.size() || seen[p])
        throw GroupError("image list is not a bijection");
      seen[p] = true;
    }
    Permutation result;
    result.images_ = std::move(images);
    return result;
  }

  std::size_t degree() const { return images_.size(); }

  Point operator()(Point p) const { return images_[p]; }

  std::vector<Point> const &images() const { return images_; }

  bool is_identity() const
  {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i)
        return false;
    }
    return true;
  }

  Permutation operator*(Permutation const &rhs) const
  {
    check_degree(rhs);
    Permutation result;
    result.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      result.images_[i] = rhs.images_[images_[i]];
    return result;
  }

  Permutation &operator*=(Permutation const &rhs)
  {
    return *this = *this * rhs;
  }

  Permutation inverse() const
  {
    Permutation result;
    result.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      result.images_[images_[i]] = static_cast<Point>(i);
    return result;
  }

  /// g^-1 * this * g.
  Permutation conjugate(Permutation const &g) const
  {
    check_degree(g);
    // (g^-1 a g)(g(i)) = g(a(i))
    Permutation result;
    result.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      result.images_[g.images_[i]] = g.images_[images_[i]];
    return result;
  }

  /// Smallest moved point, or degree() for the identity.
  Point first_moved_point() const
  {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i)
        return static_cast<Point>(i);
    }
    return static_cast<Point>(images_.size());
  }

  std::uint64_t order() const
  {
    std::uint64_t result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i])
        continue;
      std::uint64_t len = 0;
      for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
        seen[p] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  /// Disjoint cycle notation, 1-based, fixed points omitted; "()" for identity.
  std::string to_cycles() const
  {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i)
        continue;
      out += '(';
      bool first = true;
      for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
        seen[p] = true;
        if (!first)
          out += ' ';
        out += std::to_string(p + 1);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(Permutation const &, Permutation const &) = default;

  /// Lexicographic on image sequences; the identity is the smallest element.
  friend std::strong_ordering operator<=>(Permutation const &lhs,
                                          Permutation const &rhs) = default;

private:
  void check_degree(Permutation const &other) const
  {
    if (other.images_.size() != images_.size())
      throw GroupError("permutation degree mismatch");
  }

  std::vector<Point> images_;
};

/// Parses disjoint cycle notation such as "(1 2 3)(4 5)" with 1-based points.
/// Empty text and "()" give the identity.
inline Permutation parse_permutation(std::string_view text, std::size_t degree)
{
  if (degree == 0 || degree > max_degree)
    throw ParseError("degree out of range: " + std::to_string(degree));

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  auto fail = [&](std::string const &why) -> ParseError {
    return ParseError("malformed cycles \"" + std::string(text) + "\": " + why);
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    if (text[pos] != '(')
      throw fail("expected '('");
    ++pos;

    std::vector<Point> cycle;
    bool closed = false;
    while (pos < text.size()) {
      char c = text[pos];
      if (is_space(c)) {
        ++pos;
      } else if (c == ')') {
        ++pos;
        closed = true;
        break;
      } else if (c >= '0' && c <= '9') {
        std::uint64_t value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
          value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
          if (value > degree)
            throw fail("point out of range");
          ++pos;
        }
        if (value == 0)
          throw fail("point out of range");
        auto p = static_cast<Point>(value - 1);
        if (used[p])
          throw fail("repeated point " + std::to_string(value));
        used[p] = true;
        cycle.push_back(p);
      } else {
        throw fail(std::string("unexpected character '") + c + "'");
      }
    }
    if (!closed)
      throw fail("unbalanced parentheses");

    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }

  return Permutation::from_images(std::move(images));
}

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images())
      h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

} // namespace sigmagrp

#endif // SIGMAGRP_PERMUTATION_HPP
