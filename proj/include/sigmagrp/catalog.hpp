#ifndef SIGMAGRP_CATALOG_HPP
#define SIGMAGRP_CATALOG_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "group.hpp"

namespace sigmagrp
{

/// Plain-text group description:
///
///   name: S4
///   degree: 4
///   gens: (1 2), (1 2 3 4)
///
/// Blank lines and lines starting with '#' are ignored. Generators are kept
/// in canonical cycle notation so that emit/parse round-trips exactly.
struct GroupFile
{
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> gens;

  friend bool operator==(GroupFile const &, GroupFile const &) = default;
};

namespace detail
{

inline std::string_view trim(std::string_view s)
{
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && is_space(s.back()))
    s.remove_suffix(1);
  return s;
}

/// Splits "(1 2), (1 2 3)(4 5)" at commas outside parentheses.
inline std::vector<std::string> split_generators(std::string_view text)
{
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(')
      ++depth;
    else if (c == ')')
      --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  auto last = trim(current);
  if (!last.empty() || !out.empty())
    out.emplace_back(last);
  for (auto const &g : out) {
    if (g.empty())
      throw ParseError("empty generator in list \"" + std::string(text) + "\"");
  }
  return out;
}

} // namespace detail

inline GroupFile parse_group_file(std::string_view text)
{
  GroupFile f;
  bool have_name = false, have_degree = false, have_gens = false;
  std::string raw_gens;

  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = detail::trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#')
      continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected \"key: value\"");
    auto key = detail::trim(line.substr(0, colon));
    auto value = detail::trim(line.substr(colon + 1));

    auto once = [&](bool &flag) {
      if (flag)
        throw ParseError("line " + std::to_string(line_no) + ": duplicate \"" +
                         std::string(key) + "\"");
      flag = true;
    };

    if (key == "name") {
      once(have_name);
      if (value.empty())
        throw ParseError("empty group name");
      f.name = value;
    } else if (key == "degree") {
      once(have_degree);
      if (value.empty() || value.size() > 9 ||
          value.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("degree must be a positive integer, got \"" + std::string(value) + "\"");
      std::uint64_t d = std::stoull(std::string(value));
      if (d == 0 || d > max_degree)
        throw ParseError("degree " + std::string(value) + " out of range 1.." +
                         std::to_string(max_degree));
      f.degree = d;
    } else if (key == "gens") {
      once(have_gens);
      raw_gens = value;
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key \"" +
                       std::string(key) + "\"");
    }
  }

  if (!have_name)
    throw ParseError("missing \"name\" line");
  if (!have_degree)
    throw ParseError("missing \"degree\" line");
  if (!have_gens)
    throw ParseError("missing \"gens\" line");

  for (auto const &g : detail::split_generators(raw_gens))
    f.gens.push_back(parse_permutation(g, f.degree).to_cycles());
  return f;
}

inline std::string emit_group_file(GroupFile const &f)
{
  std::string out = "name: " + f.name + "\ndegree: " + std::to_string(f.degree) + "\ngens:";
  for (std::size_t i = 0; i < f.gens.size(); ++i)
    out += (i ? ", " : " ") + f.gens[i];
  return out + "\n";
}

inline GroupPtr build_group(GroupFile const &f, std::uint64_t order_cap = order_cap_from_env())
{
  std::vector<Permutation> gens;
  for (auto const &g : f.gens)
    gens.push_back(parse_permutation(g, f.degree));
  return Group::from_generators(std::move(gens), f.degree, order_cap);
}

namespace detail
{

inline std::string cycle_text(std::vector<Point> const &points)
{
  std::string out = "(";
  for (std::size_t i = 0; i < points.size(); ++i)
    out += (i ? " " : "") + std::to_string(points[i]);
  return out + ")";
}

inline std::string consecutive_cycle(Point from, Point to)
{
  std::vector<Point> pts;
  for (Point p = from; p <= to; ++p)
    pts.push_back(p);
  return cycle_text(pts);
}

struct FamilyMember
{
  GroupFile file;
  std::uint64_t order;
};

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
  if (b != 0 && a > ~std::uint64_t{0} / b)
    throw ParseError("group order overflows");
  return a * b;
}

inline std::uint64_t factorial(std::uint64_t n)
{
  std::uint64_t r = 1;
  for (std::uint64_t k = 2; k <= n; ++k)
    r = checked_mul(r, k);
  return r;
}

// One factor such as "S4", "D12", "Q8" or "SL23".
inline FamilyMember basic_family(std::string_view name)
{
  GroupFile f;
  f.name = name;
  if (name == "Q8") {
    f.degree = 8;
    f.gens = {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"};
    return {f, 8};
  }
  if (name == "SL23") {
    // SL(2,3) acting on the eight non-zero vectors of F_3^2.
    std::vector<std::pair<int, int>> vecs;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a || b)
          vecs.emplace_back(a, b);
      }
    }
    auto matrix_perm = [&](int m00, int m01, int m10, int m11) {
      std::vector<Point> images;
      for (auto [a, b] : vecs) {
        std::pair<int, int> w{((m00 * a + m01 * b) % 3 + 3) % 3,
                              ((m10 * a + m11 * b) % 3 + 3) % 3};
        images.push_back(static_cast<Point>(
          std::find(vecs.begin(), vecs.end(), w) - vecs.begin()));
      }
      return Permutation::from_images(std::move(images)).to_cycles();
    };
    f.degree = 8;
    f.gens = {matrix_perm(1, 1, 0, 1), matrix_perm(0, -1, 1, 0)};
    return {f, 24};
  }

  if (name.size() < 2)
    throw ParseError("unknown group family \"" + std::string(name) + "\"");
  char family = name.front();
  auto digits = name.substr(1);
  if (digits.empty() || digits.size() > 6 ||
      digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError("unknown group family \"" + std::string(name) + "\"");
  std::uint64_t n = std::stoull(std::string(digits));
  if (n == 0)
    throw ParseError("family parameter must be positive in \"" + std::string(name) + "\"");

  switch (family) {
  case 'S':
    f.degree = n;
    if (n >= 2)
      f.gens.push_back("(1 2)");
    if (n >= 3)
      f.gens.push_back(consecutive_cycle(1, static_cast<Point>(n)));
    return {f, factorial(n)};
  case 'A':
    f.degree = n;
    if (n >= 3)
      f.gens.push_back("(1 2 3)");
    if (n >= 4) {
      f.gens.push_back(n % 2 ? consecutive_cycle(1, static_cast<Point>(n))
                             : consecutive_cycle(2, static_cast<Point>(n)));
    }
    return {f, n >= 2 ? factorial(n) / 2 : 1};
  case 'C':
    f.degree = n;
    if (n >= 2)
      f.gens.push_back(consecutive_cycle(1, static_cast<Point>(n)));
    return {f, n};
  case 'D': {
    // Dihedral group of order n acting on the n/2 vertices of a polygon.
    if (n % 2 != 0 || n < 6)
      throw ParseError("dihedral order must be even and at least 6 in \"" +
                       std::string(name) + "\"");
    auto m = static_cast<Point>(n / 2);
    f.degree = m;
    f.gens.push_back(consecutive_cycle(1, m));
    std::vector<Point> images(m);
    for (Point i = 0; i < m; ++i)
      images[i] = (m - i) % m;
    f.gens.push_back(Permutation::from_images(std::move(images)).to_cycles());
    return {f, n};
  }
  default:
    throw ParseError("unknown group family \"" + std::string(name) + "\"");
  }
}

// Direct product via disjoint supports: later factors act on shifted points.
inline FamilyMember product_family(std::string_view name)
{
  std::vector<FamilyMember> factors;
  std::size_t start = 0;
  while (true) {
    auto x = name.find('x', start);
    factors.push_back(basic_family(name.substr(start, x - start)));
    if (x == std::string_view::npos)
      break;
    start = x + 1;
  }
  if (factors.size() == 1)
    return factors.front();

  FamilyMember out;
  out.file.name = name;
  out.order = 1;
  std::size_t shift = 0;
  for (auto const &fac : factors) {
    for (auto const &g : fac.file.gens) {
      auto p = parse_permutation(g, fac.file.degree);
      std::string shifted;
      std::vector<bool> seen(p.degree(), false);
      for (Point i = 0; i < p.degree(); ++i) {
        if (seen[i] || p(i) == i)
          continue;
        std::vector<Point> cyc;
        for (Point j = i; !seen[j]; j = p(j)) {
          seen[j] = true;
          cyc.push_back(static_cast<Point>(j + 1 + shift));
        }
        shifted += cycle_text(cyc);
      }
      if (!shifted.empty())
        out.file.gens.push_back(shifted);
    }
    shift += fac.file.degree;
    out.order = checked_mul(out.order, fac.order);
  }
  out.file.degree = shift;
  return out;
}

} // namespace detail

inline std::string const default_catalog_families =
  "S3, S4, A4, D8, D12, Q8, C12, C30, S3xC3, SL23";

/// Expands a family list such as "S3..S5, A4, D8, C12, Q8, S3xC3" into group
/// files. Throws ParseError on unknown names and GroupError when a group's
/// order exceeds the cap.
inline std::vector<GroupFile> builtin_catalog(std::string_view spec,
                                              std::uint64_t order_cap = order_cap_from_env())
{
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto comma = spec.find(',', start);
    auto item = detail::trim(spec.substr(start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - start));
    if (!item.empty()) {
      auto dots = item.find("..");
      if (dots == std::string_view::npos) {
        names.emplace_back(item);
      } else {
        auto lo = detail::trim(item.substr(0, dots));
        auto hi = detail::trim(item.substr(dots + 2));
        if (lo.size() < 2 || hi.size() < 2 || lo.front() != hi.front())
          throw ParseError("bad family range \"" + std::string(item) + "\"");
        auto a = std::stoull(std::string(lo.substr(1)));
        auto b = std::stoull(std::string(hi.substr(1)));
        if (a > b)
          throw ParseError("empty family range \"" + std::string(item) + "\"");
        // Dihedral orders are even, so D ranges step over odd values.
        bool dihedral = lo.front() == 'D';
        for (auto k = a; k <= b; ++k)
          if (!dihedral || k % 2 == 0)
            names.push_back(lo.front() + std::to_string(k));
      }
    }
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }

  std::vector<GroupFile> out;
  for (auto const &n : names) {
    auto member = detail::product_family(n);
    if (member.order > order_cap)
      throw GroupError(n + " has order " + std::to_string(member.order) +
                       ", above the cap " + std::to_string(order_cap));
    for (auto &g : member.file.gens)
      g = parse_permutation(g, member.file.degree).to_cycles();
    out.push_back(std::move(member.file));
  }
  return out;
}

} // namespace sigmagrp

#endif // SIGMAGRP_CATALOG_HPP
