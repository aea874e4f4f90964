#include "burnside/groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "burnside/error.hpp"

namespace burnside {

namespace {

using Cycles = std::vector<std::vector<int>>;

std::vector<Cycles> parse_cycles(const std::string& text) {
  std::vector<Cycles> gens;
  Cycles current;
  bool have_current = false;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_space();
    if (i == text.size()) break;
    const char c = text[i];
    if (c == ',') {
      if (!have_current) throw ParseError("empty generator before ','");
      gens.push_back(std::move(current));
      current.clear();
      have_current = false;
      ++i;
      continue;
    }
    if (c != '(') throw ParseError(std::string("unexpected character '") + c + "'");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (i == text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || ptr == text.data() + i)
        throw ParseError("expected a point number at offset " + std::to_string(i));
      if (value < 1) throw ParseError("points are numbered from 1");
      if (std::find(cycle.begin(), cycle.end(), value - 1) != cycle.end())
        throw ParseError("point " + std::to_string(value) + " repeated in a cycle");
      cycle.push_back(value - 1);
      i = static_cast<std::size_t>(ptr - text.data());
    }
    if (cycle.size() > 1) current.push_back(std::move(cycle));
    have_current = true;
  }
  if (!have_current) throw ParseError(gens.empty() ? "no generators given" : "trailing ','");
  gens.push_back(std::move(current));
  return gens;
}

int max_point(const std::vector<Cycles>& gens) {
  int m = 0;
  for (const auto& g : gens)
    for (const auto& c : g)
      for (int x : c) m = std::max(m, x + 1);
  return m;
}

Permutation cycle_perm(int degree, const Cycles& cycles) {
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const DegreeMismatch& e) {
    throw ParseError(e.what());
  }
}

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int x = from; x < to; ++x) v.push_back(x);
  return v;
}

PermGroup quaternion(std::size_t cap) {
  // units 1, i, j, k with sign: index = 4 * negative + unit
  static constexpr std::array<std::array<int, 4>, 4> unit{{
      {0, 1, 2, 3},  // 1 * (1, i, j, k)
      {1, 4, 3, 6},  // i * ...: i, -1, k, -j
      {2, 7, 4, 1},  // j * ...: j, -k, -1, i
      {3, 2, 5, 4},  // k * ...: k, j, -i, -1
  }};
  auto times = [&](int a, int b) {
    int r = unit[static_cast<std::size_t>(a % 4)][static_cast<std::size_t>(b % 4)];
    const int sign = (a / 4 + b / 4 + r / 4) % 2;
    return 4 * sign + r % 4;
  };
  auto left = [&](int a) {
    std::vector<int> im(8);
    for (int x = 0; x < 8; ++x) im[static_cast<std::size_t>(x)] = times(a, x);
    return Permutation(std::move(im));
  };
  return PermGroup::generate(8, {left(1), left(2)}, cap, "Q8");
}

}  // namespace

int generator_degree(const std::string& text) { return std::max(1, max_point(parse_cycles(text))); }

std::vector<Permutation> parse_generators(const std::string& text, int min_degree) {
  const auto gens = parse_cycles(text);
  const int degree = std::max({1, min_degree, max_point(gens)});
  std::vector<Permutation> out;
  for (const auto& g : gens) out.push_back(cycle_perm(degree, g));
  return out;
}

PermGroup named_group(const std::string& name, std::size_t cap) {
  if (name == "Q8") return quaternion(cap);
  if (name == "V4")
    return PermGroup::generate(4, {cycle_perm(4, {{0, 1}, {2, 3}}), cycle_perm(4, {{0, 2}, {1, 3}})},
                               cap, name);
  if (name.size() < 2) throw UnknownName("unknown group '" + name + "'");
  const char family = name[0];
  int n = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size() || n < 1 || n > 1000)
    throw UnknownName("unknown group '" + name + "'");

  switch (family) {
    case 'C':
      return PermGroup::generate(n, {cycle_perm(n, {range(0, n)})}, cap, name);
    case 'D': {
      if (n == 1) return PermGroup::generate(2, {cycle_perm(2, {{0, 1}})}, cap, name);
      if (n == 2)
        return PermGroup::generate(
            4, {cycle_perm(4, {{0, 1}, {2, 3}}), cycle_perm(4, {{0, 2}, {1, 3}})}, cap, name);
      Cycles reflection;
      for (int a = 1, b = n - 1; a < b; ++a, --b) reflection.push_back({a, b});
      return PermGroup::generate(n, {cycle_perm(n, {range(0, n)}), cycle_perm(n, reflection)}, cap,
                                 name);
    }
    case 'S':
      if (n < 3) return PermGroup::generate(n, {cycle_perm(n, {range(0, n)})}, cap, name);
      return PermGroup::generate(n, {cycle_perm(n, {{0, 1}}), cycle_perm(n, {range(0, n)})}, cap,
                                 name);
    case 'A':
      if (n < 3) return PermGroup::generate(n, {Permutation::identity(n)}, cap, name);
      return PermGroup::generate(
          n, {cycle_perm(n, {{0, 1, 2}}), cycle_perm(n, {n % 2 ? range(0, n) : range(1, n)})}, cap,
          name);
    default:
      throw UnknownName("unknown group '" + name + "'");
  }
}

PermGroup parse_group(const std::string& text, std::size_t cap) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '(') {
    auto gens = parse_generators(text);
    const int degree = gens.front().degree();
    return PermGroup::generate(degree, std::move(gens), cap, text);
  }
  return named_group(text, cap);
}

}  // namespace burnside
