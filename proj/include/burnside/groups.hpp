#pragma once

#include <string>
#include <vector>

#include "burnside/perm.hpp"

namespace burnside {

/// Parses "(1 2 3)(4 5), (1 2)": comma-separated generators, each a product
/// of disjoint cycles on 1-based points. "()" is the identity. The degree is
/// the largest point mentioned, or `min_degree` if that is larger.
/// Throws ParseError.
std::vector<Permutation> parse_generators(const std::string& text, int min_degree = 1);

/// The degree implied by a generator string (largest point, at least 1).
int generator_degree(const std::string& text);

/// Cn, Dn (order 2n), Sn, An, Q8 or V4 with fixed generators:
///   Cn: (1 2 ... n)
///   Dn: (1 2 ... n), (2 n)(3 n-1)...; D1 = C2 and D2 = V4
///   Sn: (1 2), (1 2 ... n)
///   An: (1 2 3) and (1 2 ... n) for odd n, (2 3 ... n) for even n
///   Q8: left regular action on {1, i, j, k, -1, -i, -j, -k}
///   V4: (1 2)(3 4), (1 3)(2 4)
/// Throws UnknownName or CapExceeded.
PermGroup named_group(const std::string& name, std::size_t order_cap = PermGroup::kDefaultOrderCap);

/// A name from named_group, or a generator string when it starts with '('.
PermGroup parse_group(const std::string& text, std::size_t order_cap = PermGroup::kDefaultOrderCap);

}  // namespace burnside
