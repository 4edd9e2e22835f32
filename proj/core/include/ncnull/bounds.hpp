#pragma once

#include <cstdint>
#include <string>

namespace ncnull {

enum class StarKind { unitaries, spherical, partitioned };

std::string to_string(StarKind k);
/// "unitaries", "spherical", "partitioned"; throws Error otherwise.
StarKind star_kind_from_string(const std::string& s);

/// All bound functions take positive arguments and throw Overflow when the
/// result does not fit in 64 bits.
using Size = std::uint64_t;

/// m * ceil(m n / 2).
Size ri_bound(Size m, Size n);
/// m * ceil(m u v max(n, 2) / 2).
Size nss_bound(Size m, Size n, Size u, Size v);
/// m * ceil(m d (g+1)^d max(n, 2) / 2).
Size nss_degree_bound(Size m, Size n, Size d, Size g);
/// uv, ceil((g+1) uv / 2) or ceil(g uv / 2); doubled in the real case.
/// Spherical and partitioned need g > 1 (GOutOfRange).
Size star_bound(StarKind kind, Size g, Size u, Size v, bool real_case = false);
/// (2g+1)^d, or (2g^2+1)^d for partitioned.
Size pos_size(StarKind kind, Size g, Size d);

}  // namespace ncnull
