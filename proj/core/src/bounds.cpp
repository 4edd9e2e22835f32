#include "ncnull/bounds.hpp"

#include <algorithm>

#include "ncnull/errors.hpp"

namespace ncnull {

namespace {

void require_positive(std::initializer_list<Size> xs) {
  for (Size x : xs)
    if (x == 0) throw Error("bound arguments must be positive");
}

Size mul(Size a, Size b) {
  Size r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("bound exceeds 64-bit range");
  return r;
}

Size pow(Size base, Size e) {
  Size r = 1;
  for (Size k = 0; k < e; ++k) r = mul(r, base);
  return r;
}

Size ceil_half(Size x) { return x / 2 + x % 2; }

}  // namespace

std::string to_string(StarKind k) {
  switch (k) {
    case StarKind::unitaries: return "unitaries";
    case StarKind::spherical: return "spherical";
    case StarKind::partitioned: return "partitioned";
  }
  return {};
}

StarKind star_kind_from_string(const std::string& s) {
  if (s == "unitaries") return StarKind::unitaries;
  if (s == "spherical") return StarKind::spherical;
  if (s == "partitioned") return StarKind::partitioned;
  throw Error("unknown star kind " + s);
}

Size ri_bound(Size m, Size n) {
  require_positive({m, n});
  return mul(m, ceil_half(mul(m, n)));
}

Size nss_bound(Size m, Size n, Size u, Size v) {
  require_positive({m, n, u, v});
  return mul(m, ceil_half(mul(mul(mul(m, u), v), std::max<Size>(n, 2))));
}

Size nss_degree_bound(Size m, Size n, Size d, Size g) {
  require_positive({m, n, d, g});
  return mul(m, ceil_half(mul(mul(mul(m, d), pow(g + 1, d)), std::max<Size>(n, 2))));
}

Size star_bound(StarKind kind, Size g, Size u, Size v, bool real_case) {
  require_positive({g, u, v});
  const Size uv = mul(u, v);
  Size n = 0;
  switch (kind) {
    case StarKind::unitaries:
      n = uv;
      break;
    case StarKind::spherical:
      if (g < 2) throw GOutOfRange("spherical isometry bound needs g > 1");
      n = ceil_half(mul(g + 1, uv));
      break;
    case StarKind::partitioned:
      if (g < 2) throw GOutOfRange("partitioned unitary bound needs g > 1");
      n = ceil_half(mul(g, uv));
      break;
  }
  return real_case ? mul(n, 2) : n;
}

Size pos_size(StarKind kind, Size g, Size d) {
  require_positive({g, d});
  const Size base = kind == StarKind::partitioned ? mul(mul(g, g), 2) + 1 : mul(g, 2) + 1;
  return pow(base, d);
}

}  // namespace ncnull
