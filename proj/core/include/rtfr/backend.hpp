#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "rtfr/geometry.hpp"

namespace rtfr {

/// Wall time of one repulsive phase, split into structure build and query.
struct RepulsiveTiming {
  double build_ms = 0.0;
  double traversal_ms = 0.0;
};

enum class BackendId { naive, naive_cutoff, grid, lbvh, rayquery };

inline constexpr BackendId kAllBackends[] = {BackendId::naive, BackendId::naive_cutoff,
                                             BackendId::grid, BackendId::lbvh,
                                             BackendId::rayquery};

std::string_view to_string(BackendId id) noexcept;
std::optional<BackendId> parse_backend_id(std::string_view name) noexcept;

/// Computes the repulsive dispersion for all vertices.
///
/// Implementations write only disp[v] for each v and sum contributions in
/// ascending neighbor id, so their output does not depend on thread count.
class RepulsiveBackend {
 public:
  virtual ~RepulsiveBackend() = default;

  [[nodiscard]] virtual BackendId id() const noexcept = 0;

  /// `disp` must be zeroed and sized like `positions`.
  virtual RepulsiveTiming compute(std::span<const Vec2> positions, double k,
                                  std::span<Vec2> disp) = 0;
};

/// `threads` = 0 uses all hardware threads.
std::unique_ptr<RepulsiveBackend> make_backend(BackendId id, unsigned threads = 1);

/// Throws InvalidArgument for unknown names.
std::unique_ptr<RepulsiveBackend> make_backend(std::string_view name, unsigned threads = 1);

}  // namespace rtfr
