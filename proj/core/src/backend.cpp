#include "rtfr/backend.hpp"

#include <string>

#include "rtfr/error.hpp"
#include "rtfr/grid.hpp"
#include "rtfr/lbvh.hpp"
#include "rtfr/naive.hpp"
#include "rtfr/rayquery.hpp"

namespace rtfr {
namespace {

using RepulsiveFn = RepulsiveTiming (*)(std::span<const Vec2>, double, std::span<Vec2>, unsigned);

class FunctionBackend final : public RepulsiveBackend {
 public:
  FunctionBackend(BackendId id, RepulsiveFn fn, unsigned threads) noexcept
      : id_(id), fn_(fn), threads_(threads) {}

  [[nodiscard]] BackendId id() const noexcept override { return id_; }

  RepulsiveTiming compute(std::span<const Vec2> positions, double k,
                          std::span<Vec2> disp) override {
    return fn_(positions, k, disp, threads_);
  }

 private:
  BackendId id_;
  RepulsiveFn fn_;
  unsigned threads_;
};

}  // namespace

std::string_view to_string(BackendId id) noexcept {
  switch (id) {
    case BackendId::naive: return "naive";
    case BackendId::naive_cutoff: return "naive-cutoff";
    case BackendId::grid: return "grid";
    case BackendId::lbvh: return "lbvh";
    case BackendId::rayquery: return "rayquery";
  }
  return "unknown";
}

std::optional<BackendId> parse_backend_id(std::string_view name) noexcept {
  for (BackendId id : kAllBackends) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::unique_ptr<RepulsiveBackend> make_backend(BackendId id, unsigned threads) {
  RepulsiveFn fn = nullptr;
  switch (id) {
    case BackendId::naive: fn = &repulsive_naive; break;
    case BackendId::naive_cutoff: fn = &repulsive_naive_cutoff; break;
    case BackendId::grid: fn = &repulsive_grid; break;
    case BackendId::lbvh: fn = &repulsive_lbvh; break;
    case BackendId::rayquery: fn = &repulsive_rayquery; break;
  }
  return std::make_unique<FunctionBackend>(id, fn, threads);
}

std::unique_ptr<RepulsiveBackend> make_backend(std::string_view name, unsigned threads) {
  const auto id = parse_backend_id(name);
  if (!id) throw InvalidArgument("unknown backend '" + std::string(name) + "'");
  return make_backend(*id, threads);
}

}  // namespace rtfr
