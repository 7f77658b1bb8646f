#pragma once

#include <string>

#include "rtfr/error.hpp"
#include "rtfr/lbvh.hpp"

namespace rtfr::detail {

/// Fixed-capacity node stack; overflowing it is a hard error.
class TraversalStack {
 public:
  void push(NodeRef r) {
    if (size_ == kTraversalStackDepth) {
      throw StackOverflow("BVH traversal exceeded " + std::to_string(kTraversalStackDepth) +
                          " stack entries");
    }
    items_[size_++] = r;
  }
  NodeRef pop() noexcept { return items_[--size_]; }
  [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

 private:
  NodeRef items_[kTraversalStackDepth];
  std::size_t size_ = 0;
};

}  // namespace rtfr::detail
