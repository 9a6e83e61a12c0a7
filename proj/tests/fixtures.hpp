#pragma once

#include "exactcat/catalog.hpp"

#include <memory>

namespace fixtures {

using exactcat::Arrow;
using exactcat::Quiver;

inline std::shared_ptr<const Quiver> make(std::vector<std::string> v, std::vector<Arrow> a) {
  return std::make_shared<const Quiver>(std::move(v), std::move(a));
}

inline std::shared_ptr<const Quiver> a1() { return make({"1"}, {}); }
inline std::shared_ptr<const Quiver> a2() { return make({"1", "2"}, {{0, 1, "a"}}); }
// 1 -> 2 <- 3
inline std::shared_ptr<const Quiver> a3_sink() { return make({"1", "2", "3"}, {{0, 1, "a"}, {2, 1, "b"}}); }
// 1 <- 2 -> 3
inline std::shared_ptr<const Quiver> a3_source() { return make({"1", "2", "3"}, {{1, 0, "a"}, {1, 2, "b"}}); }
inline std::shared_ptr<const Quiver> a3_linear() { return make({"1", "2", "3"}, {{0, 1, "a"}, {1, 2, "b"}}); }
inline std::shared_ptr<const Quiver> a4() {
  return make({"1", "2", "3", "4"}, {{0, 1, "a"}, {2, 1, "b"}, {2, 3, "c"}});
}
inline std::shared_ptr<const Quiver> d4() {
  return make({"1", "2", "3", "4"}, {{0, 1, "a"}, {2, 1, "b"}, {3, 1, "c"}});
}

}  // namespace fixtures
