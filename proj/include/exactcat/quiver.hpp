#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace exactcat {

struct Arrow {
  std::size_t source;
  std::size_t target;
  std::string name;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A path is the sequence of arrow ids it traverses, first arrow first.
/// The trivial path at a vertex is the empty sequence.
using Path = std::vector<std::size_t>;

/// Finite acyclic quiver with labelled vertices and named arrows.
class Quiver {
 public:
  Quiver() = default;
  /// Throws std::invalid_argument on duplicate labels/names, unknown
  /// endpoints, or oriented cycles.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::string& label(std::size_t v) const { return vertices_.at(v); }

  /// Index of a vertex label or arrow name; throws std::invalid_argument if absent.
  std::size_t vertex_index(const std::string& label) const;
  std::size_t arrow_index(const std::string& name) const;

  /// Same vertices, every arrow reversed, arrow ids preserved.
  Quiver opposite() const;

  /// All paths from `from` to `to`, sorted by length then lexicographically.
  std::vector<Path> paths(std::size_t from, std::size_t to) const;

  /// Sub-quiver on the given vertices/arrows (by label and name). Vertex and
  /// arrow order follow this quiver. Throws if an arrow leaves the vertex set.
  Quiver subquiver(const std::vector<std::string>& vertex_labels,
                   const std::vector<std::string>& arrow_names) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Reverses a path of Q into the corresponding path of Q^op.
Path opposite_path(const Path& p);

}  // namespace exactcat
