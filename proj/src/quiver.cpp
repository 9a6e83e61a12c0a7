#include "exactcat/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace exactcat {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw std::invalid_argument("duplicate vertex label");
  std::set<std::string> names;
  for (const Arrow& a : arrows_) {
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw std::invalid_argument("arrow '" + a.name + "' has an unknown endpoint");
    if (!names.insert(a.name).second)
      throw std::invalid_argument("duplicate arrow name '" + a.name + "'");
  }

  // Kahn's algorithm; leftover vertices sit on a cycle.
  std::vector<std::size_t> indegree(vertices_.size(), 0);
  for (const Arrow& a : arrows_) ++indegree[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++visited;
    for (const Arrow& a : arrows_)
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
  }
  if (visited != vertices_.size()) throw std::invalid_argument("quiver has an oriented cycle");
}

std::size_t Quiver::vertex_index(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) throw std::invalid_argument("unknown vertex '" + label + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].name == name) return a;
  throw std::invalid_argument("unknown arrow '" + name + "'");
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> reversed;
  reversed.reserve(arrows_.size());
  for (const Arrow& a : arrows_) reversed.push_back({a.target, a.source, a.name});
  return Quiver(vertices_, std::move(reversed));
}

std::vector<Path> Quiver::paths(std::size_t from, std::size_t to) const {
  std::vector<Path> out;
  Path current;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == to) out.push_back(current);
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      if (arrows_[a].source != v) continue;
      current.push_back(a);
      walk(arrows_[a].target);
      current.pop_back();
    }
  };
  walk(from);
  std::sort(out.begin(), out.end(), [](const Path& x, const Path& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

Quiver Quiver::subquiver(const std::vector<std::string>& vertex_labels,
                         const std::vector<std::string>& arrow_names) const {
  std::vector<bool> keep_vertex(vertices_.size(), false);
  for (const auto& l : vertex_labels) keep_vertex[vertex_index(l)] = true;
  std::vector<bool> keep_arrow(arrows_.size(), false);
  for (const auto& n : arrow_names) keep_arrow[arrow_index(n)] = true;

  std::vector<std::string> vs;
  std::vector<std::size_t> renumber(vertices_.size(), 0);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!keep_vertex[v]) continue;
    renumber[v] = vs.size();
    vs.push_back(vertices_[v]);
  }
  std::vector<Arrow> as;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (!keep_arrow[a]) continue;
    const Arrow& arr = arrows_[a];
    if (!keep_vertex[arr.source] || !keep_vertex[arr.target])
      throw std::invalid_argument("arrow '" + arr.name + "' leaves the sub-quiver's vertex set");
    as.push_back({renumber[arr.source], renumber[arr.target], arr.name});
  }
  return Quiver(std::move(vs), std::move(as));
}

Path opposite_path(const Path& p) { return Path(p.rbegin(), p.rend()); }

}  // namespace exactcat
