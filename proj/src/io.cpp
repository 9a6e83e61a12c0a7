#include "exactcat/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <variant>

namespace exactcat {

namespace {

struct Value;
using Table = std::vector<std::pair<std::string, Value>>;
using Array = std::vector<Value>;

struct Value {
  std::variant<std::string, long, Array, Table> v;
  int line = 0;
};

class Reader {
 public:
  explicit Reader(const std::string& text) : s_(text) {}

  std::vector<std::pair<std::string, Value>> document() {
    std::vector<std::pair<std::string, Value>> out;
    skip();
    while (pos_ < s_.size()) {
      const int at = line_;
      std::string key = bare_key();
      skip_inline();
      expect('=');
      Value val = value();
      skip_inline();
      if (pos_ < s_.size() && s_[pos_] != '\n' && s_[pos_] != '#') fail("expected end of line");
      for (const auto& [k, _] : out)
        if (k == key) fail_at(at, "duplicate key '" + key + "'");
      out.emplace_back(std::move(key), std::move(val));
      skip();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(line_, what); }
  [[noreturn]] static void fail_at(int line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
  }

  // Whitespace, newlines and comments.
  void skip() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void skip_inline() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string bare_key() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected a key");
    return s_.substr(start, pos_ - start);
  }

  Value value() {
    skip_inline();
    if (pos_ >= s_.size()) fail("expected a value");
    Value out;
    out.line = line_;
    const char c = s_[pos_];
    if (c == '"') {
      ++pos_;
      std::string str;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        if (s_[pos_] == '\n') fail("unterminated string");
        if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
        str += s_[pos_++];
      }
      expect('"');
      out.v = std::move(str);
    } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      try {
        out.v = std::stol(s_.substr(start, pos_ - start));
      } catch (const std::exception&) {
        fail("bad integer");
      }
    } else if (c == '[') {
      ++pos_;
      Array items;
      skip();
      while (pos_ < s_.size() && s_[pos_] != ']') {
        items.push_back(value());
        skip();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          skip();
        } else if (pos_ < s_.size() && s_[pos_] != ']') {
          fail("expected ',' or ']'");
        }
      }
      expect(']');
      out.v = std::move(items);
    } else if (c == '{') {
      ++pos_;
      Table t;
      skip_inline();
      while (pos_ < s_.size() && s_[pos_] != '}') {
        std::string key = bare_key();
        skip_inline();
        expect('=');
        t.emplace_back(std::move(key), value());
        skip_inline();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          skip_inline();
        } else if (pos_ < s_.size() && s_[pos_] != '}') {
          fail("expected ',' or '}'");
        }
      }
      expect('}');
      out.v = std::move(t);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    return out;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

std::string as_label(const Value& v) {
  if (auto s = std::get_if<std::string>(&v.v)) return *s;
  if (auto n = std::get_if<long>(&v.v)) return std::to_string(*n);
  throw InputError("line " + std::to_string(v.line) + ": expected a string or integer");
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

QuiverSpec parse_quiver_spec(const std::string& text) {
  const auto doc = Reader(text).document();
  std::optional<std::vector<std::string>> vertices;
  std::vector<std::tuple<std::string, std::string, std::string, int>> raw_arrows;
  QuiverSpec spec;
  for (const auto& [key, val] : doc) {
    const std::string where = "line " + std::to_string(val.line) + ": ";
    if (key == "vertices") {
      const auto* arr = std::get_if<Array>(&val.v);
      if (!arr) throw InputError(where + "vertices must be an array");
      vertices.emplace();
      for (const Value& x : *arr) vertices->push_back(as_label(x));
    } else if (key == "arrows") {
      const auto* arr = std::get_if<Array>(&val.v);
      if (!arr) throw InputError(where + "arrows must be an array");
      for (const Value& x : *arr) {
        const auto* t = std::get_if<Table>(&x.v);
        if (!t) throw InputError("line " + std::to_string(x.line) + ": each arrow must be {from, to, name}");
        std::string from, to, name;
        for (const auto& [k, field] : *t) {
          if (k == "from") from = as_label(field);
          else if (k == "to") to = as_label(field);
          else if (k == "name") name = as_label(field);
          else throw InputError("line " + std::to_string(field.line) + ": unknown arrow field '" + k + "'");
        }
        if (from.empty() || to.empty()) throw InputError("line " + std::to_string(x.line) + ": arrow needs from and to");
        raw_arrows.emplace_back(from, to, name, x.line);
      }
    } else if (key == "p") {
      const auto* n = std::get_if<long>(&val.v);
      if (!n) throw InputError(where + "p must be an integer");
      if (!is_prime(*n)) throw InputError(where + "p = " + std::to_string(*n) + " is not prime");
      spec.p = *n;
    } else {
      throw InputError(where + "unknown key '" + key + "'");
    }
  }
  if (!vertices) throw InputError("missing 'vertices'");
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < raw_arrows.size(); ++k) {
    const auto& [from, to, name, line] = raw_arrows[k];
    auto locate = [&, line = line](const std::string& label) {
      for (std::size_t v = 0; v < vertices->size(); ++v)
        if ((*vertices)[v] == label) return v;
      throw InputError("line " + std::to_string(line) + ": unknown vertex '" + label + "'");
    };
    std::string n = name.empty() ? std::string(1, static_cast<char>('a' + k % 26)) + (k < 26 ? "" : std::to_string(k / 26))
                                 : name;
    arrows.push_back({locate(from), locate(to), std::move(n)});
  }
  try {
    spec.quiver = std::make_shared<const Quiver>(*vertices, arrows);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return spec;
}

QuiverSpec load_quiver_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_quiver_spec(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_quiver_spec(const QuiverSpec& spec) {
  const Quiver& q = *spec.quiver;
  std::ostringstream out;
  out << "vertices = [";
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out << (v ? ", " : "") << quoted(q.label(v));
  out << "]\narrows = [";
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    out << (a ? ", " : "") << "{from = " << quoted(q.label(ar.source)) << ", to = " << quoted(q.label(ar.target))
        << ", name = " << quoted(ar.name) << "}";
  }
  out << "]\n";
  if (spec.p) out << "p = " << *spec.p << "\n";
  return out.str();
}

Quiver parse_subquiver(const Quiver& parent, const std::string& text) {
  std::vector<bool> use_vertex(parent.vertex_count(), false), use_arrow(parent.arrow_count(), false);
  auto vertex = [&](const std::string& label) {
    try {
      return parent.vertex_index(label);
    } catch (const std::invalid_argument&) {
      throw InputError("unknown vertex '" + label + "' in sub-quiver");
    }
  };
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    const auto arrow_at = item.find("->");
    if (arrow_at == std::string::npos) {
      use_vertex[vertex(item)] = true;
      continue;
    }
    std::string rest = item.substr(arrow_at + 2), name;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
      name = rest.substr(colon + 1);
      rest.resize(colon);
    }
    const std::size_t from = vertex(item.substr(0, arrow_at)), to = vertex(rest);
    std::vector<std::size_t> hits;
    for (std::size_t a = 0; a < parent.arrow_count(); ++a) {
      const Arrow& ar = parent.arrow(a);
      if (ar.source == from && ar.target == to && (name.empty() || ar.name == name)) hits.push_back(a);
    }
    if (hits.empty()) throw InputError("no arrow " + item + " in the quiver");
    if (hits.size() > 1) throw InputError("several arrows match " + item + "; add :name");
    use_arrow[hits[0]] = use_vertex[from] = use_vertex[to] = true;
  }
  std::vector<std::string> labels, names;
  for (std::size_t v = 0; v < parent.vertex_count(); ++v)
    if (use_vertex[v]) labels.push_back(parent.label(v));
  for (std::size_t a = 0; a < parent.arrow_count(); ++a)
    if (use_arrow[a]) names.push_back(parent.arrow(a).name);
  if (labels.empty()) throw InputError("empty sub-quiver");
  return parent.subquiver(labels, names);
}

std::string ar_quiver_dot(const ARCatalog& c) {
  std::ostringstream out;
  out << "digraph ar_quiver {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    out << "  n" << i << " [label=" << quoted(c.name(i) + "\\n" + dim_string(c.indecomposable(i).dims())) << "];\n";
  for (auto [a, b] : c.ar_quiver_arrows()) out << "  n" << a << " -> n" << b << ";\n";
  for (const auto& ar : c.ar_sequences())
    out << "  n" << ar.right << " -> n" << ar.left << " [style=dashed, constraint=false, color=gray];\n";
  out << "}\n";
  return out.str();
}

std::string lattice_dot(const ExLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.structures.size(); ++i)
    out << "  e" << i << " [label=" << quoted("E" + lattice.structures[i].label()) << "];\n";
  for (auto [a, b] : lattice.hasse) out << "  e" << a << " -> e" << b << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

std::string graded_quiver_dot(const ARCatalog& c, const GradedQuiver& q, const std::string& title) {
  std::ostringstream out;
  out << "digraph " << quoted(title) << " {\n";
  for (std::size_t v : q.vertices) out << "  n" << v << " [label=" << quoted(c.name(v)) << "];\n";
  for (const auto& a : q.arrows)
    for (std::size_t m = 0; m < a.multiplicity; ++m)
      out << "  n" << a.from << " -> n" << a.to << " [style=" << (a.degree == 0 ? "dotted" : "solid") << "];\n";
  out << "}\n";
  return out.str();
}

std::string poset_quiver_dot(const PosetQuiver& q) {
  std::ostringstream out;
  out << "digraph poset {\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v) out << "  v" << v << " [label=" << quoted(q.vertices[v]) << "];\n";
  for (const auto& a : q.arrows)
    out << "  v" << a.from << " -> v" << a.to << " [style=" << (a.degree == 0 ? "dotted" : "solid") << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace exactcat
