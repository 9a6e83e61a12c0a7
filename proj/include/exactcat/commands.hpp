#pragma once

// Command implementations behind the exactcat tool. Each command returns its
// result as JSON data plus a plain-text table and, where it makes sense, DOT.

#include "exactcat/io.hpp"

#include <json.hpp>

namespace exactcat {

enum ExitCode : int { kPass = 0, kViolation = 1, kInputError = 2, kCapExceeded = 3 };

enum class OutputFormat { table, structured, dot };

struct SessionConfig {
  std::shared_ptr<const Quiver> quiver;
  long p = 2;
  /// Total-dimension cap for objects; unset means EXACTCAT_CAP or, failing
  /// that, max(4, largest indecomposable).
  std::optional<std::size_t> cap;
  RadicalMode rad = RadicalMode::subcategory;
  OutputFormat format = OutputFormat::table;
};

struct CommandResult {
  int status = kPass;
  nlohmann::json data;
  std::string table;
  std::string dot;  // empty when the command has no graph output

  /// Throws InputError for DOT output of a command without a graph.
  std::string render(OutputFormat f) const;
};

/// Builds the catalog up front and the census on first use.
class Session {
 public:
  /// Throws CapExceeded if the catalog does not close or the cap is below the
  /// largest projective.
  explicit Session(SessionConfig cfg);

  const SessionConfig& config() const noexcept { return cfg_; }
  const ARCatalog& catalog() const noexcept { return catalog_; }
  std::size_t cap() const noexcept { return cap_; }
  const SequenceCensus& census() const;

  /// "all", "none", or a comma list of 1-based AR indices, "AR<k>", or names /
  /// dimension strings of right terms. Throws InputError.
  ExactStructure select(const std::string& spec) const;

 private:
  SessionConfig cfg_;
  ARCatalog catalog_;
  std::size_t cap_;
  mutable std::unique_ptr<SequenceCensus> census_;
};

/// Parses a cap value as given on the command line or in EXACTCAT_CAP.
std::size_t parse_cap(const std::string& text);

CommandResult cmd_catalog(const Session& s);
CommandResult cmd_lattice(const Session& s);
/// what: info | simples | lengths | gr | quiver
CommandResult cmd_structure(const Session& s, const std::string& selection, const std::string& what);
CommandResult cmd_reduce(const Session& s, const std::string& subquiver);

/// suite: gr-axioms | gr8 | oracle | superadditivity | poset | monotonicity |
/// order | fields | axioms | all. An empty selection runs every structure.
CommandResult cmd_verify(const Session& s, const std::string& suite, const std::string& selection = "",
                         std::size_t axiom_bound = 3);
std::vector<std::string> verify_suites();

struct MonoidQuery {
  std::vector<long> generators;
  bool simples = false;
  std::optional<long> length;
  std::optional<long> factorizations;
  std::optional<long> superadditivity_bound;
};
CommandResult cmd_monoid(const MonoidQuery& q);

/// "diamond", "chain:N", "antichain:N", or relations such as "a<b,a<c,b<d".
FinitePoset parse_poset(const std::string& text);
CommandResult cmd_poset(const std::string& hasse);

}  // namespace exactcat
