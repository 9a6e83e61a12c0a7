// exactcat: exact structures on representations of a representation-finite quiver.

#include "exactcat/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace exactcat;

namespace {

std::vector<long> parse_gens(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad generator '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structures, lengths and Gabriel-Roiter measures for quiver representations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string quiver_path, rad = "subcategory", format = "table", output;
  std::optional<long> p;
  std::optional<std::size_t> cap;
  app.add_option("-q,--quiver", quiver_path, "quiver spec file")->check(CLI::ExistingFile);
  app.add_option("-p,--p", p, "field characteristic (default: from the spec file, else 2)");
  app.add_option("--cap", cap, "total dimension cap for objects (default: $EXACTCAT_CAP or automatic)");
  app.add_option("--rad", rad, "radical used for degree 0 arrows")->check(CLI::IsMember({"subcategory", "ambient"}));
  app.add_option("-f,--format", format, "output format")->check(CLI::IsMember({"table", "structured", "dot"}));
  app.add_option("-o,--output", output, "write output to a file instead of stdout");

  auto* catalog = app.add_subcommand("catalog", "indecomposables, AR quiver and AR sequences");
  auto* lattice = app.add_subcommand("lattice", "all exact structures and their Hasse diagram");

  auto* structure = app.add_subcommand("structure", "reports for one exact structure");
  std::string selection = "none", what = "info";
  structure->add_option("--select", selection, "all, none, or AR indices / right-term names, e.g. 1,3 or S3,I2");
  structure->add_option("report", what, "info | simples | lengths | gr | quiver")
      ->check(CLI::IsMember({"info", "simples", "lengths", "gr", "quiver"}));

  auto* reduce = app.add_subcommand("reduce", "structure of sequences that split on a sub-quiver");
  std::string sub;
  reduce->add_option("--sub,sub", sub, "sub-quiver, e.g. 1->2 or 1->2,3")->required();

  auto* verify = app.add_subcommand("verify", "property suites");
  std::string suite, verify_select;
  std::size_t bound = 3;
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(verify_suites()));
  verify->add_option("--select", verify_select, "restrict to one structure (default: every structure)");
  verify->add_option("--bound", bound, "total dimension bound for the axioms suite");

  auto* monoid = app.add_subcommand("monoid", "the numerical monoid category");
  std::string gens;
  MonoidQuery mq;
  monoid->add_option("--gens", gens, "generators, e.g. 2,3")->required();
  monoid->add_flag("--simples", mq.simples, "print the simple objects");
  monoid->add_option("--length", mq.length, "length of k^n");
  monoid->add_option("--factorizations", mq.factorizations, "all factorization lengths of n");
  monoid->add_option("--superadditivity", mq.superadditivity_bound, "check superadditivity up to n");

  auto* poset = app.add_subcommand("poset", "graded quiver of poset representations");
  std::string hasse;
  poset->add_option("--hasse", hasse, "diamond, chain:N, antichain:N or relations like a<b,b<c")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    CommandResult result;
    if (monoid->parsed()) {
      mq.generators = parse_gens(gens);
      result = cmd_monoid(mq);
    } else if (poset->parsed()) {
      result = cmd_poset(hasse);
    } else {
      if (quiver_path.empty()) throw InputError("--quiver is required for this command");
      const QuiverSpec spec = load_quiver_spec(quiver_path);
      SessionConfig cfg;
      cfg.quiver = spec.quiver;
      cfg.p = p ? *p : spec.p.value_or(2);
      if (!is_prime(cfg.p)) throw InputError("p = " + std::to_string(cfg.p) + " is not prime");
      cfg.cap = cap;
      cfg.rad = rad == "ambient" ? RadicalMode::ambient : RadicalMode::subcategory;
      const Session session(cfg);
      if (catalog->parsed()) result = cmd_catalog(session);
      else if (lattice->parsed()) result = cmd_lattice(session);
      else if (structure->parsed()) result = cmd_structure(session, selection, what);
      else if (reduce->parsed()) result = cmd_reduce(session, sub);
      else result = cmd_verify(session, suite, verify_select, bound);
    }
    const OutputFormat fmt =
        format == "structured" ? OutputFormat::structured : format == "dot" ? OutputFormat::dot : OutputFormat::table;
    const std::string text = result.render(fmt);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output);
      if (!out) throw InputError("cannot write " + output);
      out << text;
    }
    return result.status;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
