#include "pathbetti/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathbetti/errors.hpp"
#include "pathbetti/formulas.hpp"

namespace pathbetti::cli {

std::string render_text(const BettiTable& table, const std::string& header) {
  const int max_j = table.max_degree();
  const int max_i = table.max_index();
  std::size_t width = 1;
  for (const auto& [key, b] : table.entries()) width = std::max(width, std::to_string(b).size());
  width = std::max(width, std::to_string(max_j).size());

  std::ostringstream os;
  os << header << '\n';
  os << "i\\j ";
  for (int j = 0; j <= max_j; ++j) os << ' ' << std::setw(static_cast<int>(width)) << j;
  os << '\n';
  for (int i = 0; i <= max_i; ++i) {
    os << std::setw(3) << i << ':';
    for (int j = 0; j <= max_j; ++j) {
      const std::uint64_t b = table.at(i, j);
      os << ' ' << std::setw(static_cast<int>(width)) << (b ? std::to_string(b) : ".");
    }
    os << '\n';
  }
  return os.str();
}

std::string render_json(const BettiTable& table) {
  nlohmann::ordered_json doc;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, b] : table.entries()) {
    nlohmann::ordered_json e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["b"] = b;
    doc["entries"].push_back(std::move(e));
  }
  return doc.dump() + '\n';
}

std::string render_csv(const BettiTable& table) {
  std::string s = "i,j,b\n";
  for (const auto& [key, b] : table.entries()) {
    s += std::to_string(key.first) + ',' + std::to_string(key.second) + ',' +
         std::to_string(b) + '\n';
  }
  return s;
}

BettiTable parse_json_table(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("table JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw InputError("table JSON: missing \"entries\" array");
  }
  BettiTable table;
  for (const auto& e : doc["entries"]) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("b")) {
      throw InputError("table JSON: malformed entry " + e.dump());
    }
    table.add(e["i"].get<int>(), e["j"].get<int>(), e["b"].get<std::uint64_t>());
  }
  return table;
}

namespace {

struct GraphSource {
  int line = 0, cycle = 0, star = 0;
  std::string edges_file;

  std::optional<std::pair<GraphFamily, int>> family() const {
    if (line) return std::pair{GraphFamily::Line, line};
    if (cycle) return std::pair{GraphFamily::Cycle, cycle};
    if (star) return std::pair{GraphFamily::Star, star};
    return std::nullopt;
  }

  Graph load() const {
    if (auto f = family()) return standard_graph(f->first, f->second);
    std::ifstream in(edges_file);
    if (!in) throw InputError("cannot read graph file '" + edges_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
  }

  std::string describe() const {
    if (auto f = family()) return to_string(f->first) + " " + std::to_string(f->second);
    return edges_file;
  }
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  auto* line = cmd->add_option("--line", src.line, "line of order N")->check(CLI::PositiveNumber);
  auto* cycle = cmd->add_option("--cycle", src.cycle, "cycle of size N")->check(CLI::Range(3, 1 << 20));
  auto* star = cmd->add_option("--star", src.star, "star of size N")->check(CLI::PositiveNumber);
  auto* edges = cmd->add_option("--edges", src.edges_file, "JSON file {\"n\":..,\"edges\":[[u,v],..]}");
  line->excludes(cycle, star, edges);
  cycle->excludes(star, edges);
  star->excludes(edges);
}

void require_graph(const GraphSource& src) {
  if (!src.family() && src.edges_file.empty()) {
    throw InputError("one of --line, --cycle, --star, --edges is required");
  }
}

std::string table_header(int t, const std::string& graph, const std::string& method,
                         std::optional<std::uint32_t> prime) {
  std::string h = "Betti numbers of S/I_t(G): t = " + std::to_string(t) + ", G = " + graph +
                  ", method = " + method;
  if (prime) h += ", prime = " + std::to_string(*prime);
  return h;
}

void check_prime(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw InputError("--prime " + std::to_string(p) + " is not a prime below 2^31");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti numbers of path ideals of graphs"};
  app.require_subcommand(1);

  GraphSource src;
  int t = 0;
  std::string method = "oracle";
  std::string format = "table";
  std::uint32_t prime = kDefaultPrime;
  bool memo = false;
  int omega_n = 0;
  std::string complex_file;

  auto* betti = app.add_subcommand("betti", "print the Betti table of S/I_t(G)");
  add_graph_options(betti, src);
  betti->add_option("--t", t, "path length parameter")->required()->check(CLI::PositiveNumber);
  betti->add_option("--method", method)->check(CLI::IsMember({"oracle", "formula"}));
  betti->add_option("--prime", prime, "field characteristic for the oracle");
  betti->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
  betti->add_flag("--memo", memo, "cache results by induced-subgraph isomorphism class");

  auto* compare = app.add_subcommand("compare", "check the oracle against the closed form");
  add_graph_options(compare, src);
  compare->add_option("--t", t)->required()->check(CLI::PositiveNumber);
  compare->add_option("--prime", prime);
  compare->add_flag("--memo", memo);

  auto* omega = app.add_subcommand("omega", "homology of the sliding-window complex");
  omega->add_option("--n", omega_n)->required();
  omega->add_option("--t", t)->required();
  omega->add_option("--prime", prime);

  auto* paths = app.add_subcommand("paths", "list the generators of I_t(G)");
  add_graph_options(paths, src);
  paths->add_option("--t", t)->required()->check(CLI::PositiveNumber);

  auto* homology = app.add_subcommand("homology", "reduced homology of a complex given by facets");
  homology->add_option("--complex", complex_file, "one facet per line, vertices comma-separated")
      ->required();
  homology->add_option("--prime", prime);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    check_prime(prime);
    OracleOptions opts;
    opts.prime = prime;
    opts.memo = memo;

    if (betti->parsed()) {
      require_graph(src);
      BettiTable table;
      std::string note;
      if (method == "formula") {
        auto fam = src.family();
        if (!fam) throw InputError("formula method requires a named family");
        FormulaTable ft = formula_betti_table(fam->first, fam->second, t);
        table = ft.table;
        if (fam->first == GraphFamily::Cycle) {
          note = "entries with j >= " + std::to_string(ft.degree_bound) +
                 " are not covered by the closed form";
        }
      } else {
        table = graded_betti_table(src.load(), t, opts);
      }
      if (format == "json") {
        out << render_json(table);
      } else if (format == "csv") {
        out << render_csv(table);
      } else {
        out << render_text(table, table_header(t, src.describe(), method,
                                               method == "oracle" ? std::optional{prime}
                                                                  : std::nullopt));
        if (!note.empty()) out << note << '\n';
      }
      return kOk;
    }

    if (compare->parsed()) {
      require_graph(src);
      auto fam = src.family();
      if (!fam) throw InputError("compare requires a named family");
      const FormulaTable ft = formula_betti_table(fam->first, fam->second, t);
      const BettiTable oracle =
          graded_betti_table(src.load(), t, opts).restricted_to_degrees_below(ft.degree_bound);
      std::size_t differing = 0;
      std::map<std::pair<int, int>, bool> keys;
      for (const auto& [k, b] : oracle.entries()) keys[k] = true;
      for (const auto& [k, b] : ft.table.entries()) keys[k] = true;
      for (const auto& [k, unused] : keys) {
        const auto a = oracle.at(k.first, k.second);
        const auto b = ft.table.at(k.first, k.second);
        if (a != b) {
          ++differing;
          out << "(" << k.first << "," << k.second << "): oracle=" << a << " formula=" << b
              << '\n';
        }
      }
      const std::string scope = fam->first == GraphFamily::Cycle
                                    ? "j<" + std::to_string(ft.degree_bound) + ", "
                                    : std::string{};
      if (differing) {
        out << "MISMATCH (" << scope << differing << " of " << keys.size()
            << " entries differ)\n";
        return kMismatch;
      }
      out << "MATCH (" << scope << keys.size() << " entries)\n";
      return kOk;
    }

    if (omega->parsed()) {
      const auto oracle = reduced_homology_dims(omega_complex(omega_n, t), prime);
      const auto formula = omega_homology_dims_formula(omega_n, t);
      std::map<int, bool> degrees;
      for (auto [p, d] : oracle.support()) degrees[p] = true;
      for (auto [p, d] : formula) degrees[p] = true;
      bool ok = true;
      out << "reduced homology of Omega(n=" << omega_n << ", t=" << t << ") over GF(" << prime
          << ")\n";
      if (degrees.empty()) out << "all zero, MATCH\n";
      for (const auto& [p, unused] : degrees) {
        const auto a = oracle.at(p);
        const auto it = formula.find(p);
        const std::uint64_t b = it == formula.end() ? 0 : it->second;
        ok = ok && a == b;
        out << "p=" << p << ": " << a << " (oracle) / " << b << " (formula) "
            << (a == b ? "MATCH" : "MISMATCH") << '\n';
      }
      return ok ? kOk : kMismatch;
    }

    if (paths->parsed()) {
      require_graph(src);
      const auto gens = enumerate_t_paths(src.load(), t);
      for (const auto& g : gens) out << g << '\n';
      out << gens.size() << (gens.size() == 1 ? " generator" : " generators") << '\n';
      return kOk;
    }

    if (homology->parsed()) {
      std::ifstream in(complex_file);
      if (!in) throw InputError("cannot read complex file '" + complex_file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      const SimplicialComplex k = parse_complex(buf.str());
      const auto h = reduced_homology_dims(k, prime);
      out << "reduced homology over GF(" << prime << ")\n";
      if (h.support().empty()) out << "all zero\n";
      for (auto [p, d] : h.support()) out << "p=" << p << ": " << d << '\n';
      out << "reduced Euler characteristic: " << reduced_euler_characteristic(k) << '\n';
      return kOk;
    }
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << " (try --method formula)\n";
    return kResourceCap;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pathbetti::cli
