// lie-verifier: exact construction and verification of the R-coefficient
// analogues of the exceptional Lie algebra tower over Q(i).
//
//   verify --suite <all|f4|e6|e7|e8|roots|maps> [--json] [--deep]
//   roots  --algebra <f4r|e6r|e7r|e8r> [--format text|json]
//   export --algebra <name> --out <path>
//   table  --algebra <name>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "exla/verify.hpp"

namespace {

int cmd_verify(const std::string& suite, bool json, bool deep) {
  if (!exla::is_suite_name(suite)) {
    std::cerr << "unknown suite: " << suite << " (expected all|f4|e6|e7|e8|roots|maps)\n";
    return 2;
  }
  exla::VerificationReport rep = exla::run_suite(suite, deep);
  if (json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
  return rep.all_passed() ? 0 : 1;
}

int cmd_roots(const std::string& algebra, const std::string& format) {
  if (!exla::is_algebra_name(algebra)) {
    std::cerr << "unknown algebra: " << algebra << " (expected f4r|e6r|e7r|e8r)\n";
    return 2;
  }
  if (format != "text" && format != "json") {
    std::cerr << "unknown format: " << format << " (expected text|json)\n";
    return 2;
  }
  const exla::RootSystem& rs = exla::verify_detail::root_system(algebra);
  exla::PositiveSplit split = exla::positive_split(rs);
  std::vector<exla::Root> simple = exla::simple_roots(split.positive);
  exla::Matrix<exla::GaussRat> cm = exla::cartan_matrix(rs, simple);
  exla::DynkinDiagram diagram = exla::classify_dynkin(cm);

  if (format == "json") {
    nlohmann::json j = exla::root_system_to_json(rs);
    j["algebra"] = algebra;
    j["type"] = diagram.type;
    nlohmann::json sim = nlohmann::json::array();
    for (const exla::Root& r : simple) {
      nlohmann::json values = nlohmann::json::array();
      for (const auto& v : r.values)
        values.push_back({{"re", v.re.str()}, {"im", v.im.str()}});
      sim.push_back(values);
    }
    j["simple_roots"] = sim;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << algebra << ": dim " << rs.dim << ", rank " << rs.rank << ", "
            << rs.roots.size() << " roots, type " << diagram.type << "\n";
  std::cout << "simple roots (values on the cartan generators):\n";
  for (std::size_t i = 0; i < simple.size(); ++i) {
    std::cout << "  alpha" << (i + 1) << " = (";
    for (std::size_t j = 0; j < simple[i].values.size(); ++j)
      std::cout << simple[i].values[j] << (j + 1 < simple[i].values.size() ? ", " : ")");
    std::cout << "\n";
  }
  std::cout << "cartan matrix:\n";
  for (std::size_t i = 0; i < cm.rows(); ++i) {
    std::cout << "  ";
    for (std::size_t j = 0; j < cm.cols(); ++j)
      std::cout << cm(i, j) << (j + 1 < cm.cols() ? " " : "");
    std::cout << "\n";
  }
  std::cout << "diagram: " << exla::render_dynkin(diagram) << "\n";
  return 0;
}

int cmd_export(const std::string& algebra, const std::string& out) {
  if (!exla::is_algebra_name(algebra)) {
    std::cerr << "unknown algebra: " << algebra << "\n";
    return 2;
  }
  const exla::AlgebraBundle& b = exla::verify_detail::bundle(algebra);
  std::ofstream os(out);
  if (!os) {
    std::cerr << "cannot open " << out << " for writing\n";
    return 1;
  }
  os << b.data.to_json().dump(2) << "\n";
  if (!os) {
    std::cerr << "write to " << out << " failed\n";
    return 1;
  }
  return 0;
}

int cmd_table(const std::string& algebra) {
  if (!exla::is_algebra_name(algebra)) {
    std::cerr << "unknown algebra: " << algebra << "\n";
    return 2;
  }
  const exla::AlgebraBundle& b = exla::verify_detail::bundle(algebra);
  const auto& names = b.data.names();
  const std::size_t n = b.data.dim();
  std::cout << "bracket table for " << algebra << " (" << n << " basis elements)\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& row = b.data.row(i, j);
      std::cout << "[" << names[i] << ", " << names[j] << "] = ";
      if (row.empty()) {
        std::cout << "0\n";
        continue;
      }
      for (std::size_t k = 0; k < row.size(); ++k)
        std::cout << (k ? " + " : "") << "(" << row[k].second << ") " << names[row[k].first];
      std::cout << "\n";
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for the R-coefficient exceptional Lie algebra tower"};
  app.require_subcommand(1);

  std::string suite = "all", algebra, format = "text", out_path;
  bool json = false, deep = false;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "all|f4|e6|e7|e8|roots|maps")->required();
  verify->add_flag("--json", json, "machine-readable report");
  verify->add_flag("--deep", deep, "exhaustive sweeps (full e8 jacobi and killing)");

  CLI::App* roots = app.add_subcommand("roots", "print a root system");
  roots->add_option("--algebra", algebra, "f4r|e6r|e7r|e8r")->required();
  roots->add_option("--format", format, "text|json");

  CLI::App* exp = app.add_subcommand("export", "export structure constants as JSON");
  exp->add_option("--algebra", algebra, "f4r|e6r|e7r|e8r")->required();
  exp->add_option("--out", out_path, "output path")->required();

  CLI::App* table = app.add_subcommand("table", "print the bracket table");
  table->add_option("--algebra", algebra, "f4r|e6r|e7r|e8r")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(suite, json, deep);
    if (roots->parsed()) return cmd_roots(algebra, format);
    if (exp->parsed()) return cmd_export(algebra, out_path);
    if (table->parsed()) return cmd_table(algebra);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
