#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hja/corpus.hpp"
#include "hja/extend.hpp"
#include "hja/json_io.hpp"

using namespace hja;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

HomAlgebra load_algebra(const std::string& path) {
  return algebra_from_json(load_json(path));
}

void emit(const json& doc, const std::string& output_path) {
  std::string text = doc.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot write " + output_path);
    out << text;
  }
}

bool any_applicable_failure(const std::vector<Verdict>& vs) {
  for (const auto& v : vs)
    if (v.applicable_failure()) return true;
  return false;
}

json verdicts_to_json(const std::vector<Verdict>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(verdict_to_json(v));
  return arr;
}

void print_verdict_table(const std::vector<Verdict>& vs, std::ostream& os) {
  for (const auto& v : vs) {
    const char* status = !v.preconditions_met ? "not applicable"
                         : v.holds            ? "holds"
                                              : "FAILS";
    os << "  " << v.claim_id << ": " << status;
    if (!v.note.empty()) os << "  (" << v.note << ")";
    os << "\n";
  }
}

int cmd_validate(const std::string& input) {
  HomAlgebra a = load_algebra(input);
  bool ok = true;
  if (!a.check_commutative()) {
    ok = false;
    for (std::size_t i = 0; i < a.dim() && ok == false; ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t m = 0; m < a.dim(); ++m)
          if (a.c(i, j, m) != a.c(j, i, m)) {
            std::cout << "not commutative: c[" << i << "][" << j << "] != c["
                      << j << "][" << i << "]\n";
            i = a.dim();
            break;
          }
  }
  CheckReport hj = a.check_hom_jordan();
  if (!hj.ok) {
    ok = false;
    std::cout << "defining identity fails at basis tuple (";
    for (std::size_t t = 0; t < hj.failing_tuple.size(); ++t)
      std::cout << (t ? ", " : "") << hj.failing_tuple[t];
    std::cout << ")\n";
  }
  CheckReport mult = a.check_multiplicative_report();
  if (!mult.ok)
    std::cout << "note: twist is not an algebra endomorphism (pair "
              << mult.failing_tuple[0] << ", " << mult.failing_tuple[1]
              << ")\n";
  std::cout << (ok ? "valid" : "invalid") << ": " << a.name() << " (dim "
            << a.dim() << ", "
            << (mult.ok ? "multiplicative" : "not multiplicative") << ")\n";
  return ok ? kExitPass : kExitFail;
}

int cmd_spaces(const std::string& input, const std::string& output,
               std::size_t max_power, std::vector<std::string> kinds) {
  HomAlgebra a = load_algebra(input);
  if (kinds.empty())
    kinds = {"commutant", "der", "gder", "qder", "c", "qc", "zder"};
  json report{{"algebra", a.name()}, {"dim", a.dim()},
              {"max_power", max_power}};
  json entries = json::array();
  for (const std::string& kind_text : kinds) {
    SpaceKind kind = kind_from_name(kind_text);
    json per_k = json::array();
    if (kind == SpaceKind::Commutant) {
      per_k.push_back(map_space_to_json(commutant(a)));
      entries.push_back(json{{"kind", kind_text}, {"per_k", std::move(per_k)}});
      continue;
    }
    Aggregate agg = aggregate(a, kind, max_power);
    for (const MapSpace& m : agg.per_k) per_k.push_back(map_space_to_json(m));
    entries.push_back(json{{"kind", kind_text},
                           {"per_k", std::move(per_k)},
                           {"total_dim", agg.total.dim()},
                           {"direct", agg.direct}});
  }
  report["spaces"] = std::move(entries);
  emit(report, output);
  return kExitPass;
}

std::vector<Verdict> run_suites(const HomAlgebra& a, std::size_t max_power,
                                const std::string& suite) {
  std::vector<Verdict> vs;
  auto add = [&](std::vector<Verdict> more) {
    for (auto& v : more) vs.push_back(std::move(v));
  };
  if (suite == "closure" || suite == "all") add(closure_suite(a, max_power));
  if (suite == "extension" || suite == "all") add(extension_suite(a, max_power));
  if (suite == "centroid" || suite == "all") add(centroid_suite(a, max_power));
  return vs;
}

int cmd_theorems(const std::string& input, const std::string& output,
                 std::size_t max_power, const std::string& suite) {
  json report{{"max_power", max_power}, {"suite", suite}};
  json per_algebra = json::array();
  bool failed = false;
  std::vector<HomAlgebra> algebras;
  if (!input.empty()) {
    algebras.push_back(load_algebra(input));
  } else {
    algebras = corpus();
  }
  for (const HomAlgebra& a : algebras) {
    std::vector<Verdict> vs = run_suites(a, max_power, suite);
    failed = failed || any_applicable_failure(vs);
    std::cout << a.name() << ":\n";
    print_verdict_table(vs, std::cout);
    per_algebra.push_back(
        json{{"algebra", a.name()}, {"verdicts", verdicts_to_json(vs)}});
  }
  if (input.empty() && (suite == "closure" || suite == "all")) {
    // direct-sum decomposition claims need a pair of summands
    std::vector<std::pair<HomAlgebra, HomAlgebra>> pairs = {
        {unital_dim1(), unital_dim1()}, {sym2_jordan(), unital_dim1()}};
    for (const auto& [a1, a2] : pairs) {
      std::vector<Verdict> vs = verify_direct_sum_decomposition(a1, a2, max_power);
      failed = failed || any_applicable_failure(vs);
      std::string label = a1.name() + " (+) " + a2.name();
      std::cout << label << ":\n";
      print_verdict_table(vs, std::cout);
      per_algebra.push_back(
          json{{"algebra", label}, {"verdicts", verdicts_to_json(vs)}});
    }
  }
  report["results"] = std::move(per_algebra);
  if (!output.empty()) emit(report, output);
  return failed ? kExitFail : kExitPass;
}

int cmd_extend(const std::string& input, const std::string& output,
               std::size_t max_power) {
  HomAlgebra a = load_algebra(input);
  ExtendedAlgebra ext = extend_algebra(a);
  std::vector<Verdict> vs = extension_suite(a, max_power);
  print_verdict_table(vs, std::cout);
  json report{{"base", a.name()},
              {"carrier", algebra_to_json(ext.carrier)},
              {"u_complement", subspace_to_json(ext.u_complement)},
              {"verdicts", verdicts_to_json(vs)}};
  emit(report, output);
  return any_applicable_failure(vs) ? kExitFail : kExitPass;
}

int cmd_centroid(const std::string& input, const std::string& output,
                 std::size_t max_power) {
  HomAlgebra a = load_algebra(input);
  CentroidTable table = centroid_composition_table(a, max_power);
  std::vector<Verdict> vs = centroid_suite(a, max_power);
  print_verdict_table(vs, std::cout);
  json comp = json::array();
  for (const auto& row : table.table) {
    json jrow = json::array();
    for (const auto& cell : row) {
      if (!cell) {
        jrow.push_back(nullptr);
        continue;
      }
      json coords = json::array();
      for (const Scalar& e : *cell) coords.push_back(format_scalar(e));
      jrow.push_back(std::move(coords));
    }
    comp.push_back(std::move(jrow));
  }
  json report{{"algebra", a.name()},
              {"centroid", subspace_to_json(table.total)},
              {"composition_closed", table.closed},
              {"composition_table", std::move(comp)},
              {"verdicts", verdicts_to_json(vs)}};
  emit(report, output);
  return any_applicable_failure(vs) ? kExitFail : kExitPass;
}

int cmd_quotient(const std::string& input, const std::string& ideal_path,
                 const std::string& output, std::size_t max_power) {
  HomAlgebra a = load_algebra(input);
  json rows = load_json(ideal_path);
  std::vector<Vector> basis;
  for (const auto& row : rows) {
    Vector v;
    for (const auto& e : row) v.push_back(parse_scalar(e.get<std::string>()));
    basis.push_back(std::move(v));
  }
  Subspace ideal = Subspace::span(basis, a.dim());
  if (!a.is_hom_ideal(ideal)) {
    std::cout << "input subspace is not an ideal stable under the twist\n";
    return kExitInputError;
  }
  QuotientMap q = quotient(a, ideal);
  std::vector<Verdict> vs = verify_quotient_induced_maps(q, max_power);
  print_verdict_table(vs, std::cout);
  json report{{"source", a.name()},
              {"ideal", subspace_to_json(ideal)},
              {"target", algebra_to_json(q.target)},
              {"pi", matrix_to_json(q.pi)},
              {"verdicts", verdicts_to_json(vs)}};
  emit(report, output);
  return any_applicable_failure(vs) ? kExitFail : kExitPass;
}

int cmd_gen(const std::string& output_dir) {
  std::filesystem::create_directories(output_dir.empty() ? "." : output_dir);
  for (const HomAlgebra& a : corpus()) {
    std::string path =
        (std::filesystem::path(output_dir.empty() ? "." : output_dir) /
         (a.name() + ".json"))
            .string();
    emit(algebra_to_json(a), path);
    std::cout << path << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and verifier for twisted Jordan-type algebras"};
  app.require_subcommand(1);

  std::string input, output, ideal_path, suite = "all";
  std::string gen_dir = "corpus";
  std::size_t max_power = 3;
  std::vector<std::string> kinds;
  std::uint64_t seed = 0;

  CLI::App* validate = app.add_subcommand("validate", "check algebra axioms");
  validate->add_option("--input", input)->required();

  CLI::App* spaces = app.add_subcommand("spaces", "operator space bases");
  spaces->add_option("--input", input)->required();
  spaces->add_option("--output", output);
  spaces->add_option("--max-power", max_power);
  spaces->add_option("--kinds", kinds)->delimiter(',');

  CLI::App* theorems = app.add_subcommand("theorems", "verdict suites");
  theorems->add_option("--input", input);
  theorems->add_option("--output", output);
  theorems->add_option("--max-power", max_power);
  theorems->add_option("--suite", suite)
      ->check(CLI::IsMember({"closure", "extension", "centroid", "all"}));

  CLI::App* extend = app.add_subcommand("extend", "polynomial extension");
  extend->add_option("--input", input)->required();
  extend->add_option("--output", output);
  extend->add_option("--max-power", max_power);

  CLI::App* centroid = app.add_subcommand("centroid", "centroid reports");
  centroid->add_option("--input", input)->required();
  centroid->add_option("--output", output);
  centroid->add_option("--max-power", max_power);

  CLI::App* quot = app.add_subcommand("quotient", "quotient-induced maps");
  quot->add_option("--input", input)->required();
  quot->add_option("--ideal", ideal_path)->required();
  quot->add_option("--output", output);
  quot->add_option("--max-power", max_power);

  CLI::App* gen = app.add_subcommand("gen", "emit the example corpus");
  gen->add_option("--output", gen_dir);
  gen->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(input);
    if (spaces->parsed()) return cmd_spaces(input, output, max_power, kinds);
    if (theorems->parsed())
      return cmd_theorems(input, output, max_power, suite);
    if (extend->parsed()) return cmd_extend(input, output, max_power);
    if (centroid->parsed()) return cmd_centroid(input, output, max_power);
    if (quot->parsed())
      return cmd_quotient(input, ideal_path, output, max_power);
    if (gen->parsed()) return cmd_gen(gen_dir);
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitPass;
}
