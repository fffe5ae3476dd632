#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hlgf/charge.hpp"
#include "hlgf/continuum.hpp"
#include "hlgf/errors.hpp"
#include "hlgf/field.hpp"
#include "hlgf/json_io.hpp"
#include "hlgf/parser.hpp"

namespace hlgf::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// Carries a report that must reach stdout before exiting with kValidationFailure.
class ReportedFailure : public Error {
 public:
  explicit ReportedFailure(Json report) : Error("validation failure"), report_(std::move(report)) {}
  const Json& report() const noexcept { return report_; }

 private:
  Json report_;
};

Json read_json(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    in = &file;
  }
  try {
    return Json::parse(*in);
  } catch (const Json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

SkeletalComplex load_complex(const std::string& name_or_path) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
    return build_builtin(name_or_path);
  }
  if (!std::filesystem::exists(name_or_path)) {
    throw UsageError("'" + name_or_path + "' is neither a built-in complex nor a file");
  }
  return complex_from_json(read_json(name_or_path));
}

HLGF load_field(const std::string& path) { return field_from_json(read_json(path)); }

std::vector<VertexId> parse_cycle(const std::string& text) {
  std::vector<VertexId> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("equator must be a comma-separated vertex list, got '" + text + "'");
    }
  }
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homotopy lattice gauge fields: build, cut off, evaluate and classify", "hlgf"};
  app.require_subcommand(1);

  std::string name, field_path, complex_arg, oracle_arg, route = "covering", equator, assignment,
      expr, group = "U1";
  int resolution = 256;
  double max_phase_step = kPi / 2.0;
  double tolerance = kCutoffTolerance;
  std::uint64_t seed = 0;

  auto* build = app.add_subcommand("build", "Write a built-in complex");
  build->add_option("name", name, "s2_five_vertex, s2_tetra or s3_pentachoron")->required();

  auto* cut = app.add_subcommand("cutoff", "Cut off a continuum connection to a lattice field");
  cut->add_option("oracle,--oracle", oracle_arg, "round-sphere, monopole:<n> or trivial")->required();
  cut->add_option("complex,--complex", complex_arg, "built-in name or complex file")->required();
  cut->add_option("-r,--resolution", resolution, "samples per parameter direction (>= 16)");
  cut->add_option("--max-phase-step", max_phase_step,
                  "largest phase step between adjacent homotopy samples");
  cut->add_option("--tolerance", tolerance, "endpoint tolerance stored with the field");

  auto* charge = app.add_subcommand("charge", "Topological charge of a 2D field");
  charge->add_option("field", field_path, "field file or - for stdin")->required();
  charge->add_option("--route", route, "covering, facesum or transition")
      ->check(CLI::IsMember({"covering", "facesum", "transition"}));
  charge->add_option("--equator", equator, "comma-separated vertex cycle for the transition route");

  auto* check = app.add_subcommand("check", "Consistency report of a field");
  check->add_option("field", field_path, "field file or - for stdin")->required();

  auto* gauge = app.add_subcommand("gauge", "Apply a gauge transformation");
  gauge->add_option("field", field_path, "field file or - for stdin")->required();
  gauge->add_option("--assignment", assignment, "gauge assignment file")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a globe expression");
  eval->add_option("field", field_path, "field file or - for stdin")->required();
  eval->add_option("--expr", expr, "globe expression, e.g. \"inv0(G135) o0 G134\"")->required();

  auto* randomize = app.add_subcommand("randomize", "Random field with endpoint-compatible faces");
  randomize->add_option("--seed", seed, "random seed")->required();
  randomize->add_option("--complex", complex_arg, "built-in name or complex file")->required();
  randomize->add_option("--group", group, "U1, SO3 or SU2")
      ->check(CLI::IsMember({"U1", "SO3", "SU2"}));

  auto* classify = app.add_subcommand("classify", "Bundle classification of a field");
  classify->add_option("field", field_path, "field file or - for stdin")->required();

  std::vector<std::string> argv_storage{"hlgf"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) {
      emit(out, to_json(build_builtin(name)));
    } else if (*cut) {
      const auto oracle = parse_oracle(oracle_arg);
      CutoffOptions options;
      options.resolution = resolution;
      options.max_phase_step = max_phase_step;
      options.tolerance = tolerance;
      emit(out, to_json(cutoff(*oracle, load_complex(complex_arg), options)));
    } else if (*charge) {
      const ChargeRoute r = parse_route(route);
      if (r != ChargeRoute::kTransitionWinding && !equator.empty()) {
        throw UsageError("--equator only applies to the transition route");
      }
      const HLGF f = load_field(field_path);
      if (r == ChargeRoute::kCoveringWord) {
        emit(out, to_json(topological_charge(f)));
      } else if (r == ChargeRoute::kFaceSum) {
        emit(out, to_json(charge_face_sum(f)));
      } else {
        const std::vector<VertexId> cycle =
            equator.empty() ? std::vector<VertexId>{} : parse_cycle(equator);
        if (cycle.empty()) throw UsageError("the transition route needs --equator");
        emit(out, to_json(transition_winding(f, cycle)));
      }
    } else if (*check) {
      const ConsistencyReport report = check_consistency(load_field(field_path));
      emit(out, to_json(report));
      return report.ok() ? kOk : kValidationFailure;
    } else if (*gauge) {
      const HLGF f = load_field(field_path);
      emit(out, to_json(gauge_transform(f, gauge_from_json(read_json(assignment), f.backend()))));
    } else if (*eval) {
      const HLGF f = load_field(field_path);
      emit(out, to_json(evaluate(f, parse_word(expr, f.complex()))));
    } else if (*randomize) {
      emit(out, to_json(random_field(load_complex(complex_arg), parse_backend(group), seed)));
    } else if (*classify) {
      try {
        emit(out, to_json(classify_bundle(load_field(field_path))));
      } catch (const ClassificationRefused& e) {
        Json report = to_json(e.report());
        report["error"] = e.what();
        throw ReportedFailure(report);
      }
    }
    return kOk;
  } catch (const ReportedFailure& e) {
    emit(out, e.report());
    err << "hlgf: " << e.report().value("error", "validation failure") << '\n';
    return kValidationFailure;
  } catch (const LiftAmbiguityError& e) {
    err << "hlgf: " << e.what() << '\n';
    return kNumericGuard;
  } catch (const ValidationError& e) {
    emit(out, Json{{"ok", false}, {"violations", Json::array()}, {"error", e.what()}});
    err << "hlgf: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const EndpointMismatch& e) {
    emit(out, Json{{"ok", false}, {"violations", Json::array()}, {"error", e.what()}});
    err << "hlgf: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "hlgf: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace hlgf::cli
