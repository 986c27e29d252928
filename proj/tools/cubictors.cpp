#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cubictors/errors.hpp"
#include "cubictors/suite.hpp"

using namespace cubictors;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kInvalid = 3, kSingular = 4, kUndecided = 5 };

struct Global {
  long bits = 128;
  long max_bits = 1024;
  int jobs = 1;
  bool timings = false;
  std::string out_dir;
};

VerifyOptions verify_options(const Global& g) {
  VerifyOptions v;
  v.roots.bits = g.bits;
  v.roots.max_bits = std::max(g.bits, g.max_bits);
  v.timings = g.timings;
  return v;
}

/// Prints to stdout, or writes <dir>/<name>.json when an output directory is configured.
void emit(const Global& g, const std::string& name, const ordered_json& j) {
  std::string dir = g.out_dir;
  if (dir.empty())
    if (const char* env = std::getenv("CUBICTORS_OUTPUT_DIR")) dir = env;
  if (dir.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / (name + ".json");
  std::ofstream(path) << j.dump(2) << "\n";
  std::cout << path.string() << "\n";
}

nlohmann::json read_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InvalidInput("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) return nlohmann::json(text);  // bare polynomial such as x^3+2x^2-x-1
  return j;
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw InvalidInput("bad rational '" + text + "': " + e.what());
  }
}

std::vector<std::optional<Rational>> parse_params(const std::string& list) {
  std::vector<std::optional<Rational>> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.emplace_back(parse_rational(item));
  if (out.empty()) throw InvalidInput("empty parameter list");
  return out;
}

/// a:b[:step], endpoints included.
std::vector<std::optional<Rational>> parse_range(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 2 || parts.size() > 3) throw InvalidInput("range must be a:b or a:b:step");
  const Rational a = parse_rational(parts[0]), b = parse_rational(parts[1]);
  const Rational step = parts.size() == 3 ? parse_rational(parts[2]) : Rational(1);
  if (step.sign() <= 0) throw InvalidInput("range step must be positive");
  std::vector<std::optional<Rational>> out;
  for (Rational u = a; u <= b; u += step) {
    out.emplace_back(u);
    if (out.size() > 100000) throw InvalidInput("range too long");
  }
  return out;
}

FamilyId family_arg(const std::string& label) {
  auto id = parse_family(label);
  if (!id) {
    std::string known;
    for (FamilyId f : all_families()) known += " " + to_string(f);
    throw CLI::ValidationError("family", "unknown family " + label + "; expected one of" + known);
  }
  return *id;
}

int cmd_verify_family(const Global& g, const std::string& label, const std::string& params, const std::string& range) {
  const FamilyId id = family_arg(label);
  std::vector<std::optional<Rational>> ps;
  if (is_fixed(id)) {
    if (!params.empty() || !range.empty()) throw InvalidInput(label + " takes no parameter");
    ps = {std::nullopt};
  } else if (!params.empty()) {
    ps = parse_params(params);
  } else if (!range.empty()) {
    ps = parse_range(range);
  } else {
    ps = default_parameters(id);
  }
  const auto reports = verify_sweep(id, ps, verify_options(g), g.jobs);
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, g.timings));
  const Counts c = count(reports);
  ordered_json j;
  j["family"] = label;
  j["reports"] = arr;
  j["summary"] = to_json(c);
  emit(g, "verify-family-" + label, j);
  std::cerr << label << ": " << c.verified << " VERIFIED, " << c.excluded << " EXCLUDED, " << c.undecided
            << " UNDECIDED, " << c.violation << " VIOLATION\n";
  return c.violation > 0 ? kViolation : kOk;
}

int cmd_torsion(const Global& g, const std::string& curve_arg, const std::string& field_arg) {
  const EllipticCurve E = curve_from_json(read_json_arg(curve_arg));
  const Field K = field_arg.empty() ? nullptr : field_from_json(read_json_arg(field_arg));
  const VerifyOptions v = verify_options(g);
  const TorsionData td = torsion_points(E, K, v.roots);
  ordered_json pts = ordered_json::array();
  for (const auto& P : td.points) pts.push_back(to_json(P));
  ordered_json j;
  j["curve"] = to_json(E);
  j["field"] = field_json(K);
  j["torsion"] = td.group.to_string();
  j["order"] = td.group.order();
  j["points"] = pts;
  j["in_list"] = K ? in_najman_list(td.group) : in_mazur_list(td.group);
  emit(g, "torsion", j);
  return kOk;
}

int cmd_classify(const Global& g, const std::string& field_arg) {
  const Field K = field_from_json(read_json_arg(field_arg));
  if (!K) throw InvalidInput("classify needs a cubic field");
  const FieldClass c = classify(*K);
  ordered_json emb = ordered_json::array();
  for (const auto& z : embeddings(*K, g.bits)) emb.push_back({z.re.to_string(15), z.im.to_string(15)});
  ordered_json j;
  j["field"] = field_json(K);
  j["galois_type"] = to_string(c.galois_type);
  j["pure_candidate"] = c.pure_candidate;
  j["embeddings"] = emb;
  emit(g, "classify", j);
  return kOk;
}

int cmd_obstruction(const Global& g, const std::string& label, long height) {
  const FamilyId id = family_arg(label);
  const ObstructionReport r = run_obstruction(id, height, g.jobs);
  emit(g, "obstruction-" + label, to_json(r));
  return r.ok() ? kOk : kViolation;
}

int cmd_seed_suite(const Global& g, const std::string& only) {
  SuiteOptions opts;
  opts.verify = verify_options(g);
  opts.jobs = g.jobs;
  std::vector<int> ids;
  if (only.empty()) {
    for (const auto& c : acceptance_criteria()) ids.push_back(c.id);
  } else {
    std::stringstream ss(only);
    std::string item;
    while (std::getline(ss, item, ',')) ids.push_back(std::stoi(item));
  }
  ordered_json arr = ordered_json::array();
  int failed = 0;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, opts);
    if (!r.passed) ++failed;
    std::cerr << (r.passed ? "PASS" : "FAIL") << " [" << id << "] " << r.criterion.title << "\n";
    arr.push_back(to_json(r, g.timings));
  }
  ordered_json j;
  j["criteria"] = arr;
  j["passed"] = static_cast<int>(ids.size()) - failed;
  j["failed"] = failed;
  emit(g, "seed-suite", j);
  return failed > 0 ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of torsion families of rational elliptic curves over cubic fields"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--bits", g.bits, "starting precision for numeric embeddings")->check(CLI::Range(32L, 1L << 16));
  app.add_option("--max-bits", g.max_bits, "precision cap before giving up as UNDECIDED")
      ->check(CLI::Range(32L, 1L << 16));
  app.add_option("--jobs", g.jobs, "parameters verified in parallel")->check(CLI::Range(1, 256));
  app.add_flag("--timings", g.timings, "include wall-clock seconds in reports");
  app.add_option("--out", g.out_dir, "write JSON reports into this directory (env CUBICTORS_OUTPUT_DIR)");

  std::string label, params, range, curve, field, only;
  long height = 100;
  int rc = kOk;

  auto* vf = app.add_subcommand("verify-family", "construct family members and verify torsion and field type");
  vf->add_option("family", label, "F13, F14_ISOG, F14_KUBERT7, F18_CYCLIC, F18_KUBERT9, F2x14, FIXED_49A3, FIXED_49A4")
      ->required();
  auto* p_opt = vf->add_option("--params", params, "comma-separated rationals, e.g. 2,3,1/2");
  vf->add_option("--range", range, "a:b[:step] with rational endpoints")->excludes(p_opt);
  vf->callback([&] { rc = cmd_verify_family(g, label, params, range); });

  auto* tor = app.add_subcommand("torsion", "torsion subgroup of a rational curve over Q or a cubic field");
  tor->add_option("--curve", curve, "JSON {\"a\": [a1,a2,a3,a4,a6]} or {\"A\":..,\"B\":..}, or @file")->required();
  tor->add_option("--field", field, "JSON {\"minpoly\": \"x^3+...\"} or a bare polynomial, or @file");
  tor->callback([&] { rc = cmd_torsion(g, curve, field); });

  auto* cls = app.add_subcommand("classify", "Galois type and pure-cubic test of a cubic field");
  cls->add_option("field", field, "JSON {\"minpoly\": ...}, a bare polynomial, or @file")->required();
  cls->callback([&] { rc = cmd_classify(g, field); });

  auto* obs = app.add_subcommand("obstruction", "pure-cubic obstruction curve and height-bounded point search");
  obs->add_option("family", label, "F14_KUBERT7 or F18_KUBERT9")->required();
  obs->add_option("--height", height, "height bound H")->check(CLI::Range(1L, 100000L));
  obs->callback([&] { rc = cmd_obstruction(g, label, height); });

  auto* suite = app.add_subcommand("seed-suite", "run the acceptance criteria with their default parameters");
  suite->add_option("--criteria", only, "comma-separated subset, e.g. 1,4,10");
  suite->callback([&] { rc = cmd_seed_suite(g, only); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const SingularCurve& e) {
    std::cerr << "singular curve: " << e.what() << "\n";
    return kSingular;
  } catch (const Undecided& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const Excluded& e) {
    std::cerr << "excluded: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return rc;
}
