// Command-line front end: family, verify, design, construct, pa.
// Exit codes: 0 success, 1 verification or theorem failure, 2 usage/input error.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "acfu/construct.hpp"
#include "acfu/designs.hpp"
#include "acfu/error.hpp"
#include "acfu/io.hpp"
#include "acfu/kernels.hpp"
#include "acfu/privacy.hpp"
#include "acfu/verify.hpp"

namespace {

using acfu::io::ordered_json;

struct Globals {
  std::string output;
  std::string format = "json";
  std::size_t budget = acfu::kDefaultTableBudget;
  std::uint64_t rng_seed = 20240501;
  int jobs = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::map<std::string, std::uint32_t> key_values(const std::vector<std::string>& args,
                                                std::initializer_list<const char*> required) {
  std::map<std::string, std::uint32_t> kv;
  for (const auto& a : args) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value, got '" + a + "'");
    try {
      kv[a.substr(0, eq)] = static_cast<std::uint32_t>(std::stoul(a.substr(eq + 1)));
    } catch (const std::exception&) {
      throw UsageError("not a number in '" + a + "'");
    }
  }
  for (const char* key : required) {
    if (!kv.count(key)) throw UsageError(std::string("missing ") + key + "=");
  }
  return kv;
}

// Human view derived from the structured output: one "path: value" per leaf.
void flatten(const ordered_json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && j.front().is_structured()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    std::string value = j.is_string() ? j.get<std::string>() : j.dump();
    if (j.is_array()) {
      value.clear();
      for (std::size_t i = 0; i < j.size(); ++i) {
        value += (i ? " " : "") + (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
    }
    out << prefix << ": " << value << "\n";
  }
}

std::string render(const ordered_json& j, const Globals& g) {
  if (g.format == "table") {
    std::ostringstream out;
    flatten(j, "", out);
    return out.str();
  }
  return acfu::io::dump(j);
}

void emit(const ordered_json& report, const Globals& g) { std::cout << render(report, g); }

ordered_json summary(const acfu::HashFamily& f) {
  ordered_json j;
  j["descriptor"] = f.descriptor();
  j["x_size"] = f.x_size();
  j["s_size"] = f.s_size();
  j["a_size"] = f.a_size();
  if (!f.annotations().empty()) j["annotations"] = f.annotations();
  return j;
}

// ---- family -----------------------------------------------------------------

struct FamilyArgs {
  std::vector<std::string> affine, dual_affine, hyperplane, transversal, toeplitz, field_multiply;
  std::vector<std::uint32_t> h_subset;
  bool full_h = false;
  bool infinity = false;
  bool exclude_zero = false;
};

acfu::FamilyDescriptor descriptor_of(const FamilyArgs& a) {
  int chosen = !a.affine.empty() + !a.dual_affine.empty() + !a.hyperplane.empty() + !a.transversal.empty() +
               !a.toeplitz.empty() + !a.field_multiply.empty();
  if (chosen != 1) throw UsageError("choose exactly one family");
  if (!a.affine.empty()) {
    auto kv = key_values(a.affine, {"q", "t"});
    return acfu::AffineSpec{kv["q"], kv["t"]};
  }
  if (!a.dual_affine.empty()) {
    auto kv = key_values(a.dual_affine, {"q", "t"});
    return acfu::DualAffineSpec{kv["q"], kv["t"]};
  }
  if (!a.hyperplane.empty()) {
    auto kv = key_values(a.hyperplane, {"q", "t"});
    return acfu::HyperplaneSpec{kv["q"], kv["t"]};
  }
  if (!a.transversal.empty()) {
    auto kv = key_values(a.transversal, {"q"});
    std::vector<std::uint32_t> h = a.h_subset;
    if (a.full_h) {
      h.clear();
      for (std::uint32_t i = 0; i < kv["q"]; ++i) h.push_back(i);
    }
    if (h.empty()) throw UsageError("transversal needs --H or --full-H");
    return acfu::TransversalSpec{kv["q"], h, a.infinity};
  }
  if (!a.toeplitz.empty()) {
    auto kv = key_values(a.toeplitz, {"q", "m", "n"});
    return acfu::ToeplitzSpec{kv["q"], kv["m"], kv["n"]};
  }
  auto kv = key_values(a.field_multiply, {"q", "n", "m"});
  return acfu::FieldMultiplySpec{kv["q"], kv["n"], kv["m"], a.exclude_zero};
}

int run_family(const FamilyArgs& a, const Globals& g) {
  const auto f = acfu::build_named(descriptor_of(a));
  const auto artifact = acfu::io::family_to_json(f, g.budget);
  if (g.output.empty()) {
    std::cout << acfu::io::dump(artifact);
  } else {
    acfu::io::write_file(g.output, acfu::io::dump(artifact));
    emit(summary(f), g);
  }
  return 0;
}

// ---- verify -----------------------------------------------------------------

int run_verify(const std::string& path, const Globals& g) {
  const auto f = acfu::io::family_from_json(acfu::io::read_file(path));
  const auto report = acfu::io::to_json(acfu::classify(f, g.budget), f);
  if (!g.output.empty()) acfu::io::write_file(g.output, acfu::io::dump(report));
  emit(report, g);
  return 0;
}

// ---- design -----------------------------------------------------------------

struct DesignArgs {
  std::string path;
  bool dual = false;
  bool sum = false;
  bool resolve = false;
  bool theorems = false;
};

int run_design(const DesignArgs& a, const Globals& g) {
  const auto input = acfu::io::read_file(a.path);
  std::optional<acfu::HashFamily> family;
  std::optional<acfu::Mosaic> mosaic;
  std::optional<acfu::IncidenceStructure> single;
  if (input.contains("x_labels")) {
    family = acfu::io::family_from_json(input);
    mosaic = acfu::mosaic_from_function(*family, g.budget);
  } else if (input.contains("members")) {
    mosaic = acfu::io::mosaic_from_json(input);
    family = acfu::function_from_mosaic(*mosaic);
  } else {
    single = acfu::io::incidence_from_json(input);
  }

  ordered_json report;
  int status = 0;
  if (a.theorems) {
    if (!family) throw UsageError("--theorems needs a family or mosaic file");
    const auto t = acfu::check_structure_theorems(*family, g.budget);
    report["theorems"] = acfu::io::to_json(t);
    if (!t.all_hold()) status = 1;
  }

  bool transformed = false;
  if (a.dual) {
    transformed = true;
    if (mosaic) {
      mosaic = acfu::dual_mosaic(*mosaic);
    } else {
      single = acfu::transpose(*single);
    }
  }
  if (a.sum) {
    if (!mosaic) throw UsageError("--sum needs a family or mosaic file");
    transformed = true;
    single = acfu::sum_mosaic(*mosaic);
    mosaic.reset();
  }
  if (transformed && !g.output.empty()) {
    acfu::io::write_file(g.output,
                         acfu::io::dump(mosaic ? acfu::io::mosaic_to_json(*mosaic) : acfu::io::incidence_to_json(*single)));
  }

  if (a.resolve) {
    std::vector<const acfu::IncidenceStructure*> targets;
    if (single) {
      targets.push_back(&*single);
    } else {
      for (const auto& m : mosaic->members) targets.push_back(&m);
    }
    ordered_json res = ordered_json::array();
    for (const auto* d : targets) {
      const auto r = acfu::find_resolution(*d, acfu::kDefaultSearchBudget);
      res.push_back(acfu::io::to_json(r, *d));
    }
    report["resolution"] = single ? res.front() : res;
  }

  if (single) {
    report["structure"] = acfu::io::to_json(acfu::analyze_structure(*single), *single);
  } else {
    ordered_json members = ordered_json::array();
    for (std::size_t i = 0; i < mosaic->members.size(); ++i) {
      ordered_json m;
      m["value"] = mosaic->a_labels[i];
      m["design"] = acfu::io::to_json(acfu::analyze_structure(mosaic->members[i]), mosaic->members[i]);
      members.push_back(std::move(m));
    }
    report["members"] = std::move(members);
  }
  emit(report, g);
  return status;
}

// ---- construct --------------------------------------------------------------

struct ConstructArgs {
  std::string seed_ext, point_ext, double_ext, lift;
  std::vector<std::string> concat;
  bool cyclic = false;
  bool group = false;
  bool random_latin = false;
  std::string latin;
  std::string eps;
};

acfu::Quasigroup quasigroup_for(const acfu::HashFamily& g, const ConstructArgs& a, const Globals& gl) {
  const int chosen = a.cyclic + a.group + a.random_latin + !a.latin.empty();
  if (chosen > 1) throw UsageError("choose at most one quasigroup");
  if (!a.latin.empty()) return acfu::io::quasigroup_from_json(acfu::io::read_file(a.latin));
  if (a.group) {
    if (!g.a_group()) throw UsageError("--group needs a value group in the family file");
    return acfu::Quasigroup::from_group(*g.a_group(), g.a_labels());
  }
  if (a.random_latin) {
    std::mt19937_64 rng(gl.rng_seed);
    return acfu::Quasigroup::random(g.a_labels(), rng);
  }
  return acfu::Quasigroup::cyclic(g.a_labels());
}

int run_construct(const ConstructArgs& a, const Globals& g) {
  const int chosen = !a.seed_ext.empty() + !a.point_ext.empty() + !a.concat.empty() + !a.double_ext.empty() +
                     !a.lift.empty();
  if (chosen != 1) throw UsageError("choose exactly one construction");
  auto load = [](const std::string& p) { return acfu::io::family_from_json(acfu::io::read_file(p)); };
  std::optional<acfu::Rational> eps;
  if (!a.eps.empty()) eps = acfu::parse_rational(a.eps);

  std::optional<acfu::HashFamily> result;
  if (!a.seed_ext.empty()) {
    const auto in = load(a.seed_ext);
    result = acfu::seed_extension(in, quasigroup_for(in, a, g));
  } else if (!a.point_ext.empty()) {
    const auto in = load(a.point_ext);
    result = acfu::point_extension(in, quasigroup_for(in, a, g));
  } else if (!a.concat.empty()) {
    if (a.concat.size() != 2) throw UsageError("--concat takes two family files");
    result = acfu::concatenate(load(a.concat[0]), load(a.concat[1]));
  } else if (!a.double_ext.empty()) {
    result = acfu::double_extension(load(a.double_ext), eps).family;
  } else {
    result = acfu::krawczyk_lift(load(a.lift), eps).family;
  }
  const auto artifact = acfu::io::family_to_json(*result, g.budget);
  if (g.output.empty()) {
    std::cout << acfu::io::dump(artifact);
  } else {
    acfu::io::write_file(g.output, acfu::io::dump(artifact));
    emit(summary(*result), g);
  }
  return 0;
}

// ---- pa ---------------------------------------------------------------------

struct PaArgs {
  std::string source;
  std::vector<std::string> families;
  std::uint32_t iid = 0;
  bool by_index = false;
};

int run_pa(const PaArgs& a, const Globals& g) {
  const auto base = acfu::io::source_from_json(acfu::io::read_file(a.source));
  for (const auto& w : base.warnings) std::cerr << "warning: " << w << "\n";
  ordered_json rows = ordered_json::array();
  for (const auto& path : a.families) {
    auto f = acfu::io::family_from_json(acfu::io::read_file(path));
    std::uint32_t n = a.iid;
    if (n == 0) {
      // smallest n with |X_source|^n = |X_family|
      std::size_t size = base.x_size();
      n = 1;
      while (size < f.x_size() && base.x_size() > 1) {
        size *= base.x_size();
        ++n;
      }
      if (size != f.x_size()) throw UsageError(path + ": |X| is not a power of the source alphabet size");
    }
    auto src = acfu::iid_extend(base, n, g.budget);
    if (a.by_index && src.x_size() == f.x_size()) src.x_labels = f.x_labels();
    const auto r = acfu::run_pa(src, f, g.budget);
    auto row = acfu::io::to_json(r);
    ordered_json entry;
    entry["family"] = f.descriptor();
    entry["n"] = n;
    for (const auto& [k, v] : row.items()) entry[k] = v;
    rows.push_back(std::move(entry));
  }
  ordered_json report;
  report["results"] = std::move(rows);
  if (!g.output.empty()) acfu::io::write_file(g.output, acfu::io::dump(report));
  emit(report, g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal hash families, block designs and privacy amplification"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("-o,--output", g.output, "Output file");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--budget", g.budget, "Maximum |X||S| for tabulation")->check(CLI::PositiveNumber);
  app.add_option("--rng-seed", g.rng_seed, "Seed for random constructions");
  app.add_option("--jobs", g.jobs, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);

  FamilyArgs fa;
  auto* family = app.add_subcommand("family", "Build a closed-form family and write its table");
  family->add_option("--affine", fa.affine, "q=.. t=..")->expected(2);
  family->add_option("--dual-affine", fa.dual_affine, "q=.. t=..")->expected(2);
  family->add_option("--hyperplane", fa.hyperplane, "q=.. t=..")->expected(2);
  family->add_option("--transversal", fa.transversal, "q=..")->expected(1);
  family->add_option("--toeplitz", fa.toeplitz, "q=.. m=.. n=..")->expected(3);
  family->add_option("--field-multiply", fa.field_multiply, "q=.. n=.. m=..")->expected(3);
  family->add_option("--H", fa.h_subset, "Field element indices forming H")->delimiter(',');
  family->add_flag("--full-H", fa.full_h, "H = F_q");
  family->add_flag("--infinity", fa.infinity, "Add the infinity point class");
  family->add_flag("--exclude-zero", fa.exclude_zero, "Drop the zero seed");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Minimal epsilons, seed bounds and equality flags");
  verify->add_option("family", verify_path, "Family file")->required();

  DesignArgs da;
  auto* design = app.add_subcommand("design", "Incidence-structure analysis");
  design->add_option("input", da.path, "Family, mosaic or incidence file")->required();
  design->add_flag("--dual", da.dual, "Transpose the members");
  design->add_flag("--sum", da.sum, "Sum of the mosaic");
  design->add_flag("--resolve", da.resolve, "Search for a resolution");
  design->add_flag("--theorems", da.theorems, "Check the structure theorems");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Extensions, concatenation and lifts");
  construct->add_option("--seed-ext", ca.seed_ext, "Family file");
  construct->add_option("--point-ext", ca.point_ext, "Family file");
  construct->add_option("--concat", ca.concat, "Two family files")->expected(2);
  construct->add_option("--double-ext", ca.double_ext, "Balanced family file");
  construct->add_option("--lift", ca.lift, "Homomorphic balanced family file");
  construct->add_flag("--cyclic", ca.cyclic, "Cyclic group on the value labels (default)");
  construct->add_flag("--group", ca.group, "The family's value group");
  construct->add_flag("--random-latin", ca.random_latin, "Random latin square (see --rng-seed)");
  construct->add_option("--latin", ca.latin, "Latin square file");
  construct->add_option("--eps", ca.eps, "Balancedness to assume, as n/d");

  PaArgs pa;
  auto* pa_cmd = app.add_subcommand("pa", "Exact privacy amplification");
  pa_cmd->add_option("source", pa.source, "Source file")->required();
  pa_cmd->add_option("families", pa.families, "Family files")->required();
  pa_cmd->add_option("--iid", pa.iid, "Repetitions of the source (default: matched to |X|)");
  pa_cmd->add_flag("--by-index", pa.by_index, "Match source points to family points by position");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  acfu::kernels::set_thread_count(g.jobs);

  try {
    if (family->parsed()) return run_family(fa, g);
    if (verify->parsed()) return run_verify(verify_path, g);
    if (design->parsed()) return run_design(da, g);
    if (construct->parsed()) return run_construct(ca, g);
    if (pa_cmd->parsed()) return run_pa(pa, g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const acfu::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == acfu::ErrorCode::TheoremViolation ? 1 : 2;
  }
  return 2;
}
