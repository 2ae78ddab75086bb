#include "acfu/io.hpp"

#include <fstream>
#include <sstream>

#include "acfu/error.hpp"

namespace acfu::io {
namespace {

bool scalar_array(const ordered_json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

void write(std::ostringstream& out, const ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out << ",\n";
      first = false;
      out << inner << ordered_json(key).dump() << ": ";
      write(out, value, indent + 1);
    }
    out << "\n" << pad << "}";
  } else if (j.is_array() && !j.empty() && !scalar_array(j)) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out << ",\n";
      out << inner;
      write(out, j[i], indent + 1);
    }
    out << "\n" << pad << "]";
  } else if (j.is_array()) {
    out << "[";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
    out << "]";
  } else {
    out << j.dump();
  }
}

template <typename T>
T field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

std::optional<AbelianGroup> group_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return AbelianGroup{field<std::vector<std::uint32_t>>(j, key)};
}

ordered_json labels_of(const std::vector<std::uint32_t>& idx, const std::vector<const std::vector<std::string>*>& sets) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < idx.size() && i < sets.size(); ++i) out.push_back((*sets[i])[idx[i]]);
  return out;
}

ordered_json optional_rational(const std::optional<Rational>& r) { return r ? rational_json(*r) : ordered_json(); }

ordered_json optional_count(const std::optional<std::uint64_t>& v) { return v ? ordered_json(*v) : ordered_json(); }

}  // namespace

std::string dump(const ordered_json& j) {
  std::ostringstream out;
  write(out, j, 0);
  out << "\n";
  return out.str();
}

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

ordered_json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

ordered_json family_to_json(const HashFamily& f, std::size_t budget) {
  const auto t = to_table(f, budget);
  ordered_json j;
  j["descriptor"] = f.descriptor();
  j["x_labels"] = f.x_labels();
  j["s_labels"] = f.s_labels();
  j["a_labels"] = f.a_labels();
  if (f.x_group()) j["x_group"] = f.x_group()->moduli;
  if (f.a_group()) j["a_group"] = f.a_group()->moduli;
  if (!f.annotations().empty()) j["annotations"] = f.annotations();
  ordered_json rows = ordered_json::array();
  for (std::size_t x = 0; x < t.x_size; ++x) {
    rows.push_back(std::vector<std::uint32_t>(t.entries.begin() + static_cast<std::ptrdiff_t>(x * t.s_size),
                                              t.entries.begin() + static_cast<std::ptrdiff_t>((x + 1) * t.s_size)));
  }
  j["rows"] = std::move(rows);
  return j;
}

HashFamily family_from_json(const ordered_json& j) {
  auto x = field<std::vector<std::string>>(j, "x_labels");
  auto s = field<std::vector<std::string>>(j, "s_labels");
  auto a = field<std::vector<std::string>>(j, "a_labels");
  const auto rows = field<std::vector<std::vector<std::uint32_t>>>(j, "rows");
  FunctionTable t{x.size(), s.size(), {}};
  if (rows.size() != x.size()) throw Error(ErrorCode::ParseError, "row count differs from |X|");
  for (const auto& row : rows) {
    if (row.size() != s.size()) throw Error(ErrorCode::ParseError, "row length differs from |S|");
    t.entries.insert(t.entries.end(), row.begin(), row.end());
  }
  const std::string descriptor = j.contains("descriptor") ? field<std::string>(j, "descriptor") : "table";
  auto f = HashFamily::from_table(std::move(x), std::move(s), std::move(a), std::move(t), descriptor);
  f.with_groups(group_field(j, "x_group"), group_field(j, "a_group"));
  if (j.contains("annotations")) {
    for (auto& note : field<std::vector<std::string>>(j, "annotations")) f.annotate(std::move(note));
  }
  return f;
}

ordered_json incidence_to_json(const IncidenceStructure& d) {
  ordered_json j;
  j["points"] = d.points;
  j["block_indices"] = d.blocks;
  ordered_json rows = ordered_json::array();
  for (std::size_t x = 0; x < d.v(); ++x) {
    std::vector<int> row(d.b());
    for (std::size_t s = 0; s < d.b(); ++s) row[s] = d.matrix.at(x, s);
    rows.push_back(row);
  }
  j["rows"] = std::move(rows);
  return j;
}

IncidenceStructure incidence_from_json(const ordered_json& j) {
  try {
    return IncidenceStructure::from_rows(field<std::vector<std::string>>(j, "points"),
                                         field<std::vector<std::string>>(j, "block_indices"),
                                         field<std::vector<std::vector<int>>>(j, "rows"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
}

ordered_json mosaic_to_json(const Mosaic& m) {
  ordered_json j;
  j["a_labels"] = m.a_labels;
  ordered_json members = ordered_json::array();
  for (const auto& d : m.members) members.push_back(incidence_to_json(d));
  j["members"] = std::move(members);
  return j;
}

Mosaic mosaic_from_json(const ordered_json& j) {
  Mosaic m;
  if (!j.contains("members") || !j.at("members").is_array()) throw Error(ErrorCode::ParseError, "missing 'members'");
  for (const auto& d : j.at("members")) m.members.push_back(incidence_from_json(d));
  m.a_labels = j.contains("a_labels") ? field<std::vector<std::string>>(j, "a_labels") : index_labels(m.members.size());
  validate_mosaic(m);
  return m;
}

ordered_json quasigroup_to_json(const Quasigroup& q) {
  ordered_json j;
  j["labels"] = q.labels();
  ordered_json rows = ordered_json::array();
  for (const auto& row : q.table()) {
    std::vector<std::string> r;
    for (auto v : row) r.push_back(q.labels()[v]);
    rows.push_back(r);
  }
  j["rows"] = std::move(rows);
  return j;
}

Quasigroup quasigroup_from_json(const ordered_json& j) {
  const auto rows = field<std::vector<std::vector<std::string>>>(j, "rows");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = field<std::vector<std::string>>(j, "labels");
  } else {
    if (rows.empty()) throw Error(ErrorCode::ParseError, "empty latin square");
    labels = rows.front();  // the first row lists the carrier
  }
  std::vector<std::vector<std::uint32_t>> table;
  for (const auto& row : rows) {
    std::vector<std::uint32_t> r;
    for (const auto& label : row) {
      const auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) throw Error(ErrorCode::NotLatinSquare, "symbol '" + label + "' not in the carrier");
      r.push_back(static_cast<std::uint32_t>(it - labels.begin()));
    }
    table.push_back(std::move(r));
  }
  return Quasigroup::from_table(std::move(table), std::move(labels));
}

ordered_json source_to_json(const JointSource& src) {
  ordered_json j;
  j["x_labels"] = src.x_labels;
  j["z_labels"] = src.z_labels;
  ordered_json rows = ordered_json::array();
  for (std::size_t x = 0; x < src.x_size(); ++x) {
    std::vector<std::string> row;
    for (std::size_t z = 0; z < src.z_size(); ++z) row.push_back(to_fraction_string(src.at(x, z)));
    rows.push_back(row);
  }
  j["probabilities"] = std::move(rows);
  return j;
}

JointSource source_from_json(const ordered_json& j) {
  auto x = field<std::vector<std::string>>(j, "x_labels");
  auto z = field<std::vector<std::string>>(j, "z_labels");
  const auto rows = field<std::vector<std::vector<std::string>>>(j, "probabilities");
  if (rows.size() != x.size()) throw Error(ErrorCode::ParseError, "probability rows differ from |X|");
  std::vector<Rational> p;
  for (const auto& row : rows) {
    if (row.size() != z.size()) throw Error(ErrorCode::ParseError, "probability row length differs from |Z|");
    for (const auto& cell : row) p.push_back(parse_rational(cell));
  }
  try {
    return make_source(std::move(x), std::move(z), std::move(p));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

ordered_json rational_json(const Rational& r) { return to_fraction_string(r); }

ordered_json to_json(const EpsilonResult& e, const std::vector<const std::vector<std::string>*>& witness_labels) {
  ordered_json j;
  j["eps"] = rational_json(e.eps);
  j["max_count"] = e.max_count;
  j["witness"] = e.witness ? labels_of(*e.witness, witness_labels) : ordered_json();
  return j;
}

ordered_json to_json(const BoundEqualities& e) {
  ordered_json j;
  j["variance"] = e.variance;
  j["simple"] = e.simple;
  j["ocfu"] = e.ocfu;
  j["au"] = e.au;
  j["asu_variance"] = e.asu_variance;
  j["asu_simple"] = e.asu_simple;
  return j;
}

ordered_json to_json(const BoundReport& b) {
  ordered_json j;
  j["x_size"] = b.x_size;
  j["a_size"] = b.a_size;
  j["eps"] = rational_json(b.eps);
  j["optimal_eps"] = rational_json(b.optimal_eps);
  j["lb_variance"] = optional_rational(b.lb_variance);
  j["lb_simple"] = optional_rational(b.lb_simple);
  j["lb_ocfu"] = optional_rational(b.lb_ocfu);
  j["lb_au"] = optional_rational(b.lb_au);
  j["lb_asu_variance"] = optional_rational(b.lb_asu_variance);
  j["lb_asu_simple"] = optional_rational(b.lb_asu_simple);
  j["variance_threshold"] = rational_json(b.variance_threshold);
  j["variance_applies"] = b.variance_applies;
  j["variance_regime_nonempty"] = b.variance_regime_nonempty;
  j["asu_crossover"] = rational_json(b.asu_crossover);
  j["asu_simple_dominates"] = b.asu_simple_dominates;
  j["notes"] = b.notes;
  return j;
}

ordered_json to_json(const VerificationReport& r, const HashFamily& f) {
  const auto* X = &f.x_labels();
  const auto* A = &f.a_labels();
  ordered_json j;
  j["descriptor"] = f.descriptor();
  j["x_size"] = r.x_size;
  j["s_size"] = r.s_size;
  j["a_size"] = r.a_size;
  j["regular"] = r.regular;
  j["block_size"] = optional_count(r.block_size);
  j["au"] = to_json(r.eps_au, {X, X});
  j["acfu"] = r.eps_acfu ? to_json(*r.eps_acfu, {X, X, A}) : ordered_json("NotRegular");
  j["asu"] = r.eps_asu ? to_json(*r.eps_asu, {X, X, A, A}) : ordered_json("NotRegular");
  j["balanced"] = r.eps_balanced ? to_json(*r.eps_balanced, {X, A}) : ordered_json(r.balanced_status);
  j["nontrivial"] = r.nontrivial;
  j["optimal_eps"] = optional_rational(r.optimal_eps);
  j["ocfu"] = r.ocfu;
  j["ou"] = r.ou;
  j["bounds_at_eps_acfu"] = r.bounds_acfu ? to_json(*r.bounds_acfu) : ordered_json();
  j["bounds_at_eps_au"] = r.bounds_au ? to_json(*r.bounds_au) : ordered_json();
  j["bounds_at_eps_asu"] = r.bounds_asu ? to_json(*r.bounds_asu) : ordered_json();
  j["seed_size_equalities"] = to_json(r.equal);
  return j;
}

ordered_json to_json(const DesignParams& p, const IncidenceStructure& d) {
  ordered_json j;
  j["v"] = p.v;
  j["b"] = p.b;
  j["k"] = optional_count(p.k);
  j["r"] = optional_count(p.r);
  j["lambda"] = optional_count(p.lambda);
  j["bibd"] = p.bibd;
  ordered_json pairs = ordered_json::object();
  for (const auto& [count, n] : p.pair_counts) pairs[std::to_string(count)] = n;
  j["pair_counts"] = std::move(pairs);
  j["intersection_numbers"] = std::vector<std::uint64_t>(p.intersection_numbers.begin(), p.intersection_numbers.end());
  j["quasi_symmetric"] = p.quasi_symmetric;
  j["symmetric"] = p.symmetric;
  j["bk_eq_vr"] = p.eq_bk_vr ? ordered_json(*p.eq_bk_vr) : ordered_json();
  j["lambda_relation"] = p.eq_lambda ? ordered_json(*p.eq_lambda) : ordered_json();
  j["b_eq_v_plus_r_minus_1"] = p.eq_affine_count ? ordered_json(*p.eq_affine_count) : ordered_json();
  if (p.point_classes) {
    ordered_json classes = ordered_json::array();
    for (const auto& cls : *p.point_classes) {
      std::vector<std::string> labels;
      for (auto x : cls) labels.push_back(d.points[x]);
      classes.push_back(labels);
    }
    j["point_classes"] = std::move(classes);
  } else {
    j["point_classes"] = nullptr;
  }
  return j;
}

ordered_json to_json(const Resolution& r, const IncidenceStructure& d) {
  ordered_json classes = ordered_json::array();
  for (const auto& cls : r.classes) {
    std::vector<std::string> labels;
    for (auto s : cls) labels.push_back(d.blocks[s]);
    classes.push_back(labels);
  }
  return classes;
}

ordered_json to_json(const ResolutionSearch& r, const IncidenceStructure& d) {
  ordered_json j;
  j["resolvable"] = r.resolution.has_value();
  j["classes"] = r.resolution ? to_json(*r.resolution, d) : ordered_json();
  j["reason"] = r.reason;
  j["nodes"] = r.nodes;
  return j;
}

ordered_json to_json(const TheoremReport& r) {
  ordered_json j;
  j["all_hold"] = r.all_hold();
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["holds"] = c.holds;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

ordered_json to_json(const PAResult& r) {
  ordered_json j;
  std::vector<std::string> marginal;
  for (const auto& v : r.joint.key_marginal) marginal.push_back(to_fraction_string(v));
  j["key_marginal"] = marginal;
  j["independent"] = r.joint.independent;
  if (r.joint.dependence_witness) {
    j["dependence_witness"] = {r.joint.z_labels[r.joint.dependence_witness->first],
                               r.joint.a_labels[r.joint.dependence_witness->second]};
  }
  j["renyi2_inner"] = rational_json(r.entropy.inner);
  j["renyi2_bits"] = format_real(r.entropy.bits);
  j["distance"] = rational_json(r.distance.l1);
  j["distance_real"] = format_real(r.distance.value);
  j["distance_witness"] = r.distance.witness
                              ? ordered_json({r.joint.a_labels[r.distance.witness->first],
                                              r.joint.a_labels[r.distance.witness->second]})
                              : ordered_json();
  j["regular"] = r.regular;
  j["eps_acfu"] = optional_rational(r.eps);
  if (r.bound) {
    j["radicand"] = rational_json(r.bound->radicand);
    j["bound"] = format_real(r.bound->value);
  } else {
    j["radicand"] = nullptr;
    j["bound"] = nullptr;
  }
  return j;
}

}  // namespace acfu::io
